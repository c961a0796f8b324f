#include "cycleideal/determinant.hpp"

#include <cstdint>
#include <functional>
#include <unordered_map>

namespace cycleideal {

SymbolicMatrix SymbolicMatrix::minor_without(int row, int col) const {
    SymbolicMatrix out(n_ - 1);
    for (int r = 0, ro = 0; r < n_; ++r) {
        if (r == row) continue;
        for (int c = 0, co = 0; c < n_; ++c) {
            if (c == col) continue;
            out.at(ro, co) = at(r, c);
            ++co;
        }
        ++ro;
    }
    return out;
}

SymbolicMatrix concentration_matrix(const ColoredPath& p) {
    SymbolicMatrix m(p.m);
    for (int v = 1; v <= p.m; ++v)
        m.at(v - 1, v - 1) = Polynomial::var(vertex_var(p.vcolor(v)));
    for (int k = 1; k < p.m; ++k) {
        Polynomial e = Polynomial::var(edge_var(p.ecolor(k)));
        m.at(k - 1, k) = e;
        m.at(k, k - 1) = e;
    }
    return m;
}

SymbolicMatrix concentration_matrix(const ColoredCycle& c) {
    SymbolicMatrix m(c.n);
    for (int v = 1; v <= c.n; ++v)
        m.at(v - 1, v - 1) = Polynomial::var(vertex_var(c.vcolor(v)));
    for (int k = 1; k <= c.n; ++k) {
        int a = k - 1;
        int b = k % c.n;
        Polynomial e = Polynomial::var(edge_var(c.ecolor(k)));
        m.at(a, b) = e;
        m.at(b, a) = e;
    }
    return m;
}

SymbolicMatrix concentration_matrix(const ColoredGraph& g) {
    SymbolicMatrix m(g.n);
    for (int v = 1; v <= g.n; ++v)
        m.at(v - 1, v - 1) = Polynomial::var(vertex_var(g.vcolor(v)));
    for (std::size_t k = 0; k < g.edges.size(); ++k) {
        auto [a, b] = g.edges[k];
        Polynomial e = Polynomial::var(edge_var(g.edge_colors[k]));
        m.at(a - 1, b - 1) = e;
        m.at(b - 1, a - 1) = e;
    }
    return m;
}

Polynomial det_symbolic(const SymbolicMatrix& m, int max_n) {
    int n = m.size();
    if (n > max_n)
        fail(Error::Code::TooLarge,
             "determinant of " + std::to_string(n) + "x" + std::to_string(n) +
                 " matrix exceeds the configured bound " + std::to_string(max_n));
    if (n == 0) return Polynomial::constant(1);

    std::unordered_map<std::uint32_t, Polynomial> memo;
    // Expands row `depth` of the original matrix against the columns still
    // present in `mask`; depth is implied by popcount(mask).
    std::function<const Polynomial&(std::uint32_t)> det = [&](std::uint32_t mask) -> const Polynomial& {
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int depth = n - __builtin_popcount(mask);
        Polynomial result;
        if (mask == 0) {
            result = Polynomial::constant(1);
        } else {
            int sign = 1;  // alternates over retained columns only
            for (int c = 0; c < n; ++c) {
                if (!(mask & (1u << c))) continue;
                if (!m.at(depth, c).is_zero())
                    result += Polynomial::constant(sign) * m.at(depth, c) * det(mask & ~(1u << c));
                sign = -sign;
            }
        }
        return memo.emplace(mask, std::move(result)).first->second;
    };
    return det((n == 32 ? 0xffffffffu : (1u << n) - 1));
}

Polynomial det_path_disjoint(const ColoredPath& p) {
    Polynomial out;
    int m = p.m;
    std::vector<int> taken;  // 1-based edge indices of the matching
    std::function<void(int)> go = [&](int k) {
        if (k > m - 1) {
            std::vector<std::pair<VariableId, int>> counts;
            std::vector<bool> covered(static_cast<std::size_t>(m) + 1, false);
            for (int e : taken) {
                counts.emplace_back(edge_var(p.ecolor(e)), 2);
                covered[e] = covered[e + 1] = true;
            }
            for (int v = 1; v <= m; ++v)
                if (!covered[v]) counts.emplace_back(vertex_var(p.vcolor(v)), 1);
            out.add_term(Monomial::from_counts(std::move(counts)),
                         BigInt(taken.size() % 2 == 0 ? 1 : -1));
            return;
        }
        go(k + 1);  // skip edge k
        taken.push_back(k);
        go(k + 2);  // take edge k, which blocks edge k+1
        taken.pop_back();
    };
    go(1);
    return out;
}

Polynomial det_path_recurrence(const ColoredPath& p) {
    Polynomial prev2 = Polynomial::constant(1);  // det(K_0)
    if (p.m == 0) return prev2;
    Polynomial prev1 = Polynomial::var(vertex_var(p.vcolor(1)));
    for (int k = 2; k <= p.m; ++k) {
        Polynomial e = Polynomial::var(edge_var(p.ecolor(k - 1)));
        Polynomial cur = Polynomial::var(vertex_var(p.vcolor(k))) * prev1 - e * e * prev2;
        prev2 = std::move(prev1);
        prev1 = std::move(cur);
    }
    return prev1;
}

Polynomial det_general(const ColoredGraph& g, int max_n) {
    if (g.n > max_n)
        fail(Error::Code::TooLarge, "graph on " + std::to_string(g.n) +
                                        " vertices exceeds the configured bound " +
                                        std::to_string(max_n));
    return det_symbolic(concentration_matrix(g), max_n);
}

ParityClass vertex_degree_parity(const Polynomial& p) {
    if (p.is_zero()) return ParityClass::Zero;
    bool odd = false, even = false;
    for (const auto& [m, c] : p.terms()) (m.vertex_degree() % 2 ? odd : even) = true;
    if (odd && even) return ParityClass::Mixed;
    return odd ? ParityClass::AllOdd : ParityClass::AllEven;
}

}  // namespace cycleideal
