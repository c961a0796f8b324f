#include "cycleideal/symmetry.hpp"

#include <algorithm>

namespace cycleideal {

namespace {

int mod1(int value, int n) {  // wraps into 1..n
    int r = value % n;
    return r <= 0 ? r + n : r;
}

int edge_index_between(int n, int a, int b) {
    if (a % n + 1 == b) return a;
    if (b % n + 1 == a) return b;
    fail(Error::Code::Internal, "not adjacent on the cycle");
}

}  // namespace

int DihedralElement::apply(int vertex, int n) const {
    if (kind == Kind::Rotation) return mod1(vertex + parameter, n);
    return mod1(parameter + 2 - vertex, n);
}

std::vector<DihedralElement> all_dihedral(int n) {
    std::vector<DihedralElement> out;
    out.reserve(2 * static_cast<std::size_t>(n));
    for (int r = 0; r < n; ++r) out.push_back({DihedralElement::Kind::Rotation, r});
    for (int r = 0; r < n; ++r) out.push_back({DihedralElement::Kind::Reflection, r});
    return out;
}

DihedralElement compose(const DihedralElement& a, const DihedralElement& b, int n) {
    using Kind = DihedralElement::Kind;
    auto norm = [n](int r) { return ((r % n) + n) % n; };
    if (a.kind == Kind::Rotation && b.kind == Kind::Rotation)
        return {Kind::Rotation, norm(a.parameter + b.parameter)};
    if (a.kind == Kind::Rotation && b.kind == Kind::Reflection)
        return {Kind::Reflection, norm(a.parameter + b.parameter)};
    if (a.kind == Kind::Reflection && b.kind == Kind::Rotation)
        return {Kind::Reflection, norm(a.parameter - b.parameter)};
    return {Kind::Rotation, norm(a.parameter - b.parameter)};
}

DihedralElement inverse(const DihedralElement& a, int n) {
    if (a.kind == DihedralElement::Kind::Reflection) return a;
    return {DihedralElement::Kind::Rotation, (n - a.parameter) % n};
}

std::string to_string(const DihedralElement& e) {
    return (e.kind == DihedralElement::Kind::Rotation ? "rot" : "refl") +
           std::string("(") + std::to_string(e.parameter) + ")";
}

IndexPair make_index_pair(int x, int y) {
    return {std::min(x, y), std::max(x, y)};
}

std::string to_string(const IndexPair& p) {
    return "sigma_{" + std::to_string(p.a) + "," + std::to_string(p.b) + "}";
}

LinearBinomial make_binomial(IndexPair p, IndexPair q) {
    if (p == q) fail(Error::Code::Internal, "binomial needs two distinct index pairs");
    if (q < p) std::swap(p, q);
    return {p, q};
}

std::string to_string(const LinearBinomial& b) {
    return to_string(b.first) + " - " + to_string(b.second);
}

bool is_symmetry(const ColoredCycle& c, const DihedralElement& s) {
    for (int v = 1; v <= c.n; ++v)
        if (c.vcolor(s.apply(v, c.n)) != c.vcolor(v)) return false;
    for (int k = 1; k <= c.n; ++k) {
        int a = s.apply(k, c.n);
        int b = s.apply(k % c.n + 1, c.n);
        if (c.ecolor(edge_index_between(c.n, a, b)) != c.ecolor(k)) return false;
    }
    return true;
}

std::vector<DihedralElement> symmetries(const ColoredCycle& c) {
    std::vector<DihedralElement> out;
    for (const DihedralElement& s : all_dihedral(c.n))
        if (is_symmetry(c, s)) out.push_back(s);
    return out;
}

std::set<LinearBinomial> induced_binomials(const ColoredCycle& c, const DihedralElement& s) {
    if (!is_symmetry(c, s))
        fail(Error::Code::NotASymmetry, to_string(s) + " does not preserve the coloring");
    std::set<LinearBinomial> out;
    for (int i = 1; i <= c.n; ++i)
        for (int j = i; j <= c.n; ++j) {
            IndexPair from = make_index_pair(i, j);
            IndexPair to = make_index_pair(s.apply(i, c.n), s.apply(j, c.n));
            if (from != to) out.insert(make_binomial(from, to));
        }
    return out;
}

bool explains(const ColoredCycle& c, const LinearBinomial& b) {
    for (const DihedralElement& s : symmetries(c)) {
        IndexPair mapped = make_index_pair(s.apply(b.first.a, c.n), s.apply(b.first.b, c.n));
        if (mapped == b.second) return true;
    }
    return false;
}

ColoredCycle apply_dihedral(const ColoredCycle& c, const DihedralElement& s) {
    ColoredCycle out = c;
    for (int v = 1; v <= c.n; ++v)
        out.vertex_colors[static_cast<std::size_t>(s.apply(v, c.n)) - 1] = c.vcolor(v);
    for (int k = 1; k <= c.n; ++k) {
        int a = s.apply(k, c.n);
        int b = s.apply(k % c.n + 1, c.n);
        out.edge_colors[static_cast<std::size_t>(edge_index_between(c.n, a, b)) - 1] = c.ecolor(k);
    }
    return out;
}

}  // namespace cycleideal
