#include "cycleideal/linalg.hpp"

#include <algorithm>

#include "cycleideal/errors.hpp"

namespace cycleideal {

BigInt div_exact(const BigInt& a, const BigInt& b) {
    if (b == 0) fail(Error::Code::Internal, "division by zero");
    BigInt q, r;
    mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    if (r != 0) fail(Error::Code::Internal, "inexact division in fraction-free elimination");
    return q;
}

namespace {

struct Echelon {
    IntMatrix mat;                // fraction-free row echelon form
    std::vector<int> pivot_cols;  // ascending
    std::vector<int> pivot_rows;  // pivot_rows[k] holds pivot_cols[k]
};

// Bareiss one-step elimination: entries of the k-th reduced matrix are
// k x k minors of the input, so every division below is exact.
Echelon bareiss(IntMatrix a) {
    Echelon out;
    std::size_t rows = a.size();
    std::size_t cols = rows ? a[0].size() : 0;
    BigInt prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t pivot = r;
        while (pivot < rows && a[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(a[r], a[pivot]);
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t jj = c + 1; jj < cols; ++jj)
                a[i][jj] = div_exact(a[r][c] * a[i][jj] - a[i][c] * a[r][jj], prev);
            a[i][c] = 0;
        }
        prev = a[r][c];
        out.pivot_cols.push_back(static_cast<int>(c));
        out.pivot_rows.push_back(static_cast<int>(r));
        ++r;
    }
    out.mat = std::move(a);
    return out;
}

void normalize_primitive(std::vector<BigInt>& v) {
    BigInt g(0);
    for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g > 1)
        for (BigInt& x : v) x = div_exact(x, g);
    for (const BigInt& x : v) {
        if (x == 0) continue;
        if (x < 0)
            for (BigInt& y : v) y = -y;
        break;
    }
}

}  // namespace

int integer_rank(IntMatrix a) {
    return static_cast<int>(bareiss(std::move(a)).pivot_cols.size());
}

std::vector<std::vector<BigInt>> integer_kernel(IntMatrix a) {
    std::size_t cols = a.empty() ? 0 : a[0].size();
    Echelon ech = bareiss(std::move(a));

    std::vector<bool> is_pivot(cols, false);
    for (int c : ech.pivot_cols) is_pivot[static_cast<std::size_t>(c)] = true;

    std::vector<std::vector<BigInt>> basis;
    for (std::size_t f = 0; f < cols; ++f) {
        if (is_pivot[f]) continue;
        // Back-substitute with the free variable set to 1; keep the vector
        // integral by scaling through the pivots.
        std::vector<mpq_class> x(cols, mpq_class(0));
        x[f] = 1;
        for (int k = static_cast<int>(ech.pivot_cols.size()) - 1; k >= 0; --k) {
            std::size_t row = static_cast<std::size_t>(ech.pivot_rows[k]);
            std::size_t pc = static_cast<std::size_t>(ech.pivot_cols[k]);
            mpq_class sum(0);
            for (std::size_t jj = pc + 1; jj < cols; ++jj)
                if (x[jj] != 0) sum += mpq_class(ech.mat[row][jj]) * x[jj];
            x[pc] = -sum / mpq_class(ech.mat[row][pc]);
        }
        BigInt denom_lcm(1);
        for (const mpq_class& q : x)
            mpz_lcm(denom_lcm.get_mpz_t(), denom_lcm.get_mpz_t(), q.get_den().get_mpz_t());
        std::vector<BigInt> v(cols);
        for (std::size_t jj = 0; jj < cols; ++jj) {
            mpq_class scaled = x[jj] * mpq_class(denom_lcm);
            v[jj] = scaled.get_num();  // denominator is 1 after scaling
        }
        normalize_primitive(v);
        basis.push_back(std::move(v));
    }
    return basis;
}

bool in_span(const std::vector<std::vector<BigInt>>& rows, const std::vector<BigInt>& v) {
    if (rows.empty()) return std::all_of(v.begin(), v.end(), [](const BigInt& x) { return x == 0; });
    IntMatrix with = rows;
    with.push_back(v);
    return integer_rank(rows) == integer_rank(std::move(with));
}

}  // namespace cycleideal
