#include <doctest.h>

#include <random>

#include "cycleideal/errors.hpp"
#include "cycleideal/linalg.hpp"

using namespace cycleideal;

namespace {

IntMatrix random_matrix(std::mt19937& rng, std::size_t rows, std::size_t cols) {
    std::uniform_int_distribution<int> val(-4, 4);
    IntMatrix m(rows, std::vector<BigInt>(cols));
    for (auto& row : m)
        for (BigInt& x : row) x = val(rng);
    return m;
}

// Independent rank via plain rational elimination.
int rational_rank(const IntMatrix& a) {
    if (a.empty()) return 0;
    std::size_t rows = a.size(), cols = a[0].size();
    std::vector<std::vector<mpq_class>> m(rows, std::vector<mpq_class>(cols));
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c) m[r][c] = mpq_class(a[r][c]);
    std::size_t rank = 0;
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t pivot = rank;
        while (pivot < rows && m[pivot][c] == 0) ++pivot;
        if (pivot == rows) continue;
        std::swap(m[rank], m[pivot]);
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == rank || m[r][c] == 0) continue;
            mpq_class factor = m[r][c] / m[rank][c];
            for (std::size_t jj = c; jj < cols; ++jj) m[r][jj] -= factor * m[rank][jj];
        }
        ++rank;
    }
    return static_cast<int>(rank);
}

}  // namespace

TEST_CASE("exact division checks its postcondition") {
    CHECK(div_exact(BigInt(12), BigInt(-4)) == -3);
    CHECK_THROWS_AS(div_exact(BigInt(7), BigInt(2)), Error);
    CHECK_THROWS_AS(div_exact(BigInt(1), BigInt(0)), Error);
}

TEST_CASE("rank of hand-picked matrices") {
    CHECK(integer_rank({{1, 2}, {2, 4}}) == 1);
    CHECK(integer_rank({{1, 0}, {0, 1}}) == 2);
    CHECK(integer_rank({{0, 0}, {0, 0}}) == 0);
}

TEST_CASE("kernel vectors annihilate the matrix and count the nullity") {
    IntMatrix a = {{1, 1, 1}};
    auto kernel = integer_kernel(a);
    REQUIRE(kernel.size() == 2);
    for (const auto& v : kernel) {
        BigInt dot(0);
        for (std::size_t k = 0; k < 3; ++k) dot += a[0][k] * v[k];
        CHECK(dot == 0);
    }
}

TEST_CASE("fraction-free elimination agrees with rational elimination on random matrices") {
    std::mt19937 rng(2024);
    for (int trial = 0; trial < 60; ++trial) {
        std::size_t rows = 1 + rng() % 7;
        std::size_t cols = 1 + rng() % 7;
        IntMatrix a = random_matrix(rng, rows, cols);
        int rank = integer_rank(a);
        CHECK(rank == rational_rank(a));

        auto kernel = integer_kernel(a);
        CHECK(kernel.size() == cols - static_cast<std::size_t>(rank));
        for (const auto& v : kernel) {
            // Primitive with positive leading entry.
            BigInt g(0);
            bool first_sign_ok = true;
            for (const BigInt& x : v) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
            for (const BigInt& x : v) {
                if (x == 0) continue;
                first_sign_ok = x > 0;
                break;
            }
            CHECK(g == 1);
            CHECK(first_sign_ok);
            for (std::size_t r = 0; r < rows; ++r) {
                BigInt dot(0);
                for (std::size_t c = 0; c < cols; ++c) dot += a[r][c] * v[c];
                CHECK(dot == 0);
            }
        }
    }
}

TEST_CASE("span membership") {
    std::vector<std::vector<BigInt>> rows = {{1, 0, 1}, {0, 1, 1}};
    CHECK(in_span(rows, {1, 1, 2}));
    CHECK(in_span(rows, {2, -1, 1}));
    CHECK(!in_span(rows, {0, 0, 1}));
    CHECK(in_span({}, {0, 0}));
    CHECK(!in_span({}, {1, 0}));
}
