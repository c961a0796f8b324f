#include <doctest.h>

#include <random>

#include "cycleideal/covariance.hpp"
#include "cycleideal/determinant.hpp"
#include "cycleideal/errors.hpp"
#include "cycleideal/poly.hpp"

using namespace cycleideal;

namespace {

Polynomial random_poly(std::mt19937& rng) {
    Polynomial p;
    std::uniform_int_distribution<int> coeff(-4, 4);
    std::uniform_int_distribution<int> exp(0, 3);
    int terms = 1 + static_cast<int>(rng() % 5);
    for (int t = 0; t < terms; ++t) {
        std::vector<std::pair<VariableId, int>> counts;
        counts.emplace_back(vertex_var(static_cast<int>(rng() % 3)), exp(rng));
        counts.emplace_back(edge_var(static_cast<int>(rng() % 3)), exp(rng));
        p.add_term(Monomial::from_counts(std::move(counts)), BigInt(coeff(rng)));
    }
    return p;
}

}  // namespace

TEST_CASE("variable ordering puts vertex colors before edge colors") {
    CHECK(vertex_var(5) < edge_var(0));
    CHECK(vertex_var(0) < vertex_var(1));
    CHECK(edge_var(0) < edge_var(2));
    CHECK(to_string(vertex_var(3)) == "v3");
    CHECK(to_string(edge_var(0)) == "e0");
}

TEST_CASE("poly_arith identities") {
    Polynomial x = Polynomial::var(vertex_var(0));
    Polynomial y = Polynomial::var(vertex_var(1));

    CHECK(poly_arith(x, Polynomial(), PolyOp::Add) == x);
    CHECK(poly_arith(x + y, x + y, PolyOp::Sub).is_zero());
    CHECK(poly_arith(x - y, x + y, PolyOp::Mul) == x * x - y * y);
}

TEST_CASE("ring axioms hold exactly on random polynomials") {
    std::mt19937 rng(42);
    for (int trial = 0; trial < 50; ++trial) {
        Polynomial a = random_poly(rng);
        Polynomial b = random_poly(rng);
        Polynomial c = random_poly(rng);
        CHECK(a + b == b + a);
        CHECK(a * b == b * a);
        CHECK((a + b) + c == a + (b + c));
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a - a).is_zero());
    }
}

TEST_CASE("canonical rendering round-trips") {
    CHECK(Polynomial::parse("+2*v0^2*e1 -1*e0^3").str() == "+2*v0^2*e1 -1*e0^3");
    CHECK(Polynomial::parse("0").is_zero());
    CHECK(Polynomial().str() == "0");
    CHECK(Polynomial::parse("+3").str() == "+3");

    std::mt19937 rng(7);
    for (int trial = 0; trial < 100; ++trial) {
        Polynomial p = random_poly(rng);
        std::string s = p.str();
        CHECK(Polynomial::parse(s) == p);
        CHECK(Polynomial::parse(s).str() == s);
    }
}

TEST_CASE("rendering rejects malformed input") {
    CHECK_THROWS_AS(Polynomial::parse("2*v0"), Error);   // missing sign
    CHECK_THROWS_AS(Polynomial::parse("+2*w0"), Error);  // unknown namespace
    CHECK_THROWS_AS(Polynomial::parse("+2*v"), Error);   // missing label
}

TEST_CASE("bidegree partition splits homogeneously and sums back") {
    Polynomial p = Polynomial::parse("+1*v0*v1 -1*e0^2");
    auto parts = bidegree_partition(p);
    REQUIRE(parts.size() == 2);
    CHECK(parts.at({2, 0}) == Polynomial::parse("+1*v0*v1"));
    CHECK(parts.at({0, 2}) == Polynomial::parse("-1*e0^2"));

    CHECK(bidegree_partition(Polynomial()).empty());

    std::mt19937 rng(11);
    for (int trial = 0; trial < 30; ++trial) {
        Polynomial q = random_poly(rng);
        Polynomial sum;
        for (const auto& [deg, part] : bidegree_partition(q)) {
            sum += part;
            for (const auto& [m, c] : part.terms()) {
                CHECK(m.vertex_degree() == deg.first);
                CHECK(m.edge_degree() == deg.second);
            }
        }
        CHECK(sum == q);
    }
}

TEST_CASE("alternating 4-path determinant has bidegree parts (4,0), (2,2), (0,4)") {
    Polynomial det = Polynomial::parse(
        "+1*v0^2*v1^2 -1*v0*v1*e0^2 -1*v0*v1*e1^2 -1*v0*v1*e2^2 +1*e0^2*e2^2");
    auto parts = bidegree_partition(det);
    REQUIRE(parts.size() == 3);
    CHECK(parts.at({4, 0}).term_count() == 1);
    CHECK(parts.at({2, 2}).term_count() == 3);
    CHECK(parts.at({0, 4}).term_count() == 1);
}

TEST_CASE("coefficient matrix extracts exact rows over the shared basis") {
    Polynomial x = Polynomial::var(vertex_var(0));
    Polynomial y = Polynomial::var(vertex_var(1));
    std::vector<Polynomial> ps = {x + y, x - y};
    CoefficientMatrix cm = coefficient_matrix(ps);
    REQUIRE(cm.basis.size() == 2);
    CHECK(cm.basis[0] == Monomial::var(vertex_var(0)));
    CHECK(cm.basis[1] == Monomial::var(vertex_var(1)));
    CHECK(cm.rows == std::vector<std::vector<BigInt>>{{1, 1}, {1, -1}});

    std::vector<Polynomial> zero = {Polynomial()};
    CoefficientMatrix zm = coefficient_matrix(zero);
    CHECK(zm.basis.empty());
    REQUIRE(zm.rows.size() == 1);
    CHECK(zm.rows[0].empty());
}

TEST_CASE("uniform 3-cycle diagonal numerators give identical coefficient rows") {
    ColoredCycle c = make_uniform_cycle(3);
    std::vector<Polynomial> ps = {adjugate_oracle(c, 1, 1), adjugate_oracle(c, 2, 2)};
    CoefficientMatrix cm = coefficient_matrix(ps);
    CHECK(cm.rows[0] == cm.rows[1]);
}

TEST_CASE("coefficient matrix reconstructs its inputs") {
    std::mt19937 rng(23);
    std::vector<Polynomial> ps;
    for (int k = 0; k < 6; ++k) ps.push_back(random_poly(rng));
    CoefficientMatrix cm = coefficient_matrix(ps);
    for (std::size_t r = 0; r < ps.size(); ++r) {
        Polynomial rebuilt;
        for (std::size_t c = 0; c < cm.basis.size(); ++c)
            rebuilt.add_term(cm.basis[c], cm.rows[r][c]);
        CHECK(rebuilt == ps[r]);
    }
}
