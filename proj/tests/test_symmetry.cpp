#include <doctest.h>

#include <algorithm>
#include <random>

#include "cycleideal/determinant.hpp"
#include "cycleideal/fixtures.hpp"
#include "cycleideal/symmetry.hpp"

using namespace cycleideal;

namespace {

ColoredCycle random_cycle(std::mt19937& rng, int n, int palette) {
    ColoredCycle c;
    c.n = n;
    for (int i = 0; i < n; ++i) c.vertex_colors.push_back(static_cast<int>(rng() % palette));
    for (int i = 0; i < n; ++i) c.edge_colors.push_back(static_cast<int>(rng() % palette));
    return c;
}

// P K P^T for the permutation matrix of s; entry-by-entry comparison
// against K verifies the matrix definition of a symmetry.
SymbolicMatrix conjugate_by(const DihedralElement& s, const ColoredCycle& c) {
    SymbolicMatrix k = concentration_matrix(c);
    SymbolicMatrix out(c.n);
    for (int i = 1; i <= c.n; ++i)
        for (int j = 1; j <= c.n; ++j)
            out.at(s.apply(i, c.n) - 1, s.apply(j, c.n) - 1) = k.at(i - 1, j - 1);
    return out;
}

}  // namespace

TEST_CASE("dihedral elements behave like the group they name") {
    std::mt19937 rng(5);
    for (int n : {3, 4, 5, 6, 8}) {
        auto elements = all_dihedral(n);
        CHECK(elements.size() == 2 * static_cast<std::size_t>(n));
        for (const DihedralElement& a : elements) {
            // inverse law
            DihedralElement ai = inverse(a, n);
            CHECK(compose(a, ai, n).is_identity());
            CHECK(compose(ai, a, n).is_identity());
            // composition matches pointwise application
            const DihedralElement& b = elements[rng() % elements.size()];
            DihedralElement ab = compose(a, b, n);
            for (int v = 1; v <= n; ++v) CHECK(ab.apply(v, n) == a.apply(b.apply(v, n), n));
        }
    }
}

TEST_CASE("uniform cycles keep the full dihedral group") {
    for (int n : {3, 4, 5, 6}) {
        CHECK(symmetries(make_uniform_cycle(n)).size() == 2 * static_cast<std::size_t>(n));
    }
}

TEST_CASE("the reflective 4-cycle has exactly one non-trivial symmetry") {
    auto group = symmetries(fixtures::fig2());
    REQUIRE(group.size() == 2);
    CHECK(group[0].is_identity());
    // The reflection swapping 1<->2 and 3<->4.
    CHECK(group[1] == DihedralElement{DihedralElement::Kind::Reflection, 1});
    CHECK(group[1].apply(1, 4) == 2);
    CHECK(group[1].apply(3, 4) == 4);
}

TEST_CASE("the glued 8-cycle has no symmetry beyond the identity") {
    auto group = symmetries(fixtures::fig5());
    REQUIRE(group.size() == 1);
    CHECK(group[0].is_identity());
}

TEST_CASE("detected symmetries satisfy P K P^-1 = K symbolically") {
    std::mt19937 rng(77);
    for (int trial = 0; trial < 15; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        ColoredCycle c = random_cycle(rng, n, 2);
        for (const DihedralElement& s : all_dihedral(n)) {
            SymbolicMatrix k = concentration_matrix(c);
            SymbolicMatrix conj = conjugate_by(s, c);
            bool equal = true;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    if (!(conj.at(i, j) == k.at(i, j))) equal = false;
            CHECK(is_symmetry(c, s) == equal);
        }
    }
}

TEST_CASE("symmetry sets are closed under composition and inverse") {
    std::mt19937 rng(88);
    for (int trial = 0; trial < 30; ++trial) {
        int n = 3 + static_cast<int>(rng() % 6);
        ColoredCycle c = random_cycle(rng, n, 1 + static_cast<int>(rng() % 3));
        auto group = symmetries(c);
        std::set<DihedralElement> set(group.begin(), group.end());
        CHECK(set.count(DihedralElement{}) == 1);
        for (const DihedralElement& a : group) {
            CHECK(set.count(inverse(a, n)) == 1);
            for (const DihedralElement& b : group) CHECK(set.count(compose(a, b, n)) == 1);
        }
    }
}

TEST_CASE("induced binomials of the 4-cycle reflection") {
    ColoredCycle c = fixtures::fig2();
    DihedralElement refl{DihedralElement::Kind::Reflection, 1};
    std::set<LinearBinomial> expected = {
        make_binomial({1, 1}, {2, 2}),
        make_binomial({3, 3}, {4, 4}),
        make_binomial({1, 3}, {2, 4}),
        make_binomial({1, 4}, {2, 3}),
    };
    CHECK(induced_binomials(c, refl) == expected);
    CHECK(induced_binomials(c, DihedralElement{}).empty());
    CHECK_THROWS_AS(induced_binomials(c, DihedralElement{DihedralElement::Kind::Rotation, 1}),
                    Error);
}

TEST_CASE("induced binomials of the 6-cycle reflection fixing vertices 1 and 4") {
    ColoredCycle c = fixtures::fig4();
    DihedralElement refl{DihedralElement::Kind::Reflection, 0};  // 2<->6, 3<->5
    REQUIRE(is_symmetry(c, refl));
    std::set<LinearBinomial> expected = {
        make_binomial({2, 2}, {6, 6}), make_binomial({3, 3}, {5, 5}),
        make_binomial({1, 2}, {1, 6}), make_binomial({2, 3}, {5, 6}),
        make_binomial({3, 4}, {4, 5}), make_binomial({2, 4}, {4, 6}),
        make_binomial({1, 3}, {1, 5}), make_binomial({2, 5}, {3, 6}),
    };
    CHECK(induced_binomials(c, refl) == expected);
}

TEST_CASE("explains transports index pairs through the symmetry group") {
    CHECK(explains(fixtures::fig2(), make_binomial({1, 4}, {2, 3})));
    CHECK(!explains(fixtures::fig5(), make_binomial({1, 4}, {5, 8})));
}

TEST_CASE("canonical form is constant on symmetry relabelings") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 20; ++trial) {
        int n = 3 + static_cast<int>(rng() % 5);
        ColoredCycle c = random_cycle(rng, n, 2);
        for (const DihedralElement& s : symmetries(c))
            CHECK(canonical_form(apply_dihedral(c, s)) == canonical_form(c));
    }
}
