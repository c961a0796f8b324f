#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <set>
#include <sstream>

#include "cycleideal/configs.hpp"
#include "cycleideal/fixtures.hpp"
#include "cycleideal/model.hpp"
#include "cycleideal/search.hpp"
#include "cycleideal/symmetry.hpp"

using namespace cycleideal;

namespace {

ColoredPath make_path(std::vector<int> v, std::vector<int> e) {
    ColoredPath p;
    p.m = static_cast<int>(v.size());
    p.vertex_colors = std::move(v);
    p.edge_colors = std::move(e);
    return p;
}

std::string read_file(const std::string& path) {
    std::ifstream in(path);
    REQUIRE(in.good());
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

}  // namespace

TEST_CASE("validate accepts the bundled fixtures") {
    for (const auto& [name, obj] : fixtures::all()) {
        CAPTURE(name);
        CHECK(!validate(obj).has_value());
    }
}

TEST_CASE("validate flags missing colors, namespace collisions, bad edges") {
    ColoredCycle uncolored = fixtures::fig2();
    uncolored.edge_colors.pop_back();
    auto bad = validate(uncolored);
    REQUIRE(bad.has_value());
    CHECK(bad->code == ValidationError::MissingColor);

    ColoredPath collision = make_path({0, 1}, {0});
    collision.names.vertex = {"red", "blue"};
    collision.names.edge = {"red"};  // reuses a vertex color name
    bad = validate(collision);
    REQUIRE(bad.has_value());
    CHECK(bad->code == ValidationError::NamespaceCollision);

    ColoredCycle tiny = make_uniform_cycle(2);
    bad = validate(tiny);
    REQUIRE(bad.has_value());
    CHECK(bad->code == ValidationError::BadEdge);

    ColoredGraph loop = fixtures::example55_g1();
    loop.edges[0] = {2, 2};
    bad = validate(loop);
    REQUIRE(bad.has_value());
    CHECK(bad->code == ValidationError::BadEdge);
}

TEST_CASE("reflect reverses and is an involution") {
    ColoredPath p = make_path({0, 1, 2}, {0, 1});
    ColoredPath r = reflect(p);
    CHECK(r.vertex_colors == std::vector<int>{2, 1, 0});
    CHECK(r.edge_colors == std::vector<int>{1, 0});

    ColoredPath palindrome = make_path({0, 1, 0}, {0, 0});
    CHECK(reflect(palindrome) == palindrome);

    std::mt19937 rng(3);
    for (int trial = 0; trial < 40; ++trial) {
        int m = 1 + static_cast<int>(rng() % 8);
        ColoredPath q;
        q.m = m;
        for (int i = 0; i < m; ++i) q.vertex_colors.push_back(static_cast<int>(rng() % 3));
        for (int i = 0; i + 1 < m; ++i) q.edge_colors.push_back(static_cast<int>(rng() % 3));
        CHECK(reflect(reflect(q)) == q);
    }
}

TEST_CASE("the odd configuration partner at m=5 is neither its own reflection nor the first path") {
    auto [p, q] = gen_odd_config(5);
    CHECK(!(reflect(q) == q));
    CHECK(!(reflect(q) == p));
}

TEST_CASE("cycle_paths splits a cycle into its two arcs") {
    ColoredCycle c4 = fixtures::fig2();
    CyclePaths arcs = cycle_paths(c4, 1, 4);
    CHECK(arcs.shorter.m == 2);
    CHECK(std::set<int>(arcs.shorter_vertices.begin(), arcs.shorter_vertices.end()) ==
          std::set<int>{1, 4});
    CHECK(arcs.complement_vertices == std::vector<int>{1, 2, 3, 4});

    ColoredCycle c5 = make_uniform_cycle(5);
    arcs = cycle_paths(c5, 1, 3);
    CHECK(arcs.shorter_vertices == std::vector<int>{1, 2, 3});
    CHECK(arcs.complement_vertices == std::vector<int>{3, 4, 5, 1});

    // Antipodal tie goes to the clockwise arc starting from min(i, j).
    ColoredCycle c6 = make_uniform_cycle(6);
    arcs = cycle_paths(c6, 1, 4);
    CHECK(arcs.shorter_vertices == std::vector<int>{1, 2, 3, 4});

    CHECK_THROWS_AS(cycle_paths(c6, 2, 2), Error);
}

TEST_CASE("cycle_paths arcs intersect exactly in the endpoints and cover the cycle") {
    std::mt19937 rng(17);
    for (int trial = 0; trial < 50; ++trial) {
        int n = 3 + static_cast<int>(rng() % 8);
        ColoredCycle c = make_uniform_cycle(n);
        int i = 1 + static_cast<int>(rng() % n);
        int j = 1 + static_cast<int>(rng() % n);
        if (i == j) continue;
        CyclePaths arcs = cycle_paths(c, i, j);
        CHECK(arcs.shorter.m + arcs.complement.m == n + 2);
        std::set<int> a(arcs.shorter_vertices.begin(), arcs.shorter_vertices.end());
        std::set<int> b(arcs.complement_vertices.begin(), arcs.complement_vertices.end());
        std::set<int> both;
        std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                              std::inserter(both, both.begin()));
        CHECK(both == std::set<int>{i, j});
    }
}

TEST_CASE("delete_vertices returns the induced arc") {
    ColoredCycle c4 = fixtures::fig2();  // red red yellow yellow
    ColoredPath rest = delete_vertices(c4, {1, 4});
    CHECK(rest.vertex_colors == std::vector<int>{c4.vcolor(2), c4.vcolor(3)});
    CHECK(rest.edge_colors == std::vector<int>{c4.ecolor(2)});

    ColoredPath empty = delete_vertices(c4, {1, 2, 3, 4});
    CHECK(empty.m == 0);

    // Removing one vertex leaves the arc 3,4,5,1 in clockwise order.
    ColoredCycle c5;
    c5.n = 5;
    c5.vertex_colors = {0, 1, 2, 3, 4};
    c5.edge_colors = {0, 1, 2, 3, 4};
    ColoredPath around = delete_vertices(c5, {2});
    CHECK(around.vertex_colors == std::vector<int>{2, 3, 4, 0});
    CHECK(around.edge_colors == std::vector<int>{2, 3, 4});

    CHECK_THROWS_AS(delete_vertices(c5, {1, 3}), Error);
    CHECK_THROWS_AS(delete_vertices(c5, std::set<int>{}), Error);
}

TEST_CASE("canonical form is invariant under dihedral relabeling and color renaming") {
    std::mt19937 rng(29);
    for (const ColoredCycle& base : {fixtures::fig5(), fixtures::fig8(), fixtures::fig10()}) {
        std::string expected = canonical_form(base);
        for (const DihedralElement& s : all_dihedral(base.n)) {
            ColoredCycle moved = apply_dihedral(base, s);
            // Also rename colors with a random permutation.
            int vmax = *std::max_element(moved.vertex_colors.begin(), moved.vertex_colors.end());
            int emax = *std::max_element(moved.edge_colors.begin(), moved.edge_colors.end());
            std::vector<int> vperm(static_cast<std::size_t>(vmax) + 1);
            std::vector<int> eperm(static_cast<std::size_t>(emax) + 1);
            for (std::size_t k = 0; k < vperm.size(); ++k) vperm[k] = static_cast<int>(k);
            for (std::size_t k = 0; k < eperm.size(); ++k) eperm[k] = static_cast<int>(k);
            std::shuffle(vperm.begin(), vperm.end(), rng);
            std::shuffle(eperm.begin(), eperm.end(), rng);
            moved.names = {};
            for (int& v : moved.vertex_colors) v = vperm[static_cast<std::size_t>(v)];
            for (int& e : moved.edge_colors) e = eperm[static_cast<std::size_t>(e)];
            CHECK(canonical_form(moved) == expected);
        }
    }
}

TEST_CASE("canonical class count at n=3 matches brute-force orbit counting") {
    // All colorings with at most 3 vertex and 3 edge colors, quotiented by
    // the dihedral group and independent color permutations, counted
    // without canonical_form.
    const int n = 3;
    std::vector<std::vector<int>> perms;
    std::vector<int> ids = {0, 1, 2};
    std::sort(ids.begin(), ids.end());
    do {
        perms.push_back(ids);
    } while (std::next_permutation(ids.begin(), ids.end()));

    auto digits = [](int code) {
        return std::vector<int>{code / 9, code / 3 % 3, code % 3};
    };
    std::set<std::pair<std::vector<int>, std::vector<int>>> orbit_minima;
    for (int vcode = 0; vcode < 27; ++vcode) {
        for (int ecode = 0; ecode < 27; ++ecode) {
            std::vector<int> v = digits(vcode);
            std::vector<int> e = digits(ecode);
            std::pair<std::vector<int>, std::vector<int>> best;
            bool have = false;
            ColoredCycle c;
            c.n = n;
            c.vertex_colors = v;
            c.edge_colors = e;
            for (const DihedralElement& s : all_dihedral(n)) {
                ColoredCycle moved = apply_dihedral(c, s);
                for (const auto& vperm : perms)
                    for (const auto& eperm : perms) {
                        std::vector<int> tv = moved.vertex_colors;
                        std::vector<int> te = moved.edge_colors;
                        for (int& x : tv) x = vperm[static_cast<std::size_t>(x)];
                        for (int& x : te) x = eperm[static_cast<std::size_t>(x)];
                        auto cand = std::make_pair(tv, te);
                        if (!have || cand < best) {
                            best = cand;
                            have = true;
                        }
                    }
            }
            orbit_minima.insert(best);
        }
    }
    CHECK(enumerate_colorings(3, Constraint::None).size() == orbit_minima.size());
}

TEST_CASE("canonical encoding parses back to the representative") {
    for (const ColoredCycle& c : {fixtures::fig2(), fixtures::fig9(), fixtures::fig6()}) {
        std::string enc = canonical_form(c);
        ColoredCycle rep = cycle_from_canonical(enc);
        CHECK(canonical_form(rep) == enc);
    }
}

TEST_CASE("fixture files parse to the bundled objects and round-trip") {
    for (const auto& [name, obj] : fixtures::all()) {
        CAPTURE(name);
        std::string text = read_file(std::string(CYCLEIDEAL_FIXTURES_DIR) + "/" + name + ".json");
        ColoredObject parsed = parse_colored(text);
        CHECK(parsed == obj);
        CHECK(parse_colored(serialize(parsed)) == parsed);
    }
}

TEST_CASE("parse reports malformed input") {
    CHECK_THROWS_AS(parse_colored("not json"), Error);
    CHECK_THROWS_AS(parse_colored("{\"kind\":\"cycle\"}"), Error);
    CHECK_THROWS_AS(parse_colored("{\"kind\":\"torus\",\"n\":3,\"vertex_colors\":[],"
                                  "\"edge_colors\":[]}"),
                    Error);
    CHECK_THROWS_AS(
        parse_colored("{\"kind\":\"graph\",\"n\":2,\"vertex_colors\":[\"r\",\"r\"],"
                      "\"edge_colors\":[\"b\"]}"),
        Error);  // graph without edges

    // Structurally fine but semantically invalid: caught by validate.
    ColoredObject obj = parse_colored(
        "{\"kind\":\"cycle\",\"n\":4,\"vertex_colors\":[\"red\",\"red\",\"red\",\"red\"],"
        "\"edge_colors\":[\"red\",\"red\",\"red\",\"red\"]}");
    auto bad = validate(obj);
    REQUIRE(bad.has_value());
    CHECK(bad->code == ValidationError::NamespaceCollision);
}
