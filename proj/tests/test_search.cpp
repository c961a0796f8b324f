#include <doctest.h>

#include <algorithm>
#include <cstdio>
#include <fstream>

#include "cycleideal/fixtures.hpp"
#include "cycleideal/search.hpp"

using namespace cycleideal;

namespace {

// Bell numbers via the Bell triangle; oracle for the pre-quotient counts.
long long bell(int n) {
    std::vector<std::vector<long long>> tri = {{1}};
    for (int r = 1; r <= n; ++r) {
        std::vector<long long> row = {tri.back().back()};
        for (long long x : tri.back()) row.push_back(row.back() + x);
        tri.push_back(row);
    }
    return tri[static_cast<std::size_t>(n)][0];
}

struct TempFile {
    std::string path;
    explicit TempFile(const std::string& name) : path("/tmp/cycleideal_test_" + name) {
        std::remove(path.c_str());
    }
    ~TempFile() { std::remove(path.c_str()); }
};

}  // namespace

TEST_CASE("restricted growth strings count Bell numbers") {
    for (int n : {1, 2, 3, 4, 5, 6}) {
        long long count = 0;
        for_each_rgs(n, [&](const std::vector<int>&) { ++count; });
        CHECK(count == bell(n));
    }
    CHECK(pre_quotient_count(3, Constraint::None) == 25);          // Bell(3)^2
    CHECK(pre_quotient_count(5, Constraint::UniformEdge) == 52);   // Bell(5)
    CHECK(pre_quotient_count(4, Constraint::Uniform) == 1);

    // The canonical quotient strictly shrinks the scanned space.
    CHECK(enumerate_colorings(3, Constraint::None).size() < 25);
}

TEST_CASE("enumeration emits unique canonical representatives in order") {
    auto classes = enumerate_colorings(5, Constraint::UniformEdge);
    CHECK(!classes.empty());
    std::vector<std::string> encodings;
    for (const ColoredCycle& c : classes) {
        CHECK(canonical_form(c) == canonical_form(cycle_from_canonical(canonical_form(c))));
        encodings.push_back(canonical_form(c));
    }
    CHECK(std::is_sorted(encodings.begin(), encodings.end()));
    CHECK(std::adjacent_find(encodings.begin(), encodings.end()) == encodings.end());

    CHECK(enumerate_colorings(3, Constraint::Uniform).size() == 1);
    CHECK(enumerate_colorings(4, Constraint::Uniform).size() == 1);
}

TEST_CASE("hunts on 3- and 5-cycles come back clean") {
    CHECK(hunt(3, Constraint::None, Budget::exhaustive()).empty());
    CHECK(hunt(5, Constraint::None, Budget::exhaustive()).empty());
}

TEST_CASE("the exhaustive 4-cycle hunt finds the known counterexample class") {
    auto hits = hunt(4, Constraint::None, Budget::exhaustive());
    REQUIRE(!hits.empty());
    std::string fig7_class = canonical_form(fixtures::fig7());
    bool found = false;
    for (const ConjectureReport& report : hits) {
        CHECK(!report.unexplained.empty());
        if (canonical_form(report.cycle) == fig7_class) found = true;
    }
    CHECK(found);
}

TEST_CASE("sampled hunts are deterministic in their seed") {
    auto a = hunt(6, Constraint::None, Budget::sample(150, 99));
    auto b = hunt(6, Constraint::None, Budget::sample(150, 99));
    REQUIRE(a.size() == b.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(canonical_form(a[k].cycle) == canonical_form(b[k].cycle));

    HuntOptions two_jobs;
    two_jobs.jobs = 2;
    auto c = hunt(6, Constraint::None, Budget::sample(150, 99), two_jobs);
    REQUIRE(c.size() == a.size());
    for (std::size_t k = 0; k < a.size(); ++k)
        CHECK(canonical_form(a[k].cycle) == canonical_form(c[k].cycle));
}

TEST_CASE("counterexample constructions reproduce the bundled classes") {
    CHECK(canonical_form(construct_counterexample_even(4)) == canonical_form(fixtures::fig5()));
    CHECK(canonical_form(construct_counterexample_even(5)) == canonical_form(fixtures::fig6()));
    CHECK_THROWS_AS(construct_counterexample_even(3), Error);
    CHECK_THROWS_AS(construct_counterexample_even(2), Error);
}

TEST_CASE("constructed counterexamples have no symmetry and carry their binomial") {
    for (int m = 4; m <= 7; ++m) {
        ColoredCycle c = construct_counterexample_even(m);
        CHECK(symmetries(c).size() == 1);
        LinearBinomial expected = make_binomial({1, m}, {m + 1, 2 * m});
        CHECK(sigma_numerator(c, 1, m).numerator ==
              sigma_numerator(c, m + 1, 2 * m).numerator);
        CHECK(!explains(c, expected));
        if (2 * m <= kIdealMaxN) {
            ConjectureReport report =
                conjecture_status(c, kIdealMaxN, /*with_linear_part=*/false);
            CHECK(std::find(report.unexplained.begin(), report.unexplained.end(), expected) !=
                  report.unexplained.end());
        }
    }
}

TEST_CASE("checkpoints let exhaustive hunts resume past processed classes") {
    TempFile ckpt("hunt_checkpoint");

    HuntOptions opts;
    opts.checkpoint_file = ckpt.path;
    auto first = hunt(4, Constraint::None, Budget::exhaustive(), opts);
    CHECK(!first.empty());

    // Every class is now recorded, so a resumed run scans nothing.
    auto resumed = hunt(4, Constraint::None, Budget::exhaustive(), opts);
    CHECK(resumed.empty());

    // A checkpoint cut before the last hit resumes into it.
    auto classes = enumerate_colorings(4, Constraint::None);
    std::string last_hit = canonical_form(first.back().cycle);
    {
        std::ofstream out(ckpt.path, std::ios::trunc);
        for (const ColoredCycle& c : classes) {
            std::string enc = canonical_form(c);
            if (enc == last_hit) break;
            out << enc << "\n";
        }
    }
    auto tail = hunt(4, Constraint::None, Budget::exhaustive(), opts);
    bool found = false;
    for (const ConjectureReport& report : tail)
        if (canonical_form(report.cycle) == last_hit) found = true;
    CHECK(found);
}

TEST_CASE("hunt rejects cycles beyond the bound") {
    CHECK_THROWS_AS(hunt(13, Constraint::Uniform, Budget::exhaustive()), Error);
}
