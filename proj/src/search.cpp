#include "cycleideal/search.hpp"

#include <algorithm>
#include <atomic>
#include <fstream>
#include <mutex>
#include <random>
#include <set>
#include <thread>

#include "cycleideal/configs.hpp"
#include "cycleideal/covariance.hpp"

namespace cycleideal {

Constraint constraint_from_string(const std::string& name) {
    if (name == "none") return Constraint::None;
    if (name == "uniform-vertex") return Constraint::UniformVertex;
    if (name == "uniform-edge") return Constraint::UniformEdge;
    if (name == "uniform") return Constraint::Uniform;
    fail(Error::Code::Parse, "unknown constraint \"" + name + "\"");
}

std::string to_string(Constraint c) {
    switch (c) {
        case Constraint::None: return "none";
        case Constraint::UniformVertex: return "uniform-vertex";
        case Constraint::UniformEdge: return "uniform-edge";
        case Constraint::Uniform: return "uniform";
    }
    fail(Error::Code::Internal, "bad constraint");
}

void for_each_rgs(int length, const std::function<void(const std::vector<int>&)>& fn) {
    std::vector<int> digits(static_cast<std::size_t>(length), 0);
    std::function<void(int, int)> go = [&](int pos, int max_used) {
        if (pos == length) {
            fn(digits);
            return;
        }
        for (int d = 0; d <= max_used + 1; ++d) {
            digits[static_cast<std::size_t>(pos)] = d;
            go(pos + 1, std::max(max_used, d));
        }
    };
    if (length == 0) {
        fn(digits);
        return;
    }
    digits[0] = 0;
    go(1, 0);
}

namespace {

long long count_rgs(int length) {
    long long total = 0;
    for_each_rgs(length, [&](const std::vector<int>&) { ++total; });
    return total;  // Bell number of `length`
}

bool vertex_uniform(Constraint c) {
    return c == Constraint::UniformVertex || c == Constraint::Uniform;
}

bool edge_uniform(Constraint c) {
    return c == Constraint::UniformEdge || c == Constraint::Uniform;
}

}  // namespace

long long pre_quotient_count(int n, Constraint constraint) {
    long long v = vertex_uniform(constraint) ? 1 : count_rgs(n);
    long long e = edge_uniform(constraint) ? 1 : count_rgs(n);
    return v * e;
}

std::vector<ColoredCycle> enumerate_colorings(int n, Constraint constraint) {
    if (n < 3) fail(Error::Code::BadLength, "cycles need n >= 3");
    std::set<std::string> encodings;
    std::vector<int> uniform(static_cast<std::size_t>(n), 0);
    ColoredCycle cycle;
    cycle.n = n;

    auto scan_edges = [&](const std::vector<int>& vcolors) {
        cycle.vertex_colors = vcolors;
        if (edge_uniform(constraint)) {
            cycle.edge_colors = uniform;
            encodings.insert(canonical_form(cycle));
        } else {
            for_each_rgs(n, [&](const std::vector<int>& ecolors) {
                cycle.edge_colors = ecolors;
                encodings.insert(canonical_form(cycle));
            });
        }
    };
    if (vertex_uniform(constraint)) {
        scan_edges(uniform);
    } else {
        for_each_rgs(n, [&](const std::vector<int>& vcolors) { scan_edges(vcolors); });
    }

    std::vector<ColoredCycle> out;
    out.reserve(encodings.size());
    for (const std::string& enc : encodings) out.push_back(cycle_from_canonical(enc));
    return out;
}

namespace {

std::vector<ColoredCycle> sample_colorings(int n, Constraint constraint, int count,
                                           std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    auto random_rgs = [&](bool uniform) {
        std::vector<int> digits(static_cast<std::size_t>(n), 0);
        if (!uniform) {
            int max_used = 0;
            for (int pos = 1; pos < n; ++pos) {
                std::uniform_int_distribution<int> dist(0, max_used + 1);
                digits[static_cast<std::size_t>(pos)] = dist(rng);
                max_used = std::max(max_used, digits[static_cast<std::size_t>(pos)]);
            }
        }
        return digits;
    };
    std::set<std::string> seen;
    std::vector<ColoredCycle> out;
    ColoredCycle cycle;
    cycle.n = n;
    long long attempts = 0;
    const long long max_attempts = std::max<long long>(100'000, 200LL * count);
    while (static_cast<int>(out.size()) < count && attempts < max_attempts) {
        ++attempts;
        cycle.vertex_colors = random_rgs(vertex_uniform(constraint));
        cycle.edge_colors = random_rgs(edge_uniform(constraint));
        std::string enc = canonical_form(cycle);
        if (seen.insert(enc).second) out.push_back(cycle_from_canonical(enc));
    }
    return out;  // short only when the class space itself is smaller
}

// Scan one coloring; returns true when some linear binomial lacks a
// matching symmetry.
bool has_unexplained(const ColoredCycle& c) {
    ConjectureReport quick = conjecture_status(c, kIdealMaxN, /*with_linear_part=*/false);
    return !quick.unexplained.empty();
}

void oracle_recheck(const ConjectureReport& report, int max_n) {
    const ColoredCycle& c = report.cycle;
    if (c.n > max_n) return;
    for (const LinearBinomial& b : report.unexplained) {
        Polynomial lhs = adjugate_oracle(c, b.first.a, b.first.b);
        Polynomial rhs = adjugate_oracle(c, b.second.a, b.second.b);
        if (!(lhs == rhs))
            fail(Error::Code::Internal,
                 "adjugate oracle contradicts detected binomial " + to_string(b) +
                     " on cycle " + canonical_form(c));
    }
}

std::string checkpoint_last_line(const std::string& path) {
    std::ifstream in(path);
    std::string line, last;
    while (std::getline(in, line))
        if (!line.empty()) last = line;
    return last;
}

}  // namespace

std::vector<ConjectureReport> hunt(int n, Constraint constraint, const Budget& budget,
                                   const HuntOptions& options) {
    if (n > kIdealMaxN)
        fail(Error::Code::TooLarge, "hunt limited to cycles on at most " +
                                        std::to_string(kIdealMaxN) + " vertices");

    std::vector<ColoredCycle> classes;
    if (budget.kind == Budget::Kind::Exhaustive) {
        classes = enumerate_colorings(n, constraint);
        if (options.checkpoint_file) {
            std::string last = checkpoint_last_line(*options.checkpoint_file);
            if (!last.empty()) {
                auto it = std::find_if(classes.begin(), classes.end(),
                                       [&](const ColoredCycle& c) {
                                           return canonical_form(c) == last;
                                       });
                if (it != classes.end()) classes.erase(classes.begin(), it + 1);
            }
        }
    } else {
        classes = sample_colorings(n, constraint, budget.sample_count, budget.seed);
    }

    std::ofstream checkpoint;
    if (options.checkpoint_file && budget.kind == Budget::Kind::Exhaustive)
        checkpoint.open(*options.checkpoint_file, std::ios::app);

    std::vector<std::pair<std::string, ConjectureReport>> hits;
    std::mutex hits_mutex;
    std::atomic<std::size_t> cursor{0};
    int jobs = std::max(1, options.jobs);

    auto process = [&](const ColoredCycle& c) {
        if (!has_unexplained(c)) return;
        ConjectureReport full = conjecture_status(c);
        oracle_recheck(full, options.oracle_recheck_max_n);
        std::lock_guard<std::mutex> lock(hits_mutex);
        hits.emplace_back(canonical_form(c), std::move(full));
    };

    if (jobs == 1) {
        std::size_t done = 0;
        for (const ColoredCycle& c : classes) {
            process(c);
            if (checkpoint.is_open()) {
                checkpoint << canonical_form(c) << "\n";
                if (++done % 100 == 0) checkpoint.flush();
            }
        }
    } else {
        std::exception_ptr worker_error;
        std::mutex error_mutex;
        std::vector<std::thread> threads;
        for (int t = 0; t < jobs; ++t)
            threads.emplace_back([&] {
                while (true) {
                    std::size_t idx = cursor.fetch_add(1);
                    if (idx >= classes.size()) return;
                    try {
                        process(classes[idx]);
                    } catch (...) {
                        std::lock_guard<std::mutex> lock(error_mutex);
                        if (!worker_error) worker_error = std::current_exception();
                        return;
                    }
                }
            });
        for (std::thread& t : threads) t.join();
        if (worker_error) std::rethrow_exception(worker_error);
        // Parallel runs checkpoint only completed scans, in order.
        if (checkpoint.is_open())
            for (const ColoredCycle& c : classes) checkpoint << canonical_form(c) << "\n";
    }

    std::sort(hits.begin(), hits.end(),
              [](const auto& a, const auto& b) { return a.first < b.first; });
    std::vector<ConjectureReport> out;
    out.reserve(hits.size());
    for (auto& [enc, report] : hits) out.push_back(std::move(report));
    return out;
}

ColoredCycle construct_counterexample_even(int half_length) {
    int m = half_length;
    bool even_branch = m % 2 == 0;
    if (even_branch && m < 4)
        fail(Error::Code::BadLength, "even branch needs m >= 4");
    if (!even_branch && m < 5)
        fail(Error::Code::BadLength, "odd branch needs m >= 5");

    // Even m: glue the two alternating-vertex paths with two connector
    // edges of one fresh color. Dropping both endpoints of either path
    // yields the same configuration two vertices shorter, so both the
    // shorter-arc and complement-arc determinants of sigma_{1,m} and
    // sigma_{m+1,2m} match, while the swapped vertex alternation defeats
    // the one candidate reflection.
    //
    // Odd m: gluing the two swapped-edge paths does NOT work - dropping
    // both endpoints leaves swapped-edge paths whose odd positions are the
    // pairwise-distinct colors, and their determinants differ, which the
    // adjugate oracle confirms. Instead the arc is repeated verbatim and
    // the two connectors get two distinct fresh colors: identical arcs
    // force the binomial, and the distinct connectors defeat the rotation
    // while the distinct even-position colors defeat the reflection axis
    // through both connector edges.
    auto [p, q] = even_branch ? gen_even_config(m) : gen_odd_config(m);
    if (!even_branch) q = p;
    int connector = 1 + *std::max_element(p.edge_colors.begin(), p.edge_colors.end());
    int closing_connector = even_branch ? connector : connector + 1;

    ColoredCycle c;
    c.n = 2 * m;
    c.vertex_colors = p.vertex_colors;
    c.vertex_colors.insert(c.vertex_colors.end(), q.vertex_colors.begin(),
                           q.vertex_colors.end());
    c.edge_colors = p.edge_colors;                    // edges 1..m-1
    c.edge_colors.push_back(connector);               // edge m = {m, m+1}
    c.edge_colors.insert(c.edge_colors.end(), q.edge_colors.begin(), q.edge_colors.end());
    c.edge_colors.push_back(closing_connector);       // edge 2m = {2m, 1}
    return c;
}

}  // namespace cycleideal
