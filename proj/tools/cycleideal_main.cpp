// Command-line front door: exact symbolic determinants, covariance
// numerators, conjecture reports, configuration generators, coloring-space
// searches, and the named verification suites.
//
// Exit codes: 0 success, 1 verification failure, 2 usage or input error.

#include <cstdlib>
#include <iostream>
#include <fstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "cycleideal/configs.hpp"
#include "cycleideal/covariance.hpp"
#include "cycleideal/determinant.hpp"
#include "cycleideal/ideal.hpp"
#include "cycleideal/search.hpp"
#include "cycleideal/verify.hpp"

namespace {

using namespace cycleideal;
using nlohmann::ordered_json;

int default_jobs() {
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

Polynomial det_of(const ColoredObject& obj) {
    if (const auto* p = std::get_if<ColoredPath>(&obj)) return det_path_disjoint(*p);
    if (const auto* c = std::get_if<ColoredCycle>(&obj))
        return det_symbolic(concentration_matrix(*c));
    return det_general(std::get<ColoredGraph>(obj));
}

ordered_json path_json(const ColoredPath& p) {
    return ordered_json::parse(serialize(ColoredObject(p)));
}

int run_det(const std::string& file, bool json) {
    Polynomial det = det_of(load_colored_file(file));
    if (json) {
        ordered_json doc;
        doc["det"] = det.str();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << det.str() << "\n";
    }
    return 0;
}

int run_sigma(const std::string& file, int i, int j, bool json) {
    ColoredObject obj = load_colored_file(file);
    const ColoredCycle& c = as_cycle(obj);
    CovarianceNumerator num = sigma_numerator(c, i, j);
    if (json) {
        ordered_json doc;
        doc["i"] = num.i;
        doc["j"] = num.j;
        doc["numerator"] = num.numerator.str();
        if (num.i != num.j) {
            doc["shorter_part"] = num.shorter_part.str();
            doc["complement_part"] = num.complement_part.str();
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "sigma_{" << num.i << "," << num.j << "} = N / det(K) with N = "
                  << num.numerator.str() << "\n";
        if (num.i != num.j) {
            std::cout << "  shorter arc:    " << num.shorter_part.str() << "\n";
            std::cout << "  complement arc: " << num.complement_part.str() << "\n";
        }
    }
    return 0;
}

int run_check(const std::string& file, bool json) {
    ColoredObject obj = load_colored_file(file);
    const ColoredCycle& c = as_cycle(obj);
    ConjectureReport report = conjecture_status(c);
    std::cout << (json ? report_to_json(report) : report_to_text(report));
    if (json) std::cout << "\n";
    return 0;  // check reports; it does not judge
}

int run_linear_part(const std::string& file, bool json) {
    ColoredObject obj = load_colored_file(file);
    const ColoredCycle& c = as_cycle(obj);
    LinearPart lp = linear_part(c);
    if (json) {
        ordered_json doc;
        doc["dimension"] = lp.dimension();
        ordered_json gens = ordered_json::array();
        for (const LinearBinomial& b : lp.binomial_generators) gens.push_back(to_string(b));
        doc["binomial_generators"] = gens;
        ordered_json extras = ordered_json::array();
        for (const LinearForm& form : lp.extra_forms) extras.push_back(to_string(form));
        doc["extra_forms"] = extras;
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "linear part dimension: " << lp.dimension() << "\n";
        std::cout << "binomial generators (" << lp.binomial_generators.size() << "):\n";
        for (const LinearBinomial& b : lp.binomial_generators)
            std::cout << "  " << to_string(b) << "\n";
        std::cout << "extra linear forms (" << lp.extra_forms.size() << "):\n";
        for (const LinearForm& form : lp.extra_forms) std::cout << "  " << to_string(form) << "\n";
    }
    return 0;
}

int run_configs_gen(int even_m, int odd_m, bool json) {
    auto [p, q] = even_m > 0 ? gen_even_config(even_m) : gen_odd_config(odd_m);
    if (json) {
        ordered_json doc;
        doc["p"] = path_json(p);
        doc["q"] = path_json(q);
        doc["det"] = det_path_disjoint(p).str();
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << "P: " << serialize(ColoredObject(p)) << "\n";
        std::cout << "Q: " << serialize(ColoredObject(q)) << "\n";
        std::cout << "det(K_P) = det(K_Q) = " << det_path_disjoint(p).str() << "\n";
    }
    return 0;
}

int run_configs_search(int m, int max_v, int max_e, bool json, int jobs) {
    PairSearchOptions opts;
    opts.jobs = jobs;
    auto pairs = exhaustive_pair_search(m, max_v, max_e, opts);
    if (json) {
        ordered_json doc = ordered_json::array();
        for (const PairSearchResult& pr : pairs) {
            ordered_json item;
            item["p"] = path_json(pr.p);
            item["q"] = path_json(pr.q);
            item["matches_known_configuration"] =
                matches_known_config_up_to_reflection(pr.p, pr.q);
            doc.push_back(item);
        }
        std::cout << doc.dump(2) << "\n";
    } else {
        std::cout << pairs.size() << " non-trivial equal-determinant pair(s)\n";
        for (const PairSearchResult& pr : pairs) {
            std::cout << "  P: " << serialize(ColoredObject(pr.p)) << "\n";
            std::cout << "  Q: " << serialize(ColoredObject(pr.q)) << "\n";
            if (!matches_known_config_up_to_reflection(pr.p, pr.q))
                std::cout << "  ^ outside the known configuration families\n";
        }
    }
    return 0;
}

int run_search(int n, const std::string& constraint_name, bool exhaustive, int sample,
               std::uint64_t seed, const std::string& out_file, int jobs) {
    Constraint constraint = constraint_from_string(constraint_name);
    Budget budget;
    if (exhaustive) {
        budget = Budget::exhaustive();
    } else if (sample > 0) {
        budget = Budget::sample(sample, seed);
    } else if (n >= 7 && constraint == Constraint::None) {
        // The full n>=7 product space is large; sampling is the default and
        // --exhaustive is the opt-in.
        budget = Budget::sample(10'000, seed);
        std::cerr << "note: defaulting to --sample 10000 --seed " << seed
                  << " (pass --exhaustive to opt in to the full scan)\n";
    } else {
        budget = Budget::exhaustive();
    }

    HuntOptions opts;
    opts.jobs = jobs;
    if (const char* dir = std::getenv("CYCLEIDEAL_CHECKPOINT_DIR");
        dir && budget.kind == Budget::Kind::Exhaustive) {
        opts.checkpoint_file = std::string(dir) + "/search-n" + std::to_string(n) + "-" +
                               constraint_name + ".ckpt";
        std::cerr << "note: checkpointing to " << *opts.checkpoint_file << "\n";
    }

    std::vector<ConjectureReport> hits = hunt(n, constraint, budget, opts);
    std::cout << "counterexamples found: " << hits.size() << "\n";
    for (const ConjectureReport& report : hits) std::cout << report_to_text(report) << "\n";
    if (!out_file.empty()) {
        ordered_json doc = ordered_json::array();
        for (const ConjectureReport& report : hits)
            doc.push_back(ordered_json::parse(report_to_json(report)));
        std::ofstream out(out_file);
        if (!out) fail(Error::Code::Parse, "cannot write " + out_file);
        out << doc.dump(2) << "\n";
    }
    return 0;
}

int run_verify(const std::string& suite, int jobs) {
    std::vector<CriterionResult> results = run_criteria(verify_suite_criteria(suite), jobs);
    bool all = true;
    for (const CriterionResult& r : results) {
        std::cout << (r.passed ? "PASS" : "FAIL") << " criterion " << r.id << ": " << r.name
                  << " (" << r.seconds << " s)\n";
        if (!r.detail.empty()) std::cout << r.detail;
        all = all && r.passed;
    }
    return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Exact symbolic computation for colored Gaussian cycles: linear binomials "
                 "in vanishing ideals, graph symmetries, and coloring-space searches"};
    app.require_subcommand(1);
    app.fallthrough();
    int jobs = default_jobs();
    app.add_option("--jobs", jobs, "worker thread cap")->capture_default_str();

    std::string file;
    bool json = false;

    auto* det_cmd = app.add_subcommand("det", "print the symbolic determinant of a colored object");
    det_cmd->add_option("file", file, "coloring JSON file")->required();
    det_cmd->add_flag("--json", json, "machine-readable output");

    int sigma_i = 0, sigma_j = 0;
    auto* sigma_cmd = app.add_subcommand("sigma", "print a covariance numerator of a cycle");
    sigma_cmd->add_option("file", file)->required();
    sigma_cmd->add_option("i", sigma_i)->required();
    sigma_cmd->add_option("j", sigma_j)->required();
    sigma_cmd->add_flag("--json", json);

    auto* check_cmd = app.add_subcommand("check", "report linear binomials, symmetries, and "
                                                  "unexplained binomials of a cycle");
    check_cmd->add_option("file", file)->required();
    check_cmd->add_flag("--json", json);

    auto* lp_cmd = app.add_subcommand("linear-part", "exact basis of the linear part of the "
                                                     "vanishing ideal");
    lp_cmd->add_option("file", file)->required();
    lp_cmd->add_flag("--json", json);

    auto* configs_cmd = app.add_subcommand("configs", "equal-determinant path configurations");
    configs_cmd->require_subcommand(1);
    int even_m = 0, odd_m = 0;
    auto* gen_cmd = configs_cmd->add_subcommand("gen", "generate a configuration pair");
    auto* even_opt = gen_cmd->add_option("--even", even_m, "even vertex count");
    gen_cmd->add_option("--odd", odd_m, "odd vertex count")->excludes(even_opt);
    gen_cmd->add_flag("--json", json);
    int search_m = 0, max_v = 0, max_e = 0;
    auto* psearch_cmd = configs_cmd->add_subcommand("search", "exhaustive pair search");
    psearch_cmd->add_option("m", search_m)->required();
    psearch_cmd->add_option("maxV", max_v)->required();
    psearch_cmd->add_option("maxE", max_e)->required();
    psearch_cmd->add_flag("--json", json);

    int search_n = 0, sample = 0;
    std::uint64_t seed = 1;
    bool exhaustive = false;
    std::string constraint_name = "none", out_file;
    auto* search_cmd = app.add_subcommand("search", "hunt colorings whose ideal has an "
                                                    "unexplained linear binomial");
    search_cmd->add_option("n", search_n)->required();
    search_cmd->add_option("--constraint", constraint_name,
                           "none | uniform-vertex | uniform-edge | uniform")
        ->capture_default_str();
    auto* ex_flag = search_cmd->add_flag("--exhaustive", exhaustive, "scan every canonical class");
    search_cmd->add_option("--sample", sample, "sample this many canonical classes")
        ->excludes(ex_flag);
    search_cmd->add_option("--seed", seed, "sampling seed")->capture_default_str();
    search_cmd->add_option("--out", out_file, "write a JSON report here");

    std::string suite;
    auto* verify_cmd = app.add_subcommand("verify", "run a named verification suite");
    verify_cmd->add_option("suite", suite, "figures | thm-3-5-7 | revised-conjecture | "
                                           "uniform-linear-part | path-lemmas")
        ->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (det_cmd->parsed()) return run_det(file, json);
        if (sigma_cmd->parsed()) return run_sigma(file, sigma_i, sigma_j, json);
        if (check_cmd->parsed()) return run_check(file, json);
        if (lp_cmd->parsed()) return run_linear_part(file, json);
        if (configs_cmd->parsed()) {
            if (gen_cmd->parsed()) {
                if (even_m == 0 && odd_m == 0) {
                    std::cerr << "configs gen needs --even m or --odd m\n";
                    return 2;
                }
                return run_configs_gen(even_m, odd_m, json);
            }
            return run_configs_search(search_m, max_v, max_e, json, jobs);
        }
        if (search_cmd->parsed())
            return run_search(search_n, constraint_name, exhaustive, sample, seed, out_file,
                              jobs);
        if (verify_cmd->parsed()) return run_verify(suite, jobs);
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
