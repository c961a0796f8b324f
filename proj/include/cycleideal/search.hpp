#pragma once

// Enumeration of cycle colorings up to canonical equivalence, conjecture
// hunts over them, and reconstruction of the glued-path counterexample
// family. Vertex and edge colorings are enumerated independently as set
// partitions (restricted growth strings) and then deduplicated through
// canonical_form, so the full product space is never materialized twice.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "cycleideal/ideal.hpp"
#include "cycleideal/model.hpp"

namespace cycleideal {

enum class Constraint { None, UniformVertex, UniformEdge, Uniform };

Constraint constraint_from_string(const std::string& name);
std::string to_string(Constraint c);

// All restricted growth strings of the given length (all set partitions of
// the positions), emitted in lexicographic order.
void for_each_rgs(int length, const std::function<void(const std::vector<int>&)>& fn);

// Number of (vertex partition, edge partition) combinations scanned before
// the canonical quotient.
long long pre_quotient_count(int n, Constraint constraint);

// One representative per canonical class, in ascending encoding order.
// Representatives are their own canonical form.
std::vector<ColoredCycle> enumerate_colorings(int n, Constraint constraint);

struct Budget {
    enum class Kind { Exhaustive, Sample };
    Kind kind = Kind::Exhaustive;
    int sample_count = 0;
    std::uint64_t seed = 0;

    static Budget exhaustive() { return {}; }
    static Budget sample(int count, std::uint64_t seed) {
        return {Kind::Sample, count, seed};
    }
};

struct HuntOptions {
    int jobs = 1;
    // Exhaustive runs append each processed canonical encoding here and
    // skip past the last recorded one on restart.
    std::optional<std::string> checkpoint_file;
    // Counterexamples are re-verified against the adjugate cofactor when
    // the cycle is at most this large.
    int oracle_recheck_max_n = 8;
};

// Reports for every scanned coloring whose vanishing ideal contains an
// unexplained linear binomial, sorted by canonical encoding. Deterministic
// given (n, constraint, budget, seed), independent of the job count.
std::vector<ConjectureReport> hunt(int n, Constraint constraint, const Budget& budget,
                                   const HuntOptions& options = {});

// A 2m-cycle gluing the two paths of the matching configuration generator
// with two fresh same-colored connector edges; its ideal contains
// sigma_{1,m} - sigma_{m+1,2m} while the coloring defeats every dihedral
// symmetry. m even >= 4 or odd >= 5.
ColoredCycle construct_counterexample_even(int half_length);

}  // namespace cycleideal
