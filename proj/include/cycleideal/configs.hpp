#pragma once

// Generators and classifiers for the non-trivial equal-determinant path
// pair configurations, plus exhaustive small-m search for such pairs.
//
// Even configuration (m even): both paths carry the same edge color
// sequence; one path alternates vertex colors a,b,a,b,... and the other
// b,a,b,a,....
//
// Odd configuration (m odd): both paths carry identical vertex color
// sequences whose odd positions share one color; the edge colors alternate
// two colors, swapped between the paths.

#include <utility>
#include <vector>

#include "cycleideal/model.hpp"

namespace cycleideal {

// Alternating vertex colors, m-1 pairwise distinct edge colors shared
// positionwise. m even, >= 4.
std::pair<ColoredPath, ColoredPath> gen_even_config(int m);

// Identical vertex sequences (odd positions one color, even positions
// pairwise distinct), two alternating edge colors swapped between the
// paths. m odd, >= 3; at m = 3 the partner is just the reflection.
std::pair<ColoredPath, ColoredPath> gen_odd_config(int m);

enum class PairClass { Identical, Reflection, EqualDetNontrivial, DifferentDet };

PairClass classify_pair(const ColoredPath& p, const ColoredPath& q);

// Shape predicates for the two configurations, checked positionwise on the
// given orientation.
bool matches_even_config(const ColoredPath& p, const ColoredPath& q);
bool matches_odd_config(const ColoredPath& p, const ColoredPath& q);

// Either predicate after trying both orders and reflecting either path.
bool matches_known_config_up_to_reflection(const ColoredPath& p, const ColoredPath& q);

struct PairSearchOptions {
    long long budget = 40'000'000'000LL;  // bound on (#labeled paths)^2
    int jobs = 1;
};

struct PairSearchResult {
    ColoredPath p, q;  // joint-canonical representatives
};

// All unordered pairs {P, Q} of colored paths on m vertices over a shared
// palette of max_v vertex colors and max_e edge colors whose determinants
// are equal while being neither identical nor reflections, deduplicated
// under simultaneous consistent renaming of both paths' colors.
std::vector<PairSearchResult> exhaustive_pair_search(int m, int max_v, int max_e,
                                                     const PairSearchOptions& options = {});

}  // namespace cycleideal
