#pragma once

// Linear-binomial membership in the vanishing ideal of a colored cycle,
// and the full linear part by exact kernel computation on covariance
// numerators: sigma_ij - sigma_xy lies in the ideal iff N_ij = N_xy as
// polynomials, and more generally sum a_ij sigma_ij lies in it iff
// sum a_ij N_ij = 0.

#include <map>
#include <string>
#include <vector>

#include "cycleideal/covariance.hpp"
#include "cycleideal/model.hpp"
#include "cycleideal/symmetry.hpp"

namespace cycleideal {

inline constexpr int kIdealMaxN = 12;
inline constexpr int kLinearPartMaxN = 10;

struct LinearFormTerm {
    IndexPair pair;
    BigInt coeff;
};

// A linear form sum coeff * sigma_pair; used for kernel members that are
// not in the span of the binomial generators.
using LinearForm = std::vector<LinearFormTerm>;

std::string to_string(const LinearForm& form);

// All numerators N_ij for i <= j, in ascending (i, j) order.
std::vector<CovarianceNumerator> all_numerators(const ColoredCycle& c);

// All unordered pairs of distinct index pairs with equal numerators,
// found by bucketing canonical numerator renderings.
std::vector<LinearBinomial> linear_binomials(const ColoredCycle& c, int max_n = kIdealMaxN);

struct LinearPart {
    std::vector<IndexPair> pair_order;              // coordinate order of the vectors below
    std::vector<std::vector<BigInt>> kernel_basis;  // exact basis of the kernel
    std::vector<LinearBinomial> binomial_generators;
    std::vector<LinearForm> extra_forms;  // kernel members outside the binomial span
    int dimension() const { return static_cast<int>(kernel_basis.size()); }
};

LinearPart linear_part(const ColoredCycle& c, int max_n = kLinearPartMaxN);

struct ConjectureReport {
    ColoredCycle cycle;
    std::vector<DihedralElement> symmetry_group;  // includes the identity
    std::vector<LinearBinomial> binomials;
    std::vector<LinearBinomial> unexplained;  // subset of binomials
    std::vector<LinearForm> extra_linear_forms;
    bool linear_part_skipped = false;  // kernel not computed (n too large)
    // Canonical numerator rendering of each side, keyed by binomial.
    std::map<LinearBinomial, std::string> numerator_rendering;

    int symmetry_group_order() const { return static_cast<int>(symmetry_group.size()); }
    bool conjecture_holds() const { return unexplained.empty(); }
};

ConjectureReport conjecture_status(const ColoredCycle& c, int max_n = kIdealMaxN,
                                   bool with_linear_part = true);

std::string report_to_json(const ConjectureReport& report);
std::string report_to_text(const ConjectureReport& report);

}  // namespace cycleideal
