#pragma once

// Covariance numerators N_ij with sigma_ij = N_ij / det(K) for colored
// cycles. The two-arc expansion writes N_ij as
//   (-1)^{n_s+1} (prod of shorter-arc edge vars)    * det(cycle minus shorter arc)
// + (-1)^{n_c+1} (prod of complement-arc edge vars) * det(cycle minus complement arc)
// where n_s, n_c count arc vertices; for i = j the numerator is the
// principal minor det(cycle minus {i}). The adjugate cofactor computed on
// the full concentration matrix serves as an independent oracle, and the
// expansion must reproduce it exactly, signs included.

#include "cycleideal/determinant.hpp"
#include "cycleideal/model.hpp"
#include "cycleideal/poly.hpp"

namespace cycleideal {

struct CovarianceNumerator {
    int i = 0, j = 0;  // 1-indexed, i <= j
    Polynomial numerator;
    // Signed arc contributions; populated for i < j only, where
    // numerator = shorter_part + complement_part.
    Polynomial shorter_part;
    Polynomial complement_part;
};

CovarianceNumerator sigma_numerator(const ColoredCycle& c, int i, int j);

// adj(K)_ij computed as the (j,i) cofactor (-1)^{i+j} det(K with row j and
// column i removed).
Polynomial adjugate_oracle(const ColoredCycle& c, int i, int j, int max_n = kDetMaxN);
Polynomial adjugate_oracle(const ColoredGraph& g, int i, int j, int max_n = kDetMaxN);

}  // namespace cycleideal
