#pragma once

// Exact integer linear algebra: fraction-free (Bareiss) elimination for
// ranks and null spaces. No floating point anywhere; intermediate entries
// stay exact thanks to arbitrary-precision integers.

#include <vector>

#include "cycleideal/poly.hpp"

namespace cycleideal {

using IntMatrix = std::vector<std::vector<BigInt>>;

// Exact quotient; throws if the division is not exact.
BigInt div_exact(const BigInt& a, const BigInt& b);

// Rank by fraction-free elimination with deterministic (first nonzero)
// pivoting.
int integer_rank(IntMatrix a);

// Basis of { x : a x = 0 } as primitive integer vectors with positive
// leading entry, one per free column, in ascending free-column order.
std::vector<std::vector<BigInt>> integer_kernel(IntMatrix a);

// True iff v lies in the rational row span of `rows`.
bool in_span(const std::vector<std::vector<BigInt>>& rows, const std::vector<BigInt>& v);

}  // namespace cycleideal
