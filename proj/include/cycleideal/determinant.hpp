#pragma once

// Symbolic determinants of concentration matrices by independent routes:
// the disjoint-edge-set expansion for paths, the tridiagonal three-term
// recurrence, and a general memoized cofactor expansion. A concentration
// matrix has the vertex-color variable of vertex i at (i,i), the
// edge-color variable of {i,j} at (i,j), and structural zeros elsewhere.
// The determinant of the empty (0x0) matrix is the constant 1.

#include "cycleideal/model.hpp"
#include "cycleideal/poly.hpp"

namespace cycleideal {

inline constexpr int kDetMaxN = 12;

// Dense symbolic matrix, small enough for exact minor expansion.
class SymbolicMatrix {
  public:
    SymbolicMatrix() = default;
    explicit SymbolicMatrix(int n) : n_(n), cells_(static_cast<std::size_t>(n) * n) {}

    int size() const { return n_; }
    Polynomial& at(int r, int c) { return cells_[static_cast<std::size_t>(r) * n_ + c]; }
    const Polynomial& at(int r, int c) const {
        return cells_[static_cast<std::size_t>(r) * n_ + c];
    }

    SymbolicMatrix minor_without(int row, int col) const;

  private:
    int n_ = 0;
    std::vector<Polynomial> cells_;
};

SymbolicMatrix concentration_matrix(const ColoredPath& p);
SymbolicMatrix concentration_matrix(const ColoredCycle& c);
SymbolicMatrix concentration_matrix(const ColoredGraph& g);

// Cofactor expansion along rows, memoized on the bitmask of retained
// columns (at most 2^n entries, per-call). Throws Error{TooLarge} past
// max_n.
Polynomial det_symbolic(const SymbolicMatrix& m, int max_n = kDetMaxN);

// Sum over disjoint edge subsets S of (-1)^|S| * prod_{e in S} e^2 *
// prod_{v not covered} v, enumerated by skip-after-take recursion over the
// edge list.
Polynomial det_path_disjoint(const ColoredPath& p);

// Three-term recurrence det(K_k) = v_k det(K_{k-1}) - e_{k-1}^2 det(K_{k-2})
// with det(K_0) = 1 and det(K_1) = v_1.
Polynomial det_path_recurrence(const ColoredPath& p);

Polynomial det_general(const ColoredGraph& g, int max_n = kDetMaxN);

enum class ParityClass { AllOdd, AllEven, Mixed, Zero };

// Classifies the vertex-degree parity across all monomials.
ParityClass vertex_degree_parity(const Polynomial& p);

}  // namespace cycleideal
