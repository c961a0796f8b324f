#pragma once

// Dihedral symmetries of colored cycles and the linear binomials they
// induce. A symmetry is a rotation or reflection of the vertex indices
// that preserves every vertex color and every edge color; transporting an
// index pair {i,j} to {s(i),s(j)} by such an element yields the binomial
// sigma_ij - sigma_{s(i)s(j)}.

#include <set>
#include <vector>

#include "cycleideal/model.hpp"

namespace cycleideal {

struct DihedralElement {
    enum class Kind { Rotation, Reflection };

    Kind kind = Kind::Rotation;
    int parameter = 0;  // r in 0..n-1; rotation i -> i+r, reflection i -> r+2-i (mod n)

    int apply(int vertex, int n) const;
    bool is_identity() const { return kind == Kind::Rotation && parameter == 0; }

    friend auto operator<=>(const DihedralElement&, const DihedralElement&) = default;
};

std::vector<DihedralElement> all_dihedral(int n);
DihedralElement compose(const DihedralElement& a, const DihedralElement& b, int n);  // a after b
DihedralElement inverse(const DihedralElement& a, int n);
std::string to_string(const DihedralElement& e);

// Unordered pair of vertex indices with a <= b.
struct IndexPair {
    int a = 0, b = 0;
    friend auto operator<=>(const IndexPair&, const IndexPair&) = default;
};

IndexPair make_index_pair(int x, int y);
std::string to_string(const IndexPair& p);  // "sigma_{a,b}"

// sigma_{first} - sigma_{second}, an unordered pair of distinct index pairs
// stored with first < second.
struct LinearBinomial {
    IndexPair first, second;
    friend auto operator<=>(const LinearBinomial&, const LinearBinomial&) = default;
};

LinearBinomial make_binomial(IndexPair p, IndexPair q);  // orders, requires p != q
std::string to_string(const LinearBinomial& b);

// The subgroup of the 2n dihedral elements preserving the coloring; always
// contains the identity.
std::vector<DihedralElement> symmetries(const ColoredCycle& c);

bool is_symmetry(const ColoredCycle& c, const DihedralElement& s);

// All binomials {(i,j), (s(i),s(j))} with {i,j} != {s(i),s(j)} as index
// sets. Throws Error{NotASymmetry} when s does not preserve the coloring.
std::set<LinearBinomial> induced_binomials(const ColoredCycle& c, const DihedralElement& s);

// True iff some symmetry of c maps the index set of b.first onto b.second.
bool explains(const ColoredCycle& c, const LinearBinomial& b);

// Cycle relabeled by s: vertex s(i) receives the colors of vertex i.
ColoredCycle apply_dihedral(const ColoredCycle& c, const DihedralElement& s);

}  // namespace cycleideal
