#pragma once

// Exact sparse multivariate polynomials over two disjoint variable
// namespaces: vertex-color variables (printed v0, v1, ...) and edge-color
// variables (printed e0, e1, ...). Coefficients are arbitrary-precision
// integers; every polynomial is kept in canonical form (no zero exponents,
// no zero coefficients), so equality is plain term-map equality.
//
// The canonical text rendering writes terms in descending lexicographic
// monomial order, e.g. "+2*v0^2*e1 -1*e0^3", and parse() inverts it.

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace cycleideal {

using BigInt = mpz_class;

enum class VarKind : std::uint8_t { Vertex = 0, Edge = 1 };

// A color variable. All vertex-color variables order before all edge-color
// variables, then by label.
struct VariableId {
    VarKind kind = VarKind::Vertex;
    int label = 0;

    friend auto operator<=>(const VariableId&, const VariableId&) = default;
};

inline VariableId vertex_var(int label) { return {VarKind::Vertex, label}; }
inline VariableId edge_var(int label) { return {VarKind::Edge, label}; }

std::string to_string(VariableId v);

// Power product with strictly positive exponents, factors sorted by variable.
class Monomial {
  public:
    Monomial() = default;

    static Monomial unit() { return Monomial(); }
    static Monomial var(VariableId v, int exp = 1);

    Monomial operator*(const Monomial& other) const;

    int degree(VarKind kind) const;
    int vertex_degree() const { return degree(VarKind::Vertex); }
    int edge_degree() const { return degree(VarKind::Edge); }
    bool is_unit() const { return factors_.empty(); }

    const std::vector<std::pair<VariableId, int>>& factors() const { return factors_; }

    // Lexicographic on the canonical variable order: the monomial with the
    // higher exponent on the earliest differing variable is the greater one.
    friend std::strong_ordering operator<=>(const Monomial& a, const Monomial& b);
    friend bool operator==(const Monomial& a, const Monomial& b) {
        return a.factors_ == b.factors_;
    }

    std::string str() const;

    // Builds a monomial from (variable, exponent) counts; zero exponents are
    // dropped, repeated variables accumulate.
    static Monomial from_counts(std::vector<std::pair<VariableId, int>> counts);

  private:
    std::vector<std::pair<VariableId, int>> factors_;
};

class Polynomial {
  public:
    // Terms held in descending monomial order so iteration matches the
    // canonical rendering.
    using TermMap = std::map<Monomial, BigInt, std::greater<Monomial>>;

    Polynomial() = default;  // zero

    static Polynomial constant(const BigInt& value);
    static Polynomial constant(long value) { return constant(BigInt(value)); }
    static Polynomial var(VariableId v, int exp = 1);
    static Polynomial term(const BigInt& coeff, const Monomial& m);

    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }
    const TermMap& terms() const { return terms_; }

    // Coefficient of a monomial (zero if absent).
    BigInt coefficient(const Monomial& m) const;

    Polynomial& operator+=(const Polynomial& other);
    Polynomial& operator-=(const Polynomial& other);
    Polynomial operator+(const Polynomial& other) const;
    Polynomial operator-(const Polynomial& other) const;
    Polynomial operator*(const Polynomial& other) const;
    Polynomial operator-() const;

    friend bool operator==(const Polynomial& a, const Polynomial& b) {
        return a.terms_ == b.terms_;
    }

    std::string str() const;
    static Polynomial parse(const std::string& text);

    void add_term(const Monomial& m, const BigInt& coeff);

  private:
    TermMap terms_;
};

enum class PolyOp { Add, Sub, Mul };

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op);

// (vertex degree, edge degree) of a monomial.
using Bidegree = std::pair<int, int>;

// Splits a polynomial into its bidegree-homogeneous parts; the parts sum
// back to the input.
std::map<Bidegree, Polynomial> bidegree_partition(const Polynomial& p);

struct CoefficientMatrix {
    std::vector<Monomial> basis;            // union of monomials, canonical order
    std::vector<std::vector<BigInt>> rows;  // one row per input polynomial
};

// Exact integer matrix of coefficients; rows are indexed by the input
// polynomials and columns by the shared monomial basis.
CoefficientMatrix coefficient_matrix(std::span<const Polynomial> ps);

}  // namespace cycleideal
