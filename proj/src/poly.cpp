#include "cycleideal/poly.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "cycleideal/errors.hpp"

namespace cycleideal {

std::string to_string(VariableId v) {
    return (v.kind == VarKind::Vertex ? "v" : "e") + std::to_string(v.label);
}

Monomial Monomial::var(VariableId v, int exp) {
    Monomial m;
    if (exp < 0) fail(Error::Code::Internal, "negative exponent");
    if (exp > 0) m.factors_.emplace_back(v, exp);
    return m;
}

Monomial Monomial::from_counts(std::vector<std::pair<VariableId, int>> counts) {
    std::sort(counts.begin(), counts.end());
    Monomial m;
    for (const auto& [v, e] : counts) {
        if (e < 0) fail(Error::Code::Internal, "negative exponent");
        if (e == 0) continue;
        if (!m.factors_.empty() && m.factors_.back().first == v) {
            m.factors_.back().second += e;
        } else {
            m.factors_.emplace_back(v, e);
        }
    }
    return m;
}

Monomial Monomial::operator*(const Monomial& other) const {
    Monomial out;
    out.factors_.reserve(factors_.size() + other.factors_.size());
    auto ia = factors_.begin();
    auto ib = other.factors_.begin();
    while (ia != factors_.end() && ib != other.factors_.end()) {
        if (ia->first < ib->first) {
            out.factors_.push_back(*ia++);
        } else if (ib->first < ia->first) {
            out.factors_.push_back(*ib++);
        } else {
            out.factors_.emplace_back(ia->first, ia->second + ib->second);
            ++ia;
            ++ib;
        }
    }
    out.factors_.insert(out.factors_.end(), ia, factors_.end());
    out.factors_.insert(out.factors_.end(), ib, other.factors_.end());
    return out;
}

int Monomial::degree(VarKind kind) const {
    int d = 0;
    for (const auto& [v, e] : factors_)
        if (v.kind == kind) d += e;
    return d;
}

std::strong_ordering operator<=>(const Monomial& a, const Monomial& b) {
    auto ia = a.factors_.begin();
    auto ib = b.factors_.begin();
    while (ia != a.factors_.end() && ib != b.factors_.end()) {
        // A positive exponent on an earlier variable beats a zero one.
        if (ia->first < ib->first) return std::strong_ordering::greater;
        if (ib->first < ia->first) return std::strong_ordering::less;
        if (ia->second != ib->second) return ia->second <=> ib->second;
        ++ia;
        ++ib;
    }
    if (ia != a.factors_.end()) return std::strong_ordering::greater;
    if (ib != b.factors_.end()) return std::strong_ordering::less;
    return std::strong_ordering::equal;
}

std::string Monomial::str() const {
    std::string out;
    bool first = true;
    for (const auto& [v, e] : factors_) {
        if (!first) out += "*";
        first = false;
        out += to_string(v);
        if (e != 1) out += "^" + std::to_string(e);
    }
    return out;
}

Polynomial Polynomial::constant(const BigInt& value) {
    Polynomial p;
    if (value != 0) p.terms_.emplace(Monomial::unit(), value);
    return p;
}

Polynomial Polynomial::var(VariableId v, int exp) {
    return term(BigInt(1), Monomial::var(v, exp));
}

Polynomial Polynomial::term(const BigInt& coeff, const Monomial& m) {
    Polynomial p;
    if (coeff != 0) p.terms_.emplace(m, coeff);
    return p;
}

BigInt Polynomial::coefficient(const Monomial& m) const {
    auto it = terms_.find(m);
    return it == terms_.end() ? BigInt(0) : it->second;
}

void Polynomial::add_term(const Monomial& m, const BigInt& coeff) {
    if (coeff == 0) return;
    auto [it, inserted] = terms_.emplace(m, coeff);
    if (!inserted) {
        it->second += coeff;
        if (it->second == 0) terms_.erase(it);
    }
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
    for (const auto& [m, c] : other.terms_) add_term(m, -c);
    return *this;
}

Polynomial Polynomial::operator+(const Polynomial& other) const {
    Polynomial out = *this;
    out += other;
    return out;
}

Polynomial Polynomial::operator-(const Polynomial& other) const {
    Polynomial out = *this;
    out -= other;
    return out;
}

Polynomial Polynomial::operator*(const Polynomial& other) const {
    Polynomial out;
    for (const auto& [ma, ca] : terms_)
        for (const auto& [mb, cb] : other.terms_) out.add_term(ma * mb, ca * cb);
    return out;
}

Polynomial Polynomial::operator-() const {
    Polynomial out;
    for (const auto& [m, c] : terms_) out.terms_.emplace(m, -c);
    return out;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        if (!first) out += " ";
        first = false;
        out += (c < 0 ? "-" : "+");
        BigInt a = abs(c);
        out += a.get_str();
        if (!m.is_unit()) {
            out += "*";
            out += m.str();
        }
    }
    return out;
}

namespace {

[[noreturn]] void parse_fail(const std::string& text, std::size_t pos, const std::string& what) {
    fail(Error::Code::Parse,
         "polynomial parse error at offset " + std::to_string(pos) + ": " + what +
             " in \"" + text + "\"");
}

}  // namespace

Polynomial Polynomial::parse(const std::string& text) {
    Polynomial out;
    std::size_t i = 0;
    auto skip_spaces = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    skip_spaces();
    if (i < text.size() && text[i] == '0' && i + 1 == text.size()) return out;
    while (i < text.size()) {
        int sign = 1;
        if (text[i] == '+') {
            ++i;
        } else if (text[i] == '-') {
            sign = -1;
            ++i;
        } else {
            parse_fail(text, i, "expected sign");
        }
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start) parse_fail(text, i, "expected coefficient");
        BigInt coeff(text.substr(start, i - start));
        if (sign < 0) coeff = -coeff;
        std::vector<std::pair<VariableId, int>> counts;
        while (i < text.size() && text[i] == '*') {
            ++i;
            if (i >= text.size() || (text[i] != 'v' && text[i] != 'e'))
                parse_fail(text, i, "expected variable");
            VarKind kind = text[i] == 'v' ? VarKind::Vertex : VarKind::Edge;
            ++i;
            std::size_t lstart = i;
            while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
            if (i == lstart) parse_fail(text, i, "expected variable label");
            int label = std::stoi(text.substr(lstart, i - lstart));
            int exp = 1;
            if (i < text.size() && text[i] == '^') {
                ++i;
                std::size_t estart = i;
                while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
                if (i == estart) parse_fail(text, i, "expected exponent");
                exp = std::stoi(text.substr(estart, i - estart));
            }
            counts.emplace_back(VariableId{kind, label}, exp);
        }
        out.add_term(Monomial::from_counts(std::move(counts)), coeff);
        skip_spaces();
    }
    return out;
}

Polynomial poly_arith(const Polynomial& a, const Polynomial& b, PolyOp op) {
    switch (op) {
        case PolyOp::Add: return a + b;
        case PolyOp::Sub: return a - b;
        case PolyOp::Mul: return a * b;
    }
    fail(Error::Code::Internal, "bad PolyOp");
}

std::map<Bidegree, Polynomial> bidegree_partition(const Polynomial& p) {
    std::map<Bidegree, Polynomial> parts;
    for (const auto& [m, c] : p.terms())
        parts[{m.vertex_degree(), m.edge_degree()}].add_term(m, c);
    return parts;
}

CoefficientMatrix coefficient_matrix(std::span<const Polynomial> ps) {
    if (ps.empty()) fail(Error::Code::Internal, "coefficient_matrix: empty input");
    std::map<Monomial, std::size_t, std::greater<Monomial>> columns;
    for (const Polynomial& p : ps)
        for (const auto& [m, c] : p.terms()) columns.emplace(m, 0);
    CoefficientMatrix out;
    out.basis.reserve(columns.size());
    for (auto& [m, idx] : columns) {
        idx = out.basis.size();
        out.basis.push_back(m);
    }
    out.rows.reserve(ps.size());
    for (const Polynomial& p : ps) {
        std::vector<BigInt> row(out.basis.size(), BigInt(0));
        for (const auto& [m, c] : p.terms()) row[columns.at(m)] = c;
        out.rows.push_back(std::move(row));
    }
    return out;
}

}  // namespace cycleideal
