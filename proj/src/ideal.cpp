#include "cycleideal/ideal.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include <json.hpp>

#include "cycleideal/linalg.hpp"

namespace cycleideal {

std::string to_string(const LinearForm& form) {
    std::string out;
    for (const auto& [pair, coeff] : form) {
        if (coeff == 0) continue;
        if (!out.empty()) out += " ";
        out += (coeff < 0 ? "-" : "+");
        BigInt a = abs(coeff);
        if (a != 1) out += a.get_str() + "*";
        out += to_string(pair);
    }
    return out.empty() ? "0" : out;
}

std::vector<CovarianceNumerator> all_numerators(const ColoredCycle& c) {
    std::vector<CovarianceNumerator> out;
    out.reserve(static_cast<std::size_t>(c.n) * (c.n + 1) / 2);
    for (int i = 1; i <= c.n; ++i)
        for (int j = i; j <= c.n; ++j) out.push_back(sigma_numerator(c, i, j));
    return out;
}

namespace {

void check_size(const ColoredCycle& c, int max_n) {
    require_valid(c);
    if (c.n > max_n)
        fail(Error::Code::TooLarge, "cycle on " + std::to_string(c.n) +
                                        " vertices exceeds the configured bound " +
                                        std::to_string(max_n));
}

// Groups numerators by their canonical rendering; the rendering is
// injective on canonical polynomials, so bucket membership is exact
// equality.
std::unordered_map<std::string, std::vector<std::size_t>> bucket_by_rendering(
    const std::vector<CovarianceNumerator>& numerators) {
    std::unordered_map<std::string, std::vector<std::size_t>> buckets;
    for (std::size_t idx = 0; idx < numerators.size(); ++idx)
        buckets[numerators[idx].numerator.str()].push_back(idx);
    return buckets;
}

std::vector<LinearBinomial> binomials_from_buckets(
    const std::vector<CovarianceNumerator>& numerators,
    const std::unordered_map<std::string, std::vector<std::size_t>>& buckets) {
    std::vector<LinearBinomial> out;
    for (const auto& [rendering, members] : buckets) {
        for (std::size_t x = 0; x < members.size(); ++x)
            for (std::size_t y = x + 1; y < members.size(); ++y) {
                const CovarianceNumerator& nx = numerators[members[x]];
                const CovarianceNumerator& ny = numerators[members[y]];
                out.push_back(make_binomial(make_index_pair(nx.i, nx.j),
                                            make_index_pair(ny.i, ny.j)));
            }
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

std::vector<LinearBinomial> linear_binomials(const ColoredCycle& c, int max_n) {
    check_size(c, max_n);
    std::vector<CovarianceNumerator> numerators = all_numerators(c);
    return binomials_from_buckets(numerators, bucket_by_rendering(numerators));
}

LinearPart linear_part(const ColoredCycle& c, int max_n) {
    check_size(c, max_n);
    std::vector<CovarianceNumerator> numerators = all_numerators(c);
    auto buckets = bucket_by_rendering(numerators);

    LinearPart out;
    for (const CovarianceNumerator& num : numerators)
        out.pair_order.push_back(make_index_pair(num.i, num.j));

    // Kernel of sum a_k N_k = 0: null space of the transposed coefficient
    // matrix, computed fraction-free.
    std::vector<Polynomial> polys;
    polys.reserve(numerators.size());
    for (const CovarianceNumerator& num : numerators) polys.push_back(num.numerator);
    CoefficientMatrix cm = coefficient_matrix(polys);
    std::size_t p = numerators.size();
    IntMatrix transposed(cm.basis.size(), std::vector<BigInt>(p, BigInt(0)));
    for (std::size_t row = 0; row < p; ++row)
        for (std::size_t col = 0; col < cm.basis.size(); ++col)
            transposed[col][row] = cm.rows[row][col];
    out.kernel_basis = integer_kernel(std::move(transposed));

    // Binomial generators from equal-numerator buckets; they always lie in
    // the kernel, and usually span it.
    std::vector<std::vector<BigInt>> binomial_vectors;
    for (const auto& [rendering, members] : buckets) {
        for (std::size_t x = 1; x < members.size(); ++x) {
            const CovarianceNumerator& nr = numerators[members[0]];
            const CovarianceNumerator& nx = numerators[members[x]];
            out.binomial_generators.push_back(
                make_binomial(make_index_pair(nr.i, nr.j), make_index_pair(nx.i, nx.j)));
            std::vector<BigInt> v(p, BigInt(0));
            v[members[0]] = 1;
            v[members[x]] = -1;
            binomial_vectors.push_back(std::move(v));
        }
    }
    std::sort(out.binomial_generators.begin(), out.binomial_generators.end());

    if (out.kernel_basis.size() > binomial_vectors.size()) {
        std::vector<std::vector<BigInt>> span = binomial_vectors;
        for (const auto& vec : out.kernel_basis) {
            if (in_span(span, vec)) continue;
            span.push_back(vec);
            LinearForm form;
            for (std::size_t k = 0; k < p; ++k)
                if (vec[k] != 0) form.push_back({out.pair_order[k], vec[k]});
            out.extra_forms.push_back(std::move(form));
        }
    }
    return out;
}

ConjectureReport conjecture_status(const ColoredCycle& c, int max_n, bool with_linear_part) {
    check_size(c, max_n);
    ConjectureReport report;
    report.cycle = c;
    report.symmetry_group = symmetries(c);

    std::vector<CovarianceNumerator> numerators = all_numerators(c);
    auto buckets = bucket_by_rendering(numerators);
    report.binomials = binomials_from_buckets(numerators, buckets);
    for (const LinearBinomial& b : report.binomials) {
        if (!explains(c, b)) report.unexplained.push_back(b);
    }

    std::map<IndexPair, std::string> rendering_by_pair;
    for (const CovarianceNumerator& num : numerators)
        rendering_by_pair[make_index_pair(num.i, num.j)] = num.numerator.str();
    for (const LinearBinomial& b : report.binomials)
        report.numerator_rendering[b] = rendering_by_pair[b.first];

    if (with_linear_part && c.n <= kLinearPartMaxN) {
        report.extra_linear_forms = linear_part(c).extra_forms;
        report.linear_part_skipped = false;
    } else {
        report.linear_part_skipped = true;
    }
    return report;
}

namespace {

using nlohmann::ordered_json;

ordered_json pair_json(const IndexPair& p) { return ordered_json::array({p.a, p.b}); }

ordered_json binomial_json(const ConjectureReport& report, const LinearBinomial& b) {
    ordered_json j;
    j["first"] = pair_json(b.first);
    j["second"] = pair_json(b.second);
    auto it = report.numerator_rendering.find(b);
    if (it != report.numerator_rendering.end()) j["numerator"] = it->second;
    return j;
}

}  // namespace

std::string report_to_json(const ConjectureReport& report) {
    ordered_json doc;
    doc["cycle"] = ordered_json::parse(serialize(ColoredObject(report.cycle)));
    doc["symmetry"]["order"] = report.symmetry_group_order();
    ordered_json elements = ordered_json::array();
    for (const DihedralElement& s : report.symmetry_group) {
        ordered_json e;
        e["kind"] = s.kind == DihedralElement::Kind::Rotation ? "rotation" : "reflection";
        e["parameter"] = s.parameter;
        elements.push_back(e);
    }
    doc["symmetry"]["elements"] = elements;
    ordered_json binomials = ordered_json::array();
    for (const LinearBinomial& b : report.binomials) binomials.push_back(binomial_json(report, b));
    doc["binomials"] = binomials;
    ordered_json unexplained = ordered_json::array();
    for (const LinearBinomial& b : report.unexplained)
        unexplained.push_back(binomial_json(report, b));
    doc["unexplained"] = unexplained;
    ordered_json extras = ordered_json::array();
    for (const LinearForm& form : report.extra_linear_forms) {
        ordered_json terms = ordered_json::array();
        for (const auto& [pair, coeff] : form) {
            ordered_json t;
            t["pair"] = pair_json(pair);
            t["coeff"] = coeff.get_str();
            terms.push_back(t);
        }
        extras.push_back(terms);
    }
    doc["extra_linear_forms"] = extras;
    doc["linear_part_skipped"] = report.linear_part_skipped;
    doc["conjecture_holds"] = report.conjecture_holds();
    return doc.dump(2);
}

std::string report_to_text(const ConjectureReport& report) {
    std::ostringstream out;
    out << "cycle: " << canonical_form(report.cycle) << "\n";
    out << "symmetry group order: " << report.symmetry_group_order() << "\n";
    out << "linear binomials (" << report.binomials.size() << "):\n";
    for (const LinearBinomial& b : report.binomials) {
        out << "  " << to_string(b);
        auto it = report.numerator_rendering.find(b);
        if (it != report.numerator_rendering.end()) out << "   [N = " << it->second << "]";
        out << "\n";
    }
    out << "unexplained (" << report.unexplained.size() << "):\n";
    for (const LinearBinomial& b : report.unexplained) out << "  " << to_string(b) << "\n";
    if (report.linear_part_skipped) {
        out << "extra linear forms: skipped (cycle too large)\n";
    } else {
        out << "extra linear forms (" << report.extra_linear_forms.size() << "):\n";
        for (const LinearForm& form : report.extra_linear_forms)
            out << "  " << to_string(form) << "\n";
    }
    out << "conjecture holds: " << (report.conjecture_holds() ? "yes" : "no") << "\n";
    return out.str();
}

}  // namespace cycleideal
