#include "cycleideal/covariance.hpp"

#include <algorithm>

namespace cycleideal {

namespace {

Polynomial arc_contribution(const ColoredCycle& c, const std::vector<int>& arc_vertices,
                            const ColoredPath& arc) {
    Polynomial edge_product = Polynomial::constant(1);
    for (int color : arc.edge_colors)
        edge_product = edge_product * Polynomial::var(edge_var(color));
    std::set<int> removed(arc_vertices.begin(), arc_vertices.end());
    Polynomial rest = det_path_disjoint(delete_vertices(c, removed));
    int sign = arc.m % 2 == 0 ? -1 : 1;  // (-1)^{#vertices + 1}
    return Polynomial::constant(sign) * edge_product * rest;
}

Polynomial adjugate_from_matrix(const SymbolicMatrix& m, int i, int j, int max_n) {
    // (j,i) cofactor; rows/cols are 0-indexed in the matrix.
    Polynomial minor_det = det_symbolic(m.minor_without(j - 1, i - 1), max_n);
    return ((i + j) % 2 == 0) ? minor_det : -minor_det;
}

}  // namespace

CovarianceNumerator sigma_numerator(const ColoredCycle& c, int i, int j) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > c.n) fail(Error::Code::Validation, "vertex out of range");
    CovarianceNumerator out;
    out.i = i;
    out.j = j;
    if (i == j) {
        out.numerator = det_path_disjoint(delete_vertices(c, {i}));
        return out;
    }
    CyclePaths arcs = cycle_paths(c, i, j);
    out.shorter_part = arc_contribution(c, arcs.shorter_vertices, arcs.shorter);
    out.complement_part = arc_contribution(c, arcs.complement_vertices, arcs.complement);
    out.numerator = out.shorter_part + out.complement_part;
    return out;
}

Polynomial adjugate_oracle(const ColoredCycle& c, int i, int j, int max_n) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > c.n) fail(Error::Code::Validation, "vertex out of range");
    if (c.n > max_n)
        fail(Error::Code::TooLarge, "cycle on " + std::to_string(c.n) +
                                        " vertices exceeds the configured bound " +
                                        std::to_string(max_n));
    return adjugate_from_matrix(concentration_matrix(c), i, j, max_n);
}

Polynomial adjugate_oracle(const ColoredGraph& g, int i, int j, int max_n) {
    if (i > j) std::swap(i, j);
    if (i < 1 || j > g.n) fail(Error::Code::Validation, "vertex out of range");
    if (g.n > max_n)
        fail(Error::Code::TooLarge, "graph on " + std::to_string(g.n) +
                                        " vertices exceeds the configured bound " +
                                        std::to_string(max_n));
    return adjugate_from_matrix(concentration_matrix(g), i, j, max_n);
}

}  // namespace cycleideal
