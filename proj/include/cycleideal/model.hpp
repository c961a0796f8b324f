#pragma once

// Colored paths, cycles, and general colored graphs.
//
// Vertices are 1-indexed. In a path on m vertices, edge k joins {k, k+1}
// for k in 1..m-1; in an n-cycle, edge k joins {k, k+1} with edge n
// wrapping to {n, 1}. Colors are dense 0-based ids, interned per
// namespace; display names (when an object came from a file) live in a
// side table and never affect semantics. The empty path (m = 0) is a
// permitted value so determinant conventions compose cleanly.

#include <optional>
#include <set>
#include <string>
#include <variant>
#include <vector>

#include "cycleideal/errors.hpp"

namespace cycleideal {

struct ColorNames {
    std::vector<std::string> vertex;  // vertex color id -> display name
    std::vector<std::string> edge;    // edge color id -> display name

    bool empty() const { return vertex.empty() && edge.empty(); }
};

struct ColoredPath {
    int m = 0;
    std::vector<int> vertex_colors;  // size m
    std::vector<int> edge_colors;    // size max(m-1, 0)
    ColorNames names;

    int vcolor(int v) const { return vertex_colors[static_cast<std::size_t>(v) - 1]; }
    int ecolor(int k) const { return edge_colors[static_cast<std::size_t>(k) - 1]; }
};

struct ColoredCycle {
    int n = 0;
    std::vector<int> vertex_colors;  // size n
    std::vector<int> edge_colors;    // size n
    ColorNames names;

    int vcolor(int v) const { return vertex_colors[static_cast<std::size_t>(v) - 1]; }
    int ecolor(int k) const { return edge_colors[static_cast<std::size_t>(k) - 1]; }
};

struct ColoredGraph {
    int n = 0;
    std::vector<std::pair<int, int>> edges;  // 1-indexed endpoints, a < b
    std::vector<int> vertex_colors;          // size n
    std::vector<int> edge_colors;            // parallel to edges
    ColorNames names;

    int vcolor(int v) const { return vertex_colors[static_cast<std::size_t>(v) - 1]; }
};

// Coloring equality; display names are ignored.
bool operator==(const ColoredPath& a, const ColoredPath& b);
bool operator==(const ColoredCycle& a, const ColoredCycle& b);
bool operator==(const ColoredGraph& a, const ColoredGraph& b);

using ColoredObject = std::variant<ColoredCycle, ColoredPath, ColoredGraph>;

enum class ValidationError { MissingColor, NamespaceCollision, BadEdge };

struct Invalid {
    ValidationError code;
    std::string detail;
};

std::optional<Invalid> validate(const ColoredPath& p);
std::optional<Invalid> validate(const ColoredCycle& c);
std::optional<Invalid> validate(const ColoredGraph& g);
std::optional<Invalid> validate(const ColoredObject& obj);

// Throws Error{Validation} when validate() reports a problem.
void require_valid(const ColoredObject& obj);

// Vertex i -> m+1-i; an involution.
ColoredPath reflect(const ColoredPath& p);

struct CyclePaths {
    ColoredPath shorter;
    ColoredPath complement;
    std::vector<int> shorter_vertices;     // 1-indexed, in path order
    std::vector<int> complement_vertices;  // 1-indexed, in path order
};

// The two arcs of the cycle between distinct vertices i and j, endpoints
// included. The arc with fewer vertices is the shorter one; an antipodal
// tie goes to the clockwise arc starting from min(i, j). Vertex counts of
// the two arcs sum to n + 2.
CyclePaths cycle_paths(const ColoredCycle& c, int i, int j);

// Removes a cyclically consecutive run of vertices (or a single vertex)
// and returns the induced path on the rest; removing everything yields the
// empty path. Throws Error{Disconnects} when the remainder is not a path.
ColoredPath delete_vertices(const ColoredCycle& c, const std::set<int>& s);

// Minimal encoding over the 2n dihedral relabelings composed with
// first-occurrence renumbering of vertex and edge colors. Two cycles get
// equal encodings iff they are related by such a transformation.
std::string canonical_form(const ColoredCycle& c);

// Rebuilds the representative cycle encoded by canonical_form().
ColoredCycle cycle_from_canonical(const std::string& encoding);

// JSON file format (see README): parse_colored() only checks structure;
// load_colored_file() also validates. serialize() round-trips.
ColoredObject parse_colored(const std::string& json_text);
ColoredObject load_colored_file(const std::string& path);
std::string serialize(const ColoredObject& obj);

const ColoredCycle& as_cycle(const ColoredObject& obj);  // throws unless a cycle

ColoredCycle make_uniform_cycle(int n);

}  // namespace cycleideal
