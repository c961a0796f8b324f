#include "cycleideal/model.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include <json.hpp>

namespace cycleideal {

bool operator==(const ColoredPath& a, const ColoredPath& b) {
    return a.m == b.m && a.vertex_colors == b.vertex_colors && a.edge_colors == b.edge_colors;
}

bool operator==(const ColoredCycle& a, const ColoredCycle& b) {
    return a.n == b.n && a.vertex_colors == b.vertex_colors && a.edge_colors == b.edge_colors;
}

bool operator==(const ColoredGraph& a, const ColoredGraph& b) {
    return a.n == b.n && a.edges == b.edges && a.vertex_colors == b.vertex_colors &&
           a.edge_colors == b.edge_colors;
}

namespace {

std::optional<Invalid> check_colors(const std::vector<int>& ids, std::size_t expected,
                                    const char* what) {
    if (ids.size() != expected)
        return Invalid{ValidationError::MissingColor,
                       std::string(what) + ": expected " + std::to_string(expected) +
                           " colors, got " + std::to_string(ids.size())};
    for (std::size_t i = 0; i < ids.size(); ++i)
        if (ids[i] < 0)
            return Invalid{ValidationError::MissingColor,
                           std::string(what) + ": entry " + std::to_string(i + 1) + " uncolored"};
    return std::nullopt;
}

std::optional<Invalid> check_names(const ColorNames& names, const std::vector<int>& vids,
                                   const std::vector<int>& eids) {
    if (names.empty()) return std::nullopt;
    for (int id : vids)
        if (id >= 0 && static_cast<std::size_t>(id) >= names.vertex.size())
            return Invalid{ValidationError::MissingColor,
                           "vertex color id " + std::to_string(id) + " has no name"};
    for (int id : eids)
        if (id >= 0 && static_cast<std::size_t>(id) >= names.edge.size())
            return Invalid{ValidationError::MissingColor,
                           "edge color id " + std::to_string(id) + " has no name"};
    std::set<std::string> vnames(names.vertex.begin(), names.vertex.end());
    if (vnames.size() != names.vertex.size())
        return Invalid{ValidationError::NamespaceCollision, "duplicate vertex color name"};
    std::set<std::string> enames(names.edge.begin(), names.edge.end());
    if (enames.size() != names.edge.size())
        return Invalid{ValidationError::NamespaceCollision, "duplicate edge color name"};
    for (const std::string& name : names.edge)
        if (vnames.count(name))
            return Invalid{ValidationError::NamespaceCollision,
                           "color \"" + name + "\" used for both a vertex and an edge"};
    return std::nullopt;
}

}  // namespace

std::optional<Invalid> validate(const ColoredPath& p) {
    if (p.m < 0) return Invalid{ValidationError::BadEdge, "negative vertex count"};
    std::size_t edges = p.m > 0 ? static_cast<std::size_t>(p.m - 1) : 0;
    if (auto bad = check_colors(p.vertex_colors, static_cast<std::size_t>(p.m), "path vertices"))
        return bad;
    if (auto bad = check_colors(p.edge_colors, edges, "path edges")) return bad;
    return check_names(p.names, p.vertex_colors, p.edge_colors);
}

std::optional<Invalid> validate(const ColoredCycle& c) {
    if (c.n < 3) return Invalid{ValidationError::BadEdge, "cycle needs at least 3 vertices"};
    if (auto bad = check_colors(c.vertex_colors, static_cast<std::size_t>(c.n), "cycle vertices"))
        return bad;
    if (auto bad = check_colors(c.edge_colors, static_cast<std::size_t>(c.n), "cycle edges"))
        return bad;
    return check_names(c.names, c.vertex_colors, c.edge_colors);
}

std::optional<Invalid> validate(const ColoredGraph& g) {
    if (g.n < 1) return Invalid{ValidationError::BadEdge, "graph needs at least 1 vertex"};
    if (auto bad = check_colors(g.vertex_colors, static_cast<std::size_t>(g.n), "graph vertices"))
        return bad;
    if (auto bad = check_colors(g.edge_colors, g.edges.size(), "graph edges")) return bad;
    std::set<std::pair<int, int>> seen;
    for (const auto& [a, b] : g.edges) {
        if (a < 1 || b < 1 || a > g.n || b > g.n)
            return Invalid{ValidationError::BadEdge,
                           "edge {" + std::to_string(a) + "," + std::to_string(b) +
                               "} out of range"};
        if (a == b)
            return Invalid{ValidationError::BadEdge, "self loop at vertex " + std::to_string(a)};
        auto key = std::minmax(a, b);
        if (!seen.insert(key).second)
            return Invalid{ValidationError::BadEdge,
                           "duplicate edge {" + std::to_string(key.first) + "," +
                               std::to_string(key.second) + "}"};
    }
    return check_names(g.names, g.vertex_colors, g.edge_colors);
}

std::optional<Invalid> validate(const ColoredObject& obj) {
    return std::visit([](const auto& o) { return validate(o); }, obj);
}

void require_valid(const ColoredObject& obj) {
    if (auto bad = validate(obj)) fail(Error::Code::Validation, bad->detail);
}

ColoredPath reflect(const ColoredPath& p) {
    ColoredPath out = p;
    std::reverse(out.vertex_colors.begin(), out.vertex_colors.end());
    std::reverse(out.edge_colors.begin(), out.edge_colors.end());
    return out;
}

namespace {

// Edge index (1-based) joining adjacent cycle vertices a and b.
int edge_index_between(int n, int a, int b) {
    if (a % n + 1 == b) return a;
    if (b % n + 1 == a) return b;
    fail(Error::Code::Internal, "vertices " + std::to_string(a) + "," + std::to_string(b) +
                                    " are not adjacent on the cycle");
}

ColoredPath path_from_vertices(const ColoredCycle& c, const std::vector<int>& vertices) {
    ColoredPath out;
    out.m = static_cast<int>(vertices.size());
    out.vertex_colors.reserve(vertices.size());
    for (int v : vertices) out.vertex_colors.push_back(c.vcolor(v));
    for (std::size_t k = 0; k + 1 < vertices.size(); ++k)
        out.edge_colors.push_back(c.ecolor(edge_index_between(c.n, vertices[k], vertices[k + 1])));
    out.names = c.names;
    return out;
}

}  // namespace

CyclePaths cycle_paths(const ColoredCycle& c, int i, int j) {
    if (i < 1 || j < 1 || i > c.n || j > c.n)
        fail(Error::Code::Validation, "vertex out of range");
    if (i == j) fail(Error::Code::SameVertex, "cycle_paths needs two distinct vertices");
    int lo = std::min(i, j);
    int hi = std::max(i, j);

    std::vector<int> forward;  // clockwise lo..hi
    for (int v = lo; v <= hi; ++v) forward.push_back(v);
    std::vector<int> wrapped;  // clockwise hi..lo through the wrap edge
    for (int v = hi; v != lo; v = v % c.n + 1) wrapped.push_back(v);
    wrapped.push_back(lo);

    bool forward_shorter = forward.size() <= wrapped.size();
    const std::vector<int>& shorter = forward_shorter ? forward : wrapped;
    const std::vector<int>& complement = forward_shorter ? wrapped : forward;

    CyclePaths out;
    out.shorter = path_from_vertices(c, shorter);
    out.complement = path_from_vertices(c, complement);
    out.shorter_vertices = shorter;
    out.complement_vertices = complement;
    return out;
}

ColoredPath delete_vertices(const ColoredCycle& c, const std::set<int>& s) {
    for (int v : s)
        if (v < 1 || v > c.n) fail(Error::Code::Validation, "vertex out of range");
    if (static_cast<int>(s.size()) == c.n) {
        ColoredPath empty;
        empty.names = c.names;
        return empty;
    }
    // The remainder is a path iff it is a single cyclic run, i.e. exactly
    // one remaining vertex has its predecessor removed.
    int start = 0, starts = 0;
    for (int v = 1; v <= c.n; ++v) {
        if (s.count(v)) continue;
        int prev = v == 1 ? c.n : v - 1;
        if (s.count(prev)) {
            ++starts;
            start = v;
        }
    }
    if (starts != 1)
        fail(Error::Code::Disconnects, "removing this vertex set does not leave a path");
    std::vector<int> vertices;
    int remaining = c.n - static_cast<int>(s.size());
    for (int v = start; static_cast<int>(vertices.size()) < remaining; v = v % c.n + 1)
        vertices.push_back(v);
    return path_from_vertices(c, vertices);
}

namespace {

std::vector<int> first_occurrence_renumber(const std::vector<int>& seq) {
    std::map<int, int> rename;
    std::vector<int> out;
    out.reserve(seq.size());
    for (int c : seq) {
        auto [it, inserted] = rename.emplace(c, static_cast<int>(rename.size()));
        out.push_back(it->second);
    }
    return out;
}

std::string encode(int n, const std::vector<int>& v, const std::vector<int>& e) {
    std::string out = std::to_string(n);
    out += "|";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(v[i]);
    }
    out += "|";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(e[i]);
    }
    return out;
}

}  // namespace

std::string canonical_form(const ColoredCycle& c) {
    int n = c.n;
    std::vector<int> best_v, best_e;
    bool have = false;
    std::vector<int> tv(n), te(n);
    // Transforms: position p reads vertex sigma(p); rotations sigma(p)=p+r,
    // reflections sigma(p)=r-p (0-based).
    for (int refl = 0; refl < 2; ++refl) {
        for (int r = 0; r < n; ++r) {
            for (int p = 0; p < n; ++p) {
                int vsrc = refl ? ((r - p) % n + n) % n : (p + r) % n;
                int esrc = refl ? ((r - p - 1) % n + n) % n : (p + r) % n;
                tv[p] = c.vertex_colors[vsrc];
                te[p] = c.edge_colors[esrc];
            }
            std::vector<int> rv = first_occurrence_renumber(tv);
            std::vector<int> re = first_occurrence_renumber(te);
            if (!have || std::tie(rv, re) < std::tie(best_v, best_e)) {
                best_v = std::move(rv);
                best_e = std::move(re);
                have = true;
            }
        }
    }
    return encode(n, best_v, best_e);
}

ColoredCycle cycle_from_canonical(const std::string& encoding) {
    auto bar1 = encoding.find('|');
    auto bar2 = encoding.find('|', bar1 == std::string::npos ? 0 : bar1 + 1);
    if (bar1 == std::string::npos || bar2 == std::string::npos)
        fail(Error::Code::Parse, "bad canonical encoding: " + encoding);
    auto parse_list = [&](const std::string& text) {
        std::vector<int> out;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) out.push_back(std::stoi(item));
        return out;
    };
    ColoredCycle c;
    c.n = std::stoi(encoding.substr(0, bar1));
    c.vertex_colors = parse_list(encoding.substr(bar1 + 1, bar2 - bar1 - 1));
    c.edge_colors = parse_list(encoding.substr(bar2 + 1));
    if (static_cast<int>(c.vertex_colors.size()) != c.n ||
        static_cast<int>(c.edge_colors.size()) != c.n)
        fail(Error::Code::Parse, "bad canonical encoding: " + encoding);
    return c;
}

namespace {

using nlohmann::ordered_json;

int intern(std::vector<std::string>& table, std::map<std::string, int>& index,
           const std::string& name) {
    auto [it, inserted] = index.emplace(name, static_cast<int>(table.size()));
    if (inserted) table.push_back(name);
    return it->second;
}

std::vector<int> intern_list(const ordered_json& arr, std::vector<std::string>& table,
                             const char* field) {
    if (!arr.is_array()) fail(Error::Code::Parse, std::string("field \"") + field + "\" must be an array");
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < table.size(); ++i) index.emplace(table[i], static_cast<int>(i));
    std::vector<int> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string())
            fail(Error::Code::Parse, std::string("field \"") + field + "\" entry " +
                                         std::to_string(i + 1) + " must be a string");
        out.push_back(intern(table, index, arr[i].get<std::string>()));
    }
    return out;
}

}  // namespace

ColoredObject parse_colored(const std::string& json_text) {
    ordered_json doc;
    try {
        doc = ordered_json::parse(json_text);
    } catch (const std::exception& e) {
        fail(Error::Code::Parse, std::string("invalid JSON: ") + e.what());
    }
    if (!doc.is_object()) fail(Error::Code::Parse, "top level must be a JSON object");
    for (const char* field : {"kind", "n", "vertex_colors", "edge_colors"})
        if (!doc.contains(field))
            fail(Error::Code::Parse, std::string("missing field \"") + field + "\"");
    if (!doc["kind"].is_string()) fail(Error::Code::Parse, "field \"kind\" must be a string");
    if (!doc["n"].is_number_integer()) fail(Error::Code::Parse, "field \"n\" must be an integer");
    std::string kind = doc["kind"].get<std::string>();
    int n = doc["n"].get<int>();

    ColorNames names;
    std::vector<int> vcolors = intern_list(doc["vertex_colors"], names.vertex, "vertex_colors");
    std::vector<int> ecolors = intern_list(doc["edge_colors"], names.edge, "edge_colors");

    if (kind == "cycle") {
        ColoredCycle c;
        c.n = n;
        c.vertex_colors = std::move(vcolors);
        c.edge_colors = std::move(ecolors);
        c.names = std::move(names);
        return c;
    }
    if (kind == "path") {
        ColoredPath p;
        p.m = n;
        p.vertex_colors = std::move(vcolors);
        p.edge_colors = std::move(ecolors);
        p.names = std::move(names);
        return p;
    }
    if (kind == "graph") {
        if (!doc.contains("edges"))
            fail(Error::Code::Parse, "missing field \"edges\" for kind=graph");
        if (!doc["edges"].is_array()) fail(Error::Code::Parse, "field \"edges\" must be an array");
        ColoredGraph g;
        g.n = n;
        g.vertex_colors = std::move(vcolors);
        g.edge_colors = std::move(ecolors);
        g.names = std::move(names);
        for (std::size_t i = 0; i < doc["edges"].size(); ++i) {
            const auto& e = doc["edges"][i];
            if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
                !e[1].is_number_integer())
                fail(Error::Code::Parse,
                     "field \"edges\" entry " + std::to_string(i + 1) + " must be [a, b]");
            int a = e[0].get<int>();
            int b = e[1].get<int>();
            g.edges.emplace_back(std::min(a, b), std::max(a, b));
        }
        return g;
    }
    fail(Error::Code::Parse, "unknown kind \"" + kind + "\" (expected cycle, path, or graph)");
}

ColoredObject load_colored_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Error::Code::Parse, "cannot open file: " + path);
    std::stringstream buffer;
    buffer << in.rdbuf();
    ColoredObject obj = parse_colored(buffer.str());
    require_valid(obj);
    return obj;
}

namespace {

ordered_json names_or_synthetic(const std::vector<int>& ids, const std::vector<std::string>& table,
                                const char* prefix) {
    ordered_json arr = ordered_json::array();
    for (int id : ids) {
        if (static_cast<std::size_t>(id) < table.size())
            arr.push_back(table[id]);
        else
            arr.push_back(std::string(prefix) + std::to_string(id));
    }
    return arr;
}

}  // namespace

std::string serialize(const ColoredObject& obj) {
    ordered_json doc;
    if (const auto* c = std::get_if<ColoredCycle>(&obj)) {
        doc["kind"] = "cycle";
        doc["n"] = c->n;
        doc["vertex_colors"] = names_or_synthetic(c->vertex_colors, c->names.vertex, "v");
        doc["edge_colors"] = names_or_synthetic(c->edge_colors, c->names.edge, "e");
    } else if (const auto* p = std::get_if<ColoredPath>(&obj)) {
        doc["kind"] = "path";
        doc["n"] = p->m;
        doc["vertex_colors"] = names_or_synthetic(p->vertex_colors, p->names.vertex, "v");
        doc["edge_colors"] = names_or_synthetic(p->edge_colors, p->names.edge, "e");
    } else {
        const auto& g = std::get<ColoredGraph>(obj);
        doc["kind"] = "graph";
        doc["n"] = g.n;
        doc["vertex_colors"] = names_or_synthetic(g.vertex_colors, g.names.vertex, "v");
        doc["edge_colors"] = names_or_synthetic(g.edge_colors, g.names.edge, "e");
        ordered_json edges = ordered_json::array();
        for (const auto& [a, b] : g.edges) edges.push_back(ordered_json::array({a, b}));
        doc["edges"] = edges;
    }
    return doc.dump();
}

const ColoredCycle& as_cycle(const ColoredObject& obj) {
    const auto* c = std::get_if<ColoredCycle>(&obj);
    if (!c) fail(Error::Code::Validation, "expected a colored cycle");
    return *c;
}

ColoredCycle make_uniform_cycle(int n) {
    ColoredCycle c;
    c.n = n;
    c.vertex_colors.assign(static_cast<std::size_t>(n), 0);
    c.edge_colors.assign(static_cast<std::size_t>(n), 0);
    return c;
}

}  // namespace cycleideal
