#include "cycleideal/fixtures.hpp"

#include <map>

namespace cycleideal {
namespace fixtures {

namespace {

std::vector<int> intern(const std::vector<std::string>& names, std::vector<std::string>& table) {
    std::map<std::string, int> index;
    std::vector<int> out;
    for (const std::string& name : names) {
        auto [it, inserted] = index.emplace(name, static_cast<int>(table.size()));
        if (inserted) table.push_back(name);
        out.push_back(it->second);
    }
    return out;
}

ColoredCycle make_cycle(const std::vector<std::string>& vertex_names,
                        const std::vector<std::string>& edge_names) {
    ColoredCycle c;
    c.n = static_cast<int>(vertex_names.size());
    c.vertex_colors = intern(vertex_names, c.names.vertex);
    c.edge_colors = intern(edge_names, c.names.edge);
    return c;
}

ColoredGraph make_graph(const std::vector<std::string>& vertex_names,
                        const std::vector<std::pair<int, int>>& edges,
                        const std::vector<std::string>& edge_names) {
    ColoredGraph g;
    g.n = static_cast<int>(vertex_names.size());
    g.edges = edges;
    g.vertex_colors = intern(vertex_names, g.names.vertex);
    g.edge_colors = intern(edge_names, g.names.edge);
    return g;
}

}  // namespace

ColoredCycle fig2() {
    return make_cycle({"red", "red", "yellow", "yellow"}, {"blue", "green", "blue", "green"});
}

ColoredCycle fig4() {
    return make_cycle({"red", "yellow", "yellow", "purple", "yellow", "yellow"},
                      {"blue", "green", "green", "green", "green", "blue"});
}

ColoredCycle fig5() {
    return make_cycle({"red", "yellow", "red", "yellow", "yellow", "red", "yellow", "red"},
                      {"brown", "green", "blue", "black", "brown", "green", "blue", "black"});
}

ColoredCycle fig6() {
    // The 10-cycle counterexample: the arc on 1..5 is repeated verbatim on
    // 6..10 and the two connector edges {5,6}, {10,1} carry distinct fresh
    // colors, so sigma_{1,5} - sigma_{6,10} lies in the ideal while no
    // dihedral symmetry survives.
    return make_cycle({"yellow", "orange", "yellow", "purple", "yellow", "yellow", "orange",
                       "yellow", "purple", "yellow"},
                      {"blue", "green", "blue", "green", "brown", "blue", "green", "blue",
                       "green", "black"});
}

ColoredCycle fig7() {
    return make_cycle({"red", "yellow", "red", "yellow"}, {"blue", "brown", "blue", "green"});
}

ColoredCycle fig8() {
    return make_cycle({"red", "yellow", "red", "red", "yellow", "red", "red", "yellow", "red"},
                      {"blue", "green", "brown", "blue", "green", "brown", "blue", "green",
                       "black"});
}

ColoredCycle fig9() {
    return make_cycle({"red", "red", "yellow", "orange", "yellow", "orange"},
                      {"blue", "blue", "blue", "blue", "blue", "blue"});
}

ColoredCycle fig10() {
    return make_cycle({"red", "red", "red", "red", "red", "red"},
                      {"green", "green", "brown", "green", "blue", "brown"});
}

ColoredCycle uniform_vertex_9() {
    return make_cycle({"red", "red", "red", "red", "red", "red", "red", "red", "red"},
                      {"blue", "green", "brown", "blue", "green", "brown", "blue", "green",
                       "black"});
}

ColoredGraph example55_g1() {
    return make_graph({"red", "red", "red", "red", "red", "red"},
                      {{1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}, {1, 6}},
                      {"blue", "blue", "blue", "blue", "green", "blue", "blue"});
}

ColoredGraph example55_g2() {
    return make_graph({"red", "red", "red", "red", "red", "red"},
                      {{1, 2}, {2, 3}, {3, 6}, {3, 4}, {4, 5}, {5, 6}, {1, 4}},
                      {"blue", "blue", "blue", "blue", "green", "blue", "blue"});
}

ColoredGraph example55_g3() {
    return make_graph({"red", "yellow", "yellow", "yellow", "yellow", "yellow"},
                      {{1, 2}, {2, 3}, {2, 5}, {3, 4}, {4, 5}, {5, 6}, {1, 6}},
                      {"blue", "blue", "blue", "blue", "blue", "blue", "blue"});
}

ColoredGraph example55_g4() {
    return make_graph({"red", "yellow", "yellow", "yellow", "yellow", "yellow"},
                      {{1, 2}, {2, 3}, {3, 6}, {3, 4}, {4, 5}, {5, 6}, {1, 4}},
                      {"blue", "blue", "blue", "blue", "blue", "blue", "blue"});
}

std::vector<std::pair<std::string, ColoredObject>> all() {
    return {
        {"fig2", fig2()},
        {"fig4", fig4()},
        {"fig5", fig5()},
        {"fig6", fig6()},
        {"fig7", fig7()},
        {"fig8", fig8()},
        {"fig9", fig9()},
        {"fig10", fig10()},
        {"uniform_vertex_9", uniform_vertex_9()},
        {"example55_g1", example55_g1()},
        {"example55_g2", example55_g2()},
        {"example55_g3", example55_g3()},
        {"example55_g4", example55_g4()},
    };
}

}  // namespace fixtures
}  // namespace cycleideal
