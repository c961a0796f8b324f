#pragma once

// Bundled example colorings, mirroring the JSON files shipped under
// fixtures/. The verification suites use these directly so they work from
// any working directory; a unit test keeps the files and these builders in
// sync.

#include <string>
#include <vector>

#include "cycleideal/model.hpp"

namespace cycleideal {
namespace fixtures {

ColoredCycle fig2();                // 4-cycle with one reflection symmetry
ColoredCycle fig4();                // 6-cycle with a rich reflection-induced linear part
ColoredCycle fig5();                // 8-cycle, glued even configuration
ColoredCycle fig6();                // 10-cycle, repeated arc with distinct connectors
ColoredCycle fig7();                // 4-cycle, identical opposite arcs
ColoredCycle fig8();                // 9-cycle, identical shifted arcs
ColoredCycle fig9();                // uniform-edge 6-cycle with arc cancellation
ColoredCycle fig10();               // uniform-vertex 6-cycle
ColoredCycle uniform_vertex_9();    // uniform-vertex 9-cycle

ColoredGraph example55_g1();        // uniform-vertex graphs with equal determinants
ColoredGraph example55_g2();
ColoredGraph example55_g3();        // uniform-edge graphs with equal determinants
ColoredGraph example55_g4();

// Fixture file stem -> object, for every bundled fixture.
std::vector<std::pair<std::string, ColoredObject>> all();

}  // namespace fixtures
}  // namespace cycleideal
