#pragma once

#include <string>

#include "chartcalc/chart.hpp"

namespace chartcalc {

// Orientation-preserving-isomorphism invariant of the chart: rotation
// system, labels, edge orientations, vertex kinds and the nesting forest all
// enter the encoding. Two charts have equal codes iff one is a relabeling of
// the other preserving all of these. Mirrors are not identified.
std::string canonical_code(const Chart& chart);

// Code of the chart restricted to its main part (free edges and simple
// hoops dropped). Used to compare charts modulo brim content.
std::string canonical_code_main(const Chart& chart);

bool isomorphic(const Chart& a, const Chart& b);

}  // namespace chartcalc
