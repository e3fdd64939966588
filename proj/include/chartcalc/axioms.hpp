#pragma once

#include <string>
#include <vector>

#include "chartcalc/chart.hpp"

namespace chartcalc {

// i: degree set {1,4,6}; ii: label range; iii: white vertex pattern;
// iv: crossing pattern.
enum class AxiomId { I, II, III, IV };

const char* to_string(AxiomId a);

struct AxiomViolation {
  AxiomId axiom;
  VertexId site_vertex = kNoVertex;  // offending vertex, if any
  EdgeId site_edge = kNoEdge;        // offending edge, if any
  std::string message;
};

struct AxiomReport {
  std::vector<AxiomViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the four chart conditions. Anchors are invisible: a closed edge is
// treated as a vertexless circle. Pure; never fails.
AxiomReport validate_axioms(const Chart& chart);

// The two middle darts at a white vertex: first the central inward dart,
// then the central outward dart. Throws if v is not a white vertex of an
// axiom-valid neighborhood.
std::pair<DartId, DartId> middle_darts(const Chart& chart, VertexId v);

// True if edge e contains a middle arc at white vertex v.
bool is_middle(const Chart& chart, EdgeId e, VertexId v);

}  // namespace chartcalc
