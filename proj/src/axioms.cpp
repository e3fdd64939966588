#include "chartcalc/axioms.hpp"

#include <stdexcept>

namespace chartcalc {

const char* to_string(AxiomId a) {
  switch (a) {
    case AxiomId::I: return "i";
    case AxiomId::II: return "ii";
    case AxiomId::III: return "iii";
    case AxiomId::IV: return "iv";
  }
  return "?";
}

namespace {

// orientation of dart d at its vertex: true if the edge points away
bool dart_outward(const Chart& c, DartId d) {
  const EdgeRec& e = c.edges[c.darts[d].edge];
  return e.tail == d;
}

}  // namespace

AxiomReport validate_axioms(const Chart& chart) {
  AxiomReport rep;
  auto add = [&](AxiomId a, VertexId v, EdgeId e, std::string msg) {
    rep.violations.push_back({a, v, e, std::move(msg)});
  };

  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    Label l = chart.edges[e].label;
    if (l < 1 || l > chart.n - 1)
      add(AxiomId::II, kNoVertex, e,
          "label " + std::to_string(l) + " outside 1.." + std::to_string(chart.n - 1));
    if (chart.edges[e].closed) {
      if (!chart.is_anchor(chart.tail_vertex(e)) || !chart.is_anchor(chart.head_vertex(e)))
        add(AxiomId::I, kNoVertex, e, "closed edge attached to a real vertex");
    }
  }

  for (VertexId v = 0; v < static_cast<VertexId>(chart.vertices.size()); ++v) {
    const auto& vr = chart.vertices[v];
    const int deg = static_cast<int>(vr.rotation.size());
    switch (vr.kind) {
      case VertexKind::Anchor:
        if (deg != 2) add(AxiomId::I, v, kNoEdge, "anchor of degree " + std::to_string(deg));
        continue;
      case VertexKind::Black:
        if (deg != 1) add(AxiomId::I, v, kNoEdge, "black vertex of degree " + std::to_string(deg));
        continue;
      case VertexKind::Crossing: {
        if (deg != 4) {
          add(AxiomId::I, v, kNoEdge, "crossing of degree " + std::to_string(deg));
          continue;
        }
        Label l0 = chart.label_of(chart.edge_of(vr.rotation[0]));
        Label l1 = chart.label_of(chart.edge_of(vr.rotation[1]));
        Label l2 = chart.label_of(chart.edge_of(vr.rotation[2]));
        Label l3 = chart.label_of(chart.edge_of(vr.rotation[3]));
        if (l0 != l2 || l1 != l3) {
          add(AxiomId::IV, v, kNoEdge, "diagonal edges carry different labels");
          continue;
        }
        if (std::abs(l0 - l1) <= 1)
          add(AxiomId::IV, v, kNoEdge,
              "crossing labels " + std::to_string(l0) + "," + std::to_string(l1) +
                  " differ by at most 1");
        // coherent orientation: each diagonal pair has one inward, one
        // outward end
        if (dart_outward(chart, vr.rotation[0]) == dart_outward(chart, vr.rotation[2]))
          add(AxiomId::IV, v, kNoEdge, "diagonal of label " + std::to_string(l0) +
                                           " not coherently oriented");
        if (dart_outward(chart, vr.rotation[1]) == dart_outward(chart, vr.rotation[3]))
          add(AxiomId::IV, v, kNoEdge, "diagonal of label " + std::to_string(l1) +
                                           " not coherently oriented");
        continue;
      }
      case VertexKind::White: {
        if (deg != 6) {
          add(AxiomId::I, v, kNoEdge, "white vertex of degree " + std::to_string(deg));
          continue;
        }
        Label lo = chart.n, hi = 0;
        bool alt = true;
        for (int i = 0; i < 6; ++i) {
          Label li = chart.label_of(chart.edge_of(vr.rotation[i]));
          Label ln = chart.label_of(chart.edge_of(vr.rotation[(i + 1) % 6]));
          lo = std::min(lo, li);
          hi = std::max(hi, li);
          if (li == ln) alt = false;
        }
        if (!alt || hi - lo != 1) {
          add(AxiomId::III, v, kNoEdge, "white vertex labels do not alternate i,i+1");
          continue;
        }
        int inward = 0;
        for (int i = 0; i < 6; ++i)
          if (!dart_outward(chart, vr.rotation[i])) inward++;
        if (inward != 3) {
          add(AxiomId::III, v, kNoEdge,
              std::to_string(inward) + " inward arcs at a white vertex");
          continue;
        }
        bool consecutive = false;
        for (int s = 0; s < 6 && !consecutive; ++s) {
          bool ok = true;
          for (int j = 0; j < 3; ++j)
            if (dart_outward(chart, vr.rotation[(s + j) % 6])) ok = false;
          consecutive = ok;
        }
        if (!consecutive)
          add(AxiomId::III, v, kNoEdge, "inward arcs at a white vertex are not consecutive");
        continue;
      }
    }
  }
  return rep;
}

std::pair<DartId, DartId> middle_darts(const Chart& chart, VertexId v) {
  const auto& vr = chart.vertices[v];
  if (vr.kind != VertexKind::White || vr.rotation.size() != 6)
    throw std::runtime_error("middle_darts: not a white vertex");
  for (int s = 0; s < 6; ++s) {
    bool ok = true;
    for (int j = 0; j < 3; ++j)
      if (dart_outward(chart, vr.rotation[(s + j) % 6])) ok = false;
    if (ok) return {vr.rotation[(s + 1) % 6], vr.rotation[(s + 4) % 6]};
  }
  throw std::runtime_error("middle_darts: vertex violates the orientation condition");
}

bool is_middle(const Chart& chart, EdgeId e, VertexId v) {
  auto [min, mout] = middle_darts(chart, v);
  return chart.edge_of(min) == e || chart.edge_of(mout) == e;
}

}  // namespace chartcalc
