#include "chartcalc/features.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "chartcalc/axioms.hpp"

namespace chartcalc {

const char* to_string(EdgeKind k) {
  switch (k) {
    case EdgeKind::Free: return "free";
    case EdgeKind::TerminalI: return "terminal-I";
    case EdgeKind::TerminalO: return "terminal-O";
    case EdgeKind::Internal: return "internal";
    case EdgeKind::Hoop: return "hoop";
    case EdgeKind::Ring: return "ring";
  }
  return "?";
}

namespace {

// darts of Gamma_m incident to v, in rotation order
std::vector<DartId> label_darts_at(const Chart& c, VertexId v, Label m) {
  std::vector<DartId> out;
  for (DartId d : c.vertices[v].rotation)
    if (c.label_of(c.edge_of(d)) == m) out.push_back(d);
  return out;
}

}  // namespace

int whites_behind_face(const Chart& chart, FaceId f) {
  // whites of all components whose nesting chain passes through face f
  int count = 0;
  std::vector<char> behind(chart.component_count, 0);
  bool changed = true;
  std::vector<char> seeds(chart.component_count, 0);
  for (int k = 0; k < chart.component_count; ++k)
    if (chart.parent_face[k] == f) seeds[k] = behind[k] = 1;
  while (changed) {
    changed = false;
    for (int k = 0; k < chart.component_count; ++k) {
      if (behind[k] || chart.parent_component[k] < 0) continue;
      if (behind[chart.parent_component[k]]) behind[k] = changed = true;
    }
  }
  for (VertexId v = 0; v < static_cast<VertexId>(chart.vertices.size()); ++v)
    if (chart.is_white(v) && behind[chart.vertex_component[v]]) count++;
  return count;
}

bool hoop_is_simple(const Chart& chart, EdgeId closed_edge) {
  // bounded domain of the hoop = the component face that is not its outer
  // face: whites strictly nested behind it
  int comp = chart.component_of_edge(closed_edge);
  FaceId outer = chart.outer_face_of_component[comp];
  FaceId inner = kNoFace;
  for (FaceId f = 0; f < static_cast<FaceId>(chart.face_walks.size()); ++f)
    if (chart.face_component[f] == comp && f != outer) inner = f;
  if (inner == kNoFace) return true;
  return whites_behind_face(chart, inner) == 0;
}

namespace {

bool component_is_free_edge(const Chart& c, int comp) {
  EdgeId the_edge = kNoEdge;
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edges.size()); ++e) {
    if (c.component_of_edge(e) != comp) continue;
    if (the_edge != kNoEdge) return false;
    the_edge = e;
  }
  if (the_edge == kNoEdge) return false;
  return c.is_black(c.tail_vertex(the_edge)) && c.is_black(c.head_vertex(the_edge));
}

bool component_is_hoop(const Chart& c, int comp) {
  for (EdgeId e = 0; e < static_cast<EdgeId>(c.edges.size()); ++e)
    if (c.component_of_edge(e) == comp && !c.edges[e].closed) return false;
  for (VertexId v = 0; v < static_cast<VertexId>(c.vertices.size()); ++v)
    if (c.vertex_component[v] == comp && !c.is_anchor(v)) return false;
  return true;
}

// edges lying on some crossing-only cycle of their label
std::vector<char> ring_edges(const Chart& c) {
  std::vector<char> on_ring(c.edges.size(), 0);
  // restrict to edges whose endpoints are both crossings, per label, and
  // find cycles in that restriction
  for (Label m = 1; m <= c.n - 1; ++m) {
    std::vector<EdgeId> cand;
    for (EdgeId e = 0; e < static_cast<EdgeId>(c.edges.size()); ++e)
      if (c.label_of(e) == m && c.is_crossing(c.tail_vertex(e)) &&
          c.is_crossing(c.head_vertex(e)))
        cand.push_back(e);
    if (cand.empty()) continue;
    // a crossing has at most 2 incident edges of one label, so the
    // candidate subgraph is a disjoint union of paths and cycles; cycle
    // edges are those where every vertex on the walk has degree 2.
    std::map<VertexId, std::vector<EdgeId>> deg;
    for (EdgeId e : cand) {
      deg[c.tail_vertex(e)].push_back(e);
      deg[c.head_vertex(e)].push_back(e);
    }
    std::vector<char> alive(c.edges.size(), 0);
    for (EdgeId e : cand) alive[e] = 1;
    bool pruned = true;
    while (pruned) {
      pruned = false;
      for (auto& [v, es] : deg) {
        int live = 0;
        for (EdgeId e : es)
          if (alive[e]) live++;
        if (live == 1) {
          for (EdgeId e : es)
            if (alive[e]) alive[e] = 0, pruned = true;
        }
      }
    }
    for (EdgeId e : cand)
      if (alive[e]) on_ring[e] = 1;
  }
  return on_ring;
}

}  // namespace

EdgeClass classify_edge(const Chart& chart, EdgeId e) {
  if (e < 0 || e >= static_cast<EdgeId>(chart.edges.size()))
    throw std::runtime_error("classify_edge: unknown edge id");
  if (chart.edges[e].closed)
    return EdgeClass{EdgeKind::Hoop, hoop_is_simple(chart, e)};
  VertexId t = chart.tail_vertex(e), h = chart.head_vertex(e);
  if (chart.is_black(t) && chart.is_black(h)) return {EdgeKind::Free};
  if (chart.is_black(h) && chart.is_white(t)) return {EdgeKind::TerminalI};  // inward at black
  if (chart.is_black(t) && chart.is_white(h)) return {EdgeKind::TerminalO};
  if (ring_edges(chart)[e]) return {EdgeKind::Ring};
  return {EdgeKind::Internal};
}

ComplexityReport complexity(const Chart& chart) {
  ComplexityReport r;
  for (VertexId v = 0; v < static_cast<VertexId>(chart.vertices.size()); ++v) {
    if (chart.is_white(v)) r.w++;
    if (chart.is_crossing(v)) r.c++;
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e)
    if (!chart.edges[e].closed && chart.is_black(chart.tail_vertex(e)) &&
        chart.is_black(chart.head_vertex(e)))
      r.f++;
  for (const auto& walk : chart.face_walks) {
    if (walk.size() != 2) continue;
    if (chart.edge_of(walk[0]) == chart.edge_of(walk[1])) continue;
    VertexId u = chart.vertex_of(walk[0]), v = chart.vertex_of(walk[1]);
    if (chart.is_white(u) && chart.is_white(v)) r.b++;
  }
  return r;
}

bool component_in_main(const Chart& chart, int comp) {
  if (component_is_free_edge(chart, comp)) return false;
  if (component_is_hoop(chart, comp)) {
    for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e)
      if (chart.component_of_edge(e) == comp) return !hoop_is_simple(chart, e);
  }
  return true;
}

bool edge_in_main(const Chart& chart, EdgeId e) {
  return component_in_main(chart, chart.component_of_edge(e));
}

Chart normalize_brim(const Chart& chart) {
  Chart out = chart;
  out.placement_hints.clear();
  for (auto [w, d] : chart.placement_hints) {
    int comp = chart.vertex_component[w];
    if (!component_in_main(chart, comp)) continue;  // brim components float up
    out.placement_hints.emplace_back(w, d);
  }
  if (auto err = out.finalize()) throw std::runtime_error("normalize_brim: " + *err);
  return out;
}

MainReport main_report(const Chart& chart) {
  MainReport rep;
  rep.main_per_label.assign(chart.n, {});
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    if (!edge_in_main(chart, e))
      rep.brim_edges.push_back(e);
    else if (chart.label_of(e) >= 1 && chart.label_of(e) <= chart.n - 1)
      rep.main_per_label[chart.label_of(e)].push_back(e);
  }
  return rep;
}

LabelSubgraph label_subgraph(const Chart& chart, Label m) {
  if (m < 1 || m > chart.n - 1) throw std::runtime_error("label out of range");
  LabelSubgraph g;
  std::vector<char> seen(chart.vertices.size(), 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    if (chart.label_of(e) != m) continue;
    g.edges.push_back(e);
    for (VertexId v : {chart.tail_vertex(e), chart.head_vertex(e)})
      if (!seen[v]) seen[v] = 1, g.vertices.push_back(v);
  }
  return g;
}

std::optional<std::pair<Label, Label>> label_extrema(const Chart& chart) {
  Label lo = chart.n, hi = 0;
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    if (!chart.is_white(chart.tail_vertex(e)) && !chart.is_white(chart.head_vertex(e)))
      continue;
    lo = std::min(lo, chart.label_of(e));
    hi = std::max(hi, chart.label_of(e));
  }
  if (hi == 0) return std::nullopt;
  return std::make_pair(lo, hi);
}

bool Cycle::contains(VertexId v) const {
  return std::find(vertices.begin(), vertices.end(), v) != vertices.end();
}

std::vector<Cycle> cycles_of_label(const Chart& chart, Label m) {
  std::vector<Cycle> out;
  // hoops of label m
  std::vector<char> comp_done(chart.component_count, 0);
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    if (!chart.edges[e].closed || chart.label_of(e) != m) continue;
    int comp = chart.component_of_edge(e);
    if (comp_done[comp]) continue;
    comp_done[comp] = 1;
    Cycle c;
    c.label = m;
    for (EdgeId e2 = 0; e2 < static_cast<EdgeId>(chart.edges.size()); ++e2)
      if (chart.component_of_edge(e2) == comp) c.edges.push_back(e2);
    out.push_back(std::move(c));
  }
  // simple cycles through real vertices: backtracking with a canonical
  // start (smallest vertex, then smaller second vertex) to deduplicate
  LabelSubgraph g = label_subgraph(chart, m);
  std::map<VertexId, std::vector<EdgeId>> adj;
  for (EdgeId e : g.edges)
    if (!chart.edges[e].closed) {
      adj[chart.tail_vertex(e)].push_back(e);
      adj[chart.head_vertex(e)].push_back(e);
    }
  std::vector<VertexId> vstack;
  std::vector<EdgeId> estack;
  std::vector<char> onstack(chart.vertices.size(), 0);
  VertexId start = kNoVertex;
  auto dfs = [&](auto&& self, VertexId v) -> void {
    for (EdgeId e : adj[v]) {
      if (!estack.empty() && e == estack.back()) continue;
      VertexId w = chart.other_end(e, v);
      if (w == start && !estack.empty()) {
        // keep one orientation per cycle: first edge id below closing id
        if (estack.front() < e) {
          Cycle c;
          c.label = m;
          c.edges = estack;
          c.edges.push_back(e);
          c.vertices = vstack;
          out.push_back(std::move(c));
        }
        continue;
      }
      if (onstack[w] || w < start) continue;
      onstack[w] = 1;
      vstack.push_back(w);
      estack.push_back(e);
      self(self, w);
      estack.pop_back();
      vstack.pop_back();
      onstack[w] = 0;
    }
  };
  for (auto& [v, _] : adj) {
    start = v;
    onstack[v] = 1;
    vstack.assign(1, v);
    estack.clear();
    dfs(dfs, v);
    onstack[v] = 0;
  }
  return out;
}

std::vector<char> faces_enclosed(const Chart& chart, const std::vector<EdgeId>& curve) {
  std::vector<char> barrier(chart.edges.size(), 0);
  for (EdgeId e : curve) barrier[e] = 1;
  // flood regions from the outer region; passage between the two sides of a
  // non-barrier edge, plus region gluing which is already encoded in
  // region_of_face. We flood faces directly, seeded by all faces in the
  // outer region or glued to reached regions.
  std::vector<char> face_reached(chart.face_walks.size(), 0);
  std::vector<char> region_reached(chart.region_count, 0);
  region_reached[chart.outer_region] = 1;
  bool changed = true;
  while (changed) {
    changed = false;
    for (FaceId f = 0; f < static_cast<FaceId>(chart.face_walks.size()); ++f) {
      if (face_reached[f]) continue;
      if (region_reached[chart.region_of_face[f]]) {
        face_reached[f] = 1;
        changed = true;
        for (DartId d : chart.face_walks[f]) {
          if (barrier[chart.edge_of(d)]) continue;
          FaceId g2 = chart.face_left[chart.twin[d]];
          if (!region_reached[chart.region_of_face[g2]]) {
            region_reached[chart.region_of_face[g2]] = 1;
          }
        }
      }
    }
  }
  std::vector<char> enclosed(chart.face_walks.size(), 0);
  for (FaceId f = 0; f < static_cast<FaceId>(chart.face_walks.size()); ++f)
    enclosed[f] = !face_reached[f];
  return enclosed;
}

std::vector<CycleAnalysis> cycle_analysis(const Chart& chart, Label m) {
  std::vector<CycleAnalysis> out;
  for (Cycle& c : cycles_of_label(chart, m)) {
    CycleAnalysis ca;
    ca.cycle = c;
    std::vector<char> enclosed = faces_enclosed(chart, c.edges);
    std::vector<char> oncycle(chart.edges.size(), 0);
    for (EdgeId e : c.edges) oncycle[e] = 1;
    for (VertexId v : c.vertices) {
      if (!chart.is_white(v)) continue;
      ca.whites.push_back(v);
      bool found = false;
      auto [d_in, d_out] = middle_darts(chart, v);
      for (DartId d : {d_in, d_out}) {
        EdgeId e = chart.edge_of(d);
        if (chart.label_of(e) != m || oncycle[e]) continue;
        // outside edge: not inside the bounded disk
        bool inside = enclosed[chart.face_left[d]] && enclosed[chart.face_left[chart.twin[d]]];
        if (inside) continue;
        // must meet C only in white vertices (its endpoints)
        VertexId w2 = chart.other_end(e, v);
        if (c.contains(w2) && !chart.is_white(w2)) continue;
        found = true;
      }
      if (found) ca.whites_o_mid.push_back(v);
    }
    out.push_back(std::move(ca));
  }
  return out;
}

SCClosure sc_closure(const Chart& chart, const std::vector<EdgeId>& base) {
  SCClosure sc;
  sc.base = base;
  std::vector<char> in_base(chart.edges.size(), 0);
  for (EdgeId e : base) in_base[e] = 1;
  // B: faces unreachable from the outer region without crossing base edges
  sc.disk_faces = faces_enclosed(chart, base);
  for (EdgeId e : base) {
    sc.total_edges.insert(e);
    sc.total_vertices.insert(chart.tail_vertex(e));
    sc.total_vertices.insert(chart.head_vertex(e));
  }
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    if (sc.disk_faces[chart.face_left[chart.edges[e].tail]] &&
        sc.disk_faces[chart.face_left[chart.edges[e].head]]) {
      sc.total_edges.insert(e);
      sc.total_vertices.insert(chart.tail_vertex(e));
      sc.total_vertices.insert(chart.head_vertex(e));
    }
  }
  // terminal edges meeting X u B
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    EdgeClass k = classify_edge(chart, e);
    if (k.kind != EdgeKind::TerminalI && k.kind != EdgeKind::TerminalO) continue;
    VertexId white = chart.is_white(chart.tail_vertex(e)) ? chart.tail_vertex(e)
                                                          : chart.head_vertex(e);
    if (sc.total_vertices.count(white)) {
      sc.terminals.push_back(e);
      sc.total_edges.insert(e);
      sc.total_vertices.insert(chart.tail_vertex(e));
      sc.total_vertices.insert(chart.head_vertex(e));
    }
  }
  return sc;
}

std::vector<InternalArc> internal_arcs(const Chart& chart, Label m) {
  std::vector<InternalArc> arcs;
  std::vector<char> used(chart.edges.size(), 0);
  auto extend = [&](EdgeId e0, VertexId from) {
    // walk through crossings
    std::vector<EdgeId> run;
    EdgeId e = e0;
    VertexId v = from;
    while (true) {
      run.push_back(e);
      used[e] = 1;
      VertexId w = chart.other_end(e, v);
      if (!chart.is_crossing(w)) return std::make_pair(run, w);
      // continue across the crossing: the other edge of label m there
      EdgeId nxt = kNoEdge;
      for (DartId d : chart.vertices[w].rotation) {
        EdgeId e2 = chart.edge_of(d);
        if (e2 != e && chart.label_of(e2) == m) nxt = e2;
      }
      if (nxt == kNoEdge || used[nxt]) return std::make_pair(run, w);
      e = nxt;
      v = w;
    }
  };
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    if (chart.label_of(e) != m || used[e] || chart.edges[e].closed) continue;
    VertexId t = chart.tail_vertex(e);
    auto [run1, end1] = extend(e, chart.head_vertex(e));   // walk toward tail side
    used[e] = 0;
    auto [run2, end2] = extend(e, chart.tail_vertex(e));   // walk toward head side
    (void)t;
    InternalArc arc;
    arc.label = m;
    for (auto it = run1.rbegin(); it != run1.rend(); ++it) arc.edges.push_back(*it);
    for (std::size_t i = 1; i < run2.size(); ++i) arc.edges.push_back(run2[i]);
    arc.end1 = end1;
    arc.end2 = end2;
    if (chart.is_white(arc.end1) && chart.is_white(arc.end2)) arcs.push_back(arc);
  }
  return arcs;
}

std::vector<InternalArc> cut_arcs(const Chart& chart, Label m) {
  std::vector<InternalArc> cuts;
  LabelSubgraph g = label_subgraph(chart, m);
  auto count_components = [&](const std::vector<char>& removed) {
    std::map<VertexId, int> comp;
    int n = 0;
    for (VertexId v : g.vertices) comp[v] = -1;
    for (VertexId v : g.vertices) {
      if (comp[v] >= 0) continue;
      int c = n++;
      std::vector<VertexId> stack{v};
      comp[v] = c;
      while (!stack.empty()) {
        VertexId u = stack.back();
        stack.pop_back();
        for (EdgeId e : g.edges) {
          if (removed[e]) continue;
          if (chart.tail_vertex(e) != u && chart.head_vertex(e) != u) continue;
          VertexId w = chart.other_end(e, u);
          if (comp[w] < 0) comp[w] = c, stack.push_back(w);
        }
      }
    }
    return n;
  };
  std::vector<char> removed(chart.edges.size(), 0);
  int base = count_components(removed);
  for (const InternalArc& arc : internal_arcs(chart, m)) {
    for (EdgeId e : arc.edges) removed[e] = 1;
    if (count_components(removed) > base) cuts.push_back(arc);
    for (EdgeId e : arc.edges) removed[e] = 0;
  }
  return cuts;
}

bool label_subgraph_connected_in_main(const Chart& chart, Label m) {
  LabelSubgraph g = label_subgraph(chart, m);
  std::vector<EdgeId> main_edges;
  for (EdgeId e : g.edges)
    if (edge_in_main(chart, e)) main_edges.push_back(e);
  if (main_edges.empty()) return true;
  std::map<VertexId, int> comp;
  std::vector<VertexId> stack{chart.tail_vertex(main_edges[0])};
  comp[stack[0]] = 0;
  while (!stack.empty()) {
    VertexId u = stack.back();
    stack.pop_back();
    for (EdgeId e : main_edges) {
      if (chart.tail_vertex(e) != u && chart.head_vertex(e) != u) continue;
      VertexId w = chart.other_end(e, u);
      if (!comp.count(w)) comp[w] = 0, stack.push_back(w);
    }
  }
  for (EdgeId e : main_edges)
    if (!comp.count(chart.tail_vertex(e))) return false;
  return true;
}

}  // namespace chartcalc
