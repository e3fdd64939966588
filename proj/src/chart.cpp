#include "chartcalc/chart.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace chartcalc {

const char* to_string(VertexKind k) {
  switch (k) {
    case VertexKind::Black: return "black";
    case VertexKind::Crossing: return "crossing";
    case VertexKind::White: return "white";
    case VertexKind::Anchor: return "anchor";
  }
  return "?";
}

DartId Chart::dart_at(EdgeId e, VertexId v) const {
  if (tail_vertex(e) == v) return edges[e].tail;
  if (head_vertex(e) == v) return edges[e].head;
  return kNoDart;
}

VertexId Chart::other_end(EdgeId e, VertexId v) const {
  VertexId t = tail_vertex(e), h = head_vertex(e);
  return t == v ? h : t;
}

DartId Chart::dart_toward(EdgeId e, VertexId v) const {
  // dart pointing toward v = the dart at the OTHER end
  if (head_vertex(e) == v) return edges[e].tail;
  if (tail_vertex(e) == v) return edges[e].head;
  return kNoDart;
}

int Chart::rotation_index(DartId d) const {
  const auto& rot = vertices[darts[d].vertex].rotation;
  for (std::size_t i = 0; i < rot.size(); ++i)
    if (rot[i] == d) return static_cast<int>(i);
  return -1;
}

namespace {

struct UnionFind {
  std::vector<int> p;
  explicit UnionFind(int n) : p(n) { std::iota(p.begin(), p.end(), 0); }
  int find(int x) { return p[x] == x ? x : p[x] = find(p[x]); }
  void unite(int a, int b) { p[find(a)] = find(b); }
};

}  // namespace

std::optional<std::string> Chart::finalize() {
  const int nd = static_cast<int>(darts.size());
  const int ne = static_cast<int>(edges.size());
  const int nv = static_cast<int>(vertices.size());

  twin.assign(nd, kNoDart);
  for (int e = 0; e < ne; ++e) {
    const auto& er = edges[e];
    if (er.tail < 0 || er.tail >= nd || er.head < 0 || er.head >= nd)
      return "edge " + std::to_string(e) + ": dangling dart reference";
    if (er.tail == er.head) return "edge " + std::to_string(e) + ": tail dart equals head dart";
    if (darts[er.tail].edge != e || darts[er.head].edge != e)
      return "edge " + std::to_string(e) + ": dart/edge mismatch";
    twin[er.tail] = er.head;
    twin[er.head] = er.tail;
  }
  for (int d = 0; d < nd; ++d) {
    if (twin[d] == kNoDart) return "dart " + std::to_string(d) + " belongs to no edge";
    if (twin[d] == d || twin[twin[d]] != d)
      return "dart pairing is not a fixed-point-free involution at dart " + std::to_string(d);
  }

  rot_next.assign(nd, kNoDart);
  rot_prev.assign(nd, kNoDart);
  std::vector<int> seen(nd, 0);
  for (int v = 0; v < nv; ++v) {
    const auto& rot = vertices[v].rotation;
    if (rot.empty()) return "vertex " + std::to_string(v) + " has an empty rotation";
    for (std::size_t i = 0; i < rot.size(); ++i) {
      DartId d = rot[i];
      if (d < 0 || d >= nd) return "vertex " + std::to_string(v) + ": bad dart in rotation";
      if (darts[d].vertex != v)
        return "dart " + std::to_string(d) + " listed in a foreign rotation";
      if (seen[d]++) return "dart " + std::to_string(d) + " appears twice in rotations";
      rot_next[d] = rot[(i + 1) % rot.size()];
      rot_prev[d] = rot[(i + rot.size() - 1) % rot.size()];
    }
  }
  for (int d = 0; d < nd; ++d)
    if (!seen[d]) return "dart " + std::to_string(d) + " missing from every rotation";

  // components over vertices
  vertex_component.assign(nv, -1);
  component_count = 0;
  for (int v = 0; v < nv; ++v) {
    if (vertex_component[v] >= 0) continue;
    int c = component_count++;
    std::vector<VertexId> stack{v};
    vertex_component[v] = c;
    while (!stack.empty()) {
      VertexId u = stack.back();
      stack.pop_back();
      for (DartId d : vertices[u].rotation) {
        VertexId w = darts[twin[d]].vertex;
        if (vertex_component[w] < 0) {
          vertex_component[w] = c;
          stack.push_back(w);
        }
      }
    }
  }

  // faces: left-face walks; next dart of the walk = rot_prev(twin(d))
  face_left.assign(nd, kNoFace);
  face_walks.clear();
  face_component.clear();
  for (int d0 = 0; d0 < nd; ++d0) {
    if (face_left[d0] != kNoFace) continue;
    FaceId f = static_cast<FaceId>(face_walks.size());
    face_walks.emplace_back();
    DartId d = d0;
    do {
      face_left[d] = f;
      face_walks.back().push_back(d);
      d = rot_prev[twin[d]];
    } while (d != d0);
    face_component.push_back(vertex_component[darts[d0].vertex]);
  }

  // genus check per component: V - E + F = 2
  std::vector<int> cv(component_count, 0), ce(component_count, 0), cf(component_count, 0);
  for (int v = 0; v < nv; ++v) cv[vertex_component[v]]++;
  for (int e = 0; e < ne; ++e) ce[vertex_component[tail_vertex(e)]]++;
  for (std::size_t f = 0; f < face_walks.size(); ++f) cf[face_component[f]]++;
  for (int c = 0; c < component_count; ++c)
    if (cv[c] - ce[c] + cf[c] != 2)
      return "component " + std::to_string(c) + " does not embed in the sphere (genus != 0)";

  // outer faces
  outer_face_of_component.assign(component_count, kNoFace);
  for (auto [witness, d] : outer_hints) {
    if (witness < 0 || witness >= nv || d < 0 || d >= nd) return "bad outer hint";
    int c = vertex_component[witness];
    if (vertex_component[darts[d].vertex] != c) return "outer hint dart in a foreign component";
    outer_face_of_component[c] = face_left[d];
  }
  std::vector<DartId> min_dart(component_count, kNoDart);
  for (int d = nd - 1; d >= 0; --d) min_dart[vertex_component[darts[d].vertex]] = d;
  for (int c = 0; c < component_count; ++c)
    if (outer_face_of_component[c] == kNoFace)
      outer_face_of_component[c] = face_left[twin[min_dart[c]]];

  // nesting forest
  parent_component.assign(component_count, -1);
  parent_face.assign(component_count, kNoFace);
  for (auto [witness, d] : placement_hints) {
    if (witness < 0 || witness >= nv) return "bad placement witness";
    int c = vertex_component[witness];
    if (d == kNoDart) continue;  // explicit top level
    if (d < 0 || d >= nd) return "bad placement dart";
    int pc = vertex_component[darts[d].vertex];
    if (pc == c) return "component nested inside itself";
    parent_component[c] = pc;
    parent_face[c] = face_left[d];
  }
  // forest acyclicity
  for (int c = 0; c < component_count; ++c) {
    int hops = 0, x = c;
    while (x >= 0) {
      x = parent_component[x];
      if (++hops > component_count) return "nesting forest has a cycle";
    }
  }

  // regions: faces glued with nested components' outer faces; virtual node
  // for the ambient disk.
  const int nf = static_cast<int>(face_walks.size());
  UnionFind uf(nf + 1);
  const int ambient = nf;
  for (int c = 0; c < component_count; ++c) {
    int host = parent_component[c] < 0 ? ambient : parent_face[c];
    uf.unite(outer_face_of_component[c], host);
  }
  region_of_face.assign(nf, -1);
  std::map<int, RegionId> region_ids;
  region_ids[uf.find(ambient)] = 0;
  region_count = 1;
  for (int f = 0; f < nf; ++f) {
    int r = uf.find(f);
    auto it = region_ids.find(r);
    if (it == region_ids.end()) it = region_ids.emplace(r, region_count++).first;
    region_of_face[f] = it->second;
  }
  outer_region = 0;
  return std::nullopt;
}

VertexId ChartBuilder::add_vertex(VertexKind kind, int slots) {
  VertexRec vr;
  vr.kind = kind;
  vr.rotation.assign(slots, kNoDart);
  chart_.vertices.push_back(std::move(vr));
  slot_dart_.push_back(std::vector<DartId>(slots, kNoDart));
  return static_cast<VertexId>(chart_.vertices.size() - 1);
}

EdgeId ChartBuilder::connect(VertexId va, int a, VertexId vb, int b, Label label, bool closed) {
  auto claim = [&](VertexId v, int slot) -> DartId {
    auto& taken = slot_dart_.at(v).at(slot);
    if (taken != kNoDart) throw std::runtime_error("rotation slot already used");
    DartId d = static_cast<DartId>(chart_.darts.size());
    chart_.darts.push_back(Dart{static_cast<EdgeId>(chart_.edges.size()), v});
    chart_.vertices[v].rotation[slot] = d;
    taken = d;
    return d;
  };
  EdgeRec er;
  er.label = label;
  er.closed = closed;
  er.tail = claim(va, a);
  er.head = claim(vb, b);
  chart_.edges.push_back(er);
  return static_cast<EdgeId>(chart_.edges.size() - 1);
}

EdgeId ChartBuilder::add_hoop(Label label, bool ccw) {
  // one anchor carrying a closed self-edge; the chart-level invariant is
  // that anchors occur only in this shape
  VertexId a = add_vertex(VertexKind::Anchor, 2);
  EdgeId e = connect(a, 0, a, 1, label, true);
  // ccw: travelling the hoop its enclosed side is on the left, so the
  // outward face is the one left of the head dart.
  set_outer(a, ccw ? chart_.edges[e].head : chart_.edges[e].tail);
  return e;
}

Chart ChartBuilder::build() {
  for (VertexId v = 0; v < static_cast<VertexId>(chart_.vertices.size()); ++v)
    for (DartId d : chart_.vertices[v].rotation)
      if (d == kNoDart)
        throw std::runtime_error("vertex " + std::to_string(v) + " has an unconnected slot");
  Chart out = std::move(chart_);
  if (auto err = out.finalize()) throw std::runtime_error(*err);
  return out;
}

}  // namespace chartcalc
