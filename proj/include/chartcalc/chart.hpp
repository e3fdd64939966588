#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace chartcalc {

using DartId = std::int32_t;
using EdgeId = std::int32_t;
using VertexId = std::int32_t;
using FaceId = std::int32_t;
using RegionId = std::int32_t;
using Label = std::int32_t;

constexpr DartId kNoDart = -1;
constexpr EdgeId kNoEdge = -1;
constexpr VertexId kNoVertex = -1;
constexpr FaceId kNoFace = -1;

enum class VertexKind : std::uint8_t {
  Black,     // degree 1
  Crossing,  // degree 4
  White,     // degree 6
  Anchor,    // degree 2 marker carrying a closed edge; not a chart vertex
};

const char* to_string(VertexKind k);

struct Dart {
  EdgeId edge = kNoEdge;
  VertexId vertex = kNoVertex;  // the vertex this dart emanates from
};

struct EdgeRec {
  Label label = 0;
  DartId tail = kNoDart;  // dart at the tail vertex; edge is oriented tail -> head
  DartId head = kNoDart;  // dart at the head vertex
  bool closed = false;    // belongs to a hoop (endpoints are anchors)
};

struct VertexRec {
  VertexKind kind = VertexKind::Black;
  std::vector<DartId> rotation;  // darts around the vertex, counterclockwise
};

// A chart: an oriented labeled graph embedded in a disk, stored as a
// rotation system per component plus a nesting forest placing each
// component inside a face of another one (or at the top level of the disk).
// Each component also designates the face that opens toward its parent.
// Derived structure (twins, faces, regions, components) is computed once by
// finalize(); charts are immutable values afterwards.
class Chart {
 public:
  int n = 2;  // braid degree; labels live in 1..n-1

  std::vector<Dart> darts;
  std::vector<EdgeRec> edges;
  std::vector<VertexRec> vertices;
  std::string name;  // optional fixture name

  // Placement input, resolved by finalize():
  //  - placement_hints: (witness vertex, dart of another component whose
  //    left face hosts the witness's component). Components without a hint
  //    sit at the top level of the disk.
  //  - outer_hints: (witness vertex, dart of the same component whose left
  //    face opens toward the parent). Components without a hint default to
  //    the face left of their smallest dart's twin; builders normally set
  //    this explicitly.
  std::vector<std::pair<VertexId, DartId>> placement_hints;
  std::vector<std::pair<VertexId, DartId>> outer_hints;

  // derived data
  std::vector<DartId> twin;       // other dart of the same edge
  std::vector<DartId> rot_next;   // next dart ccw around the vertex
  std::vector<DartId> rot_prev;
  std::vector<FaceId> face_left;  // face on the left of each dart
  std::vector<std::vector<DartId>> face_walks;
  std::vector<int> face_component;
  std::vector<int> vertex_component;
  int component_count = 0;
  std::vector<FaceId> outer_face_of_component;
  std::vector<int> parent_component;       // -1 for top level
  std::vector<FaceId> parent_face;         // kNoFace for top level
  // Regions: a face of the disk together with the outer faces of all the
  // components nested in it. Region 0 is the outer region (along the disk
  // boundary).
  std::vector<RegionId> region_of_face;
  int region_count = 0;
  RegionId outer_region = 0;

  std::size_t dart_count() const { return darts.size(); }
  std::size_t edge_count() const { return edges.size(); }

  VertexId vertex_of(DartId d) const { return darts[d].vertex; }
  EdgeId edge_of(DartId d) const { return darts[d].edge; }
  Label label_of(EdgeId e) const { return edges[e].label; }
  bool is_anchor(VertexId v) const { return vertices[v].kind == VertexKind::Anchor; }
  bool is_white(VertexId v) const { return vertices[v].kind == VertexKind::White; }
  bool is_black(VertexId v) const { return vertices[v].kind == VertexKind::Black; }
  bool is_crossing(VertexId v) const { return vertices[v].kind == VertexKind::Crossing; }

  VertexId tail_vertex(EdgeId e) const { return darts[edges[e].tail].vertex; }
  VertexId head_vertex(EdgeId e) const { return darts[edges[e].head].vertex; }
  bool outward_at(EdgeId e, VertexId v) const { return tail_vertex(e) == v; }
  bool inward_at(EdgeId e, VertexId v) const { return head_vertex(e) == v; }

  DartId dart_at(EdgeId e, VertexId v) const;  // tail dart wins if both ends sit at v
  VertexId other_end(EdgeId e, VertexId v) const;
  // the dart of the same edge pointing toward v (edge must end at v)
  DartId dart_toward(EdgeId e, VertexId v) const;

  RegionId region_left(DartId d) const { return region_of_face[face_left[d]]; }
  int rotation_index(DartId d) const;

  int component_of_vertex(VertexId v) const { return vertex_component[v]; }
  int component_of_edge(EdgeId e) const { return vertex_component[tail_vertex(e)]; }

  // Validates structural consistency and computes all derived data.
  // Reports dangling darts, rotation inconsistencies, genus != 0 and nesting
  // cycles. The chart is usable only when no error is returned.
  std::optional<std::string> finalize();
};

// Incremental construction helper shared by the parser, the fixtures and
// the synthesizer. Vertices are created with a fixed number of rotation
// slots; edges claim one slot at each end.
class ChartBuilder {
 public:
  explicit ChartBuilder(int degree) { chart_.n = degree; }

  VertexId add_vertex(VertexKind kind, int slots);
  // Connects slot `a` of `va` to slot `b` of `vb` with an edge oriented
  // va -> vb.
  EdgeId connect(VertexId va, int a, VertexId vb, int b, Label label, bool closed = false);
  // Convenience: a free-standing hoop component (two anchors, two closed
  // edges) oriented so that `ccw` picks the direction; returns one edge.
  EdgeId add_hoop(Label label, bool ccw = true);

  void place_component(VertexId witness, DartId parent_dart) {
    chart_.placement_hints.emplace_back(witness, parent_dart);
  }
  void set_outer(VertexId witness, DartId outer_dart) {
    chart_.outer_hints.emplace_back(witness, outer_dart);
  }
  void name(std::string s) { chart_.name = std::move(s); }

  DartId dart_in_slot(VertexId v, int slot) const { return slot_dart_.at(v).at(slot); }
  bool slot_used(VertexId v, int slot) const { return slot_dart_.at(v).at(slot) != kNoDart; }
  int degree() const { return chart_.n; }

  // Finishes the chart; throws std::runtime_error on structural errors.
  Chart build();

 private:
  Chart chart_;
  std::vector<std::vector<DartId>> slot_dart_;
};

}  // namespace chartcalc
