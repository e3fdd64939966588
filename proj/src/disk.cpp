#include "chartcalc/disk.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <variant>

#include "chartcalc/features.hpp"

namespace chartcalc {

int DiskRegion::crossings_on(EdgeId e) const {
  auto it = segments.find(e);
  return it == segments.end() ? 0 : static_cast<int>(it->second.size()) - 1;
}

bool DiskRegion::locally_inward(std::size_t i) const {
  const Crossing& c = boundary[i];
  // segment `ordinal` (head side of the point) inside <=> directed inward
  return segments.at(c.edge)[c.ordinal] != 0;
}

bool DiskRegion::has_inside_content() const {
  for (char f : inside_vertex)
    if (f) return true;
  for (char f : inside_edge)
    if (f) return true;
  for (auto& [e, segs] : segments)
    for (std::size_t k = 1; k + 1 < segs.size(); ++k)
      if (segs[k]) return true;
  // a crossed edge always leaves a segment inside
  return !boundary.empty();
}

bool DiskRegion::edge_touches(EdgeId e) const {
  return inside_edge[e] || segments.count(e);
}

std::string DiskRegion::describe(const Chart& chart) const {
  std::ostringstream os;
  os << "disk[";
  for (auto& c : boundary) os << 'e' << c.edge << '#' << c.ordinal << ' ';
  os << "| vertices:";
  for (VertexId v = 0; v < static_cast<VertexId>(inside_vertex.size()); ++v)
    if (inside_vertex[v]) os << ' ' << v;
  os << ']';
  (void)chart;
  return os.str();
}

namespace {

DiskRegion blank(const Chart& chart) {
  DiskRegion d;
  d.inside_vertex.assign(chart.vertices.size(), 0);
  d.inside_edge.assign(chart.edges.size(), 0);
  d.inside_face.assign(chart.face_walks.size(), 0);
  return d;
}

}  // namespace

DiskRegion disk_around_edges(const Chart& chart, const std::vector<EdgeId>& core) {
  DiskRegion d = blank(chart);
  if (core.empty()) throw std::runtime_error("disk_around_edges: empty core");
  d.inside_face = faces_enclosed(chart, core);
  for (EdgeId e : core) {
    d.inside_edge[e] = 1;
    d.inside_vertex[chart.tail_vertex(e)] = 1;
    d.inside_vertex[chart.head_vertex(e)] = 1;
  }
  // swallow everything sitting in enclosed faces
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e)
    if (d.inside_face[chart.face_left[chart.edges[e].tail]] &&
        d.inside_face[chart.face_left[chart.edges[e].head]]) {
      d.inside_edge[e] = 1;
      d.inside_vertex[chart.tail_vertex(e)] = 1;
      d.inside_vertex[chart.head_vertex(e)] = 1;
    }
  // components nested in enclosed faces are inside as well (their faces are
  // separate; flood by nesting)
  for (int comp = 0; comp < chart.component_count; ++comp) {
    int x = comp;
    bool in = false;
    int hops = 0;
    while (x >= 0 && hops++ <= chart.component_count) {
      if (chart.parent_face[x] != kNoFace && d.inside_face[chart.parent_face[x]]) {
        in = true;
        break;
      }
      x = chart.parent_component[x];
    }
    if (in) {
      for (VertexId v = 0; v < static_cast<VertexId>(chart.vertices.size()); ++v)
        if (chart.vertex_component[v] == comp) d.inside_vertex[v] = 1;
      for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e)
        if (chart.component_of_edge(e) == comp) d.inside_edge[e] = 1;
      for (FaceId f = 0; f < static_cast<FaceId>(chart.face_walks.size()); ++f)
        if (chart.face_component[f] == comp) d.inside_face[f] = 1;
    }
  }

  // Outline walk, counterclockwise (disk on the left of travel). Traveling
  // an inside dart we move along its right side; at the far vertex we sweep
  // counterclockwise, recording a crossing for every outgoing edge passed.
  auto inside_dart = [&](DartId dd) { return d.inside_edge[chart.edge_of(dd)]; };
  DartId start = kNoDart;
  for (DartId dd = 0; dd < static_cast<DartId>(chart.dart_count()); ++dd)
    if (inside_dart(dd) && !d.inside_face[chart.face_left[chart.twin[dd]]]) {
      start = dd;
      break;
    }
  if (start == kNoDart)
    throw std::runtime_error("disk_around_edges: no exposed side (core encloses everything?)");
  std::vector<DiskRegion::Crossing> walk;
  auto near_crossing = [&](DartId out_dart) {
    // the crossing of edge(out_dart) near vertex(out_dart)
    EdgeId e = chart.edge_of(out_dart);
    bool at_tail = chart.edges[e].tail == out_dart;
    bool other_end_in = d.inside_vertex[chart.vertex_of(chart.twin[out_dart])] &&
                        !d.inside_edge[e];
    int total = other_end_in ? 2 : 1;
    int ordinal = at_tail ? 1 : total;
    walk.push_back({e, ordinal});
  };
  DartId dd = start;
  do {
    DartId t = chart.twin[dd];
    DartId s = chart.rot_next[t];
    while (!inside_dart(s)) {
      near_crossing(s);
      s = chart.rot_next[s];
    }
    dd = s;
  } while (dd != start);
  d.boundary = std::move(walk);
  // segment flags
  for (auto& c : d.boundary) {
    if (d.segments.count(c.edge)) continue;
    int total = 0;
    for (auto& c2 : d.boundary)
      if (c2.edge == c.edge) total++;
    std::vector<char> segs(total + 1, 0);
    // segment 0 adjoins the tail vertex
    VertexId tv = chart.tail_vertex(c.edge), hv = chart.head_vertex(c.edge);
    if (d.inside_vertex[tv]) segs[0] = 1;
    if (d.inside_vertex[hv]) segs[total] = 1;
    d.segments[c.edge] = std::move(segs);
  }
  return d;
}

DiskRegion disk_around_vertex(const Chart& chart, VertexId v) {
  DiskRegion d = blank(chart);
  d.inside_vertex[v] = 1;
  for (DartId dd : chart.vertices[v].rotation) {
    EdgeId e = chart.edge_of(dd);
    bool at_tail = chart.edges[e].tail == dd;
    bool loop = chart.tail_vertex(e) == v && chart.head_vertex(e) == v;
    int total = loop ? 2 : 1;
    d.boundary.push_back({e, at_tail ? 1 : total});
    if (!d.segments.count(e)) {
      std::vector<char> segs(total + 1, 0);
      segs[0] = chart.tail_vertex(e) == v;
      segs[total] = chart.head_vertex(e) == v;
      d.segments[e] = std::move(segs);
    }
  }
  return d;
}

DiskRegion disk_middle_of_edge(const Chart& chart, EdgeId e) {
  DiskRegion d = blank(chart);
  d.boundary.push_back({e, 1});
  d.boundary.push_back({e, 2});
  d.segments[e] = {0, 1, 0};
  return d;
}

bool is_i_edge(const Chart& chart, const DiskRegion& disk, EdgeId e) {
  if (disk.crossings_on(e) != 1) return false;
  VertexId t = chart.tail_vertex(e), h = chart.head_vertex(e);
  if (!chart.is_white(t) || !chart.is_white(h)) return false;
  bool tin = disk.inside_vertex[t], hin = disk.inside_vertex[h];
  if (tin == hin) return false;
  return hin;  // inward at the inside vertex <=> head inside
}

bool is_o_edge(const Chart& chart, const DiskRegion& disk, EdgeId e) {
  if (disk.crossings_on(e) != 1) return false;
  VertexId t = chart.tail_vertex(e), h = chart.head_vertex(e);
  if (!chart.is_white(t) || !chart.is_white(h)) return false;
  bool tin = disk.inside_vertex[t], hin = disk.inside_vertex[h];
  if (tin == hin) return false;
  return tin;  // outward at the inside vertex <=> tail inside
}

std::variant<TangleCounts, TangleError> make_tangle(const Chart& chart,
                                                    const DiskRegion& disk) {
  if (!disk.has_inside_content())
    return TangleError{"empty intersection: the disk meets no part of the chart"};
  TangleCounts tc;
  for (EdgeId e = 0; e < static_cast<EdgeId>(chart.edges.size()); ++e) {
    if (is_i_edge(chart, disk, e)) tc.e_i++;
    if (is_o_edge(chart, disk, e)) tc.e_o++;
    if (!disk.inside_edge[e]) continue;
    EdgeClass k = classify_edge(chart, e);
    if (k.kind == EdgeKind::TerminalI) tc.t_i++;
    if (k.kind == EdgeKind::TerminalO) tc.t_o++;
  }
  for (std::size_t i = 0; i < disk.boundary.size(); ++i)
    tc.boundary_inward.push_back(disk.locally_inward(i));
  return tc;
}

std::vector<Label> boundary_labels(const Chart& chart, const DiskRegion& disk) {
  std::vector<Label> out;
  for (auto& c : disk.boundary) {
    Label l = chart.label_of(c.edge);
    if (std::find(out.begin(), out.end(), l) == out.end()) out.push_back(l);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace chartcalc
