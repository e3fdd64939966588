#pragma once

#include <map>
#include <variant>
#include <string>
#include <vector>

#include "chartcalc/chart.hpp"

namespace chartcalc {

// A combinatorial simple closed curve crossing edges transversely, together
// with the cells it encloses. The boundary is stored as the cyclic sequence
// of edge crossings met while traversing the curve with the disk on the
// left; ordinals number the crossing points of one edge from tail to head.
struct DiskRegion {
  struct Crossing {
    EdgeId edge;
    int ordinal;  // 1-based along the edge
  };
  std::vector<Crossing> boundary;
  std::vector<char> inside_vertex;
  std::vector<char> inside_edge;  // edges entirely inside
  std::vector<char> inside_face;
  // for each crossed edge: inside flags of its ordinal+1 segments
  std::map<EdgeId, std::vector<char>> segments;

  int crossings_on(EdgeId e) const;
  // true if the edge is directed from outside to inside at boundary[i]
  bool locally_inward(std::size_t i) const;
  bool has_inside_content() const;
  bool edge_touches(EdgeId e) const;  // crossed or inside
  std::string describe(const Chart& chart) const;
};

// Disk around a connected set of edges: the regular neighborhood of the
// edges, their vertices and every face they enclose. Crossed edges are the
// remaining edges incident to swallowed vertices.
DiskRegion disk_around_edges(const Chart& chart, const std::vector<EdgeId>& core);

// Disk around a single vertex.
DiskRegion disk_around_vertex(const Chart& chart, VertexId v);

// Disk crossing one edge twice, containing an interior segment and nothing
// else (the trivial tangle carrier).
DiskRegion disk_middle_of_edge(const Chart& chart, EdgeId e);

// Counts of the tangle (Gamma ∩ D, D) together with per-boundary-point
// polarity. Errors (nonempty string) when the intersection is empty or the
// disk is degenerate.
struct TangleCounts {
  int e_i = 0;  // I-edges for D
  int e_o = 0;  // O-edges for D
  int t_i = 0;  // I-terminal edges inside D
  int t_o = 0;  // O-terminal edges inside D
  std::vector<bool> boundary_inward;  // aligned with disk.boundary
};

struct TangleError {
  std::string message;
};

// Applies the tangle conditions and counts. I-/O-edges require two white
// endpoints, a single transversal crossing and the matching orientation at
// the inside endpoint.
std::variant<TangleCounts, TangleError> make_tangle(const Chart& chart, const DiskRegion& disk);

bool is_i_edge(const Chart& chart, const DiskRegion& disk, EdgeId e);
bool is_o_edge(const Chart& chart, const DiskRegion& disk, EdgeId e);

// Labels crossing the boundary / present inside.
std::vector<Label> boundary_labels(const Chart& chart, const DiskRegion& disk);

}  // namespace chartcalc
