#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chartcalc/chart.hpp"

namespace chartcalc {

enum class EdgeKind { Free, TerminalI, TerminalO, Internal, Hoop, Ring };

struct EdgeClass {
  EdgeKind kind;
  bool hoop_simple = false;  // only meaningful for Hoop
};

const char* to_string(EdgeKind k);

// Exactly one kind per edge. Precedence for charts outside the axioms:
// Hoop (closed) > Free (two black ends) > Terminal (white and black end) >
// Ring (on a crossing-only cycle) > Internal (the rest).
EdgeClass classify_edge(const Chart& chart, EdgeId e);

struct ComplexityReport {
  int c = 0;  // crossings
  int w = 0;  // white vertices
  int f = 0;  // free edges
  int b = 0;  // bigons
  std::vector<int> c_tuple() const { return {c, w, -f, -b}; }
  std::vector<int> w_tuple() const { return {w, c, -f, -b}; }
  std::vector<int> cw_tuple() const { return {c + w, -f, -b}; }
};

ComplexityReport complexity(const Chart& chart);

// Whites in the subtree nested (transitively) behind face `f`, i.e. in the
// bounded domain the face cuts off. Counts whites of nested components and,
// for non-outer faces, nothing else.
int whites_behind_face(const Chart& chart, FaceId f);

// True if the hoop through this closed edge has a white-free bounded domain.
bool hoop_is_simple(const Chart& chart, EdgeId closed_edge);

// Component belongs to Main(chart): not a free edge, not a simple hoop.
bool component_in_main(const Chart& chart, int component);
bool edge_in_main(const Chart& chart, EdgeId e);

// Re-nests every free-edge and simple-hoop component to the top level, next
// to the disk boundary. Pure: returns the adjusted chart. Main part and all
// complexity counts are unchanged.
Chart normalize_brim(const Chart& chart);

struct MainReport {
  std::vector<EdgeId> brim_edges;               // edges parked in the brim
  std::vector<std::vector<EdgeId>> main_per_label;  // 1..n-1 -> Main(Gamma_m)
};
MainReport main_report(const Chart& chart);

// Gamma_m: edges of label m plus their vertices. Throws on a label outside
// 1..n-1.
struct LabelSubgraph {
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;
};
LabelSubgraph label_subgraph(const Chart& chart, Label m);

// (alpha, beta): least and greatest label whose subgraph has a white
// vertex; nullopt when the chart has none.
std::optional<std::pair<Label, Label>> label_extrema(const Chart& chart);

// A cycle of label m: simple closed curve in Gamma_m, as an edge sequence.
// Hoops appear as single-component cycles through anchors.
struct Cycle {
  Label label;
  std::vector<EdgeId> edges;
  std::vector<VertexId> vertices;  // aligned: vertices[i] joins edges[i-1],edges[i]
  bool contains(VertexId v) const;
};

std::vector<Cycle> cycles_of_label(const Chart& chart, Label m);

// Faces enclosed by a cycle: every face unreachable from the outer region
// without crossing cycle edges.
std::vector<char> faces_enclosed(const Chart& chart, const std::vector<EdgeId>& curve);

struct CycleAnalysis {
  Cycle cycle;
  std::vector<VertexId> whites;          // W(C)
  std::vector<VertexId> whites_o_mid;    // whites with an outside edge middle there
};

std::vector<CycleAnalysis> cycle_analysis(const Chart& chart, Label m);

// SC-closure of an edge set X: X together with all disks bounded by cycles
// in X and every terminal edge meeting the union.
struct SCClosure {
  std::vector<EdgeId> base;        // X
  std::vector<char> disk_faces;    // B(X), indexed by face
  std::vector<EdgeId> terminals;   // T(X)
  std::set<EdgeId> total_edges;    // edges of X + inside B + terminals
  std::set<VertexId> total_vertices;
};

SCClosure sc_closure(const Chart& chart, const std::vector<EdgeId>& base);

// Maximal arcs of Gamma_m through crossings whose closure has white
// endpoints and no black vertex ("internal edges" at the path level).
struct InternalArc {
  Label label;
  std::vector<EdgeId> edges;
  VertexId end1, end2;  // white endpoints
};
std::vector<InternalArc> internal_arcs(const Chart& chart, Label m);

// Internal arcs whose removal disconnects Gamma_m.
std::vector<InternalArc> cut_arcs(const Chart& chart, Label m);

bool label_subgraph_connected_in_main(const Chart& chart, Label m);

}  // namespace chartcalc
