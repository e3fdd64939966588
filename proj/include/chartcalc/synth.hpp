#pragma once

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "chartcalc/chart.hpp"
#include "chartcalc/disk.hpp"

namespace chartcalc::synth {

// ---- wiring primitives -----------------------------------------------

// an unconnected rotation slot awaiting exactly one edge
struct Port {
  VertexId v = kNoVertex;
  int slot = -1;
};

// Connect a chain of ports with labelled edges; direction per pair is
// dictated by the caller.
void connect(ChartBuilder& b, Port from, Port to, Label label);

// ---- spine chains (IO-tangle content of label m) -----------------------
//
// A chain of white vertices along an arc of label m, listed in emission
// order. Sites: an O-terminal white, an I-terminal white, or a whole
// Type-I_k block entered from either end. The chain realizes prescribed
// I-/O-index tuples of the tangle around it.

struct SiteO {};
struct SiteI {};
struct SiteBlock {
  int k = 1;
  bool reversed = false;
};
using Site = std::variant<SiteO, SiteI, SiteBlock>;

struct SpineChain {
  Port end_left, end_right;          // m-spine connector ports
  bool left_inward = false;          // edge at the left end points into the chain
  bool right_inward = false;
  std::vector<Port> in_ports;        // k-label ports expecting incoming edges,
                                     // in emission order along the I side
  std::vector<Port> out_ports;       // k-label ports that emit edges, O side
  std::vector<EdgeId> spine_edges;   // edges laid so far (terminals included)
};

// Lays down the chain for `sites` with labels (m, k). Every site's white
// vertices, terminals and block internals are created in `b`.
SpineChain build_spine(ChartBuilder& b, const std::vector<Site>& sites, Label m, Label k);

// Expected index tuples of a chain (the builder's oracle).
struct Emission {
  std::vector<int> a, b;
  bool left_inward, right_inward;
};
Emission emission_of(const std::vector<Site>& sites);

// Solves for a site word emitting exactly (a, b); nullopt when the tuple
// pair is outside the chain family.
std::optional<std::vector<Site>> solve_sites(const std::vector<int>& a,
                                             const std::vector<int>& b);

// ---- N-tangle ladders ---------------------------------------------------
//
// Crossing-free two-label content converting label-j strands into
// label-(j+1) strands, realizing a balanced index pair. Built from two
// interleaved binary forests sharing the white vertices.

struct Ladder {
  std::vector<Port> in_ports;   // label j, expect incoming edges, left to right
  std::vector<Port> out_ports;  // label j+1, emit edges
  std::vector<VertexId> whites;
};

// Builds ladder content realizing I-index a and O-index b (sums equal,
// interior entries >= 2, ends >= 1). Throws std::runtime_error when the
// pair is unrealizable for this family.
Ladder build_ladder(ChartBuilder& builder, const std::vector<int>& a,
                    const std::vector<int>& b, Label j, bool upward);

// ---- closures and whole charts -----------------------------------------

// Closes a spine chain into a standalone chart: the chain's strands are
// absorbed by a complementary chain, the spine closed into a cycle.
// Returns the chart and the disk around the primary chain.
struct ClosedTangle {
  Chart chart;
  DiskRegion disk;
};
ClosedTangle close_spine_fixture(const std::vector<Site>& sites, Label m, Label k, int degree,
                                 const std::string& name);

// Closes a ladder into a crossing-free annular chart; disk wraps the
// primary ladder.
ClosedTangle close_ladder_fixture(const std::vector<int>& a, const std::vector<int>& b,
                                  Label j, int degree, const std::string& name);

}  // namespace chartcalc::synth
