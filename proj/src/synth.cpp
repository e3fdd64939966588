#include "chartcalc/synth.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <stdexcept>

namespace chartcalc::synth {

void connect(ChartBuilder& b, Port from, Port to, Label label) {
  b.connect(from.v, from.slot, to.v, to.slot, label);
}

namespace {

// slot mapping for mirrored vertices: reverses the rotation while keeping
// slot 0 in place, so label alternation and triple structure survive
int msl(bool mirrored, int slot) { return mirrored ? (6 - slot) % 6 : slot; }

struct SitePorts {
  Port left, right;
  bool left_inward, right_inward;
  std::vector<Port> ins, outs;  // emission order
};

// O-terminal white: spineA(m,out) sibA(k,in) term(m,in) sibB(k,in)
// spineB(m,out) mid(k,out)
SitePorts lay_site_o(ChartBuilder& b, Label m, Label k, std::vector<EdgeId>& edges) {
  VertexId w = b.add_vertex(VertexKind::White, 6);
  VertexId blk = b.add_vertex(VertexKind::Black, 1);
  edges.push_back(b.connect(blk, 0, w, 2, m));  // black -> white: O-terminal
  SitePorts p;
  p.left = {w, 0};
  p.right = {w, 4};
  p.left_inward = p.right_inward = false;  // spine edges leave the white
  p.ins = {{w, 1}, {w, 3}};
  p.outs = {{w, 5}};
  (void)k;
  return p;
}

// I-terminal white: spineA(m,in) mid(k,in) spineB(m,in) sibB(k,out)
// term(m,out) sibA(k,out)
SitePorts lay_site_i(ChartBuilder& b, Label m, Label k, std::vector<EdgeId>& edges) {
  VertexId w = b.add_vertex(VertexKind::White, 6);
  VertexId blk = b.add_vertex(VertexKind::Black, 1);
  edges.push_back(b.connect(w, 4, blk, 0, m));  // white -> black: I-terminal
  SitePorts p;
  p.left = {w, 0};
  p.right = {w, 2};
  p.left_inward = p.right_inward = true;
  p.ins = {{w, 1}};
  p.outs = {{w, 5}, {w, 3}};  // spatial order along the O side
  (void)k;
  return p;
}

// Type-I_k block. Slot layouts (counterclockwise, block drawn with its
// I side down):
//   vI:  eI(m,in) kI(k,in) cycI(m,in) kE(k,out) cycO(m,out) kO(k,out)
//   wI:  cycA(m,out) sibA(k,in) term(m,in) sibB(k,in) cycB(m,out) kE(k,out)
//   u_j: cycIn(m,in) kI(k,in) cycOut(m,out) kE1(k,out) mE(m,out) kE2(k,in)
//   vO:  cycIn(m,in) kI(k,in) eO(m,out) kO(k,out) cycOut(m,out) kE(k,in)
//   wO:  cycA(m,in) kE(k,in) cycB(m,in) sibB(k,out) term(m,out) sibA(k,out)
//   x_j: cycIn(m,in) kE2(k,in) mE(m,in) kE1(k,out) cycOut(m,out) kO(k,out)
// The cycle runs wI->vI, wI->u_1->..->u_k->vO, vO->wO, vI->x_k->..->x_1->wO.
SitePorts lay_block(ChartBuilder& b, int kcount, bool mirrored, Label m, Label k,
                    std::vector<EdgeId>& edges) {
  auto W = [&] { return b.add_vertex(VertexKind::White, 6); };
  auto E = [&](VertexId va, int a, VertexId vb, int bslot, Label l) {
    edges.push_back(b.connect(va, msl(mirrored, a), vb, msl(mirrored, bslot), l));
  };
  VertexId vI = W(), wI = W(), vO = W(), wO = W();
  std::vector<VertexId> u(kcount), x(kcount);
  for (int j = 0; j < kcount; ++j) u[j] = W(), x[j] = W();
  VertexId blkI = b.add_vertex(VertexKind::Black, 1);
  VertexId blkO = b.add_vertex(VertexKind::Black, 1);
  edges.push_back(b.connect(blkI, 0, wI, msl(mirrored, 2), m));  // O-terminal at wI
  edges.push_back(b.connect(wO, msl(mirrored, 4), blkO, 0, m));  // I-terminal at wO

  // cycle of label m
  E(wI, 0, vI, 2, m);
  if (kcount > 0) {
    E(wI, 4, u[0], 0, m);
    for (int j = 0; j + 1 < kcount; ++j) E(u[j], 2, u[j + 1], 0, m);
    E(u[kcount - 1], 2, vO, 0, m);
    E(x[0], 4, wO, 0, m);
    for (int j = 0; j + 1 < kcount; ++j) E(x[j + 1], 4, x[j], 0, m);
    E(vI, 4, x[kcount - 1], 0, m);
  } else {
    E(wI, 4, vO, 0, m);
    E(vI, 4, wO, 0, m);
  }
  E(vO, 4, wO, 2, m);

  // chords of label m (u_j -> x_{k+1-j}) and of label k
  for (int j = 0; j < kcount; ++j) E(u[j], 4, x[kcount - 1 - j], 2, m);
  if (kcount > 0) {
    E(wI, 5, u[0], 5, k);
    for (int j = 0; j + 1 < kcount; ++j) E(u[j], 3, u[j + 1], 5, k);
    E(u[kcount - 1], 3, vO, 5, k);
    E(x[0], 3, wO, 1, k);
    for (int j = 0; j + 1 < kcount; ++j) E(x[j + 1], 3, x[j], 1, k);
    E(vI, 3, x[kcount - 1], 1, k);
  } else {
    E(wI, 5, vO, 5, k);
    E(vI, 3, wO, 1, k);
  }

  SitePorts p;
  p.left = {vI, msl(mirrored, 0)};
  p.right = {vO, msl(mirrored, 2)};
  p.left_inward = true;    // e_I flows into the block
  p.right_inward = false;  // e_O flows out
  p.ins = {{vI, msl(mirrored, 1)}, {wI, msl(mirrored, 1)}, {wI, msl(mirrored, 3)}};
  for (int j = 0; j < kcount; ++j) p.ins.push_back({u[j], msl(mirrored, 1)});
  p.ins.push_back({vO, msl(mirrored, 1)});
  p.outs = {{vI, msl(mirrored, 5)}};
  for (int j = kcount - 1; j >= 0; --j) p.outs.push_back({x[j], msl(mirrored, 5)});
  p.outs.push_back({wO, msl(mirrored, 5)});
  p.outs.push_back({wO, msl(mirrored, 3)});
  p.outs.push_back({vO, msl(mirrored, 3)});
  if (mirrored) {
    std::swap(p.left, p.right);
    std::swap(p.left_inward, p.right_inward);
    std::reverse(p.ins.begin(), p.ins.end());
    std::reverse(p.outs.begin(), p.outs.end());
  }
  return p;
}

}  // namespace

SpineChain build_spine(ChartBuilder& b, const std::vector<Site>& sites, Label m, Label k) {
  if (sites.empty()) throw std::runtime_error("build_spine: empty word");
  SpineChain chain;
  std::vector<SitePorts> laid;
  for (const Site& s : sites) {
    if (std::holds_alternative<SiteO>(s))
      laid.push_back(lay_site_o(b, m, k, chain.spine_edges));
    else if (std::holds_alternative<SiteI>(s))
      laid.push_back(lay_site_i(b, m, k, chain.spine_edges));
    else {
      const auto& blk = std::get<SiteBlock>(s);
      laid.push_back(lay_block(b, blk.k, blk.reversed, m, k, chain.spine_edges));
    }
  }
  for (std::size_t i = 0; i + 1 < laid.size(); ++i) {
    const SitePorts& a = laid[i];
    const SitePorts& c = laid[i + 1];
    if (a.right_inward == c.left_inward)
      throw std::runtime_error("build_spine: incoherent site polarities");
    if (!a.right_inward)
      chain.spine_edges.push_back(
          b.connect(a.right.v, a.right.slot, c.left.v, c.left.slot, m));
    else
      chain.spine_edges.push_back(
          b.connect(c.left.v, c.left.slot, a.right.v, a.right.slot, m));
  }
  chain.end_left = laid.front().left;
  chain.end_right = laid.back().right;
  chain.left_inward = laid.front().left_inward;
  chain.right_inward = laid.back().right_inward;
  for (const auto& sp : laid) {
    chain.in_ports.insert(chain.in_ports.end(), sp.ins.begin(), sp.ins.end());
    chain.out_ports.insert(chain.out_ports.end(), sp.outs.begin(), sp.outs.end());
  }
  return chain;
}

namespace {

struct Emit {
  std::vector<int> runs_a{0}, runs_b{0};  // arc counts under construction
  void unit_a(int n = 1) { runs_a.back() += n; }
  void unit_b(int n = 1) { runs_b.back() += n; }
  void cut_a() { runs_a.push_back(0); }
  void cut_b() { runs_b.push_back(0); }
};

void emit_site(Emit& em, const Site& s) {
  if (std::holds_alternative<SiteO>(s)) {
    em.unit_a();
    em.cut_a();
    em.unit_a();
    em.unit_b();
  } else if (std::holds_alternative<SiteI>(s)) {
    em.unit_a();
    em.unit_b();
    em.cut_b();
    em.unit_b();
  } else {
    const auto& blk = std::get<SiteBlock>(s);
    if (!blk.reversed) {
      em.unit_a(2);
      em.cut_a();
      em.unit_a(blk.k + 2);
      em.unit_b(blk.k + 2);
      em.cut_b();
      em.unit_b(2);
    } else {
      em.unit_a(blk.k + 2);
      em.cut_a();
      em.unit_a(2);
      em.unit_b(2);
      em.cut_b();
      em.unit_b(blk.k + 2);
    }
  }
}

std::pair<bool, bool> polarity(const Site& s) {  // (left_inward, right_inward)
  if (std::holds_alternative<SiteO>(s)) return {false, false};
  if (std::holds_alternative<SiteI>(s)) return {true, true};
  const auto& blk = std::get<SiteBlock>(s);
  return blk.reversed ? std::make_pair(false, true) : std::make_pair(true, false);
}

}  // namespace

Emission emission_of(const std::vector<Site>& sites) {
  Emit em;
  for (const Site& s : sites) emit_site(em, s);
  Emission out;
  out.a = em.runs_a;
  out.b = em.runs_b;
  out.left_inward = polarity(sites.front()).first;
  out.right_inward = polarity(sites.back()).second;
  return out;
}

std::optional<std::vector<Site>> solve_sites(const std::vector<int>& a,
                                             const std::vector<int>& b) {
  if (a.empty() || b.empty()) return std::nullopt;
  int maxk = 0;
  for (int x : a) maxk = std::max(maxk, x);
  std::vector<Site> word;
  std::optional<std::vector<Site>> found;

  // candidate site list (block sizes bounded by the largest arc entry)
  std::vector<Site> menu;
  menu.push_back(SiteO{});
  menu.push_back(SiteI{});
  for (int kk = 0; kk <= maxk; ++kk) {
    menu.push_back(SiteBlock{kk, false});
    menu.push_back(SiteBlock{kk, true});
  }

  std::function<void()> rec = [&]() {
    if (found) return;
    Emission em = word.empty() ? Emission{{0}, {0}, false, false} : emission_of(word);
    // prefix check
    auto prefix_ok = [](const std::vector<int>& run, const std::vector<int>& target) {
      if (run.size() > target.size()) return false;
      for (std::size_t i = 0; i + 1 < run.size(); ++i)
        if (run[i] != target[i]) return false;
      return run.back() <= target[run.size() - 1];
    };
    if (!word.empty()) {
      if (!prefix_ok(em.a, a) || !prefix_ok(em.b, b)) return;
      if (em.a == a && em.b == b) {
        found = word;
        return;
      }
    }
    for (const Site& s : menu) {
      if (!word.empty()) {
        auto [sl, sr] = polarity(s);
        (void)sr;
        if (polarity(word.back()).second == sl) continue;
      }
      word.push_back(s);
      if (word.size() <= a.size() + b.size() + 4) rec();
      word.pop_back();
      if (found) return;
    }
  };
  rec();
  return found;
}

// ---------------------------------------------------------------------
// N-tangle ladders: two interleaved binary forests over the white set.
// ---------------------------------------------------------------------

namespace {

struct LeafLayout {
  // leaf kinds per position: -1 free, else pair index of the sibling cut
  std::vector<int> kind;
  std::vector<int> pair_pos;  // first position of each sibling pair
};

std::optional<LeafLayout> layout_of(const std::vector<int>& t) {
  LeafLayout L;
  int k = static_cast<int>(t.size()) - 1;
  for (int i = 0; i <= k; ++i) {
    int interior = t[i] - (i > 0 ? 1 : 0) - (i < k ? 1 : 0);
    if (i > 0) {
      // right sibling of pair i-1 begins the arc
    }
    if (interior < 0) return std::nullopt;
  }
  for (int i = 0; i < k; ++i) {
    // frees of arc i before the cut
    int frees = t[i] - 1 - (i > 0 ? 1 : 0);
    for (int f = 0; f < frees; ++f) L.kind.push_back(-1);
    L.pair_pos.push_back(static_cast<int>(L.kind.size()));
    L.kind.push_back(i);
    L.kind.push_back(i);
  }
  int frees = t[k] - 1;
  for (int f = 0; f < frees; ++f) L.kind.push_back(-1);
  return L;
}

struct TreeNode {
  int lo, hi;          // leaf span
  int left = -1, right = -1;  // child node ids, -1 when the child is a leaf
  int leaf_left = -1, leaf_right = -1;
};

struct TreePlan {
  std::vector<TreeNode> nodes;  // nodes[sib] covers the sibling pair
  int root = 0;
  int sib = 0;
};

// All binary trees over the ordered leaf list `leaves` containing a node
// whose children are exactly the two sibling leaves (list indices pair,
// pair+1). Leaf values are global strand positions.
std::vector<TreePlan> all_trees(const std::vector<int>& leaves, int pair) {
  struct Sub {
    std::vector<TreeNode> nodes;
    int root;  // -1 when the subtree is a bare leaf
    int leaf;
  };
  std::function<std::vector<Sub>(int, int, bool)> gen =
      [&](int a, int b, bool need) -> std::vector<Sub> {
    std::vector<Sub> out;
    if (a == b) {
      if (!need) out.push_back({{}, -1, leaves[a]});
      return out;
    }
    if (need && a == pair && b == pair + 1) {
      Sub s;
      s.nodes.push_back({leaves[pair], leaves[pair + 1], -1, -1, leaves[pair],
                         leaves[pair + 1]});
      s.root = 0;
      s.leaf = -1;
      out.push_back(std::move(s));
      return out;
    }
    for (int sp = a; sp < b; ++sp) {
      if (need && sp == pair) continue;  // never split the pair
      bool pair_left = need && pair < sp;
      bool pair_right = need && pair > sp;
      for (const Sub& L : gen(a, sp, pair_left))
        for (const Sub& R : gen(sp + 1, b, pair_right)) {
          Sub s;
          s.nodes = L.nodes;
          int off = static_cast<int>(s.nodes.size());
          for (TreeNode n : R.nodes) {
            if (n.left >= 0) n.left += off;
            if (n.right >= 0) n.right += off;
            s.nodes.push_back(n);
          }
          TreeNode root;
          root.lo = leaves[a];
          root.hi = leaves[b];
          root.left = L.root >= 0 ? L.root : -1;
          root.leaf_left = L.root >= 0 ? -1 : L.leaf;
          root.right = R.root >= 0 ? (R.root + off) : -1;
          root.leaf_right = R.root >= 0 ? -1 : R.leaf;
          s.nodes.push_back(root);
          s.root = static_cast<int>(s.nodes.size()) - 1;
          s.leaf = -1;
          out.push_back(std::move(s));
        }
    }
    return out;
  };
  std::vector<TreePlan> plans;
  for (const auto& s : gen(0, static_cast<int>(leaves.size()) - 1, true)) {
    TreePlan t;
    t.nodes = s.nodes;
    t.root = s.root;
    t.sib = -1;
    for (std::size_t i = 0; i < t.nodes.size(); ++i)
      if (t.nodes[i].leaf_left == leaves[pair] &&
          t.nodes[i].leaf_right == leaves[pair + 1])
        t.sib = static_cast<int>(i);
    if (t.sib >= 0) plans.push_back(std::move(t));
  }
  return plans;
}

}  // namespace

struct LadderPlan {
  std::vector<int> a, b;
  std::vector<TreePlan> jt, pt;  // one tree per sibling cut, both forests
  std::vector<int> match;        // j-A-node ordinal -> jp-A-node ordinal
  std::vector<unsigned> pflip;   // per tree: bit n flips node n's slot sides
};

namespace {

struct BuiltForests {
  // per white: slot ports
  std::vector<VertexId> whites;
  std::vector<Port> in_ports, out_ports;
  bool ok = false;
};

// Try to realize the plan inside builder `b`. Returns ports; the caller
// validates by finalizing / computing the index.
BuiltForests lay_ladder(ChartBuilder& b, const LadderPlan& plan, Label lab_in,
                        Label lab_out) {
  BuiltForests out;
  auto la = layout_of(plan.a), lb = layout_of(plan.b);
  if (!la || !lb) return out;
  int k = static_cast<int>(plan.a.size()) - 1;
  const std::vector<TreePlan>& jt = plan.jt;
  const std::vector<TreePlan>& pt = plan.pt;
  // global node lists: j-side roles
  struct Role {
    int tree, node;
  };
  std::vector<Role> j_nodes, p_nodes;
  for (int i = 0; i < k; ++i)
    for (std::size_t nn = 0; nn < jt[i].nodes.size(); ++nn)
      j_nodes.push_back({i, static_cast<int>(nn)});
  for (int i = 0; i < k; ++i)
    for (std::size_t nn = 0; nn < pt[i].nodes.size(); ++nn)
      p_nodes.push_back({i, static_cast<int>(nn)});
  if (j_nodes.size() != p_nodes.size()) return out;

  // identification: j-root_i <-> p-sib_i; j-sib_i <-> p-root_i; A's by plan.match
  int W = static_cast<int>(j_nodes.size());
  std::vector<int> j_to_p(W, -1);
  auto j_index = [&](int tree, int node) {
    int idx = 0;
    for (int i = 0; i < tree; ++i) idx += static_cast<int>(jt[i].nodes.size());
    return idx + node;
  };
  auto p_index = [&](int tree, int node) {
    int idx = 0;
    for (int i = 0; i < tree; ++i) idx += static_cast<int>(pt[i].nodes.size());
    return idx + node;
  };
  for (int i = 0; i < k; ++i) {
    int jr = j_index(i, jt[i].root), js = j_index(i, jt[i].sib);
    int pr = p_index(i, pt[i].root), ps = p_index(i, pt[i].sib);
    if (jr == js && pr != ps) return out;
    if (jr != js && pr == ps) return out;
    if (j_to_p[jr] != -1 && j_to_p[jr] != ps) return out;
    j_to_p[jr] = ps;
    if (j_to_p[js] != -1 && j_to_p[js] != pr) return out;
    j_to_p[js] = pr;
  }
  // A nodes
  std::vector<int> jA, pA;
  for (int g = 0; g < W; ++g)
    if (j_to_p[g] == -1) jA.push_back(g);
  std::vector<char> p_used(W, 0);
  for (int g = 0; g < W; ++g)
    if (j_to_p[g] != -1) p_used[j_to_p[g]] = 1;
  for (int g = 0; g < W; ++g)
    if (!p_used[g]) pA.push_back(g);
  if (jA.size() != pA.size() || plan.match.size() != jA.size()) return out;
  for (std::size_t t2 = 0; t2 < jA.size(); ++t2) j_to_p[jA[t2]] = pA[plan.match[t2]];

  // create whites
  out.whites.resize(W);
  for (int g = 0; g < W; ++g) out.whites[g] = b.add_vertex(VertexKind::White, 6);
  // slots: 0 in_L, 1 pin, 2 in_R, 3 pout_R, 4 out, 5 pout_L
  out.in_ports.assign(la->kind.size(), Port{});
  out.out_ports.assign(lb->kind.size(), Port{});
  std::vector<int> p_to_j(W);
  for (int g = 0; g < W; ++g) p_to_j[j_to_p[g]] = g;

  // j-forest edges and leaf ports; remember which jin slot each bus uses
  std::vector<int> j_parent(W, -1), j_slot_at_parent(W, -1);
  for (int i = 0; i < k; ++i) {
    for (std::size_t nn = 0; nn < jt[i].nodes.size(); ++nn) {
      const TreeNode& n = jt[i].nodes[nn];
      int g = j_index(i, static_cast<int>(nn));
      VertexId w = out.whites[g];
      if (n.leaf_left >= 0) out.in_ports[n.leaf_left] = {w, 0};
      if (n.leaf_right >= 0) out.in_ports[n.leaf_right] = {w, 2};
      if (n.left >= 0) {
        int c = j_index(i, n.left);
        b.connect(out.whites[c], 4, w, 0, lab_in);
        j_parent[c] = g;
        j_slot_at_parent[c] = 0;
      }
      if (n.right >= 0) {
        int c = j_index(i, n.right);
        b.connect(out.whites[c], 4, w, 2, lab_in);
        j_parent[c] = g;
        j_slot_at_parent[c] = 2;
      }
    }
    // root terminal (label lab_in, white -> black)
    VertexId blk = b.add_vertex(VertexKind::Black, 1);
    b.connect(out.whites[j_index(i, jt[i].root)], 4, blk, 0, lab_in);
  }
  // jp-forest. When a jp-edge w -> u doubles a j-bus u -> w, the two
  // parallel edges must interleave oppositely around their endpoints:
  // u at jin_R (slot 2) forces w's slot 5, u at jin_L forces slot 3.
  for (int i = 0; i < k; ++i) {
    int eligible_seen = 0;
    for (std::size_t nn = 0; nn < pt[i].nodes.size(); ++nn) {
      const TreeNode& n = pt[i].nodes[nn];
      int gw = p_to_j[p_index(i, static_cast<int>(nn))];
      VertexId w = out.whites[gw];
      int forced_slot = -1, forced_child = -1;
      for (int side = 0; side < 2; ++side) {
        int c = side == 0 ? n.left : n.right;
        if (c < 0) continue;
        int gc = p_to_j[p_index(i, c)];
        if (j_parent[gw] == gc)
          forced_child = gc, forced_slot = j_slot_at_parent[gw] == 2 ? 5 : 3;
      }
      bool eligible = (n.left >= 0 || n.right >= 0) && forced_child < 0;
      bool flip = false;
      if (eligible && !plan.pflip.empty()) {
        flip = (plan.pflip[i] >> eligible_seen) & 1u;
        eligible_seen++;
      }
      auto slot_of = [&](int child_node, bool left_side) {
        int def = (left_side != flip) ? 5 : 3;
        if (forced_child < 0) return def;
        if (child_node >= 0 && p_to_j[p_index(i, child_node)] == forced_child)
          return forced_slot;
        return forced_slot == 5 ? 3 : 5;  // the sibling takes the other slot
      };
      auto jp_connect = [&](int child_node, int leaf, bool left_side) {
        int slot = slot_of(child_node, left_side);
        if (child_node >= 0)
          b.connect(w, slot, out.whites[p_to_j[p_index(i, child_node)]], 1, lab_out);
        else if (leaf >= 0)
          out.out_ports[leaf] = {w, slot};
      };
      jp_connect(n.left, n.leaf_left, true);
      jp_connect(n.right, n.leaf_right, false);
    }
    VertexId blk = b.add_vertex(VertexKind::Black, 1);
    b.connect(blk, 0, out.whites[p_to_j[p_index(i, pt[i].root)]], 1, lab_out);
  }
  out.ok = true;
  return out;
}


// Deterministic single tower: sibling pair at the left end of the strand
// row, conversion sibling pair at the right end; used to close scratch
// verifications and fixtures.
BuiltForests lay_tower(ChartBuilder& b, int S, Label lab_in, Label lab_out) {
  LadderPlan tp;
  tp.a = {1, S - 1};
  tp.b = {S - 1, 1};
  if (S == 2) tp.a = tp.b = {1, 1};
  TreePlan jt;
  jt.nodes.push_back({0, 1, -1, -1, 0, 1});
  for (int t = 1; t <= S - 2; ++t) jt.nodes.push_back({0, t + 1, t - 1, -1, -1, t + 1});
  jt.root = static_cast<int>(jt.nodes.size()) - 1;
  jt.sib = 0;
  TreePlan pt;
  pt.nodes.push_back({S - 2, S - 1, -1, -1, S - 2, S - 1});
  for (int t = 1; t <= S - 2; ++t)
    pt.nodes.push_back({S - 2 - t, S - 1, -1, t - 1, S - 2 - t, -1});
  pt.root = static_cast<int>(pt.nodes.size()) - 1;
  pt.sib = 0;
  tp.jt = {jt};
  tp.pt = {pt};
  for (int t = S - 4; t >= 0; --t) tp.match.push_back(t);
  return lay_ladder(b, tp, lab_in, lab_out);
}

bool plan_enumerate(const std::vector<int>& a, const std::vector<int>& b,
                    const std::function<bool(const LadderPlan&)>& try_plan) {
  int k = static_cast<int>(a.size()) - 1;
  auto la = layout_of(a), lb = layout_of(b);
  if (!la || !lb) return false;
  int S = static_cast<int>(la->kind.size());
  if (S != static_cast<int>(lb->kind.size())) return false;
  long attempts = 0;
  const long kMaxAttempts = 400000;

  // assignments of free strands to trees forming non-crossing leaf sets
  auto assignments = [&](const LeafLayout& L) {
    std::vector<std::vector<int>> out;  // per position: owning tree
    std::vector<int> frees;
    std::vector<int> owner(S, -1);
    for (int i = 0; i < k; ++i) owner[L.pair_pos[i]] = owner[L.pair_pos[i] + 1] = i;
    for (int p = 0; p < S; ++p)
      if (owner[p] < 0) frees.push_back(p);
    std::vector<int> pick(frees.size(), 0);
    auto noncrossing = [&](const std::vector<int>& ow) {
      // two sets cross iff their elements interleave x1 < y1 < x2 < y2
      for (int t1 = 0; t1 < k; ++t1)
        for (int t2 = t1 + 1; t2 < k; ++t2) {
          int state = -1, flips = 0;
          for (int p = 0; p < S; ++p) {
            if (ow[p] != t1 && ow[p] != t2) continue;
            if (ow[p] != state) state = ow[p], flips++;
          }
          if (flips > 3) return false;  // t1..t2..t1..t2 pattern crosses
        }
      return true;
    };
    std::function<void(std::size_t)> rec = [&](std::size_t i) {
      if (out.size() > 400) return;
      if (i == frees.size()) {
        if (noncrossing(owner)) out.push_back(owner);
        return;
      }
      for (int t = 0; t < k; ++t) {
        owner[frees[i]] = t;
        rec(i + 1);
      }
      owner[frees[i]] = -1;
    };
    rec(0);
    return out;
  };
  auto a_assign = assignments(*la);
  auto b_assign = assignments(*lb);

  LadderPlan plan;
  plan.a = a;
  plan.b = b;
  for (const auto& aw : a_assign) {
    std::vector<std::vector<int>> a_leaves(k);
    for (int p = 0; p < S; ++p) a_leaves[aw[p]].push_back(p);
    std::vector<int> a_counts(k);
    for (int t = 0; t < k; ++t) a_counts[t] = static_cast<int>(a_leaves[t].size()) - 1;
    for (const auto& bw : b_assign) {
      std::vector<std::vector<int>> b_leaves(k);
      for (int p = 0; p < S; ++p) b_leaves[bw[p]].push_back(p);
      bool sizes_ok = true;
      int freeA = 0;
      for (int t = 0; t < k; ++t) {
        int nb = static_cast<int>(b_leaves[t].size()) - 1;
        if (nb != a_counts[t]) sizes_ok = false;          // per-tree node count
        if ((a_counts[t] == 1) != (nb == 1)) sizes_ok = false;
        freeA += a_counts[t] - (a_counts[t] == 1 ? 1 : 2);
      }
      if (!sizes_ok || freeA < 0) continue;
      // per-tree shape pools
      std::vector<std::vector<TreePlan>> jshapes(k), pshapes(k);
      bool shapes_ok = true;
      for (int t = 0; t < k && shapes_ok; ++t) {
        int jp = 0, pp = 0;
        for (std::size_t i = 0; i < a_leaves[t].size(); ++i)
          if (a_leaves[t][i] == la->pair_pos[t]) jp = static_cast<int>(i);
        for (std::size_t i = 0; i < b_leaves[t].size(); ++i)
          if (b_leaves[t][i] == lb->pair_pos[t]) pp = static_cast<int>(i);
        jshapes[t] = all_trees(a_leaves[t], jp);
        pshapes[t] = all_trees(b_leaves[t], pp);
        if (jshapes[t].empty() || pshapes[t].empty()) shapes_ok = false;
      }
      if (!shapes_ok) continue;
      std::function<bool(int)> pick = [&](int t) -> bool {
        if (attempts > kMaxAttempts) return false;
        if (t == 2 * k) {
          std::vector<int> tree_bits(k, 0);
          int flip_bits = 0;
          for (int t2 = 0; t2 < k; ++t2) {
            for (const TreeNode& n : plan.pt[t2].nodes)
              if (n.left >= 0 || n.right >= 0) tree_bits[t2]++;
            tree_bits[t2] = std::min(tree_bits[t2], 3);
            flip_bits += tree_bits[t2];
          }
          flip_bits = std::min(flip_bits, 9);
          std::vector<int> base(freeA);
          for (int i2 = 0; i2 < freeA; ++i2) base[i2] = i2;
          do {
            plan.match = base;
            for (long fb = 0; fb < (1L << flip_bits); ++fb) {
              long rest = fb;
              plan.pflip.assign(k, 0);
              for (int t2 = 0; t2 < k; ++t2) {
                plan.pflip[t2] =
                    static_cast<unsigned>(rest & ((1L << tree_bits[t2]) - 1));
                rest >>= tree_bits[t2];
              }
              if (++attempts > kMaxAttempts) return false;
              if (try_plan(plan)) return true;
            }
          } while (std::next_permutation(base.begin(), base.end()));
          return false;
        }
        auto& pool = t < k ? jshapes[t] : pshapes[t - k];
        auto& slot = t < k ? plan.jt : plan.pt;
        if (static_cast<int>(slot.size()) <= (t < k ? t : t - k)) slot.push_back({});
        for (const TreePlan& tp : pool) {
          slot[t < k ? t : t - k] = tp;
          if (pick(t + 1)) return true;
          if (attempts > kMaxAttempts) return false;
        }
        return false;
      };
      plan.jt.clear();
      plan.pt.clear();
      if (pick(0)) return true;
      if (attempts > kMaxAttempts) return false;
    }
  }
  return false;
}

}  // namespace

Ladder build_ladder(ChartBuilder& b, const std::vector<int>& a, const std::vector<int>& b2,
                    Label j, bool upward) {
  long sa = 0, sb = 0;
  for (int x : a) sa += x;
  for (int x : b2) sb += x;
  if (a.size() != b2.size() || sa != sb || a.size() < 2)
    throw std::runtime_error("build_ladder: invalid index pair");
  Label lab_in = upward ? j : j + 1;
  Label lab_out = upward ? j + 1 : j;
  Ladder result;
  bool done = plan_enumerate(a, b2, [&](const LadderPlan& plan) {
    // scratch verification: lay the plan in a throwaway builder, close with
    // a simple tower ladder and check planarity
    ChartBuilder scratch(std::max(lab_in, lab_out) + 1);
    BuiltForests f = lay_ladder(scratch, plan, lab_in, lab_out);
    if (!f.ok) {
      if (getenv("CHARTCALC_DEBUG_LADDER")) fprintf(stderr, "lay reject\n");
      return false;
    }
    int S = static_cast<int>(f.in_ports.size());
    // closing tower: consumes S strands of lab_out, emits S of lab_in
    BuiltForests g = [&] { return lay_tower(scratch, S, lab_out, lab_in); }();
    if (!g.ok) return false;
    for (int i = 0; i < S; ++i)
      connect(scratch, g.out_ports[i], f.in_ports[i], lab_in);
    for (int i = 0; i < S; ++i)
      connect(scratch, f.out_ports[i], g.in_ports[i], lab_out);
    try {
      Chart test = scratch.build();
      (void)test;
    } catch (const std::exception& ex) {
      if (getenv("CHARTCALC_DEBUG_LADDER")) fprintf(stderr, "scratch reject: %s\n", ex.what());
      return false;
    }
    // replay into the real builder
    BuiltForests real = lay_ladder(b, plan, lab_in, lab_out);
    if (!real.ok) return false;
    result.in_ports = real.in_ports;
    result.out_ports = real.out_ports;
    result.whites = real.whites;
    return true;
  });
  if (!done) throw std::runtime_error("build_ladder: unrealizable index pair");
  return result;
}

// ---------------------------------------------------------------------
// fixture closures
// ---------------------------------------------------------------------

namespace {

std::vector<Site> swapped(const std::vector<Site>& sites) {
  std::vector<Site> out;
  for (const Site& s : sites) {
    if (std::holds_alternative<SiteO>(s))
      out.push_back(SiteI{});
    else if (std::holds_alternative<SiteI>(s))
      out.push_back(SiteO{});
    else {
      SiteBlock blk = std::get<SiteBlock>(s);
      blk.reversed = !blk.reversed;
      out.push_back(blk);
    }
  }
  return out;
}

}  // namespace

ClosedTangle close_spine_fixture(const std::vector<Site>& sites, Label m, Label k,
                                 int degree, const std::string& name) {
  ChartBuilder b(degree);
  SpineChain c1 = build_spine(b, sites, m, k);
  SpineChain c2 = build_spine(b, swapped(sites), m, k);
  if (c1.in_ports.size() != c2.out_ports.size() ||
      c1.out_ports.size() != c2.in_ports.size())
    throw std::runtime_error("close_spine_fixture: port count mismatch");
  // verticals: chain1 ins fed by chain2 outs, same emission index
  for (std::size_t i = 0; i < c1.in_ports.size(); ++i)
    connect(b, c2.out_ports[i], c1.in_ports[i], k);
  // wraps: chain1 outs feed chain2 ins, same index
  for (std::size_t i = 0; i < c1.out_ports.size(); ++i)
    connect(b, c1.out_ports[i], c2.in_ports[i], k);
  // spine closure at both ends
  EdgeId right_closure;
  if (!c1.right_inward)
    right_closure =
        b.connect(c1.end_right.v, c1.end_right.slot, c2.end_right.v, c2.end_right.slot, m);
  else
    right_closure =
        b.connect(c2.end_right.v, c2.end_right.slot, c1.end_right.v, c1.end_right.slot, m);
  if (!c1.left_inward)
    b.connect(c1.end_left.v, c1.end_left.slot, c2.end_left.v, c2.end_left.slot, m);
  else
    b.connect(c2.end_left.v, c2.end_left.slot, c1.end_left.v, c1.end_left.slot, m);
  b.name(name);
  ClosedTangle out{b.build(), {}};
  // outer face: right closure edge, side away from the chains
  {
    Chart& c = out.chart;
    DartId d = c.vertex_of(c.edges[right_closure].tail) == c1.end_right.v
                   ? c.edges[right_closure].tail
                   : c.edges[right_closure].head;
    c.outer_hints.clear();
    c.outer_hints.emplace_back(c1.end_right.v, d);
    if (auto err = c.finalize()) throw std::runtime_error("close_spine_fixture: " + *err);
  }
  std::vector<EdgeId> core = c1.spine_edges;
  out.disk = disk_around_edges(out.chart, core);
  return out;
}

ClosedTangle close_ladder_fixture(const std::vector<int>& a, const std::vector<int>& b2,
                                  Label j, int degree, const std::string& name) {
  ChartBuilder b(degree);
  Ladder l1 = build_ladder(b, a, b2, j, true);
  long S = static_cast<long>(l1.in_ports.size());
  Ladder l2 = [&] {
    std::vector<int> ta{1, static_cast<int>(S - 1)}, tb{static_cast<int>(S - 1), 1};
    if (S == 2) ta = tb = {1, 1};
    return build_ladder(b, ta, tb, j, false);  // downward: consumes j+1, emits j
  }();
  for (std::size_t i = 0; i < l1.in_ports.size(); ++i)
    connect(b, l2.out_ports[i], l1.in_ports[i], j);
  for (std::size_t i = 0; i < l1.out_ports.size(); ++i)
    connect(b, l1.out_ports[i], l2.in_ports[i], j + 1);
  b.name(name);
  ClosedTangle out{b.build(), {}};
  {
    Chart& c = out.chart;
    Port p = l1.out_ports.back();
    DartId d = b.dart_in_slot(p.v, p.slot);
    (void)d;
    c.outer_hints.clear();
    c.outer_hints.emplace_back(p.v, c.vertices[p.v].rotation[p.slot]);
    if (auto err = c.finalize()) throw std::runtime_error("close_ladder_fixture: " + *err);
  }
  std::vector<EdgeId> core;
  std::vector<char> inw(out.chart.vertices.size(), 0);
  for (VertexId w : l1.whites) inw[w] = 1;
  for (EdgeId e = 0; e < static_cast<EdgeId>(out.chart.edges.size()); ++e) {
    VertexId t = out.chart.tail_vertex(e), h = out.chart.head_vertex(e);
    bool tin = t < static_cast<VertexId>(inw.size()) && inw[t];
    bool hin = h < static_cast<VertexId>(inw.size()) && inw[h];
    if ((tin && hin) || (tin && out.chart.is_black(h)) || (hin && out.chart.is_black(t)))
      core.push_back(e);
  }
  out.disk = disk_around_edges(out.chart, core);
  return out;
}

}  // namespace chartcalc::synth
