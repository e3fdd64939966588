#include "chartcalc/canonical.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <vector>

#include "chartcalc/features.hpp"

namespace chartcalc {

namespace {

// Breadth-first encoding of one component rooted at `root`. Darts are
// numbered at first mention; each vertex is scanned once, from its first
// discovered dart, in rotation order. The sequence is invariant under
// relabeling, so the lexicographically minimal root gives a canonical form.
struct Encoding {
  std::vector<int> seq;
  std::vector<int> dart_number;  // discovery number per dart, -1 if unseen
};

Encoding encode_from(const Chart& c, DartId root) {
  Encoding enc;
  enc.dart_number.assign(c.dart_count(), -1);
  int next = 0;
  std::vector<DartId> queue;
  auto mention = [&](DartId d) {
    if (enc.dart_number[d] < 0) {
      enc.dart_number[d] = next++;
      queue.push_back(d);
    }
    return enc.dart_number[d];
  };
  mention(root);
  std::vector<char> vertex_scanned(c.vertices.size(), 0);
  for (std::size_t qi = 0; qi < queue.size(); ++qi) {
    DartId d = queue[qi];
    VertexId v = c.vertex_of(d);
    if (vertex_scanned[v]) continue;
    vertex_scanned[v] = 1;
    enc.seq.push_back(static_cast<int>(c.vertices[v].kind));
    enc.seq.push_back(static_cast<int>(c.vertices[v].rotation.size()));
    DartId w = d;
    do {
      const EdgeRec& e = c.edges[c.edge_of(w)];
      enc.seq.push_back(e.label);
      enc.seq.push_back(e.tail == w ? 1 : 0);
      enc.seq.push_back(e.closed ? 1 : 0);
      enc.seq.push_back(mention(c.twin[w]));
      enc.seq.push_back(mention(w));
      w = c.rot_next[w];
    } while (w != d);
  }
  return enc;
}

struct Ctx {
  const Chart* chart;
  std::vector<std::vector<int>> children;     // component -> nested components
  std::vector<std::string> memo;              // component -> full subtree code
  std::vector<char> skip_edge;                // edges excluded (brim filter)
};

std::string subtree_code(Ctx& ctx, int comp);

// full code of one component: minimal rooted encoding, the canonical id of
// its outer face, and the nested children grouped per canonical face id.
std::string component_code(Ctx& ctx, int comp) {
  const Chart& c = *ctx.chart;
  std::string best;
  for (DartId root = 0; root < static_cast<DartId>(c.dart_count()); ++root) {
    if (c.vertex_component[c.vertex_of(root)] != comp) continue;
    Encoding enc = encode_from(c, root);
    // canonical face ids: minimal dart number with this face on the left
    std::map<FaceId, int> face_num;
    for (DartId d = 0; d < static_cast<DartId>(c.dart_count()); ++d) {
      if (enc.dart_number[d] < 0) continue;
      FaceId f = c.face_left[d];
      auto it = face_num.find(f);
      if (it == face_num.end() || enc.dart_number[d] < it->second)
        face_num[f] = enc.dart_number[d];
    }
    std::ostringstream os;
    for (int x : enc.seq) os << x << ',';
    os << "|o" << face_num.at(c.outer_face_of_component[comp]) << '|';
    std::map<int, std::vector<std::string>> kids;
    for (int k : ctx.children[comp])
      kids[face_num.at(c.parent_face[k])].push_back(subtree_code(ctx, k));
    for (auto& [f, codes] : kids) {
      std::sort(codes.begin(), codes.end());
      os << 'f' << f << '[';
      for (auto& s : codes) os << s << ';';
      os << ']';
    }
    std::string cand = os.str();
    if (best.empty() || cand < best) best = cand;
  }
  return best;
}

std::string subtree_code(Ctx& ctx, int comp) {
  if (!ctx.memo[comp].empty()) return ctx.memo[comp];
  return ctx.memo[comp] = component_code(ctx, comp);
}

std::string code_filtered(const Chart& c, const std::vector<char>& keep_component) {
  Ctx ctx;
  ctx.chart = &c;
  ctx.children.assign(c.component_count, {});
  ctx.memo.assign(c.component_count, "");
  for (int k = 0; k < c.component_count; ++k)
    if (keep_component[k] && c.parent_component[k] >= 0 &&
        keep_component[c.parent_component[k]])
      ctx.children[c.parent_component[k]].push_back(k);
  std::vector<std::string> tops;
  for (int k = 0; k < c.component_count; ++k) {
    if (!keep_component[k]) continue;
    bool top = c.parent_component[k] < 0 || !keep_component[c.parent_component[k]];
    if (top) tops.push_back(subtree_code(ctx, k));
  }
  std::sort(tops.begin(), tops.end());
  std::ostringstream os;
  os << "chart:n" << c.n << '{';
  for (auto& t : tops) os << t << "##";
  os << '}';
  return os.str();
}

}  // namespace

std::string canonical_code(const Chart& chart) {
  std::vector<char> keep(std::max(1, chart.component_count), 1);
  return code_filtered(chart, keep);
}

std::string canonical_code_main(const Chart& chart) {
  std::vector<char> keep(std::max(1, chart.component_count), 1);
  for (int comp = 0; comp < chart.component_count; ++comp)
    if (!component_in_main(chart, comp)) keep[comp] = 0;
  return code_filtered(chart, keep);
}

bool isomorphic(const Chart& a, const Chart& b) {
  return canonical_code(a) == canonical_code(b);
}

}  // namespace chartcalc
