#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chartcalc/axioms.hpp"
#include "chartcalc/canonical.hpp"
#include "chartcalc/disk.hpp"
#include "chartcalc/features.hpp"
#include "chartcalc/synth.hpp"

using namespace chartcalc;
using namespace chartcalc::synth;

TEST_CASE("type-II necklace: axioms, counts, tangle") {
  ClosedTangle fx = close_spine_fixture({SiteO{}, SiteI{}}, 1, 2, 3, "t2");
  const Chart& c = fx.chart;
  AxiomReport rep = validate_axioms(c);
  for (auto& v : rep.violations) MESSAGE(to_string(v.axiom), " ", v.message);
  CHECK(rep.ok());
  ComplexityReport cr = complexity(c);
  CHECK(cr.w == 4);
  CHECK(cr.c == 0);
  CHECK(cr.f == 0);

  auto tc = make_tangle(c, fx.disk);
  REQUIRE(std::holds_alternative<TangleCounts>(tc));
  auto& t = std::get<TangleCounts>(tc);
  // three k-label strands enter and leave; the two spine closures are
  // I-/O-edges of label m as well
  CHECK(t.e_i == 4);
  CHECK(t.e_o == 4);
  CHECK(t.t_i == 1);
  CHECK(t.t_o == 1);
  // identity E_I + T_O = E_O + T_I
  CHECK(t.e_i + t.t_o == t.e_o + t.t_i);
}

TEST_CASE("type-II_3 chains both polarities") {
  for (auto sites : {std::vector<Site>{SiteO{}, SiteI{}, SiteO{}},
                     std::vector<Site>{SiteI{}, SiteO{}, SiteI{}}}) {
    ClosedTangle fx = close_spine_fixture(sites, 2, 3, 4, "t3");
    CHECK(validate_axioms(fx.chart).ok());
    auto t = std::get<TangleCounts>(make_tangle(fx.chart, fx.disk));
    CHECK(t.t_i + t.t_o == 3);
  }
}

TEST_CASE("type-I block necklace") {
  for (int k = 0; k <= 3; ++k) {
    CAPTURE(k);
    ClosedTangle fx = close_spine_fixture({SiteBlock{k, false}}, 1, 2, 3, "tI");
    AxiomReport rep = validate_axioms(fx.chart);
    for (auto& v : rep.violations) MESSAGE(to_string(v.axiom), " ", v.message);
    CHECK(rep.ok());
    auto t = std::get<TangleCounts>(make_tangle(fx.chart, fx.disk));
    CHECK(t.e_i == k + 5);  // k+4 of label k plus the spine closure
    CHECK(t.e_o == k + 5);
    CHECK(t.t_i == 1);
    CHECK(t.t_o == 1);
    // the block contains a label-1 cycle
    bool found = false;
    for (auto& ca : cycle_analysis(fx.chart, 1))
      if (!ca.whites.empty()) found = true;
    CHECK(found);
  }
}

TEST_CASE("emission oracle matches hand computation") {
  // golden quadrant D4 word: reversed block k=2, then O
  std::vector<Site> w{SiteBlock{2, true}, SiteO{}};
  Emission em = emission_of(w);
  CHECK(em.a == std::vector<int>{4, 3, 1});
  CHECK(em.b == std::vector<int>{2, 5});
  CHECK(em.left_inward == false);
  CHECK(em.right_inward == false);

  std::vector<Site> w1{SiteI{}, SiteBlock{2, true}};
  Emission em1 = emission_of(w1);
  CHECK(em1.a == std::vector<int>{5, 2});
  CHECK(em1.b == std::vector<int>{1, 3, 4});

  std::vector<Site> w3{SiteBlock{0, true}, SiteO{}, SiteI{}, SiteO{}};
  Emission em3 = emission_of(w3);
  CHECK(em3.a == std::vector<int>{2, 3, 3, 1});
  CHECK(em3.b == std::vector<int>{2, 4, 2});
}

TEST_CASE("site solver recovers words") {
  auto sol = solve_sites({4, 3, 1}, {2, 5});
  REQUIRE(sol.has_value());
  Emission em = emission_of(*sol);
  CHECK(em.a == std::vector<int>{4, 3, 1});
  CHECK(em.b == std::vector<int>{2, 5});

  auto sol2 = solve_sites({1, 3, 1}, {1, 3, 1});
  if (sol2) {
    Emission em2 = emission_of(*sol2);
    CHECK(em2.a == std::vector<int>{1, 3, 1});
    CHECK(em2.b == std::vector<int>{1, 3, 1});
  }
}

TEST_CASE("brim normalization parks a hoop without changing main") {
  ClosedTangle fx = close_spine_fixture({SiteO{}, SiteI{}}, 1, 2, 3, "t2");
  Chart base = fx.chart;
  std::string main_before = canonical_code_main(base);
  // drop a simple hoop into some inner face
  ChartBuilder b(3);
  (void)b;
  Chart with = base;
  {
    // append a hoop component manually
    VertexId a = static_cast<VertexId>(with.vertices.size());
    VertexRec vr;
    vr.kind = VertexKind::Anchor;
    DartId d0 = static_cast<DartId>(with.darts.size());
    with.darts.push_back({static_cast<EdgeId>(with.edges.size()), a});
    with.darts.push_back({static_cast<EdgeId>(with.edges.size()), a});
    vr.rotation = {d0, d0 + 1};
    with.vertices.push_back(vr);
    EdgeRec er;
    er.label = 1;
    er.closed = true;
    er.tail = d0;
    er.head = d0 + 1;
    with.edges.push_back(er);
    // nest it inside a face away from the outer region
    DartId host = kNoDart;
    REQUIRE(with.finalize() == std::nullopt);
    for (DartId d = 0; d < static_cast<DartId>(with.dart_count()); ++d)
      if (with.region_left(d) != with.outer_region && with.vertex_of(d) != a) {
        host = d;
        break;
      }
    REQUIRE(host != kNoDart);
    with.placement_hints.emplace_back(a, host);
    with.outer_hints.emplace_back(a, d0 + 1);
    REQUIRE(with.finalize() == std::nullopt);
  }
  CHECK(canonical_code_main(with) == main_before);
  Chart normalized = normalize_brim(with);
  // hoop is top level afterwards
  int hoop_comp = normalized.vertex_component[normalized.vertices.size() - 1];
  CHECK(normalized.parent_component[hoop_comp] == -1);
  CHECK(canonical_code_main(normalized) == main_before);
  ComplexityReport r1 = complexity(with), r2 = complexity(normalized);
  CHECK(r1.w == r2.w);
  CHECK(r1.b == r2.b);
}
