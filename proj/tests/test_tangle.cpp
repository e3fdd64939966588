#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chartcalc/axioms.hpp"
#include "chartcalc/disk.hpp"
#include "chartcalc/features.hpp"
#include "chartcalc/synth.hpp"

using namespace chartcalc;
using namespace chartcalc::synth;

TEST_CASE("single tower ladder closes into a legal annular chart") {
  for (int S : {2, 3, 4, 6}) {
    CAPTURE(S);
    std::vector<int> a{S - 1, 1}, b{1, S - 1};
    if (S == 2) a = b = {1, 1};
    ClosedTangle fx = close_ladder_fixture(a, b, 1, 3, "tower");
    AxiomReport rep = validate_axioms(fx.chart);
    for (auto& v : rep.violations) MESSAGE(to_string(v.axiom), " ", v.message);
    CHECK(rep.ok());
    auto t = std::get<TangleCounts>(make_tangle(fx.chart, fx.disk));
    CHECK(t.t_i == 1);
    CHECK(t.t_o == 1);
    CHECK(t.e_i == S);
    CHECK(t.e_o == S);
  }
}

TEST_CASE("golden ladders are realizable") {
  using VI = std::vector<int>;
  std::vector<std::pair<VI, VI>> ladders = {
      {{3, 3, 2}, {2, 3, 3}},
      {{2, 3, 4}, {4, 3, 2}},
      {{1, 3, 2, 2}, {1, 2, 4, 1}},
      {{2, 3, 2}, {2, 3, 2}},
      {{3, 3, 3, 1}, {2, 3, 4, 1}},  // the 10-strand example
  };
  for (auto& [a, b] : ladders) {
    CAPTURE(a[0]);
    CAPTURE(b[0]);
    ClosedTangle fx = close_ladder_fixture(a, b, 1, 3, "ladder");
    AxiomReport rep = validate_axioms(fx.chart);
    for (auto& v : rep.violations) MESSAGE(to_string(v.axiom), " ", v.message);
    CHECK(rep.ok());
    int S = 0;
    for (int x : a) S += x;
    auto t = std::get<TangleCounts>(make_tangle(fx.chart, fx.disk));
    CHECK(t.e_i == S);
    CHECK(t.e_o == S);
    CHECK(t.t_i == static_cast<int>(a.size()) - 1);
    CHECK(t.t_o == static_cast<int>(a.size()) - 1);
  }
}
