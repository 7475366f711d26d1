#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "edgewalk/instances.hpp"
#include "edgewalk/io.hpp"
#include "edgewalk/rng.hpp"
#include "edgewalk/types.hpp"

using namespace edgewalk;

TEST_CASE("indicator_matrix") {
  SUBCASE("pair in a 3-universe") {
    SetSystem sys(3, {{0, 1}});
    ConstraintSet cs = indicator_matrix(sys);
    CHECK(cs.m == 1);
    CHECK(cs.row(0)[0] == 1.0);
    CHECK(cs.row(0)[1] == 1.0);
    CHECK(cs.row(0)[2] == 0.0);
    CHECK(cs.norms[0] == doctest::Approx(std::sqrt(2.0)));
    CHECK(cs.norms_sq[0] == 2.0);
    CHECK(cs.thresholds[0] == 0.0);
  }
  SUBCASE("empty system") {
    SetSystem sys(2, {});
    ConstraintSet cs = indicator_matrix(sys);
    CHECK(cs.m == 0);
  }
  SUBCASE("singleton and full set") {
    SetSystem sys(4, {{0}, {0, 1, 2, 3}});
    ConstraintSet cs = indicator_matrix(sys);
    CHECK(cs.norms[0] == 1.0);
    CHECK(cs.norms[1] == 2.0);
  }
  SUBCASE("norms_sq is the exact set size") {
    SetSystem sys(9, {{0, 1, 2}, {1, 3, 5, 7}, {}, {0, 8}});
    ConstraintSet cs = indicator_matrix(sys);
    for (int j = 0; j < cs.m; ++j)
      CHECK(cs.norms_sq[j] == double(sys.sets[j].size()));
    CHECK(cs.zero_row[2]);
  }
}

TEST_CASE("discrepancy") {
  SUBCASE("3-cycle all ones") {
    SetSystem sys(3, {{0, 1}, {1, 2}, {0, 2}});
    Coloring chi({1, 1, 1});
    DiscrepancyReport rep = discrepancy(chi, sys);
    CHECK(rep.max_abs == 2.0);
  }
  SUBCASE("balanced pair") {
    SetSystem sys(2, {{0, 1}});
    DiscrepancyReport rep = discrepancy(Coloring({1, -1}), sys);
    CHECK(rep.max_abs == 0.0);
  }
  SUBCASE("empty system has discrepancy 0") {
    SetSystem sys(3, {});
    DiscrepancyReport rep = discrepancy(Coloring({1, 1, -1}), sys);
    CHECK(rep.max_abs == 0.0);
    CHECK(rep.per_constraint.empty());
  }
  SUBCASE("length mismatch") {
    SetSystem sys(3, {{0}});
    CHECK_THROWS_AS(discrepancy(Coloring({1, 1}), sys), ValidationError);
  }
  SUBCASE("matches indicator-matrix inner products exactly") {
    GeneratorSpec spec;
    spec.kind = GeneratorKind::kBernoulli;
    spec.n = 17;
    spec.m = 23;
    spec.param = 0.4;
    spec.seed = 5;
    const SetSystem sys = generate_sets(spec);
    const ConstraintSet cs = indicator_matrix(sys);
    Rng rng(9);
    std::vector<int> chi(sys.n);
    for (auto& c : chi) c = (rng.next_u64() & 1) ? 1 : -1;
    const Coloring col(chi);
    const DiscrepancyReport a = discrepancy(col, sys);
    std::vector<double> x(sys.n), x0(sys.n, 0.0);
    for (int i = 0; i < sys.n; ++i) x[i] = chi[i];
    const DiscrepancyReport b = drift_report(cs, x, x0);
    REQUIRE(a.per_constraint.size() == b.per_constraint.size());
    for (std::size_t j = 0; j < a.per_constraint.size(); ++j)
      CHECK(a.per_constraint[j] == b.per_constraint[j]);
  }
}

TEST_CASE("check_feasibility") {
  SUBCASE("single zero threshold at the boundary") {
    const FeasibilityResult r = check_feasibility({0.0}, 16);
    CHECK(r.sum == 1.0);
    CHECK(r.budget == 1.0);
    CHECK(r.feasible);
  }
  SUBCASE("sixteen zero thresholds blow the budget") {
    const FeasibilityResult r =
        check_feasibility(std::vector<double>(16, 0.0), 16);
    CHECK(r.sum == 16.0);
    CHECK_FALSE(r.feasible);
  }
  SUBCASE("c = 4 sqrt(ln 16) sits exactly on the budget") {
    const int n = 24;
    const double c = 4.0 * std::sqrt(std::log(16.0));
    CHECK(c == doctest::Approx(6.6605).epsilon(1e-4));
    const FeasibilityResult r =
        check_feasibility(std::vector<double>(n, c), n);
    CHECK(r.sum == doctest::Approx(r.budget).epsilon(1e-12));
    CHECK(r.feasible);
  }
  SUBCASE("monotone: raising any threshold never breaks feasibility") {
    Rng rng(3);
    for (int trial = 0; trial < 50; ++trial) {
      const int m = 1 + int(rng.below(8));
      std::vector<double> c(m);
      for (auto& v : c) v = 8.0 * rng.uniform();
      const int n = 1 + int(rng.below(32));
      const FeasibilityResult before = check_feasibility(c, n);
      c[rng.below(m)] += 2.0 * rng.uniform();
      const FeasibilityResult after = check_feasibility(c, n);
      CHECK(after.sum <= before.sum + 1e-15);
      if (before.feasible) CHECK(after.feasible);
    }
  }
  SUBCASE("negative threshold is rejected") {
    CHECK_THROWS_AS(check_feasibility({-0.5}, 4), ValidationError);
  }
}

TEST_CASE("set system text round trip") {
  SUBCASE("canonical example") {
    SetSystem sys(3, {{0, 2}});
    const std::string text = format_set_system(sys);
    CHECK(text == "3 1\n0 2\n");
    const SetSystem back = parse_set_system(text);
    CHECK(back.n == 3);
    REQUIRE(back.m() == 1);
    CHECK(back.sets[0] == std::vector<int>{0, 2});
    CHECK(format_set_system(back) == text);
  }
  SUBCASE("empty sets survive") {
    SetSystem sys(4, {{}, {1, 3}, {}});
    const std::string text = format_set_system(sys);
    const SetSystem back = parse_set_system(text);
    CHECK(format_set_system(back) == text);
  }
  SUBCASE("random instances round-trip bit-exactly") {
    for (std::uint64_t seed = 1; seed <= 20; ++seed) {
      GeneratorSpec spec;
      spec.kind = GeneratorKind::kBernoulli;
      spec.n = 11;
      spec.m = 9;
      spec.param = 0.3;
      spec.seed = seed;
      const SetSystem sys = generate_sets(spec);
      const std::string text = format_set_system(sys);
      CHECK(format_set_system(parse_set_system(text)) == text);
    }
  }
  SUBCASE("out-of-range index names the line") {
    try {
      parse_set_system("3 2\n0 1\n0 5\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 3);
      CHECK(std::string(e.what()).find("line 3") != std::string::npos);
    }
  }
  SUBCASE("unsorted indices are rejected") {
    CHECK_THROWS_AS(parse_set_system("3 1\n2 0\n"), ParseError);
    CHECK_THROWS_AS(parse_set_system("3 1\n1 1\n"), ParseError);
  }
  SUBCASE("missing set lines are rejected") {
    CHECK_THROWS_AS(parse_set_system("3 2\n0\n"), ParseError);
  }
}

TEST_CASE("matrix csv") {
  SUBCASE("2x3 round trip") {
    ConstraintSet cs(3, {{1.5, -2.0, 0.25}, {0.0, 1e-3, 7.0}});
    const std::string text = format_matrix_csv(cs);
    const ConstraintSet back = parse_matrix_csv(text);
    CHECK(back.n == 3);
    CHECK(back.m == 2);
    CHECK(back.data == cs.data);
  }
  SUBCASE("ragged rows name the line") {
    try {
      parse_matrix_csv("1,2,3\n4,5\n");
      FAIL("expected ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
  SUBCASE("junk is rejected") {
    CHECK_THROWS_AS(parse_matrix_csv("1,x,3\n"), ParseError);
  }
}

TEST_CASE("type validation") {
  CHECK_THROWS_AS(SetSystem(3, {{0, 3}}), ValidationError);
  CHECK_THROWS_AS(SetSystem(3, {{-1}}), ValidationError);
  CHECK_THROWS_AS(Coloring({1, 0}), ValidationError);
  CHECK_THROWS_AS(FractionalColoring({0.5, 1.1}), ValidationError);
  CHECK_NOTHROW(FractionalColoring({1.0, -1.0, 1.0 + 5e-10}));
  ConstraintSet cs(2, {{1.0, 0.0}});
  CHECK_THROWS_AS(cs.set_uniform_threshold(-1.0), ValidationError);
  CHECK_THROWS_AS(ConstraintSet(2, {{1.0, 0.0, 3.0}}), ValidationError);
}

TEST_CASE("normalized drops zero rows and keeps thresholds") {
  SetSystem sys(3, {{0, 1}, {}, {2}});
  ConstraintSet cs = indicator_matrix(sys);
  cs.set_thresholds({1.5, 0.0, 2.5});
  std::vector<int> orig;
  const ConstraintSet unit = cs.normalized(&orig);
  CHECK(unit.m == 2);
  CHECK(orig == std::vector<int>{0, 2});
  CHECK(unit.norms[0] == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(unit.thresholds[0] == 1.5);
  CHECK(unit.thresholds[1] == 2.5);
}
