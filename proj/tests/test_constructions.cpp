#include "ksrd/constructions.hpp"

#include <algorithm>

#include "doctest.h"
#include "ksrd/errors.hpp"
#include "ksrd/solver.hpp"
#include "ksrd/verifier.hpp"

using namespace ksrd;

namespace {

FormulaResult table(const char* token, int k) {
  return formula(parse_family_spec(token), k);
}

}  // namespace

TEST_CASE("formula table matches the proven values") {
  CHECK(table("grid2:4", 2) == FormulaResult{6, BoundKind::exact, "Thm-Grid2"});
  CHECK(table("grid2:3", 2) == FormulaResult{5, BoundKind::exact, "Thm-Grid2"});
  CHECK(table("an:7", 2) == FormulaResult{11, BoundKind::upper_bound, "Prop-An"});
  CHECK(table("dn:6", 2) == FormulaResult{16, BoundKind::exact, "Prop-Dn"});
  CHECK(table("rpp:8", 2) == FormulaResult{32, BoundKind::exact, "Prop-Rnpp"});
  CHECK(table("path:11", 2) == FormulaResult{9, BoundKind::exact, "Thm-Pn"});
  CHECK(table("path:5", 2).value == 4);
  CHECK(table("cycle:6", 2) == FormulaResult{5, BoundKind::exact, "Prop-Cn"});
  CHECK(table("kn:4", 2).value == 3);
  CHECK(table("kn:4", 4).value == 4);
  CHECK(table("sn:5", 3).value == 4);
  CHECK(table("wn:8", 2).value == 3);
  CHECK(table("knp:5,4", 2).value == 6);   // k < p-1
  CHECK(table("knp:5,4", 3).value == 7);   // k >= p-1
  CHECK(table("knp:3,2", 2).value == 4);
}

TEST_CASE("out-of-hypothesis queries fall back to the general bounds") {
  CHECK(table("path:6", 1) ==
        FormulaResult{2, BoundKind::lower_bound, "Thm-LowerBound"});
  CHECK(table("dn:5", 3) ==
        FormulaResult{4, BoundKind::lower_bound, "Thm-LowerBound"});
  CHECK(table("grid:3,3", 9) == FormulaResult{9, BoundKind::exact, "Thm-kEqN"});
  CHECK(table("grid:3,3", 2) ==
        FormulaResult{3, BoundKind::lower_bound, "Thm-LowerBound"});
  CHECK(table("knp:4,1", 2) ==
        FormulaResult{3, BoundKind::lower_bound, "Thm-LowerBound"});
  CHECK_THROWS_AS(table("path:3", 4), std::invalid_argument);
  CHECK_THROWS_AS(table("path:3", 0), std::invalid_argument);
}

TEST_CASE("ladder blocks carry the advertised weights") {
  for (int k = 2; k <= 6; ++k) {
    CHECK(GridPattern::central_block(k).weight() == 2 * k);
    CHECK(GridPattern::period_block(k).weight() == 2 * k);
    CHECK(GridPattern::period_block(k).cols() == k + 1);
  }
  for (int m = 1; m <= 7; ++m) {
    CHECK(GridPattern::side_block(m).weight() == 2 * m - 1);
    CHECK(GridPattern::side_block(m).cols() == m);
  }
  CHECK(GridPattern::side_block(0).cols() == 0);

  GridPattern b3 = GridPattern::side_block(3);
  CHECK(b3.rows[0] == std::vector<int>{1, 0, 2});
  CHECK(b3.rows[1] == std::vector<int>{0, 2, 0});
  CHECK(b3.flipped_rows().rows[0] == std::vector<int>{0, 2, 0});
  CHECK(b3.reversed_cols().rows[0] == std::vector<int>{2, 0, 1});
}

TEST_CASE("path block has k+1 zeros and k twos") {
  for (int k = 2; k <= 6; ++k) {
    int n = 2 * k + 1;
    Labeling f = construct({Family::path, {n}}, k);
    CHECK(static_cast<int>(f.level_set(0).size()) == k + 1);
    CHECK(static_cast<int>(f.level_set(2).size()) == k);
    CHECK(f.weight() == 2 * k);
  }
}

TEST_CASE("explicit constructions match their formulas") {
  Labeling p11 = construct({Family::path, {11}}, 2);
  CHECK(p11.labels() ==
        std::vector<int>{0, 2, 0, 2, 0, 0, 2, 0, 2, 0, 1});
  CHECK(p11.weight() == 9);

  Labeling rpp5 = construct({Family::polytope_Rpp, {5}}, 2);
  CHECK(rpp5.weight() == 20);

  Labeling k4 = construct({Family::complete, {4}}, 4);
  CHECK(k4.labels() == std::vector<int>(4, 1));
}

TEST_CASE("construction sweep: weight equals formula and verifies proper") {
  auto sweep = [](const FamilySpec& spec, int k) {
    CAPTURE(to_string(spec));
    CAPTURE(k);
    FormulaResult expected = formula(spec, k);
    Labeling f = construct(spec, k);  // self-verifies
    CHECK(f.weight() == expected.value);
  };

  for (int k = 2; k <= 4; ++k)
    for (int n = std::max(3, k); n <= 25; ++n) {
      sweep({Family::path, {n}}, k);
      sweep({Family::cycle, {n}}, k);
    }
  for (int k = 2; k <= 4; ++k)
    for (int n = (k + 1) / 2; n <= 12; ++n) {
      if (n < 1 || 2 * n < k) continue;
      sweep({Family::grid2, {n}}, k);
    }
  for (int n = 2; n <= 12; ++n)
    for (int k = 1; k <= n; ++k) sweep({Family::complete, {n}}, k);
  for (int n = 4; n <= 12; ++n)
    for (int k = 2; k <= n; ++k) {
      sweep({Family::star, {n}}, k);
      sweep({Family::wheel, {n}}, k);
    }
  for (int p = 2; p <= 4; ++p)
    for (int n = p; n <= 6; ++n)
      for (int k = 2; k <= n + p; ++k)
        sweep({Family::complete_bipartite, {n, p}}, k);
  for (int n = 5; n <= 10; ++n) {
    sweep({Family::polytope_D, {n}}, 2);
    sweep({Family::polytope_Rpp, {n}}, 2);
    sweep({Family::polytope_A, {n}}, 2);
  }
}

TEST_CASE("exact-kind formulas agree with the brute-force oracle") {
  struct Row {
    const char* token;
    int k;
  };
  const Row rows[] = {
      {"path:5", 2},  {"path:7", 2}, {"path:6", 3}, {"cycle:5", 2},
      {"cycle:6", 2}, {"kn:4", 2},   {"kn:5", 4},   {"sn:5", 2},
      {"wn:5", 2},    {"knp:3,2", 2}, {"knp:4,3", 2}, {"grid2:2", 2},
      {"grid2:3", 2}, {"grid2:4", 2},
  };
  for (const auto& row : rows) {
    CAPTURE(row.token);
    CAPTURE(row.k);
    FormulaResult fr = table(row.token, row.k);
    REQUIRE(fr.kind == BoundKind::exact);
    Graph g = make_family(parse_family_spec(row.token));
    CHECK(fr.value == gamma_ksrd_bruteforce(g, row.k));
  }
}

TEST_CASE("cubic polytope values sit exactly on the cubic lower bound") {
  for (int n = 5; n <= 20; ++n) {
    CHECK(table(("dn:" + std::to_string(n)).c_str(), 2).value ==
          (2 * 4 * n + 2) / 3);
    CHECK(table(("rpp:" + std::to_string(n)).c_str(), 2).value == 4 * n);
  }
}

TEST_CASE("general bounds for arbitrary graphs") {
  Graph cubic20 = make_family({Family::polytope_D, {5}});
  auto bounds = general_bounds(cubic20, 2);
  REQUIRE(bounds.size() == 2);
  CHECK(bounds[0] == FormulaResult{3, BoundKind::lower_bound, "Thm-LowerBound"});
  CHECK(bounds[1] ==
        FormulaResult{14, BoundKind::lower_bound, "Thm-CubicLower"});

  Graph p4 = make_family({Family::path, {4}});
  auto exact = general_bounds(p4, 4);
  REQUIRE(exact.size() == 1);
  CHECK(exact[0] == FormulaResult{4, BoundKind::exact, "Thm-kEqN"});

  RelatedNumbers rel = related_numbers(p4, 3);
  REQUIRE(rel.gamma_dom == 2);
  auto with_rel = general_bounds(p4, 3, &rel);
  bool found = false;
  for (const auto& b : with_rel)
    if (b.source == "Prop-DomUpper") {
      CHECK(b.value == 8);
      CHECK(b.kind == BoundKind::upper_bound);
      found = true;
    }
  CHECK(found);
}

TEST_CASE("no construction outside the proofs") {
  CHECK_THROWS_AS(construct({Family::path, {6}}, 1), std::domain_error);
  CHECK_THROWS_AS(construct({Family::polytope_A, {6}}, 3), std::domain_error);
  CHECK_THROWS_AS(construct({Family::grid, {3, 3}}, 2), std::domain_error);
  // ... except the everyone-defends-themselves case.
  CHECK(construct({Family::grid, {2, 2}}, 4).weight() == 4);
}
