#include <doctest.h>

#include <optional>
#include <random>

#include "vqcat/errors.hpp"
#include "vqcat/exact_lp.hpp"

using namespace vqcat;

namespace {

// Two-variable LPs by vertex enumeration: every intersection of two
// boundary lines (rows or axes) that is feasible, minimized over.
std::optional<Rational> vertex_minimum(const LinearProgram& lp) {
  std::vector<std::array<Rational, 3>> lines;  // p x + q y = r
  for (std::size_t i = 0; i < lp.a.size(); ++i) lines.push_back({lp.a[i][0], lp.a[i][1], lp.b[i]});
  lines.push_back({1, 0, 0});
  lines.push_back({0, 1, 0});
  std::optional<Rational> best;
  for (std::size_t i = 0; i < lines.size(); ++i)
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto& l = lines[i];
      const auto& m = lines[j];
      Rational det = l[0] * m[1] - l[1] * m[0];
      if (det == 0) continue;
      Rational x = (l[2] * m[1] - l[1] * m[2]) / det;
      Rational y = (l[0] * m[2] - l[2] * m[0]) / det;
      if (x < 0 || y < 0) continue;
      bool ok = true;
      for (std::size_t r = 0; r < lp.a.size() && ok; ++r) ok = lp.a[r][0] * x + lp.a[r][1] * y >= lp.b[r];
      if (!ok) continue;
      Rational v = lp.c[0] * x + lp.c[1] * y;
      if (!best || v < *best) best = v;
    }
  return best;
}

}  // namespace

TEST_CASE("a small covering LP") {
  LinearProgram lp;
  lp.c = {1, 1};
  lp.add_row({1, 2}, 2);
  lp.add_row({3, 1}, 3);
  LpSolution s = solve_lp(lp);
  REQUIRE(s.status == LpSolution::Status::optimal);
  CHECK(s.value == Rational(7, 5));
  CHECK(s.x[0] == Rational(4, 5));
  CHECK(s.x[1] == Rational(3, 5));
  // Strong duality with a feasible dual.
  CHECK(s.dual[0] * 2 + s.dual[1] * 3 == s.value);
  CHECK(s.dual[0] + 3 * s.dual[1] <= 1);
  CHECK(2 * s.dual[0] + s.dual[1] <= 1);
}

TEST_CASE("infeasible and malformed programs") {
  LinearProgram lp;
  lp.c = {1};
  lp.add_row({0}, 1);  // 0 >= 1
  CHECK(solve_lp(lp).status == LpSolution::Status::infeasible);

  LinearProgram none;
  none.c = {2, 3};
  LpSolution s = solve_lp(none);
  CHECK(s.status == LpSolution::Status::optimal);
  CHECK(s.value == 0);

  LinearProgram negative;
  negative.c = {-1};
  negative.add_row({1}, 1);
  CHECK_THROWS_AS(solve_lp(negative), DomainError);
}

TEST_CASE("random two-variable programs match vertex enumeration") {
  std::mt19937_64 rng(97);
  std::uniform_int_distribution<int> coef(-3, 5), cost(1, 6), rows(1, 4);
  int optimal = 0;
  for (int t = 0; t < 300; ++t) {
    LinearProgram lp;
    lp.c = {cost(rng), cost(rng)};
    int m = rows(rng);
    for (int r = 0; r < m; ++r) lp.add_row({coef(rng), coef(rng)}, coef(rng));
    LpSolution s = solve_lp(lp);
    auto expected = vertex_minimum(lp);
    CAPTURE(t);
    REQUIRE((s.status == LpSolution::Status::optimal) == expected.has_value());
    if (!expected) continue;
    ++optimal;
    CHECK(s.value == *expected);
    // The primal point is feasible and attains the value.
    for (std::size_t r = 0; r < lp.a.size(); ++r) CHECK(lp.a[r][0] * s.x[0] + lp.a[r][1] * s.x[1] >= lp.b[r]);
    CHECK(lp.c[0] * s.x[0] + lp.c[1] * s.x[1] == s.value);
  }
  CHECK(optimal > 100);
}
