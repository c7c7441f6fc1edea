#include "vqcat/exact_lp.hpp"

#include "vqcat/errors.hpp"

namespace vqcat {

std::size_t LinearProgram::add_row(std::vector<Rational> row, Rational rhs) {
  a.push_back(std::move(row));
  b.push_back(std::move(rhs));
  return a.size() - 1;
}

LpSolution solve_lp(const LinearProgram& lp) {
  const std::size_t m = lp.a.size();  // primal rows = dual variables
  const std::size_t n = lp.c.size();  // primal variables = dual rows
  for (const auto& row : lp.a) {
    if (row.size() != n) throw DomainError("solve_lp: ragged constraint matrix");
  }
  if (lp.b.size() != m) throw DomainError("solve_lp: rhs length differs from row count");
  for (const auto& cj : lp.c) {
    if (sgn(cj) < 0) throw DomainError("solve_lp: objective coefficients must be non-negative");
  }

  const std::size_t cols = m + n;
  std::vector<std::vector<Rational>> t(n, std::vector<Rational>(cols));
  std::vector<Rational> rhs(lp.c);
  std::vector<std::size_t> basis(n);
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t i = 0; i < m; ++i) t[j][i] = lp.a[i][j];
    t[j][m + j] = 1;
    basis[j] = m + j;
  }
  std::vector<Rational> r(cols);
  for (std::size_t i = 0; i < m; ++i) r[i] = -lp.b[i];
  Rational z = 0;

  LpSolution sol;
  while (true) {
    std::size_t enter = cols;
    for (std::size_t k = 0; k < cols; ++k) {
      if (sgn(r[k]) < 0) {
        enter = k;
        break;
      }
    }
    if (enter == cols) break;

    std::size_t leave = n;
    Rational best;
    for (std::size_t j = 0; j < n; ++j) {
      if (sgn(t[j][enter]) <= 0) continue;
      Rational ratio = rhs[j] / t[j][enter];
      if (leave == n || ratio < best || (ratio == best && basis[j] < basis[leave])) {
        leave = j;
        best = ratio;
      }
    }
    if (leave == n) {
      // Dual unbounded: the primal has no feasible point.
      sol.status = LpSolution::Status::infeasible;
      return sol;
    }

    Rational piv = t[leave][enter];
    for (auto& v : t[leave]) v /= piv;
    rhs[leave] /= piv;
    for (std::size_t j = 0; j < n; ++j) {
      if (j == leave || sgn(t[j][enter]) == 0) continue;
      Rational f = t[j][enter];
      for (std::size_t k = 0; k < cols; ++k) {
        if (sgn(t[leave][k]) != 0) t[j][k] -= f * t[leave][k];
      }
      rhs[j] -= f * rhs[leave];
    }
    Rational f = r[enter];
    for (std::size_t k = 0; k < cols; ++k) {
      if (sgn(t[leave][k]) != 0) r[k] -= f * t[leave][k];
    }
    z -= f * rhs[leave];
    basis[leave] = enter;
    ++sol.pivots;
  }

  sol.status = LpSolution::Status::optimal;
  sol.value = z;
  sol.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) sol.x[j] = r[m + j];
  sol.dual.assign(m, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    if (basis[j] < m) sol.dual[basis[j]] = rhs[j];
  }
  return sol;
}

}  // namespace vqcat
