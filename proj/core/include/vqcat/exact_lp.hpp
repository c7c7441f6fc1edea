#pragma once

#include <cstddef>
#include <vector>

#include "vqcat/rational.hpp"

namespace vqcat {

/// minimize c.x subject to A x >= b, x >= 0, with c >= 0.
struct LinearProgram {
  std::vector<std::vector<Rational>> a;  // rows
  std::vector<Rational> b;
  std::vector<Rational> c;

  std::size_t add_row(std::vector<Rational> row, Rational rhs);
};

struct LpSolution {
  enum class Status { optimal, infeasible };
  Status status = Status::infeasible;
  Rational value;
  std::vector<Rational> x;     // primal optimum
  std::vector<Rational> dual;  // one multiplier per row
  std::size_t pivots = 0;
};

/// Exact simplex on the dual program (max b.y, A^T y <= c, y >= 0), whose
/// slack basis is feasible because c >= 0. Bland's rule rules out cycling.
/// The primal optimum is read off the final reduced costs. Throws
/// DomainError when some c_j < 0.
LpSolution solve_lp(const LinearProgram& lp);

}  // namespace vqcat
