#include "grid_oracle.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace vqcat::testing {

namespace {

using Int = long long;
constexpr Int kInf = std::numeric_limits<Int>::max() / 4;

struct Diff {  // v[p] <= c + v[q]
  std::size_t p, q;
  Int c;
};
struct Sum {  // v[p] + v[q] >= c
  std::size_t p, q;
  Int c;
};

Int to_grid(const Value& v, unsigned grid) {
  if (v.is_infinite()) throw std::invalid_argument("grid oracle needs finite distances");
  Rational scaled = v.amount() * grid;
  if (scaled.get_den() != 1) throw std::invalid_argument("distance is not on the grid");
  return scaled.get_num().get_si();
}

struct Search {
  std::size_t nx, ny, nvars;
  Int top;
  std::vector<Diff> diffs;
  std::vector<Sum> sums;
  std::vector<std::size_t> phi, back;  // variable of phi(x, y) at x * ny + y, of back(y, x) at y * nx + x
  bool use_back;
  std::vector<std::size_t> order;
  std::vector<Int> val;
  std::vector<bool> set;
  Int best = kInf;

  Int lower(std::size_t v) const {
    Int lo = 0;
    for (const auto& d : diffs)
      if (d.q == v && d.p != v && set[d.p]) lo = std::max(lo, val[d.p] - d.c);
    for (const auto& s : sums) {
      if (s.p == v && s.q != v && set[s.q]) lo = std::max(lo, s.c - val[s.q]);
      if (s.q == v && s.p != v && set[s.p]) lo = std::max(lo, s.c - val[s.p]);
      if (s.p == v && s.q == v) lo = std::max(lo, (s.c + 1) / 2);
    }
    return lo;
  }
  Int upper(std::size_t v) const {
    Int hi = top;
    for (const auto& d : diffs)
      if (d.p == v && d.q != v && set[d.q]) hi = std::min(hi, d.c + val[d.q]);
    return hi;
  }
  Int current(std::size_t v) const { return set[v] ? val[v] : lower(v); }

  // max over rows of the min over columns, with unknown entries at their lower bounds.
  Int bound(const std::vector<std::size_t>& vars, std::size_t rows, std::size_t cols) const {
    Int out = 0;
    for (std::size_t r = 0; r < rows; ++r) {
      Int m = kInf;
      for (std::size_t c = 0; c < cols; ++c) m = std::min(m, current(vars[r * cols + c]));
      out = std::max(out, m);
    }
    return out;
  }
  Int objective_bound() const {
    Int b = bound(phi, nx, ny);
    if (use_back) b = std::max(b, bound(back, ny, nx));
    return b;
  }

  void run(std::size_t depth) {
    if (objective_bound() >= best) return;
    if (depth == order.size()) {
      best = objective_bound();
      return;
    }
    std::size_t v = order[depth];
    Int lo = lower(v), hi = upper(v);
    set[v] = true;
    for (Int t = lo; t <= hi; ++t) {
      val[v] = t;
      run(depth + 1);
    }
    set[v] = false;
  }
};

}  // namespace

std::optional<Rational> grid_gromov(const VCategory& x, const VCategory& y, GromovVariant variant, unsigned grid) {
  const std::size_t nx = x.size(), ny = y.size();
  if (nx == 0) return Rational(0);
  if (ny == 0) return std::nullopt;
  std::vector<std::vector<Int>> a(nx, std::vector<Int>(nx)), b(ny, std::vector<Int>(ny));
  Int amax = 0, bmax = 0;
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j) amax = std::max(amax, a[i][j] = to_grid(x(i, j), grid));
  for (std::size_t i = 0; i < ny; ++i)
    for (std::size_t j = 0; j < ny; ++j) bmax = std::max(bmax, b[i][j] = to_grid(y(i, j), grid));

  Search s;
  s.nx = nx;
  s.ny = ny;
  s.top = amax + bmax;
  s.use_back = variant == GromovVariant::sym_pair;
  s.phi.resize(nx * ny);
  s.back.resize(nx * ny);
  for (std::size_t i = 0; i < nx * ny; ++i) s.phi[i] = i;
  s.nvars = nx * ny;
  for (std::size_t j = 0; j < ny; ++j) {
    for (std::size_t i = 0; i < nx; ++i) {
      s.back[j * nx + i] = variant == GromovVariant::sym_pair ? nx * ny + j * nx + i : s.phi[i * ny + j];
    }
  }
  if (variant == GromovVariant::sym_pair) s.nvars += nx * ny;
  auto P = [&](std::size_t i, std::size_t j) { return s.phi[i * ny + j]; };
  auto B = [&](std::size_t j, std::size_t i) { return s.back[j * nx + i]; };
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t i2 = 0; i2 < nx; ++i2)
      for (std::size_t j = 0; j < ny; ++j) s.diffs.push_back({P(i2, j), P(i, j), a[i2][i]});
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t j2 = 0; j2 < ny; ++j2) s.diffs.push_back({P(i, j2), P(i, j), b[j][j2]});
  if (variant != GromovVariant::plain) {
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t j2 = 0; j2 < ny; ++j2)
        for (std::size_t i = 0; i < nx; ++i) s.diffs.push_back({B(j2, i), B(j, i), b[j2][j]});
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t i2 = 0; i2 < nx; ++i2) s.diffs.push_back({B(j, i2), B(j, i), a[i][i2]});
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j)
        for (std::size_t i2 = 0; i2 < nx; ++i2) s.sums.push_back({P(i, j), B(j, i2), a[i][i2]});
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t j2 = 0; j2 < ny; ++j2) s.sums.push_back({B(j, i), P(i, j2), b[j][j2]});
  }
  if (s.use_back)
    for (std::size_t v = nx * ny; v < s.nvars; ++v) s.order.push_back(v);
  for (std::size_t v = 0; v < nx * ny; ++v) s.order.push_back(v);
  s.val.assign(s.nvars, 0);
  s.set.assign(s.nvars, false);
  s.run(0);
  if (s.best == kInf) return std::nullopt;
  Rational out(static_cast<long>(s.best), static_cast<unsigned long>(grid));
  out.canonicalize();
  return out;
}

}  // namespace vqcat::testing
