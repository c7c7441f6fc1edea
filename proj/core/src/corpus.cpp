#include "vqcat/corpus.hpp"

#include <algorithm>
#include <numeric>

namespace vqcat {

Carrier default_carrier(std::size_t n, const std::string& prefix) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i) labels.push_back(prefix + std::to_string(i + 1));
  return Carrier(std::move(labels));
}

std::vector<VCategory> enumerate_categories(const Quantale& q, std::size_t n, const Caps& caps) {
  if (!q.is_finite()) throw DomainError("enumerate_categories needs a finite quantale");
  require_within("enumeration", caps.enumeration, saturating_pow(q.size(), n * n));
  Carrier carrier = default_carrier(n);
  auto elems = q.elements();
  std::vector<VCategory> out;
  if (n == 0) {
    out.push_back(VCategory(q));
    return out;
  }
  // Backtracking over cells in row-major order; each new cell is checked
  // against every triple whose cells are all assigned.
  const std::size_t cells = n * n;
  std::vector<std::size_t> idx(cells, 0);
  Matrix m(n, n, q.bottom());
  auto consistent = [&](std::size_t cell) {
    std::size_t i = cell / n, j = cell % n;
    if (i == j && !q.leq(q.unit(), m(i, i))) return false;
    // Triples (x, y, z) involving cell and only cells <= cell.
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t z = 0; z < n; ++z) {
          std::size_t c1 = x * n + y, c2 = y * n + z, c3 = x * n + z;
          if (c1 != cell && c2 != cell && c3 != cell) continue;
          if (c1 > cell || c2 > cell || c3 > cell) continue;
          if (!q.leq(q.tensor(m(x, y), m(y, z)), m(x, z))) return false;
        }
      }
    }
    return true;
  };
  std::size_t pos = 0;
  idx[0] = 0;
  while (true) {
    if (idx[pos] == elems.size()) {
      if (pos == 0) break;
      idx[pos] = 0;
      --pos;
      ++idx[pos];
      continue;
    }
    m(pos / n, pos % n) = elems[idx[pos]];
    if (!consistent(pos)) {
      ++idx[pos];
      continue;
    }
    if (pos + 1 == cells) {
      out.push_back(VCategory::trusted(carrier, q, m));
      ++idx[pos];
      continue;
    }
    ++pos;
    idx[pos] = 0;
  }
  return out;
}

std::vector<VCategory> enumerate_categories_upto(const Quantale& q, std::size_t max_n, bool include_empty,
                                                 const Caps& caps) {
  std::vector<VCategory> out;
  for (std::size_t n = include_empty ? 0 : 1; n <= max_n; ++n) {
    auto part = enumerate_categories(q, n, caps);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Value random_value(const Quantale& q, std::mt19937_64& rng) {
  if (q.is_finite()) {
    std::uniform_int_distribution<std::size_t> d(0, q.size() - 1);
    return q.elements()[d(rng)];
  }
  std::uniform_int_distribution<int> d(0, 8);
  return q.cost_value(Rational(d(rng), 2));
}

namespace {

// Reflexive-transitive closure: repeat m := m join m.m until stable, after
// raising the diagonal to at least k.
Matrix close_structure(const Quantale& q, Matrix m) {
  const std::size_t n = m.rows();
  for (std::size_t i = 0; i < n; ++i) m(i, i) = q.join(m(i, i), q.unit());
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t z = 0; z < n; ++z) {
        Value acc = m(x, z);
        for (std::size_t y = 0; y < n; ++y) acc = q.join(acc, q.tensor(m(x, y), m(y, z)));
        if (!(acc == m(x, z))) {
          m(x, z) = acc;
          changed = true;
        }
      }
    }
  }
  return m;
}

}  // namespace

VCategory random_category(const Quantale& q, std::size_t n, std::mt19937_64& rng, bool allow_infinite) {
  Matrix m(n, n, q.bottom());
  std::uniform_int_distribution<int> coin(0, 9);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (q.is_cost() && allow_infinite && i != j && coin(rng) == 0) {
        m(i, j) = q.infinity();
      } else {
        m(i, j) = random_value(q, rng);
      }
    }
  }
  return make_vcategory(default_carrier(n), close_structure(q, std::move(m)), q);
}

VModule random_module(const VCategory& x, const VCategory& y, std::mt19937_64& rng) {
  const Quantale& q = x.quantale();
  Matrix r(x.size(), y.size(), q.bottom());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) r(i, j) = random_value(q, rng);
  VRelation rel(x.carrier(), y.carrier(), q, std::move(r));
  VRelation closed = compose_rel(compose_rel(x.as_relation(), rel), y.as_relation());
  return make_vmodule(x, y, closed.matrix());
}

Subset random_subset(std::size_t n, std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint64_t> d(0, (std::uint64_t{1} << n) - 1);
  return Subset{d(rng)};
}

VCategory relabel(const VCategory& x, const std::string& prefix) {
  return VCategory::trusted(default_carrier(x.size(), prefix), x.quantale(), x.structure());
}

std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng) {
  std::vector<std::size_t> p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  std::shuffle(p.begin(), p.end(), rng);
  return p;
}

}  // namespace vqcat
