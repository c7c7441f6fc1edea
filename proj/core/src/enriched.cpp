#include "vqcat/enriched.hpp"

#include <algorithm>
#include <numeric>

#include "vqcat/caps.hpp"

namespace vqcat {

LawViolation::LawViolation(Counterexample cx) : Error(cx.describe()), cx_(std::move(cx)) {}

// ---------------------------------------------------------------- Carrier

namespace {

std::shared_ptr<const std::unordered_map<std::string, std::size_t>> build_index(
    const std::vector<std::string>& labels) {
  auto index = std::make_shared<std::unordered_map<std::string, std::size_t>>();
  index->reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (!index->emplace(labels[i], i).second) {
      throw DomainError("duplicate element label '" + labels[i] + "'");
    }
  }
  return index;
}

}  // namespace

Carrier::Carrier() : Carrier(std::vector<std::string>{}) {}

Carrier::Carrier(std::vector<std::string> labels)
    : labels_(std::make_shared<const std::vector<std::string>>(std::move(labels))),
      index_(build_index(*labels_)) {}

Carrier::Carrier(std::initializer_list<std::string> labels)
    : Carrier(std::vector<std::string>(labels)) {}

std::optional<std::size_t> Carrier::find(const std::string& label) const {
  auto it = index_->find(label);
  if (it == index_->end()) return std::nullopt;
  return it->second;
}

std::size_t Carrier::index_of(const std::string& label) const {
  if (auto i = find(label)) return *i;
  throw DomainError("'" + label + "' is not an element of the carrier");
}

// ---------------------------------------------------------------- Matrix / VRelation

Matrix::Matrix(std::size_t rows, std::size_t cols, const Value& fill)
    : rows_(rows), cols_(cols), cells_(rows * cols, fill) {}

void require_same_quantale(const Quantale& a, const Quantale& b, const char* what) {
  if (!(a == b)) {
    throw DomainError(std::string(what) + ": quantale mismatch (" + a.name() + " vs " + b.name() + ")");
  }
}

VRelation::VRelation(Carrier source, Carrier target, Quantale q, Matrix m)
    : source_(std::move(source)), target_(std::move(target)), q_(std::move(q)) {
  if (m.rows() != source_.size() || m.cols() != target_.size()) {
    throw DomainError("relation matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", carriers are " +
                      std::to_string(source_.size()) + "x" + std::to_string(target_.size()));
  }
  for (const auto& v : m.cells()) q_.require_member(v);
  m_ = std::make_shared<const Matrix>(std::move(m));
}

bool operator==(const VRelation& a, const VRelation& b) {
  return a.q_ == b.q_ && a.source_ == b.source_ && a.target_ == b.target_ &&
         (a.m_ == b.m_ || *a.m_ == *b.m_);
}

VRelation compose_rel(const VRelation& r, const VRelation& s) {
  require_same_quantale(r.quantale(), s.quantale(), "compose_rel");
  if (!(r.target() == s.source())) throw DomainError("compose_rel: middle carriers differ");
  const Quantale& q = r.quantale();
  std::size_t nx = r.source().size(), ny = r.target().size(), nz = s.target().size();
  Matrix out(nx, nz, q.bottom());
  for (std::size_t x = 0; x < nx; ++x) {
    for (std::size_t z = 0; z < nz; ++z) {
      Value acc = q.bottom();
      for (std::size_t y = 0; y < ny; ++y) acc = q.join(acc, q.tensor(r(x, y), s(y, z)));
      out(x, z) = std::move(acc);
    }
  }
  return VRelation(r.source(), s.target(), q, std::move(out));
}

VRelation involution(const VRelation& r) {
  const auto& m = r.matrix();
  Matrix out(m.cols(), m.rows(), r.quantale().bottom());
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  }
  return VRelation(r.target(), r.source(), r.quantale(), std::move(out));
}

VRelation graph(const std::vector<std::size_t>& mapping, const Carrier& x, const Carrier& y,
                const Quantale& q) {
  if (mapping.size() != x.size()) throw DomainError("graph: map is not total on the source");
  Matrix out(x.size(), y.size(), q.bottom());
  for (std::size_t i = 0; i < mapping.size(); ++i) {
    if (mapping[i] >= y.size()) {
      throw DomainError("graph: image of '" + x[i] + "' is outside the target");
    }
    out(i, mapping[i]) = q.unit();
  }
  return VRelation(x, y, q, std::move(out));
}

bool relation_leq(const VRelation& r, const VRelation& s) {
  require_same_quantale(r.quantale(), s.quantale(), "relation_leq");
  if (!(r.source() == s.source()) || !(r.target() == s.target())) {
    throw DomainError("relation_leq: shapes differ");
  }
  const auto& a = r.matrix().cells();
  const auto& b = s.matrix().cells();
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (!r.quantale().leq(a[i], b[i])) return false;
  }
  return true;
}

VRelation relation_join(const VRelation& r, const VRelation& s) {
  require_same_quantale(r.quantale(), s.quantale(), "relation_join");
  if (!(r.source() == s.source()) || !(r.target() == s.target())) {
    throw DomainError("relation_join: shapes differ");
  }
  Matrix out = r.matrix();
  for (std::size_t i = 0; i < out.rows(); ++i) {
    for (std::size_t j = 0; j < out.cols(); ++j) out(i, j) = r.quantale().join(out(i, j), s(i, j));
  }
  return VRelation(r.source(), r.target(), r.quantale(), std::move(out));
}

// ---------------------------------------------------------------- VCategory

VCategory::VCategory(Quantale q)
    : carrier_(), q_(std::move(q)), a_(std::make_shared<const Matrix>(0, 0, q_.bottom())) {}

VCategory::VCategory(Carrier carrier, Quantale q, std::shared_ptr<const Matrix> a)
    : carrier_(std::move(carrier)), q_(std::move(q)), a_(std::move(a)) {}

VCategory VCategory::trusted(Carrier carrier, Quantale q, Matrix structure) {
  if (structure.rows() != carrier.size() || structure.cols() != carrier.size()) {
    throw DomainError("structure matrix must be square over the carrier");
  }
  return VCategory(std::move(carrier), std::move(q), std::make_shared<const Matrix>(std::move(structure)));
}

VRelation VCategory::as_relation() const { return VRelation(carrier_, carrier_, q_, *a_); }

bool operator==(const VCategory& a, const VCategory& b) {
  return a.q_ == b.q_ && a.carrier_ == b.carrier_ && (a.a_ == b.a_ || *a.a_ == *b.a_);
}

std::optional<Counterexample> find_category_violation(const Carrier& carrier, const Quantale& q,
                                                      const Matrix& m) {
  std::size_t n = carrier.size();
  for (std::size_t x = 0; x < n; ++x) {
    if (!q.leq(q.unit(), m(x, x))) {
      return Counterexample{"reflexivity", {{"x", carrier[x]}}, q.format(q.unit()), "not <=",
                            "a(x,x) = " + q.format(m(x, x))};
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      for (std::size_t z = 0; z < n; ++z) {
        Value lhs = q.tensor(m(x, y), m(y, z));
        if (!q.leq(lhs, m(x, z))) {
          return Counterexample{"transitivity",
                                {{"x", carrier[x]}, {"y", carrier[y]}, {"z", carrier[z]}},
                                "a(x,y) (x) a(y,z) = " + q.format(lhs), "not <=",
                                "a(x,z) = " + q.format(m(x, z))};
        }
      }
    }
  }
  return std::nullopt;
}

VCategory make_vcategory(Carrier carrier, Matrix matrix, Quantale q) {
  if (matrix.rows() != carrier.size() || matrix.cols() != carrier.size()) {
    throw DomainError("structure matrix must be square over the carrier");
  }
  for (const auto& v : matrix.cells()) q.require_member(v);
  if (auto cx = find_category_violation(carrier, q, matrix)) throw LawViolation(*cx);
  return VCategory::trusted(std::move(carrier), std::move(q), std::move(matrix));
}

VCategory discrete_category(Carrier carrier, const Quantale& q) {
  Matrix m(carrier.size(), carrier.size(), q.bottom());
  for (std::size_t i = 0; i < carrier.size(); ++i) m(i, i) = q.unit();
  return VCategory::trusted(std::move(carrier), q, std::move(m));
}

VCategory unit_category(const Quantale& q) { return discrete_category(Carrier{"*"}, q); }

// ---------------------------------------------------------------- functors

VFunctorMap::VFunctorMap(VCategory source, VCategory target, std::vector<std::size_t> mapping)
    : source_(std::move(source)), target_(std::move(target)), mapping_(std::move(mapping)) {
  require_same_quantale(source_.quantale(), target_.quantale(), "V-functor");
  if (mapping_.size() != source_.size()) throw DomainError("functor map is not total on its source");
  for (std::size_t i = 0; i < mapping_.size(); ++i) {
    if (mapping_[i] >= target_.size()) {
      throw DomainError("image of '" + source_.label(i) + "' is outside the target");
    }
  }
}

VFunctorMap identity_functor(const VCategory& x) {
  std::vector<std::size_t> id(x.size());
  std::iota(id.begin(), id.end(), std::size_t{0});
  return VFunctorMap(x, x, std::move(id));
}

VFunctorMap compose_functors(const VFunctorMap& f, const VFunctorMap& g) {
  if (!(f.target() == g.source())) throw DomainError("compose_functors: middle categories differ");
  std::vector<std::size_t> m(f.mapping().size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = g(f(i));
  return VFunctorMap(f.source(), g.target(), std::move(m));
}

LawReport check_vfunctor(const VFunctorMap& f) {
  LawReport report;
  report.suite = "vfunctor";
  const auto& x = f.source();
  const auto& y = f.target();
  const Quantale& q = x.quantale();
  bool fully_faithful = true;
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      ++report.instances;
      const Value& a = x(i, j);
      const Value& b = y(f(i), f(j));
      if (!q.leq(a, b)) {
        report.fail({"functoriality",
                     {{"x", x.label(i)}, {"y", x.label(j)}},
                     "a(x,y) = " + q.format(a),
                     "not <=",
                     "b(f x, f y) = " + q.format(b)});
        fully_faithful = false;
      } else if (!(a == b)) {
        fully_faithful = false;
      }
    }
  }
  report.flags["fully_faithful"] = report.passed() && fully_faithful;
  return report;
}

// ---------------------------------------------------------------- constructions

VCategory combine(const VCategory& x, const VCategory& y, CombineMode mode) {
  require_same_quantale(x.quantale(), y.quantale(), "combine");
  const Quantale& q = x.quantale();
  if (mode == CombineMode::coproduct) {
    std::vector<std::string> labels;
    for (const auto& l : x.carrier()) labels.push_back("L:" + l);
    for (const auto& l : y.carrier()) labels.push_back("R:" + l);
    std::size_t nx = x.size(), n = nx + y.size();
    Matrix m(n, n, q.bottom());
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < nx; ++j) m(i, j) = x(i, j);
    for (std::size_t i = 0; i < y.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) m(nx + i, nx + j) = y(i, j);
    return VCategory::trusted(Carrier(std::move(labels)), q, std::move(m));
  }
  std::vector<std::string> labels;
  for (const auto& a : x.carrier())
    for (const auto& b : y.carrier()) labels.push_back("(" + a + "," + b + ")");
  std::size_t ny = y.size(), n = x.size() * ny;
  Matrix m(n, n, q.bottom());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      const Value& a = x(i / ny, j / ny);
      const Value& b = y(i % ny, j % ny);
      m(i, j) = mode == CombineMode::tensor ? q.tensor(a, b) : q.meet(a, b);
    }
  }
  return VCategory::trusted(Carrier(std::move(labels)), q, std::move(m));
}

VFunctorMap coproduct_injection(const VCategory& x, const VCategory& y, bool left) {
  VCategory sum = combine(x, y, CombineMode::coproduct);
  const VCategory& part = left ? x : y;
  std::vector<std::size_t> m(part.size());
  for (std::size_t i = 0; i < m.size(); ++i) m[i] = left ? i : x.size() + i;
  return VFunctorMap(part, sum, std::move(m));
}

VCategory opposite(const VCategory& x) {
  Matrix m(x.size(), x.size(), x.quantale().bottom());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = x(j, i);
  return VCategory::trusted(x.carrier(), x.quantale(), std::move(m));
}

BoolMatrix induced_order(const VCategory& x) {
  const Quantale& q = x.quantale();
  BoolMatrix out(x.size(), std::vector<bool>(x.size(), false));
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) out[i][j] = q.leq(q.unit(), x(i, j));
  return out;
}

VCategory symmetrize(const VCategory& x, SymmetrizeMode mode) {
  const Quantale& q = x.quantale();
  Matrix m(x.size(), x.size(), q.bottom());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      m(i, j) = mode == SymmetrizeMode::meet ? q.meet(x(i, j), x(j, i)) : q.tensor(x(i, j), x(j, i));
    }
  }
  return make_vcategory(x.carrier(), std::move(m), q);
}

Classification classify(const VCategory& x) {
  const Quantale& q = x.quantale();
  Classification c{true, true};
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!(x(i, j) == x(j, i))) c.symmetric = false;
      if (i != j && q.leq(q.unit(), q.meet(x(i, j), x(j, i)))) c.separated = false;
    }
  }
  return c;
}

std::optional<std::vector<std::size_t>> find_isomorphism(const VCategory& x, const VCategory& y) {
  if (!(x.quantale() == y.quantale()) || x.size() != y.size()) return std::nullopt;
  std::size_t n = x.size();
  require_within("isomorphism_search", default_caps().isomorphism_search, n);
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  do {
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) ok = x(i, j) == y(perm[i], perm[j]);
    if (ok) return perm;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return std::nullopt;
}

VCategory permute(const VCategory& x, const std::vector<std::size_t>& perm) {
  if (perm.size() != x.size()) throw DomainError("permute: wrong permutation length");
  std::vector<std::string> labels;
  for (auto p : perm) labels.push_back(x.label(p));
  Matrix m(x.size(), x.size(), x.quantale().bottom());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j) m(i, j) = x(perm[i], perm[j]);
  return VCategory::trusted(Carrier(std::move(labels)), x.quantale(), std::move(m));
}

VCategory full_subcategory(const VCategory& x, const std::vector<std::size_t>& indices) {
  std::vector<std::string> labels;
  for (auto i : indices) {
    if (i >= x.size()) throw DomainError("full_subcategory: index out of range");
    labels.push_back(x.label(i));
  }
  Matrix m(indices.size(), indices.size(), x.quantale().bottom());
  for (std::size_t i = 0; i < indices.size(); ++i)
    for (std::size_t j = 0; j < indices.size(); ++j) m(i, j) = x(indices[i], indices[j]);
  return VCategory::trusted(Carrier(std::move(labels)), x.quantale(), std::move(m));
}

}  // namespace vqcat
