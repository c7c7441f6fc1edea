#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "vqcat/errors.hpp"
#include "vqcat/law_report.hpp"
#include "vqcat/quantale.hpp"

namespace vqcat {

/// Thrown when a matrix fails the laws of the structure it was meant to be
/// (V-category, V-module, pair of modules). Carries the witness.
class LawViolation : public Error {
 public:
  explicit LawViolation(Counterexample cx);
  const Counterexample& counterexample() const noexcept { return cx_; }

 private:
  Counterexample cx_;
};

/// An ordered list of distinct element labels. Cheap to copy.
class Carrier {
 public:
  Carrier();
  Carrier(std::vector<std::string> labels);  // NOLINT: implicit by intent
  Carrier(std::initializer_list<std::string> labels);

  std::size_t size() const noexcept { return labels_->size(); }
  bool empty() const noexcept { return labels_->empty(); }
  const std::string& operator[](std::size_t i) const { return (*labels_)[i]; }
  const std::vector<std::string>& labels() const noexcept { return *labels_; }
  auto begin() const { return labels_->begin(); }
  auto end() const { return labels_->end(); }

  std::optional<std::size_t> find(const std::string& label) const;
  /// Throws DomainError for labels outside the carrier.
  std::size_t index_of(const std::string& label) const;

  friend bool operator==(const Carrier& a, const Carrier& b) {
    return a.labels_ == b.labels_ || *a.labels_ == *b.labels_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> labels_;
  std::shared_ptr<const std::unordered_map<std::string, std::size_t>> index_;
};

/// Dense row-major matrix of quantale values.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Value& fill);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return cells_[i * cols_ + j]; }
  Value& operator()(std::size_t i, std::size_t j) { return cells_[i * cols_ + j]; }
  const std::vector<Value>& cells() const noexcept { return cells_; }

  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Value> cells_;
};

/// r : X -|-> Y, a V-valued matrix indexed by (source, target).
class VRelation {
 public:
  VRelation(Carrier source, Carrier target, Quantale q, Matrix m);

  const Carrier& source() const noexcept { return source_; }
  const Carrier& target() const noexcept { return target_; }
  const Quantale& quantale() const noexcept { return q_; }
  const Matrix& matrix() const noexcept { return *m_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return (*m_)(i, j); }

  friend bool operator==(const VRelation& a, const VRelation& b);

 private:
  Carrier source_;
  Carrier target_;
  Quantale q_;
  std::shared_ptr<const Matrix> m_;
};

/// (s . r)(x, z) = join_y r(x, y) (x) s(y, z).
VRelation compose_rel(const VRelation& r, const VRelation& s);
/// r°(y, x) = r(x, y).
VRelation involution(const VRelation& r);
/// The V-graph of a map: k where f(x) = y, bottom elsewhere. `mapping[i]` is
/// the target index of source element i.
VRelation graph(const std::vector<std::size_t>& mapping, const Carrier& x, const Carrier& y,
                const Quantale& q);
/// Pointwise order r <= s.
bool relation_leq(const VRelation& r, const VRelation& s);
/// Pointwise join of relations with the same shape.
VRelation relation_join(const VRelation& r, const VRelation& s);

/// X = (X, a): reflexive (k <= a(x,x)) and transitive
/// (a(x,y) (x) a(y,z) <= a(x,z)).
class VCategory {
 public:
  /// The empty category over `q`.
  explicit VCategory(Quantale q);

  /// Trusted constructor: the caller guarantees the category laws.
  static VCategory trusted(Carrier carrier, Quantale q, Matrix structure);

  const Carrier& carrier() const noexcept { return carrier_; }
  const Quantale& quantale() const noexcept { return q_; }
  std::size_t size() const noexcept { return carrier_.size(); }
  bool empty() const noexcept { return carrier_.empty(); }
  const Matrix& structure() const noexcept { return *a_; }
  const Value& operator()(std::size_t i, std::size_t j) const { return (*a_)(i, j); }
  const std::string& label(std::size_t i) const { return carrier_[i]; }
  VRelation as_relation() const;

  friend bool operator==(const VCategory& a, const VCategory& b);

 private:
  VCategory(Carrier carrier, Quantale q, std::shared_ptr<const Matrix> a);

  Carrier carrier_;
  Quantale q_;
  std::shared_ptr<const Matrix> a_;
};

/// First reflexivity or transitivity violation, if any.
std::optional<Counterexample> find_category_violation(const Carrier& carrier, const Quantale& q,
                                                      const Matrix& m);
/// Validated constructor; throws LawViolation naming the violated law.
VCategory make_vcategory(Carrier carrier, Matrix matrix, Quantale q);
VCategory discrete_category(Carrier carrier, const Quantale& q);
/// E = ({*}, k), the unit of the tensor.
VCategory unit_category(const Quantale& q);

class VFunctorMap {
 public:
  /// Throws DomainError unless `mapping` is a total map X -> Y.
  VFunctorMap(VCategory source, VCategory target, std::vector<std::size_t> mapping);

  const VCategory& source() const noexcept { return source_; }
  const VCategory& target() const noexcept { return target_; }
  const std::vector<std::size_t>& mapping() const noexcept { return mapping_; }
  std::size_t operator()(std::size_t i) const { return mapping_[i]; }

 private:
  VCategory source_;
  VCategory target_;
  std::vector<std::size_t> mapping_;
};

VFunctorMap identity_functor(const VCategory& x);
/// g . f
VFunctorMap compose_functors(const VFunctorMap& f, const VFunctorMap& g);

/// Passes iff a(x,y) <= b(f x, f y) for all pairs. Sets flag
/// "fully_faithful" when equality holds everywhere.
LawReport check_vfunctor(const VFunctorMap& f);

enum class CombineMode { tensor, product, coproduct };

/// tensor: a(x,x') (x) b(y,y'); product: a(x,x') meet b(y,y') (both on pair
/// labels "(x,y)"); coproduct: block diagonal on "L:x" / "R:y" labels.
VCategory combine(const VCategory& x, const VCategory& y, CombineMode mode);
/// Coproduct injections X -> X+Y and Y -> X+Y.
VFunctorMap coproduct_injection(const VCategory& x, const VCategory& y, bool left);

VCategory opposite(const VCategory& x);

using BoolMatrix = std::vector<std::vector<bool>>;
/// x <= y iff k <= a(x, y).
BoolMatrix induced_order(const VCategory& x);

enum class SymmetrizeMode { meet, tensor };
VCategory symmetrize(const VCategory& x, SymmetrizeMode mode);

struct Classification {
  bool symmetric = false;
  bool separated = false;
};
Classification classify(const VCategory& x);

/// A bijection f with a(x,y) = b(f x, f y), found by exhaustive search.
std::optional<std::vector<std::size_t>> find_isomorphism(const VCategory& x, const VCategory& y);

/// Same structure transported along a permutation: element i of the result
/// is element perm[i] of `x`, labels are kept.
VCategory permute(const VCategory& x, const std::vector<std::size_t>& perm);

/// The full subcategory on `indices` (in that order).
VCategory full_subcategory(const VCategory& x, const std::vector<std::size_t>& indices);

/// Throws DomainError unless both arguments live over the same quantale.
void require_same_quantale(const Quantale& a, const Quantale& b, const char* what);

}  // namespace vqcat
