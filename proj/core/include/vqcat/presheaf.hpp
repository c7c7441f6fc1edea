#pragma once

#include <map>
#include <memory>
#include <optional>
#include <vector>

#include "vqcat/caps.hpp"
#include "vqcat/hausdorff.hpp"
#include "vqcat/vmodule.hpp"

namespace vqcat {

/// Value table of a presheaf s : X^op -> V, indexed by carrier position.
using PresheafValues = std::vector<Value>;

/// a(y, x) (x) s(x) <= s(y) for all x, y.
bool is_presheaf(const VCategory& x, const PresheafValues& s);

/// X^ over a finite quantale: all presheaves on X in lexicographic order
/// (carrier order, quantale element order), with structure
/// c(s, t) = meet over x of residual(s(x), t(x)).
class PresheafCategory {
 public:
  /// Throws DomainError over infinite quantales and CapExceeded when
  /// |V|^|X| exceeds caps.presheaves.
  explicit PresheafCategory(VCategory base, const Caps& caps = default_caps());

  const VCategory& base() const noexcept { return base_; }
  const Quantale& quantale() const noexcept { return base_.quantale(); }
  std::size_t size() const noexcept { return values_.size(); }
  const PresheafValues& values(std::size_t i) const { return values_[i]; }
  std::optional<std::size_t> index_of(const PresheafValues& s) const;
  /// Throws DomainError when `s` is not a presheaf on the base.
  std::size_t require_index(const PresheafValues& s) const;

  /// c(s, t) from the table.
  const Value& structure(std::size_t i, std::size_t j) const { return category_(i, j); }
  /// Materialized X^ with labels "[v0,v1,...]".
  const VCategory& category() const noexcept { return category_; }

 private:
  VCategory base_;
  std::vector<PresheafValues> values_;
  std::map<std::vector<unsigned>, std::size_t> index_;
  VCategory category_;
};

/// Shared X^ for one base category.
using PresheafCategoryPtr = std::shared_ptr<const PresheafCategory>;
PresheafCategoryPtr presheaf_category(const VCategory& x, const Caps& caps = default_caps());

/// y_X(x) = a(-, x).
VFunctorMap yoneda(const PresheafCategory& px);
/// y_phi(y) = phi(-, y) : Y -> X^ for phi : X -o-> Y.
VFunctorMap yoneda_mate(const VModule& phi, const PresheafCategory& px);
/// phi^(s)(x) = join over y of phi(x, y) (x) s(y) : Y^ -> X^.
VFunctorMap left_extension(const VModule& phi, const PresheafCategory& px, const PresheafCategory& py);
/// P_V f = (f^*)^ : X^ -> Y^, i.e. s |-> (y |-> join_x b(y, f x) (x) s(x)).
VFunctorMap presheaf_map(const VFunctorMap& f, const PresheafCategory& px, const PresheafCategory& py);

/// m_X(tau)(x) = join over t of t(x) (x) tau(t), for tau a value table indexed
/// by the elements of X^.
PresheafValues pv_multiply(const PresheafCategory& px, const std::vector<Value>& tau);
/// m_X : X^^ -> X^ with X^^ materialized (tiny bases only).
VFunctorMap pv_multiplication(const PresheafCategory& px, const Caps& caps = default_caps());

// ---------------------------------------------------------------- functor objects

enum class FunctorKind { identity, H, H_sym, H_down };
const char* to_string(FunctorKind k);
FunctorKind parse_functor_kind(const std::string& text);

/// One of the supported endofunctors of V-Cat with its action on objects and
/// maps. Objects KX are materialized.
class FunctorObject {
 public:
  explicit FunctorObject(FunctorKind kind) : kind_(kind) {}

  FunctorKind kind() const noexcept { return kind_; }
  const char* name() const noexcept { return to_string(kind_); }

  VCategory apply(const VCategory& x, const Caps& caps = default_caps()) const;
  /// Kf : KX -> KY as element indices of apply(source) and apply(target).
  std::vector<std::size_t> apply_map_indices(const VFunctorMap& f) const;
  VFunctorMap apply_map(const VFunctorMap& f, const VCategory& kx, const VCategory& ky) const;
  VFunctorMap apply_map(const VFunctorMap& f) const;

  /// Index of a subset of X in KX (all four kinds act on subsets except
  /// identity, where only singletons are meaningful).
  std::optional<std::size_t> index_of_subset(const VCategory& x, Subset s) const;

  bool preserves_full_fidelity() const noexcept { return true; }
  /// H_sym is a 2-functor only on symmetric categories.
  bool is_two_functor() const noexcept { return kind_ != FunctorKind::H_sym; }

 private:
  std::optional<HausdorffVariant> variant() const;
  FunctorKind kind_;
};

/// Generic lax extension K~phi = (K y_phi)^* . (K y_X)_* for modules out of a
/// fixed X. Caches X^, K X^, KX and K y_X across modules.
class FunctorExtension {
 public:
  FunctorExtension(FunctorObject k, VCategory x, const Caps& caps = default_caps());

  const FunctorObject& functor() const noexcept { return k_; }
  const VCategory& base() const noexcept { return x_; }
  const PresheafCategory& presheaves() const noexcept { return *px_; }
  const VCategory& kx() const noexcept { return kx_; }
  const VCategory& kxhat() const noexcept { return kxhat_; }

  /// K~phi : KX -o-> KY, with KY = K.apply(phi.target()).
  VModule extend(const VModule& phi) const;
  /// Single entry K~phi(i, j) for i in KX and j in KY = K.apply(phi.target()),
  /// evaluated as join over D of c(K y_X(i), D) (x) c(D, K y_phi(j)).
  Value extend_at(const VModule& phi, std::size_t i, std::size_t j) const;

 private:
  std::vector<std::size_t> mate_indices(const VModule& phi) const;

  FunctorObject k_;
  VCategory x_;
  PresheafCategoryPtr px_;
  VCategory kx_;
  VCategory kxhat_;
  std::vector<std::size_t> kyx_;  // K y_X as indices KX -> K X^
};

VModule extend_functor(const FunctorObject& k, const VModule& phi);

// ---------------------------------------------------------------- law suites

enum class PresheafSuite { yoneda, kz, adjunction };
const char* to_string(PresheafSuite s);
std::optional<PresheafSuite> parse_presheaf_suite(const std::string& text);

struct PresheafLawOptions {
  /// Targets Y for the adjunction suite; every module X -o-> Y is checked.
  std::vector<VCategory> partners;
};

LawReport check_presheaf_laws(const VCategory& x, PresheafSuite suite,
                              const PresheafLawOptions& options = {});

}  // namespace vqcat
