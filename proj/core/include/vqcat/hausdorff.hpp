#pragma once

#include <bit>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "vqcat/caps.hpp"
#include "vqcat/vmodule.hpp"

namespace vqcat {

/// A subset of a carrier as a bitmask over carrier positions (at most 64).
struct Subset {
  std::uint64_t bits = 0;

  static Subset all(std::size_t n) { return {n >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1}; }
  static Subset single(std::size_t i) { return {std::uint64_t{1} << i}; }

  bool contains(std::size_t i) const noexcept { return (bits >> i) & 1u; }
  bool empty() const noexcept { return bits == 0; }
  std::size_t size() const noexcept { return static_cast<std::size_t>(std::popcount(bits)); }
  bool subset_of(Subset other) const noexcept { return (bits & ~other.bits) == 0; }
  Subset with(std::size_t i) const noexcept { return {bits | (std::uint64_t{1} << i)}; }
  Subset operator|(Subset o) const noexcept { return {bits | o.bits}; }
  Subset operator&(Subset o) const noexcept { return {bits & o.bits}; }
  std::vector<std::size_t> members() const;

  friend bool operator==(Subset, Subset) = default;
  friend auto operator<=>(Subset, Subset) = default;
};

/// Throws DomainError for labels outside the carrier.
Subset subset_of_labels(const Carrier& carrier, const std::vector<std::string>& labels);
/// Labels in carrier order.
std::vector<std::string> subset_labels(const Carrier& carrier, Subset s);
/// "{a,b}".
std::string format_subset(const Carrier& carrier, Subset s);
/// Throws DomainError if `s` has elements beyond the carrier.
void require_subset(const Carrier& carrier, Subset s);

enum class HausdorffVariant { plain, sym, down };
const char* to_string(HausdorffVariant v);
HausdorffVariant parse_hausdorff_variant(const std::string& text);

/// a(x, B) = join over y in B of a(x, y).
Value distance_to(const VCategory& x, std::size_t elem, Subset b);
/// meet over x in A of join over y in B of a(x, y).
Value hausdorff_value(const VCategory& x, Subset a, Subset b);
/// meet over z of residual(a(z, A), a(z, B)).
Value hausdorff_value_dual(const VCategory& x, Subset a, Subset b);

enum class ClosureMode { order, big };
/// order: {x | k <= a(x, y) for some y in B}; big: {x | k <= a(x, B)}.
Subset down_closure(const VCategory& x, Subset b, ClosureMode mode);

/// HX (or one of its variants) computed lazily. Elements are subsets in
/// ascending bitmask order; for the plain and sym variants the element index
/// equals the bitmask.
class HausdorffCategory {
 public:
  HausdorffCategory(VCategory base, HausdorffVariant variant, const Caps& caps = default_caps());

  const VCategory& base() const noexcept { return base_; }
  HausdorffVariant variant() const noexcept { return variant_; }
  const Quantale& quantale() const noexcept { return base_.quantale(); }
  std::size_t size() const noexcept { return elements_.size(); }
  Subset element(std::size_t i) const { return elements_[i]; }
  const std::vector<Subset>& elements() const noexcept { return elements_; }
  std::optional<std::size_t> index_of(Subset s) const;

  /// Structure between subsets per variant (no membership check).
  Value value(Subset a, Subset b) const;
  Value structure(std::size_t i, std::size_t j) const { return value(elements_[i], elements_[j]); }

  /// Full VCategory with subset labels such as "{a,b}". Capped by
  /// `materialized_powerset_base`.
  VCategory materialize(const Caps& caps = default_caps()) const;

 private:
  VCategory base_;
  HausdorffVariant variant_;
  std::vector<Subset> elements_;
  std::vector<std::size_t> index_;  // bitmask -> element index, or npos
};

/// Direct image f(A).
Subset image(const VFunctorMap& f, Subset a);

/// Hf between the materialized variant categories: A -> f(A), or
/// A -> ⇓ f(A) for the down variant.
VFunctorMap hausdorff_map(const VFunctorMap& f, HausdorffVariant variant);
/// Index form of hausdorff_map between the (lazy) variant categories.
std::vector<std::size_t> hausdorff_map_indices(const VFunctorMap& f, const HausdorffCategory& hx,
                                               const HausdorffCategory& hy);

/// H~phi(A, B) = meet over x in A of join over y in B of phi(x, y).
Value htilde(const VModule& phi, Subset a, Subset b);
/// Same formula on a raw relation.
Value htilde(const VRelation& r, Subset a, Subset b);
/// join over maps f: A -> B of meet over x in A of phi(x, f x). Throws
/// CapExceeded beyond |B|^|A| > caps.enumeration and DomainError when the
/// quantale is not completely distributive.
Value skolem_htilde(const VModule& phi, Subset a, Subset b, const Caps& caps = default_caps());

/// The whole matrix H~phi : HX -o-> HY on full powersets.
VModule htilde_module(const VModule& phi, const VCategory& hx, const VCategory& hy);

struct LaxMonadComponents {
  VCategory hx;    // HX, materialized
  VCategory hhx;   // HHX, materialized
  VModule delta;   // X -o-> HX, delta(x, B) = a(x, B)
  VModule nu;      // HHX -o-> HX, nu(A, B) = h(union A, B)
};
/// Both components validated as modules. HHX is materialized, so |X| is
/// limited to 3.
LaxMonadComponents lax_monad_components(const VCategory& x, const Caps& caps = default_caps());

// ---------------------------------------------------------------- law suites

enum class HausdorffSuite { monad, kz, lax_naturality, monad_morphism, em, em_tilde, structure };
const char* to_string(HausdorffSuite s);
std::optional<HausdorffSuite> parse_hausdorff_suite(const std::string& text);

struct HausdorffLawOptions {
  /// Partner categories Y for module-level suites (lax_naturality, em_tilde):
  /// every module X -o-> Y is checked.
  std::vector<VCategory> partners;
  std::uint64_t seed = 0;
  /// Sample size for constructions too large to check exhaustively.
  std::size_t samples = 2000;
  /// Pair count up to which HH-level checks are exhaustive.
  std::size_t exhaustive_limit = 1u << 16;
};

LawReport check_hausdorff_laws(const VCategory& x, HausdorffSuite suite,
                               const HausdorffLawOptions& options = {});

/// Strict naturality of delta and nu for one module.
LawReport check_lax_naturality(const VModule& phi);
/// phi . alpha <= beta . H~phi with alpha, beta the {-}^* structures.
LawReport check_lax_homomorphism(const VModule& phi);

}  // namespace vqcat
