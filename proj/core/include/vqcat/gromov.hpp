#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <utility>
#include <vector>

#include "vqcat/caps.hpp"
#include "vqcat/presheaf.hpp"
#include "vqcat/vmodule.hpp"

namespace vqcat {

/// Visits every module X -o-> Y in lexicographic order of the row-major
/// matrix (quantale element order per cell). The visitor returns false to
/// stop early. Throws CapExceeded when |V|^(|X||Y|) exceeds caps.enumeration.
void for_each_module(const VCategory& x, const VCategory& y,
                     const std::function<bool(const VModule&)>& visit,
                     const Caps& caps = default_caps());
std::vector<VModule> enumerate_modules(const VCategory& x, const VCategory& y,
                                       const Caps& caps = default_caps());

/// Pairs (phi, phi') passing check_pair. With `symmetric_only`, phi' = phi°
/// and both categories must be symmetric (DomainError otherwise).
std::vector<std::pair<VModule, VModule>> enumerate_pairs(const VCategory& x, const VCategory& y,
                                                         bool symmetric_only,
                                                         const Caps& caps = default_caps());

enum class GromovVariant { plain, sym_pair, sym_mod };
enum class GromovStrategy { enumerate, optimize, gluing };
/// How K~phi(X, Y) is evaluated: the direct subset formula (H, H_down) or
/// the generic extension through presheaves (finite quantales only).
enum class Evaluation { direct, generic };

const char* to_string(GromovVariant v);
const char* to_string(GromovStrategy s);
GromovVariant parse_gromov_variant(const std::string& text);
GromovStrategy parse_gromov_strategy(const std::string& text);

struct GromovQuery {
  VCategory x;
  VCategory y;
  GromovVariant variant = GromovVariant::plain;
  FunctorKind k = FunctorKind::H;
  GromovStrategy strategy = GromovStrategy::enumerate;
  Evaluation evaluation = Evaluation::direct;
};

enum class Attainment { exact, gap };

struct GromovResult {
  Value value;
  /// Module (or first module of the pair) realizing the value. Absent only
  /// for the gluing strategy, which reports the glued structure instead.
  std::optional<VModule> witness;
  std::optional<VModule> witness_back;
  std::optional<VCategory> glued;
  Attainment attainment = Attainment::exact;
  /// |value - objective(witness)| in real terms for cost results; 0 when
  /// exact, -1 when one side is infinite.
  Rational gap = 0;
  std::size_t candidates = 0;
};

GromovResult gromov(const GromovQuery& query, const Caps& caps = default_caps());

/// G(X, Y) meet G(Y, X) for base plain or sym_mod.
Value symmetrized_distance(const VCategory& x, const VCategory& y, GromovVariant base, FunctorKind k,
                           GromovStrategy strategy = GromovStrategy::enumerate,
                           const Caps& caps = default_caps());

/// Exact optimum over the cost quantale by Skolem-map enumeration and one
/// rational LP per map. `variant` plain ignores the back module.
GromovResult optimize_cost_pair(const VCategory& x, const VCategory& y, GromovVariant variant,
                                const Caps& caps = default_caps());

/// K~phi(X, Y) for the query's K and evaluation mode.
Value objective(const VModule& phi, FunctorKind k, Evaluation evaluation);

// ---------------------------------------------------------------- law suites

enum class GromovSuite {
  vcat_laws,
  iso_invariance,
  monotone_in_K,
  /// G^s H against G(H^s), the latter taken over all gluings of X and Y.
  /// Pairs where the generic extension of H^s disagrees are noted and
  /// flagged "generic_h_sym_differs", not failed.
  sym_lift,
  /// GH = G H_down on separated pairs.
  separated,
  chaos,
  /// monoid runs the three monoid_* suites and folds them together.
  monoid,
  monoid_tensor,
  monoid_product,
  monoid_coproduct,
  homomorphism,
  sym_bounds,
  gluing,
};
const char* to_string(GromovSuite s);
std::optional<GromovSuite> parse_gromov_suite(const std::string& text);

struct GromovLawOptions {
  std::uint64_t seed = 0;
  /// 0 means exhaustive over all pairs / triples of the corpus; otherwise
  /// this many seeded random pairs and triples.
  std::size_t sample_pairs = 0;
  /// Random modules per pair for the module-level monoid checks.
  std::size_t cost_modules = 8;
  /// Random subset pairs per module pair in the monoid checks (0: all).
  std::size_t subset_samples = 64;
};

LawReport check_gromov_laws(const std::vector<VCategory>& corpus, GromovSuite suite,
                            const GromovLawOptions& options = {});

}  // namespace vqcat
