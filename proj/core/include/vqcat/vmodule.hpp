#pragma once

#include <optional>

#include "vqcat/enriched.hpp"

namespace vqcat {

/// phi : X -o-> Y with phi . a <= phi and b . phi <= phi.
class VModule {
 public:
  /// Trusted constructor: the caller guarantees the module laws.
  static VModule trusted(VCategory source, VCategory target, Matrix matrix);

  const VCategory& source() const noexcept { return source_; }
  const VCategory& target() const noexcept { return target_; }
  const Quantale& quantale() const noexcept { return source_.quantale(); }
  const Matrix& matrix() const noexcept { return *m_; }
  const Value& operator()(std::size_t x, std::size_t y) const { return (*m_)(x, y); }
  VRelation as_relation() const;

  friend bool operator==(const VModule& a, const VModule& b);

 private:
  VModule(VCategory source, VCategory target, std::shared_ptr<const Matrix> m);

  VCategory source_;
  VCategory target_;
  std::shared_ptr<const Matrix> m_;
};

/// First left- or right-action violation, if any. Inputs are named x', x, y
/// (left) or x, y, y' (right).
std::optional<Counterexample> find_module_violation(const VCategory& x, const VCategory& y,
                                                    const Matrix& m);
bool is_module(const VCategory& x, const VCategory& y, const Matrix& m);

/// Validated constructor; throws LawViolation with the witness triple.
VModule make_vmodule(const VCategory& x, const VCategory& y, Matrix m);

/// 1_X* = a.
VModule identity_module(const VCategory& x);
/// Constant-top relation, the greatest module X -o-> Y.
VModule top_module(const VCategory& x, const VCategory& y);
/// Constant-bottom relation, the least module.
VModule bottom_module(const VCategory& x, const VCategory& y);

/// psi . phi : X -o-> Z, re-validated.
VModule compose_modules(const VModule& phi, const VModule& psi);
/// Pointwise order.
bool module_leq(const VModule& phi, const VModule& psi);
VModule module_join(const VModule& phi, const VModule& psi);
/// phi° : Y -o-> X. Only a module when X and Y are symmetric; throws
/// LawViolation otherwise.
VModule transpose_module(const VModule& phi);

enum class AdjointSide { lower, upper };

/// lower: f_*(x, y) = b(f x, y) : X -o-> Y.
/// upper: f^*(y, x) = b(y, f x) : Y -o-> X.
VModule companion_conjoint(const VFunctorMap& f, AdjointSide side);

/// (g^* . phi . f_*)(x', y') = phi(f x', g y') : X' -o-> Y'.
VModule restrict(const VModule& phi, const VFunctorMap& f, const VFunctorMap& g);

/// Gluing of X and Y along phi (and optionally phi_back : Y -o-> X) on the
/// coproduct carrier "L:x" / "R:y". Blocks: [a, phi; back or bottom, b].
/// The two-sided case throws LawViolation unless check_pair passes.
VCategory glue(const VModule& phi, const std::optional<VModule>& phi_back = std::nullopt);

struct Unglued {
  VModule forward;
  VModule backward;
};
/// Inverse of glue on a structure over a coproduct carrier whose first
/// `left_size` elements form X. The blocks are read off directly.
Unglued unglue(const VCategory& z, std::size_t left_size);

/// phi' . phi <= a and phi . phi' <= b. Sets flag "symmetric_module" when X,
/// Y are symmetric and phi' = phi° as well.
LawReport check_pair(const VModule& phi, const VModule& phi_back);
bool is_pair(const VModule& phi, const VModule& phi_back);

/// tensor / product: entrywise (x) / meet on pair carriers; coproduct: block
/// diagonal with bottom across. Result is re-validated against the combined
/// categories.
VModule combine_modules(const VModule& phi, const VModule& psi, CombineMode mode);

}  // namespace vqcat
