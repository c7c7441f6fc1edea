#include "vqcat/presheaf.hpp"

namespace vqcat {

const char* to_string(FunctorKind k) {
  switch (k) {
    case FunctorKind::identity: return "identity";
    case FunctorKind::H: return "H";
    case FunctorKind::H_sym: return "H_sym";
    case FunctorKind::H_down: return "H_down";
  }
  return "?";
}

FunctorKind parse_functor_kind(const std::string& text) {
  if (text == "identity" || text == "id") return FunctorKind::identity;
  if (text == "H" || text == "plain") return FunctorKind::H;
  if (text == "H_sym" || text == "sym") return FunctorKind::H_sym;
  if (text == "H_down" || text == "down") return FunctorKind::H_down;
  throw DomainError("unknown functor '" + text + "' (identity, H, H_sym, H_down)");
}

std::optional<HausdorffVariant> FunctorObject::variant() const {
  switch (kind_) {
    case FunctorKind::identity: return std::nullopt;
    case FunctorKind::H: return HausdorffVariant::plain;
    case FunctorKind::H_sym: return HausdorffVariant::sym;
    case FunctorKind::H_down: return HausdorffVariant::down;
  }
  return std::nullopt;
}

VCategory FunctorObject::apply(const VCategory& x, const Caps& caps) const {
  auto v = variant();
  if (!v) return x;
  return HausdorffCategory(x, *v, caps).materialize(caps);
}

std::vector<std::size_t> FunctorObject::apply_map_indices(const VFunctorMap& f) const {
  auto v = variant();
  if (!v) return f.mapping();
  return hausdorff_map_indices(f, HausdorffCategory(f.source(), *v), HausdorffCategory(f.target(), *v));
}

VFunctorMap FunctorObject::apply_map(const VFunctorMap& f, const VCategory& kx, const VCategory& ky) const {
  return VFunctorMap(kx, ky, apply_map_indices(f));
}

VFunctorMap FunctorObject::apply_map(const VFunctorMap& f) const {
  return apply_map(f, apply(f.source()), apply(f.target()));
}

std::optional<std::size_t> FunctorObject::index_of_subset(const VCategory& x, Subset s) const {
  auto v = variant();
  if (!v) {
    if (s.size() != 1) return std::nullopt;
    return s.members().front();
  }
  if (*v != HausdorffVariant::down) {
    require_subset(x.carrier(), s);
    return static_cast<std::size_t>(s.bits);
  }
  return HausdorffCategory(x, *v).index_of(s);
}

// ---------------------------------------------------------------- extension

FunctorExtension::FunctorExtension(FunctorObject k, VCategory x, const Caps& caps)
    : k_(k), x_(std::move(x)), px_(presheaf_category(x_, caps)),
      kx_(k_.apply(x_, caps)), kxhat_(k_.apply(px_->category(), caps)),
      kyx_(k_.apply_map_indices(yoneda(*px_))) {}

std::vector<std::size_t> FunctorExtension::mate_indices(const VModule& phi) const {
  if (!(phi.source() == x_)) throw DomainError("FunctorExtension: module starts at a different category");
  return k_.apply_map_indices(yoneda_mate(phi, *px_));
}

VModule FunctorExtension::extend(const VModule& phi) const {
  auto kyphi = mate_indices(phi);
  VCategory ky = k_.apply(phi.target());
  const Quantale& q = phi.quantale();
  const std::size_t nd = kxhat_.size();
  Matrix m(kx_.size(), ky.size(), q.bottom());
  for (std::size_t i = 0; i < kx_.size(); ++i) {
    for (std::size_t j = 0; j < ky.size(); ++j) {
      Value acc = q.bottom();
      for (std::size_t d = 0; d < nd; ++d) acc = q.join(acc, q.tensor(kxhat_(kyx_[i], d), kxhat_(d, kyphi[j])));
      m(i, j) = std::move(acc);
    }
  }
  return make_vmodule(kx_, ky, std::move(m));
}

Value FunctorExtension::extend_at(const VModule& phi, std::size_t i, std::size_t j) const {
  auto kyphi = mate_indices(phi);
  if (i >= kx_.size() || j >= kyphi.size()) throw DomainError("extend_at: index out of range");
  const Quantale& q = phi.quantale();
  Value acc = q.bottom();
  for (std::size_t d = 0; d < kxhat_.size(); ++d) acc = q.join(acc, q.tensor(kxhat_(kyx_[i], d), kxhat_(d, kyphi[j])));
  return acc;
}

VModule extend_functor(const FunctorObject& k, const VModule& phi) {
  return FunctorExtension(k, phi.source()).extend(phi);
}

}  // namespace vqcat
