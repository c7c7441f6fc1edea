#include "vqcat/hausdorff.hpp"

#include <limits>

namespace vqcat {

namespace {
constexpr std::size_t npos = std::numeric_limits<std::size_t>::max();
}

std::vector<std::size_t> Subset::members() const {
  std::vector<std::size_t> out;
  for (std::uint64_t b = bits; b != 0; b &= b - 1) out.push_back(static_cast<std::size_t>(std::countr_zero(b)));
  return out;
}

Subset subset_of_labels(const Carrier& carrier, const std::vector<std::string>& labels) {
  Subset s;
  for (const auto& l : labels) s = s.with(carrier.index_of(l));
  return s;
}

std::vector<std::string> subset_labels(const Carrier& carrier, Subset s) {
  std::vector<std::string> out;
  for (auto i : s.members()) out.push_back(carrier[i]);
  return out;
}

std::string format_subset(const Carrier& carrier, Subset s) {
  std::string out = "{";
  bool first = true;
  for (auto i : s.members()) {
    if (!first) out += ",";
    out += carrier[i];
    first = false;
  }
  return out + "}";
}

void require_subset(const Carrier& carrier, Subset s) {
  if (carrier.size() > 64 || !s.subset_of(Subset::all(carrier.size()))) {
    throw DomainError("subset has elements outside the carrier");
  }
}

const char* to_string(HausdorffVariant v) {
  switch (v) {
    case HausdorffVariant::plain: return "plain";
    case HausdorffVariant::sym: return "sym";
    case HausdorffVariant::down: return "down";
  }
  return "?";
}

HausdorffVariant parse_hausdorff_variant(const std::string& text) {
  if (text == "plain") return HausdorffVariant::plain;
  if (text == "sym") return HausdorffVariant::sym;
  if (text == "down") return HausdorffVariant::down;
  throw DomainError("unknown Hausdorff variant '" + text + "'");
}

Value distance_to(const VCategory& x, std::size_t elem, Subset b) {
  const Quantale& q = x.quantale();
  Value acc = q.bottom();
  for (auto y : b.members()) acc = q.join(acc, x(elem, y));
  return acc;
}

Value hausdorff_value(const VCategory& x, Subset a, Subset b) {
  const Quantale& q = x.quantale();
  Value acc = q.top();
  for (auto i : a.members()) acc = q.meet(acc, distance_to(x, i, b));
  return acc;
}

Value hausdorff_value_dual(const VCategory& x, Subset a, Subset b) {
  const Quantale& q = x.quantale();
  Value acc = q.top();
  for (std::size_t z = 0; z < x.size(); ++z) {
    acc = q.meet(acc, q.residual(distance_to(x, z, a), distance_to(x, z, b)));
  }
  return acc;
}

Subset down_closure(const VCategory& x, Subset b, ClosureMode mode) {
  const Quantale& q = x.quantale();
  Subset out;
  for (std::size_t i = 0; i < x.size(); ++i) {
    bool in = false;
    if (mode == ClosureMode::big) {
      in = q.leq(q.unit(), distance_to(x, i, b));
    } else {
      for (auto y : b.members()) {
        if (q.leq(q.unit(), x(i, y))) {
          in = true;
          break;
        }
      }
    }
    if (in) out = out.with(i);
  }
  return out;
}

// ---------------------------------------------------------------- HausdorffCategory

HausdorffCategory::HausdorffCategory(VCategory base, HausdorffVariant variant, const Caps& caps)
    : base_(std::move(base)), variant_(variant) {
  require_within("powerset_base", caps.powerset_base, base_.size());
  std::size_t count = std::size_t{1} << base_.size();
  index_.assign(count, npos);
  for (std::size_t m = 0; m < count; ++m) {
    Subset s{m};
    if (variant_ == HausdorffVariant::down && !(down_closure(base_, s, ClosureMode::big) == s)) continue;
    index_[m] = elements_.size();
    elements_.push_back(s);
  }
}

std::optional<std::size_t> HausdorffCategory::index_of(Subset s) const {
  if (s.bits >= index_.size() || index_[s.bits] == npos) return std::nullopt;
  return index_[s.bits];
}

Value HausdorffCategory::value(Subset a, Subset b) const {
  if (variant_ == HausdorffVariant::sym) {
    return quantale().meet(hausdorff_value(base_, a, b), hausdorff_value(base_, b, a));
  }
  return hausdorff_value(base_, a, b);
}

VCategory HausdorffCategory::materialize(const Caps& caps) const {
  require_within("materialized_powerset_base", caps.materialized_powerset_base, base_.size());
  const Quantale& q = quantale();
  const std::size_t n = base_.size();
  const std::size_t count = std::size_t{1} << n;
  // d[x * count + T] = a(x, T), built up one lowest bit at a time.
  std::vector<Value> d(n * count, q.bottom());
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t t = 1; t < count; ++t) {
      std::size_t low = static_cast<std::size_t>(std::countr_zero(t));
      d[x * count + t] = q.join(d[x * count + (t & (t - 1))], base_(x, low));
    }
  }
  // h[S * count + T] over the full powerset, same recursion in S.
  std::vector<Value> h(count * count, q.top());
  for (std::size_t t = 0; t < count; ++t) {
    for (std::size_t s = 1; s < count; ++s) {
      std::size_t low = static_cast<std::size_t>(std::countr_zero(s));
      h[s * count + t] = q.meet(h[(s & (s - 1)) * count + t], d[low * count + t]);
    }
  }
  std::vector<std::string> labels;
  labels.reserve(elements_.size());
  for (auto s : elements_) labels.push_back(format_subset(base_.carrier(), s));
  Matrix m(elements_.size(), elements_.size(), q.bottom());
  for (std::size_t i = 0; i < elements_.size(); ++i) {
    for (std::size_t j = 0; j < elements_.size(); ++j) {
      std::uint64_t a = elements_[i].bits, b = elements_[j].bits;
      m(i, j) = variant_ == HausdorffVariant::sym ? q.meet(h[a * count + b], h[b * count + a])
                                                  : h[a * count + b];
    }
  }
  return VCategory::trusted(Carrier(std::move(labels)), q, std::move(m));
}

// ---------------------------------------------------------------- maps

Subset image(const VFunctorMap& f, Subset a) {
  Subset out;
  for (auto i : a.members()) out = out.with(f(i));
  return out;
}

std::vector<std::size_t> hausdorff_map_indices(const VFunctorMap& f, const HausdorffCategory& hx,
                                               const HausdorffCategory& hy) {
  std::vector<std::size_t> out(hx.size());
  for (std::size_t i = 0; i < hx.size(); ++i) {
    Subset img = image(f, hx.element(i));
    if (hy.variant() == HausdorffVariant::down) img = down_closure(f.target(), img, ClosureMode::big);
    auto j = hy.index_of(img);
    if (!j) throw DomainError("image subset is not an element of the target powerset");
    out[i] = *j;
  }
  return out;
}

VFunctorMap hausdorff_map(const VFunctorMap& f, HausdorffVariant variant) {
  HausdorffCategory hx(f.source(), variant);
  HausdorffCategory hy(f.target(), variant);
  auto idx = hausdorff_map_indices(f, hx, hy);
  return VFunctorMap(hx.materialize(), hy.materialize(), std::move(idx));
}

// ---------------------------------------------------------------- lax extension

Value htilde(const VRelation& r, Subset a, Subset b) {
  require_subset(r.source(), a);
  require_subset(r.target(), b);
  const Quantale& q = r.quantale();
  Value acc = q.top();
  for (auto x : a.members()) {
    Value best = q.bottom();
    for (auto y : b.members()) best = q.join(best, r(x, y));
    acc = q.meet(acc, best);
  }
  return acc;
}

Value htilde(const VModule& phi, Subset a, Subset b) { return htilde(phi.as_relation(), a, b); }

Value skolem_htilde(const VModule& phi, Subset a, Subset b, const Caps& caps) {
  require_subset(phi.source().carrier(), a);
  require_subset(phi.target().carrier(), b);
  const Quantale& q = phi.quantale();
  if (!q.completely_distributive()) {
    throw DomainError("skolem_htilde needs a completely distributive quantale, " + q.name() + " is not");
  }
  std::vector<std::size_t> xs = a.members(), ys = b.members();
  require_within("enumeration", caps.enumeration, saturating_pow(ys.size(), xs.size()));
  // Join over all f: A -> B (odometer order) of meet_x phi(x, f x).
  if (xs.empty()) return q.top();
  if (ys.empty()) return q.bottom();
  std::vector<std::size_t> choice(xs.size(), 0);
  Value best = q.bottom();
  while (true) {
    Value v = q.top();
    for (std::size_t i = 0; i < xs.size(); ++i) v = q.meet(v, phi(xs[i], ys[choice[i]]));
    best = q.join(best, v);
    std::size_t i = 0;
    while (i < choice.size() && ++choice[i] == ys.size()) choice[i++] = 0;
    if (i == choice.size()) break;
  }
  return best;
}

VModule htilde_module(const VModule& phi, const VCategory& hx, const VCategory& hy) {
  std::size_t cx = std::size_t{1} << phi.source().size();
  std::size_t cy = std::size_t{1} << phi.target().size();
  if (hx.size() != cx || hy.size() != cy) throw DomainError("htilde_module: powersets do not match the module");
  Matrix m(cx, cy, phi.quantale().bottom());
  for (std::size_t a = 0; a < cx; ++a)
    for (std::size_t b = 0; b < cy; ++b) m(a, b) = htilde(phi, Subset{a}, Subset{b});
  return make_vmodule(hx, hy, std::move(m));
}

LaxMonadComponents lax_monad_components(const VCategory& x, const Caps& caps) {
  require_within("double_powerset_base", caps.double_powerset_base, x.size());
  VCategory hx = HausdorffCategory(x, HausdorffVariant::plain, caps).materialize(caps);
  VCategory hhx = HausdorffCategory(hx, HausdorffVariant::plain, caps).materialize(caps);
  const Quantale& q = x.quantale();
  Matrix delta(x.size(), hx.size(), q.bottom());
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t b = 0; b < hx.size(); ++b) delta(i, b) = distance_to(x, i, Subset{b});
  Matrix nu(hhx.size(), hx.size(), q.bottom());
  for (std::size_t big = 0; big < hhx.size(); ++big) {
    Subset uni;
    for (auto a : Subset{big}.members()) uni = uni | Subset{a};
    for (std::size_t b = 0; b < hx.size(); ++b) nu(big, b) = hx(uni.bits, b);
  }
  VModule d = make_vmodule(x, hx, std::move(delta));
  VModule n = make_vmodule(hhx, hx, std::move(nu));
  return {std::move(hx), std::move(hhx), std::move(d), std::move(n)};
}

}  // namespace vqcat
