#include "vqcat/presheaf.hpp"

#include <chrono>

#include "vqcat/gromov.hpp"

namespace vqcat {

namespace {

std::vector<unsigned> key_of(const PresheafValues& s) {
  std::vector<unsigned> k;
  k.reserve(s.size());
  for (const auto& v : s) k.push_back(v.level_index());
  return k;
}

std::string format_values(const Quantale& q, const PresheafValues& s) {
  std::string out = "[";
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (i) out += ",";
    out += q.format(s[i]);
  }
  return out + "]";
}

}  // namespace

bool is_presheaf(const VCategory& x, const PresheafValues& s) {
  if (s.size() != x.size()) return false;
  const Quantale& q = x.quantale();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < x.size(); ++j)
      if (!q.leq(q.tensor(x(j, i), s[i]), s[j])) return false;
  return true;
}

PresheafCategory::PresheafCategory(VCategory base, const Caps& caps)
    : base_(std::move(base)), category_(base_.quantale()) {
  const Quantale& q = base_.quantale();
  if (!q.is_finite()) throw DomainError("presheaf categories need a finite quantale, not " + q.name());
  const std::size_t n = base_.size();
  require_within("presheaves", caps.presheaves, saturating_pow(q.size(), n));
  auto elems = q.elements();
  std::vector<std::size_t> digits(n, 0);
  while (true) {
    PresheafValues s(n);
    for (std::size_t i = 0; i < n; ++i) s[i] = elems[digits[i]];
    if (is_presheaf(base_, s)) {
      index_.emplace(key_of(s), values_.size());
      values_.push_back(std::move(s));
    }
    // Last position varies fastest: lexicographic order.
    std::size_t i = n;
    while (i > 0 && ++digits[i - 1] == elems.size()) digits[--i] = 0;
    if (i == 0) break;
  }
  Matrix m(values_.size(), values_.size(), q.bottom());
  std::vector<std::string> labels;
  for (std::size_t a = 0; a < values_.size(); ++a) {
    labels.push_back(format_values(q, values_[a]));
    for (std::size_t b = 0; b < values_.size(); ++b) {
      Value acc = q.top();
      for (std::size_t i = 0; i < n; ++i) acc = q.meet(acc, q.residual(values_[a][i], values_[b][i]));
      m(a, b) = std::move(acc);
    }
  }
  category_ = VCategory::trusted(Carrier(std::move(labels)), q, std::move(m));
}

std::optional<std::size_t> PresheafCategory::index_of(const PresheafValues& s) const {
  if (s.size() != base_.size()) return std::nullopt;
  for (const auto& v : s)
    if (!quantale().contains(v)) return std::nullopt;
  auto it = index_.find(key_of(s));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t PresheafCategory::require_index(const PresheafValues& s) const {
  if (auto i = index_of(s)) return *i;
  throw DomainError("value table " + format_values(quantale(), s) + " is not a presheaf");
}

PresheafCategoryPtr presheaf_category(const VCategory& x, const Caps& caps) {
  return std::make_shared<const PresheafCategory>(x, caps);
}

VFunctorMap yoneda(const PresheafCategory& px) {
  const VCategory& x = px.base();
  std::vector<std::size_t> m(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) {
    PresheafValues s(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) s[i] = x(i, j);
    m[j] = px.require_index(s);
  }
  return VFunctorMap(x, px.category(), std::move(m));
}

VFunctorMap yoneda_mate(const VModule& phi, const PresheafCategory& px) {
  if (!(phi.source() == px.base())) throw DomainError("yoneda_mate: presheaves are over the wrong base");
  const std::size_t nx = phi.source().size();
  std::vector<std::size_t> m(phi.target().size());
  for (std::size_t j = 0; j < m.size(); ++j) {
    PresheafValues s(nx);
    for (std::size_t i = 0; i < nx; ++i) s[i] = phi(i, j);
    m[j] = px.require_index(s);
  }
  return VFunctorMap(phi.target(), px.category(), std::move(m));
}

VFunctorMap left_extension(const VModule& phi, const PresheafCategory& px, const PresheafCategory& py) {
  if (!(phi.source() == px.base()) || !(phi.target() == py.base())) {
    throw DomainError("left_extension: presheaf categories do not match the module");
  }
  const Quantale& q = phi.quantale();
  const std::size_t nx = phi.source().size(), ny = phi.target().size();
  std::vector<std::size_t> m(py.size());
  for (std::size_t t = 0; t < py.size(); ++t) {
    const auto& s = py.values(t);
    PresheafValues out(nx);
    for (std::size_t i = 0; i < nx; ++i) {
      Value acc = q.bottom();
      for (std::size_t j = 0; j < ny; ++j) acc = q.join(acc, q.tensor(phi(i, j), s[j]));
      out[i] = std::move(acc);
    }
    m[t] = px.require_index(out);
  }
  return VFunctorMap(py.category(), px.category(), std::move(m));
}

VFunctorMap presheaf_map(const VFunctorMap& f, const PresheafCategory& px, const PresheafCategory& py) {
  VModule conj = companion_conjoint(f, AdjointSide::upper);  // Y -o-> X
  return left_extension(conj, py, px);
}

PresheafValues pv_multiply(const PresheafCategory& px, const std::vector<Value>& tau) {
  if (tau.size() != px.size()) throw DomainError("pv_multiply: table is not indexed by X^");
  const Quantale& q = px.quantale();
  PresheafValues out(px.base().size(), q.bottom());
  for (std::size_t x = 0; x < out.size(); ++x)
    for (std::size_t t = 0; t < px.size(); ++t) out[x] = q.join(out[x], q.tensor(px.values(t)[x], tau[t]));
  return out;
}

VFunctorMap pv_multiplication(const PresheafCategory& px, const Caps& caps) {
  PresheafCategory pxx(px.category(), caps);
  std::vector<std::size_t> m(pxx.size());
  for (std::size_t i = 0; i < pxx.size(); ++i) m[i] = px.require_index(pv_multiply(px, pxx.values(i)));
  return VFunctorMap(pxx.category(), px.category(), std::move(m));
}

// ---------------------------------------------------------------- suites

const char* to_string(PresheafSuite s) {
  switch (s) {
    case PresheafSuite::yoneda: return "yoneda";
    case PresheafSuite::kz: return "kz";
    case PresheafSuite::adjunction: return "adjunction";
  }
  return "?";
}

std::optional<PresheafSuite> parse_presheaf_suite(const std::string& text) {
  if (text == "yoneda") return PresheafSuite::yoneda;
  if (text == "kz") return PresheafSuite::kz;
  if (text == "adjunction") return PresheafSuite::adjunction;
  return std::nullopt;
}

namespace {

void check_yoneda(const PresheafCategory& px, LawReport& report) {
  const VCategory& x = px.base();
  const Quantale& q = x.quantale();
  VFunctorMap y = yoneda(px);
  LawReport f = check_vfunctor(y);
  report.absorb(f);
  if (!f.flag("fully_faithful") && report.passed()) {
    report.fail({"yoneda fully faithful", {}, "y_X", "is not", "fully faithful"});
  }
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t s = 0; s < px.size(); ++s) {
      ++report.instances;
      const Value& lhs = px.structure(y(i), s);
      const Value& rhs = px.values(s)[i];
      if (!(lhs == rhs)) {
        report.fail({"yoneda lemma",
                     {{"x", x.label(i)}, {"s", px.category().label(s)}},
                     "c(y(x), s) = " + q.format(lhs),
                     "!=",
                     "s(x) = " + q.format(rhs)});
      }
    }
  }
}

void check_kz(const PresheafCategory& px, LawReport& report) {
  const VCategory& x = px.base();
  const Quantale& q = x.quantale();
  VFunctorMap y = yoneda(px);
  for (std::size_t s = 0; s < px.size(); ++s) {
    const auto& sv = px.values(s);
    std::vector<Value> unit_tau(px.size()), ext_tau(px.size());
    for (std::size_t t = 0; t < px.size(); ++t) {
      Value acc = q.bottom();
      for (std::size_t i = 0; i < x.size(); ++i) acc = q.join(acc, q.tensor(px.structure(t, y(i)), sv[i]));
      ext_tau[t] = acc;
      unit_tau[t] = px.structure(t, s);
      ++report.instances;
      if (!q.leq(ext_tau[t], unit_tau[t])) {
        report.fail({"kz inequality",
                     {{"s", px.category().label(s)}, {"t", px.category().label(t)}},
                     "P_V(y_X)(s)(t) = " + q.format(ext_tau[t]),
                     "not <=",
                     "y_X^(s)(t) = " + q.format(unit_tau[t])});
      }
    }
    auto back = pv_multiply(px, unit_tau);
    if (!(back == sv)) {
      report.fail({"m . y_X^ = 1", {{"s", px.category().label(s)}}, "m(y(s))", "!=", "s"});
    }
    if (!(pv_multiply(px, ext_tau) == sv)) {
      report.fail({"m . P_V y_X = 1", {{"s", px.category().label(s)}}, "m(P_V y(s))", "!=", "s"});
    }
  }
}

void check_adjunction(const PresheafCategory& px, const VCategory& y, LawReport& report) {
  const VCategory& x = px.base();
  const Quantale& q = x.quantale();
  PresheafCategory py(y);
  VFunctorMap yx = yoneda(px);
  VFunctorMap yy = yoneda(py);
  for_each_module(x, y, [&](const VModule& phi) {
    ++report.instances;
    VFunctorMap mate = yoneda_mate(phi, px);
    LawReport mf = check_vfunctor(mate);
    report.absorb(mf);
    // (y_phi)^* . (y_X)_* = phi
    for (std::size_t i = 0; i < x.size(); ++i) {
      for (std::size_t j = 0; j < y.size(); ++j) {
        Value acc = q.bottom();
        for (std::size_t s = 0; s < px.size(); ++s)
          acc = q.join(acc, q.tensor(px.structure(yx(i), s), px.structure(s, mate(j))));
        if (!(acc == phi(i, j))) {
          report.fail({"(y_phi)^* . (y_X)_* = phi",
                       {{"x", x.label(i)}, {"y", y.label(j)}},
                       q.format(acc), "!=", q.format(phi(i, j))});
        }
      }
    }
    VFunctorMap ext = left_extension(phi, px, py);
    report.absorb(check_vfunctor(ext));
    for (std::size_t j = 0; j < y.size(); ++j) {
      if (ext(yy(j)) != mate(j)) {
        report.fail({"y_phi = phi^ . y_Y", {{"y", y.label(j)}}, px.category().label(mate(j)), "!=",
                     px.category().label(ext(yy(j)))});
      }
    }
    return !report.failed();
  });
}

}  // namespace

LawReport check_presheaf_laws(const VCategory& x, PresheafSuite suite, const PresheafLawOptions& options) {
  auto start = std::chrono::steady_clock::now();
  LawReport report;
  report.suite = std::string("presheaf.") + to_string(suite);
  PresheafCategory px(x);
  switch (suite) {
    case PresheafSuite::yoneda: check_yoneda(px, report); break;
    case PresheafSuite::kz: check_kz(px, report); break;
    case PresheafSuite::adjunction:
      for (const auto& y : options.partners) {
        require_same_quantale(x.quantale(), y.quantale(), "presheaf adjunction suite");
        check_adjunction(px, y, report);
      }
      if (options.partners.empty()) check_adjunction(px, x, report);
      break;
  }
  report.elapsed_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace vqcat
