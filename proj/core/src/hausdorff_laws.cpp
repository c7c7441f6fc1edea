#include <chrono>
#include <random>

#include "vqcat/corpus.hpp"
#include "vqcat/gromov.hpp"
#include "vqcat/hausdorff.hpp"
#include "vqcat/presheaf.hpp"

namespace vqcat {

const char* to_string(HausdorffSuite s) {
  switch (s) {
    case HausdorffSuite::monad: return "monad";
    case HausdorffSuite::kz: return "kz";
    case HausdorffSuite::lax_naturality: return "lax_naturality";
    case HausdorffSuite::monad_morphism: return "monad_morphism";
    case HausdorffSuite::em: return "em";
    case HausdorffSuite::em_tilde: return "em_tilde";
    case HausdorffSuite::structure: return "structure";
  }
  return "?";
}

std::optional<HausdorffSuite> parse_hausdorff_suite(const std::string& text) {
  for (auto s : {HausdorffSuite::monad, HausdorffSuite::kz, HausdorffSuite::lax_naturality,
                 HausdorffSuite::monad_morphism, HausdorffSuite::em, HausdorffSuite::em_tilde,
                 HausdorffSuite::structure}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

namespace {

using Family = std::uint64_t;  // a set of subsets of X: bit A set iff A is a member

Subset union_of(Family fam) {
  Subset u;
  for (std::uint64_t b = fam; b != 0; b &= b - 1) u = u | Subset{static_cast<std::uint64_t>(std::countr_zero(b))};
  return u;
}

std::string format_family(const Carrier& c, Family fam) {
  std::string out = "{";
  bool first = true;
  for (std::uint64_t b = fam; b != 0; b &= b - 1) {
    if (!first) out += ",";
    out += format_subset(c, Subset{static_cast<std::uint64_t>(std::countr_zero(b))});
    first = false;
  }
  return out + "}";
}

// Materialized HX over the full powerset; index = bitmask.
struct PowerTable {
  VCategory x;
  VCategory hx;
  std::size_t count;

  explicit PowerTable(const VCategory& base)
      : x(base), hx(HausdorffCategory(base, HausdorffVariant::plain).materialize()),
        count(std::size_t{1} << base.size()) {}

  const Quantale& q() const { return x.quantale(); }
  const Value& h(std::uint64_t a, std::uint64_t b) const { return hx(a, b); }
  // h_HX(F, G) = meet over A in F of join over B in G of h(A, B).
  Value hh(Family f, Family g) const {
    Value acc = q().top();
    for (std::uint64_t a = f; a != 0; a &= a - 1) {
      std::uint64_t ia = static_cast<std::uint64_t>(std::countr_zero(a));
      Value best = q().bottom();
      for (std::uint64_t b = g; b != 0; b &= b - 1) best = q().join(best, h(ia, static_cast<std::uint64_t>(std::countr_zero(b))));
      acc = q().meet(acc, best);
    }
    return acc;
  }
};

// Members of HHX to visit: all of them when there are few enough, otherwise
// seeded samples (with the empty family and the full family always included).
std::vector<Family> families(std::size_t count, std::size_t limit, std::size_t samples, std::mt19937_64& rng) {
  std::vector<Family> out;
  if (count < 64 && (std::size_t{1} << count) <= limit) {
    for (std::uint64_t f = 0; f < (std::uint64_t{1} << count); ++f) out.push_back(f);
    return out;
  }
  std::uint64_t full = count >= 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << count) - 1;
  out.push_back(0);
  out.push_back(full);
  std::uniform_int_distribution<std::uint64_t> d(0, full);
  for (std::size_t i = 0; i < samples; ++i) out.push_back(d(rng));
  return out;
}

std::string fmt(const Quantale& q, const Value& v) { return q.format(v); }

// ---------------------------------------------------------------- monad / kz

void check_monad(const PowerTable& t, const HausdorffLawOptions& opt, std::mt19937_64& rng, LawReport& r) {
  const auto& x = t.x;
  const Quantale& q = t.q();
  const Carrier& c = x.carrier();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < x.size(); ++j) {
      ++r.instances;
      const Value& lhs = t.h(Subset::single(i).bits, Subset::single(j).bits);
      if (!(lhs == x(i, j))) {
        r.fail({"{-} fully faithful", {{"x", c[i]}, {"y", c[j]}}, "h({x},{y}) = " + fmt(q, lhs), "!=",
                "a(x,y) = " + fmt(q, x(i, j))});
      }
    }
  }
  for (std::uint64_t a = 0; a < t.count; ++a) {
    ++r.instances;
    Family singles = 0;
    for (auto i : Subset{a}.members()) singles |= std::uint64_t{1} << Subset::single(i).bits;
    if (!(union_of(std::uint64_t{1} << a) == Subset{a})) {
      r.fail({"union . {-}_HX = 1", {{"A", format_subset(c, Subset{a})}}, "union {A}", "!=", "A"});
    }
    if (!(union_of(singles) == Subset{a})) {
      r.fail({"union . H{-}_X = 1", {{"A", format_subset(c, Subset{a})}}, "union {{x} | x in A}", "!=", "A"});
    }
  }
  // union : HHX -> HX is a V-functor.
  auto fams = families(t.count, 256, opt.samples, rng);
  auto fams2 = fams.size() * fams.size() <= opt.exhaustive_limit
                   ? fams
                   : families(t.count, 0, std::min<std::size_t>(opt.samples, 64), rng);
  for (auto f : fams) {
    for (auto g : fams2) {
      ++r.instances;
      Value lhs = t.hh(f, g);
      const Value& rhs = t.h(union_of(f).bits, union_of(g).bits);
      if (!q.leq(lhs, rhs)) {
        r.fail({"union is a V-functor", {{"F", format_family(c, f)}, {"G", format_family(c, g)}},
                "h_HX(F,G) = " + fmt(q, lhs), "not <=", "h(union F, union G) = " + fmt(q, rhs)});
      }
    }
  }
  // Associativity on sampled members of HHHX: union . union_HX = union . H union.
  std::uniform_int_distribution<std::size_t> len(0, 4);
  for (std::size_t s = 0; s < opt.samples; ++s) {
    ++r.instances;
    std::vector<Family> big(len(rng));
    for (auto& f : big) f = families(t.count, 0, 1, rng).back();
    Family flat = 0;
    Subset via_image;
    for (auto f : big) {
      flat |= f;
      via_image = via_image | union_of(f);
    }
    if (!(union_of(flat) == via_image)) {
      r.fail({"union associativity", {{"sample", std::to_string(s)}}, format_subset(c, union_of(flat)), "!=",
              format_subset(c, via_image)});
    }
  }
}

void check_kz(const PowerTable& t, const HausdorffLawOptions& opt, std::mt19937_64& rng, LawReport& r) {
  const Quantale& q = t.q();
  const Carrier& c = t.x.carrier();
  // H{-}_X <= {-}_HX pointwise in the order of HHX.
  for (std::uint64_t a = 0; a < t.count; ++a) {
    ++r.instances;
    Family singles = 0;
    for (auto i : Subset{a}.members()) singles |= std::uint64_t{1} << Subset::single(i).bits;
    Value v = t.hh(singles, std::uint64_t{1} << a);
    if (!q.leq(q.unit(), v)) {
      r.fail({"H{-} <= {-}_H", {{"A", format_subset(c, Subset{a})}}, "k", "not <=",
              "h_HX(H{-}(A), {A}) = " + fmt(q, v)});
    }
  }
  // union -| {-}_HX: h(union F, B) = h_HX(F, {B}).
  for (auto f : families(t.count, 256, opt.samples, rng)) {
    for (std::uint64_t b = 0; b < t.count; ++b) {
      ++r.instances;
      const Value& lhs = t.h(union_of(f).bits, b);
      Value rhs = t.hh(f, std::uint64_t{1} << b);
      if (!(lhs == rhs)) {
        r.fail({"union -| {-}", {{"F", format_family(c, f)}, {"B", format_subset(c, Subset{b})}},
                "h(union F, B) = " + fmt(q, lhs), "!=", "h_HX(F, {B}) = " + fmt(q, rhs)});
      }
    }
  }
}

// ---------------------------------------------------------------- structure

void check_structure(const VCategory& x, LawReport& r) {
  const Quantale& q = x.quantale();
  const Carrier& c = x.carrier();
  const std::size_t count = std::size_t{1} << x.size();
  for (auto v : {HausdorffVariant::plain, HausdorffVariant::sym, HausdorffVariant::down}) {
    VCategory hv = HausdorffCategory(x, v).materialize();
    if (auto cx = find_category_violation(hv.carrier(), q, hv.structure())) {
      cx->law = std::string("H") + (v == HausdorffVariant::plain ? "" : std::string("_") + to_string(v)) +
                "X " + cx->law;
      r.fail(*cx);
    }
  }
  for (std::uint64_t a = 0; a < count; ++a) {
    Subset sa{a};
    Subset da = down_closure(x, sa, ClosureMode::big);
    Subset oa = down_closure(x, sa, ClosureMode::order);
    if (!sa.subset_of(oa) || !oa.subset_of(da)) {
      r.fail({"B <= down(B) <= Down(B)", {{"B", format_subset(c, sa)}}, format_subset(c, oa), "vs",
              format_subset(c, da)});
    }
    if (!(down_closure(x, da, ClosureMode::big) == da)) {
      r.fail({"Down idempotent", {{"B", format_subset(c, sa)}}, format_subset(c, down_closure(x, da, ClosureMode::big)),
              "!=", format_subset(c, da)});
    }
    for (std::uint64_t b = 0; b < count; ++b) {
      ++r.instances;
      Subset sb{b};
      Value h = hausdorff_value(x, sa, sb);
      Value dual = hausdorff_value_dual(x, sa, sb);
      if (!(h == dual)) {
        r.fail({"dual formula", {{"A", format_subset(c, sa)}, {"B", format_subset(c, sb)}},
                "meet-join form = " + fmt(q, h), "!=", "residual form = " + fmt(q, dual)});
      }
      Subset db = down_closure(x, sb, ClosureMode::big);
      Value hd = hausdorff_value(x, da, db);
      if (!(h == hd)) {
        r.fail({"h(A,B) = h(Down A, Down B)", {{"A", format_subset(c, sa)}, {"B", format_subset(c, sb)}},
                fmt(q, h), "!=", fmt(q, hd)});
      }
      bool le = q.leq(q.unit(), h);
      if (le != sa.subset_of(db)) {
        r.fail({"A <= B iff A in Down B", {{"A", format_subset(c, sa)}, {"B", format_subset(c, sb)}},
                le ? "A <= B" : "not A <= B", "but", sa.subset_of(db) ? "A in Down B" : "A not in Down B"});
      }
    }
  }
}

// ---------------------------------------------------------------- monad morphism

void check_monad_morphism(const PowerTable& t, const HausdorffLawOptions& opt, std::mt19937_64& rng,
                          LawReport& r) {
  const VCategory& x = t.x;
  const Quantale& q = t.q();
  const Carrier& c = x.carrier();
  PresheafCategory px(x);
  // Y_X(A) = a(-, A) as an element of X^.
  std::vector<std::size_t> yx(t.count);
  for (std::uint64_t a = 0; a < t.count; ++a) {
    PresheafValues s(x.size());
    for (std::size_t z = 0; z < x.size(); ++z) s[z] = distance_to(x, z, Subset{a});
    auto idx = px.index_of(s);
    if (!idx) {
      r.fail({"Y_X(A) is a presheaf", {{"A", format_subset(c, Subset{a})}}, "a(-,A)", "is not", "a presheaf"});
      return;
    }
    yx[a] = *idx;
  }
  VFunctorMap y = yoneda(px);
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (yx[Subset::single(i).bits] != y(i)) {
      r.fail({"Y_X . {-} = y_X", {{"x", c[i]}}, px.category().label(yx[Subset::single(i).bits]), "!=",
              px.category().label(y(i))});
    }
  }
  for (std::uint64_t a = 0; a < t.count; ++a) {
    for (std::uint64_t b = 0; b < t.count; ++b) {
      ++r.instances;
      if (!q.leq(t.h(a, b), px.structure(yx[a], yx[b]))) {
        r.fail({"Y_X is a V-functor", {{"A", format_subset(c, Subset{a})}, {"B", format_subset(c, Subset{b})}},
                "h(A,B) = " + fmt(q, t.h(a, b)), "not <=", "c(Y A, Y B) = " + fmt(q, px.structure(yx[a], yx[b]))});
      }
    }
  }
  // m_X . Y_X^ . HY_X = Y_X . union on members of HHX.
  for (auto f : families(t.count, 256, opt.samples, rng)) {
    ++r.instances;
    std::vector<std::size_t> image;
    for (std::uint64_t b = f; b != 0; b &= b - 1) image.push_back(yx[static_cast<std::size_t>(std::countr_zero(b))]);
    std::vector<Value> tau(px.size(), q.bottom());
    for (std::size_t s = 0; s < px.size(); ++s)
      for (auto d : image) tau[s] = q.join(tau[s], px.structure(s, d));
    PresheafValues lhs = pv_multiply(px, tau);
    const PresheafValues& rhs = px.values(yx[union_of(f).bits]);
    if (!(lhs == rhs)) {
      r.fail({"monad morphism square", {{"F", format_family(c, f)}},
              "m(Y^(HY(F)))", "!=", "Y(union F) = " + px.category().label(yx[union_of(f).bits])});
    }
  }
}

// ---------------------------------------------------------------- Eilenberg-Moore

void check_em(const PowerTable& t, const Caps& caps, LawReport& r) {
  const VCategory& x = t.x;
  const Quantale& q = x.quantale();
  const Carrier& c = x.carrier();
  const std::size_t n = x.size();
  auto le = [&](std::size_t i, std::size_t j) { return q.leq(q.unit(), x(i, j)); };
  // Equation (sup) a(alpha A, y) = meet over x in A of a(x, y).
  auto sup_equation = [&](std::uint64_t a, std::size_t s) {
    for (std::size_t y = 0; y < n; ++y)
      if (!(x(s, y) == t.h(a, Subset::single(y).bits))) return false;
    return true;
  };
  // Candidate alpha from induced-order suprema, preferring alpha{x} = x.
  std::vector<std::optional<std::size_t>> alpha(t.count);
  bool complete = true;
  for (std::uint64_t a = 0; a < t.count; ++a) {
    Subset sa{a};
    std::vector<std::size_t> order;
    if (sa.size() == 1) order.push_back(sa.members().front());
    for (std::size_t s = 0; s < n; ++s) order.push_back(s);
    for (auto s : order) {
      bool upper = true;
      for (auto i : sa.members()) upper = upper && le(i, s);
      if (!upper) continue;
      bool least = true;
      for (std::size_t u = 0; u < n && least; ++u) {
        bool ub = true;
        for (auto i : sa.members()) ub = ub && le(i, u);
        if (ub && !le(s, u)) least = false;
      }
      if (least) {
        alpha[a] = s;
        break;
      }
    }
    if (!alpha[a]) complete = false;
  }
  bool eq_sup = complete;
  for (std::uint64_t a = 0; a < t.count && eq_sup; ++a) eq_sup = sup_equation(a, *alpha[a]);
  // Algebra laws for the candidate.
  auto algebra_laws = [&](const std::vector<std::size_t>& al) -> std::optional<Counterexample> {
    for (std::size_t i = 0; i < n; ++i) {
      if (al[Subset::single(i).bits] != i) {
        return Counterexample{"alpha . {-} = 1", {{"x", c[i]}}, c[al[Subset::single(i).bits]], "!=", c[i]};
      }
    }
    for (std::uint64_t a = 0; a < t.count; ++a) {
      const Value& v = t.h(a, Subset::single(al[a]).bits);
      if (!q.leq(q.unit(), v)) {
        return Counterexample{"1 <= {-} . alpha", {{"A", format_subset(c, Subset{a})}}, "k", "not <=",
                              "h(A, {alpha A}) = " + fmt(q, v)};
      }
      for (std::uint64_t b = 0; b < t.count; ++b) {
        if (!q.leq(t.h(a, b), x(al[a], al[b]))) {
          return Counterexample{"alpha is a V-functor",
                                {{"A", format_subset(c, Subset{a})}, {"B", format_subset(c, Subset{b})}},
                                "h(A,B) = " + fmt(q, t.h(a, b)), "not <=",
                                "a(alpha A, alpha B) = " + fmt(q, x(al[a], al[b]))};
        }
      }
    }
    return std::nullopt;
  };
  bool candidate_algebra = false;
  if (complete) {
    std::vector<std::size_t> al(t.count);
    for (std::size_t a = 0; a < t.count; ++a) al[a] = *alpha[a];
    auto cx = algebra_laws(al);
    candidate_algebra = !cx;
    if (eq_sup && cx) r.fail(*cx);
    if (candidate_algebra && !eq_sup) {
      r.fail({"algebra implies the sup equation", {}, "alpha satisfies the algebra laws", "but",
              "a(sup A, y) != meet a(x, y) for some A"});
    }
  }
  r.instances += t.count;
  // Independent oracle: search all maps HX -> X for an algebra structure.
  std::size_t maps = saturating_pow(n, t.count);
  if (n > 0 && maps <= caps.enumeration) {
    bool found = false;
    std::vector<std::size_t> al(t.count, 0);
    while (true) {
      ++r.instances;
      if (!algebra_laws(al)) {
        found = true;
        for (std::uint64_t a = 0; a < t.count; ++a) {
          if (!sup_equation(a, al[a])) {
            r.fail({"every algebra gives suprema with the sup equation", {{"A", format_subset(c, Subset{a})}},
                    "alpha(A) = " + c[al[a]], "fails", "a(alpha A, y) = meet a(x, y)"});
            break;
          }
        }
      }
      std::size_t i = 0;
      while (i < al.size() && ++al[i] == n) al[i++] = 0;
      if (i == al.size()) break;
    }
    if (found != (complete && eq_sup)) {
      r.fail({"algebra exists iff order-complete with the sup equation", {},
              found ? "an algebra exists" : "no algebra exists", "but",
              complete && eq_sup ? "X is order-complete with the sup equation" : "X is not"});
    }
  } else {
    r.notes.push_back("brute-force algebra search skipped (|X|^|HX| over the enumeration cap)");
  }
  r.flags["algebra"] = complete && eq_sup;
}

// Tables for module-level checks over full powersets.
struct ModuleTables {
  PowerTable tx, ty;
  std::vector<Value> ht;  // H~phi(A, B), row-major over masks

  explicit ModuleTables(const VModule& phi) : tx(phi.source()), ty(phi.target()) {
    ht.resize(tx.count * ty.count);
    for (std::uint64_t a = 0; a < tx.count; ++a)
      for (std::uint64_t b = 0; b < ty.count; ++b) ht[a * ty.count + b] = htilde(phi, Subset{a}, Subset{b});
  }
  const Value& h(std::uint64_t a, std::uint64_t b) const { return ht[a * ty.count + b]; }
};

// alpha(A, y) = h(A, {y}).
Value alpha_at(const PowerTable& t, std::uint64_t a, std::size_t y) { return t.h(a, Subset::single(y).bits); }

void check_em_tilde(const PowerTable& t, const HausdorffLawOptions& opt, const Caps& caps, std::mt19937_64& rng,
                    LawReport& r) {
  const VCategory& x = t.x;
  const Quantale& q = x.quantale();
  const Carrier& c = x.carrier();
  const std::size_t n = x.size();
  Matrix am(t.count, n, q.bottom());
  for (std::uint64_t a = 0; a < t.count; ++a)
    for (std::size_t y = 0; y < n; ++y) am(a, y) = alpha_at(t, a, y);
  if (auto cx = find_module_violation(t.hx, x, am)) {
    cx->law = "{-}^* is a module: " + cx->law;
    r.fail(*cx);
    return;
  }
  auto fams = families(t.count, 256, opt.samples, rng);
  // The unit law alpha . delta = a and the multiplication law
  // alpha . nu = alpha . H~alpha for a
  // module alpha : HX -o-> X given by its matrix.
  auto equations = [&](const Matrix& al) -> std::optional<Counterexample> {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t y = 0; y < n; ++y) {
        Value acc = q.bottom();
        for (std::uint64_t b = 0; b < t.count; ++b) acc = q.join(acc, q.tensor(distance_to(x, i, Subset{b}), al(b, y)));
        if (!(acc == x(i, y))) {
          return Counterexample{"alpha . delta = a", {{"x", c[i]}, {"y", c[y]}}, fmt(q, acc), "!=", fmt(q, x(i, y))};
        }
      }
    }
    for (auto f : fams) {
      Subset u = union_of(f);
      for (std::size_t y = 0; y < n; ++y) {
        Value lhs = q.bottom(), rhs = q.bottom();
        for (std::uint64_t b = 0; b < t.count; ++b) {
          lhs = q.join(lhs, q.tensor(t.h(u.bits, b), al(b, y)));
          Value hal = q.top();  // H~alpha(F, B)
          for (std::uint64_t m = f; m != 0; m &= m - 1) {
            std::size_t a = static_cast<std::size_t>(std::countr_zero(m));
            Value best = q.bottom();
            for (auto z : Subset{b}.members()) best = q.join(best, al(a, z));
            hal = q.meet(hal, best);
          }
          rhs = q.join(rhs, q.tensor(hal, al(b, y)));
        }
        if (!(lhs == rhs)) {
          return Counterexample{"alpha . nu = alpha . H~alpha", {{"F", format_family(c, f)}, {"y", c[y]}},
                                fmt(q, lhs), "!=", fmt(q, rhs)};
        }
      }
    }
    return std::nullopt;
  };
  r.instances += fams.size() * n + n * n;
  if (auto cx = equations(am)) r.fail(*cx);
  // Uniqueness: no other module HX -o-> X satisfies both equations.
  if (saturating_pow(q.size(), t.count * n) <= caps.enumeration) {
    std::size_t solutions = 0;
    for_each_module(t.hx, x, [&](const VModule& beta) {
      ++r.instances;
      if (equations(beta.matrix())) return true;
      ++solutions;
      if (!(beta.matrix() == am)) {
        r.fail({"{-}^* is the only algebra structure", {}, "another alpha", "satisfies", "both equations"});
        return false;
      }
      return true;
    }, caps);
    if (solutions != 1 && r.passed()) {
      r.fail({"{-}^* is the only algebra structure", {}, std::to_string(solutions), "solutions, expected", "1"});
    }
  } else {
    r.notes.push_back("uniqueness search skipped for |X| = " + std::to_string(n));
  }
}

}  // namespace

// ---------------------------------------------------------------- per-module checks

LawReport check_lax_naturality(const VModule& phi) {
  LawReport r;
  r.suite = "hausdorff.lax_naturality";
  const Quantale& q = phi.quantale();
  const VCategory& x = phi.source();
  const VCategory& y = phi.target();
  ModuleTables mt(phi);
  const auto& tx = mt.tx;
  const auto& ty = mt.ty;
  require_within("hh_table", std::size_t{1} << 20,
                 saturating_pow(2, tx.count) * saturating_pow(2, ty.count));
  // delta square: H~phi . delta_X = delta_Y . phi.
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::uint64_t b = 0; b < ty.count; ++b) {
      ++r.instances;
      Value lhs = q.bottom(), rhs = q.bottom();
      for (std::uint64_t a = 0; a < tx.count; ++a) lhs = q.join(lhs, q.tensor(distance_to(x, i, Subset{a}), mt.h(a, b)));
      for (std::size_t z = 0; z < y.size(); ++z) rhs = q.join(rhs, q.tensor(phi(i, z), distance_to(y, z, Subset{b})));
      if (!(lhs == rhs)) {
        r.fail({"H~phi . delta_X = delta_Y . phi",
                {{"x", x.label(i)}, {"B", format_subset(y.carrier(), Subset{b})}},
                fmt(q, lhs), "!=", fmt(q, rhs)});
      }
    }
  }
  // nu square: H~phi . nu_X = nu_Y . H~H~phi over all of HHX and HHY.
  const std::uint64_t fx = std::uint64_t{1} << tx.count, fy = std::uint64_t{1} << ty.count;
  // j[A * fy + G] = join over B' in G of H~phi(A, B').
  std::vector<Value> j(tx.count * fy, q.bottom());
  for (std::uint64_t a = 0; a < tx.count; ++a)
    for (std::uint64_t g = 1; g < fy; ++g)
      j[a * fy + g] = q.join(j[a * fy + (g & (g - 1))], mt.h(a, static_cast<std::uint64_t>(std::countr_zero(g))));
  std::vector<Value> nuy(fy * ty.count);
  for (std::uint64_t g = 0; g < fy; ++g)
    for (std::uint64_t b = 0; b < ty.count; ++b) nuy[g * ty.count + b] = ty.h(union_of(g).bits, b);
  std::vector<Value> hh(fy);
  for (std::uint64_t f = 0; f < fx; ++f) {
    // H~H~phi(F, G) for all G.
    for (std::uint64_t g = 0; g < fy; ++g) {
      Value acc = q.top();
      for (std::uint64_t m = f; m != 0; m &= m - 1) acc = q.meet(acc, j[static_cast<std::uint64_t>(std::countr_zero(m)) * fy + g]);
      hh[g] = acc;
    }
    Subset u = union_of(f);
    for (std::uint64_t b = 0; b < ty.count; ++b) {
      ++r.instances;
      Value lhs = q.bottom(), rhs = q.bottom();
      for (std::uint64_t a = 0; a < tx.count; ++a) lhs = q.join(lhs, q.tensor(tx.h(u.bits, a), mt.h(a, b)));
      for (std::uint64_t g = 0; g < fy; ++g) rhs = q.join(rhs, q.tensor(hh[g], nuy[g * ty.count + b]));
      if (!(lhs == rhs)) {
        r.fail({"H~phi . nu_X = nu_Y . H~H~phi",
                {{"F", format_family(x.carrier(), f)}, {"B", format_subset(y.carrier(), Subset{b})}},
                fmt(q, lhs), "!=", fmt(q, rhs)});
      }
    }
  }
  return r;
}

LawReport check_lax_homomorphism(const VModule& phi) {
  LawReport r;
  r.suite = "hausdorff.lax_homomorphism";
  const Quantale& q = phi.quantale();
  const VCategory& x = phi.source();
  const VCategory& y = phi.target();
  ModuleTables mt(phi);
  for (std::uint64_t a = 0; a < mt.tx.count; ++a) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      ++r.instances;
      Value lhs = q.bottom(), rhs = q.bottom();
      for (std::size_t i = 0; i < x.size(); ++i) lhs = q.join(lhs, q.tensor(alpha_at(mt.tx, a, i), phi(i, j)));
      for (std::uint64_t b = 0; b < mt.ty.count; ++b) rhs = q.join(rhs, q.tensor(mt.h(a, b), alpha_at(mt.ty, b, j)));
      if (!q.leq(lhs, rhs)) {
        r.fail({"phi . alpha <= beta . H~phi",
                {{"A", format_subset(x.carrier(), Subset{a})}, {"y", y.label(j)}},
                fmt(q, lhs), "not <=", fmt(q, rhs)});
      }
    }
  }
  return r;
}

LawReport check_hausdorff_laws(const VCategory& x, HausdorffSuite suite, const HausdorffLawOptions& options) {
  auto start = std::chrono::steady_clock::now();
  LawReport r;
  r.suite = std::string("hausdorff.") + to_string(suite);
  std::mt19937_64 rng(options.seed);
  const Caps& caps = default_caps();
  switch (suite) {
    case HausdorffSuite::monad: check_monad(PowerTable(x), options, rng, r); break;
    case HausdorffSuite::kz: check_kz(PowerTable(x), options, rng, r); break;
    case HausdorffSuite::structure: check_structure(x, r); break;
    case HausdorffSuite::monad_morphism:
      if (!x.quantale().is_finite()) {
        r.skip("the monad morphism into P_V needs a finite quantale");
        break;
      }
      check_monad_morphism(PowerTable(x), options, rng, r);
      break;
    case HausdorffSuite::em: check_em(PowerTable(x), caps, r); break;
    case HausdorffSuite::em_tilde:
      check_em_tilde(PowerTable(x), options, caps, rng, r);
      for (const auto& y : options.partners) {
        auto visit = [&](const VModule& phi) {
          r.absorb(check_lax_homomorphism(phi));
          return !r.failed();
        };
        if (x.quantale().is_finite()) {
          for_each_module(x, y, visit, caps);
        } else {
          for (std::size_t s = 0; s < options.samples / 100 + 1 && !r.failed(); ++s) visit(random_module(x, y, rng));
        }
      }
      break;
    case HausdorffSuite::lax_naturality:
      for (const auto& y : options.partners) {
        for_each_module(x, y, [&](const VModule& phi) {
          r.absorb(check_lax_naturality(phi));
          return !r.failed();
        }, caps);
      }
      if (options.partners.empty()) r.notes.push_back("no partner categories given");
      break;
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace vqcat
