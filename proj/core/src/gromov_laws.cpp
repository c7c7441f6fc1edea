#include <chrono>
#include <map>
#include <random>
#include <tuple>

#include "vqcat/corpus.hpp"
#include "vqcat/gromov.hpp"
#include "vqcat/hausdorff.hpp"

namespace vqcat {

const char* to_string(GromovSuite s) {
  switch (s) {
    case GromovSuite::vcat_laws: return "vcat_laws";
    case GromovSuite::iso_invariance: return "iso_invariance";
    case GromovSuite::monotone_in_K: return "monotone_in_K";
    case GromovSuite::sym_lift: return "sym_lift";
    case GromovSuite::separated: return "separated";
    case GromovSuite::chaos: return "chaos";
    case GromovSuite::monoid: return "monoid";
    case GromovSuite::monoid_tensor: return "monoid_tensor";
    case GromovSuite::monoid_product: return "monoid_product";
    case GromovSuite::monoid_coproduct: return "monoid_coproduct";
    case GromovSuite::homomorphism: return "homomorphism";
    case GromovSuite::sym_bounds: return "sym_bounds";
    case GromovSuite::gluing: return "gluing";
  }
  return "?";
}

std::optional<GromovSuite> parse_gromov_suite(const std::string& text) {
  for (auto s : {GromovSuite::vcat_laws, GromovSuite::iso_invariance, GromovSuite::monotone_in_K,
                 GromovSuite::sym_lift, GromovSuite::separated, GromovSuite::chaos, GromovSuite::monoid,
                 GromovSuite::monoid_tensor, GromovSuite::monoid_product, GromovSuite::monoid_coproduct,
                 GromovSuite::homomorphism, GromovSuite::sym_bounds, GromovSuite::gluing}) {
    if (text == to_string(s)) return s;
  }
  return std::nullopt;
}

namespace {

std::string format_structure(const VCategory& x) {
  const Quantale& q = x.quantale();
  std::string out = "[";
  for (std::size_t i = 0; i < x.size(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < x.size(); ++j) out += (j ? "," : "") + q.format(x(i, j));
    out += "]";
  }
  return out + "]";
}

std::string format_matrix(const Quantale& q, const Matrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    out += i ? ",[" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) out += (j ? "," : "") + q.format(m(i, j));
    out += "]";
  }
  return out + "]";
}

// Ordered index tuples over the corpus: all of them, or `samples` seeded draws.
std::vector<std::vector<std::size_t>> tuples(std::size_t n, std::size_t arity, std::size_t samples,
                                             std::mt19937_64& rng) {
  std::vector<std::vector<std::size_t>> out;
  if (n == 0) return out;
  if (samples == 0) {
    std::vector<std::size_t> t(arity, 0);
    while (true) {
      out.push_back(t);
      std::size_t i = arity;
      while (i > 0 && ++t[i - 1] == n) t[--i] = 0;
      if (i == 0) break;
    }
    return out;
  }
  std::uniform_int_distribution<std::size_t> d(0, n - 1);
  for (std::size_t s = 0; s < samples; ++s) {
    std::vector<std::size_t> t(arity);
    for (auto& v : t) v = d(rng);
    out.push_back(std::move(t));
  }
  return out;
}

// G values over a fixed corpus, memoized by index pair and query shape.
class DistanceTable {
 public:
  explicit DistanceTable(const std::vector<VCategory>& corpus) : corpus_(corpus) {}

  const Value& operator()(std::size_t i, std::size_t j, GromovVariant v, FunctorKind k,
                          Evaluation e = Evaluation::direct) {
    auto key = std::tuple{i, j, static_cast<int>(v), static_cast<int>(k), static_cast<int>(e)};
    auto it = memo_.find(key);
    if (it != memo_.end()) return it->second;
    GromovQuery query{corpus_[i], corpus_[j], v, k, GromovStrategy::enumerate, e};
    return memo_.emplace(key, gromov(query).value).first->second;
  }

 private:
  const std::vector<VCategory>& corpus_;
  std::map<std::tuple<std::size_t, std::size_t, int, int, int>, Value> memo_;
};

std::vector<std::pair<std::string, std::string>> pair_inputs(const VCategory& x, const VCategory& y) {
  return {{"X", format_structure(x)}, {"Y", format_structure(y)}};
}

void require_finite(const Quantale& q, const char* suite) {
  if (!q.is_finite()) {
    throw DomainError(std::string("the ") + suite + " suite enumerates modules and needs a finite quantale");
  }
}

// ---------------------------------------------------------------- enumeration-backed suites

void vcat_laws(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng,
               LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  DistanceTable g(corpus);
  for (auto k : {FunctorKind::H, FunctorKind::H_down, FunctorKind::H_sym}) {
    std::string tag = std::string("G") + to_string(k);
    auto applies = [&](std::size_t i) { return k != FunctorKind::H_sym || classify(corpus[i]).symmetric; };
    for (std::size_t i = 0; i < corpus.size(); ++i) {
      if (!applies(i)) continue;
      ++r.instances;
      const Value& v = g(i, i, GromovVariant::plain, k);
      if (!q.leq(q.unit(), v)) {
        r.fail({"k <= " + tag + "(X,X)", {{"X", format_structure(corpus[i])}}, "k", "not <=", q.format(v)});
      }
    }
    for (const auto& t : tuples(corpus.size(), 3, opt.sample_pairs, rng)) {
      if (!applies(t[0]) || !applies(t[1]) || !applies(t[2])) continue;
      ++r.instances;
      Value lhs = q.tensor(g(t[0], t[1], GromovVariant::plain, k), g(t[1], t[2], GromovVariant::plain, k));
      const Value& rhs = g(t[0], t[2], GromovVariant::plain, k);
      if (!q.leq(lhs, rhs)) {
        r.fail({tag + "(X,Y) (x) " + tag + "(Y,Z) <= " + tag + "(X,Z)",
                {{"X", format_structure(corpus[t[0]])}, {"Y", format_structure(corpus[t[1]])},
                 {"Z", format_structure(corpus[t[2]])}},
                q.format(lhs), "not <=", q.format(rhs)});
      }
    }
  }
}

void iso_invariance(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng,
                    LawReport& r) {
  DistanceTable g(corpus);
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    const VCategory& x = corpus[t[0]];
    const VCategory& y = corpus[t[1]];
    VCategory x2 = relabel(permute(x, random_permutation(x.size(), rng)), "u");
    VCategory y2 = relabel(permute(y, random_permutation(y.size(), rng)), "v");
    if (!find_isomorphism(x, x2) || !find_isomorphism(y, y2)) {
      r.fail({"permuted copy is isomorphic", pair_inputs(x, y), "permute", "did not give", "an isomorphic copy"});
      return;
    }
    for (auto k : {FunctorKind::H, FunctorKind::H_down}) {
      for (auto v : {GromovVariant::plain, GromovVariant::sym_pair}) {
        ++r.instances;
        const Value& a = g(t[0], t[1], v, k);
        Value b = gromov({x2, y2, v, k, GromovStrategy::enumerate, Evaluation::direct}).value;
        if (!(a == b)) {
          r.fail({std::string(to_string(v)) + " " + to_string(k) + " invariant under isomorphism",
                  pair_inputs(x, y), x.quantale().format(a), "!=", x.quantale().format(b)});
        }
      }
    }
  }
}

void monotone_in_k(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng,
                   LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  DistanceTable g(corpus);
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    ++r.instances;
    const Value& lo = g(t[0], t[1], GromovVariant::plain, FunctorKind::H_down, Evaluation::generic);
    const Value& hi = g(t[0], t[1], GromovVariant::plain, FunctorKind::H);
    if (!q.leq(lo, hi)) {
      r.fail({"G H_down <= G H", pair_inputs(corpus[t[0]], corpus[t[1]]), q.format(lo), "not <=", q.format(hi)});
    }
  }
}

void sym_lift_laws(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng,
                   LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  DistanceTable g(corpus);
  std::size_t generic_mismatches = 0;
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    ++r.instances;
    const Value& two_sided = g(t[0], t[1], GromovVariant::sym_pair, FunctorKind::H);
    Value via_gluing = gromov({corpus[t[0]], corpus[t[1]], GromovVariant::plain, FunctorKind::H_sym,
                               GromovStrategy::gluing}).value;
    if (!(two_sided == via_gluing)) {
      r.fail({"G^s H = G(H^s)", pair_inputs(corpus[t[0]], corpus[t[1]]), q.format(two_sided), "!=",
              q.format(via_gluing)});
    }
    // The generic lax extension of H^s is reported, not asserted: with phi
    // constant top it already reaches top whenever X is a singleton.
    const Value& generic = g(t[0], t[1], GromovVariant::plain, FunctorKind::H_sym, Evaluation::generic);
    if (!(generic == two_sided)) {
      ++generic_mismatches;
      if (generic_mismatches == 1) {
        r.notes.push_back("generic extension of H_sym differs: " + q.format(generic) + " vs " +
                          q.format(two_sided) + " at X=" + format_structure(corpus[t[0]]) +
                          ", Y=" + format_structure(corpus[t[1]]));
      }
    }
  }
  if (generic_mismatches > 0) {
    r.flags["generic_h_sym_differs"] = true;
    r.notes.push_back(std::to_string(generic_mismatches) + " pairs where the generic extension of H_sym differs");
  }
}

void separated_laws(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng,
                    LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  DistanceTable g(corpus);
  std::size_t separated = 0;
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    if (!classify(corpus[t[0]]).separated || !classify(corpus[t[1]]).separated) continue;
    ++separated;
    ++r.instances;
    const Value& h = g(t[0], t[1], GromovVariant::plain, FunctorKind::H);
    const Value& hd = g(t[0], t[1], GromovVariant::plain, FunctorKind::H_down, Evaluation::generic);
    if (!(h == hd)) {
      r.fail({"GH = G H_down on separated pairs", pair_inputs(corpus[t[0]], corpus[t[1]]), q.format(h), "!=",
              q.format(hd)});
    }
  }
  r.notes.push_back(std::to_string(separated) + " separated pairs checked");
}

void chaos(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng, LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  DistanceTable g(corpus);
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    const VCategory& x = corpus[t[0]];
    const VCategory& y = corpus[t[1]];
    ++r.instances;
    const Value& v = g(t[0], t[1], GromovVariant::plain, FunctorKind::H);
    Value shortcut = htilde(top_module(x, y), Subset::all(x.size()), Subset::all(y.size()));
    if (!(v == shortcut)) {
      r.fail({"GH = H~(top)(X,Y)", pair_inputs(x, y), q.format(v), "!=", q.format(shortcut)});
    }
    if (x.size() > 0 && y.size() > 0 && !(v == q.top())) {
      r.fail({"GH = top on nonempty pairs", pair_inputs(x, y), q.format(v), "!=", q.format(q.top())});
    }
  }
}

void sym_bounds(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng,
                LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  DistanceTable g(corpus);
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    const VCategory& x = corpus[t[0]];
    const VCategory& y = corpus[t[1]];
    ++r.instances;
    const Value& fwd = g(t[0], t[1], GromovVariant::sym_pair, FunctorKind::H);
    const Value& bwd = g(t[1], t[0], GromovVariant::sym_pair, FunctorKind::H);
    if (!(fwd == bwd)) {
      r.fail({"G^s H symmetric", pair_inputs(x, y), q.format(fwd), "!=", q.format(bwd)});
    }
    if (classify(x).symmetric && classify(y).symmetric) {
      const Value& mod = g(t[0], t[1], GromovVariant::sym_mod, FunctorKind::H);
      if (!q.leq(fwd, mod)) {
        r.fail({"G^s H <= G_s H on symmetric pairs", pair_inputs(x, y), q.format(fwd), "not <=", q.format(mod)});
      }
    }
  }
}

// Gluing equals enumeration and every witness replays to its value.
void gluing(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng, LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    const VCategory& x = corpus[t[0]];
    const VCategory& y = corpus[t[1]];
    bool symmetric = classify(x).symmetric && classify(y).symmetric;
    for (auto k : {FunctorKind::H, FunctorKind::H_down}) {
      for (auto v : {GromovVariant::plain, GromovVariant::sym_pair, GromovVariant::sym_mod}) {
        if (v == GromovVariant::sym_mod && !symmetric) continue;
        ++r.instances;
        std::string what = std::string(to_string(v)) + " " + to_string(k);
        GromovResult e = gromov({x, y, v, k, GromovStrategy::enumerate, Evaluation::direct});
        GromovResult gl = gromov({x, y, v, k, GromovStrategy::gluing, Evaluation::direct});
        if (!(e.value == gl.value)) {
          r.fail({what + ": gluing = enumerate", pair_inputs(x, y), q.format(gl.value), "!=", q.format(e.value)});
        }
        if (!e.witness) {
          r.fail({what + ": witness present", pair_inputs(x, y), "no witness", "for", q.format(e.value)});
          continue;
        }
        if (!is_module(x, y, e.witness->matrix())) {
          r.fail({what + ": witness is a module", pair_inputs(x, y), format_matrix(q, e.witness->matrix()), "fails",
                  "the module laws"});
        }
        Value replay = objective(*e.witness, k, Evaluation::direct);
        if (v != GromovVariant::plain) {
          if (!e.witness_back || !is_pair(*e.witness, *e.witness_back)) {
            r.fail({what + ": witness is a pair", pair_inputs(x, y), format_matrix(q, e.witness->matrix()), "fails",
                    "the pair bounds"});
            continue;
          }
          if (v == GromovVariant::sym_pair) replay = q.meet(replay, objective(*e.witness_back, k, Evaluation::direct));
        }
        if (!(replay == e.value)) {
          r.fail({what + ": witness replays", pair_inputs(x, y), q.format(replay), "!=", q.format(e.value)});
        }
      }
    }
  }
}

// ---------------------------------------------------------------- monoid and homomorphism

// The combined module and category for one monoid operation.
struct MonoidOp {
  CombineMode mode;
  const char* name;
};

// Subsets of a combined carrier built from A in X and B in Y.
Subset combined_subset(CombineMode mode, std::size_t nx, std::size_t ny, Subset a, Subset b) {
  Subset out;
  if (mode == CombineMode::coproduct) return Subset{a.bits | (b.bits << nx)};
  for (auto i : a.members())
    for (auto j : b.members()) out = out.with(i * ny + j);
  return out;
}

std::vector<std::pair<Subset, Subset>> subset_pairs(std::size_t nx, std::size_t ny, std::size_t samples,
                                                    std::mt19937_64& rng) {
  std::vector<std::pair<Subset, Subset>> out;
  const std::uint64_t cx = std::uint64_t{1} << nx, cy = std::uint64_t{1} << ny;
  if (samples == 0 || cx * cy <= samples) {
    for (std::uint64_t a = 0; a < cx; ++a)
      for (std::uint64_t b = 0; b < cy; ++b) out.push_back({Subset{a}, Subset{b}});
    return out;
  }
  out.push_back({Subset::all(nx), Subset::all(ny)});
  for (std::size_t s = 0; s < samples; ++s) out.push_back({random_subset(nx, rng), random_subset(ny, rng)});
  return out;
}

std::vector<VModule> sample_modules(const VCategory& x, const VCategory& y, std::size_t count, std::mt19937_64& rng) {
  std::vector<VModule> out{top_module(x, y), bottom_module(x, y)};
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_module(x, y, rng));
  return out;
}

// H~phi(A, A') (x) H~psi(B, B') <= H~(phi op psi)(A op B, A' op B') on modules,
// and the same at the level of GH via the greatest module.
void monoid_op(const std::vector<VCategory>& corpus, MonoidOp op, const GromovLawOptions& opt, std::mt19937_64& rng,
               LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  if (op.mode != CombineMode::tensor && !q.unit_is_top()) {
    r.skip(std::string("the ") + op.name + " inequality needs k = top, which fails in " + q.name());
    return;
  }
  const std::size_t n = corpus.size();
  const std::size_t samples = opt.sample_pairs != 0 ? opt.sample_pairs : (n * n * n * n <= 4096 ? 0 : 200);
  for (const auto& t : tuples(n, 4, samples, rng)) {
    const VCategory& x = corpus[t[0]];
    const VCategory& x2 = corpus[t[1]];
    const VCategory& y = corpus[t[2]];
    const VCategory& y2 = corpus[t[3]];
    VCategory xy = combine(x, y, op.mode);
    VCategory xy2 = combine(x2, y2, op.mode);
    auto inputs = [&](const std::vector<std::pair<std::string, std::string>>& extra) {
      std::vector<std::pair<std::string, std::string>> in{{"X", format_structure(x)}, {"X'", format_structure(x2)},
                                                          {"Y", format_structure(y)}, {"Y'", format_structure(y2)}};
      in.insert(in.end(), extra.begin(), extra.end());
      return in;
    };
    // GH level through the greatest module.
    ++r.instances;
    Value g1 = htilde(top_module(x, x2), Subset::all(x.size()), Subset::all(x2.size()));
    Value g2 = htilde(top_module(y, y2), Subset::all(y.size()), Subset::all(y2.size()));
    Value g12 = htilde(top_module(xy, xy2), Subset::all(xy.size()), Subset::all(xy2.size()));
    if (!q.leq(q.tensor(g1, g2), g12)) {
      r.fail({std::string("GH(X,X') (x) GH(Y,Y') <= GH(X ") + op.name + " Y, X' " + op.name + " Y')", inputs({}),
              q.format(q.tensor(g1, g2)), "not <=", q.format(g12)});
      return;
    }
    auto phis = sample_modules(x, x2, opt.cost_modules, rng);
    auto psis = sample_modules(y, y2, opt.cost_modules, rng);
    for (std::size_t m = 0; m < phis.size(); ++m) {
      const VModule& phi = phis[m];
      const VModule& psi = psis[m % psis.size()];
      VModule both = combine_modules(phi, psi, op.mode);
      auto domain = subset_pairs(x.size(), y.size(), opt.subset_samples, rng);
      auto codomain = subset_pairs(x2.size(), y2.size(), opt.subset_samples, rng);
      for (std::size_t s = 0; s < domain.size(); ++s) {
        for (std::size_t u = 0; u < codomain.size(); u += std::max<std::size_t>(1, codomain.size() / 16)) {
          ++r.instances;
          auto [a, b] = domain[s];
          auto [a2, b2] = codomain[(u + s) % codomain.size()];
          Value lhs = q.tensor(htilde(phi, a, a2), htilde(psi, b, b2));
          Value rhs = htilde(both, combined_subset(op.mode, x.size(), y.size(), a, b),
                             combined_subset(op.mode, x2.size(), y2.size(), a2, b2));
          if (!q.leq(lhs, rhs)) {
            r.fail({std::string("H~phi (x) H~psi <= H~(phi ") + op.name + " psi)",
                    inputs({{"phi", format_matrix(q, phi.matrix())}, {"psi", format_matrix(q, psi.matrix())},
                            {"A", format_subset(x.carrier(), a)}, {"A'", format_subset(x2.carrier(), a2)},
                            {"B", format_subset(y.carrier(), b)}, {"B'", format_subset(y2.carrier(), b2)}}),
                    q.format(lhs), "not <=", q.format(rhs)});
            return;
          }
        }
      }
    }
  }
}

// Over a quantale with k < top, searches singleton instances for violations of
// the tensor form of the inequality for `mode`, and of its meet form, and
// records what was found in the report notes.
void log_unit_not_top_search(const Quantale& q, CombineMode mode, LawReport& r) {
  if (!q.is_finite()) return;
  std::vector<VCategory> singles;
  for (const auto& v : q.elements()) {
    if (q.leq(q.unit(), v)) singles.push_back(VCategory::trusted(default_carrier(1), q, Matrix(1, 1, v)));
  }
  std::size_t tensor_hits = 0, meet_hits = 0, searched = 0;
  std::string first;
  const Subset one = Subset::all(1);
  for (const auto& x : singles) {
    for (const auto& x2 : singles) {
      for (const auto& y : singles) {
        for (const auto& y2 : singles) {
          for (const auto& phi : enumerate_modules(x, x2)) {
            for (const auto& psi : enumerate_modules(y, y2)) {
              {
                ++searched;
                VModule both = combine_modules(phi, psi, mode);
                Value u = htilde(phi, one, one), v = htilde(psi, one, one);
                Value w = htilde(both, Subset::all(both.source().size()), Subset::all(both.target().size()));
                if (!q.leq(q.tensor(u, v), w)) {
                  if (tensor_hits++ == 0) {
                    first = "a(X)=" + q.format(x(0, 0)) + " a(X')=" + q.format(x2(0, 0)) + " b(Y)=" +
                            q.format(y(0, 0)) + " b(Y')=" + q.format(y2(0, 0)) + " phi=" + q.format(phi(0, 0)) +
                            " psi=" + q.format(psi(0, 0)) + ": " + q.format(q.tensor(u, v)) + " not <= " +
                            q.format(w);
                  }
                }
                if (!q.leq(q.meet(u, v), w)) ++meet_hits;
              }
            }
          }
        }
      }
    }
  }
  r.notes.push_back(std::string("k < top search over singletons (") +
                    (mode == CombineMode::product ? "product" : "coproduct") + "): " + std::to_string(searched) + " instances, " +
                    std::to_string(tensor_hits) + " violate the tensor form" +
                    (first.empty() ? "" : " (first: " + first + ")") + ", " + std::to_string(meet_hits) +
                    " violate the meet form");
  r.flags["tensor_form_counterexample"] = tensor_hits > 0;
  r.flags["meet_form_counterexample"] = meet_hits > 0;
}

void homomorphism(const std::vector<VCategory>& corpus, const GromovLawOptions& opt, std::mt19937_64& rng,
                  LawReport& r) {
  const Quantale& q = corpus.front().quantale();
  // H of the empty category is terminal: one element with structure top.
  HausdorffCategory h0(VCategory(q), HausdorffVariant::plain);
  ++r.instances;
  if (h0.size() != 1 || !(h0.structure(0, 0) == q.top())) {
    r.fail({"H(empty) is terminal", {}, std::to_string(h0.size()) + " elements", "expected", "one with structure top"});
  }
  for (const auto& t : tuples(corpus.size(), 2, opt.sample_pairs, rng)) {
    const VCategory& x = corpus[t[0]];
    const VCategory& y = corpus[t[1]];
    VCategory s = combine(x, y, CombineMode::coproduct);
    const std::uint64_t cx = std::uint64_t{1} << x.size(), cy = std::uint64_t{1} << y.size();
    for (std::uint64_t a = 0; a < cx; ++a) {
      for (std::uint64_t b = 0; b < cy; ++b) {
        Subset ab = combined_subset(CombineMode::coproduct, x.size(), y.size(), Subset{a}, Subset{b});
        for (std::uint64_t a2 = 0; a2 < cx; ++a2) {
          for (std::uint64_t b2 = 0; b2 < cy; ++b2) {
            ++r.instances;
            Subset ab2 = combined_subset(CombineMode::coproduct, x.size(), y.size(), Subset{a2}, Subset{b2});
            Value lhs = hausdorff_value(s, ab, ab2);
            Value rhs = q.meet(hausdorff_value(x, Subset{a}, Subset{a2}), hausdorff_value(y, Subset{b}, Subset{b2}));
            if (!(lhs == rhs)) {
              r.fail({"h(A+B, A'+B') = h(A,A') meet h(B,B')",
                      {{"X", format_structure(x)}, {"Y", format_structure(y)},
                       {"A", format_subset(x.carrier(), Subset{a})}, {"B", format_subset(y.carrier(), Subset{b})},
                       {"A'", format_subset(x.carrier(), Subset{a2})}, {"B'", format_subset(y.carrier(), Subset{b2})}},
                      q.format(lhs), "!=", q.format(rhs)});
              return;
            }
          }
        }
      }
    }
  }
}

}  // namespace

LawReport check_gromov_laws(const std::vector<VCategory>& corpus, GromovSuite suite, const GromovLawOptions& options) {
  auto start = std::chrono::steady_clock::now();
  LawReport r;
  r.suite = std::string("gromov.") + to_string(suite);
  std::mt19937_64 rng(options.seed);
  if (corpus.empty()) {
    r.skip("empty corpus");
    return r;
  }
  for (const auto& c : corpus) require_same_quantale(corpus.front().quantale(), c.quantale(), "check_gromov_laws");
  const Quantale& q = corpus.front().quantale();
  auto finite = [&](const char* name) { require_finite(q, name); };
  switch (suite) {
    case GromovSuite::vcat_laws: finite("vcat_laws"); vcat_laws(corpus, options, rng, r); break;
    case GromovSuite::iso_invariance: finite("iso_invariance"); iso_invariance(corpus, options, rng, r); break;
    case GromovSuite::monotone_in_K: finite("monotone_in_K"); monotone_in_k(corpus, options, rng, r); break;
    case GromovSuite::sym_lift: finite("sym_lift"); sym_lift_laws(corpus, options, rng, r); break;
    case GromovSuite::separated: finite("separated"); separated_laws(corpus, options, rng, r); break;
    case GromovSuite::chaos: finite("chaos"); chaos(corpus, options, rng, r); break;
    case GromovSuite::sym_bounds: finite("sym_bounds"); sym_bounds(corpus, options, rng, r); break;
    case GromovSuite::gluing: finite("gluing"); gluing(corpus, options, rng, r); break;
    case GromovSuite::monoid_tensor: monoid_op(corpus, {CombineMode::tensor, "(x)"}, options, rng, r); break;
    case GromovSuite::monoid_product:
      monoid_op(corpus, {CombineMode::product, "x"}, options, rng, r);
      if (!q.unit_is_top()) log_unit_not_top_search(q, CombineMode::product, r);
      break;
    case GromovSuite::monoid_coproduct:
      monoid_op(corpus, {CombineMode::coproduct, "+"}, options, rng, r);
      if (!q.unit_is_top()) log_unit_not_top_search(q, CombineMode::coproduct, r);
      break;
    case GromovSuite::monoid: {
      for (auto sub : {GromovSuite::monoid_tensor, GromovSuite::monoid_product, GromovSuite::monoid_coproduct}) {
        LawReport part = check_gromov_laws(corpus, sub, options);
        r.absorb(part);
        if (part.status == LawStatus::skipped) {
          r.notes.push_back(std::string(to_string(sub)) + " skipped: " + part.skip_reason);
          r.flags[std::string(to_string(sub)) + "_skipped"] = true;
        }
        for (const auto& [k, v] : part.flags) r.flags[k] = r.flags[k] || v;
      }
      break;
    }
    case GromovSuite::homomorphism: homomorphism(corpus, options, rng, r); break;
  }
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace vqcat
