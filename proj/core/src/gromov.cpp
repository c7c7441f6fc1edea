#include "vqcat/gromov.hpp"

#include <cstdint>

#include "vqcat/exact_lp.hpp"
#include "vqcat/hausdorff.hpp"

namespace vqcat {

// ---------------------------------------------------------------- enumeration

void for_each_module(const VCategory& x, const VCategory& y,
                     const std::function<bool(const VModule&)>& visit, const Caps& caps) {
  require_same_quantale(x.quantale(), y.quantale(), "for_each_module");
  const Quantale& q = x.quantale();
  if (!q.is_finite()) throw DomainError("module enumeration needs a finite quantale, not " + q.name());
  const std::size_t nx = x.size(), ny = y.size(), cells = nx * ny;
  require_within("enumeration", caps.enumeration, saturating_pow(q.size(), cells));
  if (cells == 0) {
    visit(VModule::trusted(x, y, Matrix(nx, ny, q.bottom())));
    return;
  }
  auto elems = q.elements();
  Matrix m(nx, ny, q.bottom());
  // Checks the module laws between `cell` and every assigned cell sharing
  // its row or column, including the cell itself.
  auto consistent = [&](std::size_t cell) {
    std::size_t i = cell / ny, j = cell % ny;
    for (std::size_t i2 = 0; i2 < nx; ++i2) {
      if (i2 * ny + j > cell) continue;
      if (!q.leq(q.tensor(x(i2, i), m(i, j)), m(i2, j))) return false;
      if (!q.leq(q.tensor(x(i, i2), m(i2, j)), m(i, j))) return false;
    }
    for (std::size_t j2 = 0; j2 < ny; ++j2) {
      if (i * ny + j2 > cell) continue;
      if (!q.leq(q.tensor(m(i, j), y(j, j2)), m(i, j2))) return false;
      if (!q.leq(q.tensor(m(i, j2), y(j2, j)), m(i, j))) return false;
    }
    return true;
  };
  std::vector<std::size_t> idx(cells, 0);
  std::size_t pos = 0;
  while (true) {
    if (idx[pos] == elems.size()) {
      if (pos == 0) break;
      idx[pos] = 0;
      --pos;
      ++idx[pos];
      continue;
    }
    m(pos / ny, pos % ny) = elems[idx[pos]];
    if (!consistent(pos)) {
      ++idx[pos];
      continue;
    }
    if (pos + 1 == cells) {
      if (!visit(VModule::trusted(x, y, m))) return;
      ++idx[pos];
      continue;
    }
    ++pos;
    idx[pos] = 0;
  }
}

std::vector<VModule> enumerate_modules(const VCategory& x, const VCategory& y, const Caps& caps) {
  std::vector<VModule> out;
  for_each_module(x, y, [&](const VModule& phi) {
    out.push_back(phi);
    return true;
  }, caps);
  return out;
}

namespace {

Matrix transposed(const Matrix& m) {
  Matrix out(m.cols(), m.rows(), Value{});
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(j, i) = m(i, j);
  return out;
}

void require_symmetric(const VCategory& x, const VCategory& y, const char* what) {
  if (!classify(x).symmetric || !classify(y).symmetric) {
    throw DomainError(std::string(what) + " needs symmetric categories");
  }
}

}  // namespace

std::vector<std::pair<VModule, VModule>> enumerate_pairs(const VCategory& x, const VCategory& y,
                                                         bool symmetric_only, const Caps& caps) {
  std::vector<std::pair<VModule, VModule>> out;
  if (symmetric_only) {
    require_symmetric(x, y, "enumerate_pairs(symmetric_only)");
    for_each_module(x, y, [&](const VModule& phi) {
      VModule back = VModule::trusted(y, x, transposed(phi.matrix()));
      if (is_pair(phi, back)) out.emplace_back(phi, std::move(back));
      return true;
    }, caps);
    return out;
  }
  require_within("enumeration", caps.enumeration,
                 saturating_pow(x.quantale().size(), 2 * x.size() * y.size()));
  auto backs = enumerate_modules(y, x, caps);
  for_each_module(x, y, [&](const VModule& phi) {
    for (const auto& back : backs)
      if (is_pair(phi, back)) out.emplace_back(phi, back);
    return true;
  }, caps);
  return out;
}

// ---------------------------------------------------------------- names

const char* to_string(GromovVariant v) {
  switch (v) {
    case GromovVariant::plain: return "plain";
    case GromovVariant::sym_pair: return "sym-pair";
    case GromovVariant::sym_mod: return "sym-mod";
  }
  return "?";
}

const char* to_string(GromovStrategy s) {
  switch (s) {
    case GromovStrategy::enumerate: return "enumerate";
    case GromovStrategy::optimize: return "optimize";
    case GromovStrategy::gluing: return "gluing";
  }
  return "?";
}

GromovVariant parse_gromov_variant(const std::string& text) {
  if (text == "plain") return GromovVariant::plain;
  if (text == "sym-pair" || text == "sym_pair") return GromovVariant::sym_pair;
  if (text == "sym-mod" || text == "sym_mod") return GromovVariant::sym_mod;
  throw DomainError("unknown Gromov variant '" + text + "' (plain, sym-pair, sym-mod)");
}

GromovStrategy parse_gromov_strategy(const std::string& text) {
  if (text == "enumerate") return GromovStrategy::enumerate;
  if (text == "optimize") return GromovStrategy::optimize;
  if (text == "gluing") return GromovStrategy::gluing;
  throw DomainError("unknown strategy '" + text + "' (enumerate, optimize, gluing)");
}

// ---------------------------------------------------------------- objective

namespace {

// K~phi(X, Y) for modules out of one fixed X.
class Objective {
 public:
  Objective(const VCategory& x, const VCategory& y, FunctorKind k, Evaluation evaluation)
      : k_(k), evaluation_(k == FunctorKind::H_sym ? Evaluation::generic : evaluation) {
    if (evaluation_ == Evaluation::direct) {
      if (k_ != FunctorKind::H && k_ != FunctorKind::H_down) {
        throw DomainError(std::string("no direct formula for ") + to_string(k_));
      }
      return;
    }
    if (!x.quantale().is_finite()) {
      throw DomainError(std::string("the generic extension of ") + to_string(k_) + " needs a finite quantale");
    }
    FunctorObject K(k_);
    ext_.emplace(K, x);
    auto ix = K.index_of_subset(x, Subset::all(x.size()));
    auto iy = K.index_of_subset(y, Subset::all(y.size()));
    if (!ix || !iy) throw DomainError("the whole carrier is not an element of K applied to it");
    ix_ = *ix;
    iy_ = *iy;
  }

  Value operator()(const VModule& phi) const {
    if (!ext_) {
      return htilde(phi, Subset::all(phi.source().size()), Subset::all(phi.target().size()));
    }
    return ext_->extend_at(phi, ix_, iy_);
  }

 private:
  FunctorKind k_;
  Evaluation evaluation_;
  std::optional<FunctorExtension> ext_;
  std::size_t ix_ = 0, iy_ = 0;
};

}  // namespace

Value objective(const VModule& phi, FunctorKind k, Evaluation evaluation) {
  return Objective(phi.source(), phi.target(), k, evaluation)(phi);
}

// ---------------------------------------------------------------- strategies

namespace {

GromovResult enumerate_strategy(const GromovQuery& qy, const Caps& caps) {
  const Quantale& q = qy.x.quantale();
  Objective fwd(qy.x, qy.y, qy.k, qy.evaluation);
  GromovResult res;
  res.value = q.bottom();
  bool have = false;
  auto consider = [&](const Value& v, const VModule& phi, const std::optional<VModule>& back) {
    if (!have || q.less(res.value, v)) {
      res.value = v;
      res.witness = phi;
      res.witness_back = back;
      have = true;
    }
    return !(res.value == q.top());
  };
  switch (qy.variant) {
    case GromovVariant::plain:
      for_each_module(qy.x, qy.y, [&](const VModule& phi) {
        ++res.candidates;
        return consider(fwd(phi), phi, std::nullopt);
      }, caps);
      break;
    case GromovVariant::sym_mod:
      for_each_module(qy.x, qy.y, [&](const VModule& phi) {
        ++res.candidates;
        VModule back = VModule::trusted(qy.y, qy.x, transposed(phi.matrix()));
        if (!is_pair(phi, back)) return true;
        return consider(fwd(phi), phi, back);
      }, caps);
      break;
    case GromovVariant::sym_pair: {
      require_within("enumeration", caps.enumeration, saturating_pow(q.size(), 2 * qy.x.size() * qy.y.size()));
      Objective bwd(qy.y, qy.x, qy.k, qy.evaluation);
      auto backs = enumerate_modules(qy.y, qy.x, caps);
      std::vector<Value> back_values;
      for (const auto& b : backs) back_values.push_back(bwd(b));
      for_each_module(qy.x, qy.y, [&](const VModule& phi) {
        Value v = fwd(phi);
        for (std::size_t i = 0; i < backs.size(); ++i) {
          ++res.candidates;
          Value w = q.meet(v, back_values[i]);
          if (have && !q.less(res.value, w)) continue;
          if (!is_pair(phi, backs[i])) continue;
          if (!consider(w, phi, backs[i])) return false;
        }
        return true;
      }, caps);
      break;
    }
  }
  return res;
}

GromovResult gluing_strategy(const GromovQuery& qy, const Caps& caps) {
  const Quantale& q = qy.x.quantale();
  if (qy.k == FunctorKind::H_sym) {
    // H^s is no 2-functor, so every gluing of X and Y is visited, not only
    // those generated by one module.
    if (qy.variant != GromovVariant::plain) {
      throw DomainError("the gluing strategy supports H_sym only for the plain variant");
    }
    GromovResult res;
    res.value = q.bottom();
    bool have = false;
    Subset sx = Subset::all(qy.x.size());
    Subset sy{Subset::all(qy.y.size()).bits << qy.x.size()};
    for (auto& [phi, back] : enumerate_pairs(qy.x, qy.y, false, caps)) {
      ++res.candidates;
      VCategory z = glue(phi, back);
      Value v = q.meet(hausdorff_value(z, sx, sy), hausdorff_value(z, sy, sx));
      if (!have || q.less(res.value, v)) {
        res.value = v;
        res.witness = phi;
        res.witness_back = back;
        res.glued = std::move(z);
        have = true;
      }
      if (res.value == q.top()) break;
    }
    return res;
  }
  if (qy.k != FunctorKind::H && qy.k != FunctorKind::H_down) {
    throw DomainError("the gluing strategy needs a 2-functor preserving full fidelity (H, H_down or H_sym)");
  }
  const HausdorffVariant variant = qy.k == FunctorKind::H ? HausdorffVariant::plain : HausdorffVariant::down;
  const std::size_t nx = qy.x.size(), ny = qy.y.size();
  GromovResult res;
  res.value = q.bottom();
  bool have = false;
  // 1_{KZ}^*(K i_X(X), K i_Y(Y)) and the reverse entry.
  auto entries = [&](const VCategory& z) {
    Subset sx = Subset::all(nx);
    Subset sy{Subset::all(ny).bits << nx};
    if (variant == HausdorffVariant::down) {
      sx = down_closure(z, sx, ClosureMode::big);
      sy = down_closure(z, sy, ClosureMode::big);
    }
    return std::pair{hausdorff_value(z, sx, sy), hausdorff_value(z, sy, sx)};
  };
  auto consider = [&](const Value& v, const VModule& phi, const std::optional<VModule>& back, VCategory z) {
    if (!have || q.less(res.value, v)) {
      res.value = v;
      res.witness = phi;
      res.witness_back = back;
      res.glued = std::move(z);
      have = true;
    }
    return !(res.value == q.top());
  };
  switch (qy.variant) {
    case GromovVariant::plain:
      for_each_module(qy.x, qy.y, [&](const VModule& phi) {
        ++res.candidates;
        VCategory z = glue(phi);
        Value v = entries(z).first;
        return consider(v, phi, std::nullopt, std::move(z));
      }, caps);
      break;
    case GromovVariant::sym_mod:
    case GromovVariant::sym_pair: {
      bool sym = qy.variant == GromovVariant::sym_mod;
      for (auto& [phi, back] : enumerate_pairs(qy.x, qy.y, sym, caps)) {
        ++res.candidates;
        VCategory z = glue(phi, back);
        auto [xy, yx] = entries(z);
        Value v = sym ? xy : q.meet(xy, yx);
        if (!consider(v, phi, back, std::move(z))) break;
      }
      break;
    }
  }
  return res;
}

}  // namespace

GromovResult gromov(const GromovQuery& query, const Caps& caps) {
  require_same_quantale(query.x.quantale(), query.y.quantale(), "gromov");
  if (query.variant == GromovVariant::sym_mod) require_symmetric(query.x, query.y, "sym-mod");
  const Quantale& q = query.x.quantale();
  switch (query.strategy) {
    case GromovStrategy::enumerate:
      if (!q.is_finite()) {
        throw DomainError("enumeration needs a finite quantale; use the optimize strategy over cost");
      }
      return enumerate_strategy(query, caps);
    case GromovStrategy::gluing:
      if (!q.is_finite()) throw DomainError("the gluing strategy enumerates modules and needs a finite quantale");
      return gluing_strategy(query, caps);
    case GromovStrategy::optimize:
      if (!q.is_cost()) throw DomainError("the optimize strategy works over the cost quantale only");
      if (query.k != FunctorKind::H && query.k != FunctorKind::H_down) {
        throw DomainError("the optimize strategy evaluates the direct formula (H or H_down)");
      }
      return optimize_cost_pair(query.x, query.y, query.variant, caps);
  }
  throw DomainError("unknown strategy");
}

Value symmetrized_distance(const VCategory& x, const VCategory& y, GromovVariant base, FunctorKind k,
                           GromovStrategy strategy, const Caps& caps) {
  if (base == GromovVariant::sym_pair) {
    throw DomainError("symmetrized_distance takes base plain or sym-mod");
  }
  GromovQuery fwd{x, y, base, k, strategy, Evaluation::direct};
  GromovQuery bwd{y, x, base, k, strategy, Evaluation::direct};
  return x.quantale().meet(gromov(fwd, caps).value, gromov(bwd, caps).value);
}

// ---------------------------------------------------------------- optimizer

namespace {

void require_finite_costs(const VCategory& c) {
  for (const auto& v : c.structure().cells()) {
    if (v.is_infinite()) throw DomainError("optimize_cost_pair: infinite distances are not supported");
  }
}

// Odometer over maps {0..n-1} -> {0..m-1}; false once exhausted.
bool next_map(std::vector<std::size_t>& f, std::size_t m) {
  std::size_t i = 0;
  while (i < f.size() && ++f[i] == m) f[i++] = 0;
  return i < f.size();
}

}  // namespace

GromovResult optimize_cost_pair(const VCategory& x, const VCategory& y, GromovVariant variant, const Caps& caps) {
  require_same_quantale(x.quantale(), y.quantale(), "optimize_cost_pair");
  const Quantale& q = x.quantale();
  if (!q.is_cost()) throw DomainError("optimize_cost_pair works over the cost quantale only");
  require_finite_costs(x);
  require_finite_costs(y);
  const std::size_t nx = x.size(), ny = y.size();
  require_within("optimize_carrier", 6, std::max(nx, ny));
  const bool pair = variant == GromovVariant::sym_pair;
  const bool sym = variant == GromovVariant::sym_mod;
  if (sym) require_symmetric(x, y, "sym-mod");
  std::size_t maps = saturating_pow(ny, nx);
  if (pair) {
    std::size_t back_maps = saturating_pow(nx, ny);
    maps = back_maps != 0 && maps > SIZE_MAX / back_maps ? SIZE_MAX : maps * back_maps;
  }
  require_within("enumeration", caps.enumeration, maps);

  auto amt = [](const Value& v) { return v.amount(); };
  const std::size_t nphi = nx * ny;
  const std::size_t nvars = nphi * (pair ? 2 : 1) + 1;
  const std::size_t t = nvars - 1;
  auto phi = [&](std::size_t i, std::size_t j) { return i * ny + j; };
  auto back = [&](std::size_t j, std::size_t i) { return pair ? nphi + j * nx + i : phi(i, j); };

  // Constraints shared by every Skolem map.
  LinearProgram base;
  base.c.assign(nvars, Rational(0));
  base.c[t] = 1;
  auto row = [&]() { return std::vector<Rational>(nvars, Rational(0)); };
  auto diff_row = [&](std::size_t plus, std::size_t minus, const Rational& bound) {
    auto r = row();
    r[plus] += 1;
    r[minus] -= 1;
    base.add_row(std::move(r), -bound);
  };
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t i2 = 0; i2 < nx; ++i2)
      for (std::size_t j = 0; j < ny; ++j)
        if (i != i2) diff_row(phi(i, j), phi(i2, j), amt(x(i2, i)));  // left action
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t j2 = 0; j2 < ny; ++j2)
        if (j != j2) diff_row(phi(i, j), phi(i, j2), amt(y(j, j2)));  // right action
  if (pair) {
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t j2 = 0; j2 < ny; ++j2)
        for (std::size_t i = 0; i < nx; ++i)
          if (j != j2) diff_row(back(j, i), back(j2, i), amt(y(j2, j)));
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t i = 0; i < nx; ++i)
        for (std::size_t i2 = 0; i2 < nx; ++i2)
          if (i != i2) diff_row(back(j, i), back(j, i2), amt(x(i, i2)));
  }
  if (pair || sym) {
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t i2 = 0; i2 < nx; ++i2) {
        if (sgn(amt(x(i, i2))) == 0) continue;
        for (std::size_t j = 0; j < ny; ++j) {  // phi(x,y) + phi'(y,x') >= a(x,x')
          auto r = row();
          r[phi(i, j)] += 1;
          r[back(j, i2)] += 1;
          base.add_row(std::move(r), amt(x(i, i2)));
        }
      }
    for (std::size_t j = 0; j < ny; ++j)
      for (std::size_t j2 = 0; j2 < ny; ++j2) {
        if (sgn(amt(y(j, j2))) == 0) continue;
        for (std::size_t i = 0; i < nx; ++i) {  // phi'(y,x) + phi(x,y') >= b(y,y')
          auto r = row();
          r[back(j, i)] += 1;
          r[phi(i, j2)] += 1;
          base.add_row(std::move(r), amt(y(j, j2)));
        }
      }
  }

  GromovResult res;
  res.value = q.bottom();
  std::optional<LpSolution> best;
  std::vector<std::size_t> sigma(nx, 0), tau(pair ? ny : 0, 0);
  bool sigma_ok = nx == 0 || ny > 0;
  bool tau_ok = !pair || ny == 0 || nx > 0;
  if (sigma_ok && tau_ok) {
    do {
      do {
        LinearProgram lp = base;
        for (std::size_t i = 0; i < nx; ++i) {
          auto r = row();
          r[t] += 1;
          r[phi(i, sigma[i])] -= 1;
          lp.add_row(std::move(r), 0);
        }
        for (std::size_t j = 0; j < tau.size(); ++j) {
          auto r = row();
          r[t] += 1;
          r[back(j, tau[j])] -= 1;
          lp.add_row(std::move(r), 0);
        }
        ++res.candidates;
        LpSolution sol = solve_lp(lp);
        if (sol.status == LpSolution::Status::optimal && (!best || sol.value < best->value)) best = std::move(sol);
      } while (pair && next_map(tau, nx));
    } while (next_map(sigma, ny));
  }

  // Without any Skolem map some carrier is empty and the join is empty.
  Matrix fwd(nx, ny, best ? q.top() : q.bottom());
  Matrix bwd(ny, nx, best ? q.top() : q.bottom());
  if (best) {
    res.value = q.cost_value(best->value);
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < ny; ++j) {
        fwd(i, j) = q.cost_value(best->x[phi(i, j)]);
        bwd(j, i) = q.cost_value(best->x[back(j, i)]);
      }
  }
  res.witness = make_vmodule(x, y, std::move(fwd));
  if (pair || sym) {
    res.witness_back = make_vmodule(y, x, std::move(bwd));
    LawReport ok = check_pair(*res.witness, *res.witness_back);
    if (ok.failed()) throw LawViolation(*ok.counterexample);
  }
  // Re-evaluate the objective on the witness.
  Value check = htilde(*res.witness, Subset::all(nx), Subset::all(ny));
  if (pair) check = q.meet(check, htilde(*res.witness_back, Subset::all(ny), Subset::all(nx)));
  if (check == res.value) {
    res.attainment = Attainment::exact;
    res.gap = 0;
  } else {
    res.attainment = Attainment::gap;
    res.gap = check.is_infinite() || res.value.is_infinite() ? Rational(-1) : abs(check.amount() - res.value.amount());
  }
  return res;
}

}  // namespace vqcat
