#include "vqcat/vmodule.hpp"

namespace vqcat {

namespace {

void require_shape(const VCategory& x, const VCategory& y, const Matrix& m, const char* what) {
  require_same_quantale(x.quantale(), y.quantale(), what);
  if (m.rows() != x.size() || m.cols() != y.size()) {
    throw DomainError(std::string(what) + ": matrix is " + std::to_string(m.rows()) + "x" +
                      std::to_string(m.cols()) + ", expected " + std::to_string(x.size()) + "x" +
                      std::to_string(y.size()));
  }
}

}  // namespace

VModule::VModule(VCategory source, VCategory target, std::shared_ptr<const Matrix> m)
    : source_(std::move(source)), target_(std::move(target)), m_(std::move(m)) {}

VModule VModule::trusted(VCategory source, VCategory target, Matrix matrix) {
  require_shape(source, target, matrix, "VModule");
  return VModule(std::move(source), std::move(target), std::make_shared<const Matrix>(std::move(matrix)));
}

VRelation VModule::as_relation() const {
  return VRelation(source_.carrier(), target_.carrier(), quantale(), *m_);
}

bool operator==(const VModule& a, const VModule& b) {
  return a.source_ == b.source_ && a.target_ == b.target_ && (a.m_ == b.m_ || *a.m_ == *b.m_);
}

std::optional<Counterexample> find_module_violation(const VCategory& x, const VCategory& y,
                                                    const Matrix& m) {
  const Quantale& q = x.quantale();
  std::size_t nx = x.size(), ny = y.size();
  for (std::size_t x1 = 0; x1 < nx; ++x1) {
    for (std::size_t x0 = 0; x0 < nx; ++x0) {
      for (std::size_t j = 0; j < ny; ++j) {
        Value lhs = q.tensor(x(x1, x0), m(x0, j));
        if (!q.leq(lhs, m(x1, j))) {
          return Counterexample{"left action",
                                {{"x'", x.label(x1)}, {"x", x.label(x0)}, {"y", y.label(j)}},
                                "a(x',x) (x) phi(x,y) = " + q.format(lhs),
                                "not <=",
                                "phi(x',y) = " + q.format(m(x1, j))};
        }
      }
    }
  }
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t y0 = 0; y0 < ny; ++y0) {
      for (std::size_t y1 = 0; y1 < ny; ++y1) {
        Value lhs = q.tensor(m(i, y0), y(y0, y1));
        if (!q.leq(lhs, m(i, y1))) {
          return Counterexample{"right action",
                                {{"x", x.label(i)}, {"y", y.label(y0)}, {"y'", y.label(y1)}},
                                "phi(x,y) (x) b(y,y') = " + q.format(lhs),
                                "not <=",
                                "phi(x,y') = " + q.format(m(i, y1))};
        }
      }
    }
  }
  return std::nullopt;
}

bool is_module(const VCategory& x, const VCategory& y, const Matrix& m) {
  return !find_module_violation(x, y, m).has_value();
}

VModule make_vmodule(const VCategory& x, const VCategory& y, Matrix m) {
  require_shape(x, y, m, "make_vmodule");
  for (const auto& v : m.cells()) x.quantale().require_member(v);
  if (auto cx = find_module_violation(x, y, m)) throw LawViolation(*cx);
  return VModule::trusted(x, y, std::move(m));
}

VModule identity_module(const VCategory& x) { return VModule::trusted(x, x, x.structure()); }

VModule top_module(const VCategory& x, const VCategory& y) {
  require_same_quantale(x.quantale(), y.quantale(), "top_module");
  return VModule::trusted(x, y, Matrix(x.size(), y.size(), x.quantale().top()));
}

VModule bottom_module(const VCategory& x, const VCategory& y) {
  require_same_quantale(x.quantale(), y.quantale(), "bottom_module");
  return VModule::trusted(x, y, Matrix(x.size(), y.size(), x.quantale().bottom()));
}

VModule compose_modules(const VModule& phi, const VModule& psi) {
  if (!(phi.target() == psi.source())) throw DomainError("compose_modules: middle categories differ");
  VRelation r = compose_rel(phi.as_relation(), psi.as_relation());
  return make_vmodule(phi.source(), psi.target(), r.matrix());
}

bool module_leq(const VModule& phi, const VModule& psi) {
  return relation_leq(phi.as_relation(), psi.as_relation());
}

VModule module_join(const VModule& phi, const VModule& psi) {
  if (!(phi.source() == psi.source()) || !(phi.target() == psi.target())) {
    throw DomainError("module_join: shapes differ");
  }
  return make_vmodule(phi.source(), phi.target(),
                      relation_join(phi.as_relation(), psi.as_relation()).matrix());
}

VModule transpose_module(const VModule& phi) {
  return make_vmodule(phi.target(), phi.source(), involution(phi.as_relation()).matrix());
}

VModule companion_conjoint(const VFunctorMap& f, AdjointSide side) {
  LawReport ok = check_vfunctor(f);
  if (ok.failed()) throw LawViolation(*ok.counterexample);
  const VCategory& x = f.source();
  const VCategory& y = f.target();
  if (side == AdjointSide::lower) {
    Matrix m(x.size(), y.size(), x.quantale().bottom());
    for (std::size_t i = 0; i < x.size(); ++i)
      for (std::size_t j = 0; j < y.size(); ++j) m(i, j) = y(f(i), j);
    return VModule::trusted(x, y, std::move(m));
  }
  Matrix m(y.size(), x.size(), x.quantale().bottom());
  for (std::size_t j = 0; j < y.size(); ++j)
    for (std::size_t i = 0; i < x.size(); ++i) m(j, i) = y(j, f(i));
  return VModule::trusted(y, x, std::move(m));
}

VModule restrict(const VModule& phi, const VFunctorMap& f, const VFunctorMap& g) {
  if (!(f.target() == phi.source()) || !(g.target() == phi.target())) {
    throw DomainError("restrict: functors do not land in the module's categories");
  }
  for (const auto* h : {&f, &g}) {
    LawReport ok = check_vfunctor(*h);
    if (ok.failed()) throw LawViolation(*ok.counterexample);
  }
  Matrix m(f.source().size(), g.source().size(), phi.quantale().bottom());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = phi(f(i), g(j));
  return VModule::trusted(f.source(), g.source(), std::move(m));
}

VCategory glue(const VModule& phi, const std::optional<VModule>& phi_back) {
  const VCategory& x = phi.source();
  const VCategory& y = phi.target();
  const Quantale& q = phi.quantale();
  if (phi_back) {
    if (!(phi_back->source() == y) || !(phi_back->target() == x)) {
      throw DomainError("glue: backward module has the wrong shape");
    }
    LawReport pair = check_pair(phi, *phi_back);
    if (pair.failed()) throw LawViolation(*pair.counterexample);
  }
  std::vector<std::string> labels;
  for (const auto& l : x.carrier()) labels.push_back("L:" + l);
  for (const auto& l : y.carrier()) labels.push_back("R:" + l);
  std::size_t nx = x.size(), n = nx + y.size();
  Matrix m(n, n, q.bottom());
  for (std::size_t i = 0; i < nx; ++i)
    for (std::size_t j = 0; j < nx; ++j) m(i, j) = x(i, j);
  for (std::size_t i = 0; i < y.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) m(nx + i, nx + j) = y(i, j);
  for (std::size_t i = 0; i < nx; ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      m(i, nx + j) = phi(i, j);
      if (phi_back) m(nx + j, i) = (*phi_back)(j, i);
    }
  }
  return make_vcategory(Carrier(std::move(labels)), std::move(m), q);
}

Unglued unglue(const VCategory& z, std::size_t left_size) {
  if (left_size > z.size()) throw DomainError("unglue: left block larger than the carrier");
  std::vector<std::size_t> left(left_size), right(z.size() - left_size);
  for (std::size_t i = 0; i < left.size(); ++i) left[i] = i;
  for (std::size_t j = 0; j < right.size(); ++j) right[j] = left_size + j;
  auto strip = [](const VCategory& c) {
    std::vector<std::string> labels;
    for (const auto& l : c.carrier()) {
      labels.push_back(l.size() > 2 && (l.rfind("L:", 0) == 0 || l.rfind("R:", 0) == 0) ? l.substr(2) : l);
    }
    return VCategory::trusted(Carrier(std::move(labels)), c.quantale(), c.structure());
  };
  VCategory x = strip(full_subcategory(z, left));
  VCategory y = strip(full_subcategory(z, right));
  const Quantale& q = z.quantale();
  Matrix fwd(x.size(), y.size(), q.bottom());
  Matrix back(y.size(), x.size(), q.bottom());
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t j = 0; j < y.size(); ++j) {
      fwd(i, j) = z(i, left_size + j);
      back(j, i) = z(left_size + j, i);
    }
  }
  return {make_vmodule(x, y, std::move(fwd)), make_vmodule(y, x, std::move(back))};
}

namespace {

// First violation of phi' . phi <= a or phi . phi' <= b.
std::optional<Counterexample> find_pair_violation(const VModule& phi, const VModule& back) {
  const VCategory& x = phi.source();
  const VCategory& y = phi.target();
  const Quantale& q = phi.quantale();
  for (std::size_t i = 0; i < x.size(); ++i) {
    for (std::size_t i2 = 0; i2 < x.size(); ++i2) {
      Value acc = q.bottom();
      for (std::size_t j = 0; j < y.size(); ++j) acc = q.join(acc, q.tensor(phi(i, j), back(j, i2)));
      if (!q.leq(acc, x(i, i2))) {
        return Counterexample{"pair bound on X",
                              {{"x", x.label(i)}, {"x'", x.label(i2)}},
                              "(phi' . phi)(x,x') = " + q.format(acc),
                              "not <=",
                              "a(x,x') = " + q.format(x(i, i2))};
      }
    }
  }
  for (std::size_t j = 0; j < y.size(); ++j) {
    for (std::size_t j2 = 0; j2 < y.size(); ++j2) {
      Value acc = q.bottom();
      for (std::size_t i = 0; i < x.size(); ++i) acc = q.join(acc, q.tensor(back(j, i), phi(i, j2)));
      if (!q.leq(acc, y(j, j2))) {
        return Counterexample{"pair bound on Y",
                              {{"y", y.label(j)}, {"y'", y.label(j2)}},
                              "(phi . phi')(y,y') = " + q.format(acc),
                              "not <=",
                              "b(y,y') = " + q.format(y(j, j2))};
      }
    }
  }
  return std::nullopt;
}

}  // namespace

bool is_pair(const VModule& phi, const VModule& phi_back) {
  return !find_pair_violation(phi, phi_back).has_value();
}

LawReport check_pair(const VModule& phi, const VModule& phi_back) {
  if (!(phi_back.source() == phi.target()) || !(phi_back.target() == phi.source())) {
    throw DomainError("check_pair: modules are not opposite");
  }
  LawReport report;
  report.suite = "pair";
  const std::size_t nx = phi.source().size(), ny = phi.target().size();
  report.instances = nx * nx + ny * ny;
  if (auto cx = find_pair_violation(phi, phi_back)) report.fail(*cx);
  bool symmetric = report.passed() && classify(phi.source()).symmetric && classify(phi.target()).symmetric;
  for (std::size_t i = 0; i < nx && symmetric; ++i)
    for (std::size_t j = 0; j < ny && symmetric; ++j) symmetric = phi(i, j) == phi_back(j, i);
  report.flags["symmetric_module"] = symmetric;
  return report;
}

VModule combine_modules(const VModule& phi, const VModule& psi, CombineMode mode) {
  require_same_quantale(phi.quantale(), psi.quantale(), "combine_modules");
  const Quantale& q = phi.quantale();
  VCategory src = combine(phi.source(), psi.source(), mode);
  VCategory dst = combine(phi.target(), psi.target(), mode);
  Matrix m(src.size(), dst.size(), q.bottom());
  if (mode == CombineMode::coproduct) {
    std::size_t nx = phi.source().size(), nx2 = phi.target().size();
    for (std::size_t i = 0; i < nx; ++i)
      for (std::size_t j = 0; j < nx2; ++j) m(i, j) = phi(i, j);
    for (std::size_t i = 0; i < psi.source().size(); ++i)
      for (std::size_t j = 0; j < psi.target().size(); ++j) m(nx + i, nx2 + j) = psi(i, j);
  } else {
    std::size_t ny = psi.source().size(), ny2 = psi.target().size();
    for (std::size_t i = 0; i < src.size(); ++i) {
      for (std::size_t j = 0; j < dst.size(); ++j) {
        const Value& u = phi(i / ny, j / ny2);
        const Value& v = psi(i % ny, j % ny2);
        m(i, j) = mode == CombineMode::tensor ? q.tensor(u, v) : q.meet(u, v);
      }
    }
  }
  return make_vmodule(src, dst, std::move(m));
}

}  // namespace vqcat
