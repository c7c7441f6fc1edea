#include <doctest.h>

#include <random>

#include "vqcat/corpus.hpp"
#include "vqcat/gromov.hpp"
#include "vqcat/vmodule.hpp"

using namespace vqcat;

namespace {

// phi . a <= phi and b . phi <= phi, checked entrywise.
bool actions_hold(const VCategory& x, const VCategory& y, const Matrix& m) {
  const Quantale& q = x.quantale();
  for (std::size_t i = 0; i < x.size(); ++i)
    for (std::size_t j = 0; j < y.size(); ++j) {
      for (std::size_t i2 = 0; i2 < x.size(); ++i2)
        if (!q.leq(q.tensor(x(i2, i), m(i, j)), m(i2, j))) return false;
      for (std::size_t j2 = 0; j2 < y.size(); ++j2)
        if (!q.leq(q.tensor(m(i, j), y(j, j2)), m(i, j2))) return false;
    }
  return true;
}

// Counts modules by running over every matrix.
std::size_t count_modules(const VCategory& x, const VCategory& y) {
  const Quantale& q = x.quantale();
  const std::size_t cells = x.size() * y.size();
  std::vector<std::size_t> digits(cells, 0);
  std::size_t count = 0;
  while (true) {
    Matrix m(x.size(), y.size(), q.bottom());
    for (std::size_t c = 0; c < cells; ++c) m(c / y.size(), c % y.size()) = q.elements()[digits[c]];
    count += actions_hold(x, y, m);
    std::size_t c = 0;
    while (c < cells && ++digits[c] == q.size()) digits[c++] = 0;
    if (c == cells) return count;
  }
}

}  // namespace

TEST_CASE("modules between singletons") {
  VCategory e2 = unit_category(Quantale::bool2());
  auto mods = enumerate_modules(e2, e2);
  CHECK(mods.size() == 2);
  CHECK(std::find(mods.begin(), mods.end(), top_module(e2, e2)) != mods.end());

  VCategory e3 = unit_category(Quantale::lukasiewicz(2));
  CHECK(enumerate_modules(e3, e3).size() == 3);
}

TEST_CASE("module enumeration agrees with the brute-force count") {
  for (const auto& q : {Quantale::bool2(), Quantale::three_chain(), Quantale::lukasiewicz(2)}) {
    auto cats = enumerate_categories_upto(q, 2);
    for (const auto& x : cats)
      for (const auto& y : cats) {
        auto mods = enumerate_modules(x, y);
        CHECK(mods.size() == count_modules(x, y));
        for (const auto& m : mods) CHECK(actions_hold(x, y, m.matrix()));
      }
  }
  // Counts grow with the quantale: bool2 embeds into lukasiewicz(2).
  auto b = enumerate_categories(Quantale::bool2(), 2);
  auto l = enumerate_categories(Quantale::lukasiewicz(2), 2);
  CHECK(count_modules(b[0], b[0]) <= count_modules(l[0], l[0]));
}

TEST_CASE("make_vmodule rejects non-modules with a witness") {
  Quantale q = Quantale::bool2();
  Matrix chain(2, 2, q.top());
  chain(1, 0) = q.bottom();
  VCategory x = make_vcategory({"lo", "hi"}, chain, q);
  VCategory e = unit_category(q);
  Matrix m(2, 1, q.bottom());
  m(1, 0) = q.top();  // hi related, lo not: breaks the left action
  CHECK_THROWS_AS(make_vmodule(x, e, m), LawViolation);
  m(0, 0) = q.top();
  m(1, 0) = q.bottom();
  CHECK_NOTHROW(make_vmodule(x, e, m));
}

TEST_CASE("identity, composition and order") {
  std::mt19937_64 rng(17);
  Quantale q = Quantale::cost();
  for (int i = 0; i < 20; ++i) {
    VCategory x = random_category(q, 3, rng);
    VCategory y = random_category(q, 2, rng);
    VCategory z = random_category(q, 3, rng);
    VModule phi = random_module(x, y, rng);
    VModule psi = random_module(y, z, rng);
    CHECK(compose_modules(identity_module(x), phi) == phi);
    CHECK(compose_modules(phi, identity_module(y)) == phi);
    VModule c = compose_modules(phi, psi);
    CHECK(actions_hold(x, z, c.matrix()));
    CHECK(module_leq(bottom_module(x, y), phi));
    CHECK(module_leq(phi, top_module(x, y)));
    CHECK(module_leq(phi, module_join(phi, bottom_module(x, y))));
  }
}

TEST_CASE("companions and conjoints") {
  std::mt19937_64 rng(5);
  Quantale q = Quantale::lukasiewicz(3);
  for (int i = 0; i < 20; ++i) {
    VCategory x = random_category(q, 2, rng);
    VCategory y = random_category(q, 3, rng);
    // A constant map is always a V-functor.
    VFunctorMap f(x, y, {1, 1});
    VModule lower = companion_conjoint(f, AdjointSide::lower);
    VModule upper = companion_conjoint(f, AdjointSide::upper);
    for (std::size_t a = 0; a < x.size(); ++a)
      for (std::size_t b = 0; b < y.size(); ++b) {
        CHECK(lower(a, b) == y(1, b));
        CHECK(upper(b, a) == y(b, 1));
      }
    // f_* -| f^*: 1_X <= f^* . f_* and f_* . f^* <= 1_Y.
    CHECK(module_leq(identity_module(x), compose_modules(lower, upper)));
    CHECK(module_leq(compose_modules(upper, lower), identity_module(y)));
  }
  VCategory x = random_category(q, 3, rng);
  CHECK(companion_conjoint(identity_functor(x), AdjointSide::lower) == identity_module(x));
}

TEST_CASE("restriction along functors") {
  std::mt19937_64 rng(23);
  Quantale q = Quantale::cost();
  VCategory x = random_category(q, 3, rng);
  VCategory y = random_category(q, 3, rng);
  VModule phi = random_module(x, y, rng);
  VCategory e = unit_category(q);
  VModule r = restrict(phi, VFunctorMap(e, x, {2}), VFunctorMap(e, y, {0}));
  CHECK(r(0, 0) == phi(2, 0));
}

TEST_CASE("gluing and ungluing") {
  std::mt19937_64 rng(29);
  Quantale q = Quantale::bool2();
  auto cats = enumerate_categories_upto(q, 2);
  for (const auto& x : cats)
    for (const auto& y : cats)
      for (auto& [phi, back] : enumerate_pairs(x, y, false)) {
        VCategory z = glue(phi, back);
        Unglued u = unglue(z, x.size());
        CHECK(u.forward == phi);
        CHECK(u.backward == back);
        CHECK(full_subcategory(z, {0}).structure()(0, 0) == x(0, 0));
      }

  // Top both ways between two discrete points is not a pair.
  VCategory d = discrete_category({"a", "b"}, q);
  VCategory e = unit_category(q);
  CHECK_FALSE(is_pair(top_module(e, d), top_module(d, e)));
  CHECK_THROWS_AS(glue(top_module(e, d), top_module(d, e)), LawViolation);
  CHECK_NOTHROW(glue(top_module(e, d)));
}

TEST_CASE("transpose needs symmetric categories") {
  Quantale q = Quantale::bool2();
  Matrix chain(2, 2, q.top());
  chain(1, 0) = q.bottom();
  VCategory x = make_vcategory({"lo", "hi"}, chain, q);
  CHECK_THROWS_AS(transpose_module(identity_module(x)), LawViolation);
  VCategory d = discrete_category({"a", "b"}, q);
  CHECK(transpose_module(identity_module(d)) == identity_module(d));
  CHECK(check_pair(identity_module(d), identity_module(d)).flag("symmetric_module"));
}

TEST_CASE("combined modules are modules") {
  std::mt19937_64 rng(31);
  Quantale q = Quantale::three_chain();
  for (int i = 0; i < 20; ++i) {
    VCategory x = random_category(q, 2, rng), x2 = random_category(q, 2, rng);
    VCategory y = random_category(q, 1, rng), y2 = random_category(q, 2, rng);
    VModule phi = random_module(x, x2, rng), psi = random_module(y, y2, rng);
    for (auto mode : {CombineMode::tensor, CombineMode::product, CombineMode::coproduct}) {
      VModule c = combine_modules(phi, psi, mode);
      CHECK(actions_hold(c.source(), c.target(), c.matrix()));
    }
  }
}
