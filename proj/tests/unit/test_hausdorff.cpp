#include <doctest.h>

#include <random>

#include "vqcat/corpus.hpp"
#include "vqcat/errors.hpp"
#include "vqcat/hausdorff.hpp"

using namespace vqcat;

namespace {

VCategory path3() {
  Quantale q = Quantale::cost();
  const int d[3][3] = {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}};
  Matrix m(3, 3, q.bottom());
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t j = 0; j < 3; ++j) m(i, j) = q.cost_value(d[i][j]);
  return make_vcategory({"a", "b", "c"}, m, q);
}

// Largest real distance from a point of A to the nearest point of B.
Rational directed_hausdorff(const int d[3][3], std::vector<int> a, std::vector<int> b) {
  int worst = 0;
  for (int x : a) {
    int nearest = 1 << 20;
    for (int y : b) nearest = std::min(nearest, d[x][y]);
    worst = std::max(worst, nearest);
  }
  return worst;
}

}  // namespace

TEST_CASE("directed Hausdorff distance on a metric space") {
  VCategory x = path3();
  const Quantale& q = x.quantale();
  const int d[3][3] = {{0, 1, 3}, {1, 0, 2}, {3, 2, 0}};
  CHECK(hausdorff_value(x, subset_of_labels(x.carrier(), {"a"}), subset_of_labels(x.carrier(), {"b", "c"})) ==
        q.cost_value(1));
  CHECK(hausdorff_value(x, subset_of_labels(x.carrier(), {"a", "c"}), subset_of_labels(x.carrier(), {"b"})) ==
        q.cost_value(2));
  for (std::uint64_t a = 1; a < 8; ++a)
    for (std::uint64_t b = 1; b < 8; ++b) {
      auto am = Subset{a}.members(), bm = Subset{b}.members();
      std::vector<int> ai(am.begin(), am.end()), bi(bm.begin(), bm.end());
      CHECK(hausdorff_value(x, {a}, {b}) == q.cost_value(directed_hausdorff(d, ai, bi)));
    }
  CHECK(hausdorff_value(x, {}, {1}) == q.top());
  CHECK(hausdorff_value(x, {1}, {}) == q.bottom());
}

TEST_CASE("the dual formula agrees with the direct one") {
  std::mt19937_64 rng(41);
  for (const auto& q : {Quantale::cost(), Quantale::lukasiewicz(3), Quantale::three_chain(), Quantale::bool2()}) {
    for (int i = 0; i < 10; ++i) {
      VCategory x = random_category(q, 4, rng, true);
      for (std::uint64_t a = 0; a < 16; ++a)
        for (std::uint64_t b = 0; b < 16; ++b)
          CHECK(hausdorff_value(x, {a}, {b}) == hausdorff_value_dual(x, {a}, {b}));
    }
  }
}

TEST_CASE("down closures") {
  Quantale q = Quantale::bool2();
  Matrix chain(2, 2, q.top());
  chain(1, 0) = q.bottom();
  VCategory x = make_vcategory({"lo", "hi"}, chain, q);
  CHECK(down_closure(x, Subset::single(1), ClosureMode::order) == Subset::all(2));
  CHECK(down_closure(x, Subset::single(0), ClosureMode::order) == Subset::single(0));

  // Finite joins in a chain are attained, so both modes agree on builtins.
  std::mt19937_64 rng(43);
  for (int i = 0; i < 30; ++i) {
    VCategory y = random_category(Quantale::lukasiewicz(2), 3, rng);
    for (std::uint64_t b = 0; b < 8; ++b) {
      Subset o = down_closure(y, {b}, ClosureMode::order);
      Subset big = down_closure(y, {b}, ClosureMode::big);
      CHECK(Subset{b}.subset_of(o));
      CHECK(o == big);
      CHECK(down_closure(y, big, ClosureMode::big) == big);
      CHECK(hausdorff_value(y, {b}, big) == y.quantale().top());
    }
  }
}

TEST_CASE("Hausdorff categories are V-categories") {
  std::mt19937_64 rng(47);
  for (const auto& q : {Quantale::cost(), Quantale::three_chain()}) {
    VCategory x = random_category(q, 3, rng);
    for (auto v : {HausdorffVariant::plain, HausdorffVariant::sym, HausdorffVariant::down}) {
      CAPTURE(to_string(v));
      VCategory hx = HausdorffCategory(x, v).materialize();
      CHECK_NOTHROW(make_vcategory(hx.carrier(), hx.structure(), q));
      if (v == HausdorffVariant::sym) CHECK(classify(hx).symmetric);
    }
    CHECK(HausdorffCategory(x, HausdorffVariant::plain).size() == 8);
  }
}

TEST_CASE("H on maps is a V-functor") {
  std::mt19937_64 rng(53);
  Quantale q = Quantale::bool2();
  auto cats = enumerate_categories_upto(q, 2);
  for (const auto& x : cats)
    for (const auto& y : cats) {
      std::vector<std::size_t> map(x.size());
      for (std::size_t i = 0; i < x.size(); ++i) map[i] = rng() % y.size();
      VFunctorMap f(x, y, map);
      if (check_vfunctor(f).failed()) continue;
      for (auto v : {HausdorffVariant::plain, HausdorffVariant::down})
        CHECK(check_vfunctor(hausdorff_map(f, v)).passed());
      CHECK(image(f, Subset::all(x.size())).subset_of(Subset::all(y.size())));
    }
}

TEST_CASE("htilde and its Skolem form") {
  std::mt19937_64 rng(59);
  for (const auto& q : {Quantale::cost(), Quantale::lukasiewicz(4)}) {
    for (int i = 0; i < 20; ++i) {
      VCategory x = random_category(q, 3, rng);
      VCategory y = random_category(q, 3, rng);
      VModule phi = random_module(x, y, rng);
      for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b) CHECK(htilde(phi, {a}, {b}) == skolem_htilde(phi, {a}, {b}));
      // On the identity module htilde is the Hausdorff structure.
      for (std::uint64_t a = 0; a < 8; ++a)
        for (std::uint64_t b = 0; b < 8; ++b)
          CHECK(htilde(identity_module(x), {a}, {b}) == hausdorff_value(x, {a}, {b}));
    }
  }
  VCategory x = random_category(Quantale::cost(), 6, rng);
  Caps tiny;
  tiny.enumeration = 10;
  CHECK_THROWS_AS(skolem_htilde(identity_module(x), Subset::all(6), Subset::all(6), tiny), CapExceeded);
}

TEST_CASE("lax monad components are modules") {
  auto cats = enumerate_categories_upto(Quantale::bool2(), 2);
  for (const auto& x : cats) {
    LaxMonadComponents c = lax_monad_components(x);
    CHECK(c.hx.size() == (std::size_t{1} << x.size()));
    CHECK(c.hhx.size() == (std::size_t{1} << c.hx.size()));
    for (std::size_t i = 0; i < x.size(); ++i) CHECK(c.delta(i, std::size_t{1} << i) == x.quantale().top());
  }
}

TEST_CASE("law suites pass on small categories") {
  std::mt19937_64 rng(61);
  for (const auto& q : {Quantale::bool2(), Quantale::lukasiewicz(2)}) {
    for (int i = 0; i < 4; ++i) {
      VCategory x = random_category(q, 2, rng);
      HausdorffLawOptions opt;
      opt.seed = 3;
      opt.partners = {unit_category(q)};
      for (auto s : {HausdorffSuite::monad, HausdorffSuite::kz, HausdorffSuite::structure,
                     HausdorffSuite::monad_morphism, HausdorffSuite::lax_naturality, HausdorffSuite::em_tilde}) {
        CAPTURE(to_string(s));
        LawReport r = check_hausdorff_laws(x, s, opt);
        CHECK_MESSAGE(r.passed(), r.summary());
      }
    }
  }
  CHECK(parse_hausdorff_suite("kz") == HausdorffSuite::kz);
  CHECK_FALSE(parse_hausdorff_suite("nope"));
}
