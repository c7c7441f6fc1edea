#include <doctest.h>

#include <random>

#include "vqcat/corpus.hpp"
#include "vqcat/errors.hpp"
#include "vqcat/hausdorff.hpp"
#include "vqcat/presheaf.hpp"

using namespace vqcat;

namespace {

// Every value table, filtered by the presheaf condition written out here.
std::size_t count_presheaves(const VCategory& x) {
  const Quantale& q = x.quantale();
  std::vector<std::size_t> digits(x.size(), 0);
  std::size_t count = 0;
  while (true) {
    bool ok = true;
    for (std::size_t i = 0; i < x.size() && ok; ++i)
      for (std::size_t j = 0; j < x.size() && ok; ++j)
        ok = q.leq(q.tensor(x(j, i), q.elements()[digits[i]]), q.elements()[digits[j]]);
    count += ok;
    std::size_t c = 0;
    while (c < digits.size() && ++digits[c] == q.size()) digits[c++] = 0;
    if (c == digits.size()) return count;
  }
}

}  // namespace

TEST_CASE("presheaf counts") {
  CHECK(PresheafCategory(unit_category(Quantale::lukasiewicz(2))).size() == 3);
  CHECK(PresheafCategory(VCategory(Quantale::bool2())).size() == 1);
  for (const auto& q : {Quantale::bool2(), Quantale::three_chain(), Quantale::lukasiewicz(2)}) {
    for (const auto& x : enumerate_categories_upto(q, 3)) {
      PresheafCategory px(x);
      CHECK(px.size() == count_presheaves(x));
      CHECK_NOTHROW(make_vcategory(px.category().carrier(), px.category().structure(), q));
    }
  }
  CHECK_THROWS_AS(PresheafCategory(unit_category(Quantale::cost())), DomainError);
}

TEST_CASE("Yoneda lemma and full fidelity") {
  std::mt19937_64 rng(67);
  for (const auto& q : {Quantale::three_chain(), Quantale::lukasiewicz(3)}) {
    for (int n = 0; n < 5; ++n) {
      VCategory x = random_category(q, 3, rng);
      PresheafCategory px(x);
      VFunctorMap y = yoneda(px);
      for (std::size_t a = 0; a < x.size(); ++a) {
        for (std::size_t b = 0; b < x.size(); ++b) CHECK(px.structure(y(a), y(b)) == x(a, b));
        for (std::size_t s = 0; s < px.size(); ++s) CHECK(px.structure(y(a), s) == px.values(s)[a]);
      }
    }
  }
}

TEST_CASE("multiplication inverts the Yoneda embedding of X^") {
  std::mt19937_64 rng(71);
  Quantale q = Quantale::lukasiewicz(2);
  VCategory x = random_category(q, 2, rng);
  PresheafCategory px(x);
  for (std::size_t s = 0; s < px.size(); ++s) {
    std::vector<Value> tau(px.size());
    for (std::size_t t = 0; t < px.size(); ++t) tau[t] = px.structure(t, s);
    CHECK(pv_multiply(px, tau) == px.values(s));
  }
}

TEST_CASE("left extension and the Yoneda mate") {
  std::mt19937_64 rng(73);
  Quantale q = Quantale::three_chain();
  for (int n = 0; n < 10; ++n) {
    VCategory x = random_category(q, 2, rng);
    VCategory y = random_category(q, 2, rng);
    VModule phi = random_module(x, y, rng);
    PresheafCategory px(x), py(y);
    VFunctorMap mate = yoneda_mate(phi, px);
    VFunctorMap ext = left_extension(phi, px, py);
    VFunctorMap yy = yoneda(py);
    for (std::size_t j = 0; j < y.size(); ++j) {
      for (std::size_t i = 0; i < x.size(); ++i) CHECK(px.values(mate(j))[i] == phi(i, j));
      // The extension of a representable is the mate.
      CHECK(ext(yy(j)) == mate(j));
    }
    CHECK(check_vfunctor(ext).passed());
  }
}

TEST_CASE("generic extensions") {
  std::mt19937_64 rng(79);
  for (const auto& q : {Quantale::bool2(), Quantale::three_chain()}) {
    for (int n = 0; n < 6; ++n) {
      VCategory x = random_category(q, 2, rng);
      VCategory y = random_category(q, 2, rng);
      VModule phi = random_module(x, y, rng);
      // The identity functor extends to the module itself.
      CHECK(extend_functor(FunctorObject(FunctorKind::identity), phi).matrix() == phi.matrix());
      // For H the generic extension is the subset formula.
      VModule h = extend_functor(FunctorObject(FunctorKind::H), phi);
      for (std::uint64_t a = 0; a < 4; ++a)
        for (std::uint64_t b = 0; b < 4; ++b) CHECK(h(a, b) == htilde(phi, {a}, {b}));
    }
  }
}

TEST_CASE("presheaf law suites") {
  std::mt19937_64 rng(83);
  for (const auto& q : {Quantale::bool2(), Quantale::lukasiewicz(2)}) {
    VCategory x = random_category(q, 2, rng);
    PresheafLawOptions opt{{unit_category(q), random_category(q, 2, rng)}};
    for (auto s : {PresheafSuite::yoneda, PresheafSuite::kz, PresheafSuite::adjunction}) {
      LawReport r = check_presheaf_laws(x, s, opt);
      CHECK_MESSAGE(r.passed(), r.summary());
    }
  }
}
