#include <doctest.h>

#include <random>

#include "vqcat/corpus.hpp"
#include "vqcat/enriched.hpp"

using namespace vqcat;

namespace {

Matrix cost_matrix(const std::vector<std::vector<int>>& d) {
  Quantale q = Quantale::cost();
  Matrix m(d.size(), d.size(), q.bottom());
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = 0; j < d.size(); ++j) m(i, j) = q.cost_value(d[i][j]);
  return m;
}

// Reflexivity and transitivity spelled out directly.
bool laws_hold(const VCategory& x) {
  const Quantale& q = x.quantale();
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (!q.leq(q.unit(), x(i, i))) return false;
    for (std::size_t j = 0; j < x.size(); ++j)
      for (std::size_t l = 0; l < x.size(); ++l)
        if (!q.leq(q.tensor(x(i, j), x(j, l)), x(i, l))) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("make_vcategory names the violated law") {
  Quantale q = Quantale::cost();
  CHECK_NOTHROW(make_vcategory({"a", "b", "c"}, cost_matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), q));
  try {
    make_vcategory({"a", "b", "c"}, cost_matrix({{0, 1, 3}, {1, 0, 1}, {3, 1, 0}}), q);
    FAIL("expected a violation");
  } catch (const LawViolation& e) {
    CHECK(e.counterexample().law.find("transitivity") != std::string::npos);
    CHECK(e.counterexample().inputs.size() == 3);
  }
  CHECK_THROWS_AS(make_vcategory({"a"}, cost_matrix({{1}}), q), LawViolation);
}

TEST_CASE("enumeration matches the preorder counts over bool2") {
  // Labeled preorders on 1, 2, 3 points.
  Quantale q = Quantale::bool2();
  CHECK(enumerate_categories(q, 1).size() == 1);
  CHECK(enumerate_categories(q, 2).size() == 4);
  CHECK(enumerate_categories(q, 3).size() == 29);
  for (const auto& x : enumerate_categories(Quantale::three_chain(), 2)) CHECK(laws_hold(x));
}

TEST_CASE("random categories satisfy the laws") {
  std::mt19937_64 rng(11);
  for (const auto& q : {Quantale::cost(), Quantale::lukasiewicz(3), Quantale::three_chain()}) {
    for (int i = 0; i < 20; ++i) CHECK(laws_hold(random_category(q, 4, rng, true)));
  }
}

TEST_CASE("combinations") {
  Quantale q = Quantale::cost();
  VCategory x = make_vcategory({"a", "b"}, cost_matrix({{0, 1}, {2, 0}}), q);
  VCategory y = make_vcategory({"u", "v"}, cost_matrix({{0, 3}, {3, 0}}), q);

  VCategory t = combine(x, y, CombineMode::tensor);
  VCategory p = combine(x, y, CombineMode::product);
  VCategory s = combine(x, y, CombineMode::coproduct);
  REQUIRE(t.size() == 4);
  REQUIRE(s.size() == 4);
  CHECK(laws_hold(t));
  CHECK(laws_hold(p));
  CHECK(laws_hold(s));
  // (a,u) -> (b,v): 1 + 3 in the tensor, max(1, 3) in the product.
  std::size_t au = *t.carrier().find("(a,u)"), bv = *t.carrier().find("(b,v)");
  CHECK(t(au, bv) == q.cost_value(4));
  CHECK(p(*p.carrier().find("(a,u)"), *p.carrier().find("(b,v)")) == q.cost_value(3));
  CHECK(s(*s.carrier().find("L:a"), *s.carrier().find("R:u")) == q.bottom());
  CHECK(s(*s.carrier().find("R:u"), *s.carrier().find("R:v")) == q.cost_value(3));

  CHECK(check_vfunctor(coproduct_injection(x, y, true)).flag("fully_faithful"));
  CHECK(opposite(x)(0, 1) == q.cost_value(2));
}

TEST_CASE("classification and symmetrization") {
  Quantale q = Quantale::bool2();
  VCategory discrete = discrete_category({"a", "b"}, q);
  CHECK(classify(discrete).symmetric);
  CHECK(classify(discrete).separated);
  VCategory chaotic = make_vcategory({"a", "b"}, Matrix(2, 2, q.top()), q);
  CHECK(classify(chaotic).symmetric);
  CHECK_FALSE(classify(chaotic).separated);

  Matrix m(2, 2, q.top());
  m(1, 0) = q.bottom();
  VCategory chain = make_vcategory({"a", "b"}, m, q);
  CHECK_FALSE(classify(chain).symmetric);
  CHECK(symmetrize(chain, SymmetrizeMode::meet) == discrete);
  CHECK(induced_order(chain)[0][1]);
  CHECK_FALSE(induced_order(chain)[1][0]);
}

TEST_CASE("isomorphism search finds permuted copies") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 20; ++i) {
    VCategory x = random_category(Quantale::cost(), 4, rng);
    auto perm = random_permutation(4, rng);
    VCategory y = relabel(permute(x, perm), "y");
    auto f = find_isomorphism(x, y);
    REQUIRE(f);
    for (std::size_t a = 0; a < 4; ++a)
      for (std::size_t b = 0; b < 4; ++b) CHECK(x(a, b) == y((*f)[a], (*f)[b]));
  }
  Quantale q = Quantale::bool2();
  Matrix m(2, 2, q.top());
  m(1, 0) = q.bottom();
  CHECK_FALSE(find_isomorphism(make_vcategory({"a", "b"}, m, q), discrete_category({"a", "b"}, q)));
}

TEST_CASE("relation composition and functors") {
  Quantale q = Quantale::cost();
  VCategory x = make_vcategory({"a", "b", "c"}, cost_matrix({{0, 1, 2}, {1, 0, 1}, {2, 1, 0}}), q);
  VRelation a = x.as_relation();
  CHECK(compose_rel(a, a) == a);
  CHECK(involution(a) == a);

  VCategory e = unit_category(q);
  VFunctorMap f(e, x, {1});
  CHECK(check_vfunctor(f).passed());
  VFunctorMap g(x, e, {0, 0, 0});
  CHECK(check_vfunctor(g).passed());
  CHECK_FALSE(check_vfunctor(g).flag("fully_faithful"));
  CHECK(compose_functors(f, g).mapping() == std::vector<std::size_t>{0});
  CHECK_THROWS_AS(VFunctorMap(e, x, {5}), DomainError);

  // Collapsing a and c onto b is not a V-functor for the discrete target.
  VCategory d = discrete_category({"u", "v"}, q);
  CHECK(check_vfunctor(VFunctorMap(x, d, {0, 0, 1})).failed());
}
