#include <doctest.h>

#include <filesystem>
#include <random>

#include "vqcat/corpus.hpp"
#include "vqcat/errors.hpp"
#include "vqcat/io.hpp"

using namespace vqcat;

namespace {

const std::filesystem::path corpus_dir{VQCAT_CORPUS_DIR};

}  // namespace

TEST_CASE("value encodings") {
  Quantale c = Quantale::cost();
  CHECK(value_to_json(c, c.cost_value(Rational(1, 2))) == Json("0.5"));
  CHECK(value_to_json(c, c.cost_value(Rational(1, 3))) == Json("1/3"));
  CHECK(value_to_json(c, c.infinity()) == Json("inf"));
  CHECK(value_from_json(c, Json(0.1)) == c.cost_value(Rational(1, 10)));
  CHECK(value_from_json(c, Json(2)) == c.cost_value(2));
  CHECK(value_from_json(c, Json("inf")) == c.infinity());

  Quantale b = Quantale::bool2();
  CHECK(value_to_json(b, b.top()) == Json(true));
  CHECK(value_from_json(b, Json(false)) == b.bottom());
  CHECK_THROWS_AS(value_from_json(c, Json(true)), ParseError);

  Quantale l = Quantale::lukasiewicz(4);
  CHECK(value_to_json(l, l.level(2)) == Json("1/2"));
  Quantale t = Quantale::three_chain();
  CHECK(value_to_json(t, t.unit()) == Json("1/2"));
  CHECK(value_from_json(t, Json("k")) == t.unit());
}

TEST_CASE("categories and modules round-trip") {
  std::mt19937_64 rng(109);
  for (const auto& q : {Quantale::bool2(), Quantale::cost(), Quantale::lukasiewicz(3), Quantale::three_chain()}) {
    for (int i = 0; i < 10; ++i) {
      VCategory x = random_category(q, 1 + i % 3, rng, true);
      VCategory back = category_from_json(Json::parse(category_to_json(x).dump()));
      CHECK(back == x);
      VModule phi = random_module(x, x, rng);
      CHECK(module_from_json(Json::parse(module_to_json(phi).dump())) == phi);
    }
  }
  CHECK(quantale_from_json(quantale_to_json(Quantale::lukasiewicz(6))) == Quantale::lukasiewicz(6));
  CHECK(quantale_from_json(Json("cost")) == Quantale::cost());
}

TEST_CASE("shipped corpus loads and round-trips") {
  std::size_t loaded = 0;
  for (const auto& entry : std::filesystem::directory_iterator(corpus_dir)) {
    const auto name = entry.path().filename().string();
    if (entry.path().extension() != ".json" || name == "broken.json") continue;
    Json j = read_json_file(entry.path());
    if (j.contains("matrix")) {
      VModule m = load_module(entry.path());
      CHECK(module_from_json(module_to_json(m)) == m);
    } else {
      VCategory x = load_category(entry.path());
      CHECK(category_from_json(category_to_json(x)) == x);
    }
    ++loaded;
  }
  CHECK(loaded >= 8);
  CHECK_THROWS_AS(load_category(corpus_dir / "broken.json"), LawViolation);
}

TEST_CASE("parse errors carry a location") {
  Json bad = Json::parse(R"({"quantale": "cost", "elements": ["a", "b"], "structure": [["0", "1"], ["x", "0"]]})");
  try {
    category_from_json(bad);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.location() == "/structure/1/0");
  }
  Json short_row = Json::parse(R"({"quantale": "bool2", "elements": ["a", "b"], "structure": [[true], [false, true]]})");
  CHECK_THROWS_AS(category_from_json(short_row), ParseError);
  Json dup = Json::parse(R"({"quantale": "bool2", "elements": ["a", "a"], "structure": [[true, true], [true, true]]})");
  CHECK_THROWS_AS(category_from_json(dup), ParseError);
  Json missing = Json::parse(R"({"quantale": "bool2", "elements": []})");
  try {
    category_from_json(missing);
    FAIL("expected a parse error");
  } catch (const ParseError& e) {
    CHECK(e.message().find("structure") != std::string::npos);
  }
  CHECK_THROWS_AS(read_json_file(corpus_dir / "does_not_exist.json"), ParseError);
}
