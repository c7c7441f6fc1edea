#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <map>
#include <random>
#include <sstream>

#include "vqcat/corpus.hpp"
#include "vqcat/gromov.hpp"
#include "vqcat/hausdorff.hpp"
#include "vqcat/io.hpp"
#include "vqcat/presheaf.hpp"

namespace vqcat::cli {

namespace {

namespace fs = std::filesystem;

struct Options {
  std::string format = "text";
  std::size_t max_enum = 0;

  // check / hausdorff
  std::string category;
  std::string variant = "plain";
  std::string pairs;

  // htilde
  std::string module;
  std::string a, b;

  // gromov
  std::string x, y;
  std::string gvariant = "plain";
  std::string strategy = "auto";
  std::string k = "H";
  bool symmetrize = false;
  bool swap = false;
  std::string expect;
  std::string tol;

  // laws
  std::string suite;
  std::string corpus;
  std::string quantale;
  std::uint64_t seed = 0;
  std::size_t samples = 0;
};

Caps caps_for(const Options& o) {
  Caps c = default_caps();
  if (o.max_enum > 0) c.enumeration = o.max_enum;
  return c;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  if (text.empty()) return out;
  std::string cur;
  std::istringstream in(text);
  while (std::getline(in, cur, sep)) {
    if (!cur.empty()) out.push_back(cur);
  }
  return out;
}

Subset parse_labels(const Carrier& c, const std::string& text) {
  if (text == "{}" || text.empty()) return {};
  return subset_of_labels(c, split(text, text.find('+') != std::string::npos ? '+' : ','));
}

int print_report(const LawReport& r, const Options& o, std::ostream& out) {
  if (o.format == "json") {
    out << report_to_json(r).dump(2) << "\n";
  } else {
    out << r.summary() << "\n";
    for (const auto& n : r.notes) out << "  note: " << n << "\n";
  }
  return r.failed() ? violation : ok;
}

// ---------------------------------------------------------------- subcommands

int cmd_quantale_list(const Options& o, std::ostream& out) {
  std::vector<Quantale> qs{Quantale::bool2(), Quantale::cost(), Quantale::lukasiewicz(2), Quantale::three_chain()};
  if (o.format == "json") {
    Json arr = Json::array();
    for (const auto& q : qs) arr.push_back(quantale_to_json(q));
    out << arr.dump(2) << "\n";
    return ok;
  }
  out << "bool2        ({false < true}, and, true)\n"
         "cost         ([0, inf] ordered by >=, +, 0)\n"
         "lukasiewicz  {0, 1/n, ..., 1}, max(0, x + y - 1), unit 1; params.levels = n >= 2\n"
         "three_chain  {bot < k < top}, unit k, top (x) top = top\n";
  return ok;
}

int cmd_check(const Options& o, std::ostream& out) {
  VCategory x = load_category(o.category);
  Classification c = classify(x);
  if (o.format == "json") {
    Json j{{"valid", true}, {"quantale", x.quantale().name()}, {"size", x.size()},
           {"symmetric", c.symmetric}, {"separated", c.separated}};
    out << j.dump(2) << "\n";
  } else {
    out << "valid V-category over " << x.quantale().name() << " with " << x.size() << " elements\n"
        << "symmetric: " << (c.symmetric ? "yes" : "no") << "\n"
        << "separated: " << (c.separated ? "yes" : "no") << "\n";
  }
  return ok;
}

int cmd_hausdorff(const Options& o, std::ostream& out) {
  VCategory x = load_category(o.category);
  HausdorffCategory h(x, parse_hausdorff_variant(o.variant), caps_for(o));
  const Quantale& q = x.quantale();
  if (!o.pairs.empty()) {
    auto comma = o.pairs.find(',');
    if (comma == std::string::npos) throw ParseError("--pairs takes A,B with labels of a set joined by '+'");
    Subset a = parse_labels(x.carrier(), o.pairs.substr(0, comma));
    Subset b = parse_labels(x.carrier(), o.pairs.substr(comma + 1));
    Value v = h.value(a, b);
    if (o.format == "json") {
      out << Json{{"A", subset_labels(x.carrier(), a)}, {"B", subset_labels(x.carrier(), b)},
                  {"value", value_to_json(q, v)}}.dump(2)
          << "\n";
    } else {
      out << q.format(v) << "\n";
    }
    return ok;
  }
  VCategory hx = h.materialize(caps_for(o));
  if (o.format == "json") {
    out << category_to_json(hx).dump(2) << "\n";
    return ok;
  }
  for (std::size_t i = 0; i < hx.size(); ++i) {
    for (std::size_t j = 0; j < hx.size(); ++j) {
      out << "h(" << hx.label(i) << ", " << hx.label(j) << ") = " << q.format(hx(i, j)) << "\n";
    }
  }
  return ok;
}

int cmd_htilde(const Options& o, std::ostream& out) {
  VModule phi = load_module(o.module);
  Subset a = parse_labels(phi.source().carrier(), o.a);
  Subset b = parse_labels(phi.target().carrier(), o.b);
  Value v = htilde(phi, a, b);
  const Quantale& q = phi.quantale();
  if (o.format == "json") {
    out << Json{{"value", value_to_json(q, v)}}.dump(2) << "\n";
  } else {
    out << q.format(v) << "\n";
  }
  return ok;
}

// |u - v| <= tol in real terms for cost values, equality otherwise.
bool matches(const Quantale& q, const Value& got, const Value& want, const Rational& tol) {
  if (!q.is_cost()) return got == want;
  if (got.is_infinite() || want.is_infinite()) return got == want;
  Rational d = got.amount() - want.amount();
  return abs(d) <= tol;
}

int cmd_gromov(const Options& o, std::ostream& out, std::ostream& err) {
  VCategory x = load_category(o.x);
  VCategory y = load_category(o.y);
  if (o.swap) std::swap(x, y);
  const Quantale& q = x.quantale();
  Caps caps = caps_for(o);
  GromovVariant variant = parse_gromov_variant(o.gvariant);
  FunctorKind k = parse_functor_kind(o.k);
  GromovStrategy strategy = o.strategy == "auto"
                                ? (q.is_cost() ? GromovStrategy::optimize : GromovStrategy::enumerate)
                                : parse_gromov_strategy(o.strategy);
  Value value;
  Json doc;
  if (o.symmetrize) {
    if (variant == GromovVariant::sym_pair) {
      GromovResult f = gromov({x, y, variant, k, strategy, Evaluation::direct}, caps);
      GromovResult b = gromov({y, x, variant, k, strategy, Evaluation::direct}, caps);
      value = q.meet(f.value, b.value);
    } else {
      value = symmetrized_distance(x, y, variant, k, strategy, caps);
    }
    doc = Json{{"value", value_to_json(q, value)}, {"symmetrized", true}};
  } else {
    GromovResult r = gromov({x, y, variant, k, strategy, Evaluation::direct}, caps);
    value = r.value;
    doc = result_to_json(r, q);
  }
  if (o.format == "json") {
    out << doc.dump(2) << "\n";
  } else {
    out << q.format(value) << "\n";
  }
  if (!o.expect.empty()) {
    Value want = q.parse(o.expect);
    Rational tol = o.tol.empty() ? (q.is_cost() && strategy == GromovStrategy::optimize ? Rational(1, 1000000) : Rational(0))
                                 : parse_rational(o.tol);
    if (!matches(q, value, want, tol)) {
      err << "expected " << q.format(want) << " (tolerance " << format_fraction(tol) << "), got "
          << q.format(value) << "\n";
      return violation;
    }
  }
  return ok;
}

// ---------------------------------------------------------------- laws

std::vector<VCategory> load_corpus(const std::string& dir) {
  std::vector<fs::path> files;
  for (const auto& e : fs::directory_iterator(dir)) {
    if (e.is_regular_file() && e.path().extension() == ".json") files.push_back(e.path());
  }
  std::sort(files.begin(), files.end());
  std::vector<VCategory> out;
  for (const auto& f : files) {
    Json j = read_json_file(f);
    if (!j.is_object() || !j.contains("structure") || j.value("invalid", false)) continue;
    try {
      out.push_back(category_from_json(j));
    } catch (const LawViolation&) {
      // Deliberately broken fixtures are not part of the law corpus.
    }
  }
  return out;
}

std::map<std::string, std::vector<VCategory>> by_quantale(const std::vector<VCategory>& cats) {
  std::map<std::string, std::vector<VCategory>> out;
  for (const auto& c : cats) out[c.quantale().name()].push_back(c);
  return out;
}

std::vector<Quantale> chosen_quantales(const Options& o, std::vector<Quantale> defaults) {
  if (o.quantale.empty()) return defaults;
  std::string name = o.quantale;
  std::map<std::string, long long> params;
  if (auto p = name.find('('); p != std::string::npos) {
    params["levels"] = std::stoll(name.substr(p + 1));
    name = name.substr(0, p);
  }
  return {Quantale::make_builtin(name, params)};
}

std::vector<VCategory> random_corpus(const Quantale& q, std::size_t count, std::size_t max_n, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<VCategory> out;
  std::uniform_int_distribution<std::size_t> size(1, max_n);
  for (std::size_t i = 0; i < count; ++i) out.push_back(random_category(q, size(rng), rng));
  return out;
}

int cmd_laws(const Options& o, std::ostream& out) {
  std::string suite = o.suite;
  std::string family;
  if (auto dot = suite.find('.'); dot != std::string::npos) {
    family = suite.substr(0, dot);
    suite = suite.substr(dot + 1);
  }
  std::vector<VCategory> given;
  if (!o.corpus.empty()) given = load_corpus(o.corpus);
  int code = ok;
  auto emit = [&](const LawReport& r) { code = std::max(code, print_report(r, o, out)); };

  if (family.empty() || family == "quantale") {
    if (suite == "quantale" || suite == "laws") {
      for (const auto& q : chosen_quantales(o, {Quantale::bool2(), Quantale::three_chain(), Quantale::lukasiewicz(4),
                                                Quantale::cost()})) {
        LawCheckOptions lo;
        lo.seed = o.seed;
        if (!q.is_finite()) lo.mode = LawCheckMode::sampled;
        if (o.samples) lo.samples = o.samples;
        LawReport r = check_quantale_laws(q, lo);
        r.suite = "quantale(" + q.name() + ")";
        emit(r);
      }
      return code;
    }
  }

  auto hsuite = parse_hausdorff_suite(suite);
  auto psuite = parse_presheaf_suite(suite);
  auto gsuite = parse_gromov_suite(suite);
  if (family == "presheaf") hsuite.reset();
  if (family == "hausdorff") psuite.reset();
  if (family == "gromov") hsuite.reset(), psuite.reset();
  if (!family.empty() && family != "hausdorff" && family != "presheaf" && family != "gromov" && family != "quantale") {
    throw ParseError("unknown suite family '" + family + "'", "--suite");
  }

  if (hsuite || (psuite && !gsuite)) {
    std::vector<VCategory> cats = given;
    if (cats.empty()) {
      for (const auto& q : chosen_quantales(o, {Quantale::bool2(), Quantale::lukasiewicz(2)})) {
        auto part = random_corpus(q, 20, 3, o.seed);
        cats.insert(cats.end(), part.begin(), part.end());
      }
    }
    for (auto& [name, group] : by_quantale(cats)) {
      std::vector<VCategory> partners;
      const Quantale& q = group.front().quantale();
      if (q.is_finite()) partners = enumerate_categories_upto(q, 1);
      LawReport total;
      total.suite = std::string(hsuite ? "hausdorff." : "presheaf.") + suite + "(" + name + ")";
      for (const auto& x : group) {
        if (hsuite) {
          HausdorffLawOptions ho;
          ho.seed = o.seed;
          if (o.samples) ho.samples = o.samples;
          if (x.size() <= 2) ho.partners = partners;
          LawReport r = check_hausdorff_laws(x, *hsuite, ho);
          if (r.status == LawStatus::skipped) {
            total.skip(r.skip_reason);
            break;
          }
          total.absorb(r);
        } else {
          PresheafLawOptions po;
          if (x.size() <= 2) po.partners = partners;
          total.absorb(check_presheaf_laws(x, *psuite, po));
        }
        if (total.failed()) break;
      }
      emit(total);
    }
    return code;
  }

  if (gsuite) {
    std::map<std::string, std::vector<VCategory>> groups;
    if (!given.empty()) {
      groups = by_quantale(given);
    } else {
      bool algebraic = *gsuite == GromovSuite::monoid || *gsuite == GromovSuite::monoid_tensor ||
                       *gsuite == GromovSuite::monoid_product || *gsuite == GromovSuite::monoid_coproduct ||
                       *gsuite == GromovSuite::homomorphism;
      std::vector<Quantale> qs = algebraic ? chosen_quantales(o, {Quantale::bool2(), Quantale::cost()})
                                           : chosen_quantales(o, {Quantale::bool2()});
      for (const auto& q : qs) {
        groups[q.name()] = q.is_finite() ? enumerate_categories_upto(q, 2) : random_corpus(q, 6, 2, o.seed);
      }
    }
    for (auto& [name, group] : groups) {
      GromovLawOptions go;
      go.seed = o.seed;
      go.sample_pairs = o.samples;
      LawReport r = check_gromov_laws(group, *gsuite, go);
      r.suite += "(" + name + ")";
      emit(r);
    }
    return code;
  }
  throw ParseError("unknown suite '" + o.suite + "'", "--suite");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Quantale-enriched categories: Hausdorff structures, lax extensions and Gromov distances", "vqcat"};
  app.require_subcommand(1);
  app.add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--max-enum", o.max_enum, "Cap on enumerated candidates")->check(CLI::PositiveNumber);

  auto* quantale = app.add_subcommand("quantale", "Builtin quantales");
  auto* qlist = quantale->add_subcommand("list", "List the builtin quantales");
  quantale->require_subcommand(1);

  auto* check = app.add_subcommand("check", "Validate a V-category file");
  check->add_option("--category", o.category, "Category JSON")->required();

  auto* hausdorff = app.add_subcommand("hausdorff", "Hausdorff structure on subsets");
  hausdorff->add_option("--category", o.category, "Category JSON")->required();
  hausdorff->add_option("--variant", o.variant, "plain, sym or down")->check(CLI::IsMember({"plain", "sym", "down"}));
  hausdorff->add_option("--pairs", o.pairs, "A,B with the labels of each set joined by '+'");

  auto* ht = app.add_subcommand("htilde", "Extension of a module to subsets");
  ht->add_option("--module", o.module, "Module JSON")->required();
  ht->add_option("--a", o.a, "Labels of A, comma separated")->required();
  ht->add_option("--b", o.b, "Labels of B, comma separated")->required();

  auto* gr = app.add_subcommand("gromov", "Gromov distance between two V-categories");
  gr->add_option("--x", o.x, "Category JSON for X")->required();
  gr->add_option("--y", o.y, "Category JSON for Y")->required();
  gr->add_option("--variant", o.gvariant, "plain, sym-pair or sym-mod")
      ->check(CLI::IsMember({"plain", "sym-pair", "sym-mod", "sym_pair", "sym_mod"}));
  gr->add_option("--strategy", o.strategy, "enumerate, optimize, gluing or auto")
      ->check(CLI::IsMember({"auto", "enumerate", "optimize", "gluing"}));
  gr->add_option("--k", o.k, "H, H_down or H_sym")->check(CLI::IsMember({"H", "H_down", "H_sym", "plain", "down", "sym"}));
  gr->add_flag("--symmetrize", o.symmetrize, "Meet of both directions");
  gr->add_flag("--swap", o.swap, "Exchange X and Y");
  gr->add_option("--expect", o.expect, "Expected value literal");
  gr->add_option("--tol", o.tol, "Tolerance for --expect over cost");

  auto* laws = app.add_subcommand("laws", "Run a law suite");
  laws->add_option("--suite", o.suite, "Suite name, optionally prefixed by its family")->required();
  laws->add_option("--corpus", o.corpus, "Directory of category JSON files")->check(CLI::ExistingDirectory);
  laws->add_option("--quantale", o.quantale, "Builtin quantale for the generated corpus");
  laws->add_option("--seed", o.seed, "Seed for sampled checks");
  laws->add_option("--samples", o.samples, "Sample count (0 = suite default)");

  for (auto* sub : {check, hausdorff, ht, gr, laws}) {
    sub->add_option("--format", o.format, "Output format")->check(CLI::IsMember({"text", "json"}));
    sub->add_option("--max-enum", o.max_enum, "Cap on enumerated candidates")->check(CLI::PositiveNumber);
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << (app.get_subcommands().empty() ? app.help() : app.get_subcommands().back()->help());
      return ok;
    }
    err << "error: " << e.what() << "\n";
    return input_error;
  }

  try {
    if (*qlist) return cmd_quantale_list(o, out);
    if (*check) return cmd_check(o, out);
    if (*hausdorff) return cmd_hausdorff(o, out);
    if (*ht) return cmd_htilde(o, out);
    if (*gr) return cmd_gromov(o, out, err);
    if (*laws) return cmd_laws(o, out);
  } catch (const LawViolation& e) {
    const auto& cx = e.counterexample();
    err << "error: " << cx.law << " fails: " << cx.lhs << " " << cx.relation << " " << cx.rhs;
    if (!cx.inputs.empty()) {
      err << " at (";
      for (std::size_t i = 0; i < cx.inputs.size(); ++i) err << (i ? ", " : "") << cx.inputs[i].second;
      err << ")";
    }
    err << "\n";
    return input_error;
  } catch (const CapExceeded& e) {
    err << "error: cap " << e.cap_name() << " exceeded (" << e.requested() << " > " << e.limit() << ")\n";
    return input_error;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace vqcat::cli
