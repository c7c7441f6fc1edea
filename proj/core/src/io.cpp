#include "vqcat/io.hpp"

#include <charconv>
#include <fstream>

namespace vqcat {

namespace {

std::string at(const std::string& where, const std::string& key) { return where + "/" + key; }
std::string at(const std::string& where, std::size_t i) { return where + "/" + std::to_string(i); }

const Json& member(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw ParseError("expected an object", where.empty() ? "/" : where);
  auto it = j.find(key);
  if (it == j.end()) throw ParseError(std::string("missing key '") + key + "'", where.empty() ? "/" : where);
  return *it;
}

Matrix matrix_from_json(const Quantale& q, const Json& j, std::size_t rows, std::size_t cols,
                        const std::string& where) {
  if (!j.is_array() || j.size() != rows) {
    throw ParseError("expected " + std::to_string(rows) + " rows", where);
  }
  Matrix m(rows, cols, q.bottom());
  for (std::size_t i = 0; i < rows; ++i) {
    const Json& row = j[i];
    if (!row.is_array() || row.size() != cols) {
      throw ParseError("expected " + std::to_string(cols) + " entries", at(where, i));
    }
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = value_from_json(q, row[k], at(at(where, i), k));
  }
  return m;
}

Json matrix_to_json(const Quantale& q, const Matrix& m) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (std::size_t k = 0; k < m.cols(); ++k) row.push_back(value_to_json(q, m(i, k)));
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace

Json quantale_to_json(const Quantale& q) {
  Json j{{"builtin", q.family()}};
  auto params = q.params();
  if (!params.empty()) {
    Json p = Json::object();
    for (const auto& [k, v] : params) p[k] = v;
    j["params"] = p;
  }
  return j;
}

Quantale quantale_from_json(const Json& j, const std::string& where) {
  if (j.is_string()) return Quantale::make_builtin(j.get<std::string>());
  const Json& name = member(j, "builtin", where);
  if (!name.is_string()) throw ParseError("builtin must be a string", at(where, "builtin"));
  std::map<std::string, long long> params;
  if (auto it = j.find("params"); it != j.end()) {
    if (!it->is_object()) throw ParseError("params must be an object", at(where, "params"));
    for (const auto& [k, v] : it->items()) {
      if (!v.is_number_integer()) throw ParseError("parameter must be an integer", at(at(where, "params"), k));
      params[k] = v.get<long long>();
    }
  }
  try {
    return Quantale::make_builtin(name.get<std::string>(), params);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), at(where, "builtin"));
  }
}

Json value_to_json(const Quantale& q, const Value& v) {
  q.require_member(v);
  if (q.is_cost()) return v.is_infinite() ? Json("inf") : Json(format_decimal(v.amount()));
  if (q.family() == "bool2") return Json(v.level_index() == 1);
  Rational level(v.level_index(), static_cast<unsigned long>(q.size() - 1));
  level.canonicalize();
  return Json(format_fraction(level));
}

Value value_from_json(const Quantale& q, const Json& j, const std::string& where) {
  try {
    if (j.is_boolean()) {
      if (q.family() != "bool2") throw ParseError("booleans are only values of bool2", where);
      return q.level(j.get<bool>() ? 1 : 0);
    }
    std::string text;
    if (j.is_string()) {
      text = j.get<std::string>();
    } else if (j.is_number_integer()) {
      text = std::to_string(j.get<long long>());
    } else if (j.is_number_float()) {
      // Shortest round-trip digits, so 0.1 reads as exactly 1/10.
      char buf[64];
      auto res = std::to_chars(buf, buf + sizeof buf, j.get<double>());
      text.assign(buf, res.ptr);
    } else {
      throw ParseError("expected a value literal", where);
    }
    if (q.is_finite() && q.family() != "bool2") {
      // Chains also accept level fractions i/(n-1).
      if (text != "bot" && text != "k" && text != "top") {
        Rational r = parse_rational(text) * Rational(static_cast<unsigned long>(q.size() - 1));
        if (r.get_den() == 1 && sgn(r) >= 0 && r < q.size()) return q.level(static_cast<unsigned>(r.get_num().get_ui()));
      }
    }
    return q.parse(text);
  } catch (const ParseError& e) {
    if (!e.location().empty()) throw;
    throw ParseError(e.message(), where);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), where);
  }
}

Json category_to_json(const VCategory& x) {
  Json j;
  j["quantale"] = quantale_to_json(x.quantale());
  j["elements"] = x.carrier().labels();
  j["structure"] = matrix_to_json(x.quantale(), x.structure());
  return j;
}

VCategory category_from_json(const Json& j, const std::string& where) {
  Quantale q = quantale_from_json(member(j, "quantale", where), at(where, "quantale"));
  const Json& elems = member(j, "elements", where);
  if (!elems.is_array()) throw ParseError("elements must be an array", at(where, "elements"));
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < elems.size(); ++i) {
    if (!elems[i].is_string()) throw ParseError("labels must be strings", at(at(where, "elements"), i));
    labels.push_back(elems[i].get<std::string>());
  }
  Carrier carrier = [&] {
    try {
      return Carrier(labels);
    } catch (const DomainError& e) {
      throw ParseError(e.what(), at(where, "elements"));
    }
  }();
  Matrix m = matrix_from_json(q, member(j, "structure", where), labels.size(), labels.size(), at(where, "structure"));
  return make_vcategory(std::move(carrier), std::move(m), q);
}

Json module_to_json(const VModule& phi) {
  Json j;
  j["source"] = category_to_json(phi.source());
  j["target"] = category_to_json(phi.target());
  j["matrix"] = matrix_to_json(phi.quantale(), phi.matrix());
  return j;
}

VModule module_from_json(const Json& j, const std::filesystem::path& base_dir, const std::string& where) {
  auto side = [&](const char* key) {
    const Json& s = member(j, key, where);
    if (s.is_string()) return load_category(base_dir / s.get<std::string>());
    return category_from_json(s, at(where, key));
  };
  VCategory x = side("source");
  VCategory y = side("target");
  require_same_quantale(x.quantale(), y.quantale(), "module");
  Matrix m = matrix_from_json(x.quantale(), member(j, "matrix", where), x.size(), y.size(), at(where, "matrix"));
  return make_vmodule(x, y, std::move(m));
}

Json result_to_json(const GromovResult& r, const Quantale& q) {
  Json j;
  j["value"] = value_to_json(q, r.value);
  j["witness"] = r.witness ? module_to_json(*r.witness) : Json(nullptr);
  if (r.witness_back) j["witness_back"] = module_to_json(*r.witness_back);
  if (r.glued) j["glued"] = category_to_json(*r.glued);
  j["attainment"] = r.attainment == Attainment::exact ? "exact" : "gap";
  j["gap"] = sgn(r.gap) < 0 ? Json("inf") : Json(format_decimal(r.gap));
  j["candidates"] = r.candidates;
  return j;
}

Json report_to_json(const LawReport& r) {
  Json j;
  j["suite"] = r.suite;
  j["status"] = to_string(r.status);
  if (r.status == LawStatus::skipped) j["skip_reason"] = r.skip_reason;
  if (r.counterexample) {
    Json inputs = Json::object();
    for (const auto& [k, v] : r.counterexample->inputs) inputs[k] = v;
    j["counterexample"] = {{"law", r.counterexample->law},
                           {"inputs", inputs},
                           {"lhs", r.counterexample->lhs},
                           {"relation", r.counterexample->relation},
                           {"rhs", r.counterexample->rhs}};
  }
  j["instances"] = r.instances;
  j["elapsed_seconds"] = r.elapsed_seconds;
  if (!r.flags.empty()) j["flags"] = r.flags;
  if (!r.notes.empty()) j["notes"] = r.notes;
  return j;
}

Json read_json_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file", path.string());
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(e.what(), path.string() + ":byte " + std::to_string(e.byte));
  }
}

VCategory load_category(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  try {
    return category_from_json(j);
  } catch (const ParseError& e) {
    throw ParseError(e.message(), path.string() + "#" + e.location());
  }
}

VModule load_module(const std::filesystem::path& path) {
  Json j = read_json_file(path);
  try {
    return module_from_json(j, path.parent_path());
  } catch (const ParseError& e) {
    throw ParseError(e.message(), path.string() + "#" + e.location());
  }
}

}  // namespace vqcat
