#pragma once

#include <filesystem>
#include <string>

#include <json.hpp>

#include "vqcat/gromov.hpp"
#include "vqcat/law_report.hpp"
#include "vqcat/quantale.hpp"
#include "vqcat/vmodule.hpp"

namespace vqcat {

using Json = nlohmann::ordered_json;

/// {"builtin": name, "params": {"levels": n}}; params only for lukasiewicz.
Json quantale_to_json(const Quantale& q);
Quantale quantale_from_json(const Json& j, const std::string& where = "");

/// Booleans for bool2, decimal strings or "inf" for cost (with a "p/q"
/// string when no terminating decimal exists), level fractions for chains.
Json value_to_json(const Quantale& q, const Value& v);
/// Accepts the emitted forms plus JSON numbers.
Value value_from_json(const Quantale& q, const Json& j, const std::string& where = "");

/// {"quantale": ..., "elements": [...], "structure": [[...]]}, validated
/// with make_vcategory (LawViolation on a failed law).
Json category_to_json(const VCategory& x);
VCategory category_from_json(const Json& j, const std::string& where = "");

/// {"source": ..., "target": ..., "matrix": [[...]]}. Source and target may
/// be inline objects or paths relative to `base_dir`.
Json module_to_json(const VModule& phi);
VModule module_from_json(const Json& j, const std::filesystem::path& base_dir = {}, const std::string& where = "");

/// {"value", "witness", "attainment", "gap"}, plus "witness_back" for pairs.
Json result_to_json(const GromovResult& r, const Quantale& q);

Json report_to_json(const LawReport& r);

/// Reads and parses a file; ParseError carries the file name and JSON location.
Json read_json_file(const std::filesystem::path& path);
VCategory load_category(const std::filesystem::path& path);
VModule load_module(const std::filesystem::path& path);

}  // namespace vqcat
