#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace vqcat {

enum class LawStatus { pass, fail, skipped };

/// A violated inequality or equation with both sides evaluated. `inputs`
/// holds named, printable arguments sufficient to replay the check.
struct Counterexample {
  std::string law;
  std::vector<std::pair<std::string, std::string>> inputs;
  std::string lhs;
  std::string relation;
  std::string rhs;

  std::string input(const std::string& name) const;
  std::string describe() const;
};

struct LawReport {
  std::string suite;
  LawStatus status = LawStatus::pass;
  std::string skip_reason;
  std::optional<Counterexample> counterexample;
  std::size_t instances = 0;
  double elapsed_seconds = 0.0;
  std::map<std::string, bool> flags;
  std::vector<std::string> notes;

  bool passed() const noexcept { return status == LawStatus::pass; }
  bool failed() const noexcept { return status == LawStatus::fail; }
  bool flag(const std::string& name) const;

  /// Marks the report failed with `cx` unless it already carries a failure.
  void fail(Counterexample cx);
  void skip(std::string reason);
  /// Folds another report into this one: instance counts add up, the first
  /// failure wins, notes are concatenated.
  void absorb(const LawReport& other);

  std::string summary() const;
};

const char* to_string(LawStatus status);

}  // namespace vqcat
