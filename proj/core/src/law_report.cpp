#include "vqcat/law_report.hpp"

#include <sstream>

namespace vqcat {

const char* to_string(LawStatus status) {
  switch (status) {
    case LawStatus::pass: return "pass";
    case LawStatus::fail: return "fail";
    case LawStatus::skipped: return "skipped";
  }
  return "?";
}

std::string Counterexample::input(const std::string& name) const {
  for (const auto& [k, v] : inputs) {
    if (k == name) return v;
  }
  return {};
}

std::string Counterexample::describe() const {
  std::ostringstream out;
  out << law << ": " << lhs << ' ' << relation << ' ' << rhs;
  if (!inputs.empty()) {
    out << " [";
    for (std::size_t i = 0; i < inputs.size(); ++i) {
      if (i) out << ", ";
      out << inputs[i].first << '=' << inputs[i].second;
    }
    out << ']';
  }
  return out.str();
}

bool LawReport::flag(const std::string& name) const {
  auto it = flags.find(name);
  return it != flags.end() && it->second;
}

void LawReport::fail(Counterexample cx) {
  if (status == LawStatus::fail) return;
  status = LawStatus::fail;
  counterexample = std::move(cx);
}

void LawReport::skip(std::string reason) {
  if (status == LawStatus::fail) return;
  status = LawStatus::skipped;
  skip_reason = std::move(reason);
}

void LawReport::absorb(const LawReport& other) {
  instances += other.instances;
  if (other.status == LawStatus::fail && status != LawStatus::fail) {
    status = LawStatus::fail;
    counterexample = other.counterexample;
  }
  for (const auto& n : other.notes) notes.push_back(n);
}

std::string LawReport::summary() const {
  std::ostringstream out;
  out << suite << ": " << to_string(status) << " (" << instances << " instances";
  if (elapsed_seconds > 0) out << ", " << elapsed_seconds << " s";
  out << ')';
  if (status == LawStatus::skipped) out << " - " << skip_reason;
  if (counterexample) out << "\n  counterexample: " << counterexample->describe();
  return out.str();
}

}  // namespace vqcat
