#include "vqcat/caps.hpp"

#include <cstdlib>
#include <limits>
#include <string>

#include "vqcat/errors.hpp"

namespace vqcat {

CapExceeded::CapExceeded(std::string cap_name, std::size_t limit, std::size_t requested)
    : Error("cap '" + cap_name + "' exceeded: requested " + std::to_string(requested) +
            ", limit " + std::to_string(limit)),
      cap_name_(std::move(cap_name)),
      limit_(limit),
      requested_(requested) {}

ParseError::ParseError(const std::string& message, std::string location)
    : Error(location.empty() ? message : location + ": " + message),
      message_(message),
      location_(std::move(location)) {}

const Caps& default_caps() {
  static const Caps caps = [] {
    Caps c;
    if (const char* env = std::getenv("VQCAT_MAX_ENUM")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end != env && *end == '\0' && v > 0) c.enumeration = static_cast<std::size_t>(v);
    }
    return c;
  }();
  return caps;
}

void require_within(const char* cap_name, std::size_t limit, std::size_t requested) {
  if (requested > limit) throw CapExceeded(cap_name, limit, requested);
}

std::size_t saturating_pow(std::size_t base, std::size_t exponent) {
  constexpr auto max = std::numeric_limits<std::size_t>::max();
  std::size_t out = 1;
  for (std::size_t i = 0; i < exponent; ++i) {
    if (base != 0 && out > max / base) return max;
    out *= base;
  }
  return out;
}

}  // namespace vqcat
