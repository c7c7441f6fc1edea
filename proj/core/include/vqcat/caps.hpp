#pragma once

#include <cstddef>

namespace vqcat {

/// Size limits for exhaustive constructions. `enumeration` bounds raw candidate
/// counts (|V|^(cells)), the others bound materialized carriers.
struct Caps {
  std::size_t enumeration = std::size_t{1} << 20;
  std::size_t presheaves = 4096;
  /// Largest base carrier for a (lazy) powerset category.
  std::size_t powerset_base = 14;
  /// Largest base carrier whose powerset is materialized with a full matrix.
  std::size_t materialized_powerset_base = 10;
  /// Largest base carrier for double-powerset constructions (HHX).
  std::size_t double_powerset_base = 4;
  std::size_t isomorphism_search = 8;
};

/// Defaults, with VQCAT_MAX_ENUM (if set to a positive integer) replacing
/// `enumeration`. Read once per process.
const Caps& default_caps();

/// Throws CapExceeded when `requested > limit`.
void require_within(const char* cap_name, std::size_t limit, std::size_t requested);

/// base^exponent saturating at SIZE_MAX.
std::size_t saturating_pow(std::size_t base, std::size_t exponent);

}  // namespace vqcat
