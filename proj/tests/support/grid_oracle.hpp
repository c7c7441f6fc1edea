#pragma once

#include <optional>

#include "vqcat/gromov.hpp"

namespace vqcat::testing {

/// Brute-force Gromov value over the cost quantale: every module entry ranges
/// over {0, 1/grid, ..., D} (D = largest entry of a plus largest entry of b),
/// searched depth-first with bounds propagated from the linear constraints.
/// Returns the real minimum of the objective, or nullopt when no grid point
/// is feasible. All structure entries must be finite multiples of 1/grid.
std::optional<Rational> grid_gromov(const VCategory& x, const VCategory& y, GromovVariant variant,
                                    unsigned grid);

}  // namespace vqcat::testing
