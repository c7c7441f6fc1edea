#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "vqcat/caps.hpp"
#include "vqcat/hausdorff.hpp"
#include "vqcat/vmodule.hpp"

namespace vqcat {

/// Labels "x1", ..., "xn".
Carrier default_carrier(std::size_t n, const std::string& prefix = "x");

/// Every V-category structure on an n-element carrier over a finite quantale,
/// in lexicographic order of the row-major matrix.
std::vector<VCategory> enumerate_categories(const Quantale& q, std::size_t n,
                                            const Caps& caps = default_caps());

/// All categories with 1..max_n elements (0..max_n with `include_empty`).
std::vector<VCategory> enumerate_categories_upto(const Quantale& q, std::size_t max_n,
                                                 bool include_empty = false,
                                                 const Caps& caps = default_caps());

/// A random matrix closed under composition with itself. Over the cost
/// quantale entries start in {0, 1/2, ..., 4} (with a few inf when
/// `allow_infinite`) before the min-plus closure.
VCategory random_category(const Quantale& q, std::size_t n, std::mt19937_64& rng,
                          bool allow_infinite = false);

/// b . r . a for a random relation r, hence a module.
VModule random_module(const VCategory& x, const VCategory& y, std::mt19937_64& rng);

Subset random_subset(std::size_t n, std::mt19937_64& rng);

/// Random value of a finite quantale, or of cost from {0, 1/2, ..., 4}.
Value random_value(const Quantale& q, std::mt19937_64& rng);

/// Relabels the carrier, keeping the structure.
VCategory relabel(const VCategory& x, const std::string& prefix);

/// A seeded random permutation of 0..n-1.
std::vector<std::size_t> random_permutation(std::size_t n, std::mt19937_64& rng);

}  // namespace vqcat
