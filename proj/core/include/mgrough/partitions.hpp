#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <vector>

#include "mgrough/relations.hpp"

namespace mgrough {

/// Fixed default seed for every randomized check.
inline constexpr std::uint64_t kDefaultSeed = 20240607;

/// All restricted-growth strings of length n in lexicographic order: a[0] = 0
/// and a[i] ≤ 1 + max(a[0..i-1]). There are Bell(n) of them; n = 0 yields one
/// empty string.
std::vector<std::vector<std::size_t>> restricted_growth_strings(std::size_t n);

/// Every partition of the universe, in restricted-growth order.
std::vector<Equivalence> all_partitions(const Universe& universe);

/// Every tolerance on the universe (2^(n(n-1)/2) of them), ordered by the
/// bit pattern of the edge set over pairs (i<j) in row-major order.
std::vector<Tolerance> all_tolerances(const Universe& universe);

// Seeded generators. They draw raw 64-bit words and reduce them with `%`, so
// a seed reproduces the same values with every standard library.

Subset random_subset(std::size_t width, std::mt19937_64& rng);
/// Element i joins one of the existing classes or opens a new one, uniformly.
Equivalence random_partition(const Universe& universe, std::mt19937_64& rng);
/// Each unordered pair becomes an edge with probability percent/100.
Tolerance random_tolerance(const Universe& universe, std::mt19937_64& rng,
                           unsigned percent = 40);

}  // namespace mgrough
