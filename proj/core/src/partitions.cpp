#include "mgrough/partitions.hpp"

#include <algorithm>

namespace mgrough {

std::vector<std::vector<std::size_t>> restricted_growth_strings(std::size_t n) {
  std::vector<std::vector<std::size_t>> out;
  std::vector<std::size_t> a(n, 0);
  std::vector<std::size_t> prefix_max(n, 0);  // max of a[0..i-1], with 0 for i = 0
  out.push_back(a);
  if (n == 0) return out;
  while (true) {
    // Rightmost position that can still grow; a[i] may reach prefix_max[i] + 1.
    std::size_t i = n - 1;
    while (i > 0 && a[i] > prefix_max[i]) --i;
    if (i == 0) return out;
    ++a[i];
    for (std::size_t j = i + 1; j < n; ++j) {
      a[j] = 0;
      prefix_max[j] = std::max(prefix_max[j - 1], a[j - 1]);
    }
    out.push_back(a);
  }
}

std::vector<Equivalence> all_partitions(const Universe& universe) {
  std::vector<Equivalence> out;
  for (const auto& rgs : restricted_growth_strings(universe.size())) {
    out.push_back(Equivalence::from_labels(universe, rgs));
  }
  return out;
}

std::vector<Tolerance> all_tolerances(const Universe& universe) {
  const auto n = universe.size();
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) slots.emplace_back(i, j);
  }
  if (slots.size() > 20) throw SizeLimitExceeded("tolerance enumeration edges", slots.size(), 20);
  std::vector<Tolerance> out;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << slots.size()); ++mask) {
    std::vector<std::pair<std::size_t, std::size_t>> edges;
    for (std::size_t k = 0; k < slots.size(); ++k) {
      if (mask >> k & 1) edges.push_back(slots[k]);
    }
    out.push_back(Tolerance::from_edges(universe, edges));
  }
  return out;
}

Subset random_subset(std::size_t width, std::mt19937_64& rng) {
  return Subset(width, rng() & Subset::mask(width));
}

Equivalence random_partition(const Universe& universe, std::mt19937_64& rng) {
  std::vector<std::size_t> labels(universe.size());
  std::size_t classes = 0;
  for (auto& label : labels) {
    label = static_cast<std::size_t>(rng() % (classes + 1));
    if (label == classes) ++classes;
  }
  return Equivalence::from_labels(universe, labels);
}

Tolerance random_tolerance(const Universe& universe, std::mt19937_64& rng, unsigned percent) {
  std::vector<std::pair<std::size_t, std::size_t>> edges;
  for (std::size_t i = 0; i < universe.size(); ++i) {
    for (std::size_t j = i + 1; j < universe.size(); ++j) {
      if (rng() % 100 < percent) edges.emplace_back(i, j);
    }
  }
  return Tolerance::from_edges(universe, edges);
}

}  // namespace mgrough
