#pragma once

#include <string>
#include <vector>

#include "mgrough/relations.hpp"
#include "oracles.hpp"

namespace testing_support {

/// Partition from "ab|c" style text; each class is parsed with Universe::parse_set.
inline mgrough::Equivalence eq(const mgrough::Universe& u, const std::string& spec) {
  std::vector<mgrough::Subset> classes;
  std::size_t start = 0;
  while (start <= spec.size()) {
    const auto bar = spec.find('|', start);
    const auto part = spec.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
    if (!part.empty()) classes.push_back(u.parse_set(part));
    if (bar == std::string::npos) break;
    start = bar + 1;
  }
  return mgrough::Equivalence::from_classes(u, classes);
}

inline oracle::Mask mask(const mgrough::Subset& s) { return s.bits(); }

inline mgrough::Subset subset(const mgrough::Universe& u, oracle::Mask m) {
  return mgrough::Subset(u.size(), m);
}

/// Boolean matrix of a relation, read element by element.
inline oracle::Matrix matrix(const mgrough::Equivalence& e) {
  const auto n = e.universe().size();
  oracle::Matrix r(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) r[x][y] = e.relates(x, y);
  }
  return r;
}

inline oracle::Matrix matrix(const mgrough::Tolerance& t) {
  const auto n = t.universe().size();
  oracle::Matrix r(n, std::vector<bool>(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) r[x][y] = t.relation().relates(x, y);
  }
  return r;
}

}  // namespace testing_support
