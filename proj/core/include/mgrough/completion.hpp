#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <functional>
#include <vector>

#include "mgrough/lattice.hpp"

namespace mgrough {

inline constexpr std::size_t kDefaultCompletionLimit = 4096;
inline constexpr std::size_t kDefaultIsomorphismLimit = 2000;

/// Dedekind–MacNeille completion of a finite poset.
struct DmCompletion {
  /// Closed sets ordered by inclusion.
  FiniteLattice lattice;
  /// closed_sets[i] is the subset of poset elements represented by lattice element i.
  /// Ordered by size, then numerically, so the order is a linear extension.
  std::vector<DynBitset> closed_sets;
  /// embedding[x] = lattice index of ↓x.
  std::vector<std::size_t> embedding;
};

/// A^u: common upper bounds of A.
DynBitset upper_bounds(const FinitePoset& poset, const DynBitset& set);
/// A^l: common lower bounds of A.
DynBitset lower_bounds(const FinitePoset& poset, const DynBitset& set);

/// Closed sets A = A^{ul}, enumerated as the intersection closure of the
/// principal down-sets together with the whole poset. Throws
/// SizeLimitExceeded when more than `limit` closed sets appear.
DmCompletion dm_completion(const FinitePoset& poset, std::size_t limit = kDefaultCompletionLimit);

/// Order isomorphism from `a` onto `b` (mapping[i] is the image of a's element i),
/// or nullopt. Backtracking over candidates with matching height, depth,
/// up/down-set sizes and cover degrees. Throws SizeLimitExceeded above `limit`.
std::optional<std::vector<std::size_t>> find_isomorphism(
    const FinitePoset& a, const FinitePoset& b, std::size_t limit = kDefaultIsomorphismLimit);

inline bool is_isomorphic(const FinitePoset& a, const FinitePoset& b) {
  return find_isomorphism(a, b).has_value();
}

struct DotOptions {
  std::string graph_name = "hasse";
  /// Emitted as `// ...` lines right after the opening brace.
  std::vector<std::string> comments;
};

/// Hasse diagram in Graphviz DOT: nodes n0..n{m-1} in index order, edges are
/// covers drawn upward, one `rank=same` group per height. Byte-stable for a
/// given poset and labeller.
std::string to_dot(const FinitePoset& poset, const std::function<std::string(std::size_t)>& label,
                   const DotOptions& options = {});

}  // namespace mgrough
