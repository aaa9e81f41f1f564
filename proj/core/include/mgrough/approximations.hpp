#pragma once

#include <cstddef>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "mgrough/relations.hpp"

namespace mgrough {

/// Default bound on universes enumerated over all 2^n subsets.
inline constexpr std::size_t kDefaultExhaustiveLimit = 20;

/// Deduplicated family of subsets in ascending numeric order of their bit patterns.
class SetFamily {
 public:
  SetFamily() = default;
  SetFamily(std::size_t width, std::vector<Subset> members);

  std::size_t width() const noexcept { return width_; }
  std::size_t size() const noexcept { return members_.size(); }
  const std::vector<Subset>& members() const noexcept { return members_; }
  const Subset& operator[](std::size_t i) const { return members_[i]; }
  bool contains(const Subset& s) const;
  /// Position of `s`, or size() when absent.
  std::size_t index_of(const Subset& s) const;

  auto begin() const noexcept { return members_.begin(); }
  auto end() const noexcept { return members_.end(); }

  friend bool operator==(const SetFamily&, const SetFamily&) = default;

 private:
  std::size_t width_ = 0;
  std::vector<Subset> members_;
};

using SetOperator = std::function<Subset(const Subset&)>;

// Single-relation approximations. The span overloads take one neighbourhood
// per element; the Tolerance/Equivalence overloads forward to them.

Subset lower(std::span<const Subset> neighborhoods, const Subset& x);
Subset upper(std::span<const Subset> neighborhoods, const Subset& x);

/// X_T = { x | T(x) ⊆ X }.
Subset lower_t(const Tolerance& t, const Subset& x);
/// X^T = { x | T(x) ∩ X ≠ ∅ }.
Subset upper_t(const Tolerance& t, const Subset& x);
Subset lower_e(const Equivalence& e, const Subset& x);
Subset upper_e(const Equivalence& e, const Subset& x);

/// ◇X = (X^T)_T, a closure operator.
Subset diamond(const Tolerance& t, const Subset& x);
/// □X = (X_T)^T, an interior operator.
Subset box(const Tolerance& t, const Subset& x);

// Multigranular approximations for a pair of equivalences.

/// X_{P+Q} = X_P ∪ X_Q.
Subset opt_lower(const Equivalence& p, const Equivalence& q, const Subset& x);
/// X^{P+Q} = X^P ∩ X^Q.
Subset opt_upper(const Equivalence& p, const Equivalence& q, const Subset& x);
/// X_{P∪Q}, computed as X_P ∩ X_Q.
Subset pess_lower(const Equivalence& p, const Equivalence& q, const Subset& x);
/// X^{P∪Q}, computed as X^P ∪ X^Q.
Subset pess_upper(const Equivalence& p, const Equivalence& q, const Subset& x);

/// Image of `op` over every subset of a `width`-element universe.
/// Throws SizeLimitExceeded when width > limit.
SetFamily image_family(std::size_t width, const SetOperator& op,
                       std::size_t limit = kDefaultExhaustiveLimit);

/// ℘(U)^{P+Q}.
SetFamily closure_system_opt(const Equivalence& p, const Equivalence& q,
                             std::size_t limit = kDefaultExhaustiveLimit);
/// ℘(U)_{P+Q}.
SetFamily interior_system_opt(const Equivalence& p, const Equivalence& q,
                              std::size_t limit = kDefaultExhaustiveLimit);
/// ℘(U)^T, the interior system of □.
SetFamily upper_system(const Tolerance& t, std::size_t limit = kDefaultExhaustiveLimit);
/// ℘(U)_T, the closure system of ◇.
SetFamily lower_system(const Tolerance& t, std::size_t limit = kDefaultExhaustiveLimit);

/// Unions of E-classes, built directly from the classes.
SetFamily sat(const Equivalence& e, std::size_t limit = kDefaultExhaustiveLimit);
/// Sets with X_T = X^T, built as Sat of the connected components of T.
SetFamily definable(const Tolerance& t, std::size_t limit = kDefaultExhaustiveLimit);

/// X equals its P∩Q upper approximation.
bool pq_definable_check(const Equivalence& p, const Equivalence& q, const Subset& x);

/// One row of the full approximation table of a relation pair.
struct ApproximationRow {
  Subset x;
  Subset lower_p, lower_q, upper_p, upper_q;
  Subset opt_lower, opt_upper;
  Subset pess_lower, pess_upper;
};

std::vector<ApproximationRow> approximation_table(const Equivalence& p, const Equivalence& q,
                                                  std::size_t limit = kDefaultExhaustiveLimit);

/// Tab-separated table with the header
/// X, X_P, X_Q, X^P, X^Q, X_{P+Q}, X^{P+Q}, X_{P∪Q}, X^{P∪Q}
/// and one row per subset in ascending numeric order.
std::string approximation_table_tsv(const Equivalence& p, const Equivalence& q,
                                    std::size_t limit = kDefaultExhaustiveLimit);

inline constexpr const char* kTableHeader =
    "X\tX_P\tX_Q\tX^P\tX^Q\tX_{P+Q}\tX^{P+Q}\tX_{P∪Q}\tX^{P∪Q}";

}  // namespace mgrough
