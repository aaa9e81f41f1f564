#pragma once

#include <compare>
#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mgrough/approximations.hpp"
#include "mgrough/completion.hpp"
#include "mgrough/lattice.hpp"

namespace mgrough {

enum class SystemKind {
  equivalence,     ///< RS(E)
  tolerance,       ///< RS(T)
  optimistic,      ///< RS(P+Q)
  pessimistic,     ///< RS(P∪Q)
  irs_optimistic,  ///< IRS(P+Q)
};

std::string_view to_string(SystemKind kind);

/// (lower, upper) approximation pair; ordered canonically by lower then upper bits.
struct RoughPair {
  Subset lower;
  Subset upper;

  /// Componentwise inclusion.
  bool leq(const RoughPair& other) const {
    return lower.is_subset_of(other.lower) && upper.is_subset_of(other.upper);
  }

  friend bool operator==(const RoughPair&, const RoughPair&) = default;
  friend std::strong_ordering operator<=>(const RoughPair& a, const RoughPair& b) {
    if (auto c = a.lower <=> b.lower; c != 0) return c;
    return a.upper <=> b.upper;
  }
};

/// "(a, ab)" for single-character labels, "({1,2}, {1,2,4})" otherwise; ∅ is "-".
std::string format_pair(const Universe& universe, const RoughPair& pair);

/// Deduplicated pairs in canonical order, with the componentwise order
/// materialized and the approximation operators that generated them.
class RoughSystem {
 public:
  /// Throws InvalidRelation if some lower ⊄ upper or (∅,∅)/(U,U) is missing.
  RoughSystem(Universe universe, SystemKind kind, std::vector<RoughPair> pairs,
              SetOperator lower_op, SetOperator upper_op,
              std::optional<Tolerance> tolerance = std::nullopt);

  const Universe& universe() const noexcept { return universe_; }
  SystemKind kind() const noexcept { return kind_; }
  const std::vector<RoughPair>& pairs() const noexcept { return pairs_; }
  std::size_t size() const noexcept { return pairs_.size(); }
  const RoughPair& operator[](std::size_t i) const { return pairs_[i]; }
  const FinitePoset& order() const noexcept { return order_; }

  std::optional<std::size_t> index_of(const RoughPair& pair) const;
  bool contains(const RoughPair& pair) const { return index_of(pair).has_value(); }

  /// Lower/upper approximation the system is built from (X_{P+Q}, X_T, ...).
  Subset lower_op(const Subset& x) const { return lower_op_(x); }
  Subset upper_op(const Subset& x) const { return upper_op_(x); }
  /// The tolerance behind equivalence, tolerance and pessimistic systems.
  const std::optional<Tolerance>& tolerance() const noexcept { return tolerance_; }

  /// ∼(A,B) = (B^c, A^c) as an index map; nullopt if the system is not closed under it.
  std::optional<std::vector<std::size_t>> polarity() const;

  /// "(lower,upper)" using the universe's compact set rendering.
  std::string format_pair(std::size_t i) const;

 private:
  Universe universe_;
  SystemKind kind_;
  std::vector<RoughPair> pairs_;
  FinitePoset order_;
  SetOperator lower_op_;
  SetOperator upper_op_;
  std::optional<Tolerance> tolerance_;
};

RoughSystem build_rs_equivalence(const Equivalence& e,
                                 std::size_t limit = kDefaultExhaustiveLimit);
RoughSystem build_rs_tolerance(const Tolerance& t, std::size_t limit = kDefaultExhaustiveLimit);
/// RS(P+Q) for SystemKind::optimistic, RS(P∪Q) for pessimistic, RS(P∩Q) for
/// equivalence and IRS(P+Q) for irs_optimistic.
RoughSystem build_rs(SystemKind kind, const Equivalence& p, const Equivalence& q,
                     std::size_t limit = kDefaultExhaustiveLimit);
/// Pairs (A,B) ∈ ℘(U)_{P+Q} × ℘(U)^{P+Q} with A ⊆ B and (B∖A) ∩ (Σ_P ∪ Σ_Q) = ∅.
RoughSystem build_irs(const Equivalence& p, const Equivalence& q,
                      std::size_t limit = kDefaultExhaustiveLimit);

/// Every pair of `rs` occurs in `irs`.
bool verify_rs_containment(const RoughSystem& rs, const RoughSystem& irs);
bool verify_rs_containment(const Equivalence& p, const Equivalence& q,
                           std::size_t limit = kDefaultExhaustiveLimit);

/// Evaluates the closed-form meet and join of the family of system elements
/// (indices) for the system's kind, and checks that each value is a member
/// and is the actual infimum/supremum in the order. Witness: the family.
Check meet_join_formula_check(const RoughSystem& system, std::span<const std::size_t> family);

/// The system is closed under ∼ and ∼ is a polarity of its order.
Check check_polarity_rs(const RoughSystem& system);

/// IRS is closed under the product joins (∪A, (∪B)^{P+Q}) and meets
/// ((∩A)_{P+Q}, ∩B), these are its joins and meets, and both projections are
/// onto the interior and closure systems. Witness: the offending pair of indices.
Check check_subdirect(const RoughSystem& irs, const SetFamily& interior, const SetFamily& closure);
Check check_subdirect(const Equivalence& p, const Equivalence& q,
                      std::size_t limit = kDefaultExhaustiveLimit);

struct CompletionCheck {
  DenseResult dense;  ///< RS inside IRS
  bool isomorphic = false;
  std::size_t dm_size = 0;
  std::size_t irs_size = 0;
  bool holds() const { return dense.join_dense.holds && dense.meet_dense.holds && isomorphic; }
};

/// RS(P+Q) is join- and meet-dense in IRS(P+Q) and DM(RS(P+Q)) ≅ IRS(P+Q).
CompletionCheck check_smallest_completion(const RoughSystem& rs, const RoughSystem& irs);
CompletionCheck check_smallest_completion(const Equivalence& p, const Equivalence& q,
                                          std::size_t limit = kDefaultExhaustiveLimit);

struct SystemReport {
  LatticeReport lattice;
  /// Closed-form pseudocomplements: (B^c,B^c) and (A^c,A^c) for RS(E);
  /// ((B^c)_T,(B^c)^T) and ((A^c)_T,(A^c)^T) for RS(T) when T is induced by an
  /// irredundant covering. Not applicable otherwise. Witness: element index.
  Check closed_form_pseudocomplements;
};

/// LatticeReport under the polarity ∼ plus the closed-form checks.
SystemReport classify_system(const RoughSystem& system);

/// Set family ordered by inclusion.
FinitePoset family_poset(const SetFamily& family);
/// Index map of X ↦ op(X) on the family; nullopt if some image leaves it.
std::optional<std::vector<std::size_t>> family_map(const SetFamily& family, const SetOperator& op);

}  // namespace mgrough
