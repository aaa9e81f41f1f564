#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "mgrough/bitset.hpp"
#include "mgrough/errors.hpp"

namespace mgrough {

/// Finite partial order on element indices 0..size()-1. Element payloads stay
/// with the caller; the engine only ever sees indices.
class FinitePoset {
 public:
  using LeqFn = std::function<bool(std::size_t, std::size_t)>;

  FinitePoset() = default;

  /// Materializes `leq` on m elements and validates reflexivity, antisymmetry
  /// and transitivity. Throws InvalidOrder on the first violation.
  static FinitePoset from_predicate(std::size_t m, const LeqFn& leq);

  std::size_t size() const noexcept { return up_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return up_[a].test(b); }
  bool less(std::size_t a, std::size_t b) const { return a != b && leq(a, b); }
  bool comparable(std::size_t a, std::size_t b) const { return leq(a, b) || leq(b, a); }
  /// { b | a ≤ b }.
  const DynBitset& up(std::size_t a) const { return up_[a]; }
  /// { b | b ≤ a }.
  const DynBitset& down(std::size_t a) const { return down_[a]; }

 private:
  std::vector<DynBitset> up_;
  std::vector<DynBitset> down_;
};

/// Builds the poset of `elements` under `leq`. Throws InvalidOrder when two
/// elements compare equal under `==` or the predicate is not a partial order.
template <class T, class Leq>
FinitePoset build_poset(std::span<const T> elements, Leq leq) {
  for (std::size_t i = 0; i < elements.size(); ++i) {
    for (std::size_t j = i + 1; j < elements.size(); ++j) {
      if (elements[i] == elements[j]) {
        throw InvalidOrder("duplicate elements " + std::to_string(i) + " and " +
                           std::to_string(j));
      }
    }
  }
  return FinitePoset::from_predicate(elements.size(), [&](std::size_t a, std::size_t b) {
    return static_cast<bool>(leq(elements[a], elements[b]));
  });
}

/// Hasse relation: (a, b) with a ≺ b, ordered by a then b.
std::vector<std::pair<std::size_t, std::size_t>> covers(const FinitePoset& poset);

FinitePoset order_dual(const FinitePoset& poset);
/// Restriction of the order to `indices` (new index i ↔ indices[i]).
FinitePoset subposet(const FinitePoset& poset, std::span<const std::size_t> indices);

/// Length of the longest chain ending at each element.
std::vector<std::size_t> heights(const FinitePoset& poset);

/// Minimal elements of the common upper bounds of `a` and `b`.
std::vector<std::size_t> minimal_upper_bounds(const FinitePoset& poset, std::size_t a,
                                              std::size_t b);
std::vector<std::size_t> maximal_lower_bounds(const FinitePoset& poset, std::size_t a,
                                              std::size_t b);

/// Least upper bound of an arbitrary subset (empty subset → least element), if any.
std::optional<std::size_t> supremum(const FinitePoset& poset, const DynBitset& subset);
std::optional<std::size_t> infimum(const FinitePoset& poset, const DynBitset& subset);

class FiniteLattice;

/// Why a poset is not a lattice: the first pair (in index order, joins
/// checked before meets) lacking a join or a meet, with its minimal upper
/// (or maximal lower) bounds.
struct NonLatticeWitness {
  enum class Kind { empty_poset, no_join, no_meet };
  Kind kind = Kind::empty_poset;
  std::size_t a = 0;
  std::size_t b = 0;
  std::vector<std::size_t> bounds;
};

using LatticeResult = std::variant<FiniteLattice, NonLatticeWitness>;

LatticeResult try_lattice(FinitePoset poset);

/// A lattice: a poset with total meet and join tables.
class FiniteLattice {
 public:
  const FinitePoset& poset() const noexcept { return poset_; }
  std::size_t size() const noexcept { return poset_.size(); }
  bool leq(std::size_t a, std::size_t b) const { return poset_.leq(a, b); }
  std::size_t meet(std::size_t a, std::size_t b) const { return meet_[a * size() + b]; }
  std::size_t join(std::size_t a, std::size_t b) const { return join_[a * size() + b]; }
  std::size_t bottom() const noexcept { return bottom_; }
  std::size_t top() const noexcept { return top_; }
  /// a ≺ b.
  bool is_cover(std::size_t a, std::size_t b) const { return cover_[a].test(b); }

  /// Join of a subset; the empty join is bottom().
  std::size_t join_of(const DynBitset& subset) const;
  std::size_t meet_of(const DynBitset& subset) const;

 private:
  friend LatticeResult try_lattice(FinitePoset poset);

  FinitePoset poset_;
  std::vector<std::size_t> meet_;
  std::vector<std::size_t> join_;
  std::vector<DynBitset> cover_;
  std::size_t bottom_ = 0;
  std::size_t top_ = 0;
};

/// try_lattice, throwing InvalidOrder when the poset is not a lattice.
FiniteLattice require_lattice(FinitePoset poset);

/// Outcome of one structural check. `witness` holds element indices that
/// re-evaluate to a violation; it is empty when the check holds.
struct Check {
  bool holds = true;
  bool applicable = true;
  std::vector<std::size_t> witness;

  static Check ok() { return {}; }
  static Check fail(std::vector<std::size_t> w) { return {false, true, std::move(w)}; }
  static Check not_applicable() { return {false, false, {}}; }
  explicit operator bool() const noexcept { return applicable && holds; }
};

/// x∧(y∨z) = (x∧y)∨(x∧z) for all triples; witness (x, y, z).
Check check_distributive(const FiniteLattice& lattice);
/// N5-sublattice search; witness (a∧b, a, c, b, a∨b) with a < c.
Check check_modular(const FiniteLattice& lattice);
/// a∧b ≺ a implies b ≺ a∨b; witness (a, b).
Check check_upper_semimodular(const FiniteLattice& lattice);
/// a ≺ a∨b implies a∧b ≺ b; witness (a, b).
Check check_lower_semimodular(const FiniteLattice& lattice);

/// Largest z with x∧z = 0, when that set has a maximum.
std::optional<std::size_t> pseudocomplement(const FiniteLattice& lattice, std::size_t x);
/// Least z with x∨z = 1, when that set has a minimum.
std::optional<std::size_t> dual_pseudocomplement(const FiniteLattice& lattice, std::size_t x);

struct StoneFamily {
  Check pseudocomplemented;       ///< witness: element without x*
  Check dual_pseudocomplemented;  ///< witness: element without x⁺
  Check st1;                      ///< x* ∨ x** = 1; witness x
  Check st2;                      ///< x⁺ ∧ x⁺⁺ = 0; witness x
  Check regular;                  ///< x* = y* and x⁺ = y⁺ imply x = y; witness (x, y)
};
StoneFamily check_stone_family(const FiniteLattice& lattice);

/// Order-reversing involution. Works on any poset; witness (x) for a failed
/// involution or (x, y) with x ≤ y but not ~y ≤ ~x.
Check check_polarity(const FinitePoset& poset, std::span<const std::size_t> map);
/// Polarity + distributivity + x∧~x ≤ y∨~y.
Check check_kleene(const FiniteLattice& lattice, std::span<const std::size_t> map);
/// Polarity + x∨~x = 1 and x∧~x = 0.
Check check_ortho(const FiniteLattice& lattice, std::span<const std::size_t> map);

/// Elements covering bottom().
std::vector<std::size_t> atoms(const FiniteLattice& lattice);
/// Every element is the join of the atoms below it; witness x.
Check check_atomistic(const FiniteLattice& lattice);
/// Distributive and complemented; witness from whichever part fails.
Check check_boolean(const FiniteLattice& lattice);

struct DenseResult {
  Check join_dense;  ///< witness: element that is not the join of the subset below it
  Check meet_dense;
};
DenseResult check_dense(const FiniteLattice& lattice, std::span<const std::size_t> subset);

struct LatticeReport {
  Check is_lattice;
  Check is_distributive;
  Check is_modular;
  Check is_upper_semimodular;
  Check is_lower_semimodular;
  Check is_pseudocomplemented;
  Check is_dual_pseudocomplemented;
  Check is_stone;
  Check is_dual_stone;
  Check is_double_stone;
  Check is_regular_double;
  Check is_atomistic;
  Check is_boolean;
  Check has_given_polarity_valid;
  Check is_kleene;
  Check is_ortho_under_given_map;

  /// (field name, check) in declaration order; the names are the stable report keys.
  std::vector<std::pair<std::string_view, const Check*>> fields() const;
};

/// Full report for a poset. Lattice-level checks are not applicable when the
/// poset is not a lattice; polarity-dependent checks need `polarity`.
LatticeReport classify(const FinitePoset& poset,
                       std::optional<std::span<const std::size_t>> polarity = std::nullopt);

}  // namespace mgrough
