#pragma once

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "mgrough/universe.hpp"

namespace mgrough {

/// Binary relation on a universe stored row-wise: row(x) = { y | x R y }.
class Relation {
 public:
  Relation() = default;
  Relation(Universe universe, std::vector<Subset> rows);

  static Relation identity(const Universe& universe);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return rows_.size(); }
  bool relates(std::size_t x, std::size_t y) const { return rows_.at(x).contains(y); }
  const Subset& row(std::size_t x) const { return rows_.at(x); }
  std::span<const Subset> rows() const noexcept { return rows_; }

  bool is_reflexive() const;
  bool is_symmetric() const;
  bool is_transitive() const;
  bool is_subset_of(const Relation& other) const;

  friend bool operator==(const Relation&, const Relation&) = default;

 private:
  Universe universe_;
  std::vector<Subset> rows_;
};

/// Reflexive, symmetric relation.
class Tolerance {
 public:
  Tolerance() = default;
  /// Throws InvalidRelation unless `relation` is reflexive and symmetric.
  explicit Tolerance(Relation relation);

  static Tolerance identity(const Universe& universe);
  /// Tolerance generated by an undirected edge list; reflexive pairs are implicit.
  static Tolerance from_edges(const Universe& universe,
                              std::span<const std::pair<std::size_t, std::size_t>> edges);

  const Universe& universe() const noexcept { return relation_.universe(); }
  std::size_t size() const noexcept { return relation_.size(); }
  const Relation& relation() const noexcept { return relation_; }
  bool relates(std::size_t x, std::size_t y) const { return relation_.relates(x, y); }
  /// T(x); throws std::out_of_range for x >= size().
  const Subset& neighborhood(std::size_t x) const { return relation_.row(x); }
  std::span<const Subset> neighborhoods() const noexcept { return relation_.rows(); }

  friend bool operator==(const Tolerance&, const Tolerance&) = default;

 private:
  Relation relation_;
};

/// Equivalence relation held as a partition. Class ids follow the order of
/// first occurrence, so class_ids() is the restricted growth string of the partition.
class Equivalence {
 public:
  Equivalence() = default;

  /// Throws InvalidRelation unless `classes` are nonempty, disjoint and cover the universe.
  static Equivalence from_classes(const Universe& universe, std::vector<Subset> classes);
  /// Any labelling of the elements; equal labels mean the same class.
  static Equivalence from_labels(const Universe& universe, std::span<const std::size_t> labels);
  static Equivalence identity(const Universe& universe);
  static Equivalence total(const Universe& universe);

  const Universe& universe() const noexcept { return universe_; }
  std::size_t size() const noexcept { return class_id_.size(); }
  std::size_t class_id(std::size_t x) const { return class_id_.at(x); }
  std::span<const std::size_t> class_ids() const noexcept { return class_id_; }
  /// E(x).
  const Subset& class_of(std::size_t x) const { return neighborhoods_.at(x); }
  /// Classes ordered by their smallest element.
  const std::vector<Subset>& classes() const noexcept { return classes_; }
  /// class_of(x) for every x, in element order.
  std::span<const Subset> neighborhoods() const noexcept { return neighborhoods_; }
  bool relates(std::size_t x, std::size_t y) const { return class_id(x) == class_id(y); }

  Relation as_relation() const { return Relation(universe_, neighborhoods_); }
  Tolerance as_tolerance() const { return Tolerance(as_relation()); }

  friend bool operator==(const Equivalence& a, const Equivalence& b) {
    return a.universe_ == b.universe_ && a.class_id_ == b.class_id_;
  }

 private:
  Universe universe_;
  std::vector<std::size_t> class_id_;
  std::vector<Subset> classes_;
  std::vector<Subset> neighborhoods_;
};

/// Family of nonempty subsets, deduplicated and kept in canonical order.
/// The family need not cover the universe; covers_universe() reports it.
class Covering {
 public:
  Covering() = default;
  Covering(Universe universe, std::vector<Subset> members);

  const Universe& universe() const noexcept { return universe_; }
  const std::vector<Subset>& members() const noexcept { return members_; }
  bool empty() const noexcept { return members_.empty(); }
  bool covers_universe() const;

  friend bool operator==(const Covering&, const Covering&) = default;

 private:
  Universe universe_;
  std::vector<Subset> members_;
};

struct CoherenceChecks {
  bool coherent;
  bool union_is_transitive;
  bool union_equals_composition;
};

/// U1 = {x | Q(x) ⊆ P(x)}, U2 = {x | P(x) ⊂ Q(x)}, U3 = the rest.
struct ThreeWaySplit {
  Subset u1;
  Subset u2;
  Subset u3;
};

const Subset& neighborhood(const Tolerance& t, std::size_t x);

Tolerance rel_union(const Equivalence& p, const Equivalence& q);
Equivalence rel_intersection(const Equivalence& p, const Equivalence& q);
/// x (P∘Q) y iff some z has x P z and z Q y.
Relation rel_compose(const Equivalence& p, const Equivalence& q);

/// Every P(x) and Q(x) are ⊆-comparable.
bool is_coherent(const Equivalence& p, const Equivalence& q);
CoherenceChecks coherence_triple_check(const Equivalence& p, const Equivalence& q);

ThreeWaySplit partition_u123(const Equivalence& p, const Equivalence& q);
/// { P(x) | x ∈ U1 } ∪ { Q(x) | x ∈ U2 }.
Covering covering_h(const Equivalence& p, const Equivalence& q);

/// ⋃ { X² | X ∈ family }; reflexive only on covered elements.
Relation induced_relation(const Universe& universe, std::span<const Subset> family);
/// Throws InvalidRelation when the family does not cover the universe.
Tolerance induced_tolerance(const Covering& covering);

/// X × X ⊆ T. Throws std::invalid_argument for an empty X.
bool is_preblock(const Tolerance& t, const Subset& x);
/// Inclusion-maximal preblock. Throws std::invalid_argument for an empty X.
bool is_block(const Tolerance& t, const Subset& x);
/// T is induced by { T(x) | T(x) is a block }, equivalently by an irredundant covering.
bool induced_by_irredundant_covering(const Tolerance& t);

/// P ∪ Q ⊆ T_{H(P+Q)}; false for an empty family over a nonempty universe.
bool h_induces_union(const Equivalence& p, const Equivalence& q);

/// Connected components of T, i.e. the least equivalence containing T.
Equivalence smallest_equivalence(const Tolerance& t);

/// |(P∩Q)(x)| = 1 implies |P(x)| = 1 or |Q(x)| = 1, for every x.
bool condition_c(const Equivalence& p, const Equivalence& q);

/// Elements whose E-class is a singleton.
Subset sigma_classes(const Equivalence& e);

}  // namespace mgrough
