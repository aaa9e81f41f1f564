#include "mgrough/relations.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace mgrough {

namespace {

void require_same_universe(const Universe& a, const Universe& b) {
  if (!(a == b)) throw UniverseMismatch();
}

}  // namespace

// Relation ---------------------------------------------------------------

Relation::Relation(Universe universe, std::vector<Subset> rows)
    : universe_(std::move(universe)), rows_(std::move(rows)) {
  if (rows_.size() != universe_.size()) {
    throw InvalidRelation("relation needs exactly one row per element");
  }
  for (const auto& r : rows_) {
    if (r.width() != universe_.size()) throw UniverseMismatch();
  }
}

Relation Relation::identity(const Universe& universe) {
  std::vector<Subset> rows;
  rows.reserve(universe.size());
  for (std::size_t x = 0; x < universe.size(); ++x) {
    rows.push_back(Subset::singleton(universe.size(), x));
  }
  return Relation(universe, std::move(rows));
}

bool Relation::is_reflexive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    if (!rows_[x].contains(x)) return false;
  }
  return true;
}

bool Relation::is_symmetric() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (auto y : rows_[x].elements()) {
      if (!rows_[y].contains(x)) return false;
    }
  }
  return true;
}

bool Relation::is_transitive() const {
  for (std::size_t x = 0; x < size(); ++x) {
    for (auto y : rows_[x].elements()) {
      if (!rows_[y].is_subset_of(rows_[x])) return false;
    }
  }
  return true;
}

bool Relation::is_subset_of(const Relation& other) const {
  require_same_universe(universe_, other.universe_);
  for (std::size_t x = 0; x < size(); ++x) {
    if (!rows_[x].is_subset_of(other.rows_[x])) return false;
  }
  return true;
}

// Tolerance --------------------------------------------------------------

Tolerance::Tolerance(Relation relation) : relation_(std::move(relation)) {
  if (!relation_.is_reflexive()) throw InvalidRelation("tolerance must be reflexive");
  if (!relation_.is_symmetric()) throw InvalidRelation("tolerance must be symmetric");
}

Tolerance Tolerance::identity(const Universe& universe) {
  return Tolerance(Relation::identity(universe));
}

Tolerance Tolerance::from_edges(const Universe& universe,
                                std::span<const std::pair<std::size_t, std::size_t>> edges) {
  const auto n = universe.size();
  std::vector<Subset> rows;
  rows.reserve(n);
  for (std::size_t x = 0; x < n; ++x) rows.push_back(Subset::singleton(n, x));
  for (auto [x, y] : edges) {
    if (x >= n || y >= n) throw std::out_of_range("edge endpoint out of range");
    rows[x] = rows[x].with(y);
    rows[y] = rows[y].with(x);
  }
  return Tolerance(Relation(universe, std::move(rows)));
}

const Subset& neighborhood(const Tolerance& t, std::size_t x) { return t.neighborhood(x); }

// Equivalence ------------------------------------------------------------

Equivalence Equivalence::from_labels(const Universe& universe,
                                     std::span<const std::size_t> labels) {
  const auto n = universe.size();
  if (labels.size() != n) throw InvalidRelation("one class label per element required");
  Equivalence e;
  e.universe_ = universe;
  e.class_id_.resize(n);
  std::vector<std::pair<std::size_t, std::size_t>> seen;  // label -> class id
  for (std::size_t x = 0; x < n; ++x) {
    auto it = std::find_if(seen.begin(), seen.end(),
                           [&](const auto& kv) { return kv.first == labels[x]; });
    if (it == seen.end()) {
      seen.emplace_back(labels[x], e.classes_.size());
      e.class_id_[x] = e.classes_.size();
      e.classes_.push_back(Subset::singleton(n, x));
    } else {
      e.class_id_[x] = it->second;
      e.classes_[it->second] = e.classes_[it->second].with(x);
    }
  }
  e.neighborhoods_.reserve(n);
  for (std::size_t x = 0; x < n; ++x) e.neighborhoods_.push_back(e.classes_[e.class_id_[x]]);
  return e;
}

Equivalence Equivalence::from_classes(const Universe& universe, std::vector<Subset> classes) {
  const auto n = universe.size();
  std::vector<std::size_t> labels(n, n);
  for (std::size_t c = 0; c < classes.size(); ++c) {
    if (classes[c].width() != n) throw UniverseMismatch();
    if (classes[c].is_empty()) throw InvalidRelation("partition class is empty");
    for (auto x : classes[c].elements()) {
      if (labels[x] != n) {
        throw InvalidRelation("element '" + universe.name(x) + "' appears in two classes");
      }
      labels[x] = c;
    }
  }
  for (std::size_t x = 0; x < n; ++x) {
    if (labels[x] == n) {
      throw InvalidRelation("element '" + universe.name(x) + "' is in no class");
    }
  }
  return from_labels(universe, labels);
}

Equivalence Equivalence::identity(const Universe& universe) {
  std::vector<std::size_t> labels(universe.size());
  std::iota(labels.begin(), labels.end(), std::size_t{0});
  return from_labels(universe, labels);
}

Equivalence Equivalence::total(const Universe& universe) {
  std::vector<std::size_t> labels(universe.size(), 0);
  return from_labels(universe, labels);
}

// Covering ---------------------------------------------------------------

Covering::Covering(Universe universe, std::vector<Subset> members)
    : universe_(std::move(universe)), members_(std::move(members)) {
  for (const auto& m : members_) {
    if (m.width() != universe_.size()) throw UniverseMismatch();
    if (m.is_empty()) throw InvalidRelation("covering member is empty");
  }
  std::sort(members_.begin(), members_.end());
  members_.erase(std::unique(members_.begin(), members_.end()), members_.end());
}

bool Covering::covers_universe() const {
  Subset all = universe_.empty_set();
  for (const auto& m : members_) all |= m;
  return all.is_full();
}

// Operations -------------------------------------------------------------

Tolerance rel_union(const Equivalence& p, const Equivalence& q) {
  require_same_universe(p.universe(), q.universe());
  std::vector<Subset> rows;
  rows.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) rows.push_back(p.class_of(x) | q.class_of(x));
  return Tolerance(Relation(p.universe(), std::move(rows)));
}

Equivalence rel_intersection(const Equivalence& p, const Equivalence& q) {
  require_same_universe(p.universe(), q.universe());
  // (P∩Q)(x) = P(x) ∩ Q(x): the pair of class ids identifies the class.
  std::vector<std::size_t> labels(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) labels[x] = p.class_id(x) * p.size() + q.class_id(x);
  return Equivalence::from_labels(p.universe(), labels);
}

Relation rel_compose(const Equivalence& p, const Equivalence& q) {
  require_same_universe(p.universe(), q.universe());
  std::vector<Subset> rows;
  rows.reserve(p.size());
  for (std::size_t x = 0; x < p.size(); ++x) {
    Subset row = p.universe().empty_set();
    for (auto z : p.class_of(x).elements()) row |= q.class_of(z);
    rows.push_back(row);
  }
  return Relation(p.universe(), std::move(rows));
}

bool is_coherent(const Equivalence& p, const Equivalence& q) {
  require_same_universe(p.universe(), q.universe());
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto& px = p.class_of(x);
    const auto& qx = q.class_of(x);
    if (!px.is_subset_of(qx) && !qx.is_subset_of(px)) return false;
  }
  return true;
}

CoherenceChecks coherence_triple_check(const Equivalence& p, const Equivalence& q) {
  const auto un = rel_union(p, q);
  return {is_coherent(p, q), un.relation().is_transitive(),
          un.relation() == rel_compose(p, q)};
}

ThreeWaySplit partition_u123(const Equivalence& p, const Equivalence& q) {
  require_same_universe(p.universe(), q.universe());
  const auto n = p.size();
  ThreeWaySplit split{Subset(n), Subset(n), Subset(n)};
  for (std::size_t x = 0; x < n; ++x) {
    const auto& px = p.class_of(x);
    const auto& qx = q.class_of(x);
    if (qx.is_subset_of(px)) {
      split.u1 = split.u1.with(x);
    } else if (px.is_proper_subset_of(qx)) {
      split.u2 = split.u2.with(x);
    } else {
      split.u3 = split.u3.with(x);
    }
  }
  return split;
}

Covering covering_h(const Equivalence& p, const Equivalence& q) {
  const auto split = partition_u123(p, q);
  std::vector<Subset> members;
  for (auto x : split.u1.elements()) members.push_back(p.class_of(x));
  for (auto x : split.u2.elements()) members.push_back(q.class_of(x));
  return Covering(p.universe(), std::move(members));
}

Relation induced_relation(const Universe& universe, std::span<const Subset> family) {
  const auto n = universe.size();
  std::vector<Subset> rows(n, Subset(n));
  for (const auto& member : family) {
    if (member.width() != n) throw UniverseMismatch();
    for (auto x : member.elements()) rows[x] |= member;
  }
  return Relation(universe, std::move(rows));
}

Tolerance induced_tolerance(const Covering& covering) {
  if (!covering.covers_universe()) {
    throw InvalidRelation("family does not cover the universe");
  }
  return Tolerance(induced_relation(covering.universe(), covering.members()));
}

bool is_preblock(const Tolerance& t, const Subset& x) {
  if (x.width() != t.size()) throw UniverseMismatch();
  if (x.is_empty()) throw std::invalid_argument("preblock candidate must be nonempty");
  for (auto e : x.elements()) {
    if (!x.is_subset_of(t.neighborhood(e))) return false;
  }
  return true;
}

bool is_block(const Tolerance& t, const Subset& x) {
  if (!is_preblock(t, x)) return false;
  // Preblocks are closed under nonempty subsets, so maximality only needs
  // one-element extensions.
  for (std::size_t y = 0; y < t.size(); ++y) {
    if (!x.contains(y) && x.is_subset_of(t.neighborhood(y))) return false;
  }
  return true;
}

bool induced_by_irredundant_covering(const Tolerance& t) {
  std::vector<Subset> blocks;
  for (std::size_t x = 0; x < t.size(); ++x) {
    if (is_preblock(t, t.neighborhood(x))) blocks.push_back(t.neighborhood(x));
  }
  return induced_relation(t.universe(), blocks) == t.relation();
}

bool h_induces_union(const Equivalence& p, const Equivalence& q) {
  const auto h = covering_h(p, q);
  const auto un = rel_union(p, q);
  return un.relation().is_subset_of(induced_relation(p.universe(), h.members()));
}

Equivalence smallest_equivalence(const Tolerance& t) {
  const auto n = t.size();
  std::vector<std::size_t> labels(n, n);
  for (std::size_t start = 0; start < n; ++start) {
    if (labels[start] != n) continue;
    Subset component = Subset::singleton(n, start);
    Subset frontier = component;
    while (!frontier.is_empty()) {
      Subset next(n);
      for (auto x : frontier.elements()) next |= t.neighborhood(x);
      frontier = next - component;
      component |= next;
    }
    for (auto x : component.elements()) labels[x] = start;
  }
  return Equivalence::from_labels(t.universe(), labels);
}

bool condition_c(const Equivalence& p, const Equivalence& q) {
  require_same_universe(p.universe(), q.universe());
  for (std::size_t x = 0; x < p.size(); ++x) {
    const auto meet = p.class_of(x) & q.class_of(x);
    if (meet.count() == 1 && p.class_of(x).count() != 1 && q.class_of(x).count() != 1) {
      return false;
    }
  }
  return true;
}

Subset sigma_classes(const Equivalence& e) {
  Subset s(e.size());
  for (std::size_t x = 0; x < e.size(); ++x) {
    if (e.class_of(x).count() == 1) s = s.with(x);
  }
  return s;
}

}  // namespace mgrough
