#include <algorithm>
#include <numeric>

#include "mgrough/lattice.hpp"

namespace mgrough {

FinitePoset FinitePoset::from_predicate(std::size_t m, const LeqFn& leq) {
  FinitePoset p;
  p.up_.assign(m, DynBitset(m));
  p.down_.assign(m, DynBitset(m));
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (leq(a, b)) {
        p.up_[a].set(b);
        p.down_[b].set(a);
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    if (!p.up_[a].test(a)) {
      throw InvalidOrder("not reflexive at element " + std::to_string(a));
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      if (p.up_[a].test(b) && p.up_[b].test(a)) {
        throw InvalidOrder("not antisymmetric at elements " + std::to_string(a) + ", " +
                           std::to_string(b));
      }
    }
  }
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = p.up_[a].find_first(); b < m; b = p.up_[a].find_next(b + 1)) {
      if (!p.up_[b].is_subset_of(p.up_[a])) {
        throw InvalidOrder("not transitive through elements " + std::to_string(a) + ", " +
                           std::to_string(b));
      }
    }
  }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> covers(const FinitePoset& poset) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  const auto m = poset.size();
  for (std::size_t a = 0; a < m; ++a) {
    DynBitset strict = poset.up(a);
    strict.reset(a);
    strict.for_each([&](std::size_t b) {
      if ((strict & poset.down(b)).count() == 1) out.emplace_back(a, b);
    });
  }
  return out;
}

FinitePoset order_dual(const FinitePoset& poset) {
  return FinitePoset::from_predicate(
      poset.size(), [&](std::size_t a, std::size_t b) { return poset.leq(b, a); });
}

FinitePoset subposet(const FinitePoset& poset, std::span<const std::size_t> indices) {
  return FinitePoset::from_predicate(indices.size(), [&](std::size_t a, std::size_t b) {
    return poset.leq(indices[a], indices[b]);
  });
}

std::vector<std::size_t> heights(const FinitePoset& poset) {
  const auto m = poset.size();
  std::vector<std::size_t> order(m);
  std::iota(order.begin(), order.end(), std::size_t{0});
  // Sorting by down-set size yields a linear extension.
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return poset.down(a).count() < poset.down(b).count();
  });
  std::vector<std::size_t> h(m, 0);
  for (auto b : order) {
    poset.down(b).for_each([&](std::size_t a) {
      if (a != b) h[b] = std::max(h[b], h[a] + 1);
    });
  }
  return h;
}

namespace {

DynBitset common_upper_bounds(const FinitePoset& poset, const DynBitset& subset) {
  DynBitset ub = DynBitset::full(poset.size());
  subset.for_each([&](std::size_t x) { ub &= poset.up(x); });
  return ub;
}

DynBitset common_lower_bounds(const FinitePoset& poset, const DynBitset& subset) {
  DynBitset lb = DynBitset::full(poset.size());
  subset.for_each([&](std::size_t x) { lb &= poset.down(x); });
  return lb;
}

// Least element of `set`, if it has one.
std::optional<std::size_t> least_of(const FinitePoset& poset, const DynBitset& set) {
  // A least element has the strictly smallest down-set among the members.
  std::optional<std::size_t> best;
  std::size_t best_count = 0;
  set.for_each([&](std::size_t u) {
    auto c = poset.down(u).count();
    if (!best || c < best_count) {
      best = u;
      best_count = c;
    }
  });
  if (best && set.is_subset_of(poset.up(*best))) return best;
  return std::nullopt;
}

std::optional<std::size_t> greatest_of(const FinitePoset& poset, const DynBitset& set) {
  std::optional<std::size_t> best;
  std::size_t best_count = 0;
  set.for_each([&](std::size_t u) {
    auto c = poset.up(u).count();
    if (!best || c < best_count) {
      best = u;
      best_count = c;
    }
  });
  if (best && set.is_subset_of(poset.down(*best))) return best;
  return std::nullopt;
}

std::vector<std::size_t> minimal_elements(const FinitePoset& poset, const DynBitset& set) {
  std::vector<std::size_t> out;
  set.for_each([&](std::size_t u) {
    if ((set & poset.down(u)).count() == 1) out.push_back(u);
  });
  return out;
}

std::vector<std::size_t> maximal_elements(const FinitePoset& poset, const DynBitset& set) {
  std::vector<std::size_t> out;
  set.for_each([&](std::size_t u) {
    if ((set & poset.up(u)).count() == 1) out.push_back(u);
  });
  return out;
}

DynBitset pair_set(std::size_t m, std::size_t a, std::size_t b) {
  DynBitset s(m);
  s.set(a);
  s.set(b);
  return s;
}

}  // namespace

std::vector<std::size_t> minimal_upper_bounds(const FinitePoset& poset, std::size_t a,
                                              std::size_t b) {
  return minimal_elements(poset, common_upper_bounds(poset, pair_set(poset.size(), a, b)));
}

std::vector<std::size_t> maximal_lower_bounds(const FinitePoset& poset, std::size_t a,
                                              std::size_t b) {
  return maximal_elements(poset, common_lower_bounds(poset, pair_set(poset.size(), a, b)));
}

std::optional<std::size_t> supremum(const FinitePoset& poset, const DynBitset& subset) {
  return least_of(poset, common_upper_bounds(poset, subset));
}

std::optional<std::size_t> infimum(const FinitePoset& poset, const DynBitset& subset) {
  return greatest_of(poset, common_lower_bounds(poset, subset));
}

LatticeResult try_lattice(FinitePoset poset) {
  const auto m = poset.size();
  if (m == 0) return NonLatticeWitness{};
  FiniteLattice lattice;
  lattice.meet_.assign(m * m, 0);
  lattice.join_.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a; b < m; ++b) {
      const auto both = pair_set(m, a, b);
      const auto ub = common_upper_bounds(poset, both);
      auto j = least_of(poset, ub);
      if (!j) {
        return NonLatticeWitness{NonLatticeWitness::Kind::no_join, a, b,
                                 minimal_elements(poset, ub)};
      }
      const auto lb = common_lower_bounds(poset, both);
      auto mt = greatest_of(poset, lb);
      if (!mt) {
        return NonLatticeWitness{NonLatticeWitness::Kind::no_meet, a, b,
                                 maximal_elements(poset, lb)};
      }
      lattice.join_[a * m + b] = lattice.join_[b * m + a] = *j;
      lattice.meet_[a * m + b] = lattice.meet_[b * m + a] = *mt;
    }
  }
  std::size_t bottom = 0;
  std::size_t top = 0;
  for (std::size_t x = 1; x < m; ++x) {
    bottom = lattice.meet_[bottom * m + x];
    top = lattice.join_[top * m + x];
  }
  lattice.bottom_ = bottom;
  lattice.top_ = top;
  lattice.cover_.assign(m, DynBitset(m));
  for (auto [a, b] : covers(poset)) lattice.cover_[a].set(b);
  lattice.poset_ = std::move(poset);
  return lattice;
}

FiniteLattice require_lattice(FinitePoset poset) {
  auto result = try_lattice(std::move(poset));
  if (auto* w = std::get_if<NonLatticeWitness>(&result)) {
    throw InvalidOrder(w->kind == NonLatticeWitness::Kind::empty_poset
                           ? "empty poset is not a lattice"
                           : "elements " + std::to_string(w->a) + " and " + std::to_string(w->b) +
                                 " lack a " +
                                 (w->kind == NonLatticeWitness::Kind::no_join ? "join" : "meet"));
  }
  return std::get<FiniteLattice>(std::move(result));
}

std::size_t FiniteLattice::join_of(const DynBitset& subset) const {
  std::size_t acc = bottom_;
  subset.for_each([&](std::size_t x) { acc = join(acc, x); });
  return acc;
}

std::size_t FiniteLattice::meet_of(const DynBitset& subset) const {
  std::size_t acc = top_;
  subset.for_each([&](std::size_t x) { acc = meet(acc, x); });
  return acc;
}

}  // namespace mgrough
