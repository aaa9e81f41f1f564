#include "mgrough/rough_systems.hpp"

#include <algorithm>
#include <stdexcept>

namespace mgrough {

std::string_view to_string(SystemKind kind) {
  switch (kind) {
    case SystemKind::equivalence: return "equivalence";
    case SystemKind::tolerance: return "tolerance";
    case SystemKind::optimistic: return "optimistic";
    case SystemKind::pessimistic: return "pessimistic";
    case SystemKind::irs_optimistic: return "irs";
  }
  return "unknown";
}

namespace {

std::vector<RoughPair> canonical(std::vector<RoughPair> pairs) {
  std::sort(pairs.begin(), pairs.end());
  pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
  return pairs;
}

FinitePoset componentwise(const std::vector<RoughPair>& pairs) {
  return FinitePoset::from_predicate(pairs.size(), [&](std::size_t a, std::size_t b) {
    return pairs[a].leq(pairs[b]);
  });
}

}  // namespace

RoughSystem::RoughSystem(Universe universe, SystemKind kind, std::vector<RoughPair> pairs,
                         SetOperator lower_op, SetOperator upper_op,
                         std::optional<Tolerance> tolerance)
    : universe_(std::move(universe)),
      kind_(kind),
      pairs_(canonical(std::move(pairs))),
      order_(componentwise(pairs_)),
      lower_op_(std::move(lower_op)),
      upper_op_(std::move(upper_op)),
      tolerance_(std::move(tolerance)) {
  const auto n = universe_.size();
  for (const auto& pr : pairs_) {
    if (pr.lower.width() != n || pr.upper.width() != n) {
      throw UniverseMismatch("rough pair width differs from the universe");
    }
    if (!pr.lower.is_subset_of(pr.upper)) {
      throw InvalidRelation("rough pair with lower approximation not inside the upper one");
    }
  }
  const RoughPair bottom{universe_.empty_set(), universe_.empty_set()};
  const RoughPair top{universe_.full_set(), universe_.full_set()};
  if (!contains(bottom) || !contains(top)) {
    throw InvalidRelation("rough set system must contain (∅,∅) and (U,U)");
  }
}

std::optional<std::size_t> RoughSystem::index_of(const RoughPair& pair) const {
  auto it = std::lower_bound(pairs_.begin(), pairs_.end(), pair);
  if (it == pairs_.end() || *it != pair) return std::nullopt;
  return static_cast<std::size_t>(it - pairs_.begin());
}

std::optional<std::vector<std::size_t>> RoughSystem::polarity() const {
  std::vector<std::size_t> map(pairs_.size());
  for (std::size_t i = 0; i < pairs_.size(); ++i) {
    auto j = index_of({pairs_[i].upper.complement(), pairs_[i].lower.complement()});
    if (!j) return std::nullopt;
    map[i] = *j;
  }
  return map;
}

std::string format_pair(const Universe& universe, const RoughPair& pair) {
  const bool compact = std::all_of(universe.names().begin(), universe.names().end(),
                                   [](const std::string& s) { return s.size() == 1; });
  auto f = [&](const Subset& s) {
    return compact || s.is_empty() ? universe.format(s) : "{" + universe.format(s) + "}";
  };
  return "(" + f(pair.lower) + ", " + f(pair.upper) + ")";
}

std::string RoughSystem::format_pair(std::size_t i) const {
  return mgrough::format_pair(universe_, pairs_.at(i));
}

namespace {

RoughSystem from_operators(const Universe& u, SystemKind kind, SetOperator lo, SetOperator up,
                           std::optional<Tolerance> t, std::size_t limit) {
  if (u.size() > limit) throw SizeLimitExceeded("universe size", u.size(), limit);
  std::vector<RoughPair> pairs;
  pairs.reserve(std::size_t{1} << u.size());
  for_each_subset(u.size(), [&](const Subset& x) { pairs.push_back({lo(x), up(x)}); });
  return RoughSystem(u, kind, std::move(pairs), std::move(lo), std::move(up), std::move(t));
}

void require_same_universe(const Equivalence& p, const Equivalence& q) {
  if (!(p.universe() == q.universe())) {
    throw UniverseMismatch("relations are defined on different universes");
  }
}

}  // namespace

RoughSystem build_rs_equivalence(const Equivalence& e, std::size_t limit) {
  return from_operators(
      e.universe(), SystemKind::equivalence, [e](const Subset& x) { return lower_e(e, x); },
      [e](const Subset& x) { return upper_e(e, x); }, e.as_tolerance(), limit);
}

RoughSystem build_rs_tolerance(const Tolerance& t, std::size_t limit) {
  return from_operators(
      t.universe(), SystemKind::tolerance, [t](const Subset& x) { return lower_t(t, x); },
      [t](const Subset& x) { return upper_t(t, x); }, t, limit);
}

RoughSystem build_rs(SystemKind kind, const Equivalence& p, const Equivalence& q,
                     std::size_t limit) {
  require_same_universe(p, q);
  switch (kind) {
    case SystemKind::optimistic:
      return from_operators(
          p.universe(), kind, [p, q](const Subset& x) { return opt_lower(p, q, x); },
          [p, q](const Subset& x) { return opt_upper(p, q, x); }, std::nullopt, limit);
    case SystemKind::pessimistic:
      return from_operators(
          p.universe(), kind, [p, q](const Subset& x) { return pess_lower(p, q, x); },
          [p, q](const Subset& x) { return pess_upper(p, q, x); }, rel_union(p, q), limit);
    case SystemKind::equivalence:
      return build_rs_equivalence(rel_intersection(p, q), limit);
    case SystemKind::irs_optimistic:
      return build_irs(p, q, limit);
    case SystemKind::tolerance:
      return build_rs_tolerance(rel_union(p, q), limit);
  }
  throw std::invalid_argument("unknown system kind");
}

RoughSystem build_irs(const Equivalence& p, const Equivalence& q, std::size_t limit) {
  require_same_universe(p, q);
  const auto interior = interior_system_opt(p, q, limit);
  const auto closure = closure_system_opt(p, q, limit);
  const Subset sigma = sigma_classes(p) | sigma_classes(q);
  std::vector<RoughPair> pairs;
  for (const auto& a : interior) {
    for (const auto& b : closure) {
      if (a.is_subset_of(b) && !(b - a).intersects(sigma)) pairs.push_back({a, b});
    }
  }
  return RoughSystem(
      p.universe(), SystemKind::irs_optimistic, std::move(pairs),
      [p, q](const Subset& x) { return opt_lower(p, q, x); },
      [p, q](const Subset& x) { return opt_upper(p, q, x); });
}

bool verify_rs_containment(const RoughSystem& rs, const RoughSystem& irs) {
  return std::all_of(rs.pairs().begin(), rs.pairs().end(),
                     [&](const RoughPair& pr) { return irs.contains(pr); });
}

bool verify_rs_containment(const Equivalence& p, const Equivalence& q, std::size_t limit) {
  return verify_rs_containment(build_rs(SystemKind::optimistic, p, q, limit),
                               build_irs(p, q, limit));
}

namespace {

struct MeetJoin {
  RoughPair meet;
  RoughPair join;
};

MeetJoin formula(const RoughSystem& s, std::span<const std::size_t> family) {
  const auto& u = s.universe();
  Subset lo_meet = u.full_set(), up_meet = u.full_set();
  Subset lo_join = u.empty_set(), up_join = u.empty_set();
  for (auto i : family) {
    lo_meet &= s[i].lower;
    up_meet &= s[i].upper;
    lo_join |= s[i].lower;
    up_join |= s[i].upper;
  }
  switch (s.kind()) {
    case SystemKind::equivalence:
      return {{lo_meet, up_meet}, {lo_join, up_join}};
    case SystemKind::tolerance:
    case SystemKind::pessimistic:
      // □X = (X_T)^T and ◇X = (X^T)_T.
      return {{lo_meet, s.upper_op(s.lower_op(up_meet))},
              {s.lower_op(s.upper_op(lo_join)), up_join}};
    case SystemKind::optimistic:
    case SystemKind::irs_optimistic:
      return {{s.lower_op(lo_meet), up_meet}, {lo_join, s.upper_op(up_join)}};
  }
  throw std::invalid_argument("unknown system kind");
}

}  // namespace

Check meet_join_formula_check(const RoughSystem& system, std::span<const std::size_t> family) {
  DynBitset members(system.size());
  for (auto i : family) {
    if (i >= system.size()) throw std::invalid_argument("family index out of range");
    members.set(i);
  }
  const auto [meet, join] = formula(system, family);
  const std::vector<std::size_t> witness(family.begin(), family.end());
  const auto mi = system.index_of(meet);
  const auto ji = system.index_of(join);
  if (!mi || !ji) return Check::fail(witness);
  if (infimum(system.order(), members) != mi || supremum(system.order(), members) != ji) {
    return Check::fail(witness);
  }
  return Check::ok();
}

Check check_polarity_rs(const RoughSystem& system) {
  const auto map = system.polarity();
  if (!map) {
    for (std::size_t i = 0; i < system.size(); ++i) {
      if (!system.contains({system[i].upper.complement(), system[i].lower.complement()})) {
        return Check::fail({i});
      }
    }
    return Check::fail({});
  }
  return check_polarity(system.order(), *map);
}

Check check_subdirect(const RoughSystem& irs, const SetFamily& interior,
                      const SetFamily& closure) {
  const auto m = irs.size();
  if (auto c = meet_join_formula_check(irs, {}); !c.holds) return c;
  // Binary joins and meets give every finite one.
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = a + 1; b < m; ++b) {
      const std::size_t fam[] = {a, b};
      if (auto c = meet_join_formula_check(irs, fam); !c.holds) return c;
    }
  }
  std::vector<Subset> lowers, uppers;
  for (const auto& pr : irs.pairs()) {
    lowers.push_back(pr.lower);
    uppers.push_back(pr.upper);
  }
  const auto n = irs.universe().size();
  if (!(SetFamily(n, lowers) == interior) || !(SetFamily(n, uppers) == closure)) {
    return Check::fail({});
  }
  return Check::ok();
}

Check check_subdirect(const Equivalence& p, const Equivalence& q, std::size_t limit) {
  return check_subdirect(build_irs(p, q, limit), interior_system_opt(p, q, limit),
                         closure_system_opt(p, q, limit));
}

CompletionCheck check_smallest_completion(const RoughSystem& rs, const RoughSystem& irs) {
  CompletionCheck out;
  out.irs_size = irs.size();
  std::vector<std::size_t> embedded;
  for (const auto& pr : rs.pairs()) {
    auto i = irs.index_of(pr);
    if (!i) {
      out.dense.join_dense = Check::fail({});
      out.dense.meet_dense = Check::fail({});
      return out;
    }
    embedded.push_back(*i);
  }
  const auto lattice = require_lattice(irs.order());
  out.dense = check_dense(lattice, embedded);
  const auto dm = dm_completion(rs.order());
  out.dm_size = dm.lattice.size();
  out.isomorphic = is_isomorphic(dm.lattice.poset(), irs.order());
  return out;
}

CompletionCheck check_smallest_completion(const Equivalence& p, const Equivalence& q,
                                          std::size_t limit) {
  return check_smallest_completion(build_rs(SystemKind::optimistic, p, q, limit),
                                   build_irs(p, q, limit));
}

namespace {

Check closed_forms(const RoughSystem& s) {
  const bool literal = s.kind() == SystemKind::equivalence;
  const bool covering = (s.kind() == SystemKind::tolerance ||
                         s.kind() == SystemKind::pessimistic) &&
                        s.tolerance() && induced_by_irredundant_covering(*s.tolerance());
  if (!literal && !covering) return Check::not_applicable();
  auto result = try_lattice(s.order());
  auto* l = std::get_if<FiniteLattice>(&result);
  if (!l) return Check::not_applicable();

  for (std::size_t i = 0; i < s.size(); ++i) {
    const Subset bc = s[i].upper.complement();
    const Subset ac = s[i].lower.complement();
    const RoughPair star = literal ? RoughPair{bc, bc} : RoughPair{s.lower_op(bc), s.upper_op(bc)};
    const RoughPair plus = literal ? RoughPair{ac, ac} : RoughPair{s.lower_op(ac), s.upper_op(ac)};
    const auto actual_star = pseudocomplement(*l, i);
    const auto actual_plus = dual_pseudocomplement(*l, i);
    if (!actual_star || !actual_plus || s[*actual_star] != star || s[*actual_plus] != plus) {
      return Check::fail({i});
    }
  }
  return Check::ok();
}

}  // namespace

SystemReport classify_system(const RoughSystem& system) {
  SystemReport out;
  const auto map = system.polarity();
  if (map) {
    out.lattice = classify(system.order(), std::span<const std::size_t>(*map));
  } else {
    out.lattice = classify(system.order());
  }
  out.closed_form_pseudocomplements = closed_forms(system);
  return out;
}

FinitePoset family_poset(const SetFamily& family) {
  return FinitePoset::from_predicate(family.size(), [&](std::size_t a, std::size_t b) {
    return family[a].is_subset_of(family[b]);
  });
}

std::optional<std::vector<std::size_t>> family_map(const SetFamily& family,
                                                   const SetOperator& op) {
  std::vector<std::size_t> out(family.size());
  for (std::size_t i = 0; i < family.size(); ++i) {
    out[i] = family.index_of(op(family[i]));
    if (out[i] == family.size()) return std::nullopt;
  }
  return out;
}

}  // namespace mgrough
