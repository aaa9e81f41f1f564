#include <stdexcept>

#include "mgrough/lattice.hpp"

namespace mgrough {

Check check_distributive(const FiniteLattice& l) {
  const auto m = l.size();
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      for (std::size_t z = y + 1; z < m; ++z) {
        if (l.meet(x, l.join(y, z)) != l.join(l.meet(x, y), l.meet(x, z))) {
          return Check::fail({x, y, z});
        }
      }
    }
  }
  return Check::ok();
}

Check check_modular(const FiniteLattice& l) {
  const auto m = l.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t c = 0; c < m; ++c) {
      if (!l.poset().less(a, c)) continue;
      for (std::size_t b = 0; b < m; ++b) {
        if (l.meet(b, a) == l.meet(b, c) && l.join(b, a) == l.join(b, c)) {
          return Check::fail({l.meet(a, b), a, c, b, l.join(a, b)});
        }
      }
    }
  }
  return Check::ok();
}

Check check_upper_semimodular(const FiniteLattice& l) {
  const auto m = l.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (l.is_cover(l.meet(a, b), a) && !l.is_cover(b, l.join(a, b))) {
        return Check::fail({a, b});
      }
    }
  }
  return Check::ok();
}

Check check_lower_semimodular(const FiniteLattice& l) {
  const auto m = l.size();
  for (std::size_t a = 0; a < m; ++a) {
    for (std::size_t b = 0; b < m; ++b) {
      if (l.is_cover(a, l.join(a, b)) && !l.is_cover(l.meet(a, b), b)) {
        return Check::fail({a, b});
      }
    }
  }
  return Check::ok();
}

std::optional<std::size_t> pseudocomplement(const FiniteLattice& l, std::size_t x) {
  std::size_t candidate = l.bottom();
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (l.meet(x, z) == l.bottom()) candidate = l.join(candidate, z);
  }
  if (l.meet(x, candidate) == l.bottom()) return candidate;
  return std::nullopt;
}

std::optional<std::size_t> dual_pseudocomplement(const FiniteLattice& l, std::size_t x) {
  std::size_t candidate = l.top();
  for (std::size_t z = 0; z < l.size(); ++z) {
    if (l.join(x, z) == l.top()) candidate = l.meet(candidate, z);
  }
  if (l.join(x, candidate) == l.top()) return candidate;
  return std::nullopt;
}

StoneFamily check_stone_family(const FiniteLattice& l) {
  const auto m = l.size();
  std::vector<std::optional<std::size_t>> star(m), plus(m);
  StoneFamily out;
  for (std::size_t x = 0; x < m; ++x) {
    star[x] = pseudocomplement(l, x);
    plus[x] = dual_pseudocomplement(l, x);
    if (!star[x] && out.pseudocomplemented.holds) out.pseudocomplemented = Check::fail({x});
    if (!plus[x] && out.dual_pseudocomplemented.holds) {
      out.dual_pseudocomplemented = Check::fail({x});
    }
  }

  if (!out.pseudocomplemented.holds) {
    out.st1 = out.pseudocomplemented;
  } else {
    for (std::size_t x = 0; x < m; ++x) {
      if (l.join(*star[x], *star[*star[x]]) != l.top()) {
        out.st1 = Check::fail({x});
        break;
      }
    }
  }

  if (!out.dual_pseudocomplemented.holds) {
    out.st2 = out.dual_pseudocomplemented;
  } else {
    for (std::size_t x = 0; x < m; ++x) {
      if (l.meet(*plus[x], *plus[*plus[x]]) != l.bottom()) {
        out.st2 = Check::fail({x});
        break;
      }
    }
  }

  if (!out.pseudocomplemented.holds) {
    out.regular = out.pseudocomplemented;
  } else if (!out.dual_pseudocomplemented.holds) {
    out.regular = out.dual_pseudocomplemented;
  } else {
    for (std::size_t x = 0; x < m && out.regular.holds; ++x) {
      for (std::size_t y = x + 1; y < m; ++y) {
        if (star[x] == star[y] && plus[x] == plus[y]) {
          out.regular = Check::fail({x, y});
          break;
        }
      }
    }
  }
  return out;
}

Check check_polarity(const FinitePoset& poset, std::span<const std::size_t> map) {
  const auto m = poset.size();
  if (map.size() != m) throw std::invalid_argument("polarity map must cover every element");
  for (std::size_t x = 0; x < m; ++x) {
    if (map[x] >= m) throw std::invalid_argument("polarity map points outside the poset");
  }
  for (std::size_t x = 0; x < m; ++x) {
    if (map[map[x]] != x) return Check::fail({x});
  }
  for (std::size_t x = 0; x < m; ++x) {
    for (std::size_t y = 0; y < m; ++y) {
      if (poset.leq(x, y) && !poset.leq(map[y], map[x])) return Check::fail({x, y});
    }
  }
  return Check::ok();
}

Check check_kleene(const FiniteLattice& l, std::span<const std::size_t> map) {
  if (auto p = check_polarity(l.poset(), map); !p.holds) return p;
  if (auto d = check_distributive(l); !d.holds) return d;
  for (std::size_t x = 0; x < l.size(); ++x) {
    for (std::size_t y = 0; y < l.size(); ++y) {
      if (!l.leq(l.meet(x, map[x]), l.join(y, map[y]))) return Check::fail({x, y});
    }
  }
  return Check::ok();
}

Check check_ortho(const FiniteLattice& l, std::span<const std::size_t> map) {
  if (auto p = check_polarity(l.poset(), map); !p.holds) return p;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.join(x, map[x]) != l.top() || l.meet(x, map[x]) != l.bottom()) {
      return Check::fail({x});
    }
  }
  return Check::ok();
}

std::vector<std::size_t> atoms(const FiniteLattice& l) {
  std::vector<std::size_t> out;
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.is_cover(l.bottom(), x)) out.push_back(x);
  }
  return out;
}

Check check_atomistic(const FiniteLattice& l) {
  DynBitset atom_set(l.size());
  for (auto a : atoms(l)) atom_set.set(a);
  for (std::size_t x = 0; x < l.size(); ++x) {
    if (l.join_of(atom_set & l.poset().down(x)) != x) return Check::fail({x});
  }
  return Check::ok();
}

Check check_boolean(const FiniteLattice& l) {
  if (auto d = check_distributive(l); !d.holds) return d;
  for (std::size_t x = 0; x < l.size(); ++x) {
    bool complemented = false;
    for (std::size_t y = 0; y < l.size() && !complemented; ++y) {
      complemented = l.meet(x, y) == l.bottom() && l.join(x, y) == l.top();
    }
    if (!complemented) return Check::fail({x});
  }
  return Check::ok();
}

DenseResult check_dense(const FiniteLattice& l, std::span<const std::size_t> subset) {
  DynBitset members(l.size());
  for (auto s : subset) {
    if (s >= l.size()) throw std::invalid_argument("dense-subset index out of range");
    members.set(s);
  }
  DenseResult out;
  for (std::size_t a = 0; a < l.size(); ++a) {
    if (out.join_dense.holds && l.join_of(members & l.poset().down(a)) != a) {
      out.join_dense = Check::fail({a});
    }
    if (out.meet_dense.holds && l.meet_of(members & l.poset().up(a)) != a) {
      out.meet_dense = Check::fail({a});
    }
  }
  return out;
}

std::vector<std::pair<std::string_view, const Check*>> LatticeReport::fields() const {
  return {
      {"is_lattice", &is_lattice},
      {"is_distributive", &is_distributive},
      {"is_modular", &is_modular},
      {"is_upper_semimodular", &is_upper_semimodular},
      {"is_lower_semimodular", &is_lower_semimodular},
      {"is_pseudocomplemented", &is_pseudocomplemented},
      {"is_dual_pseudocomplemented", &is_dual_pseudocomplemented},
      {"is_stone", &is_stone},
      {"is_dual_stone", &is_dual_stone},
      {"is_double_stone", &is_double_stone},
      {"is_regular_double", &is_regular_double},
      {"is_atomistic", &is_atomistic},
      {"is_boolean", &is_boolean},
      {"has_given_polarity_valid", &has_given_polarity_valid},
      {"is_kleene", &is_kleene},
      {"is_ortho_under_given_map", &is_ortho_under_given_map},
  };
}

namespace {

// First failing check of a conjunction, or ok.
Check all_of(std::initializer_list<const Check*> parts) {
  for (const Check* c : parts) {
    if (!c->holds) return *c;
  }
  return Check::ok();
}

}  // namespace

LatticeReport classify(const FinitePoset& poset,
                       std::optional<std::span<const std::size_t>> polarity) {
  LatticeReport r;
  const auto na = Check::not_applicable();
  r.has_given_polarity_valid = polarity ? check_polarity(poset, *polarity) : na;

  auto result = try_lattice(poset);
  if (auto* w = std::get_if<NonLatticeWitness>(&result)) {
    std::vector<std::size_t> witness;
    if (w->kind != NonLatticeWitness::Kind::empty_poset) {
      witness = {w->a, w->b};
      witness.insert(witness.end(), w->bounds.begin(), w->bounds.end());
    }
    r.is_lattice = Check::fail(std::move(witness));
    for (Check* c : {&r.is_distributive, &r.is_modular, &r.is_upper_semimodular,
                     &r.is_lower_semimodular, &r.is_pseudocomplemented,
                     &r.is_dual_pseudocomplemented, &r.is_stone, &r.is_dual_stone,
                     &r.is_double_stone, &r.is_regular_double, &r.is_atomistic, &r.is_boolean,
                     &r.is_kleene, &r.is_ortho_under_given_map}) {
      *c = na;
    }
    return r;
  }

  const auto& l = std::get<FiniteLattice>(result);
  r.is_lattice = Check::ok();
  r.is_distributive = check_distributive(l);
  r.is_modular = check_modular(l);
  r.is_upper_semimodular = check_upper_semimodular(l);
  r.is_lower_semimodular = check_lower_semimodular(l);
  const auto stone = check_stone_family(l);
  r.is_pseudocomplemented = stone.pseudocomplemented;
  r.is_dual_pseudocomplemented = stone.dual_pseudocomplemented;
  r.is_stone = all_of({&r.is_distributive, &stone.pseudocomplemented, &stone.st1});
  r.is_dual_stone = all_of({&r.is_distributive, &stone.dual_pseudocomplemented, &stone.st2});
  r.is_double_stone = all_of({&r.is_stone, &r.is_dual_stone});
  r.is_regular_double = all_of(
      {&stone.pseudocomplemented, &stone.dual_pseudocomplemented, &stone.regular});
  r.is_atomistic = check_atomistic(l);
  r.is_boolean = check_boolean(l);
  r.is_kleene = polarity ? check_kleene(l, *polarity) : na;
  r.is_ortho_under_given_map = polarity ? check_ortho(l, *polarity) : na;
  return r;
}

}  // namespace mgrough
