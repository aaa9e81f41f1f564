#include "mgrough/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <sstream>
#include <thread>

#include "mgrough/rough_systems.hpp"

namespace mgrough {

std::string format_classes(const Equivalence& e) {
  std::string out;
  for (const auto& c : e.classes()) {
    if (!out.empty()) out += '|';
    out += e.universe().format(c);
  }
  return out.empty() ? "-" : out;
}

const std::vector<std::string>& sweep_check_names() {
  static const std::vector<std::string> names = {
      "coherence_characterizations",
      "u123_partition",
      "coherent_split_and_h",
      "h_tolerance_within_union",
      "block_iff_preblock",
      "irredundant_iff_h_induces",
      "approximation_chain",
      "optimistic_duality",
      "coherent_optimistic_is_intersection",
      "pessimistic_formulas",
      "optimistic_members_definable",
      "optimistic_families_dually_isomorphic",
      "optimistic_distributive_iff_coherent",
      "pessimistic_orthocomplements",
      "h_induced_boolean_families",
      "condition_c_lattice_formulas",
      "coherent_systems_double_stone",
      "h_induced_pessimistic_kleene",
      "rs_polarity",
      "rs_within_irs",
      "irs_subdirect",
      "irs_polarity_sublattice",
      "irs_smallest_completion",
      "rs_lattice_iff_rs_equals_irs",
      "distributive_iff_coherent",
  };
  return names;
}

namespace {

std::string join_indices(const std::vector<std::size_t>& w) {
  std::string out;
  for (auto x : w) {
    if (!out.empty()) out += ',';
    out += std::to_string(x);
  }
  return out;
}

class PairChecker {
 public:
  PairChecker(const Equivalence& p, const Equivalence& q, std::mt19937_64& rng, std::size_t limit)
      : p_(p), q_(q), rng_(rng), limit_(limit), u_(p.universe()) {}

  PairOutcome run() {
    try {
      run_all();
    } catch (const std::exception& e) {
      fail("exception", e.what());
    }
    return std::move(out_);
  }

 private:
  void fail(const std::string& check, const std::string& detail) {
    out_.violations.push_back({check, u_.size(), format_classes(p_), format_classes(q_), detail});
  }

  void expect(bool ok, const std::string& check, const std::string& detail = {}) {
    if (!ok) fail(check, detail);
  }

  std::string fmt(const Subset& s) const { return u_.format(s); }

  void run_all() {
    const auto n = u_.size();
    const Tolerance uni = rel_union(p_, q_);
    const Equivalence inter = rel_intersection(p_, q_);
    const bool coherent = is_coherent(p_, q_);
    const bool c = condition_c(p_, q_);
    out_.coherent = coherent;
    out_.condition_c = c;

    const auto triple = coherence_triple_check(p_, q_);
    expect(triple.coherent == triple.union_is_transitive &&
               triple.coherent == triple.union_equals_composition,
           "coherence_characterizations");

    const auto split = partition_u123(p_, q_);
    expect(!split.u1.intersects(split.u2) && !split.u1.intersects(split.u3) &&
               !split.u2.intersects(split.u3) && (split.u1 | split.u2 | split.u3).is_full(),
           "u123_partition");
    const bool h_induces = h_induces_union(p_, q_);
    if (coherent) {
      expect(split.u3.is_empty() && h_induces, "coherent_split_and_h");
    }

    const auto h = covering_h(p_, q_);
    expect(induced_relation(u_, h.members()).is_subset_of(uni.relation()),
           "h_tolerance_within_union");

    for (std::size_t x = 0; x < n; ++x) {
      const auto& nb = uni.neighborhood(x);
      expect(is_block(uni, nb) == is_preblock(uni, nb), "block_iff_preblock",
             "x=" + u_.name(x));
    }
    expect(induced_by_irredundant_covering(uni) == h_induces, "irredundant_iff_h_induces");

    // Operator-level facts over every subset.
    for_each_subset(n, [&](const Subset& x) {
      const Subset lp = lower_e(p_, x), lq = lower_e(q_, x);
      const Subset up = upper_e(p_, x), uq = upper_e(q_, x);
      const Subset ol = opt_lower(p_, q_, x), ou = opt_upper(p_, q_, x);
      const Subset pl = pess_lower(p_, q_, x), pu = pess_upper(p_, q_, x);
      expect(pl.is_subset_of(lp) && pl.is_subset_of(lq) && lp.is_subset_of(ol) &&
                 lq.is_subset_of(ol) && ol.is_subset_of(x) && x.is_subset_of(ou) &&
                 ou.is_subset_of(up) && ou.is_subset_of(uq) && up.is_subset_of(pu) &&
                 uq.is_subset_of(pu),
             "approximation_chain", "X=" + fmt(x));
      expect(ou == opt_lower(p_, q_, x.complement()).complement(), "optimistic_duality",
             "X=" + fmt(x));
      if (coherent) {
        expect(ou == upper_e(inter, x) && ol == lower_e(inter, x),
               "coherent_optimistic_is_intersection", "X=" + fmt(x));
      }
      expect(pl == lower_t(uni, x) && pu == upper_t(uni, x), "pessimistic_formulas",
             "X=" + fmt(x));
    });

    const auto interior = interior_system_opt(p_, q_, limit_);
    const auto closure = closure_system_opt(p_, q_, limit_);
    for (const auto& fam : {interior, closure}) {
      for (const auto& x : fam) {
        expect(pq_definable_check(p_, q_, x), "optimistic_members_definable", "X=" + fmt(x));
      }
    }

    const auto interior_poset = family_poset(interior);
    const auto closure_poset = family_poset(closure);
    bool complements_match = interior.size() == closure.size();
    for (const auto& x : closure) complements_match &= interior.contains(x.complement());
    expect(complements_match && is_isomorphic(closure_poset, order_dual(interior_poset)),
           "optimistic_families_dually_isomorphic");

    const auto interior_l = require_lattice(interior_poset);
    const auto closure_l = require_lattice(closure_poset);
    const bool fam_distributive =
        check_distributive(interior_l).holds && check_distributive(closure_l).holds;
    const bool fam_boolean = check_boolean(interior_l).holds && check_atomistic(interior_l).holds &&
                             check_boolean(closure_l).holds && check_atomistic(closure_l).holds;
    expect(fam_distributive == coherent && fam_boolean == coherent,
           "optimistic_distributive_iff_coherent");

    const auto pess_upper_fam = upper_system(uni, limit_);
    const auto pess_lower_fam = lower_system(uni, limit_);
    const auto upper_l = require_lattice(family_poset(pess_upper_fam));
    const auto lower_l = require_lattice(family_poset(pess_lower_fam));
    const auto upper_ortho = family_map(
        pess_upper_fam, [&](const Subset& x) { return upper_t(uni, x.complement()); });
    const auto lower_ortho = family_map(
        pess_lower_fam, [&](const Subset& x) { return lower_t(uni, x.complement()); });
    expect(upper_ortho && lower_ortho && check_ortho(upper_l, *upper_ortho).holds &&
               check_ortho(lower_l, *lower_ortho).holds,
           "pessimistic_orthocomplements");
    if (h_induces) {
      expect(check_boolean(upper_l).holds && check_atomistic(upper_l).holds &&
                 check_boolean(lower_l).holds && check_atomistic(lower_l).holds,
             "h_induced_boolean_families");
    }

    const auto rs = build_rs(SystemKind::optimistic, p_, q_, limit_);
    const auto pess = build_rs(SystemKind::pessimistic, p_, q_, limit_);
    const auto irs = build_irs(p_, q_, limit_);
    const bool rs_lattice = std::holds_alternative<FiniteLattice>(try_lattice(rs.order()));
    out_.rs_lattice = rs_lattice;

    if (c) {
      expect(rs_lattice, "condition_c_lattice_formulas", "RS(P+Q) is not a lattice");
      const auto m = rs.size();
      for (std::size_t a = 0; a < m; ++a) {
        for (std::size_t b = a + 1; b < m; ++b) {
          const std::size_t fam[] = {a, b};
          const auto chk = meet_join_formula_check(rs, fam);
          expect(chk.holds, "condition_c_lattice_formulas", "family=" + join_indices(chk.witness));
        }
      }
      if (m >= 3) {
        std::vector<std::size_t> fam;
        while (fam.size() < 3) {
          const auto k = static_cast<std::size_t>(rng_() % m);
          if (std::find(fam.begin(), fam.end(), k) == fam.end()) fam.push_back(k);
        }
        const auto chk = meet_join_formula_check(rs, fam);
        expect(chk.holds, "condition_c_lattice_formulas", "family=" + join_indices(chk.witness));
      }
    }

    const auto rs_report = classify_system(rs);
    const auto pess_report = classify_system(pess);
    const auto irs_report = classify_system(irs);
    if (coherent) {
      const auto rs_inter = build_rs_equivalence(inter, limit_);
      expect(rs.pairs() == rs_inter.pairs() && rs_report.lattice.is_double_stone.holds &&
                 rs_report.lattice.is_regular_double.holds &&
                 pess_report.lattice.is_double_stone.holds &&
                 pess_report.lattice.is_regular_double.holds,
             "coherent_systems_double_stone");
    }
    if (h_induces) {
      const auto& l = pess_report.lattice;
      expect(l.is_distributive.holds && l.is_pseudocomplemented.holds &&
                 l.is_regular_double.holds && l.is_kleene.holds &&
                 pess_report.closed_form_pseudocomplements.holds,
             "h_induced_pessimistic_kleene");
    }

    const auto rs_pol = check_polarity_rs(rs);
    expect(rs_pol.holds, "rs_polarity", "witness=" + join_indices(rs_pol.witness));
    expect(verify_rs_containment(rs, irs), "rs_within_irs");
    const auto sub = check_subdirect(irs, interior, closure);
    expect(sub.holds, "irs_subdirect", "witness=" + join_indices(sub.witness));
    const auto irs_pol = check_polarity_rs(irs);
    expect(irs_report.lattice.is_lattice.holds && irs_pol.holds, "irs_polarity_sublattice",
           "witness=" + join_indices(irs_pol.witness));
    const auto completion = check_smallest_completion(rs, irs);
    expect(completion.holds(), "irs_smallest_completion",
           "dm=" + std::to_string(completion.dm_size) + " irs=" +
               std::to_string(completion.irs_size));

    const bool rs_sub = check_subdirect(rs, interior, closure).holds;
    expect(rs_lattice == (rs.pairs() == irs.pairs()) && rs_lattice == rs_sub,
           "rs_lattice_iff_rs_equals_irs");

    const bool rs_stone = rs_report.lattice.is_double_stone.holds &&
                          rs_report.lattice.is_regular_double.holds;
    bool dist_ok = irs_report.lattice.is_distributive.holds == coherent && rs_stone == coherent;
    if (rs_lattice) dist_ok &= rs_report.lattice.is_distributive.holds == coherent;
    expect(dist_ok, "distributive_iff_coherent");
  }

  const Equivalence& p_;
  const Equivalence& q_;
  std::mt19937_64& rng_;
  std::size_t limit_;
  const Universe& u_;
  PairOutcome out_;
};

struct Job {
  std::size_t n;
  bool random;
  Equivalence p;
  Equivalence q;
  std::uint64_t seed;
};

std::uint64_t mix_seed(std::uint64_t seed, std::size_t n, std::size_t i, std::size_t j) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(n), static_cast<std::uint32_t>(i),
                    static_cast<std::uint32_t>(j)};
  std::uint32_t words[2];
  seq.generate(words, words + 2);
  return (std::uint64_t{words[0]} << 32) | words[1];
}

}  // namespace

PairOutcome check_pair(const Equivalence& p, const Equivalence& q, std::mt19937_64& rng,
                       std::size_t limit) {
  if (!(p.universe() == q.universe())) throw UniverseMismatch();
  return PairChecker(p, q, rng, limit).run();
}

SweepRow SweepSummary::total() const {
  SweepRow t;
  for (const auto& r : rows) {
    t.pairs += r.pairs;
    t.coherent += r.coherent;
    t.c_only += r.c_only;
    t.neither += r.neither;
    t.lattice += r.lattice;
    t.non_lattice += r.non_lattice;
    t.lattice_without_c += r.lattice_without_c;
  }
  return t;
}

SweepSummary run_sweep(const SweepConfig& config) {
  std::vector<Job> jobs;
  for (std::size_t n = 0; n <= config.max_n; ++n) {
    const auto parts = all_partitions(letters_universe(n));
    for (std::size_t i = 0; i < parts.size(); ++i) {
      for (std::size_t j = 0; j < parts.size(); ++j) {
        jobs.push_back({n, false, parts[i], parts[j], mix_seed(config.seed, n, i, j)});
      }
    }
  }
  for (std::size_t n = config.max_n + 1; n <= config.random_max_n && config.random_pairs > 0;
       ++n) {
    const auto u = letters_universe(n);
    std::mt19937_64 gen(mix_seed(config.seed, n, 0, 1));
    for (std::size_t k = 0; k < config.random_pairs; ++k) {
      auto p = random_partition(u, gen);
      auto q = random_partition(u, gen);
      jobs.push_back({n, true, std::move(p), std::move(q), mix_seed(config.seed, n, k, 2)});
    }
  }

  std::vector<PairOutcome> outcomes(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t k = next++; k < jobs.size(); k = next++) {
      std::mt19937_64 rng(jobs[k].seed);
      outcomes[k] = check_pair(jobs[k].p, jobs[k].q, rng, config.limit);
    }
  };
  const auto threads = std::max<std::size_t>(1, config.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  SweepSummary summary;
  for (std::size_t k = 0; k < jobs.size(); ++k) {
    if (summary.rows.empty() || summary.rows.back().n != jobs[k].n ||
        summary.rows.back().random != jobs[k].random) {
      summary.rows.push_back({jobs[k].n, jobs[k].random});
    }
    auto& row = summary.rows.back();
    const auto& o = outcomes[k];
    ++row.pairs;
    if (o.coherent) {
      ++row.coherent;
    } else if (o.condition_c) {
      ++row.c_only;
    } else {
      ++row.neither;
    }
    ++(o.rs_lattice ? row.lattice : row.non_lattice);
    if (o.rs_lattice && !o.condition_c) ++row.lattice_without_c;
    summary.violations.insert(summary.violations.end(), o.violations.begin(),
                              o.violations.end());
  }
  return summary;
}

std::string format_summary(const SweepSummary& summary) {
  std::ostringstream out;
  out << "mode\tn\tpairs\tcoherent\tc_only\tneither\tlattice\tnon_lattice\tlattice_without_c\n";
  auto line = [&](const std::string& mode, const std::string& n, const SweepRow& r) {
    out << mode << '\t' << n << '\t' << r.pairs << '\t' << r.coherent << '\t' << r.c_only << '\t'
        << r.neither << '\t' << r.lattice << '\t' << r.non_lattice << '\t'
        << r.lattice_without_c << '\n';
  };
  for (const auto& r : summary.rows) {
    line(r.random ? "random" : "exhaustive", std::to_string(r.n), r);
  }
  line("total", "-", summary.total());
  out << "violations\t" << summary.violations.size() << '\n';
  for (const auto& v : summary.violations) {
    out << "violation\t" << v.check << '\t' << v.n << '\t' << v.p << '\t' << v.q << '\t'
        << v.detail << '\n';
  }
  return out.str();
}

}  // namespace mgrough
