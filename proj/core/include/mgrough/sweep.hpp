#pragma once

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "mgrough/approximations.hpp"
#include "mgrough/partitions.hpp"

namespace mgrough {

struct SweepConfig {
  /// Every ordered pair of partitions of n = 0..max_n elements.
  std::size_t max_n = 4;
  /// Extra seeded random pairs drawn for each n in (max_n, random_max_n].
  std::size_t random_pairs = 0;
  std::size_t random_max_n = 6;
  std::uint64_t seed = kDefaultSeed;
  std::size_t threads = 1;
  std::size_t limit = kDefaultExhaustiveLimit;
};

/// One failed invariant on one relation pair.
struct Violation {
  std::string check;
  std::size_t n = 0;
  std::string p;  ///< classes of P, e.g. "ab|c"
  std::string q;
  std::string detail;
};

/// Classification and violations for one ordered pair.
struct PairOutcome {
  bool coherent = false;
  bool condition_c = false;
  bool rs_lattice = false;
  std::vector<Violation> violations;
};

/// Names of every invariant evaluated by check_pair, in evaluation order.
const std::vector<std::string>& sweep_check_names();

/// Runs every invariant on (P, Q). `rng` only picks the sampled 3-element
/// family for the meet/join formulas.
PairOutcome check_pair(const Equivalence& p, const Equivalence& q, std::mt19937_64& rng,
                       std::size_t limit = kDefaultExhaustiveLimit);

struct SweepRow {
  std::size_t n = 0;
  bool random = false;
  std::size_t pairs = 0;
  std::size_t coherent = 0;
  std::size_t c_only = 0;   ///< (C) holds, not coherent
  std::size_t neither = 0;
  std::size_t lattice = 0;  ///< RS(P+Q) is a lattice
  std::size_t non_lattice = 0;
  std::size_t lattice_without_c = 0;
};

struct SweepSummary {
  std::vector<SweepRow> rows;
  std::vector<Violation> violations;
  SweepRow total() const;
};

/// Deterministic regardless of `threads`: each pair has its own seed derived
/// from (seed, n, pair index) and results are merged in enumeration order.
SweepSummary run_sweep(const SweepConfig& config);

/// Tab-separated counts table followed by one line per violation.
std::string format_summary(const SweepSummary& summary);

/// "ab|c" rendering of a partition's classes.
std::string format_classes(const Equivalence& e);

}  // namespace mgrough
