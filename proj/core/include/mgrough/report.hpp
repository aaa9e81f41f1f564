#pragma once

#include <cstddef>
#include <string>

#include "mgrough/approximations.hpp"

namespace mgrough {

enum class ReportFormat { json, tsv };

/// Structured analysis of a relation pair. Top-level keys, in order:
///   universe, P, Q, coherent, condition_c, u1, u2, u3, h_family,
///   h_covers_universe, h_induces_union, union_irredundant, sizes,
///   families (interior_opt, closure_opt, interior_pess, closure_pess),
///   systems (rs_opt, rs_pess, irs_opt), completion.
/// Every lattice flag is {"holds", "applicable", "witness"} with the witness
/// rendered as element labels. The tsv form flattens keys with '.'.
std::string pair_report(const Equivalence& p, const Equivalence& q,
                        ReportFormat format = ReportFormat::json,
                        std::size_t limit = kDefaultExhaustiveLimit);

}  // namespace mgrough
