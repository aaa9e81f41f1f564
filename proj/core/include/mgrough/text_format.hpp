#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "mgrough/relations.hpp"

namespace mgrough {

/// Parsed relation file:
///
///     # comment
///     universe: a b c
///     partition P: a b | c
///     partition Q: a | b c
///     tolerance T: a-b b-c
///
/// The universe line must precede every relation line. Names are unique per file.
struct RelationFile {
  Universe universe;
  std::vector<std::pair<std::string, Equivalence>> partitions;
  std::vector<std::pair<std::string, Tolerance>> tolerances;

  /// Throws InvalidRelation when no partition has that name.
  const Equivalence& partition(std::string_view name) const;
  const Tolerance& tolerance(std::string_view name) const;
};

/// Throws ParseError (1-based line/column) on malformed input.
RelationFile parse_relation_file(std::string_view text);

/// Writes a file that parse_relation_file reads back to equal relations.
std::string format_relation_file(const RelationFile& file);

}  // namespace mgrough
