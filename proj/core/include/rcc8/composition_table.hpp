#pragma once

#include <array>
#include <filesystem>
#include <string>
#include <string_view>

#include "rcc8/relations.hpp"

namespace rcc8 {

/// Total 8x8 map from base-relation pairs to the set of relations possible
/// between the outer pair. Instances are only obtainable through
/// load_composition_table, which enforces non-emptiness, the identity law
/// and the converse law, so lookups never fail.
class CompositionTable {
 public:
  const RelationSet& cell(Relation r1, Relation r2) const {
    return cells_[index_of(r1)][index_of(r2)];
  }

  /// Number of (r1, r2, r3) entries asserted by the table.
  std::size_t entry_count() const;

 private:
  friend CompositionTable load_composition_table(std::string_view json_text);

  std::array<std::array<RelationSet, kRelationCount>, kRelationCount> cells_;
};

RelationSet compose(Relation r1, Relation r2, const CompositionTable& t);

/// Union of compose over the cartesian product of the two sets; empty input
/// yields the empty set.
RelationSet compose_sets(RelationSet s1, RelationSet s2, const CompositionTable& t);

/// Parses and validates a table document: a JSON object with exactly 64 keys
/// "R1|R2" (canonical names) mapping to nonempty arrays of canonical names.
/// Throws MalformedTableError or LawViolationError.
CompositionTable load_composition_table(std::string_view json_text);

CompositionTable load_composition_table_file(const std::filesystem::path& path);

/// Repository-shipped table asset (overridable via CLI flags).
std::filesystem::path default_composition_table_path();

}  // namespace rcc8
