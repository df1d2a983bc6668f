#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <vector>

#include "rcc8/composition_table.hpp"
#include "rcc8/grid_region.hpp"
#include "rcc8/relations.hpp"

namespace rcc8 {

/// A concrete model of one composition-table entry: three regions together
/// with the relations classify assigns to their pairs.
struct Witness {
  GridRegion x;
  GridRegion y;
  GridRegion z;
  Relation xy;
  Relation yz;
  Relation xz;
};

inline constexpr std::uint64_t kDefaultSoundnessSamples = 100000;
inline constexpr std::uint64_t kDefaultWitnessBudget = 20000;

/// Draws n random region triples (multi-piece allowed: strictly more models
/// than one-piece, so a strictly stronger check) and returns every triple
/// whose classified (xy, yz, xz) contradicts the table. Deterministic per
/// seed; an empty result is the soundness verdict.
std::vector<Witness> soundness_sample(const CompositionTable& t, std::uint64_t n,
                                      GridExtent bounds, std::uint64_t seed);

/// Exhaustive soundness check over every triple of axis-aligned rectangles
/// in the (clamped) window. Complements random sampling: independent draws
/// almost never produce nested configurations, so a dropped parthood entry
/// is invisible to sampling but caught here deterministically. Returns at
/// most `limit` violations.
std::vector<Witness> catalog_soundness(const CompositionTable& t, GridExtent bounds,
                                       std::size_t limit = 1000);

/// Searches for regions realizing the triple (r1, r2, r3). A deterministic
/// catalog of axis-aligned rectangles is scanned first (the seeded
/// constructions; margin-hungry entries such as nested-parthood chains are
/// found here), then up to `budget` random one-piece triples are drawn.
/// A returned witness proves realizability; nullopt does not prove the
/// opposite.
std::optional<Witness> witness_search(Relation r1, Relation r2, Relation r3,
                                      std::uint64_t budget, GridExtent bounds,
                                      std::uint64_t seed);

enum class WitnessSource { Catalog, Sampled, NotFound };

struct CoverageEntry {
  Relation r1;
  Relation r2;
  Relation r3;
  WitnessSource source = WitnessSource::NotFound;
  std::optional<Witness> witness;
};

/// Witness coverage of every entry asserted by the table.
struct CoverageReport {
  std::vector<CoverageEntry> entries;
  std::size_t found = 0;
  bool complete() const { return found == entries.size(); }
};

CoverageReport witness_coverage(const CompositionTable& t, std::uint64_t budget,
                                GridExtent bounds, std::uint64_t seed);

/// Empirical composition table: per (r1, r2) cell, the set of r3 values seen
/// across random triples, with per-cell coverage against a reference table.
struct ObservedComposition {
  std::array<std::array<RelationSet, kRelationCount>, kRelationCount> observed{};
  /// Observed entries that the reference does not assert (empty when the
  /// reference is sound for this model).
  std::vector<Witness> unsound;
  std::size_t observed_entries = 0;
  std::size_t reference_entries = 0;
};

ObservedComposition observed_composition(const CompositionTable& reference,
                                         std::uint64_t samples, GridExtent bounds,
                                         std::uint64_t seed);

}  // namespace rcc8
