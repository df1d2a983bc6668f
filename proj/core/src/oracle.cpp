#include "rcc8/oracle.hpp"

#include <algorithm>

namespace rcc8 {

namespace {

GridRegion rectangle(int col0, int row0, int cols, int rows) {
  std::vector<GridCell> cells;
  cells.reserve(static_cast<std::size_t>(cols * rows));
  for (int r = row0; r < row0 + rows; ++r)
    for (int c = col0; c < col0 + cols; ++c) cells.push_back({c, r});
  return GridRegion(std::move(cells));
}

/// All axis-aligned rectangles within a (clamped) window. Rectangles alone
/// realize every relation and almost every table entry, and scanning them is
/// deterministic, so they serve as the seeded construction catalog.
class RectangleCatalog {
 public:
  explicit RectangleCatalog(GridExtent bounds) {
    int w = std::min(bounds.width, 6);
    int h = std::min(bounds.height, 6);
    for (int c0 = 0; c0 < w; ++c0)
      for (int r0 = 0; r0 < h; ++r0)
        for (int cs = 1; c0 + cs <= w; ++cs)
          for (int rs = 1; r0 + rs <= h; ++rs) regions_.push_back(rectangle(c0, r0, cs, rs));
    const std::size_t n = regions_.size();
    rel_.resize(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b)
        rel_[a * n + b] = static_cast<std::uint8_t>(classify(regions_[a], regions_[b]));
  }

  std::optional<Witness> find(Relation r1, Relation r2, Relation r3) const {
    const std::size_t n = regions_.size();
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (rel_[x * n + y] != static_cast<std::uint8_t>(r1)) continue;
        for (std::size_t z = 0; z < n; ++z) {
          if (rel_[y * n + z] != static_cast<std::uint8_t>(r2)) continue;
          if (rel_[x * n + z] != static_cast<std::uint8_t>(r3)) continue;
          return Witness{regions_[x], regions_[y], regions_[z], r1, r2, r3};
        }
      }
    }
    return std::nullopt;
  }

  std::vector<Witness> scan_violations(const CompositionTable& t, std::size_t limit) const {
    std::array<std::array<bool, kRelationCount>, kRelationCount * kRelationCount> member{};
    for (Relation r1 : kAllRelations)
      for (Relation r2 : kAllRelations)
        for (Relation r3 : kAllRelations)
          member[index_of(r1) * kRelationCount + index_of(r2)][index_of(r3)] =
              t.cell(r1, r2).contains(r3);

    std::vector<Witness> violations;
    const std::size_t n = regions_.size();
    for (std::size_t x = 0; x < n && violations.size() < limit; ++x) {
      for (std::size_t y = 0; y < n && violations.size() < limit; ++y) {
        const std::uint8_t xy = rel_[x * n + y];
        const auto* row = &member[xy * kRelationCount];
        for (std::size_t z = 0; z < n; ++z) {
          const std::uint8_t yz = rel_[y * n + z];
          const std::uint8_t xz = rel_[x * n + z];
          if (row[yz][xz]) continue;
          violations.push_back({regions_[x], regions_[y], regions_[z],
                                static_cast<Relation>(xy), static_cast<Relation>(yz),
                                static_cast<Relation>(xz)});
          if (violations.size() >= limit) break;
        }
      }
    }
    return violations;
  }

 private:
  std::vector<GridRegion> regions_;
  std::vector<std::uint8_t> rel_;
};

}  // namespace

std::vector<Witness> soundness_sample(const CompositionTable& t, std::uint64_t n,
                                      GridExtent bounds, std::uint64_t seed) {
  std::vector<Witness> violations;
  Rng rng(seed);
  for (std::uint64_t i = 0; i < n; ++i) {
    GridRegion x = random_region(bounds, /*one_piece=*/false, rng);
    GridRegion y = random_region(bounds, /*one_piece=*/false, rng);
    GridRegion z = random_region(bounds, /*one_piece=*/false, rng);
    Relation xy = classify(x, y);
    Relation yz = classify(y, z);
    Relation xz = classify(x, z);
    if (!t.cell(xy, yz).contains(xz))
      violations.push_back({std::move(x), std::move(y), std::move(z), xy, yz, xz});
  }
  return violations;
}

std::vector<Witness> catalog_soundness(const CompositionTable& t, GridExtent bounds,
                                       std::size_t limit) {
  return RectangleCatalog(bounds).scan_violations(t, limit);
}

std::optional<Witness> witness_search(Relation r1, Relation r2, Relation r3,
                                      std::uint64_t budget, GridExtent bounds,
                                      std::uint64_t seed) {
  RectangleCatalog catalog(bounds);
  if (auto w = catalog.find(r1, r2, r3)) return w;

  Rng rng(seed);
  for (std::uint64_t i = 0; i < budget; ++i) {
    GridRegion x = random_region(bounds, /*one_piece=*/true, rng);
    GridRegion y = r1 == Relation::EQ ? x : random_region(bounds, /*one_piece=*/true, rng);
    if (classify(x, y) != r1) continue;
    GridRegion z = r3 == Relation::EQ   ? x
                   : r2 == Relation::EQ ? y
                                        : random_region(bounds, /*one_piece=*/true, rng);
    if (classify(y, z) != r2) continue;
    if (classify(x, z) != r3) continue;
    return Witness{std::move(x), std::move(y), std::move(z), r1, r2, r3};
  }
  return std::nullopt;
}

CoverageReport witness_coverage(const CompositionTable& t, std::uint64_t budget,
                                GridExtent bounds, std::uint64_t seed) {
  // One shared catalog; witness_search would rebuild it per entry.
  RectangleCatalog catalog(bounds);
  CoverageReport report;
  std::uint64_t entry_index = 0;
  for (Relation r1 : kAllRelations) {
    for (Relation r2 : kAllRelations) {
      for (Relation r3 : t.cell(r1, r2).members()) {
        CoverageEntry entry{r1, r2, r3};
        if (auto w = catalog.find(r1, r2, r3)) {
          entry.source = WitnessSource::Catalog;
          entry.witness = std::move(w);
        } else {
          // Distinct deterministic substream per entry.
          if (auto w = witness_search(r1, r2, r3, budget, bounds, seed + entry_index)) {
            entry.source = WitnessSource::Sampled;
            entry.witness = std::move(w);
          }
        }
        if (entry.source != WitnessSource::NotFound) ++report.found;
        report.entries.push_back(std::move(entry));
        ++entry_index;
      }
    }
  }
  return report;
}

ObservedComposition observed_composition(const CompositionTable& reference,
                                         std::uint64_t samples, GridExtent bounds,
                                         std::uint64_t seed) {
  ObservedComposition out;
  out.reference_entries = reference.entry_count();
  Rng rng(seed);
  for (std::uint64_t i = 0; i < samples; ++i) {
    GridRegion x = random_region(bounds, /*one_piece=*/false, rng);
    GridRegion y = random_region(bounds, /*one_piece=*/false, rng);
    GridRegion z = random_region(bounds, /*one_piece=*/false, rng);
    Relation xy = classify(x, y);
    Relation yz = classify(y, z);
    Relation xz = classify(x, z);
    out.observed[index_of(xy)][index_of(yz)].insert(xz);
    if (!reference.cell(xy, yz).contains(xz))
      out.unsound.push_back({std::move(x), std::move(y), std::move(z), xy, yz, xz});
  }
  for (const auto& row : out.observed)
    for (const RelationSet& cell : row) out.observed_entries += cell.size();
  return out;
}

}  // namespace rcc8
