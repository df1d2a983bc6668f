#pragma once

#include <compare>
#include <cstdint>
#include <random>
#include <vector>

#include "rcc8/relations.hpp"

namespace rcc8 {

/// One unit cell of the integer grid, identified by (column, row). The cell
/// stands for the closed unit square [col, col+1] x [row, row+1].
struct GridCell {
  int col = 0;
  int row = 0;
  auto operator<=>(const GridCell&) const = default;
};

struct GridExtent {
  int width = 6;
  int height = 6;
};

/// A nonempty finite union of closed unit cells, modelling a regular-closed
/// planar region. Cells are kept sorted and unique; membership queries are
/// binary searches, so regions are cheap values.
class GridRegion {
 public:
  explicit GridRegion(std::vector<GridCell> cells);

  const std::vector<GridCell>& cells() const { return cells_; }
  std::size_t size() const { return cells_.size(); }

  bool contains(GridCell c) const;
  bool operator==(const GridRegion&) const = default;

  /// True when every cell of this region is a cell of `other`.
  bool subset_of(const GridRegion& other) const;

  /// True when the cells form one 4-connected component.
  bool is_four_connected() const;

 private:
  std::vector<GridCell> cells_;
};

/// Assigns the unique base relation holding between two grid regions under
/// digital topology: closed cells connect through shared edges or corners
/// (8-adjacency), interiors overlap exactly when a cell is shared, parthood
/// is cell-set inclusion, and a part is tangential when one of its cells is
/// 8-adjacent to a cell outside the whole (the plane extends beyond any
/// sampling window, so regions hugging the window edge stay tangential).
Relation classify(const GridRegion& x, const GridRegion& y);

/// Deterministic random source for the oracle. Wraps the standard-specified
/// mt19937_64 engine and draws bounded values by modulo, so that equal seeds
/// give equal streams everywhere. For parallel sampling, worker k must derive
/// its substream as Rng(seed + k).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform-ish value in [0, n); n must be positive.
  std::uint64_t below(std::uint64_t n) { return engine_() % n; }

  /// Uniform-ish value in [lo, hi] inclusive.
  int range(int lo, int hi) {
    return lo + static_cast<int>(below(static_cast<std::uint64_t>(hi - lo + 1)));
  }

 private:
  std::mt19937_64 engine_;
};

/// Draws a nonempty random region within [0,width) x [0,height). The cell
/// count is uniform over [1, width*height]; one_piece grows a 4-connected
/// blob from a random start cell, otherwise cells are a uniform subset.
GridRegion random_region(GridExtent bounds, bool one_piece, Rng& rng);

inline GridRegion random_region(GridExtent bounds, bool one_piece, std::uint64_t seed) {
  Rng rng(seed);
  return random_region(bounds, one_piece, rng);
}

}  // namespace rcc8
