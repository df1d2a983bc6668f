#include "rcc8/grid_region.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace rcc8 {

namespace {

constexpr int kNeighborOffsets8[8][2] = {{-1, -1}, {0, -1}, {1, -1}, {-1, 0},
                                         {1, 0},   {-1, 1}, {0, 1},  {1, 1}};

bool shares_cell(const GridRegion& a, const GridRegion& b) {
  // Both cell lists are sorted; single merge pass.
  auto ia = a.cells().begin();
  auto ib = b.cells().begin();
  while (ia != a.cells().end() && ib != b.cells().end()) {
    if (*ia < *ib)
      ++ia;
    else if (*ib < *ia)
      ++ib;
    else
      return true;
  }
  return false;
}

bool touches(const GridRegion& a, const GridRegion& b) {
  const GridRegion& small = a.size() <= b.size() ? a : b;
  const GridRegion& large = a.size() <= b.size() ? b : a;
  for (GridCell c : small.cells()) {
    if (large.contains(c)) return true;
    for (auto [dc, dr] : kNeighborOffsets8) {
      if (large.contains({c.col + dc, c.row + dr})) return true;
    }
  }
  return false;
}

/// Some cell of `part` is 8-adjacent to a cell not in `whole` (including
/// cells beyond any finite bounds).
bool tangential(const GridRegion& part, const GridRegion& whole) {
  for (GridCell c : part.cells()) {
    for (auto [dc, dr] : kNeighborOffsets8) {
      if (!whole.contains({c.col + dc, c.row + dr})) return true;
    }
  }
  return false;
}

}  // namespace

GridRegion::GridRegion(std::vector<GridCell> cells) : cells_(std::move(cells)) {
  if (cells_.empty()) throw std::invalid_argument("grid region must be nonempty");
  std::sort(cells_.begin(), cells_.end());
  cells_.erase(std::unique(cells_.begin(), cells_.end()), cells_.end());
}

bool GridRegion::contains(GridCell c) const {
  return std::binary_search(cells_.begin(), cells_.end(), c);
}

bool GridRegion::subset_of(const GridRegion& other) const {
  if (size() > other.size()) return false;
  return std::includes(other.cells_.begin(), other.cells_.end(), cells_.begin(),
                       cells_.end());
}

bool GridRegion::is_four_connected() const {
  std::vector<GridCell> stack{cells_.front()};
  std::vector<bool> seen(cells_.size(), false);
  seen[0] = true;
  std::size_t visited = 1;
  while (!stack.empty()) {
    GridCell cur = stack.back();
    stack.pop_back();
    for (auto [dc, dr] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}}) {
      GridCell next{cur.col + dc, cur.row + dr};
      auto it = std::lower_bound(cells_.begin(), cells_.end(), next);
      if (it == cells_.end() || *it != next) continue;
      std::size_t idx = static_cast<std::size_t>(it - cells_.begin());
      if (seen[idx]) continue;
      seen[idx] = true;
      ++visited;
      stack.push_back(next);
    }
  }
  return visited == cells_.size();
}

Relation classify(const GridRegion& x, const GridRegion& y) {
  if (x == y) return Relation::EQ;
  if (x.subset_of(y)) return tangential(x, y) ? Relation::TPP : Relation::NTPP;
  if (y.subset_of(x)) return tangential(y, x) ? Relation::TPPi : Relation::NTPPi;
  if (shares_cell(x, y)) return Relation::PO;
  return touches(x, y) ? Relation::EC : Relation::DC;
}

GridRegion random_region(GridExtent bounds, bool one_piece, Rng& rng) {
  assert(bounds.width >= 1 && bounds.height >= 1);
  const int area = bounds.width * bounds.height;
  const int target = rng.range(1, area);

  if (!one_piece) {
    // Partial Fisher-Yates: the first `target` entries are a uniform subset.
    std::vector<GridCell> all;
    all.reserve(static_cast<std::size_t>(area));
    for (int row = 0; row < bounds.height; ++row)
      for (int col = 0; col < bounds.width; ++col) all.push_back({col, row});
    for (int i = 0; i < target; ++i) {
      int j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(area - i)));
      std::swap(all[static_cast<std::size_t>(i)], all[static_cast<std::size_t>(j)]);
    }
    all.resize(static_cast<std::size_t>(target));
    return GridRegion(std::move(all));
  }

  // Random growth: start anywhere, repeatedly annex a uniformly chosen
  // frontier cell. The frontier list is kept sorted for determinism.
  std::vector<GridCell> chosen{{rng.range(0, bounds.width - 1), rng.range(0, bounds.height - 1)}};
  std::vector<GridCell> frontier;
  auto add_frontier = [&](GridCell c) {
    if (c.col < 0 || c.col >= bounds.width || c.row < 0 || c.row >= bounds.height) return;
    if (std::binary_search(chosen.begin(), chosen.end(), c)) return;
    auto it = std::lower_bound(frontier.begin(), frontier.end(), c);
    if (it != frontier.end() && *it == c) return;
    frontier.insert(it, c);
  };
  std::sort(chosen.begin(), chosen.end());
  for (auto [dc, dr] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}})
    add_frontier({chosen.front().col + dc, chosen.front().row + dr});

  while (static_cast<int>(chosen.size()) < target && !frontier.empty()) {
    std::size_t pick = static_cast<std::size_t>(rng.below(frontier.size()));
    GridCell next = frontier[pick];
    frontier.erase(frontier.begin() + static_cast<std::ptrdiff_t>(pick));
    chosen.insert(std::lower_bound(chosen.begin(), chosen.end(), next), next);
    for (auto [dc, dr] : {std::pair{-1, 0}, {1, 0}, {0, -1}, {0, 1}})
      add_frontier({next.col + dc, next.row + dr});
  }
  return GridRegion(std::move(chosen));
}

}  // namespace rcc8
