#pragma once

#include <array>
#include <filesystem>
#include <string_view>
#include <utility>
#include <vector>

#include "rcc8/relations.hpp"

namespace rcc8 {

/// Conceptual neighborhood graph: which base relations can directly succeed
/// one another under continuous motion and continuous deformation of the
/// regions. Undirected, no self-loops, connected; queries are O(1) against
/// matrices precomputed at load.
class CnGraph {
 public:
  bool is_neighbor(Relation r1, Relation r2) const {
    return adjacency_[index_of(r1)].contains(r2);
  }

  /// Relations sharing an edge with r; never contains r itself.
  RelationSet neighbors(Relation r) const { return adjacency_[index_of(r)]; }

  /// Shortest edge-path length; 0 iff the endpoints are equal.
  int conceptual_distance(Relation r1, Relation r2) const {
    return distance_[index_of(r1)][index_of(r2)];
  }

  std::size_t edge_count() const { return edges_.size(); }
  std::size_t directed_link_count() const { return 2 * edges_.size(); }

  /// Edges as canonical-order pairs (first < second), sorted.
  const std::vector<std::pair<Relation, Relation>>& edges() const { return edges_; }

 private:
  friend CnGraph load_cn_graph(std::string_view json_text);

  std::array<RelationSet, kRelationCount> adjacency_{};
  std::array<std::array<int, kRelationCount>, kRelationCount> distance_{};
  std::vector<std::pair<Relation, Relation>> edges_;
};

/// Parses a JSON array of two-element canonical-name arrays (unordered
/// pairs). Throws MalformedGraphError on unknown names, self-loops or
/// duplicate edges, DisconnectedGraphError when some relation is unreachable.
CnGraph load_cn_graph(std::string_view json_text);

CnGraph load_cn_graph_file(const std::filesystem::path& path);

/// Repository-shipped neighborhood asset (overridable via CLI flags).
std::filesystem::path default_cn_graph_path();

}  // namespace rcc8
