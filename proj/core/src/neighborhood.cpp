#include "rcc8/neighborhood.hpp"

#include <algorithm>
#include <deque>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcc8/errors.hpp"

namespace rcc8 {

namespace {

Relation relation_from_exact_name(const std::string& name) {
  for (Relation r : kAllRelations)
    if (name == relation_name(r)) return r;
  throw MalformedGraphError("unknown relation name '" + name + "' in edge list");
}

}  // namespace

CnGraph load_cn_graph(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_array())
    throw MalformedGraphError("graph document is not a JSON array");

  CnGraph g;
  for (const auto& item : doc) {
    if (!item.is_array() || item.size() != 2 || !item[0].is_string() || !item[1].is_string())
      throw MalformedGraphError("edge is not a two-element array of names");
    Relation a = relation_from_exact_name(item[0].get<std::string>());
    Relation b = relation_from_exact_name(item[1].get<std::string>());
    if (a == b)
      throw MalformedGraphError("self-loop on " + std::string(relation_name(a)));
    if (g.adjacency_[index_of(a)].contains(b))
      throw MalformedGraphError("duplicate edge " + std::string(relation_name(a)) + "-" +
                                std::string(relation_name(b)));
    g.adjacency_[index_of(a)].insert(b);
    g.adjacency_[index_of(b)].insert(a);
    auto edge = std::minmax(a, b);
    g.edges_.emplace_back(edge.first, edge.second);
  }
  std::sort(g.edges_.begin(), g.edges_.end());

  // All-pairs shortest paths by BFS from every relation; unreachable nodes
  // mean the graph is unusable for distance queries.
  for (Relation src : kAllRelations) {
    auto& dist = g.distance_[index_of(src)];
    dist.fill(-1);
    dist[index_of(src)] = 0;
    std::deque<Relation> queue{src};
    while (!queue.empty()) {
      Relation cur = queue.front();
      queue.pop_front();
      for (Relation next : g.adjacency_[index_of(cur)].members()) {
        if (dist[index_of(next)] >= 0) continue;
        dist[index_of(next)] = dist[index_of(cur)] + 1;
        queue.push_back(next);
      }
    }
    for (Relation dst : kAllRelations) {
      if (dist[index_of(dst)] < 0)
        throw DisconnectedGraphError(std::string(relation_name(dst)) +
                                     " is unreachable from " +
                                     std::string(relation_name(src)));
    }
  }
  return g;
}

CnGraph load_cn_graph_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw MalformedGraphError("cannot open graph file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_cn_graph(buf.str());
}

std::filesystem::path default_cn_graph_path() {
  return std::filesystem::path(RCC8_ASSET_DIR) / "conceptual_neighborhood.json";
}

}  // namespace rcc8
