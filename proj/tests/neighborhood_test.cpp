#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <deque>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcc8/errors.hpp"
#include "rcc8/neighborhood.hpp"

using namespace rcc8;

namespace {

std::string read_asset_text() {
  std::ifstream in(default_cn_graph_path());
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

/// Independent distance oracle: plain breadth-first search over an adjacency
/// matrix rebuilt from the raw JSON, bypassing CnGraph entirely.
int bfs_distance(const std::string& json_text, Relation from, Relation to) {
  auto doc = nlohmann::json::parse(json_text);
  std::array<std::array<bool, 8>, 8> adj{};
  auto idx = [](const std::string& name) {
    for (Relation r : kAllRelations)
      if (name == relation_name(r)) return index_of(r);
    REQUIRE(false);
    return std::size_t{0};
  };
  for (const auto& edge : doc) {
    auto a = idx(edge[0].get<std::string>());
    auto b = idx(edge[1].get<std::string>());
    adj[a][b] = adj[b][a] = true;
  }
  std::array<int, 8> dist;
  dist.fill(-1);
  dist[index_of(from)] = 0;
  std::deque<std::size_t> queue{index_of(from)};
  while (!queue.empty()) {
    auto cur = queue.front();
    queue.pop_front();
    for (std::size_t next = 0; next < 8; ++next) {
      if (!adj[cur][next] || dist[next] >= 0) continue;
      dist[next] = dist[cur] + 1;
      queue.push_back(next);
    }
  }
  return dist[index_of(to)];
}

}  // namespace

TEST_CASE("shipped graph loads with the expected shape") {
  CnGraph g = load_cn_graph(read_asset_text());
  CHECK(g.edge_count() == 11);
  CHECK(g.directed_link_count() == 22);
}

TEST_CASE("neighbor queries match the shipped graph") {
  CnGraph g = load_cn_graph(read_asset_text());

  CHECK(g.neighbors(Relation::EC) == RelationSet{Relation::DC, Relation::PO});
  CHECK(g.neighbors(Relation::DC) == RelationSet{Relation::EC});
  CHECK(RelationSet({Relation::NTPP, Relation::NTPPi})
            .is_subset_of(g.neighbors(Relation::EQ)));

  CHECK_FALSE(g.is_neighbor(Relation::PO, Relation::DC));
  CHECK(g.is_neighbor(Relation::DC, Relation::EC));
  CHECK_FALSE(g.is_neighbor(Relation::TPP, Relation::TPP));

  for (Relation r : kAllRelations) CHECK_FALSE(g.neighbors(r).contains(r));
}

TEST_CASE("is_neighbor is symmetric") {
  CnGraph g = load_cn_graph(read_asset_text());
  for (Relation a : kAllRelations)
    for (Relation b : kAllRelations) CHECK(g.is_neighbor(a, b) == g.is_neighbor(b, a));
}

TEST_CASE("conceptual distance agrees with the breadth-first oracle") {
  const std::string text = read_asset_text();
  CnGraph g = load_cn_graph(text);

  CHECK(g.conceptual_distance(Relation::DC, Relation::DC) == 0);
  CHECK(g.conceptual_distance(Relation::DC, Relation::PO) == 2);
  CHECK(g.conceptual_distance(Relation::DC, Relation::NTPP) == 4);

  for (Relation a : kAllRelations)
    for (Relation b : kAllRelations)
      CHECK(g.conceptual_distance(a, b) == bfs_distance(text, a, b));
}

TEST_CASE("conceptual distance is a metric") {
  CnGraph g = load_cn_graph(read_asset_text());
  for (Relation a : kAllRelations) {
    for (Relation b : kAllRelations) {
      int d = g.conceptual_distance(a, b);
      CHECK(d == g.conceptual_distance(b, a));
      CHECK((d == 0) == (a == b));
      CHECK((d == 1) == g.is_neighbor(a, b));
      for (Relation c : kAllRelations)
        CHECK(d <= g.conceptual_distance(a, c) + g.conceptual_distance(c, b));
    }
  }
}

TEST_CASE("rejects malformed graph documents") {
  SUBCASE("self-loop") {
    CHECK_THROWS_AS(load_cn_graph(R"([["DC","DC"]])"), MalformedGraphError);
  }
  SUBCASE("unknown name") {
    CHECK_THROWS_AS(load_cn_graph(R"([["DC","FOO"]])"), MalformedGraphError);
  }
  SUBCASE("duplicate edge") {
    CHECK_THROWS_AS(load_cn_graph(R"([["DC","EC"],["EC","DC"]])"), MalformedGraphError);
  }
  SUBCASE("not an array") {
    CHECK_THROWS_AS(load_cn_graph("{}"), MalformedGraphError);
  }
}

TEST_CASE("isolating EQ is reported as disconnection") {
  auto doc = nlohmann::json::parse(read_asset_text());
  nlohmann::json pruned = nlohmann::json::array();
  for (const auto& edge : doc) {
    if (edge[0] == "EQ" || edge[1] == "EQ") continue;
    pruned.push_back(edge);
  }
  CHECK_THROWS_AS(load_cn_graph(pruned.dump()), DisconnectedGraphError);
}
