#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <fstream>
#include <random>
#include <sstream>

#include <json.hpp>

#include "rcc8/composition_table.hpp"
#include "rcc8/errors.hpp"
#include "rcc8/lexicon.hpp"
#include "rcc8/relations.hpp"

using namespace rcc8;

namespace {

std::string read_asset_text() {
  std::ifstream in(default_composition_table_path());
  REQUIRE(in);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

}  // namespace

TEST_CASE("eight distinct relations with stable canonical order") {
  CHECK(kAllRelations.size() == 8);
  CHECK(relation_name(Relation::DC) == "DC");
  CHECK(relation_name(Relation::TPPi) == "TPPi");
  CHECK(relation_name(Relation::NTPPi) == "NTPPi");
  RelationSet all = RelationSet::all();
  CHECK(all.size() == 8);
  CHECK(all.to_string() == "DC EC PO TPP NTPP TPPi NTPPi EQ");
}

TEST_CASE("parse_relation handles both lexicons, casing and suffixes") {
  Lexicon canonical = Lexicon::canonical();
  Lexicon anonymized = Lexicon::anonymized();

  CHECK(parse_relation("DC", canonical) == Relation::DC);
  CHECK(parse_relation("XDC", anonymized) == Relation::DC);
  CHECK(parse_relation("tpp", canonical) == Relation::TPP);
  CHECK(parse_relation("DC(x,z)", canonical) == Relation::DC);
  CHECK(parse_relation("  NTPPi. ", canonical) == Relation::NTPPi);
  CHECK(parse_relation("xtppi", anonymized) == Relation::TPPi);
  CHECK_THROWS_AS(parse_relation("FOO", canonical), UnknownRelationError);
  CHECK_THROWS_AS(parse_relation("XDC", canonical), UnknownRelationError);
  CHECK_THROWS_AS(parse_relation("", canonical), UnknownRelationError);
}

TEST_CASE("anonymized tokens are exactly X plus the canonical name") {
  Lexicon anonymized = Lexicon::anonymized();
  for (Relation r : kAllRelations)
    CHECK(anonymized.token(r) == "X" + std::string(relation_name(r)));
}

TEST_CASE("token round-trip on both lexicon styles") {
  for (const Lexicon& lex : {Lexicon::canonical(), Lexicon::anonymized()}) {
    for (Relation r : kAllRelations) CHECK(parse_relation(lex.token(r), lex) == r);
  }
}

TEST_CASE("converse pairs and involution") {
  CHECK(converse(Relation::DC) == Relation::DC);
  CHECK(converse(Relation::EC) == Relation::EC);
  CHECK(converse(Relation::PO) == Relation::PO);
  CHECK(converse(Relation::EQ) == Relation::EQ);
  CHECK(converse(Relation::TPP) == Relation::TPPi);
  CHECK(converse(Relation::NTPPi) == Relation::NTPP);
  for (Relation r : kAllRelations) CHECK(converse(converse(r)) == r);
}

TEST_CASE("converse of a set is elementwise") {
  CHECK(converse(RelationSet{Relation::TPP, Relation::NTPP}) ==
        RelationSet{Relation::TPPi, Relation::NTPPi});
  CHECK(converse(RelationSet::all()) == RelationSet::all());
  CHECK(converse(RelationSet::none()) == RelationSet::none());
}

TEST_CASE("shipped table loads and satisfies the laws") {
  CompositionTable table = load_composition_table(read_asset_text());

  CHECK(compose(Relation::DC, Relation::DC, table) == RelationSet::all());
  CHECK(compose(Relation::EQ, Relation::TPP, table) == RelationSet{Relation::TPP});
  // Oracle-confirmed singleton (see oracle_test witness/soundness runs).
  CHECK(compose(Relation::TPP, Relation::NTPP, table) == RelationSet{Relation::NTPP});

  for (Relation r : kAllRelations) {
    CHECK(table.cell(Relation::EQ, r) == RelationSet::single(r));
    CHECK(table.cell(r, Relation::EQ) == RelationSet::single(r));
    CHECK(table.cell(r, Relation::EQ).contains(r));
  }
  for (Relation r : kAllRelations) {
    for (Relation s : kAllRelations) {
      CHECK(!table.cell(r, s).empty());
      for (Relation u : kAllRelations) {
        CHECK(table.cell(r, s).contains(u) ==
              table.cell(converse(s), converse(r)).contains(converse(u)));
      }
    }
  }
}

TEST_CASE("compose_sets lifts composition through unions") {
  CompositionTable table = load_composition_table(read_asset_text());

  for (unsigned bits = 0; bits < 256; ++bits) {
    RelationSet s = RelationSet::from_bits(static_cast<std::uint8_t>(bits));
    CHECK(compose_sets(RelationSet{Relation::EQ}, s, table) == s);
  }
  CHECK(compose_sets(RelationSet::none(), RelationSet::all(), table) ==
        RelationSet::none());
  CHECK(compose_sets(RelationSet{Relation::DC, Relation::EC}, RelationSet{Relation::DC},
                     table) == RelationSet::all());
}

TEST_CASE("compose_sets is monotone in both arguments") {
  CompositionTable table = load_composition_table(read_asset_text());
  std::mt19937_64 rng(7);
  for (int i = 0; i < 2000; ++i) {
    auto sub = RelationSet::from_bits(static_cast<std::uint8_t>(rng()));
    auto sup1 = RelationSet::from_bits(static_cast<std::uint8_t>(sub.bits() | rng()));
    auto other = RelationSet::from_bits(static_cast<std::uint8_t>(rng()));
    auto sup2 = RelationSet::from_bits(static_cast<std::uint8_t>(other.bits() | rng()));
    CHECK(compose_sets(sub, other, table)
              .is_subset_of(compose_sets(sup1, sup2, table)));
  }
}

TEST_CASE("rejects malformed table documents") {
  const std::string text = read_asset_text();

  SUBCASE("not an object") {
    CHECK_THROWS_AS(load_composition_table("[]"), MalformedTableError);
  }
  SUBCASE("missing cell") {
    auto doc = nlohmann::json::parse(text);
    doc.erase("DC|EC");
    CHECK_THROWS_AS(load_composition_table(doc.dump()), MalformedTableError);
  }
  SUBCASE("unknown relation name") {
    auto doc = nlohmann::json::parse(text);
    doc["DC|EC"] = {"FOO"};
    CHECK_THROWS_AS(load_composition_table(doc.dump()), MalformedTableError);
  }
  SUBCASE("empty cell") {
    auto doc = nlohmann::json::parse(text);
    doc["DC|EC"] = nlohmann::json::array();
    CHECK_THROWS_AS(load_composition_table(doc.dump()), MalformedTableError);
  }
}

TEST_CASE("identity-law violations name the offending cell") {
  auto doc = nlohmann::json::parse(read_asset_text());
  doc["EQ|DC"] = {"EC"};
  try {
    load_composition_table(doc.dump());
    FAIL("expected LawViolationError");
  } catch (const LawViolationError& e) {
    CHECK(e.law() == LawViolationError::Law::Identity);
    CHECK(e.cell() == "EQ|DC");
  }
}

TEST_CASE("converse-law violations name the offending cell") {
  auto doc = nlohmann::json::parse(read_asset_text());
  // Drop TPP from exactly one of the two converse-paired cells:
  // TPP in cell(EC, TPP) pairs with TPPi in cell(TPPi, EC).
  auto& cell = doc["EC|TPP"];
  auto it = std::find(cell.begin(), cell.end(), "TPP");
  REQUIRE(it != cell.end());
  cell.erase(it);
  try {
    load_composition_table(doc.dump());
    FAIL("expected LawViolationError");
  } catch (const LawViolationError& e) {
    CHECK(e.law() == LawViolationError::Law::Converse);
    bool at_either_twin = e.cell() == "EC|TPP" || e.cell() == "TPPi|EC";
    CHECK(at_either_twin);
  }
}
