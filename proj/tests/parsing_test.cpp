#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <string>

#include "rcc8/answer_parsing.hpp"
#include "rcc8/errors.hpp"

#include "response_fixtures.hpp"

using namespace rcc8;

TEST_CASE("enumerating answer sets with negated alternatives") {
  Lexicon lex = Lexicon::canonical();
  ParsedAnswer answer = parse_relation_set(fixtures::kCompositionDcDc, lex);

  CHECK(answer.relations == RelationSet{Relation::DC, Relation::EC});
  CHECK_FALSE(answer.relations.contains(Relation::TPP));
  CHECK_FALSE(answer.relations.contains(Relation::NTPP));
  CHECK_FALSE(answer.relations.contains(Relation::PO));
  CHECK_FALSE(answer.relations.contains(Relation::EQ));
  CHECK_FALSE(answer.needs_review);

  // The excluded relations are present as negative evidence only.
  bool tpp_negated = false;
  for (const Mention& m : answer.evidence)
    if (m.relation == Relation::TPP && m.negated) tpp_negated = true;
  CHECK(tpp_negated);

  // Members carry evidence spans pointing at real token text.
  for (Relation r : answer.relations.members()) {
    bool found = false;
    for (const Mention& m : answer.evidence) {
      if (m.relation != r || m.negated) continue;
      std::string_view span(fixtures::kCompositionDcDc + m.begin, m.end - m.begin);
      CHECK(span == relation_name(r));
      found = true;
    }
    CHECK(found);
  }
}

TEST_CASE("a bare ALL answer means the full set") {
  Lexicon lex = Lexicon::canonical();
  CHECK(parse_relation_set("ALL", lex).relations == RelationSet::all());
  CHECK(parse_relation_set("The answer is ALL.", lex).relations == RelationSet::all());
  // Lowercase "all" in prose is not the ALL token.
  auto prose = parse_relation_set("Considering all motion, DC holds.", lex);
  CHECK(prose.relations == RelationSet{Relation::DC});
}

TEST_CASE("no detectable relations degrades to an empty flagged answer") {
  Lexicon lex = Lexicon::canonical();
  ParsedAnswer answer = parse_relation_set("I am not sure what to say here.", lex);
  CHECK(answer.relations.empty());
  CHECK(answer.needs_review);
}

TEST_CASE("conflicting evidence is flagged for review") {
  Lexicon lex = Lexicon::canonical();
  ParsedAnswer answer =
      parse_relation_set("DC seems right. On reflection DC is not possible.", lex);
  CHECK(answer.needs_review);
}

TEST_CASE("anonymized parsing matches canonical parsing of rewritten text") {
  Lexicon anon = Lexicon::anonymized();
  Lexicon canon = Lexicon::canonical();
  std::string anon_text =
      "XDC(x,z) and XEC(x,z) are possible. XNTPPi(x,z) is not possible.";
  std::string canon_text =
      "DC(x,z) and EC(x,z) are possible. NTPPi(x,z) is not possible.";
  ParsedAnswer a = parse_relation_set(anon_text, anon);
  ParsedAnswer c = parse_relation_set(canon_text, canon);
  CHECK(a.relations == c.relations);
  CHECK(a.relations == RelationSet{Relation::DC, Relation::EC});

  // Canonical tokens do not fire inside X-prefixed words.
  CHECK(parse_relation_set(anon_text, canon).relations.empty());
}

TEST_CASE("rendered answers reparse to the same set for all 256 subsets") {
  for (const Lexicon& lex : {Lexicon::canonical(), Lexicon::anonymized()}) {
    for (unsigned bits = 0; bits < 256; ++bits) {
      RelationSet set = RelationSet::from_bits(static_cast<std::uint8_t>(bits));
      std::string text = render_relation_set_answer(set, lex);
      CHECK(parse_relation_set(text, lex).relations == set);
    }
  }
}

TEST_CASE("preferred answers follow the preference cues") {
  Lexicon lex = Lexicon::canonical();

  PreferredAnswer dc = parse_preferred(fixtures::kPreferredDcDc, lex);
  CHECK(dc.relation == Relation::DC);

  PreferredAnswer ec = parse_preferred(fixtures::kPreferredEcNtppi, lex);
  CHECK(ec.relation == Relation::EC);

  PreferredAnswer tpp = parse_preferred(fixtures::kPreferredTppiTppi, lex);
  CHECK(tpp.relation == Relation::TPP);
}

TEST_CASE("preference parsing reports uniqueness claims and ambiguity") {
  Lexicon lex = Lexicon::canonical();
  PreferredAnswer unique =
      parse_preferred("The relation must be NTPP, it is the only possible one; "
                      "NTPP is my preferred answer.",
                      lex);
  CHECK(unique.relation == Relation::NTPP);
  CHECK(unique.uniqueness_claimed);

  PreferredAnswer ambiguous =
      parse_preferred("I would say DC or maybe EC is the most likely relation.", lex);
  CHECK(ambiguous.relation == Relation::EC);
  CHECK(ambiguous.needs_review);

  CHECK_THROWS_AS(parse_preferred("DC(x,y) and DC(y,z) were given.", lex),
                  NoPreferenceFoundError);
  CHECK_THROWS_AS(parse_preferred("I really cannot tell.", lex), NoPreferenceFoundError);
}
