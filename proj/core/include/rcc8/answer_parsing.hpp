#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "rcc8/lexicon.hpp"
#include "rcc8/relations.hpp"

namespace rcc8 {

/// One detected relation token with its text offsets and the polarity of the
/// sentence it sits in.
struct Mention {
  Relation relation;
  std::size_t begin = 0;
  std::size_t end = 0;
  bool negated = false;
};

struct ParsedAnswer {
  RelationSet relations;
  bool uniqueness_claimed = false;
  /// Set when positive and negative evidence conflict for some relation, or
  /// when nothing parseable was found; such cells are flagged for manual
  /// adjudication, never raised as errors.
  bool needs_review = false;
  std::vector<Mention> evidence;
};

/// Extracts the set of relations a free-text answer asserts. Detects a
/// standalone uppercase ALL as the full set; otherwise collects relation
/// tokens at word boundaries, dropping tokens inside sentences with negation
/// cues and preferring an enumerated final-answer section when one is
/// present.
ParsedAnswer parse_relation_set(std::string_view text, const Lexicon& lex);

struct PreferredAnswer {
  Relation relation = Relation::DC;
  bool uniqueness_claimed = false;
  bool needs_review = false;
};

/// Picks the single relation endorsed by preference-cue sentences
/// ("preferred", "most likely", "safest", ...), breaking ties by taking the
/// last such mention. Throws NoPreferenceFoundError when no relation
/// co-occurs with a cue.
PreferredAnswer parse_preferred(std::string_view text, const Lexicon& lex);

/// Canonical answer text for a set, e.g. "DC(x,z), EC(x,z)"; the empty set
/// renders as the empty string. parse_relation_set inverts this for every
/// subset.
std::string render_relation_set_answer(RelationSet set, const Lexicon& lex);

}  // namespace rcc8
