#pragma once

#include <array>
#include <optional>
#include <string>
#include <string_view>

#include "rcc8/relations.hpp"

namespace rcc8 {

enum class LexiconStyle {
  Canonical,   // DC, EC, PO, TPP, NTPP, TPPi, NTPPi, EQ
  Anonymized,  // each canonical name prefixed with "X"
};

/// Bijective mapping between surface tokens and the eight base relations.
class Lexicon {
 public:
  explicit Lexicon(LexiconStyle style);

  static Lexicon canonical() { return Lexicon(LexiconStyle::Canonical); }
  static Lexicon anonymized() { return Lexicon(LexiconStyle::Anonymized); }

  LexiconStyle style() const { return style_; }

  const std::string& token(Relation r) const { return tokens_[index_of(r)]; }

  /// Case-insensitive exact match against this lexicon's tokens.
  std::optional<Relation> find(std::string_view token) const;

 private:
  LexiconStyle style_;
  std::array<std::string, kRelationCount> tokens_;
};

/// Parses a single token into a base relation. Matching is case-insensitive;
/// surrounding whitespace/punctuation and a trailing argument list such as
/// "(x,z)" are ignored. Throws UnknownRelationError when nothing matches.
Relation parse_relation(std::string_view token, const Lexicon& lex);

}  // namespace rcc8
