#include "rcc8/lexicon.hpp"

#include <algorithm>
#include <cctype>

#include "rcc8/errors.hpp"

namespace rcc8 {

namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

}  // namespace

Lexicon::Lexicon(LexiconStyle style) : style_(style) {
  for (Relation r : kAllRelations) {
    std::string name(relation_name(r));
    tokens_[index_of(r)] = style == LexiconStyle::Anonymized ? "X" + name : name;
  }
}

std::optional<Relation> Lexicon::find(std::string_view token) const {
  for (Relation r : kAllRelations) {
    if (iequals(token, tokens_[index_of(r)])) return r;
  }
  return std::nullopt;
}

Relation parse_relation(std::string_view token, const Lexicon& lex) {
  std::string_view s = token;
  while (!s.empty() && !is_word_char(s.front())) s.remove_prefix(1);
  // Keep the leading word only; drops "(x,z)" style suffixes.
  std::size_t end = 0;
  while (end < s.size() && is_word_char(s[end])) ++end;
  s = s.substr(0, end);
  if (!s.empty()) {
    if (auto r = lex.find(s)) return *r;
  }
  throw UnknownRelationError(std::string(token));
}

}  // namespace rcc8
