#include "rcc8/answer_parsing.hpp"

#include <algorithm>
#include <array>
#include <cctype>

#include "rcc8/errors.hpp"

namespace rcc8 {

namespace {

bool is_word_char(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) != 0;
}

std::string to_lower(std::string_view text) {
  std::string out(text);
  std::transform(out.begin(), out.end(), out.begin(),
                 [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
  return out;
}

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) !=
        std::tolower(static_cast<unsigned char>(b[i])))
      return false;
  }
  return true;
}

constexpr std::array<std::string_view, 7> kNegationCues = {
    "not possible", "cannot", "can not", "impossible",
    "contradict",   "ruled out", "excluded",
};

constexpr std::array<std::string_view, 6> kPreferenceCues = {
    "prefer", "likely", "safest", "safer", "cautious", "would say",
};

constexpr std::array<std::string_view, 4> kUniquenessCues = {
    "only possible", "the only", "must be", "uniquely",
};

// Markers introducing an enumerated final answer; the last one wins.
constexpr std::array<std::string_view, 7> kFinalAnswerMarkers = {
    "relationships between x and z are",
    "relations between x and z are",
    "possible relationships are",
    "possible relations are",
    "possible relations between x and z",
    "the answer is",
    "final answer",
};

struct Sentence {
  std::size_t begin;
  std::size_t end;
  bool negated;
};

std::vector<Sentence> split_sentences(std::string_view text, const std::string& lower) {
  std::vector<Sentence> sentences;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    bool boundary = i == text.size() || text[i] == '.' || text[i] == '!' || text[i] == '?';
    if (!boundary) continue;
    std::size_t end = std::min(i + 1, text.size());
    if (end > start) {
      std::string_view body(lower.data() + start, end - start);
      bool negated = std::any_of(kNegationCues.begin(), kNegationCues.end(),
                                 [&](std::string_view cue) {
                                   return body.find(cue) != std::string_view::npos;
                                 });
      sentences.push_back({start, end, negated});
    }
    start = end;
  }
  return sentences;
}

bool sentence_negated(const std::vector<Sentence>& sentences, std::size_t offset) {
  for (const Sentence& s : sentences)
    if (offset >= s.begin && offset < s.end) return s.negated;
  return false;
}

/// Lexicon tokens at word boundaries, longest token first so that NTPPi is
/// never read as NTPP plus a stray i.
std::vector<Mention> scan_mentions(std::string_view text, const Lexicon& lex,
                                   const std::vector<Sentence>& sentences) {
  std::vector<std::pair<std::string, Relation>> tokens;
  for (Relation r : kAllRelations) tokens.emplace_back(lex.token(r), r);
  std::sort(tokens.begin(), tokens.end(), [](const auto& a, const auto& b) {
    return a.first.size() > b.first.size();
  });

  std::vector<Mention> mentions;
  std::size_t i = 0;
  while (i < text.size()) {
    if (!is_word_char(text[i]) || (i > 0 && is_word_char(text[i - 1]))) {
      ++i;
      continue;
    }
    bool matched = false;
    for (const auto& [token, rel] : tokens) {
      if (i + token.size() > text.size()) continue;
      if (!iequals(text.substr(i, token.size()), token)) continue;
      if (i + token.size() < text.size() && is_word_char(text[i + token.size()])) continue;
      mentions.push_back({rel, i, i + token.size(), sentence_negated(sentences, i)});
      i += token.size();
      matched = true;
      break;
    }
    if (!matched) {
      while (i < text.size() && is_word_char(text[i])) ++i;
    }
  }
  return mentions;
}

/// Standalone uppercase ALL (case-sensitive: "all" occurs in ordinary prose).
std::vector<std::size_t> scan_all_token(std::string_view text) {
  std::vector<std::size_t> hits;
  std::size_t pos = 0;
  while ((pos = text.find("ALL", pos)) != std::string_view::npos) {
    bool left_ok = pos == 0 || !is_word_char(text[pos - 1]);
    bool right_ok = pos + 3 >= text.size() || !is_word_char(text[pos + 3]);
    if (left_ok && right_ok) hits.push_back(pos);
    pos += 3;
  }
  return hits;
}

bool contains_any(const std::string& lower,
                  const std::array<std::string_view, 4>& cues) {
  return std::any_of(cues.begin(), cues.end(), [&](std::string_view cue) {
    return lower.find(cue) != std::string::npos;
  });
}

}  // namespace

ParsedAnswer parse_relation_set(std::string_view text, const Lexicon& lex) {
  const std::string lower = to_lower(text);
  const auto sentences = split_sentences(text, lower);
  ParsedAnswer answer;
  answer.evidence = scan_mentions(text, lex, sentences);
  answer.uniqueness_claimed = contains_any(lower, kUniquenessCues);

  RelationSet negative;
  for (const Mention& m : answer.evidence)
    if (m.negated) negative.insert(m.relation);

  for (std::size_t pos : scan_all_token(text)) {
    if (sentence_negated(sentences, pos)) continue;
    answer.relations = RelationSet::all();
    for (Relation r : kAllRelations)
      answer.evidence.push_back({r, pos, pos + 3, false});
    answer.needs_review = !negative.empty();
    return answer;
  }

  // Prefer the enumerated final-answer section when one exists and actually
  // names relations.
  std::size_t section_start = 0;
  for (std::string_view marker : kFinalAnswerMarkers) {
    std::size_t pos = lower.rfind(marker);
    if (pos != std::string::npos) section_start = std::max(section_start, pos + marker.size());
  }

  RelationSet positive_anywhere;
  RelationSet positive_in_section;
  for (const Mention& m : answer.evidence) {
    if (m.negated) continue;
    positive_anywhere.insert(m.relation);
    if (m.begin >= section_start) positive_in_section.insert(m.relation);
  }
  answer.relations =
      (section_start > 0 && !positive_in_section.empty()) ? positive_in_section
                                                          : positive_anywhere;

  if (!(answer.relations & negative).empty()) answer.needs_review = true;
  if (answer.relations.empty()) answer.needs_review = true;
  return answer;
}

PreferredAnswer parse_preferred(std::string_view text, const Lexicon& lex) {
  const std::string lower = to_lower(text);
  const auto sentences = split_sentences(text, lower);
  const auto mentions = scan_mentions(text, lex, sentences);

  const Mention* last_cued = nullptr;
  const Sentence* last_sentence = nullptr;
  for (const Sentence& s : sentences) {
    std::string_view body(lower.data() + s.begin, s.end - s.begin);
    bool cued = std::any_of(kPreferenceCues.begin(), kPreferenceCues.end(),
                            [&](std::string_view cue) {
                              return body.find(cue) != std::string_view::npos;
                            });
    if (!cued) continue;
    for (const Mention& m : mentions) {
      if (m.begin >= s.begin && m.begin < s.end) {
        last_cued = &m;
        last_sentence = &s;
      }
    }
  }
  if (last_cued == nullptr)
    throw NoPreferenceFoundError("no relation co-occurs with a preference cue");

  PreferredAnswer answer;
  answer.relation = last_cued->relation;
  answer.uniqueness_claimed = contains_any(lower, kUniquenessCues);

  RelationSet in_last_sentence;
  for (const Mention& m : mentions)
    if (m.begin >= last_sentence->begin && m.begin < last_sentence->end)
      in_last_sentence.insert(m.relation);
  answer.needs_review = in_last_sentence.size() > 1;
  return answer;
}

std::string render_relation_set_answer(RelationSet set, const Lexicon& lex) {
  std::string out;
  for (Relation r : set.members()) {
    if (!out.empty()) out += ", ";
    out += lex.token(r) + "(x,z)";
  }
  return out;
}

}  // namespace rcc8
