#include "rcc8/scoring.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcc8/errors.hpp"
#include "rcc8/lexicon.hpp"

namespace rcc8 {

namespace {

std::string pair_key(const CellPair& cell) {
  return std::string(relation_name(cell.first)) + "|" +
         std::string(relation_name(cell.second));
}

}  // namespace

std::string_view verdict_name(Verdict v) {
  switch (v) {
    case Verdict::TruePresent:
      return "true_present";
    case Verdict::FalsePresent:
      return "false_present";
    case Verdict::FalseAbsent:
      return "false_absent";
    case Verdict::TrueAbsent:
      return "true_absent";
  }
  return "?";
}

std::vector<CellPair> non_eq_cells() {
  std::vector<CellPair> cells;
  cells.reserve(49);
  for (Relation r1 : kAllRelations) {
    if (r1 == Relation::EQ) continue;
    for (Relation r2 : kAllRelations) {
      if (r2 == Relation::EQ) continue;
      cells.emplace_back(r1, r2);
    }
  }
  return cells;
}

double CompositionScore::accuracy_percent() const {
  return total() == 0 ? 0.0 : 100.0 * correct() / total();
}

int CompositionScore::fully_correct_cells() const {
  int n = 0;
  for (const auto& cell : cells)
    if (cell.predicted == cell.truth) ++n;
  return n;
}

AggregateCounts aggregate_from_counts(int true_present, int false_present,
                                      int false_absent, int total) {
  int true_absent = total - true_present - false_present - false_absent;
  double accuracy =
      total == 0 ? 0.0 : 100.0 * (true_present + true_absent) / total;
  return {true_present, false_present, false_absent, true_absent, total, accuracy};
}

CompositionScore score_composition(const std::map<std::string, ParsedAnswer>& answers,
                                   const CompositionTable& truth,
                                   const std::vector<CellPair>& cells) {
  CompositionScore score;
  for (const CellPair& cell : cells) {
    auto it = answers.find(pair_key(cell));
    if (it == answers.end())
      throw MissingCellError("no answer for cell " + pair_key(cell));
    const ParsedAnswer& answer = it->second;

    CompositionCellScore cs;
    cs.cell = cell;
    cs.predicted = answer.relations;
    cs.truth = truth.cell(cell.first, cell.second);
    cs.needs_review = answer.needs_review;
    for (Relation r : kAllRelations) {
      bool predicted = cs.predicted.contains(r);
      bool present = cs.truth.contains(r);
      Verdict v = predicted ? (present ? Verdict::TruePresent : Verdict::FalsePresent)
                            : (present ? Verdict::FalseAbsent : Verdict::TrueAbsent);
      cs.verdicts[index_of(r)] = v;
      auto& breakdown = score.per_relation[index_of(r)];
      switch (v) {
        case Verdict::TruePresent:
          ++score.true_present;
          ++breakdown.true_present;
          break;
        case Verdict::FalsePresent:
          ++score.false_present;
          ++breakdown.false_present;
          break;
        case Verdict::FalseAbsent:
          ++score.false_absent;
          ++breakdown.false_absent;
          break;
        case Verdict::TrueAbsent:
          ++score.true_absent;
          ++breakdown.true_absent;
          break;
      }
    }
    score.cells.push_back(std::move(cs));
  }
  return score;
}

std::string_view preferred_category_name(PreferredCategory c) {
  switch (c) {
    case PreferredCategory::AgreeOverall:
      return "agree_overall";
    case PreferredCategory::AgreeLanguageGroup:
      return "agree_language_group";
    case PreferredCategory::Impossible:
      return "impossible";
    case PreferredCategory::PossibleNotPreferred:
      return "possible_not_preferred";
  }
  return "?";
}

HumanPreferenceTable HumanPreferenceTable::from_json(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw Error("human-preference document is not a JSON object");
  Lexicon lex = Lexicon::canonical();
  HumanPreferenceTable table;
  for (const auto& [key, value] : doc.items()) {
    auto sep = key.find('|');
    if (sep == std::string::npos)
      throw Error("human-preference key '" + key + "' is not of the form R1|R2");
    CellPair cell{parse_relation(key.substr(0, sep), lex),
                  parse_relation(key.substr(sep + 1), lex)};
    HumanPreference pref{parse_relation(value.at("overall").get<std::string>(), lex), {}};
    if (value.contains("groups")) {
      for (const auto& [group, rel] : value.at("groups").items())
        pref.groups[group] = parse_relation(rel.get<std::string>(), lex);
    }
    table.set(cell, std::move(pref));
  }
  return table;
}

HumanPreferenceTable HumanPreferenceTable::from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open human-preference file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return from_json(buf.str());
}

const HumanPreference* HumanPreferenceTable::find(const CellPair& cell) const {
  auto it = prefs_.find(cell);
  return it == prefs_.end() ? nullptr : &it->second;
}

void HumanPreferenceTable::set(const CellPair& cell, HumanPreference pref) {
  prefs_[cell] = std::move(pref);
}

PreferredScore score_preferred(const std::map<std::string, PreferredPrediction>& preferred,
                               const CompositionTable& truth,
                               const std::vector<CellPair>& cells,
                               const std::optional<HumanPreferenceTable>& humans) {
  PreferredScore score;
  score.humans_available = humans.has_value();
  for (const CellPair& cell : cells) {
    auto it = preferred.find(pair_key(cell));
    if (it == preferred.end())
      throw MissingCellError("no preferred answer for cell " + pair_key(cell));
    const PreferredPrediction& prediction = it->second;

    PreferredCellScore cs;
    cs.cell = cell;
    cs.predicted = prediction.relation;
    cs.needs_review = prediction.needs_review;
    const RelationSet truth_set = truth.cell(cell.first, cell.second);

    if (!truth_set.contains(prediction.relation)) {
      cs.category = PreferredCategory::Impossible;
    } else {
      const HumanPreference* human = humans ? humans->find(cell) : nullptr;
      if (human && human->overall == prediction.relation) {
        cs.category = PreferredCategory::AgreeOverall;
      } else if (human && std::any_of(human->groups.begin(), human->groups.end(),
                                      [&](const auto& g) {
                                        return g.second == prediction.relation;
                                      })) {
        cs.category = PreferredCategory::AgreeLanguageGroup;
      } else {
        cs.category = PreferredCategory::PossibleNotPreferred;
      }
    }
    cs.unique_unnoticed = truth_set.size() == 1 && !prediction.uniqueness_claimed;

    ++score.category_counts[static_cast<std::size_t>(cs.category)];
    if (cs.unique_unnoticed) ++score.unique_unnoticed_count;
    score.cells.push_back(cs);
  }
  return score;
}

std::string_view cn_verdict_name(CnVerdict v) {
  switch (v) {
    case CnVerdict::CorrectLink:
      return "correct_link";
    case CnVerdict::IncorrectLink:
      return "incorrect_link";
    case CnVerdict::MissingLink:
      return "missing_link";
    case CnVerdict::CorrectAbsence:
      return "correct_absence";
  }
  return "?";
}

double CnScore::accuracy_percent() const {
  return 100.0 * correct() / scored_cells();
}

CnScore score_cn(const std::array<std::array<bool, kRelationCount>, kRelationCount>& predicted,
                 const CnGraph& truth) {
  CnScore score;
  for (Relation a : kAllRelations) {
    for (Relation b : kAllRelations) {
      if (a == b) continue;
      bool pred = predicted[index_of(a)][index_of(b)];
      bool edge = truth.is_neighbor(a, b);
      CnVerdict v = pred ? (edge ? CnVerdict::CorrectLink : CnVerdict::IncorrectLink)
                         : (edge ? CnVerdict::MissingLink : CnVerdict::CorrectAbsence);
      score.verdicts[index_of(a)][index_of(b)] = v;
      switch (v) {
        case CnVerdict::CorrectLink:
          ++score.correct_links;
          break;
        case CnVerdict::IncorrectLink:
          ++score.incorrect_links;
          break;
        case CnVerdict::MissingLink:
          ++score.missing_links;
          break;
        case CnVerdict::CorrectAbsence:
          ++score.correct_absences;
          break;
      }
    }
  }
  return score;
}

}  // namespace rcc8
