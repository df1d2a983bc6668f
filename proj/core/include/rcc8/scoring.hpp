#pragma once

#include <array>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "rcc8/answer_parsing.hpp"
#include "rcc8/composition_table.hpp"
#include "rcc8/neighborhood.hpp"
#include "rcc8/relations.hpp"

namespace rcc8 {

/// Per (cell, relation) outcome of a set prediction against ground truth.
enum class Verdict : std::uint8_t {
  TruePresent,   // predicted and in the ground-truth cell
  FalsePresent,  // predicted but not in the cell
  FalseAbsent,   // in the cell but not predicted
  TrueAbsent,    // neither
};

std::string_view verdict_name(Verdict v);

using CellPair = std::pair<Relation, Relation>;

/// The 49 ordered non-EQ pairs in canonical row-major order.
std::vector<CellPair> non_eq_cells();

struct RelationBreakdown {
  int true_present = 0;
  int false_present = 0;
  int false_absent = 0;
  int true_absent = 0;
};

struct CompositionCellScore {
  CellPair cell;
  RelationSet predicted;
  RelationSet truth;
  bool needs_review = false;
  std::array<Verdict, kRelationCount> verdicts{};
};

struct CompositionScore {
  std::vector<CompositionCellScore> cells;
  int true_present = 0;
  int false_present = 0;
  int false_absent = 0;
  int true_absent = 0;
  std::array<RelationBreakdown, kRelationCount> per_relation{};

  int total() const { return static_cast<int>(cells.size() * kRelationCount); }
  int correct() const { return true_present + true_absent; }
  /// Exact fraction correct/total as a percentage.
  double accuracy_percent() const;
  /// Number of cells predicted exactly right.
  int fully_correct_cells() const;
};

/// Derives the remaining aggregate from synthetic counts:
/// TN = total - TP - FP - FN, accuracy = (TP + TN) / total.
struct AggregateCounts {
  int true_present;
  int false_present;
  int false_absent;
  int true_absent;
  int total;
  double accuracy_percent;
};
AggregateCounts aggregate_from_counts(int true_present, int false_present,
                                      int false_absent, int total);

/// Scores parsed set answers for the listed cells against the table.
/// Throws MissingCellError when a listed cell has no answer.
CompositionScore score_composition(const std::map<std::string, ParsedAnswer>& answers,
                                   const CompositionTable& truth,
                                   const std::vector<CellPair>& cells);

enum class PreferredCategory : std::uint8_t {
  AgreeOverall,        // matches the overall human preference
  AgreeLanguageGroup,  // matches one language group's preference only
  Impossible,          // not in the ground-truth composition cell
  PossibleNotPreferred,
};

std::string_view preferred_category_name(PreferredCategory c);

/// Optional external data: per cell, the overall preferred relation and
/// per-language-group preferences.
struct HumanPreference {
  Relation overall;
  std::map<std::string, Relation> groups;
};

class HumanPreferenceTable {
 public:
  static HumanPreferenceTable from_json(std::string_view json_text);
  static HumanPreferenceTable from_file(const std::filesystem::path& path);

  const HumanPreference* find(const CellPair& cell) const;
  void set(const CellPair& cell, HumanPreference pref);

 private:
  std::map<CellPair, HumanPreference> prefs_;
};

struct PreferredCellScore {
  CellPair cell;
  Relation predicted;
  PreferredCategory category;
  /// Ground-truth cell is a singleton but the answer did not claim
  /// uniqueness.
  bool unique_unnoticed = false;
  bool needs_review = false;
};

struct PreferredScore {
  std::vector<PreferredCellScore> cells;
  bool humans_available = false;
  std::array<int, 4> category_counts{};  // indexed by PreferredCategory
  int unique_unnoticed_count = 0;

  int count(PreferredCategory c) const {
    return category_counts[static_cast<std::size_t>(c)];
  }
};

struct PreferredPrediction {
  Relation relation;
  bool uniqueness_claimed = false;
  bool needs_review = false;
};

/// Categorizes each preferred answer; without human data the two agreement
/// categories are reported as unavailable and every possible prediction
/// falls into PossibleNotPreferred.
PreferredScore score_preferred(const std::map<std::string, PreferredPrediction>& preferred,
                               const CompositionTable& truth,
                               const std::vector<CellPair>& cells,
                               const std::optional<HumanPreferenceTable>& humans);

enum class CnVerdict : std::uint8_t {
  CorrectLink,
  IncorrectLink,
  MissingLink,
  CorrectAbsence,
};

std::string_view cn_verdict_name(CnVerdict v);

struct CnScore {
  /// Off-diagonal 8x8 verdicts; the diagonal is never scored.
  std::array<std::array<CnVerdict, kRelationCount>, kRelationCount> verdicts{};
  int correct_links = 0;
  int incorrect_links = 0;
  int missing_links = 0;
  int correct_absences = 0;

  int scored_cells() const { return kRelationCount * (kRelationCount - 1); }
  int correct() const { return correct_links + correct_absences; }
  double accuracy_percent() const;
};

/// Scores a predicted adjacency matrix (off-diagonal) against the graph.
CnScore score_cn(const std::array<std::array<bool, kRelationCount>, kRelationCount>& predicted,
                 const CnGraph& truth);

}  // namespace rcc8
