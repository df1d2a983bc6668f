#include "rcc8/eval_pipeline.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "rcc8/errors.hpp"

namespace rcc8 {

namespace {

std::string canonical_pair_label(Relation r1, Relation r2) {
  return std::string(relation_name(r1)) + "|" + std::string(relation_name(r2));
}

/// Transcript cell labels use the transcript's lexicon; scoring keys are
/// canonical.
std::string canonicalize_label(const std::string& label, const Lexicon& lex) {
  auto sep = label.find('|');
  if (sep == std::string::npos) {
    return std::string(relation_name(parse_relation(label, lex)));
  }
  Relation r1 = parse_relation(label.substr(0, sep), lex);
  Relation r2 = parse_relation(label.substr(sep + 1), lex);
  return canonical_pair_label(r1, r2);
}

}  // namespace

Corrections corrections_from_json(std::string_view json_text) {
  nlohmann::json doc = nlohmann::json::parse(json_text, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw Error("corrections document is not a JSON object");
  Lexicon lex = Lexicon::canonical();
  Corrections corrections;
  for (const auto& [key, value] : doc.items()) {
    if (!value.is_array()) throw Error("correction for '" + key + "' is not an array");
    RelationSet set;
    for (const auto& name : value) set.insert(parse_relation(name.get<std::string>(), lex));
    corrections[key] = set;
  }
  return corrections;
}

Corrections corrections_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open corrections file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return corrections_from_json(buf.str());
}

ScoredReports score_transcript(const std::vector<TranscriptRecord>& records,
                               ExperimentKind kind, const CompositionTable& table,
                               const CnGraph& graph,
                               const std::optional<HumanPreferenceTable>& humans,
                               const Corrections& corrections) {
  if (records.empty()) throw Error("transcript is empty");
  const std::string kind_name(experiment_kind_name(kind));
  for (const TranscriptRecord& r : records) {
    if (r.kind != kind_name)
      throw Error("transcript is a " + r.kind + " run, not " + kind_name);
  }
  const Lexicon lex =
      records.front().anonymize ? Lexicon::anonymized() : Lexicon::canonical();

  if (kind == ExperimentKind::Continuity) {
    std::array<std::array<bool, kRelationCount>, kRelationCount> predicted{};
    std::array<bool, kRelationCount> seen{};
    for (const TranscriptRecord& record : records) {
      if (record.cell == kInitialCellLabel) continue;
      Relation row = parse_relation(record.cell, lex);
      RelationSet next;
      auto corr = corrections.find(std::string(relation_name(row)));
      if (corr != corrections.end()) {
        next = corr->second;
      } else {
        next = parse_relation_set(record.response, lex).relations;
      }
      for (Relation col : next.members())
        if (col != row) predicted[index_of(row)][index_of(col)] = true;
      seen[index_of(row)] = true;
    }
    for (Relation r : kAllRelations) {
      if (!seen[index_of(r)])
        throw MissingCellError("continuity transcript has no row for " +
                               std::string(relation_name(r)));
    }
    CnScore score = score_cn(predicted, graph);
    return {render_cn_report(score, ReportFormat::Markdown),
            render_cn_report(score, ReportFormat::Csv)};
  }

  if (kind == ExperimentKind::Composition) {
    std::map<std::string, ParsedAnswer> answers;
    for (const TranscriptRecord& record : records) {
      if (record.cell == kInitialCellLabel) continue;
      std::string key = canonicalize_label(record.cell, lex);
      auto corr = corrections.find(key);
      if (corr != corrections.end()) {
        ParsedAnswer adjudicated;
        adjudicated.relations = corr->second;
        answers[key] = adjudicated;
      } else {
        answers[key] = parse_relation_set(record.response, lex);
      }
    }
    CompositionScore score = score_composition(answers, table, non_eq_cells());
    return {render_composition_report(score, ReportFormat::Markdown),
            render_composition_report(score, ReportFormat::Csv)};
  }

  std::map<std::string, PreferredPrediction> preferred;
  for (const TranscriptRecord& record : records) {
    if (record.cell == kInitialCellLabel) continue;
    std::string key = canonicalize_label(record.cell, lex);
    auto corr = corrections.find(key);
    if (corr != corrections.end()) {
      if (corr->second.size() != 1)
        throw Error("preferred correction for " + key + " must name exactly one relation");
      preferred[key] = {corr->second.members().front(), false, false};
      continue;
    }
    try {
      PreferredAnswer answer = parse_preferred(record.response, lex);
      preferred[key] = {answer.relation, answer.uniqueness_claimed, answer.needs_review};
    } catch (const NoPreferenceFoundError& e) {
      throw NoPreferenceFoundError("cell " + key + ": " + e.what() +
                                   " (supply a corrections entry to adjudicate)");
    }
  }
  PreferredScore score = score_preferred(preferred, table, non_eq_cells(), humans);
  return {render_preferred_report(score, ReportFormat::Markdown),
          render_preferred_report(score, ReportFormat::Csv)};
}

}  // namespace rcc8
