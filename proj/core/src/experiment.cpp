#include "rcc8/experiment.hpp"

#include <stdexcept>

#include "rcc8/errors.hpp"

namespace rcc8 {

namespace {

// Templates carry {R} placeholders for relation tokens and {IDENTIFY} for
// the calculus-naming sentence, which the anonymized variants omit.

constexpr std::string_view kIdentifySentence =
    " These relations form part of the well known RCC-8 qualitative spatial "
    "reasoning calculus.";

constexpr std::string_view kDefinitions =
    " {DC}(x,y) means that x and y are disconnected and share no spatial parts. "
    "{EC}(x,y) means that x and y touch at a boundary but do not share any interior "
    "parts. {PO}(x,y) means that x and y share a spatial part, but neither is part "
    "of the other. {TPP}(x,y) means that x is part of y and touches y’s "
    "boundary. {NTPP}(x,y) means that x is part of y but does not touch y’s "
    "boundary.";

constexpr std::string_view kCompositionInitial =
    "Consider the following set of eight pairwise disjoint and mutually exhaustive "
    "binary spatial relations.{IDENTIFY}{DEFS} {TPPi}(x,y) is the same as "
    "{TPP}(y,x). {NTPPi}(x,y) is the same as {NTPP}(y,x). Finally, {EQ}(x,y) means "
    "that x and y are coincident. I will now ask you a series of questions about "
    "these relations. There may be more than one possible relation, in which case "
    "name all of the possible answers. If all eight relations are possible, just "
    "say ALL.";

constexpr std::string_view kPreferredInitial =
    "Consider the following set of eight pairwise disjoint and mutually exhaustive "
    "binary spatial relations, between two one piece spatial 2D "
    "regions.{IDENTIFY}{DEFS} {TPPi} (x,y) is the same as {TPP}(y,x). {NTPPi}(x,y) "
    "is the same as {NTPP}(y,x). Finally, {EQ}(x,y) means that x and y are "
    "coincident. I will now ask you a series of questions about these relations. "
    "It is possible that in some cases there could be more than one relation that "
    "might hold; in these cases just give me your single most preferred "
    "relationship.";

constexpr std::string_view kContinuitySuffix =
    " In all these questions, assume that all motion is continuous, and any "
    "deformations of the spatial regions are also continuous. Also please describe "
    "the motion or changes of size or shape that would be required for the change "
    "of relation to take place.";

constexpr std::string_view kCompositionCell =
    "If {R1}(x,y) and {R2}(y,z) then what are the possible relationships between x "
    "and z.";

constexpr std::string_view kPreferredCell =
    "If {R1}(x,y) and {R2}(y,z) then what is your preferred relationship between x "
    "and z?";

constexpr std::string_view kContinuityCell =
    "If {R}(a,b) holds, then what are the next possible relations that might hold "
    "as the two regions translate or change their shape or size? I am interested "
    "in the immediate next relation, so no intermediate relation must hold.";

std::string expand(std::string_view tmpl,
                   const std::vector<std::pair<std::string_view, std::string>>& subs) {
  std::string out;
  out.reserve(tmpl.size());
  std::size_t pos = 0;
  while (pos < tmpl.size()) {
    auto open = tmpl.find('{', pos);
    if (open == std::string_view::npos) {
      out.append(tmpl.substr(pos));
      break;
    }
    out.append(tmpl.substr(pos, open - pos));
    auto close = tmpl.find('}', open);
    if (close == std::string_view::npos)
      throw std::logic_error("unterminated placeholder in prompt template");
    std::string_view key = tmpl.substr(open + 1, close - open - 1);
    bool matched = false;
    for (const auto& [name, value] : subs) {
      if (key == name) {
        out.append(value);
        matched = true;
        break;
      }
    }
    if (!matched) throw std::logic_error("unknown placeholder {" + std::string(key) + "}");
    pos = close + 1;
  }
  return out;
}

std::vector<std::pair<std::string_view, std::string>> base_substitutions(
    const ExperimentSpec& spec) {
  std::vector<std::pair<std::string_view, std::string>> subs;
  subs.emplace_back("IDENTIFY",
                    spec.anonymize ? std::string() : std::string(kIdentifySentence));
  for (Relation r : kAllRelations)
    subs.emplace_back(relation_name(r), spec.lexicon.token(r));
  return subs;
}

}  // namespace

std::string_view experiment_kind_name(ExperimentKind kind) {
  switch (kind) {
    case ExperimentKind::Composition:
      return "composition";
    case ExperimentKind::Preferred:
      return "preferred";
    case ExperimentKind::Continuity:
      return "continuity";
  }
  return "?";
}

ExperimentKind experiment_kind_from_name(std::string_view name) {
  if (name == "composition") return ExperimentKind::Composition;
  if (name == "preferred") return ExperimentKind::Preferred;
  if (name == "continuity") return ExperimentKind::Continuity;
  throw Error("unknown experiment kind: '" + std::string(name) + "'");
}

std::string cell_label(const ExperimentCell& cell, const Lexicon& lex) {
  if (const auto* pair = std::get_if<std::pair<Relation, Relation>>(&cell))
    return lex.token(pair->first) + "|" + lex.token(pair->second);
  return lex.token(std::get<Relation>(cell));
}

ExperimentSpec make_experiment_spec(ExperimentKind kind, bool anonymize) {
  ExperimentSpec spec{kind, anonymize,
                      anonymize ? Lexicon::anonymized() : Lexicon::canonical(),
                      {}};
  if (kind == ExperimentKind::Continuity) {
    for (Relation r : kAllRelations) spec.cells.emplace_back(r);
  } else {
    for (Relation r1 : kAllRelations) {
      if (r1 == Relation::EQ) continue;
      for (Relation r2 : kAllRelations) {
        if (r2 == Relation::EQ) continue;
        spec.cells.emplace_back(std::pair{r1, r2});
      }
    }
  }
  return spec;
}

std::string build_initial_prompt(const ExperimentSpec& spec) {
  auto subs = base_substitutions(spec);
  subs.emplace_back("DEFS", expand(kDefinitions, subs));
  switch (spec.kind) {
    case ExperimentKind::Composition:
      return expand(kCompositionInitial, subs);
    case ExperimentKind::Preferred:
      return expand(kPreferredInitial, subs);
    case ExperimentKind::Continuity:
      return expand(kCompositionInitial, subs) + std::string(kContinuitySuffix);
  }
  throw std::logic_error("unreachable experiment kind");
}

std::string build_cell_prompt(const ExperimentSpec& spec, const ExperimentCell& cell) {
  std::vector<std::pair<std::string_view, std::string>> subs;
  if (const auto* pair = std::get_if<std::pair<Relation, Relation>>(&cell)) {
    subs.emplace_back("R1", spec.lexicon.token(pair->first));
    subs.emplace_back("R2", spec.lexicon.token(pair->second));
    if (spec.kind == ExperimentKind::Composition) return expand(kCompositionCell, subs);
    if (spec.kind == ExperimentKind::Preferred) return expand(kPreferredCell, subs);
    throw Error("continuity experiments probe single relations, not pairs");
  }
  if (spec.kind != ExperimentKind::Continuity)
    throw Error("composition/preferred experiments probe relation pairs");
  subs.emplace_back("R", spec.lexicon.token(std::get<Relation>(cell)));
  return expand(kContinuityCell, subs);
}

}  // namespace rcc8
