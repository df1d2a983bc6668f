#pragma once

#include <string>
#include <string_view>
#include <utility>
#include <variant>
#include <vector>

#include "rcc8/lexicon.hpp"
#include "rcc8/relations.hpp"

namespace rcc8 {

enum class ExperimentKind {
  Composition,  // name every relation possible between x and z
  Preferred,    // name the single most preferred relation
  Continuity,   // name the immediate next relations under continuous change
};

std::string_view experiment_kind_name(ExperimentKind kind);
ExperimentKind experiment_kind_from_name(std::string_view name);

/// One probed cell: a relation pair for composition/preferred, a single
/// relation for continuity.
using ExperimentCell = std::variant<std::pair<Relation, Relation>, Relation>;

/// Stable cell identifier used in transcripts: "DC|EC", "EC" or "initial".
std::string cell_label(const ExperimentCell& cell, const Lexicon& lex);
inline constexpr std::string_view kInitialCellLabel = "initial";

struct ExperimentSpec {
  ExperimentKind kind;
  bool anonymize = false;
  Lexicon lexicon = Lexicon::canonical();
  std::vector<ExperimentCell> cells;
};

/// Default probe order: composition/preferred walk the 49 ordered non-EQ
/// pairs row-major in canonical order; continuity walks all 8 relations.
ExperimentSpec make_experiment_spec(ExperimentKind kind, bool anonymize);

/// The conversation-opening prompt for the experiment. Anonymized variants
/// use X-prefixed tokens throughout and drop the sentence naming the
/// calculus.
std::string build_initial_prompt(const ExperimentSpec& spec);

/// The per-cell question, instantiated with the cell's relation tokens.
std::string build_cell_prompt(const ExperimentSpec& spec, const ExperimentCell& cell);

}  // namespace rcc8
