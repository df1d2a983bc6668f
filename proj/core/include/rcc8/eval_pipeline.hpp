#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rcc8/experiment.hpp"
#include "rcc8/neighborhood.hpp"
#include "rcc8/report.hpp"
#include "rcc8/scoring.hpp"
#include "rcc8/transcript.hpp"

namespace rcc8 {

/// Manual adjudication of individual cells, keyed by canonical cell label
/// ("DC|EC" or "EC"), each mapping to the adjudicated relation list.
/// Applied before parsing, so unparseable responses can be overridden
/// without editing transcripts.
using Corrections = std::map<std::string, RelationSet>;

Corrections corrections_from_json(std::string_view json_text);
Corrections corrections_from_file(const std::filesystem::path& path);

struct ScoredReports {
  std::string markdown;
  std::string csv;
};

/// Scores a recorded composition or preferred transcript against the table,
/// or a continuity transcript against the graph, and renders both report
/// formats. The transcript's own lexicon (canonical or anonymized) drives
/// parsing; scoring is always in canonical terms.
ScoredReports score_transcript(const std::vector<TranscriptRecord>& records,
                               ExperimentKind kind, const CompositionTable& table,
                               const CnGraph& graph,
                               const std::optional<HumanPreferenceTable>& humans,
                               const Corrections& corrections);

}  // namespace rcc8
