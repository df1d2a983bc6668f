#pragma once

#include <string>

#include "rcc8/scoring.hpp"

namespace rcc8 {

enum class ReportFormat { Markdown, Csv };

/// Percentage with two decimals, the precision used everywhere in reports.
std::string format_percent(double value);

/// Markdown: the 7x7 grid in single-letter coding with per-cell verdict
/// markers, aggregate counts and the per-relation breakdown. CSV: one row
/// per (cell, relation) verdict. Throws EmptyScoreError on empty scores.
std::string render_composition_report(const CompositionScore& score, ReportFormat format);

std::string render_preferred_report(const PreferredScore& score, ReportFormat format);

std::string render_cn_report(const CnScore& score, ReportFormat format);

}  // namespace rcc8
