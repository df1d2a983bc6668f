#include "rcc8/report.hpp"

#include <cstdarg>
#include <cstdio>
#include <vector>

#include "rcc8/errors.hpp"

namespace rcc8 {

namespace {

constexpr std::string_view kLetterLegend =
    "Letter coding: D (DC), E(EC), P(PO), T(TPP), N(NTPP), t(TPPi), n(NTPPi), Q(EQ).";

constexpr std::string_view kCellMarkerLegend =
    "Cell markers: a bare letter is a correctly predicted relation, +x was "
    "predicted but is not possible, -x is possible but was not predicted.";

std::string fmt(const char* format, ...) {
  char buf[256];
  va_list args;
  va_start(args, format);
  std::vsnprintf(buf, sizeof(buf), format, args);
  va_end(args);
  return buf;
}

std::vector<Relation> non_eq_relations() {
  std::vector<Relation> rels;
  for (Relation r : kAllRelations)
    if (r != Relation::EQ) rels.push_back(r);
  return rels;
}

std::string composition_cell_text(const CompositionCellScore& cs) {
  std::string out;
  for (Relation r : kAllRelations) {
    std::string marker;
    switch (cs.verdicts[index_of(r)]) {
      case Verdict::TruePresent:
        marker = std::string(1, relation_letter(r));
        break;
      case Verdict::FalsePresent:
        marker = std::string("+") + relation_letter(r);
        break;
      case Verdict::FalseAbsent:
        marker = std::string("-") + relation_letter(r);
        break;
      case Verdict::TrueAbsent:
        continue;
    }
    if (!out.empty()) out += ' ';
    out += marker;
  }
  return out.empty() ? "·" : out;
}

}  // namespace

std::string format_percent(double value) {
  return fmt("%.2f%%", value);
}

std::string render_composition_report(const CompositionScore& score, ReportFormat format) {
  if (score.cells.empty()) throw EmptyScoreError("composition score has no cells");

  if (format == ReportFormat::Csv) {
    std::string out = "r1,r2,relation,verdict\n";
    for (const auto& cs : score.cells) {
      for (Relation r : kAllRelations) {
        out += std::string(relation_name(cs.cell.first)) + ",";
        out += std::string(relation_name(cs.cell.second)) + ",";
        out += std::string(relation_name(r)) + ",";
        out += std::string(verdict_name(cs.verdicts[index_of(r)])) + "\n";
      }
    }
    return out;
  }

  std::string out = "# Composition scoring report\n\n";
  out += std::string(kLetterLegend) + "\n";
  out += std::string(kCellMarkerLegend) + "\n\n";

  auto find_cell = [&](Relation r1, Relation r2) -> const CompositionCellScore* {
    for (const auto& cs : score.cells)
      if (cs.cell.first == r1 && cs.cell.second == r2) return &cs;
    return nullptr;
  };

  const auto rels = non_eq_relations();
  bool is_grid = score.cells.size() == rels.size() * rels.size();
  if (is_grid) {
    out += "| R1 \\ R2 |";
    for (Relation r2 : rels) out += fmt(" %s |", std::string(relation_name(r2)).c_str());
    out += "\n|---|";
    for (std::size_t i = 0; i < rels.size(); ++i) out += "---|";
    out += "\n";
    for (Relation r1 : rels) {
      out += fmt("| **%s** |", std::string(relation_name(r1)).c_str());
      for (Relation r2 : rels) {
        const CompositionCellScore* cs = find_cell(r1, r2);
        out += " " + (cs ? composition_cell_text(*cs) : std::string("?")) + " |";
      }
      out += "\n";
    }
    out += "\n";
  }

  out += "## Aggregates\n\n";
  out += fmt("- correctly predicted present: %d\n", score.true_present);
  out += fmt("- incorrectly predicted present: %d\n", score.false_present);
  out += fmt("- incorrectly not predicted: %d\n", score.false_absent);
  out += fmt("- correctly not predicted: %d\n", score.true_absent);
  out += fmt("- correct (present and missing): %d of %d\n", score.correct(), score.total());
  out += "- accuracy: " + format_percent(score.accuracy_percent()) + "\n";
  out += fmt("- fully correct cells: %d of %zu\n\n", score.fully_correct_cells(),
             score.cells.size());

  out += "## Per-relation breakdown\n\n";
  out += "| relation | correct present | wrong present | missed | correct absent | accuracy |\n";
  out += "|---|---|---|---|---|---|\n";
  for (Relation r : kAllRelations) {
    const auto& b = score.per_relation[index_of(r)];
    int total = b.true_present + b.false_present + b.false_absent + b.true_absent;
    double pct = total == 0 ? 0.0 : 100.0 * (b.true_present + b.true_absent) / total;
    out += fmt("| %s | %d | %d | %d | %d | %s |\n",
               std::string(relation_name(r)).c_str(), b.true_present, b.false_present,
               b.false_absent, b.true_absent, format_percent(pct).c_str());
  }

  std::string review;
  for (const auto& cs : score.cells) {
    if (!cs.needs_review) continue;
    review += fmt("- %s|%s: predicted {%s}, possible {%s}\n",
                  std::string(relation_name(cs.cell.first)).c_str(),
                  std::string(relation_name(cs.cell.second)).c_str(),
                  cs.predicted.to_string().c_str(), cs.truth.to_string().c_str());
  }
  if (!review.empty()) {
    out += "\n## Cells needing review\n\n";
    out += "Parsed with conflicting or missing evidence; override via a corrections file.\n\n";
    out += review;
  }
  return out;
}

std::string render_preferred_report(const PreferredScore& score, ReportFormat format) {
  if (score.cells.empty()) throw EmptyScoreError("preferred score has no cells");

  if (format == ReportFormat::Csv) {
    std::string out = "r1,r2,predicted,category,unique_unnoticed\n";
    for (const auto& cs : score.cells) {
      out += std::string(relation_name(cs.cell.first)) + ",";
      out += std::string(relation_name(cs.cell.second)) + ",";
      out += std::string(relation_name(cs.predicted)) + ",";
      out += std::string(preferred_category_name(cs.category)) + ",";
      out += (cs.unique_unnoticed ? "yes" : "no") + std::string("\n");
    }
    return out;
  }

  std::string out = "# Preferred-composition scoring report\n\n";
  const int n = static_cast<int>(score.cells.size());
  auto line = [&](PreferredCategory c, const char* label) {
    int count = score.count(c);
    out += fmt("- %s: %d/%d (%s)\n", label, count, n,
               format_percent(100.0 * count / n).c_str());
  };
  if (score.humans_available) {
    line(PreferredCategory::AgreeOverall, "agree with overall human preference");
    line(PreferredCategory::AgreeLanguageGroup, "agree with one language group only");
  } else {
    out += "- agreement categories unavailable (no human-preference data supplied)\n";
  }
  line(PreferredCategory::Impossible, "impossible relation chosen");
  line(PreferredCategory::PossibleNotPreferred,
       score.humans_available ? "possible but not preferred by humans" : "possible");
  out += fmt("- unique composition not noted as unique: %d\n\n", score.unique_unnoticed_count);

  out += "| cell | predicted | category | unique not noted | review |\n";
  out += "|---|---|---|---|---|\n";
  for (const auto& cs : score.cells) {
    out += fmt("| %s|%s | %s | %s | %s | %s |\n",
               std::string(relation_name(cs.cell.first)).c_str(),
               std::string(relation_name(cs.cell.second)).c_str(),
               std::string(relation_name(cs.predicted)).c_str(),
               std::string(preferred_category_name(cs.category)).c_str(),
               cs.unique_unnoticed ? "yes" : "", cs.needs_review ? "yes" : "");
  }
  return out;
}

std::string render_cn_report(const CnScore& score, ReportFormat format) {
  if (format == ReportFormat::Csv) {
    std::string out = "row,column,verdict\n";
    for (Relation a : kAllRelations) {
      for (Relation b : kAllRelations) {
        if (a == b) continue;
        out += std::string(relation_name(a)) + ",";
        out += std::string(relation_name(b)) + ",";
        out += std::string(cn_verdict_name(score.verdicts[index_of(a)][index_of(b)])) + "\n";
      }
    }
    return out;
  }

  std::string out = "# Conceptual-neighborhood scoring report\n\n";
  out += std::string(kLetterLegend) + "\n";
  out += "Cell markers: x correct link, ! incorrect link, - missing link, blank correct "
         "absence. The diagonal is not scored.\n\n";
  out += "| |";
  for (Relation b : kAllRelations) out += fmt(" %c |", relation_letter(b));
  out += "\n|---|";
  for (std::size_t i = 0; i < kRelationCount; ++i) out += "---|";
  out += "\n";
  for (Relation a : kAllRelations) {
    out += fmt("| **%c** |", relation_letter(a));
    for (Relation b : kAllRelations) {
      if (a == b) {
        out += " · |";
        continue;
      }
      switch (score.verdicts[index_of(a)][index_of(b)]) {
        case CnVerdict::CorrectLink:
          out += " x |";
          break;
        case CnVerdict::IncorrectLink:
          out += " ! |";
          break;
        case CnVerdict::MissingLink:
          out += " - |";
          break;
        case CnVerdict::CorrectAbsence:
          out += "  |";
          break;
      }
    }
    out += "\n";
  }
  out += "\n## Aggregates\n\n";
  out += fmt("- correct links: %d\n", score.correct_links);
  out += fmt("- incorrect links: %d\n", score.incorrect_links);
  out += fmt("- missing links: %d\n", score.missing_links);
  out += fmt("- correct absences: %d\n", score.correct_absences);
  out += fmt("- accuracy: %d/%d (%s)\n", score.correct(), score.scored_cells(),
             format_percent(score.accuracy_percent()).c_str());
  return out;
}

}  // namespace rcc8
