#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "rcc8/experiment.hpp"

namespace rcc8 {

/// One prompt/response exchange. Record 0 of a run is always the initial
/// context prompt (cell "initial"); sequence indices are consecutive from 0.
struct TranscriptRecord {
  std::string kind;       // experiment kind name
  bool anonymize = false;
  std::string cell;       // "initial", "R1|R2" or "R"
  std::string prompt;
  std::string response;
  std::string model;
  double temperature = 0.0;
  std::string timestamp;  // ISO-8601 UTC, informational only
  std::uint64_t seq = 0;

  bool operator==(const TranscriptRecord&) const = default;
};

std::string transcript_record_to_json(const TranscriptRecord& record);
TranscriptRecord transcript_record_from_json(const std::string& line);

/// Append-only JSON Lines sink; every record is flushed before the call
/// returns, so an interrupted run leaves a valid prefix on disk.
class TranscriptWriter {
 public:
  explicit TranscriptWriter(const std::filesystem::path& path);

  void append(const TranscriptRecord& record);
  std::uint64_t records_written() const { return written_; }

 private:
  std::ofstream out_;
  std::uint64_t written_ = 0;
};

/// Reads a JSON Lines transcript, checking the sequence-index invariants.
std::vector<TranscriptRecord> read_transcript(const std::filesystem::path& path);
std::vector<TranscriptRecord> parse_transcript(const std::string& text);

}  // namespace rcc8
