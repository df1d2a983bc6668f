#include "rcc8/transcript.hpp"

#include <sstream>

#include <json.hpp>

#include "rcc8/errors.hpp"

namespace rcc8 {

std::string transcript_record_to_json(const TranscriptRecord& record) {
  nlohmann::json doc{
      {"kind", record.kind},           {"anonymize", record.anonymize},
      {"cell", record.cell},           {"prompt", record.prompt},
      {"response", record.response},   {"model", record.model},
      {"temperature", record.temperature}, {"timestamp", record.timestamp},
      {"seq", record.seq},
  };
  return doc.dump();
}

TranscriptRecord transcript_record_from_json(const std::string& line) {
  nlohmann::json doc = nlohmann::json::parse(line, nullptr, false);
  if (doc.is_discarded() || !doc.is_object())
    throw Error("transcript line is not a JSON object");
  TranscriptRecord record;
  try {
    record.kind = doc.at("kind").get<std::string>();
    record.anonymize = doc.at("anonymize").get<bool>();
    record.cell = doc.at("cell").get<std::string>();
    record.prompt = doc.at("prompt").get<std::string>();
    record.response = doc.at("response").get<std::string>();
    record.model = doc.at("model").get<std::string>();
    record.temperature = doc.at("temperature").get<double>();
    record.timestamp = doc.at("timestamp").get<std::string>();
    record.seq = doc.at("seq").get<std::uint64_t>();
  } catch (const nlohmann::json::exception& e) {
    throw Error(std::string("malformed transcript record: ") + e.what());
  }
  return record;
}

TranscriptWriter::TranscriptWriter(const std::filesystem::path& path)
    : out_(path, std::ios::binary | std::ios::app) {
  if (!out_) throw Error("cannot open transcript for writing: " + path.string());
}

void TranscriptWriter::append(const TranscriptRecord& record) {
  out_ << transcript_record_to_json(record) << '\n';
  out_.flush();
  if (!out_) throw Error("failed to persist transcript record");
  ++written_;
}

std::vector<TranscriptRecord> parse_transcript(const std::string& text) {
  std::vector<TranscriptRecord> records;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    records.push_back(transcript_record_from_json(line));
  }
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i].seq != i)
      throw Error("transcript sequence broken at line " + std::to_string(i + 1) +
                  ": expected seq " + std::to_string(i));
  }
  if (!records.empty() && records[0].cell != kInitialCellLabel)
    throw Error("transcript record 0 must be the initial context prompt");
  return records;
}

std::vector<TranscriptRecord> read_transcript(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open transcript: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_transcript(buf.str());
}

}  // namespace rcc8
