#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <atomic>
#include <cstdlib>
#include <filesystem>
#include <thread>
#include <vector>

#include <httplib.h>
#include <json.hpp>

#include "rcc8/answer_parsing.hpp"
#include "rcc8/endpoint.hpp"
#include "rcc8/errors.hpp"
#include "rcc8/experiment.hpp"
#include "rcc8/transcript.hpp"

using namespace rcc8;

namespace {

std::filesystem::path temp_file(const std::string& name) {
  auto path = std::filesystem::temp_directory_path() / ("rcc8_harness_" + name);
  std::filesystem::remove(path);
  return path;
}

/// Loopback chat-completions server producing deterministic canned answers.
class FakeServer {
 public:
  FakeServer() {
    server_.Post("/v1/chat/completions", [this](const httplib::Request& req,
                                                httplib::Response& res) {
      int n = ++requests_;
      if (n <= fail_first_) {
        res.status = 500;
        return;
      }
      last_body = nlohmann::json::parse(req.body);
      auth_headers.push_back(req.get_header_value("Authorization"));
      message_counts.push_back(last_body["messages"].size());
      nlohmann::json out = {
          {"choices",
           {{{"message",
              {{"role", "assistant"},
               {"content", "canned answer " + std::to_string(message_counts.size())}}}}}}};
      res.set_content(out.dump(), "application/json");
    });
    port_ = server_.bind_to_any_port("127.0.0.1");
    thread_ = std::thread([this] { server_.listen_after_bind(); });
    server_.wait_until_ready();
  }

  ~FakeServer() {
    server_.stop();
    thread_.join();
  }

  std::string base_url() const { return "http://127.0.0.1:" + std::to_string(port_); }
  void fail_first(int n) { fail_first_ = n; }

  nlohmann::json last_body;
  std::vector<std::string> auth_headers;
  std::vector<std::size_t> message_counts;

 private:
  httplib::Server server_;
  std::thread thread_;
  int port_ = 0;
  std::atomic<int> requests_{0};
  int fail_first_ = 0;
};

EndpointConfig test_config(const std::string& base_url) {
  EndpointConfig config;
  config.base_url = base_url;
  config.model = "test-model";
  config.temperature = 0.0;
  config.retries = 2;
  config.request_delay_seconds = 0.0;
  config.backoff_seconds = 0.0;
  config.credential_env = "RCC8_TEST_TOKEN";
  return config;
}

}  // namespace

TEST_CASE("experiment specs have the documented cell structure") {
  for (bool anonymize : {false, true}) {
    ExperimentSpec comp = make_experiment_spec(ExperimentKind::Composition, anonymize);
    CHECK(comp.cells.size() == 49);
    for (const ExperimentCell& cell : comp.cells) {
      auto pair = std::get<std::pair<Relation, Relation>>(cell);
      CHECK(pair.first != Relation::EQ);
      CHECK(pair.second != Relation::EQ);
    }
    ExperimentSpec pref = make_experiment_spec(ExperimentKind::Preferred, anonymize);
    CHECK(pref.cells.size() == 49);
    ExperimentSpec cont = make_experiment_spec(ExperimentKind::Continuity, anonymize);
    CHECK(cont.cells.size() == 8);
  }
}

TEST_CASE("initial prompts carry the expected wording") {
  auto comp = build_initial_prompt(make_experiment_spec(ExperimentKind::Composition, false));
  CHECK(comp.find("If all eight relations are possible, just say ALL.") != std::string::npos);
  CHECK(comp.find("DC(x,y) means that x and y are disconnected") != std::string::npos);
  CHECK(comp.find("RCC-8") != std::string::npos);

  auto pref = build_initial_prompt(make_experiment_spec(ExperimentKind::Preferred, false));
  CHECK(pref.find("just give me your single most preferred relationship") !=
        std::string::npos);
  CHECK(pref.find("between two one piece spatial 2D regions") != std::string::npos);

  auto cont = build_initial_prompt(make_experiment_spec(ExperimentKind::Continuity, false));
  CHECK(cont.find("assume that all motion is continuous") != std::string::npos);
  CHECK(cont.find("deformations of the spatial regions are also continuous") !=
        std::string::npos);
}

TEST_CASE("anonymized prompts hide the calculus and X-prefix every token") {
  ExperimentSpec spec = make_experiment_spec(ExperimentKind::Composition, true);
  std::string prompt = build_initial_prompt(spec);
  CHECK(prompt.find("RCC-8") == std::string::npos);
  for (Relation r : kAllRelations)
    CHECK(prompt.find("X" + std::string(relation_name(r)) + "(x,y)") != std::string::npos);

  // No canonical token survives at a word boundary; the only thing the
  // canonical scanner can find in the prompt is the literal ALL keyword.
  auto mentions = parse_relation_set(prompt, Lexicon::canonical());
  for (const Mention& m : mentions.evidence)
    CHECK(prompt.substr(m.begin, m.end - m.begin) == "ALL");
}

TEST_CASE("de-anonymizing a prompt recovers the canonical text") {
  std::string anon =
      build_initial_prompt(make_experiment_spec(ExperimentKind::Composition, true));
  std::string canonical =
      build_initial_prompt(make_experiment_spec(ExperimentKind::Composition, false));

  // Longest token first so XNTPPi is never rewritten as X + NTPPi.
  std::vector<Relation> order = {Relation::NTPPi, Relation::NTPP, Relation::TPPi,
                                 Relation::TPP,   Relation::DC,   Relation::EC,
                                 Relation::PO,    Relation::EQ};
  std::string rewritten = anon;
  for (Relation r : order) {
    std::string from = "X" + std::string(relation_name(r));
    std::string to(relation_name(r));
    std::size_t pos = 0;
    while ((pos = rewritten.find(from, pos)) != std::string::npos) {
      rewritten.replace(pos, from.size(), to);
      pos += to.size();
    }
  }
  const std::string head = "binary spatial relations.";
  std::size_t insert_at = rewritten.find(head);
  REQUIRE(insert_at != std::string::npos);
  rewritten.insert(insert_at + head.size(),
                   " These relations form part of the well known RCC-8 qualitative "
                   "spatial reasoning calculus.");
  CHECK(rewritten == canonical);
}

TEST_CASE("cell prompts instantiate the per-kind templates") {
  ExperimentSpec comp = make_experiment_spec(ExperimentKind::Composition, false);
  CHECK(build_cell_prompt(comp, ExperimentCell(std::pair{Relation::DC, Relation::DC})) ==
        "If DC(x,y) and DC(y,z) then what are the possible relationships between x and "
        "z.");

  ExperimentSpec pref = make_experiment_spec(ExperimentKind::Preferred, false);
  CHECK(build_cell_prompt(pref, ExperimentCell(std::pair{Relation::DC, Relation::DC})) ==
        "If DC(x,y) and DC(y,z) then what is your preferred relationship between x and "
        "z?");

  ExperimentSpec cont = make_experiment_spec(ExperimentKind::Continuity, false);
  std::string ec = build_cell_prompt(cont, ExperimentCell(Relation::EC));
  CHECK(ec.find("If EC(a,b) holds, then what are the next possible relations") == 0);
  CHECK(ec.find("no intermediate relation must hold.") != std::string::npos);
}

TEST_CASE("cell prompts mention exactly the cell's relations") {
  for (ExperimentKind kind : {ExperimentKind::Composition, ExperimentKind::Preferred,
                              ExperimentKind::Continuity}) {
    for (bool anonymize : {false, true}) {
      ExperimentSpec spec = make_experiment_spec(kind, anonymize);
      for (const ExperimentCell& cell : spec.cells) {
        std::string prompt = build_cell_prompt(spec, cell);
        RelationSet expected;
        if (const auto* pair = std::get_if<std::pair<Relation, Relation>>(&cell)) {
          expected.insert(pair->first);
          expected.insert(pair->second);
        } else {
          expected.insert(std::get<Relation>(cell));
        }
        RelationSet mentioned;
        for (const Mention& m : parse_relation_set(prompt, spec.lexicon).evidence)
          mentioned.insert(m.relation);
        CHECK(mentioned == expected);
      }
    }
  }
}

TEST_CASE("transcript records round-trip through JSON lines") {
  TranscriptRecord record{"composition", true,  "XDC|XEC",     "prompt text",
                          "response text", "model-1", 0.25, "2024-05-24T00:00:00Z", 3};
  CHECK(transcript_record_from_json(transcript_record_to_json(record)) == record);

  CHECK_THROWS_AS(transcript_record_from_json("not json"), Error);
  CHECK_THROWS_AS(transcript_record_from_json("{}"), Error);
}

TEST_CASE("transcript files enforce the sequence invariants") {
  auto path = temp_file("seq.jsonl");
  {
    TranscriptWriter writer(path);
    TranscriptRecord record{"composition", false, std::string(kInitialCellLabel),
                            "p0",          "r0",  "m",
                            0.0,           "t",   0};
    writer.append(record);
    record.cell = "DC|DC";
    record.seq = 1;
    writer.append(record);
    CHECK(writer.records_written() == 2);
  }
  auto records = read_transcript(path);
  CHECK(records.size() == 2);
  CHECK(records[0].cell == kInitialCellLabel);

  // Broken sequence and missing initial record are rejected.
  CHECK_THROWS_AS(parse_transcript(
                      R"({"kind":"composition","anonymize":false,"cell":"initial","prompt":"p","response":"r","model":"m","temperature":0.0,"timestamp":"t","seq":1})"),
                  Error);
  CHECK_THROWS_AS(parse_transcript(
                      R"({"kind":"composition","anonymize":false,"cell":"DC|DC","prompt":"p","response":"r","model":"m","temperature":0.0,"timestamp":"t","seq":0})"),
                  Error);
  std::filesystem::remove(path);
}

TEST_CASE("run_experiment holds one conversation and persists every exchange") {
  FakeServer server;
  setenv("RCC8_TEST_TOKEN", "secret-token", 1);
  EndpointConfig config = test_config(server.base_url());
  ExperimentSpec spec = make_experiment_spec(ExperimentKind::Composition, false);

  auto path = temp_file("composition.jsonl");
  HttpChatEndpoint endpoint(config);
  TranscriptWriter sink(path);
  RunSummary summary = run_experiment(spec, config, endpoint, sink);

  CHECK(summary.completed);
  CHECK(summary.exchanges == 50);
  CHECK(summary.failures == 0);

  auto records = read_transcript(path);
  REQUIRE(records.size() == 50);
  CHECK(records[0].cell == kInitialCellLabel);
  CHECK(records[0].prompt == build_initial_prompt(spec));
  CHECK(records[1].prompt == build_cell_prompt(spec, spec.cells[0]));
  CHECK(records[1].cell == "DC|DC");
  CHECK(records.back().cell == "NTPPi|NTPPi");
  for (const auto& r : records) {
    CHECK(r.model == "test-model");
    CHECK(r.kind == "composition");
  }

  // Full history is resent each turn: 1, 3, 5, ... user+assistant messages.
  REQUIRE(server.message_counts.size() == 50);
  for (std::size_t i = 0; i < server.message_counts.size(); ++i)
    CHECK(server.message_counts[i] == 2 * i + 1);
  CHECK(server.auth_headers.front() == "Bearer secret-token");

  // Wire format: model, temperature, messages.
  CHECK(server.last_body["model"] == "test-model");
  CHECK(server.last_body["temperature"] == 0.0);
  CHECK(server.last_body["messages"].back()["role"] == "user");
  std::filesystem::remove(path);
}

TEST_CASE("continuity runs probe all eight relations") {
  FakeServer server;
  EndpointConfig config = test_config(server.base_url());
  ExperimentSpec spec = make_experiment_spec(ExperimentKind::Continuity, false);
  auto path = temp_file("continuity.jsonl");
  HttpChatEndpoint endpoint(config);
  TranscriptWriter sink(path);
  RunSummary summary = run_experiment(spec, config, endpoint, sink);
  CHECK(summary.exchanges == 9);
  auto records = read_transcript(path);
  CHECK(records.size() == 9);
  CHECK(records[1].cell == "DC");
  CHECK(records.back().cell == "EQ");
  std::filesystem::remove(path);
}

TEST_CASE("transient server errors are retried with backoff") {
  FakeServer server;
  server.fail_first(2);
  EndpointConfig config = test_config(server.base_url());
  ExperimentSpec spec = make_experiment_spec(ExperimentKind::Continuity, false);
  auto path = temp_file("retry.jsonl");
  HttpChatEndpoint endpoint(config);
  TranscriptWriter sink(path);
  RunSummary summary = run_experiment(spec, config, endpoint, sink);
  CHECK(summary.completed);
  CHECK(summary.exchanges == 9);
  std::filesystem::remove(path);
}

TEST_CASE("an unreachable endpoint aborts with the partial transcript intact") {
  EndpointConfig config = test_config("http://127.0.0.1:9");  // discard port
  config.retries = 1;
  config.timeout_seconds = 1;
  ExperimentSpec spec = make_experiment_spec(ExperimentKind::Continuity, false);
  auto path = temp_file("unreachable.jsonl");
  HttpChatEndpoint endpoint(config);
  TranscriptWriter sink(path);
  try {
    run_experiment(spec, config, endpoint, sink);
    FAIL("expected EndpointError");
  } catch (const EndpointError& e) {
    CHECK(e.partial_summary().aborted_at == kInitialCellLabel);
    CHECK(e.partial_summary().exchanges == 0);
  }
  CHECK(read_transcript(path).empty());
  std::filesystem::remove(path);
}

TEST_CASE("replay reproduces a stored run byte for byte") {
  FakeServer server;
  EndpointConfig config = test_config(server.base_url());
  ExperimentSpec spec = make_experiment_spec(ExperimentKind::Continuity, false);
  auto live_path = temp_file("replay_live.jsonl");
  {
    HttpChatEndpoint endpoint(config);
    TranscriptWriter sink(live_path);
    run_experiment(spec, config, endpoint, sink);
  }
  auto recorded = read_transcript(live_path);

  auto compare_replay = [&](const std::string& name) {
    auto replay_path = temp_file(name);
    ReplayEndpoint endpoint(recorded);
    TranscriptWriter sink(replay_path);
    RunSummary summary = run_experiment(spec, config, endpoint, sink);
    CHECK(summary.completed);
    auto replayed = read_transcript(replay_path);
    REQUIRE(replayed.size() == recorded.size());
    for (std::size_t i = 0; i < recorded.size(); ++i) {
      CHECK(replayed[i].prompt == recorded[i].prompt);
      CHECK(replayed[i].response == recorded[i].response);
      CHECK(replayed[i].cell == recorded[i].cell);
      CHECK(replayed[i].seq == recorded[i].seq);
    }
    std::filesystem::remove(replay_path);
    return replayed;
  };
  auto first = compare_replay("replay_a.jsonl");
  auto second = compare_replay("replay_b.jsonl");
  for (std::size_t i = 0; i < first.size(); ++i)
    CHECK(first[i].response == second[i].response);

  SUBCASE("prompt drift is rejected") {
    auto edited = recorded;
    edited[3].prompt += " extra";
    ReplayEndpoint endpoint(edited);
    std::vector<ChatMessage> history{{"user", recorded[0].prompt}};
    CHECK(endpoint.complete(history) == recorded[0].response);
    history.push_back({"assistant", recorded[0].response});
    history.push_back({"user", "unexpected prompt"});
    CHECK_THROWS_AS(endpoint.complete(history), TranscriptMismatchError);
  }

  SUBCASE("a truncated transcript runs dry") {
    auto truncated = recorded;
    truncated.resize(3);
    ReplayEndpoint endpoint(truncated);
    auto path = temp_file("replay_trunc.jsonl");
    TranscriptWriter sink(path);
    try {
      run_experiment(spec, config, endpoint, sink);
      FAIL("expected EndpointError");
    } catch (const EndpointError& e) {
      CHECK(e.partial_summary().exchanges == 3);
      CHECK(e.partial_summary().aborted_at == "PO");
    }
    CHECK(read_transcript(path).size() == 3);
    std::filesystem::remove(path);
  }
  std::filesystem::remove(live_path);
}
