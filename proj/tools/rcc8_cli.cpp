#include "rcc8_cli.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <optional>
#include <ostream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcc8/composition_table.hpp"
#include "rcc8/endpoint.hpp"
#include "rcc8/errors.hpp"
#include "rcc8/eval_pipeline.hpp"
#include "rcc8/network.hpp"
#include "rcc8/neighborhood.hpp"
#include "rcc8/oracle.hpp"

namespace rcc8::cli {

namespace {

constexpr int kOk = 0;
constexpr int kVerificationFailure = 1;
constexpr int kUsageError = 2;

/// With RCC8_CI set, randomized commands must pin their seed explicitly.
bool ci_mode() {
  const char* v = std::getenv("RCC8_CI");
  return v != nullptr && *v != '\0' && std::string_view(v) != "0";
}

GridExtent parse_grid(const std::string& text) {
  auto sep = text.find('x');
  if (sep == std::string::npos) sep = text.find('X');
  if (sep == std::string::npos)
    throw Error("grid must look like WxH, got '" + text + "'");
  GridExtent extent;
  extent.width = std::stoi(text.substr(0, sep));
  extent.height = std::stoi(text.substr(sep + 1));
  if (extent.width < 1 || extent.height < 1) throw Error("grid must be at least 1x1");
  return extent;
}

nlohmann::json region_to_json(const GridRegion& region) {
  nlohmann::json cells = nlohmann::json::array();
  for (GridCell c : region.cells()) cells.push_back({c.col, c.row});
  return cells;
}

nlohmann::json witness_to_json(const Witness& w) {
  return nlohmann::json{
      {"x", region_to_json(w.x)},   {"y", region_to_json(w.y)},
      {"z", region_to_json(w.z)},   {"r_xy", relation_name(w.xy)},
      {"r_yz", relation_name(w.yz)}, {"r_xz", relation_name(w.xz)},
  };
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot open file for writing: " + path.string());
  out << content;
  if (!out) throw Error("failed to write file: " + path.string());
}

struct EvalOptions {
  std::string experiment;
  bool anonymize = false;
  std::string endpoint_url;
  std::string model;
  double temperature = 0.0;
  std::string out_path;
  std::string completions_path = "/v1/chat/completions";
  std::string credential_env = "OPENAI_API_KEY";
  int timeout_seconds = 60;
  int retries = 3;
  double delay_seconds = 1.0;
  std::string system_prompt;
  std::string transcript_path;
  std::string out_dir;
  std::string human_prefs_path;
  std::string corrections_path;
  std::string table_path;
  std::string graph_path;
};

int do_eval_run(const EvalOptions& opt, std::ostream& out, std::ostream& err) {
  ExperimentSpec spec =
      make_experiment_spec(experiment_kind_from_name(opt.experiment), opt.anonymize);
  EndpointConfig config;
  config.base_url = opt.endpoint_url;
  config.path = opt.completions_path;
  config.model = opt.model;
  config.temperature = opt.temperature;
  config.timeout_seconds = opt.timeout_seconds;
  config.retries = opt.retries;
  config.credential_env = opt.credential_env;
  config.request_delay_seconds = opt.delay_seconds;
  if (!opt.system_prompt.empty()) config.system_prompt = opt.system_prompt;

  HttpChatEndpoint endpoint(config);
  TranscriptWriter sink(opt.out_path);
  try {
    RunSummary summary = run_experiment(spec, config, endpoint, sink);
    out << "exchanges: " << summary.exchanges << "\nfailures: " << summary.failures
        << "\ncompleted: yes\n";
    return kOk;
  } catch (const EndpointError& e) {
    const RunSummary& partial = e.partial_summary();
    err << "error: " << e.what() << "\n";
    out << "exchanges: " << partial.exchanges << "\nfailures: " << partial.failures
        << "\ncompleted: no\naborted at: " << partial.aborted_at << "\n";
    return kVerificationFailure;
  }
}

int do_eval_score(const EvalOptions& opt, bool to_stdout, std::ostream& out) {
  auto records = read_transcript(opt.transcript_path);
  ExperimentKind kind = experiment_kind_from_name(opt.experiment);
  CompositionTable table = load_composition_table_file(
      opt.table_path.empty() ? default_composition_table_path()
                             : std::filesystem::path(opt.table_path));
  CnGraph graph = load_cn_graph_file(
      opt.graph_path.empty() ? default_cn_graph_path()
                             : std::filesystem::path(opt.graph_path));
  std::optional<HumanPreferenceTable> humans;
  if (!opt.human_prefs_path.empty())
    humans = HumanPreferenceTable::from_file(opt.human_prefs_path);
  Corrections corrections;
  if (!opt.corrections_path.empty())
    corrections = corrections_from_file(opt.corrections_path);

  ScoredReports reports = score_transcript(records, kind, table, graph, humans, corrections);
  if (to_stdout) {
    out << reports.markdown;
    return kOk;
  }
  std::filesystem::create_directories(opt.out_dir);
  write_file(std::filesystem::path(opt.out_dir) / "report.md", reports.markdown);
  write_file(std::filesystem::path(opt.out_dir) / "verdicts.csv", reports.csv);
  out << "wrote " << (std::filesystem::path(opt.out_dir) / "report.md").string() << "\n";
  out << "wrote " << (std::filesystem::path(opt.out_dir) / "verdicts.csv").string() << "\n";
  return kOk;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"RCC-8 relation algebra, constraint networks, grid-region model "
               "checking and LLM evaluation"};
  app.require_subcommand(1);

  std::string table_path;
  std::string graph_path;
  auto add_table_option = [&](CLI::App* cmd) {
    cmd->add_option("--table", table_path,
                    "composition table JSON (overrides the shipped asset)");
  };
  auto add_graph_option = [&](CLI::App* cmd) {
    cmd->add_option("--graph", graph_path,
                    "neighborhood graph JSON (overrides the shipped asset)");
  };

  auto load_table = [&]() {
    return load_composition_table_file(
        table_path.empty() ? default_composition_table_path()
                           : std::filesystem::path(table_path));
  };
  auto load_graph = [&]() {
    return load_cn_graph_file(graph_path.empty() ? default_cn_graph_path()
                                          : std::filesystem::path(graph_path));
  };

  // algebra
  auto* algebra = app.add_subcommand("algebra", "relation algebra queries");
  algebra->require_subcommand(1);
  std::string rel1, rel2;
  auto* compose_cmd = algebra->add_subcommand("compose", "compose two base relations");
  compose_cmd->add_option("r1", rel1, "first relation")->required();
  compose_cmd->add_option("r2", rel2, "second relation")->required();
  add_table_option(compose_cmd);
  auto* converse_cmd = algebra->add_subcommand("converse", "converse of a base relation");
  converse_cmd->add_option("r", rel1, "relation")->required();
  auto* neighbors_cmd =
      algebra->add_subcommand("neighbors", "conceptual neighbors of a base relation");
  neighbors_cmd->add_option("r", rel1, "relation")->required();
  add_graph_option(neighbors_cmd);

  // network
  auto* network = app.add_subcommand("network", "constraint network solving");
  network->require_subcommand(1);
  std::string network_file;
  bool want_scenario = false;
  auto* solve_cmd = network->add_subcommand("solve", "close a network and print it");
  solve_cmd->add_option("file", network_file, "network JSON document")->required();
  solve_cmd->add_flag("--scenario", want_scenario, "also search for a base-relation scenario");
  add_table_option(solve_cmd);

  // oracle
  auto* oracle = app.add_subcommand("oracle", "grid-region model checking");
  oracle->require_subcommand(1);
  std::uint64_t samples = kDefaultSoundnessSamples;
  std::uint64_t budget = kDefaultWitnessBudget;
  std::string grid_text = "6x6";
  std::uint64_t seed = 42;
  bool scan_rectangles = false;
  auto* soundness_cmd =
      oracle->add_subcommand("soundness", "sample random triples hunting violations");
  soundness_cmd->add_option("--samples", samples, "number of random triples");
  soundness_cmd->add_option("--grid", grid_text, "sampling window, WxH");
  auto* soundness_seed = soundness_cmd->add_option("--seed", seed, "RNG seed");
  soundness_cmd->add_flag("--rectangles", scan_rectangles,
                          "also scan every rectangle triple exhaustively");
  add_table_option(soundness_cmd);
  auto* witnesses_cmd =
      oracle->add_subcommand("witnesses", "find a model for every table entry");
  witnesses_cmd->add_option("--budget", budget, "random samples per entry");
  witnesses_cmd->add_option("--grid", grid_text, "sampling window, WxH");
  auto* witnesses_seed = witnesses_cmd->add_option("--seed", seed, "RNG seed");
  add_table_option(witnesses_cmd);

  // eval
  auto* eval = app.add_subcommand("eval", "experiment runs and scoring");
  EvalOptions opt;
  auto* run_cmd = eval->add_subcommand("run", "run one experiment against an endpoint");
  run_cmd->add_option("--experiment", opt.experiment, "composition|preferred|continuity")
      ->required();
  run_cmd->add_flag("--anonymize", opt.anonymize, "X-prefix relation names");
  run_cmd->add_option("--endpoint", opt.endpoint_url, "base URL")->required();
  run_cmd->add_option("--model", opt.model, "model name")->required();
  run_cmd->add_option("--temperature", opt.temperature, "sampling temperature");
  run_cmd->add_option("--out", opt.out_path, "transcript JSONL output")->required();
  run_cmd->add_option("--path", opt.completions_path, "chat-completions route");
  run_cmd->add_option("--credential-env", opt.credential_env,
                      "environment variable holding the bearer token");
  run_cmd->add_option("--timeout", opt.timeout_seconds, "request timeout, seconds");
  run_cmd->add_option("--retries", opt.retries, "retry count");
  run_cmd->add_option("--delay", opt.delay_seconds, "minimum seconds between requests");
  run_cmd->add_option("--system", opt.system_prompt, "optional system-role message");

  auto add_score_options = [&](CLI::App* cmd, bool needs_out) {
    cmd->add_option("--experiment", opt.experiment, "composition|preferred|continuity")
        ->required();
    cmd->add_option("--transcript", opt.transcript_path, "transcript JSONL")->required();
    if (needs_out) cmd->add_option("--out", opt.out_dir, "output directory")->required();
    cmd->add_option("--human-prefs", opt.human_prefs_path, "human-preference JSON");
    cmd->add_option("--corrections", opt.corrections_path, "cell adjudication JSON");
    cmd->add_option("--table", opt.table_path,
                    "composition table JSON (overrides the shipped asset)");
    cmd->add_option("--graph", opt.graph_path,
                    "neighborhood graph JSON (overrides the shipped asset)");
  };
  auto* score_cmd = eval->add_subcommand("score", "score a transcript and write reports");
  add_score_options(score_cmd, true);
  auto* report_cmd =
      eval->add_subcommand("report", "score a transcript and print the markdown report");
  add_score_options(report_cmd, false);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return kOk;
    }
    err << "error: " << e.what() << "\n" << app.help();
    return kUsageError;
  }

  try {
    Lexicon lex = Lexicon::canonical();
    if (compose_cmd->parsed()) {
      CompositionTable table = load_table();
      out << compose(parse_relation(rel1, lex), parse_relation(rel2, lex), table).to_string()
          << "\n";
      return kOk;
    }
    if (converse_cmd->parsed()) {
      out << relation_name(converse(parse_relation(rel1, lex))) << "\n";
      return kOk;
    }
    if (neighbors_cmd->parsed()) {
      CnGraph graph = load_graph();
      out << graph.neighbors(parse_relation(rel1, lex)).to_string() << "\n";
      return kOk;
    }
    if (solve_cmd->parsed()) {
      CompositionTable table = load_table();
      ConstraintNetwork net;
      try {
        net = network_from_json(read_file(network_file));
      } catch (const EmptyConstraintError&) {
        out << "INCONSISTENT\n";
        return kVerificationFailure;
      }
      auto closed = algebraic_closure(net, table);
      if (!closed) {
        out << "INCONSISTENT\n";
        return kVerificationFailure;
      }
      out << render_network(*closed);
      if (want_scenario) {
        auto scenario = refine_to_scenario(*closed, table);
        if (!scenario) {
          out << "scenario: NONE\n";
          return kVerificationFailure;
        }
        out << "scenario:\n";
        for (std::size_t i = 0; i < scenario->variables.size(); ++i)
          for (std::size_t j = i + 1; j < scenario->variables.size(); ++j)
            out << scenario->variables[i] << " " << scenario->variables[j] << ": "
                << relation_name(scenario->relation(i, j)) << "\n";
      }
      return kOk;
    }
    if (soundness_cmd->parsed()) {
      if (ci_mode() && soundness_seed->count() == 0) {
        err << "error: RCC8_CI is set; --seed is required for randomized commands\n";
        return kUsageError;
      }
      CompositionTable table = load_table();
      auto violations = soundness_sample(table, samples, parse_grid(grid_text), seed);
      for (const Witness& w : violations) out << witness_to_json(w).dump() << "\n";
      err << violations.size() << " violations in " << samples << " samples\n";
      if (scan_rectangles) {
        auto exhaustive = catalog_soundness(table, parse_grid(grid_text));
        for (const Witness& w : exhaustive) out << witness_to_json(w).dump() << "\n";
        err << exhaustive.size() << " violations in the exhaustive rectangle scan\n";
        if (!exhaustive.empty()) return kVerificationFailure;
      }
      return violations.empty() ? kOk : kVerificationFailure;
    }
    if (witnesses_cmd->parsed()) {
      if (ci_mode() && witnesses_seed->count() == 0) {
        err << "error: RCC8_CI is set; --seed is required for randomized commands\n";
        return kUsageError;
      }
      CompositionTable table = load_table();
      CoverageReport report = witness_coverage(table, budget, parse_grid(grid_text), seed);
      for (const CoverageEntry& entry : report.entries) {
        out << relation_name(entry.r1) << "|" << relation_name(entry.r2) << " -> "
            << relation_name(entry.r3) << ": ";
        switch (entry.source) {
          case WitnessSource::Catalog:
            out << "found (construction catalog)";
            break;
          case WitnessSource::Sampled:
            out << "found (random sampling)";
            break;
          case WitnessSource::NotFound:
            out << "NOT FOUND within budget " << budget;
            break;
        }
        out << "\n";
      }
      out << "coverage: " << report.found << "/" << report.entries.size() << "\n";
      return report.complete() ? kOk : kVerificationFailure;
    }
    if (run_cmd->parsed()) return do_eval_run(opt, out, err);
    if (score_cmd->parsed()) return do_eval_score(opt, /*to_stdout=*/false, out);
    if (report_cmd->parsed()) return do_eval_score(opt, /*to_stdout=*/true, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  }
  err << "error: no subcommand given\n" << app.help();
  return kUsageError;
}

}  // namespace rcc8::cli
