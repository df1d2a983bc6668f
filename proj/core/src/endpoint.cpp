#include "rcc8/endpoint.hpp"

#include <chrono>
#include <cstdlib>
#include <thread>

#include <httplib.h>
#include <json.hpp>

namespace rcc8 {

namespace {

std::string utc_timestamp() {
  auto now = std::chrono::system_clock::now();
  std::time_t t = std::chrono::system_clock::to_time_t(now);
  std::tm tm{};
  gmtime_r(&t, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

void sleep_seconds(double seconds) {
  if (seconds > 0) std::this_thread::sleep_for(std::chrono::duration<double>(seconds));
}

}  // namespace

struct HttpChatEndpoint::Impl {
  EndpointConfig config;
  httplib::Client client;
  std::uint64_t failures = 0;

  explicit Impl(EndpointConfig cfg)
      : config(std::move(cfg)), client(config.base_url) {
    client.set_connection_timeout(config.timeout_seconds, 0);
    client.set_read_timeout(config.timeout_seconds, 0);
    if (!config.credential_env.empty()) {
      if (const char* token = std::getenv(config.credential_env.c_str()))
        client.set_bearer_token_auth(token);
    }
  }
};

HttpChatEndpoint::HttpChatEndpoint(EndpointConfig config)
    : impl_(std::make_unique<Impl>(std::move(config))) {}

HttpChatEndpoint::~HttpChatEndpoint() = default;

std::string HttpChatEndpoint::request_body(const std::vector<ChatMessage>& history) const {
  nlohmann::json messages = nlohmann::json::array();
  for (const ChatMessage& m : history)
    messages.push_back({{"role", m.role}, {"content", m.content}});
  nlohmann::json body{{"model", impl_->config.model},
                      {"temperature", impl_->config.temperature},
                      {"messages", std::move(messages)}};
  return body.dump();
}

std::string HttpChatEndpoint::complete(const std::vector<ChatMessage>& history) {
  const std::string body = request_body(history);
  std::string last_error = "no attempt made";
  for (int attempt = 0; attempt <= impl_->config.retries; ++attempt) {
    if (attempt > 0) {
      sleep_seconds(impl_->config.backoff_seconds * static_cast<double>(1 << (attempt - 1)));
    }
    auto res = impl_->client.Post(impl_->config.path, body, "application/json");
    if (!res) {
      ++impl_->failures;
      last_error = "transport error: " + httplib::to_string(res.error());
      continue;
    }
    if (res->status < 200 || res->status >= 300) {
      ++impl_->failures;
      last_error = "HTTP status " + std::to_string(res->status);
      continue;
    }
    nlohmann::json doc = nlohmann::json::parse(res->body, nullptr, false);
    if (doc.is_discarded() || !doc.contains("choices") || doc["choices"].empty() ||
        !doc["choices"][0].contains("message")) {
      ++impl_->failures;
      last_error = "malformed completion response";
      continue;
    }
    return doc["choices"][0]["message"].value("content", std::string());
  }
  throw EndpointError("endpoint failed after " + std::to_string(impl_->config.retries + 1) +
                      " attempts: " + last_error);
}

std::string ReplayEndpoint::complete(const std::vector<ChatMessage>& history) {
  if (next_ >= records_.size())
    throw EndpointError("end of transcript: no response recorded for this prompt");
  const TranscriptRecord& record = records_[next_];
  if (history.empty() || history.back().content != record.prompt)
    throw TranscriptMismatchError("prompt at sequence " + std::to_string(record.seq) +
                                  " does not match the stored transcript");
  ++next_;
  return record.response;
}

RunSummary run_experiment(const ExperimentSpec& spec, const EndpointConfig& config,
                          ChatEndpoint& endpoint, TranscriptWriter& sink) {
  RunSummary summary;
  std::vector<ChatMessage> history;
  if (config.system_prompt) history.push_back({"system", *config.system_prompt});

  auto exchange = [&](const std::string& label, const std::string& prompt) {
    history.push_back({"user", prompt});
    std::string response;
    try {
      response = endpoint.complete(history);
    } catch (const EndpointError& e) {
      summary.aborted_at = label;
      ++summary.failures;
      throw EndpointError(e.what(), summary);
    }
    history.push_back({"assistant", response});
    TranscriptRecord record{std::string(experiment_kind_name(spec.kind)),
                            spec.anonymize,
                            label,
                            prompt,
                            response,
                            config.model,
                            config.temperature,
                            utc_timestamp(),
                            summary.exchanges};
    sink.append(record);
    ++summary.exchanges;
  };

  exchange(std::string(kInitialCellLabel), build_initial_prompt(spec));
  for (const ExperimentCell& cell : spec.cells) {
    sleep_seconds(config.request_delay_seconds);
    exchange(cell_label(cell, spec.lexicon), build_cell_prompt(spec, cell));
  }
  summary.completed = true;
  return summary;
}

}  // namespace rcc8
