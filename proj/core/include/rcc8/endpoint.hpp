#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "rcc8/errors.hpp"
#include "rcc8/experiment.hpp"
#include "rcc8/transcript.hpp"

namespace rcc8 {

struct ChatMessage {
  std::string role;  // "system", "user" or "assistant"
  std::string content;
};

struct EndpointConfig {
  std::string base_url;                       // e.g. http://localhost:8080
  std::string path = "/v1/chat/completions";  // chat-completions route
  std::string model;
  double temperature = 0.0;
  int timeout_seconds = 60;
  int retries = 3;
  /// Name of the environment variable holding the bearer token; empty or
  /// unset means no Authorization header.
  std::string credential_env = "OPENAI_API_KEY";
  /// Optional system-role message prepended to every conversation.
  std::optional<std::string> system_prompt;
  /// Minimum pause between consecutive requests.
  double request_delay_seconds = 1.0;
  /// First retry backoff; doubles per attempt.
  double backoff_seconds = 0.5;
};

struct RunSummary {
  std::uint64_t exchanges = 0;  // records persisted, including the initial one
  std::uint64_t failures = 0;   // failed attempts, including retried ones
  bool completed = false;
  std::string aborted_at;       // cell label of the first unanswered prompt
};

/// Raised once retries are exhausted; the transcript written so far stays on
/// disk and the carried summary marks the abort point.
class EndpointError : public Error {
 public:
  explicit EndpointError(const std::string& what, RunSummary partial = {})
      : Error(what), partial_(std::move(partial)) {}
  const RunSummary& partial_summary() const { return partial_; }

 private:
  RunSummary partial_;
};

/// A conversational completion source: given the full history, produce the
/// next assistant message.
class ChatEndpoint {
 public:
  virtual ~ChatEndpoint() = default;
  virtual std::string complete(const std::vector<ChatMessage>& history) = 0;
};

/// Live HTTP endpoint speaking the chat-completions wire format: POST
/// {model, temperature, messages} and read choices[0].message.content.
/// Retries with exponential backoff before giving up.
class HttpChatEndpoint : public ChatEndpoint {
 public:
  explicit HttpChatEndpoint(EndpointConfig config);
  ~HttpChatEndpoint() override;

  std::string complete(const std::vector<ChatMessage>& history) override;

  /// Request body for a given history; exposed for tests.
  std::string request_body(const std::vector<ChatMessage>& history) const;

 private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// Replays a stored run: each complete() call must present the recorded
/// prompt for its position and receives the recorded response, byte for
/// byte. Throws TranscriptMismatchError on prompt drift and EndpointError
/// once the transcript is exhausted.
class ReplayEndpoint : public ChatEndpoint {
 public:
  explicit ReplayEndpoint(std::vector<TranscriptRecord> records)
      : records_(std::move(records)) {}

  std::string complete(const std::vector<ChatMessage>& history) override;

 private:
  std::vector<TranscriptRecord> records_;
  std::size_t next_ = 0;
};

/// Runs one experiment as a single conversation: the initial prompt, then
/// every cell prompt in spec order, resending the full history each turn.
/// Each exchange is persisted before the next request; no correctness
/// feedback is ever sent to the model.
RunSummary run_experiment(const ExperimentSpec& spec, const EndpointConfig& config,
                          ChatEndpoint& endpoint, TranscriptWriter& sink);

}  // namespace rcc8
