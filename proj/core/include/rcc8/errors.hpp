#pragma once

#include <stdexcept>
#include <string>

namespace rcc8 {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class UnknownRelationError : public Error {
 public:
  explicit UnknownRelationError(const std::string& token)
      : Error("unknown relation token: '" + token + "'"), token_(token) {}
  const std::string& token() const { return token_; }

 private:
  std::string token_;
};

class MalformedTableError : public Error {
 public:
  using Error::Error;
};

/// Raised when a composition table parses but breaks the identity or
/// converse law; carries the offending cell.
class LawViolationError : public Error {
 public:
  enum class Law { Identity, Converse };

  LawViolationError(Law law, std::string cell, const std::string& detail)
      : Error("law violation (" + name(law) + ") at cell " + cell + ": " + detail),
        law_(law),
        cell_(std::move(cell)) {}

  Law law() const { return law_; }
  const std::string& cell() const { return cell_; }

 private:
  static std::string name(Law law) {
    return law == Law::Identity ? "identity" : "converse";
  }
  Law law_;
  std::string cell_;
};

class MalformedGraphError : public Error {
 public:
  using Error::Error;
};

class DisconnectedGraphError : public Error {
 public:
  using Error::Error;
};

class EmptyConstraintError : public Error {
 public:
  using Error::Error;
};

class SelfConstraintError : public Error {
 public:
  using Error::Error;
};

class MissingCellError : public Error {
 public:
  using Error::Error;
};

class NoPreferenceFoundError : public Error {
 public:
  using Error::Error;
};

class TranscriptMismatchError : public Error {
 public:
  using Error::Error;
};

class EmptyScoreError : public Error {
 public:
  using Error::Error;
};

}  // namespace rcc8
