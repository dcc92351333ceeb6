#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>

namespace jel {

enum class ErrorCode {
  SyntaxError,
  ReservedIdentifier,
  InvalidName,
  TemplateNotClassifiable,
  UnclassifiedPattern,
  TooManyAtoms,
  UnrankedTerm,
  IncomparableStrength,
  IncomparableChain,
  NotARebuttal,
  InvalidProfile,
  NotSincere,
  NotDiffident,
  NotARequest,
  NotYourTurn,
  IllegalMove,
  ScenarioFormat,
};

std::string_view error_name(ErrorCode code);

// Base of every domain error raised by the library. The CLI maps these to
// exit status 1 and prints name() on stderr.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const { return code_; }
  std::string_view name() const { return error_name(code_); }

 private:
  ErrorCode code_;
};

class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::set<std::string> expected,
              const std::string& found);

  std::size_t offset() const { return offset_; }
  const std::set<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::set<std::string> expected_;
};

class IllegalMove : public Error {
 public:
  IllegalMove(std::string rule, std::size_t index, const std::string& detail)
      : Error(ErrorCode::IllegalMove,
              "illegal move #" + std::to_string(index) + " [" + rule +
                  "]: " + detail),
        rule_(std::move(rule)),
        index_(index) {}

  // Identifier of the violated protocol rule, e.g. "turn" or "A4e".
  const std::string& rule() const { return rule_; }
  // 1-based position of the offending act in the dialogue.
  std::size_t index() const { return index_; }

 private:
  std::string rule_;
  std::size_t index_;
};

}  // namespace jel
