#pragma once

#include <stdexcept>
#include <string>

namespace avdc {

// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed graph text (header, vertex range, duplicate edge, self-loop).
class ParseError : public Error {
 public:
  using Error::Error;
};

// An operation was called outside its precondition.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

class NotNormalError : public PreconditionError {
 public:
  using PreconditionError::PreconditionError;
};

// A move was applied to a selection that changed after the move was found.
class StaleMoveError : public Error {
 public:
  using Error::Error;
};

// Colour-class grouping for regular graphs produced a non-normal block.
class InvalidGroupingError : public Error {
 public:
  using Error::Error;
};

class IncompleteColoringError : public Error {
 public:
  using Error::Error;
};

class ImproperColoringError : public Error {
 public:
  using Error::Error;
};

// The exact search hit its node cap on every restart at a budget that is
// guaranteed to be satisfiable.
class SearchBudgetExhausted : public Error {
 public:
  using Error::Error;
};

// A guaranteed bound failed to hold. Carries a JSON state dump.
class CounterexampleFound : public Error {
 public:
  CounterexampleFound(const std::string& what, std::string dump)
      : Error(what), dump_(std::move(dump)) {}
  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

class InternalBoundViolation : public CounterexampleFound {
 public:
  using CounterexampleFound::CounterexampleFound;
};

// Internal invariant broken; always a bug.
class InternalError : public Error {
 public:
  using Error::Error;
};

}  // namespace avdc
