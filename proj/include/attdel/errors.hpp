#ifndef ATTDEL_ERRORS_HPP
#define ATTDEL_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace attdel {

// Base class for all toolkit errors.
struct Error : std::runtime_error {
  explicit Error(const std::string& msg) : std::runtime_error(msg) {}
};

struct ParseError : Error {
  ParseError(const std::string& msg, std::size_t position)
      : Error(msg + " (at position " + std::to_string(position) + ")"),
        pos(position) {}
  std::size_t pos;
};

struct UnknownNameError : ParseError {
  using ParseError::ParseError;
};

struct NotAConjunctionError : Error {
  using Error::Error;
};

struct ContradictoryError : Error {
  using Error::Error;
};

struct NotPropositionalError : Error {
  using Error::Error;
};

struct NotApplicableError : Error {
  using Error::Error;
};

struct EmptyAnnouncementError : Error {
  using Error::Error;
};

struct InconsistentDefaultsError : Error {
  using Error::Error;
};

struct MissingDefaultsError : Error {
  using Error::Error;
};

struct PreconditionsNotDistinctError : Error {
  using Error::Error;
};

struct UnsupportedEventTermError : Error {
  using Error::Error;
};

struct FragmentViolationError : Error {
  using Error::Error;
};

struct EnumerationCapExceededError : Error {
  using Error::Error;
};

struct TooLargeError : Error {
  using Error::Error;
};

struct NotSingleAgentError : Error {
  using Error::Error;
};

struct IoError : Error {
  using Error::Error;
};

}  // namespace attdel

#endif
