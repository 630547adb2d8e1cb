#pragma once

// Error taxonomy. Every contract violation carries a stable name so the
// CLI can report "stage: name" and exit with a dedicated status code.

#include <stdexcept>
#include <string>
#include <utility>

namespace monoidrep {

// Base for all contract violations raised by the library.
class ContractError : public std::runtime_error {
public:
  ContractError(std::string name, const std::string& what)
      : std::runtime_error(what), name_(std::move(name)) {}

  const std::string& name() const noexcept { return name_; }

private:
  std::string name_;
};

#define MONOIDREP_ERROR_TYPE(NAME)                                  \
  class NAME : public ContractError {                               \
  public:                                                           \
    explicit NAME(const std::string& what)                          \
        : ContractError(#NAME, what) {}                             \
  }

MONOIDREP_ERROR_TYPE(DegreeMismatch);
MONOIDREP_ERROR_TYPE(EmptyGenerators);
MONOIDREP_ERROR_TYPE(NotAnElement);
MONOIDREP_ERROR_TYPE(RankMismatch);
MONOIDREP_ERROR_TYPE(IllDefined);
MONOIDREP_ERROR_TYPE(NotAStabilizer);
MONOIDREP_ERROR_TYPE(NotInGroup);
MONOIDREP_ERROR_TYPE(NotRegular);
MONOIDREP_ERROR_TYPE(TooLarge);
MONOIDREP_ERROR_TYPE(NonIntegralResult);
MONOIDREP_ERROR_TYPE(NegativeEntry);
MONOIDREP_ERROR_TYPE(NonIntegralDimension);
MONOIDREP_ERROR_TYPE(NotRegularJClassData);

#undef MONOIDREP_ERROR_TYPE

// Malformed input text (generator files, element arguments). Kept apart
// from ContractError: the CLI maps it to its own exit status.
class ParseError : public std::runtime_error {
public:
  explicit ParseError(const std::string& what, int line = 0)
      : std::runtime_error(line > 0
                               ? "line " + std::to_string(line) + ": " + what
                               : what),
        line_(line) {}

  int line() const noexcept { return line_; }

private:
  int line_ = 0;
};

// Internal sanity check that stays on in release builds: these guard
// mathematical invariants whose violation means a bug, not bad input.
inline void internal_check(bool condition, const char* message) {
  if (!condition)
    throw std::logic_error(std::string("internal invariant violated: ") +
                           message);
}

}  // namespace monoidrep
