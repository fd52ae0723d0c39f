#pragma once

#include <stdexcept>
#include <string>

namespace polycox {

// Exit codes of the command-line tool map onto these categories.
enum class ErrorKind { Input = 2, Precondition = 3, Budget = 4 };

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}
  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

// Malformed words, unparsable documents, unknown identifiers.
struct InputError : Error {
  explicit InputError(const std::string& w) : Error(ErrorKind::Input, w) {}
};

// A step or composition that does not match its boundary.
struct StepError : Error {
  explicit StepError(const std::string& w) : Error(ErrorKind::Precondition, w) {}
};

// Violated preconditions: non-terminating orientation, incoherent input, etc.
struct PreconditionError : Error {
  explicit PreconditionError(const std::string& w)
      : Error(ErrorKind::Precondition, w) {}
};

// Step, rule, branching or coset budget exhausted.
struct BudgetError : Error {
  explicit BudgetError(const std::string& w) : Error(ErrorKind::Budget, w) {}
};

}  // namespace polycox
