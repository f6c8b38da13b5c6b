#pragma once

#include <stdexcept>
#include <string>

namespace locuskit {

// Every error carries a stable machine-readable code; the CLI maps the
// class to its exit status (1 input, 2 budget, 3 invariant).
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class InputError : public Error {
 public:
  explicit InputError(const std::string& what, std::string code = "E_INPUT")
      : Error(std::move(code), what) {}
};

class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(const std::string& what)
      : Error("E_BUDGET", what) {}
};

class InvariantViolation : public Error {
 public:
  explicit InvariantViolation(const std::string& what)
      : Error("E_INVARIANT", what) {}
};

}  // namespace locuskit
