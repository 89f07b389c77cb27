#pragma once

#include <stdexcept>
#include <string>

namespace chernoff {

// Base for all domain errors. `code()` is the stable machine-readable name
// used by the CLI when mapping errors to exit status 1.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}
  const std::string& code() const { return code_; }

 private:
  std::string code_;
};

#define CHERNOFF_DEFINE_ERROR(Name)                          \
  class Name : public Error {                                \
   public:                                                   \
    explicit Name(const std::string& what) : Error(#Name, what) {} \
  }

CHERNOFF_DEFINE_ERROR(ParseError);
CHERNOFF_DEFINE_ERROR(InvalidModel);
CHERNOFF_DEFINE_ERROR(InconsistentCounts);
CHERNOFF_DEFINE_ERROR(MissingCounts);
CHERNOFF_DEFINE_ERROR(OutOfRange);
CHERNOFF_DEFINE_ERROR(NonConvergence);
CHERNOFF_DEFINE_ERROR(SearchBudgetExceeded);
CHERNOFF_DEFINE_ERROR(RoundingError);
CHERNOFF_DEFINE_ERROR(BinBudgetExceeded);
CHERNOFF_DEFINE_ERROR(QuadratureFailure);
CHERNOFF_DEFINE_ERROR(InfeasibleBudget);

#undef CHERNOFF_DEFINE_ERROR

}  // namespace chernoff
