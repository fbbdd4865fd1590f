#pragma once

#include <stdexcept>
#include <string>

namespace leafine {

// Base of all library errors. `name()` yields the stable machine-readable
// identifier used in CLI diagnostics (`error:<name>: <message>`).
class Error : public std::runtime_error {
 public:
  Error(std::string name, const std::string& message)
      : std::runtime_error(message), name_(std::move(name)) {}
  const std::string& name() const noexcept { return name_; }

 private:
  std::string name_;
};

#define LEAFINE_DEFINE_ERROR(Type)                       \
  class Type : public Error {                            \
   public:                                               \
    explicit Type(const std::string& message)            \
        : Error(#Type, message) {}                       \
  }

LEAFINE_DEFINE_ERROR(SyntaxError);
LEAFINE_DEFINE_ERROR(UnaryVertexError);
LEAFINE_DEFINE_ERROR(EmptySelection);
LEAFINE_DEFINE_ERROR(IndexOutOfRange);
LEAFINE_DEFINE_ERROR(BudgetExceeded);
LEAFINE_DEFINE_ERROR(DistinctSetOverflow);
LEAFINE_DEFINE_ERROR(SingleLeafTree);
LEAFINE_DEFINE_ERROR(InsufficientSequence);
LEAFINE_DEFINE_ERROR(NonPositiveLogArgument);
LEAFINE_DEFINE_ERROR(PrecisionInsufficient);
LEAFINE_DEFINE_ERROR(DigitsCapExceeded);

#undef LEAFINE_DEFINE_ERROR

// True for error classes that signal a configurable resource cap rather
// than a malformed request; the CLI maps these to a distinct exit code.
inline bool is_resource_cap_error(const Error& e) {
  const std::string& n = e.name();
  return n == "BudgetExceeded" || n == "DistinctSetOverflow" ||
         n == "DigitsCapExceeded";
}

}  // namespace leafine
