#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lmsym {

enum class ErrorKind {
  kMalformedTable,
  kNotLatinSquare,
  kNoIdentity,
  kNotAssociative,
  kNotAPermutation,
  kOrderLimitExceeded,
  kMixedGroups,
  kBudgetExceeded,
  kHypothesisViolated,
  kParseError,
  kUnknownGroup,
};

constexpr std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kMalformedTable: return "MalformedTable";
    case ErrorKind::kNotLatinSquare: return "NotLatinSquare";
    case ErrorKind::kNoIdentity: return "NoIdentity";
    case ErrorKind::kNotAssociative: return "NotAssociative";
    case ErrorKind::kNotAPermutation: return "NotAPermutation";
    case ErrorKind::kOrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorKind::kMixedGroups: return "MixedGroups";
    case ErrorKind::kBudgetExceeded: return "BudgetExceeded";
    case ErrorKind::kHypothesisViolated: return "HypothesisViolated";
    case ErrorKind::kParseError: return "ParseError";
    case ErrorKind::kUnknownGroup: return "UnknownGroup";
  }
  return "Unknown";
}

/// Group-axiom failures found while ingesting a table. Loading a file
/// reports these as validation errors, as opposed to parse errors.
constexpr bool is_validation_error(ErrorKind kind) {
  return kind == ErrorKind::kMalformedTable || kind == ErrorKind::kNotLatinSquare ||
         kind == ErrorKind::kNoIdentity || kind == ErrorKind::kNotAssociative ||
         kind == ErrorKind::kNotAPermutation || kind == ErrorKind::kOrderLimitExceeded;
}

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace lmsym
