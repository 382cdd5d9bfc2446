#pragma once

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace lconvex {

enum class ErrorKind {
  // quantale table validation
  NotALattice,
  NotCommutative,
  NotAssociative,
  UnitNotTop,
  NotJoinDistributive,
  // L-order axioms
  E1Violation,
  E2Violation,
  E3Violation,
  // convex structure validation
  MissingBottomTop,
  NotMeetClosed,
  NotStratified,
  NotDirectedJoinClosed,
  // argument checks
  CarrierMismatch,
  IndexOutOfRange,
  EmptySubcarrier,
  // resource caps
  SizeLimitExceeded,
  BudgetExceeded,
  // morphism-level preconditions
  NotCP,
  NotSober,
  NotS0,
  NotStrictEmbedding,
  NotARetraction,
  EmptyEqualizer,
  // i/o
  ParseError,
  // violated internal consistency (a theorem the library relies on failed)
  Internal,
};

const char* kind_name(ErrorKind kind);

/// Every failure carries a kind plus the witnessing indices (pair/triple/...)
/// where one exists, so callers and reports can name the counterexample.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message, std::vector<int> witness = {})
      : std::runtime_error(std::string(kind_name(kind)) + ": " + message),
        kind_(kind),
        witness_(std::move(witness)) {}

  ErrorKind kind() const { return kind_; }
  const std::vector<int>& witness() const { return witness_; }

 private:
  ErrorKind kind_;
  std::vector<int> witness_;
};

/// Enumeration caps. All exhaustive searches are bounded; exceeding a bound
/// raises SizeLimitExceeded (or BudgetExceeded for closure generation)
/// instead of silently truncating.
struct Limits {
  std::size_t max_family = 4096;                 // closure generation budget
  std::size_t max_enumeration = 1u << 20;        // point-map enumerations
  std::size_t max_complete_candidates = 1u << 20;  // L-subsets tried by is_complete
  std::size_t max_iso_nodes = 1u << 22;          // backtracking nodes in iso search
};

/// Default limits, honoring the LCONVEX_MAX_FAMILY environment override.
Limits default_limits();

/// base^exp when it stays within cap, nullopt otherwise.
inline std::optional<std::size_t> checked_pow(std::size_t base, int exp, std::size_t cap) {
  std::size_t value = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && value > cap / base) return std::nullopt;
    value *= base;
    if (value > cap) return std::nullopt;
  }
  return value;
}

}  // namespace lconvex
