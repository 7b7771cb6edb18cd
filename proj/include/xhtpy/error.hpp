#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace xhtpy {

enum class Errc {
  UnknownVertex,
  DuplicateVertex,
  InvalidLabel,
  NotAGraphMap,
  DomainMismatch,
  SignatureMismatch,
  BudgetExceeded,
  NotAFold,
  InvalidSequence,
  ConfluenceViolation,
  NotInducedInclusion,
  NotAPartition,
  NotNonInjective,
  NotAnEquivalence,
  BadParameter,
  ParseError,
};

std::string_view to_string(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  Errc code() const noexcept { return code_; }

 private:
  Errc code_;
};

// Thrown when a search exceeds its configured limit. The limit is echoed so
// callers can report what to raise.
class BudgetExceeded : public Error {
 public:
  BudgetExceeded(std::string_view what, std::uint64_t limit)
      : Error(Errc::BudgetExceeded,
              std::string(what) + " exceeded limit " + std::to_string(limit)),
        limit_(limit) {}

  std::uint64_t limit() const noexcept { return limit_; }

 private:
  std::uint64_t limit_;
};

/// Search limits shared by every enumeration.
///
/// `search_nodes` caps the number of partial assignments a backtracking search
/// may extend; `hom_maps` caps how many maps a homotopy search may hold.
struct Budget {
  std::uint64_t search_nodes = 10'000'000;
  std::uint64_t hom_maps = 1'000'000;
};

}  // namespace xhtpy
