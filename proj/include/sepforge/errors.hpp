#pragma once

#include <stdexcept>
#include <string>

namespace sepforge {

// Error taxonomy. Everything is exact; an error is always a contract
// violation, never a numerical condition.

struct SpecMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DivisionByZero : std::domain_error {
  DivisionByZero() : std::domain_error("division by zero") {}
  explicit DivisionByZero(const std::string& what) : std::domain_error(what) {}
};

struct NotPolynomialAfterClearing : std::domain_error {
  using std::domain_error::domain_error;
};

struct AlgebraMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct CharacteristicUnsupported : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct AmbientMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct DegreeBoundExceeded : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct EmptySubspace : std::invalid_argument {
  EmptySubspace() : std::invalid_argument("subspace is zero") {}
  explicit EmptySubspace(const std::string& what) : std::invalid_argument(what) {}
};

struct VNotInSubspace : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

// The budgeted x-scan ran dry. Deliberately ambiguous between "raise the
// budget" and "the primitivity hypotheses fail"; the existence argument
// behind the scan gives no bound.
struct SearchBudgetExhausted : std::runtime_error {
  SearchBudgetExhausted(int scanned_count, const std::string& subspace_desc)
      : std::runtime_error("no splitting element among the first " +
                           std::to_string(scanned_count) +
                           " basis words for V = " + subspace_desc),
        scanned(scanned_count),
        subspace(subspace_desc) {}
  int scanned;
  std::string subspace;
};

// The finite (derivation, basis-vector) scan found no splitting: V carries
// two independent elements with proportional images under every derivation,
// so the trivial-differential-center hypothesis fails on V.
struct NoSplittingFound : std::runtime_error {
  explicit NoSplittingFound(const std::string& subspace_desc)
      : std::runtime_error("no derivation splits V = " + subspace_desc),
        subspace(subspace_desc) {}
  std::string subspace;
};

struct ZeroElement : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct NonCommutativeAlgebra : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct ParseError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

}  // namespace sepforge
