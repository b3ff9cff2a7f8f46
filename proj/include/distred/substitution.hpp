#pragma once

#include <optional>
#include <vector>

#include "distred/candidate.hpp"

namespace distred {

/// Symbols occurring in at least two parts; may be empty.
Mask shared_symbols(const Distribution& d);

/// `left` may replace part `i` of `right` when every shared symbol of `left`
/// lies inside that part.
bool substitutable(const Distribution& left, const Distribution& right,
                   std::size_t i);

/// Replace part `i` of `right` by its non-empty intersections with the parts
/// of `left`, keeping maximal parts. The result refines `right`. Throws
/// NotSubstitutable.
Distribution substitute(const Distribution& left, const Distribution& right,
                        std::size_t i);

struct SubstitutionStep {
  Distribution left;
  Distribution right;
  std::size_t position;
  Distribution result;
};

/// A replayable derivation: each step's operands are premises or earlier
/// results, and the conclusion is the final result (or a premise for the
/// empty derivation).
struct ProofTrace {
  std::vector<Distribution> premises;
  std::vector<SubstitutionStep> steps;
  Distribution conclusion;
};

/// Re-executes the trace from its premises; false on any mismatch.
bool replay(const ProofTrace& t);

enum class SaturationStatus { Derived, Fixpoint, Budget };

struct SaturationResult {
  SaturationStatus status;
  std::optional<ProofTrace> trace;  // set iff status == Derived
  std::size_t derived_count = 0;
};

inline constexpr std::size_t kDefaultSaturationBudget = 50'000;

/// Close the premises under substitution, breadth-first in a canonical
/// order, until the goal appears, the closure is exhausted (Fixpoint), or
/// more than `budget` distinct non-premise distributions have been derived
/// or `time_cap_ms` elapsed (Budget). Neither failure refutes anything.
SaturationResult saturate(const std::vector<Distribution>& premises,
                          const Distribution& goal,
                          std::size_t budget = kDefaultSaturationBudget,
                          std::size_t time_cap_ms = 0);

struct ValidationResult {
  std::optional<ProofTrace> trace;
  bool strengthened = false;  // trace required the upward set
  bool budget_hit = false;    // some saturation stopped on budget
};

/// Try to derive the source from the members, then from the members' full
/// upward set. A trace certifies that p is a reduction.
ValidationResult strengthened_validate(
    const CandidateReduction& p, std::size_t budget = kDefaultSaturationBudget,
    std::size_t size_cap = 9, std::size_t time_cap_ms = 0);

}  // namespace distred
