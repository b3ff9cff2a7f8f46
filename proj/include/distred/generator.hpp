#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "distred/structural.hpp"
#include "distred/substitution.hpp"
#include "distred/verifier.hpp"

namespace distred {

/// A sub-alphabet to break plus the minimal part-index sets of the source
/// whose union covers it. A merge breaks the target when none of its parts
/// contains the target, equivalently when no block of its partition includes
/// one of the covers.
struct CoverConstraint {
  Mask target;
  std::vector<IndexSet> covers;
};

CoverConstraint cover_constraint(const Distribution& d, Mask target);

/// Merges of d in which the two symbols never share a part, so the pair is
/// independent in every result. Ascending size, then canonical order; only
/// sizes <= max_size.
std::vector<Distribution> separating_merges(const Distribution& d,
                                            Symbol s1, Symbol s2,
                                            std::size_t max_size,
                                            std::size_t size_cap = 9);

/// Merges of d in which no part contains the constraint target. Ascending
/// size, then canonical order; only sizes <= max_size.
std::vector<Distribution> breaking_merges(const Distribution& d,
                                          const CoverConstraint& c,
                                          std::size_t max_size,
                                          std::size_t size_cap = 9);

struct GenerateOptions {
  std::size_t budget = kDefaultSaturationBudget;
  std::size_t size_cap = 9;
  std::size_t time_cap_ms = 0;
  std::size_t max_width = 0;        // 0 = up to |d| - 1
  std::size_t max_validations = 2000;
  /// Called with one JSON object per line-delimited progress event.
  std::function<void(const std::string&)> progress;
};

enum class GenerateStatus {
  Found,         // validated reduction returned
  NoReduction,   // existence refuted
  Exhausted      // search space done (or budget out) without a validation
};

struct GenerateResult {
  GenerateStatus status;
  std::optional<CandidateReduction> reduction;
  std::optional<ProofTrace> trace;
  std::string mechanism;  // refutation or validation mechanism
  std::size_t candidates_tested = 0;
};

/// Incremental production: refute via the minimal-merge set first, then
/// enumerate unseen minimal meet-consistent candidates by collecting
/// independence edges and breaking uncovered sub-alphabets, in nondecreasing
/// width, validating each by (strengthened) substitution. Falls back to
/// validating the minimal-merge set itself before giving up.
GenerateResult incremental_generate(const Distribution& d,
                                    const GenerateOptions& opts = {});

/// Recursive production: find a validated reduction inside the minimal-merge
/// set, then repeatedly replace any member by one of its own minimal-merge
/// reductions, keeping minimal elements, until no member is reducible.
GenerateResult recursive_generate(const Distribution& d,
                                  const GenerateOptions& opts = {});

/// Exhaustive variant of incremental_generate: collects every candidate that
/// validates within the budgets, sorted best-first by (width, height).
std::vector<std::pair<CandidateReduction, Dimension>> collect_all_validated(
    const Distribution& d, const GenerateOptions& opts = {});

}  // namespace distred
