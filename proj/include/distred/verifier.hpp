#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distred/lcand.hpp"
#include "distred/substitution.hpp"

namespace distred {

enum class Outcome { ValidReduction, NotReduction, Unknown };

const char* outcome_name(Outcome o);

/// Three-valued result with evidence. `mechanism` names what settled it:
/// "meet" (members' meet differs from the source), "lcand" / "lcand_app"
/// (counterexample refutation, the latter when a member needed more than the
/// path rule), "sub" / "ssub" (derivation from the members / their upward
/// set), "bottom" (no two-part merges exist), "structural" (the pairwise
/// no-reduction condition); empty for Unknown.
struct Verdict {
  Outcome outcome = Outcome::Unknown;
  std::string mechanism;
  std::optional<ProofTrace> trace;                 // ValidReduction
  std::optional<RefutationEvidence> refutation;    // NotReduction, lcand
  std::optional<Distribution> meet_result;         // NotReduction, meet
  std::vector<std::string> diagnostics;            // Unknown
};

struct VerifyOptions {
  std::size_t budget = kDefaultSaturationBudget;
  std::size_t size_cap = 9;
  std::size_t time_cap_ms = 0;
  bool parallel = false;
};

/// Five stages in order: meet check, counterexample refutation, derivation
/// from the members, derivation from the upward set, Unknown. The parallel
/// option runs the stages concurrently but assembles the verdict in stage
/// order, so results never depend on scheduling. Throws MalformedCandidate
/// when p has fewer than two members or a member at least as large as d.
Verdict verify_reduction(const Distribution& d, const CandidateReduction& p,
                         const VerifyOptions& opts = {});

/// A reduction exists iff the set of two-part merges is one; verifies that
/// candidate, falling back to the pairwise structural refuter on Unknown.
Verdict exists_reduction(const Distribution& d,
                         const VerifyOptions& opts = {});

/// Whether the given distributions form a reduction of their own meet.
Verdict is_reduction_of_some(const std::vector<Distribution>& ds,
                             const VerifyOptions& opts = {});

/// Exhaustive compactness helper, meant for tests with few members: no
/// proper subset of two or more members may itself be a reduction. nullopt
/// when some subset came back Unknown.
std::optional<bool> is_compact(const Distribution& d,
                               const CandidateReduction& p,
                               const VerifyOptions& opts = {});

}  // namespace distred
