#include "distred/verifier.hpp"

#include <bit>
#include <future>
#include <sstream>

#include "distred/errors.hpp"
#include "distred/structural.hpp"

namespace distred {

const char* outcome_name(Outcome o) {
  switch (o) {
    case Outcome::ValidReduction: return "valid_reduction";
    case Outcome::NotReduction: return "not_reduction";
    case Outcome::Unknown: return "unknown";
  }
  return "unknown";
}

namespace {

std::string refutation_mechanism(const RefutationEvidence& ev) {
  for (const auto& c : ev.certificates)
    if (c.method != "thm7") return "lcand_app";
  return "lcand";
}

Verdict assemble(const Distribution& d, const Distribution& meet_result,
                 const std::optional<RefutationEvidence>& refutation,
                 ValidationResult&& validation) {
  Verdict v;
  if (meet_result != d) {
    v.outcome = Outcome::NotReduction;
    v.mechanism = "meet";
    v.meet_result = meet_result;
    return v;
  }
  if (refutation) {
    v.outcome = Outcome::NotReduction;
    v.mechanism = refutation_mechanism(*refutation);
    v.refutation = refutation;
    return v;
  }
  if (validation.trace) {
    v.outcome = Outcome::ValidReduction;
    v.mechanism = validation.strengthened ? "ssub" : "sub";
    v.trace = std::move(validation.trace);
    return v;
  }
  v.outcome = Outcome::Unknown;
  v.diagnostics.push_back("meet equals the source");
  v.diagnostics.push_back(
      "counterexample language not decomposable for some member");
  v.diagnostics.push_back(validation.budget_hit
                              ? "derivation search stopped on budget"
                              : "derivation search reached a fixpoint");
  return v;
}

}  // namespace

Verdict verify_reduction(const Distribution& d, const CandidateReduction& p,
                         const VerifyOptions& opts) {
  if (p.source() != d)
    throw Error(ErrorCode::SourceMismatch,
                "candidate was built over a different source");
  if (p.size() < 2)
    throw Error(ErrorCode::MalformedCandidate,
                "a reduction needs at least two members");
  for (const auto& m : p.members())
    if (m.size() >= d.size())
      throw Error(ErrorCode::MalformedCandidate,
                  "member " + m.to_string() + " is not smaller than the source");

  Distribution meet_result = p.members().front();
  for (std::size_t i = 1; i < p.size(); ++i)
    meet_result = meet(meet_result, p.members()[i]);

  if (opts.parallel) {
    auto refute_f = std::async(std::launch::async,
                               [&] { return refute_candidate(p); });
    auto validate_f = std::async(std::launch::async, [&] {
      return strengthened_validate(p, opts.budget, opts.size_cap,
                                   opts.time_cap_ms);
    });
    auto refutation = refute_f.get();
    auto validation = validate_f.get();
    return assemble(d, meet_result, refutation, std::move(validation));
  }
  if (meet_result != d)
    return assemble(d, meet_result, std::nullopt, {});
  auto refutation = refute_candidate(p);
  if (refutation)
    return assemble(d, meet_result, refutation, {});
  auto validation =
      strengthened_validate(p, opts.budget, opts.size_cap, opts.time_cap_ms);
  return assemble(d, meet_result, std::nullopt, std::move(validation));
}

Verdict exists_reduction(const Distribution& d, const VerifyOptions& opts) {
  auto bottom = minimal_merges(d);
  CandidateReduction p(CandidateReduction::Unchecked{}, d, std::move(bottom));
  if (p.size() < 2) {
    Verdict v;
    v.outcome = Outcome::NotReduction;
    v.mechanism = "bottom";
    v.diagnostics.push_back("fewer than two incomparable two-part merges");
    return v;
  }
  Verdict v = verify_reduction(d, p, opts);
  if (v.outcome == Outcome::Unknown && no_reduction_check(d)) {
    Verdict nv;
    nv.outcome = Outcome::NotReduction;
    nv.mechanism = "structural";
    return nv;
  }
  return v;
}

Verdict is_reduction_of_some(const std::vector<Distribution>& ds,
                             const VerifyOptions& opts) {
  if (ds.size() < 2)
    throw Error(ErrorCode::MalformedCandidate,
                "need at least two distributions");
  Distribution source = ds.front();
  for (std::size_t i = 1; i < ds.size(); ++i) source = meet(source, ds[i]);
  std::optional<CandidateReduction> pp;
  try {
    pp.emplace(source, ds);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::NotMerged) throw;
    // A member that is no merge of the common meet cannot belong to a
    // reduction of it.
    Verdict v;
    v.outcome = Outcome::NotReduction;
    v.mechanism = "not_merged";
    v.diagnostics.push_back(e.what());
    return v;
  }
  const CandidateReduction& p = *pp;
  if (p.size() < 2)
    throw Error(ErrorCode::MalformedCandidate,
                "fewer than two incomparable members after normalization");
  return verify_reduction(source, p, opts);
}

std::optional<bool> is_compact(const Distribution& d,
                               const CandidateReduction& p,
                               const VerifyOptions& opts) {
  std::size_t n = p.size();
  bool saw_unknown = false;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
    int k = std::popcount(bits);
    if (k < 2 || static_cast<std::size_t>(k) == n) continue;
    std::vector<Distribution> sub;
    for (std::size_t i = 0; i < n; ++i)
      if ((bits >> i) & 1) sub.push_back(p.members()[i]);
    CandidateReduction q(CandidateReduction::Unchecked{}, d, std::move(sub));
    if (q.size() < 2) continue;
    Verdict v = verify_reduction(d, q, opts);
    if (v.outcome == Outcome::ValidReduction) return false;
    if (v.outcome == Outcome::Unknown) saw_unknown = true;
  }
  if (saw_unknown) return std::nullopt;
  return true;
}

}  // namespace distred
