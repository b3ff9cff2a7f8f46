#include "distred/candidate.hpp"

#include <algorithm>
#include <sstream>

namespace distred {

int compare_optimality(const Dimension& a, const Dimension& b) {
  if (a.width != b.width) return a.width < b.width ? -1 : 1;
  if (a.height != b.height) return a.height < b.height ? -1 : 1;
  return 0;
}

CandidateReduction::CandidateReduction(Distribution source,
                                       std::vector<Distribution> members)
    : CandidateReduction(Unchecked{}, std::move(source), std::move(members)) {
  for (const auto& m : members_)
    if (!is_merged_from(m, source_))
      throw Error(ErrorCode::NotMerged,
                  m.to_string() + " is not merged from " + source_.to_string());
}

CandidateReduction::CandidateReduction(Unchecked, Distribution source,
                                       std::vector<Distribution> members)
    : source_(std::move(source)) {
  for (const auto& m : members)
    if (m.alphabet() != source_.alphabet())
      throw Error(ErrorCode::AlphabetMismatch,
                  "candidate member over a different alphabet");
  members_ = keep_minimal(std::move(members));
}

Dimension CandidateReduction::dimension() const {
  if (members_.empty())
    throw Error(ErrorCode::EmptyCandidate, "the top element has no dimension");
  Dimension d{members_.size(), 0};
  for (const auto& m : members_) d.width = std::max(d.width, m.size());
  return d;
}

std::string CandidateReduction::to_string() const {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < members_.size(); ++i) {
    if (i) out << ", ";
    out << members_[i].to_string();
  }
  out << '}';
  return out.str();
}

void require_same_source(const CandidateReduction& p,
                         const CandidateReduction& q) {
  if (p.source() != q.source())
    throw Error(ErrorCode::SourceMismatch,
                "candidates have different source distributions");
}

bool leq_delta(const CandidateReduction& p, const CandidateReduction& q) {
  require_same_source(p, q);
  for (const auto& dq : q.members()) {
    bool dominated = false;
    for (const auto& dp : p.members())
      if (leq_sigma(dp, dq)) {
        dominated = true;
        break;
      }
    if (!dominated) return false;
  }
  return true;
}

CandidateReduction cr_meet(const CandidateReduction& p,
                           const CandidateReduction& q) {
  require_same_source(p, q);
  std::vector<Distribution> all = p.members();
  all.insert(all.end(), q.members().begin(), q.members().end());
  return CandidateReduction(CandidateReduction::Unchecked{}, p.source(),
                            std::move(all));
}

CandidateReduction cr_join(const CandidateReduction& p,
                           const CandidateReduction& q, std::size_t size_cap) {
  require_same_source(p, q);
  std::vector<Distribution> chosen;
  for (const auto& cand : all_merges(p.source(), size_cap)) {
    bool dominates = false;
    for (const auto& dp : p.members()) {
      for (const auto& dq : q.members())
        if (leq_sigma(join(dp, dq), cand)) {
          dominates = true;
          break;
        }
      if (dominates) break;
    }
    if (dominates) chosen.push_back(cand);
  }
  return CandidateReduction(CandidateReduction::Unchecked{}, p.source(),
                            std::move(chosen));
}

std::vector<Distribution> upward_set(const CandidateReduction& p,
                                     std::size_t size_cap) {
  std::vector<Distribution> out;
  for (const auto& cand : all_merges(p.source(), size_cap))
    for (const auto& m : p.members())
      if (leq_sigma(m, cand)) {
        out.push_back(cand);
        break;
      }
  return out;
}

bool is_meet_consistent(const CandidateReduction& p) {
  if (p.empty()) return false;
  Distribution acc = p.members().front();
  for (std::size_t i = 1; i < p.size(); ++i) acc = meet(acc, p.members()[i]);
  return acc == p.source();
}

bool is_minimal_meet_consistent(const CandidateReduction& p) {
  if (!is_meet_consistent(p)) return false;
  if (p.size() <= 1) return true;
  for (std::size_t skip = 0; skip < p.size(); ++skip) {
    std::vector<Distribution> rest;
    for (std::size_t i = 0; i < p.size(); ++i)
      if (i != skip) rest.push_back(p.members()[i]);
    CandidateReduction sub(CandidateReduction::Unchecked{}, p.source(),
                           std::move(rest));
    if (is_meet_consistent(sub)) return false;
  }
  return true;
}

}  // namespace distred
