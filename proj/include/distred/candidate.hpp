#pragma once

#include <vector>

#include "distred/distribution.hpp"

namespace distred {

/// Dimension of a candidate reduction: (height, width) = (member count,
/// largest member size). Optimality minimizes width first.
struct Dimension {
  std::size_t height = 0;
  std::size_t width = 0;

  bool operator==(const Dimension&) const = default;
};

/// -1 if `a` is strictly better, 0 if equal, +1 if strictly worse.
int compare_optimality(const Dimension& a, const Dimension& b);

/// An element of the search space over a source distribution: a set of
/// merged distributions, pairwise incomparable. The empty set is the top
/// element. Constructors normalize user input by keeping only minimal
/// members.
class CandidateReduction {
 public:
  /// Validates every member against M(source); throws NotMerged.
  CandidateReduction(Distribution source, std::vector<Distribution> members);

  struct Unchecked {};
  /// For callers that obtained members from the merge machinery itself.
  CandidateReduction(Unchecked, Distribution source,
                     std::vector<Distribution> members);

  const Distribution& source() const { return source_; }
  const std::vector<Distribution>& members() const { return members_; }
  std::size_t size() const { return members_.size(); }
  bool empty() const { return members_.empty(); }

  bool operator==(const CandidateReduction& other) const {
    return source_ == other.source_ && members_ == other.members_;
  }
  bool operator<(const CandidateReduction& other) const {
    return std::lexicographical_compare(members_.begin(), members_.end(),
                                        other.members_.begin(),
                                        other.members_.end());
  }

  /// Throws EmptyCandidate on the top element.
  Dimension dimension() const;

  std::string to_string() const;

 private:
  Distribution source_;
  std::vector<Distribution> members_;
};

void require_same_source(const CandidateReduction& p,
                         const CandidateReduction& q);

/// Partial order on candidates: p <= q iff every member of q dominates some
/// member of p.
bool leq_delta(const CandidateReduction& p, const CandidateReduction& q);

/// Lattice meet: minimal elements of the union of members.
CandidateReduction cr_meet(const CandidateReduction& p,
                           const CandidateReduction& q);

/// Lattice join: minimal merged distributions dominating a pairwise join of
/// members. Materializes M(source); throws SizeCapExceeded past the cap.
CandidateReduction cr_join(const CandidateReduction& p,
                           const CandidateReduction& q,
                           std::size_t size_cap = 9);

/// U(P): every merged distribution dominating some member.
std::vector<Distribution> upward_set(const CandidateReduction& p,
                                     std::size_t size_cap = 9);

/// The members' lattice meet equals the source.
bool is_meet_consistent(const CandidateReduction& p);
/// Meet-consistent and no proper subset is; it suffices to check the
/// one-element-removed subsets since consistency is upward closed.
bool is_minimal_meet_consistent(const CandidateReduction& p);

}  // namespace distred
