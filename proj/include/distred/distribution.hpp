#pragma once

#include <compare>
#include <cstddef>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "distred/alphabet.hpp"

namespace distred {

/// A cover of the alphabet by non-empty, pairwise incomparable (under set
/// inclusion) sub-alphabets. Parts are kept in a canonical order so equality
/// and hashing are structural.
class Distribution {
 public:
  /// Validates and canonicalizes; throws EmptyPart, NotCovering,
  /// ComparableParts, DuplicatePart.
  Distribution(Alphabet alphabet, std::vector<Mask> parts);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<Mask>& parts() const { return parts_; }
  std::size_t size() const { return parts_.size(); }
  bool is_trivial() const { return parts_.size() == 1; }

  bool operator==(const Distribution& other) const {
    return alphabet_ == other.alphabet_ && parts_ == other.parts_;
  }
  bool operator!=(const Distribution& other) const { return !(*this == other); }

  /// Total order on canonical forms (same alphabet assumed); used for
  /// deterministic worklists and dedup.
  bool operator<(const Distribution& other) const;

  std::string to_string() const;

 private:
  Alphabet alphabet_;
  std::vector<Mask> parts_;
};

/// Partition of the part-index set [0, n) of a distribution. Proper means at
/// least two blocks and not the discrete partition.
struct IndexPartition {
  std::vector<std::vector<int>> blocks;

  /// Throws ImproperPartition unless blocks are non-empty, disjoint, cover
  /// [0, n), number at least two, and at least one block has two members.
  void validate(std::size_t n) const;
};

void require_same_alphabet(const Distribution& a, const Distribution& b);

/// The partial order on distributions: every part of `a` fits in a part of
/// `b`.
bool leq_sigma(const Distribution& a, const Distribution& b);
bool lt_sigma(const Distribution& a, const Distribution& b);
bool incomparable_sigma(const Distribution& a, const Distribution& b);

/// Greatest lower bound: maximal elements of the pairwise intersections.
Distribution meet(const Distribution& a, const Distribution& b);
/// Least upper bound: maximal elements of the union of parts.
Distribution join(const Distribution& a, const Distribution& b);

/// Per-symbol adjacency of the dependence relation; adj[s] includes s itself.
std::vector<Mask> dependence(const Distribution& d);
/// Complement of dependence, irreflexive; adj[s] excludes s.
std::vector<Mask> independence(const Distribution& d);
/// Independence as a canonical list of unordered pairs (a < b).
std::vector<std::pair<Symbol, Symbol>> independence_edges(const Distribution& d);

/// True iff `s` fits inside some part of `d`.
bool covered_by(Mask s, const Distribution& d);

/// Keep only the masks that are maximal under set inclusion, deduplicated.
std::vector<Mask> keep_maximal_masks(std::vector<Mask> masks);

/// Merge the parts of `d` according to a proper partition, then keep maximal
/// parts. Throws TrivialResult if the outcome collapses to the one-part
/// distribution.
Distribution merge(const Distribution& d, const IndexPartition& p);

/// All results of merging exactly two parts, trivial collapses excluded.
std::vector<Distribution> minimal_merges(const Distribution& d);

/// All merged distributions over proper partitions, deduplicated, trivial
/// distribution excluded. Guarded by a cap on |d| since the partition count
/// is Bell(n). Throws SizeCapExceeded.
std::vector<Distribution> all_merges(const Distribution& d,
                                     std::size_t size_cap = 9);

/// Minimal elements under leq_sigma (the [P] filter), deduplicated, in
/// canonical order.
std::vector<Distribution> keep_minimal(std::vector<Distribution> ds);

/// True iff `merged` can be obtained from `d` by a proper partition merge.
bool is_merged_from(const Distribution& merged, const Distribution& d);

/// Enumerate all set partitions of [0, n); proper ones only when
/// `proper_only`. Visits partitions in restricted-growth-string order.
void for_each_partition(std::size_t n, bool proper_only,
                        const std::function<void(const IndexPartition&)>& f);

}  // namespace distred
