#pragma once

#include <optional>
#include <string>
#include <vector>

#include "distred/candidate.hpp"
#include "distred/language.hpp"

namespace distred {

/// Occurrence counts per symbol; denotes the full commutation class of all
/// words with exactly those counts.
struct ExponentVector {
  std::vector<unsigned> counts;

  bool operator==(const ExponentVector&) const = default;
  auto operator<=>(const ExponentVector&) const = default;

  std::string to_string(const Alphabet& a) const;
};

/// Union of commutation classes. Exact for the candidate counterexample
/// language, which is a union of shuffles of symbol powers.
struct ParikhUnion {
  Alphabet alphabet;
  std::vector<ExponentVector> classes;
};

/// The counterexample template for a source distribution with parts
/// Σ_0..Σ_{n-1} in canonical order: class j counts a symbol once when it is
/// in Σ_j and j+2 times otherwise. Class indices follow the canonical part
/// order, so the classes may be a reindexing of a presentation that lists
/// parts differently; decomposability questions are invariant under that.
ParikhUnion build_lcand(const Distribution& d);

/// Exact decomposability of a union of commutation classes with respect to
/// dprime: for every tuple of class choices, one per part of dprime, that
/// agree on shared symbols, the glued count vector must itself be a class.
/// Tuples are scanned lexicographically; `witness`, when given, receives the
/// first glued vector that is not a class.
bool parikh_decomposable(const ParikhUnion& l, const Distribution& dprime,
                         ExponentVector* witness = nullptr);

/// All words of every class, capped. Throws CapacityExceeded.
FiniteLanguage materialize(const ParikhUnion& l,
                           std::size_t word_cap = kDefaultWordCap);

struct MemberCertificate {
  Distribution member;
  /// Which certifier established decomposability: "thm7", "appendixA", or
  /// "parikh".
  std::string method;
};

struct RefutationEvidence {
  std::vector<MemberCertificate> certificates;
};

/// Some(evidence) iff the counterexample language of p's source is
/// decomposable with respect to every member, which shows p is not a
/// reduction. Cheap structural certifiers are tried before the exact oracle.
std::optional<RefutationEvidence> refute_candidate(const CandidateReduction& p);

}  // namespace distred
