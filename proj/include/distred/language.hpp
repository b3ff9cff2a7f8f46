#pragma once

#include <set>
#include <vector>

#include "distred/distribution.hpp"

namespace distred {

/// A word is a sequence of symbol indices over one alphabet.
using Word = std::vector<Symbol>;

/// Finite set of words over an alphabet; deduplicated by construction.
struct FiniteLanguage {
  Alphabet alphabet;
  std::set<Word> words;

  FiniteLanguage(Alphabet a, std::set<Word> ws)
      : alphabet(std::move(a)), words(std::move(ws)) {}

  bool operator==(const FiniteLanguage& other) const {
    return alphabet == other.alphabet && words == other.words;
  }
};

/// Default guardrail on materialized word counts; combinatorial operations
/// throw CapacityExceeded beyond it.
inline constexpr std::size_t kDefaultWordCap = 1'000'000;

/// All interleavings of two words that preserve each word's internal order.
std::set<Word> shuffle(const Word& a, const Word& b,
                       std::size_t word_cap = kDefaultWordCap);

/// Erase symbols outside the target set, preserving order.
Word project(const Word& w, Mask target);
FiniteLanguage project_language(const FiniteLanguage& l, Mask target);

/// Synchronous product of component languages: words over the union alphabet
/// whose projection onto each component alphabet belongs to that component.
/// Components are (sub-alphabet, word set) pairs; the sub-alphabets must
/// cover the full alphabet.
FiniteLanguage sync_product(const Alphabet& alphabet,
                            const std::vector<std::pair<Mask, std::set<Word>>>&
                                components,
                            std::size_t word_cap = kDefaultWordCap);

/// Synchronous product of the projections of `l` onto the parts of `d`.
FiniteLanguage decomposition_closure(const FiniteLanguage& l,
                                     const Distribution& d,
                                     std::size_t word_cap = kDefaultWordCap);

bool is_decomposable(const FiniteLanguage& l, const Distribution& d,
                     std::size_t word_cap = kDefaultWordCap);

/// Closure under adjacent swaps of independent symbols; `indep` is the
/// per-symbol adjacency of an irreflexive symmetric relation.
FiniteLanguage trace_closure(const FiniteLanguage& l,
                             const std::vector<Mask>& indep,
                             std::size_t word_cap = kDefaultWordCap);

bool is_trace_closed(const FiniteLanguage& l, const std::vector<Mask>& indep,
                     std::size_t word_cap = kDefaultWordCap);

bool trace_equivalent(const Word& a, const Word& b,
                      const std::vector<Mask>& indep,
                      std::size_t word_cap = kDefaultWordCap);

}  // namespace distred
