#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "distred/distribution.hpp"

namespace distred {

/// Subset of part indices [0, n) of a source distribution.
using IndexSet = std::uint64_t;

/// Undirected symbol graph; adjacency is irreflexive.
struct DependenceGraph {
  Alphabet alphabet;
  std::vector<Mask> adj;
};

DependenceGraph dependence_graph(const Distribution& d);
DependenceGraph independence_graph(const Distribution& d);

/// Per-symbol set of the parts of `d` the symbol does not belong to.
std::vector<IndexSet> distinctive_indices(const Distribution& d);

IndexSet full_index_set(std::size_t n);

/// Symbols of `s` adjacent in `g` to a symbol outside `s`.
Mask boundary_symbols(const DependenceGraph& g, Mask s);

/// Criterion value for (s, target), target outside s: over every boundary
/// symbol of s and every simple path from it to target whose interior stays
/// outside s, intersect the distinctive sets of the non-final vertices, and
/// take the union of those intersections.
IndexSet cr_value(const DependenceGraph& g, const std::vector<IndexSet>& nmap,
                  Mask s, Symbol target);

/// Memoizes cr_value per (s, target) for one fixed graph and map. Not
/// thread-safe; use one session per thread.
class CrSession {
 public:
  CrSession(DependenceGraph g, std::vector<IndexSet> nmap)
      : g_(std::move(g)), nmap_(std::move(nmap)) {}

  IndexSet cr(Mask s, Symbol target);

  const DependenceGraph& graph() const { return g_; }
  const std::vector<IndexSet>& nmap() const { return nmap_; }

 private:
  DependenceGraph g_;
  std::vector<IndexSet> nmap_;
  std::map<std::pair<Mask, Symbol>, IndexSet> memo_;
};

/// Sound tests that the counterexample language of `d` is decomposable with
/// respect to `dprime`: some part of dprime that is not a part of d has a
/// full criterion value for every outside symbol. The first walks paths in
/// the dependence graph of dprime, the second in the (sparser) graph of d,
/// so the second implies the first.
bool theorem7_decomposable(const Distribution& dprime, const Distribution& d);
bool corollary3_decomposable(const Distribution& dprime, const Distribution& d);

/// Extension of `seed` to a fixpoint alternating two growth steps: add
/// symbols with full criterion value, then add symbols determined jointly by
/// two or more seeded symbols that share exactly one part of d and co-occur
/// with the new symbol in a part of dprime.
Mask appendixA_extent(const Distribution& dprime, const Distribution& d,
                      Mask seed);

/// Some part of dprime not in d extends to the whole alphabet.
bool appendixA_decomposable(const Distribution& dprime, const Distribution& d);

/// True implies d has no reduction: every union of two parts other than the
/// whole alphabet extends to the whole alphabet within d itself.
bool no_reduction_check(const Distribution& d);

}  // namespace distred
