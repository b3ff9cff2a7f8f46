#include "distred/structural.hpp"

#include <algorithm>
#include <bit>

#include "distred/errors.hpp"

namespace distred {

DependenceGraph dependence_graph(const Distribution& d) {
  auto adj = dependence(d);
  for (std::size_t s = 0; s < adj.size(); ++s)
    adj[s] &= ~mask_of(static_cast<Symbol>(s));
  return DependenceGraph{d.alphabet(), std::move(adj)};
}

DependenceGraph independence_graph(const Distribution& d) {
  return DependenceGraph{d.alphabet(), independence(d)};
}

std::vector<IndexSet> distinctive_indices(const Distribution& d) {
  if (d.size() > 64)
    throw Error(ErrorCode::SizeCapExceeded,
                "too many parts for index-set bitmasks");
  std::vector<IndexSet> nmap(d.alphabet().size(), 0);
  for (std::size_t i = 0; i < d.size(); ++i) {
    Mask absent = d.alphabet().universe() & ~d.parts()[i];
    for_each_symbol(absent,
                    [&](Symbol s) { nmap[s] |= IndexSet{1} << i; });
  }
  return nmap;
}

IndexSet full_index_set(std::size_t n) {
  return n >= 64 ? ~IndexSet{0} : (IndexSet{1} << n) - 1;
}

Mask boundary_symbols(const DependenceGraph& g, Mask s) {
  Mask out = 0;
  for_each_symbol(s, [&](Symbol v) {
    if (g.adj[v] & ~s) out |= mask_of(v);
  });
  return out;
}

namespace {

// On-path simple search; `inter` is the intersection of distinctive sets over
// the non-final vertices so far. Empty intersections cannot contribute.
void cr_dfs(const DependenceGraph& g, const std::vector<IndexSet>& nmap,
            Mask s, Symbol target, Symbol v, Mask on_path, IndexSet inter,
            IndexSet& result) {
  if (inter == 0) return;
  for_each_symbol(g.adj[v], [&](Symbol w) {
    if (w == target) {
      result |= inter;
      return;
    }
    Mask wm = mask_of(w);
    if ((s & wm) || (on_path & wm)) return;
    cr_dfs(g, nmap, s, target, w, on_path | wm, inter & nmap[w], result);
  });
}

}  // namespace

IndexSet cr_value(const DependenceGraph& g, const std::vector<IndexSet>& nmap,
                  Mask s, Symbol target) {
  IndexSet result = 0;
  for_each_symbol(boundary_symbols(g, s), [&](Symbol b) {
    cr_dfs(g, nmap, s, target, b, mask_of(b), nmap[b], result);
  });
  return result;
}

IndexSet CrSession::cr(Mask s, Symbol target) {
  auto key = std::make_pair(s, target);
  auto it = memo_.find(key);
  if (it != memo_.end()) return it->second;
  IndexSet v = cr_value(g_, nmap_, s, target);
  memo_.emplace(key, v);
  return v;
}

namespace {

bool is_part_of(Mask p, const Distribution& d) {
  return std::find(d.parts().begin(), d.parts().end(), p) != d.parts().end();
}

bool full_cr_part(const DependenceGraph& g, const std::vector<IndexSet>& nmap,
                  const Distribution& d, Mask part) {
  IndexSet full = full_index_set(d.size());
  Mask outside = d.alphabet().universe() & ~part;
  bool ok = true;
  for_each_symbol(outside, [&](Symbol t) {
    if (ok && cr_value(g, nmap, part, t) != full) ok = false;
  });
  return ok;
}

bool rule_decomposable(const Distribution& dprime, const Distribution& d,
                       const DependenceGraph& g) {
  auto nmap = distinctive_indices(d);
  for (Mask p : dprime.parts())
    if (!is_part_of(p, d) && full_cr_part(g, nmap, d, p)) return true;
  return false;
}

}  // namespace

bool theorem7_decomposable(const Distribution& dprime, const Distribution& d) {
  require_same_alphabet(dprime, d);
  return rule_decomposable(dprime, d, dependence_graph(dprime));
}

bool corollary3_decomposable(const Distribution& dprime,
                             const Distribution& d) {
  require_same_alphabet(dprime, d);
  return rule_decomposable(dprime, d, dependence_graph(d));
}

Mask appendixA_extent(const Distribution& dprime, const Distribution& d,
                      Mask seed) {
  require_same_alphabet(dprime, d);
  CrSession sess(dependence_graph(dprime), distinctive_indices(d));
  IndexSet full = full_index_set(d.size());
  Mask universe = d.alphabet().universe();
  std::size_t n = d.size();
  Mask sd = seed;
  bool changed = true;
  while (changed && sd != universe) {
    changed = false;
    // Grow by full criterion values until stable.
    bool grew = true;
    while (grew && sd != universe) {
      grew = false;
      for_each_symbol(universe & ~sd, [&](Symbol t) {
        if (!mask_contains(sd, t) && sess.cr(sd, t) == full) {
          sd |= mask_of(t);
          grew = changed = true;
        }
      });
    }
    if (sd == universe) break;
    // Joint determination: within one part of dprime, a set of two or more
    // seeded symbols missing from all parts of d but one determines the new
    // symbol. All eligible symbols are collected before re-entering the
    // criterion step.
    Mask added = 0;
    for (Mask part : dprime.parts()) {
      Mask inside = part & sd;
      if (mask_size(inside) < 2) continue;
      Mask fresh = part & ~sd;
      for_each_symbol(fresh, [&](Symbol t) {
        if (added & mask_of(t)) return;
        // Submasks of `inside`, smallest first.
        std::vector<Mask> subs;
        for (Mask m = inside; m; m = (m - 1) & inside)
          if (mask_size(m) >= 2) subs.push_back(m);
        std::sort(subs.begin(), subs.end(), [](Mask a, Mask b) {
          auto sa = mask_size(a), sb = mask_size(b);
          return sa != sb ? sa < sb : mask_lex_less(a, b);
        });
        for (Mask m : subs) {
          IndexSet u = 0;
          for_each_symbol(m, [&](Symbol s) { u |= sess.nmap()[s]; });
          if (std::popcount(u) == static_cast<int>(n) - 1) {
            added |= mask_of(t);
            return;
          }
        }
      });
    }
    if (added) {
      sd |= added;
      changed = true;
    }
  }
  return sd;
}

bool appendixA_decomposable(const Distribution& dprime,
                            const Distribution& d) {
  require_same_alphabet(dprime, d);
  Mask universe = d.alphabet().universe();
  for (Mask p : dprime.parts()) {
    bool in_d =
        std::find(d.parts().begin(), d.parts().end(), p) != d.parts().end();
    if (!in_d && appendixA_extent(dprime, d, p) == universe) return true;
  }
  return false;
}

bool no_reduction_check(const Distribution& d) {
  Mask universe = d.alphabet().universe();
  for (std::size_t i = 0; i < d.size(); ++i)
    for (std::size_t j = i + 1; j < d.size(); ++j) {
      Mask u = d.parts()[i] | d.parts()[j];
      if (u == universe) continue;
      if (appendixA_extent(d, d, u) != universe) return false;
    }
  return true;
}

}  // namespace distred
