#include "distred/distribution.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace distred {

Distribution::Distribution(Alphabet alphabet, std::vector<Mask> parts)
    : alphabet_(std::move(alphabet)), parts_(std::move(parts)) {
  if (parts_.empty())
    throw Error(ErrorCode::NotCovering, "distribution must have a part");
  Mask covered = 0;
  for (Mask p : parts_) {
    if (p == 0) throw Error(ErrorCode::EmptyPart, "empty part in distribution");
    if (p & ~alphabet_.universe())
      throw Error(ErrorCode::AlphabetMismatch, "part has foreign symbols");
    covered |= p;
  }
  if (covered != alphabet_.universe())
    throw Error(ErrorCode::NotCovering,
                "parts do not cover the alphabet");
  std::sort(parts_.begin(), parts_.end(), mask_lex_less);
  for (std::size_t i = 0; i + 1 < parts_.size(); ++i)
    if (parts_[i] == parts_[i + 1])
      throw Error(ErrorCode::DuplicatePart,
                  "duplicate part " + alphabet_.mask_to_string(parts_[i]));
  for (std::size_t i = 0; i < parts_.size(); ++i)
    for (std::size_t j = 0; j < parts_.size(); ++j) {
      if (i == j) continue;
      if ((parts_[i] & parts_[j]) == parts_[i])
        throw Error(ErrorCode::ComparableParts,
                    "part " + alphabet_.mask_to_string(parts_[i]) +
                        " is contained in " +
                        alphabet_.mask_to_string(parts_[j]));
    }
}

bool Distribution::operator<(const Distribution& other) const {
  return std::lexicographical_compare(parts_.begin(), parts_.end(),
                                      other.parts_.begin(), other.parts_.end(),
                                      mask_lex_less);
}

std::string Distribution::to_string() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < parts_.size(); ++i) {
    if (i) out << '|';
    std::string s = alphabet_.mask_to_string(parts_[i]);
    out << s.substr(1, s.size() - 2);
  }
  out << ')';
  return out.str();
}

void IndexPartition::validate(std::size_t n) const {
  std::vector<bool> seen(n, false);
  bool has_pair = false;
  for (const auto& block : blocks) {
    if (block.empty())
      throw Error(ErrorCode::ImproperPartition, "empty block");
    if (block.size() >= 2) has_pair = true;
    for (int i : block) {
      if (i < 0 || static_cast<std::size_t>(i) >= n || seen[i])
        throw Error(ErrorCode::ImproperPartition,
                    "blocks must partition the index set");
      seen[i] = true;
    }
  }
  for (bool b : seen)
    if (!b)
      throw Error(ErrorCode::ImproperPartition,
                  "blocks must cover the index set");
  if (blocks.size() < 2)
    throw Error(ErrorCode::ImproperPartition,
                "a proper partition has at least two blocks");
  if (!has_pair)
    throw Error(ErrorCode::ImproperPartition,
                "the discrete partition merges nothing");
}

void require_same_alphabet(const Distribution& a, const Distribution& b) {
  if (a.alphabet() != b.alphabet())
    throw Error(ErrorCode::AlphabetMismatch,
                "distributions are over different alphabets");
}

bool leq_sigma(const Distribution& a, const Distribution& b) {
  require_same_alphabet(a, b);
  for (Mask pa : a.parts()) {
    bool fits = false;
    for (Mask pb : b.parts())
      if ((pa & pb) == pa) {
        fits = true;
        break;
      }
    if (!fits) return false;
  }
  return true;
}

bool lt_sigma(const Distribution& a, const Distribution& b) {
  return leq_sigma(a, b) && a != b;
}

bool incomparable_sigma(const Distribution& a, const Distribution& b) {
  return !leq_sigma(a, b) && !leq_sigma(b, a);
}

std::vector<Mask> keep_maximal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), mask_lex_less);
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  std::vector<Mask> out;
  for (std::size_t i = 0; i < masks.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < masks.size(); ++j)
      if (i != j && (masks[i] & masks[j]) == masks[i] && masks[i] != masks[j]) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(masks[i]);
  }
  return out;
}

Distribution meet(const Distribution& a, const Distribution& b) {
  require_same_alphabet(a, b);
  std::vector<Mask> inters;
  for (Mask pa : a.parts())
    for (Mask pb : b.parts())
      if (Mask m = pa & pb) inters.push_back(m);
  return Distribution(a.alphabet(), keep_maximal_masks(std::move(inters)));
}

Distribution join(const Distribution& a, const Distribution& b) {
  require_same_alphabet(a, b);
  std::vector<Mask> all = a.parts();
  all.insert(all.end(), b.parts().begin(), b.parts().end());
  return Distribution(a.alphabet(), keep_maximal_masks(std::move(all)));
}

std::vector<Mask> dependence(const Distribution& d) {
  std::vector<Mask> adj(d.alphabet().size(), 0);
  for (Mask p : d.parts())
    for_each_symbol(p, [&](Symbol s) { adj[s] |= p; });
  return adj;
}

std::vector<Mask> independence(const Distribution& d) {
  std::vector<Mask> adj = dependence(d);
  Mask universe = d.alphabet().universe();
  for (std::size_t s = 0; s < adj.size(); ++s)
    adj[s] = universe & ~adj[s] & ~mask_of(static_cast<Symbol>(s));
  return adj;
}

std::vector<std::pair<Symbol, Symbol>> independence_edges(
    const Distribution& d) {
  auto indep = independence(d);
  std::vector<std::pair<Symbol, Symbol>> edges;
  for (std::size_t a = 0; a < indep.size(); ++a)
    for_each_symbol(indep[a], [&](Symbol b) {
      if (static_cast<Symbol>(a) < b)
        edges.emplace_back(static_cast<Symbol>(a), b);
    });
  return edges;
}

bool covered_by(Mask s, const Distribution& d) {
  for (Mask p : d.parts())
    if ((s & p) == s) return true;
  return false;
}

Distribution merge(const Distribution& d, const IndexPartition& p) {
  p.validate(d.size());
  std::vector<Mask> unions;
  for (const auto& block : p.blocks) {
    Mask u = 0;
    for (int i : block) u |= d.parts()[i];
    unions.push_back(u);
  }
  auto maximal = keep_maximal_masks(std::move(unions));
  if (maximal.size() == 1)
    throw Error(ErrorCode::TrivialResult,
                "merge collapses to the trivial distribution");
  return Distribution(d.alphabet(), std::move(maximal));
}

std::vector<Distribution> minimal_merges(const Distribution& d) {
  std::set<Distribution> out;
  std::size_t n = d.size();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      IndexPartition p;
      p.blocks.push_back({static_cast<int>(i), static_cast<int>(j)});
      for (std::size_t k = 0; k < n; ++k)
        if (k != i && k != j) p.blocks.push_back({static_cast<int>(k)});
      try {
        out.insert(merge(d, p));
      } catch (const Error& e) {
        if (e.code() != ErrorCode::TrivialResult) throw;
      }
    }
  return {out.begin(), out.end()};
}

void for_each_partition(std::size_t n, bool proper_only,
                        const std::function<void(const IndexPartition&)>& f) {
  // Restricted growth strings: rgs[i] is the block of index i.
  std::vector<int> rgs(n, 0);
  auto emit = [&] {
    int nblocks = *std::max_element(rgs.begin(), rgs.end()) + 1;
    if (proper_only) {
      if (nblocks < 2 || static_cast<std::size_t>(nblocks) == n) return;
    }
    IndexPartition p;
    p.blocks.assign(nblocks, {});
    for (std::size_t i = 0; i < n; ++i) p.blocks[rgs[i]].push_back(i);
    f(p);
  };
  std::function<void(std::size_t, int)> rec = [&](std::size_t i, int maxb) {
    if (i == n) {
      emit();
      return;
    }
    for (int b = 0; b <= maxb + 1; ++b) {
      rgs[i] = b;
      rec(i + 1, std::max(maxb, b));
    }
  };
  if (n == 0) return;
  rgs[0] = 0;
  rec(1, 0);
}

std::vector<Distribution> all_merges(const Distribution& d,
                                     std::size_t size_cap) {
  if (d.size() > size_cap)
    throw Error(ErrorCode::SizeCapExceeded,
                "distribution too large to enumerate merges");
  std::set<Distribution> out;
  for_each_partition(d.size(), true, [&](const IndexPartition& p) {
    try {
      out.insert(merge(d, p));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::TrivialResult) throw;
    }
  });
  return {out.begin(), out.end()};
}

std::vector<Distribution> keep_minimal(std::vector<Distribution> ds) {
  std::sort(ds.begin(), ds.end());
  ds.erase(std::unique(ds.begin(), ds.end()), ds.end());
  std::vector<Distribution> out;
  for (std::size_t i = 0; i < ds.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < ds.size(); ++j)
      if (i != j && leq_sigma(ds[j], ds[i]) && ds[j] != ds[i]) {
        dominated = true;
        break;
      }
    if (!dominated) out.push_back(ds[i]);
  }
  return out;
}

namespace {

// Assign each part of `d` to a part of `merged` containing it so that every
// part of `merged` is exactly the union of its assigned parts.
bool assignment_exists(const Distribution& merged, const Distribution& d,
                       std::size_t idx, std::vector<Mask>& unions) {
  if (idx == d.size()) {
    for (std::size_t j = 0; j < merged.size(); ++j)
      if (unions[j] != merged.parts()[j]) return false;
    return true;
  }
  Mask part = d.parts()[idx];
  for (std::size_t j = 0; j < merged.size(); ++j) {
    if ((part & merged.parts()[j]) != part) continue;
    Mask saved = unions[j];
    unions[j] |= part;
    if (assignment_exists(merged, d, idx + 1, unions)) return true;
    unions[j] = saved;
  }
  return false;
}

}  // namespace

bool is_merged_from(const Distribution& merged, const Distribution& d) {
  if (merged.alphabet() != d.alphabet()) return false;
  if (merged.is_trivial() || merged == d) return false;
  if (merged.size() >= d.size()) return false;
  if (!leq_sigma(d, merged)) return false;
  std::vector<Mask> unions(merged.size(), 0);
  return assignment_exists(merged, d, 0, unions);
}

}  // namespace distred
