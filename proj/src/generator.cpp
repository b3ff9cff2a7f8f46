#include "distred/generator.hpp"

#include <algorithm>
#include <bit>
#include <set>
#include <sstream>

#include <nlohmann/json.hpp>

#include "distred/errors.hpp"
#include "distred/lcand.hpp"

namespace distred {

namespace {

using nlohmann::json;

bool edge_independent(const Distribution& m, Symbol s1, Symbol s2) {
  Mask both = mask_of(s1) | mask_of(s2);
  for (Mask p : m.parts())
    if ((p & both) == both) return false;
  return true;
}

}  // namespace

CoverConstraint cover_constraint(const Distribution& d, Mask target) {
  CoverConstraint c{target, {}};
  std::size_t n = d.size();
  std::vector<IndexSet> found;
  // Subsets ascending by size keep only minimal covers.
  std::vector<IndexSet> subsets;
  for (IndexSet s = 1; s < (IndexSet{1} << n); ++s) subsets.push_back(s);
  std::sort(subsets.begin(), subsets.end(), [](IndexSet a, IndexSet b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  for (IndexSet s : subsets) {
    bool dominated = false;
    for (IndexSet f : found)
      if ((f & s) == f) {
        dominated = true;
        break;
      }
    if (dominated) continue;
    Mask u = 0;
    for (std::size_t i = 0; i < n; ++i)
      if ((s >> i) & 1) u |= d.parts()[i];
    if ((u & target) == target) found.push_back(s);
  }
  c.covers = std::move(found);
  return c;
}

namespace {

std::vector<Distribution> ordered_filter(const Distribution& d,
                                         std::size_t max_size,
                                         std::size_t size_cap,
                                         const std::function<bool(
                                             const Distribution&)>& keep) {
  std::vector<Distribution> out;
  for (const auto& m : all_merges(d, size_cap))
    if (m.size() <= max_size && keep(m)) out.push_back(m);
  std::stable_sort(out.begin(), out.end(),
                   [](const Distribution& a, const Distribution& b) {
                     if (a.size() != b.size()) return a.size() < b.size();
                     return a < b;
                   });
  return out;
}

}  // namespace

std::vector<Distribution> separating_merges(const Distribution& d, Symbol s1,
                                            Symbol s2, std::size_t max_size,
                                            std::size_t size_cap) {
  return ordered_filter(d, max_size, size_cap, [&](const Distribution& m) {
    return edge_independent(m, s1, s2);
  });
}

std::vector<Distribution> breaking_merges(const Distribution& d,
                                          const CoverConstraint& c,
                                          std::size_t max_size,
                                          std::size_t size_cap) {
  return ordered_filter(d, max_size, size_cap, [&](const Distribution& m) {
    for (Mask p : m.parts())
      if ((p & c.target) == c.target) return false;
    return true;
  });
}

namespace {

struct BudgetOut {};

// Shared state of one generation run.
struct Search {
  const Distribution& d;
  const GenerateOptions& opts;
  std::set<std::vector<Distribution>> seen;
  std::size_t validations = 0;
  std::optional<std::pair<CandidateReduction, ValidationResult>> found;
  std::vector<std::pair<CandidateReduction, Dimension>> collected;
  bool collect_all = false;
  // Restrict collection options to this pool when set (recursive mode).
  const std::vector<Distribution>* pool = nullptr;

  std::vector<std::pair<Symbol, Symbol>> edges;  // fixed decision order

  explicit Search(const Distribution& dist, const GenerateOptions& o)
      : d(dist), opts(o) {
    edges = independence_edges(d);
    auto indep = independence(d);
    std::stable_sort(edges.begin(), edges.end(),
                     [&](const std::pair<Symbol, Symbol>& x,
                         const std::pair<Symbol, Symbol>& y) {
                       int dx = mask_size(indep[x.first]) +
                                mask_size(indep[x.second]);
                       int dy = mask_size(indep[y.first]) +
                                mask_size(indep[y.second]);
                       if (dx != dy) return dx > dy;
                       return x < y;
                     });
  }

  void emit(const json& j) {
    if (opts.progress) opts.progress(j.dump());
  }

  static json members_json(const std::vector<Distribution>& ms) {
    json a = json::array();
    for (const auto& m : ms) a.push_back(m.to_string());
    return a;
  }

  bool meet_consistent(const std::vector<Distribution>& ms,
                       std::optional<Distribution>* meet_out = nullptr) {
    if (ms.empty()) return false;
    Distribution acc = ms.front();
    for (std::size_t i = 1; i < ms.size(); ++i) acc = meet(acc, ms[i]);
    bool ok = acc == d;
    if (meet_out) *meet_out = std::move(acc);
    return ok;
  }

  std::vector<Distribution> minimize(std::vector<Distribution> ms) {
    // Greedy removal in canonical order keeps the result minimal
    // meet-consistent.
    for (std::size_t i = 0; i < ms.size() && ms.size() > 2;) {
      std::vector<Distribution> rest;
      for (std::size_t j = 0; j < ms.size(); ++j)
        if (j != i) rest.push_back(ms[j]);
      if (meet_consistent(rest))
        ms = std::move(rest);
      else
        ++i;
    }
    return ms;
  }

  // Validate one minimal meet-consistent candidate; true stops the search.
  bool submit(std::vector<Distribution> ms) {
    ms = keep_minimal(std::move(ms));
    if (meet_consistent(ms)) ms = minimize(std::move(ms));
    if (ms.size() < 2) return false;
    if (!seen.insert(ms).second) return false;
    CandidateReduction cand(CandidateReduction::Unchecked{}, d, ms);
    if (!is_minimal_meet_consistent(cand)) return false;
    if (validations >= opts.max_validations) throw BudgetOut{};
    ++validations;
    emit({{"event", "candidate"}, {"members", members_json(ms)}});
    ValidationResult vr = strengthened_validate(cand, opts.budget,
                                                opts.size_cap,
                                                opts.time_cap_ms);
    emit({{"event", "validation"},
          {"members", members_json(ms)},
          {"validated", vr.trace.has_value()},
          {"strengthened", vr.strengthened}});
    if (!vr.trace) return false;
    if (collect_all) {
      collected.emplace_back(cand, cand.dimension());
      return false;
    }
    found.emplace(std::move(cand), std::move(vr));
    return true;
  }

  std::vector<Distribution> collection_options(Symbol s1, Symbol s2,
                                               std::size_t width) {
    std::vector<Distribution> opts_list;
    if (pool) {
      for (const auto& m : *pool)
        if (m.size() <= width && edge_independent(m, s1, s2))
          opts_list.push_back(m);
    } else {
      opts_list = separating_merges(d, s1, s2, width, opts.size_cap);
    }
    return opts_list;
  }

  // Refinement: break the first troublesome part of the running meet.
  bool refine(std::vector<Distribution>& ms, std::size_t width,
              std::size_t depth) {
    std::optional<Distribution> acc;
    if (meet_consistent(ms, &acc)) return submit(ms);
    if (depth == 0 || pool) return false;
    Mask trouble = 0;
    for (Mask p : acc->parts())
      if (!covered_by(p, d)) {
        trouble = p;
        break;
      }
    if (trouble == 0) return false;
    auto cands = breaking_merges(d, cover_constraint(d, trouble), width,
                                 opts.size_cap);
    for (const auto& m : cands) {
      if (std::find(ms.begin(), ms.end(), m) != ms.end()) continue;
      ms.push_back(m);
      bool done = refine(ms, width, depth - 1);
      ms.pop_back();
      if (done) return true;
    }
    return false;
  }

  bool collect(std::vector<Distribution>& ms, std::size_t width) {
    // Next uncovered independence edge, in the fixed order.
    const std::pair<Symbol, Symbol>* next = nullptr;
    for (const auto& e : edges) {
      bool covered = false;
      for (const auto& m : ms)
        if (edge_independent(m, e.first, e.second)) {
          covered = true;
          break;
        }
      if (!covered) {
        next = &e;
        break;
      }
    }
    if (!next) {
      // Collection complete; meet-consistent candidates are submitted as
      // they stand, others enter refinement.
      std::vector<Distribution> copy = ms;
      if (meet_consistent(copy)) return submit(std::move(copy));
      return refine(ms, width, d.size() + 2);
    }
    for (const auto& m : collection_options(next->first, next->second,
                                            width)) {
      if (std::find(ms.begin(), ms.end(), m) != ms.end()) continue;
      ms.push_back(m);
      bool done = collect(ms, width);
      ms.pop_back();
      if (done) return true;
    }
    return false;
  }

  bool run() {
    std::size_t maxw = d.size() - 1;
    if (opts.max_width) maxw = std::min(maxw, opts.max_width);
    for (std::size_t w = 2; w <= maxw; ++w) {
      emit({{"event", "width"}, {"width", w}});
      std::vector<Distribution> ms;
      if (collect(ms, w)) return true;
    }
    return false;
  }
};

GenerateResult refute_or_bottom(const Distribution& d,
                                std::vector<Distribution>& bottom_out) {
  GenerateResult r{GenerateStatus::Exhausted, std::nullopt, std::nullopt, "",
                   0};
  bottom_out = keep_minimal(minimal_merges(d));
  if (bottom_out.size() < 2) {
    r.status = GenerateStatus::NoReduction;
    r.mechanism = "bottom";
    return r;
  }
  Distribution acc = bottom_out.front();
  for (std::size_t i = 1; i < bottom_out.size(); ++i)
    acc = meet(acc, bottom_out[i]);
  if (acc != d) {
    r.status = GenerateStatus::NoReduction;
    r.mechanism = "meet";
    return r;
  }
  CandidateReduction bot(CandidateReduction::Unchecked{}, d, bottom_out);
  if (auto ev = refute_candidate(bot)) {
    r.status = GenerateStatus::NoReduction;
    r.mechanism = "lcand";
    for (const auto& c : ev->certificates)
      if (c.method != "thm7") r.mechanism = "lcand_app";
    return r;
  }
  r.status = GenerateStatus::Found;  // meaning: not refuted, keep going
  return r;
}

}  // namespace

GenerateResult incremental_generate(const Distribution& d,
                                    const GenerateOptions& opts) {
  std::vector<Distribution> bottom;
  GenerateResult pre = refute_or_bottom(d, bottom);
  if (pre.status == GenerateStatus::NoReduction) return pre;

  Search s(d, opts);
  GenerateResult r{GenerateStatus::Exhausted, std::nullopt, std::nullopt, "",
                   0};
  bool budget_out = false;
  try {
    s.run();
  } catch (const BudgetOut&) {
    budget_out = true;
  }
  if (!s.found && !budget_out) {
    // Last resort: the minimal-merge set itself (covers the case where it
    // is not minimal meet-consistent and thus never entered the search).
    try {
      s.submit(bottom);
    } catch (const BudgetOut&) {
    }
    if (!s.found) {
      // submit() rejects non-minimal candidates; validate directly.
      std::vector<Distribution> norm = keep_minimal(bottom);
      if (norm.size() >= 2) {
        CandidateReduction bot(CandidateReduction::Unchecked{}, d, norm);
        ValidationResult vr = strengthened_validate(
            bot, opts.budget, opts.size_cap, opts.time_cap_ms);
        ++s.validations;
        if (vr.trace) s.found.emplace(std::move(bot), std::move(vr));
      }
    }
  }
  r.candidates_tested = s.validations;
  if (s.found) {
    r.status = GenerateStatus::Found;
    r.mechanism = s.found->second.strengthened ? "ssub" : "sub";
    r.trace = std::move(s.found->second.trace);
    r.reduction = std::move(s.found->first);
  }
  return r;
}

namespace {

// Reduction search restricted to subsets of the minimal-merge set.
std::optional<CandidateReduction> bottom_reduction(
    const Distribution& d, const GenerateOptions& opts,
    std::size_t* validations) {
  std::vector<Distribution> bottom;
  GenerateResult pre = refute_or_bottom(d, bottom);
  if (pre.status == GenerateStatus::NoReduction) return std::nullopt;
  Search s(d, opts);
  s.pool = &bottom;
  try {
    s.run();
    if (!s.found) s.submit(bottom);
  } catch (const BudgetOut&) {
  }
  *validations += s.validations;
  if (!s.found) return std::nullopt;
  return std::move(s.found->first);
}

}  // namespace

GenerateResult recursive_generate(const Distribution& d,
                                  const GenerateOptions& opts) {
  std::vector<Distribution> bottom;
  GenerateResult r = refute_or_bottom(d, bottom);
  if (r.status == GenerateStatus::NoReduction) return r;
  r = {GenerateStatus::Exhausted, std::nullopt, std::nullopt, "", 0};

  auto start = bottom_reduction(d, opts, &r.candidates_tested);
  if (!start) return r;

  std::vector<Distribution> current = start->members();
  std::set<std::vector<Distribution>> visited{current};
  bool changed = true;
  while (changed) {
    changed = false;
    for (std::size_t i = 0; i < current.size(); ++i) {
      const Distribution& m = current[i];
      if (m.size() < 3) continue;
      auto sub = bottom_reduction(m, opts, &r.candidates_tested);
      if (!sub) continue;
      std::vector<Distribution> next;
      for (std::size_t j = 0; j < current.size(); ++j)
        if (j != i) next.push_back(current[j]);
      next.insert(next.end(), sub->members().begin(), sub->members().end());
      next = keep_minimal(std::move(next));
      if (!visited.insert(next).second) continue;
      current = std::move(next);
      changed = true;
      break;
    }
  }
  r.status = GenerateStatus::Found;
  r.mechanism = "recursive";
  r.reduction.emplace(CandidateReduction::Unchecked{}, d, current);
  return r;
}

std::vector<std::pair<CandidateReduction, Dimension>> collect_all_validated(
    const Distribution& d, const GenerateOptions& opts) {
  std::vector<Distribution> bottom;
  GenerateResult pre = refute_or_bottom(d, bottom);
  if (pre.status == GenerateStatus::NoReduction) return {};
  Search s(d, opts);
  s.collect_all = true;
  try {
    s.run();
    s.submit(bottom);
  } catch (const BudgetOut&) {
  }
  std::sort(s.collected.begin(), s.collected.end(),
            [](const auto& a, const auto& b) {
              int c = compare_optimality(a.second, b.second);
              if (c != 0) return c < 0;
              return a.first < b.first;
            });
  return s.collected;
}

}  // namespace distred
