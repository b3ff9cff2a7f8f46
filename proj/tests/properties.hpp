#pragma once

// Property suites shared by the unit runner (reduced sizes) and the
// acceptance runner (full sizes). Every function returns a violation count;
// zero means the property held on every sample.

#include <random>
#include <vector>

#include "distred/candidate.hpp"
#include "distred/language.hpp"
#include "distred/lcand.hpp"
#include "distred/structural.hpp"
#include "distred/substitution.hpp"
#include "support.hpp"

namespace props {

using namespace distred;

// Lattice laws and agreement with the brute-force bound scan on the poset of
// all distributions of the alphabet. `triples` additionally checks
// associativity over that many sampled triples (all of them when 0 and the
// poset is small).
inline std::size_t lattice_sigma_violations(const Alphabet& a,
                                            std::size_t triples,
                                            std::mt19937& rng) {
  std::size_t bad = 0;
  auto all = ts::all_distributions(a);
  for (const auto& x : all) {
    if (meet(x, x) != x || join(x, x) != x) ++bad;
  }
  for (std::size_t i = 0; i < all.size(); ++i) {
    for (std::size_t j = i; j < all.size(); ++j) {
      const auto& x = all[i];
      const auto& y = all[j];
      Distribution m = meet(x, y);
      Distribution jn = join(x, y);
      if (m != meet(y, x) || jn != join(y, x)) ++bad;
      const Distribution* bm = ts::brute_glb(all, x, y);
      const Distribution* bj = ts::brute_lub(all, x, y);
      if (!bm || *bm != m) ++bad;
      if (!bj || *bj != jn) ++bad;
      // Absorption and the order characterization.
      if (meet(x, jn) != x || join(x, m) != x) ++bad;
      bool le = leq_sigma(x, y);
      if (le != (m == x) || le != (jn == y)) ++bad;
    }
  }
  std::size_t n = all.size();
  std::size_t total = n * n * n;
  bool exhaustive = triples == 0 && total <= 200'000;
  std::size_t count = exhaustive ? total : triples;
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t i, j, k;
    if (exhaustive) {
      i = t % n;
      j = (t / n) % n;
      k = t / (n * n);
    } else {
      i = rng() % n;
      j = rng() % n;
      k = rng() % n;
    }
    const auto& x = all[i];
    const auto& y = all[j];
    const auto& z = all[k];
    if (meet(meet(x, y), z) != meet(x, meet(y, z))) ++bad;
    if (join(join(x, y), z) != join(x, join(y, z))) ++bad;
  }
  return bad;
}

// Candidate lattice over one source: enumerate the antichains of M(d) and
// check cr_meet / cr_join against a brute bound scan under leq_delta.
inline std::size_t lattice_delta_violations(const Distribution& d,
                                            std::size_t max_pairs,
                                            std::mt19937& rng) {
  auto merges = all_merges(d);
  std::vector<CandidateReduction> space;
  std::vector<Distribution> chosen;
  bool truncated = false;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (space.size() > 4000) {
      truncated = true;
      return;
    }
    if (i == merges.size()) {
      space.emplace_back(CandidateReduction::Unchecked{}, d, chosen);
      return;
    }
    rec(i + 1);
    for (const auto& c : chosen)
      if (!incomparable_sigma(c, merges[i])) return;
    chosen.push_back(merges[i]);
    rec(i + 1);
    chosen.pop_back();
  };
  rec(0);

  auto glb = [&](const CandidateReduction& x, const CandidateReduction& y)
      -> const CandidateReduction* {
    const CandidateReduction* best = nullptr;
    for (const auto& c : space) {
      if (!leq_delta(c, x) || !leq_delta(c, y)) continue;
      if (!best || leq_delta(*best, c)) best = &c;
    }
    if (!best) return nullptr;
    for (const auto& c : space)
      if (leq_delta(c, x) && leq_delta(c, y) && !leq_delta(c, *best))
        return nullptr;
    return best;
  };
  auto lub = [&](const CandidateReduction& x, const CandidateReduction& y)
      -> const CandidateReduction* {
    const CandidateReduction* best = nullptr;
    for (const auto& c : space) {
      if (!leq_delta(x, c) || !leq_delta(y, c)) continue;
      if (!best || leq_delta(c, *best)) best = &c;
    }
    if (!best) return nullptr;
    for (const auto& c : space)
      if (leq_delta(x, c) && leq_delta(y, c) && !leq_delta(*best, c))
        return nullptr;
    return best;
  };

  std::size_t bad = 0;
  std::size_t n = space.size();
  bool exhaustive = n * n <= max_pairs;
  std::size_t count = exhaustive ? n * n : max_pairs;
  for (std::size_t t = 0; t < count; ++t) {
    std::size_t i = exhaustive ? t % n : rng() % n;
    std::size_t j = exhaustive ? t / n : rng() % n;
    const auto& x = space[i];
    const auto& y = space[j];
    CandidateReduction m = cr_meet(x, y);
    CandidateReduction jn = cr_join(x, y);
    if (!leq_delta(m, x) || !leq_delta(m, y)) ++bad;
    if (!leq_delta(x, jn) || !leq_delta(y, jn)) ++bad;
    if (!truncated) {
      // With the full antichain space enumerated, the brute scan is exact.
      const CandidateReduction* bm = glb(x, y);
      const CandidateReduction* bj = lub(x, y);
      if (!bm || !(*bm == m)) ++bad;
      if (!bj || !(*bj == jn)) ++bad;
    }
  }
  return bad;
}

// The independence relation of a meet is the union of the members'.
inline std::size_t independence_union_violations(std::size_t pairs,
                                                 std::mt19937& rng) {
  std::size_t bad = 0;
  for (std::size_t t = 0; t < pairs; ++t) {
    Alphabet a = ts::al(std::string("abcdef").substr(0, 3 + t % 4));
    Distribution x = ts::rand_dist(rng, a, 2);
    Distribution y = ts::rand_dist(rng, a, 2);
    auto im = independence(meet(x, y));
    auto ix = independence(x);
    auto iy = independence(y);
    for (std::size_t s = 0; s < a.size(); ++s)
      if (im[s] != (ix[s] | iy[s])) ++bad;
  }
  return bad;
}

// Meet equals a common refinement exactly when part-coverage of every
// sub-alphabet of two or more symbols transfers both ways.
inline std::size_t meet_characterization_violations(
    const Distribution& d, const Distribution& d1, const Distribution& d2) {
  if (!leq_sigma(d, d1) || !leq_sigma(d, d2)) return 0;  // premise unmet
  bool lhs = meet(d1, d2) == d;
  bool rhs = true;
  for (Mask s = 1; s <= d.alphabet().universe(); ++s) {
    if (mask_size(s) < 2) continue;
    bool both = covered_by(s, d1) && covered_by(s, d2);
    if (both != covered_by(s, d)) {
      rhs = false;
      break;
    }
  }
  return lhs == rhs ? 0 : 1;
}

inline std::size_t meet_characterization_exhaustive(const Alphabet& a) {
  auto all = ts::all_distributions(a);
  std::size_t n = all.size();
  std::map<Distribution, std::size_t> idx;
  for (std::size_t i = 0; i < n; ++i) idx.emplace(all[i], i);

  // cov[i] bit s set iff mask s fits in a part of all[i]; restricted to
  // sub-alphabets of two or more symbols.
  std::vector<std::uint64_t> cov(n, 0);
  Mask universe = a.universe();
  for (std::size_t i = 0; i < n; ++i)
    for (Mask s = 1; s <= universe; ++s)
      if (mask_size(s) >= 2 && covered_by(s, all[i]))
        cov[i] |= std::uint64_t{1} << s;

  std::vector<std::vector<bool>> le(n, std::vector<bool>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) le[i][j] = leq_sigma(all[i], all[j]);

  std::size_t bad = 0;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      std::size_t m = idx.at(meet(all[i], all[j]));
      std::uint64_t both = cov[i] & cov[j];
      for (std::size_t k = 0; k < n; ++k) {
        if (!le[k][i] || !le[k][j]) continue;  // premise: d below both
        bool lhs = m == k;
        bool rhs = both == cov[k];
        if (lhs != rhs) ++bad;
      }
    }
  }
  return bad;
}

// Same biconditional with the upper pair drawn from the merge set, viable at
// five symbols where the full triple space is not.
inline std::size_t meet_characterization_merge_pairs(std::size_t samples,
                                                     std::mt19937& rng) {
  std::size_t bad = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    Alphabet a = ts::al("abcde");
    Distribution d = ts::rand_dist(rng, a, 3);
    auto merges = all_merges(d);
    if (merges.size() < 2) continue;
    for (std::size_t reps = 0; reps < 4; ++reps) {
      const auto& d1 = merges[rng() % merges.size()];
      const auto& d2 = merges[rng() % merges.size()];
      bad += meet_characterization_violations(d, d1, d2);
    }
  }
  return bad;
}

// The counterexample template is trace-closed and never decomposable with
// respect to its own source.
inline std::size_t template_violations(std::size_t samples,
                                       std::mt19937& rng) {
  std::size_t bad = 0;
  std::size_t done = 0;
  for (std::size_t t = 0; done < samples && t < samples * 4; ++t) {
    Alphabet a = ts::al(std::string("abcd").substr(0, 3 + t % 2));
    Distribution d = ts::rand_dist(rng, a, 2);
    ParikhUnion l = build_lcand(d);
    if (parikh_decomposable(l, d)) ++bad;
    try {
      FiniteLanguage words = materialize(l);
      if (!is_trace_closed(words, independence(d))) ++bad;
      if (is_decomposable(words, d)) ++bad;
      ++done;
    } catch (const Error&) {
      // Materialized form blew the word cap; the symbolic check above still
      // ran, but the sample does not count toward the word-level quota.
    }
  }
  return bad;
}

// Path and extent rules are sound with respect to the exact oracle.
inline std::size_t structural_soundness_violations(std::size_t samples,
                                                   std::mt19937& rng) {
  std::size_t bad = 0;
  for (std::size_t t = 0; t < samples; ++t) {
    Alphabet a = ts::al(std::string("abcdefg").substr(0, 4 + t % 4));
    Distribution d = ts::rand_dist(rng, a, 2);
    ParikhUnion l = build_lcand(d);
    for (const auto& m : all_merges(d)) {
      bool c3 = corollary3_decomposable(m, d);
      bool t7 = theorem7_decomposable(m, d);
      bool aa = appendixA_decomposable(m, d);
      if (c3 && !t7) ++bad;
      if (t7 && !aa) ++bad;
      if (aa && !parikh_decomposable(l, m)) ++bad;
    }
  }
  return bad;
}

// Substitution preserves decomposability: a language decomposable with
// respect to both operands stays decomposable for the substituted result.
inline std::size_t substitution_soundness_violations(std::size_t samples,
                                                     std::mt19937& rng) {
  std::size_t bad = 0;
  std::size_t done = 0;
  std::size_t attempts = 0;
  while (done < samples && attempts < samples * 20) {
    ++attempts;
    Alphabet a = ts::al("abcd");
    Distribution d1 = ts::rand_dist(rng, a, 2);
    Distribution d2 = ts::rand_dist(rng, a, 2);
    bool any_sub = false;
    for (std::size_t i = 0; i < d1.size() && !any_sub; ++i)
      if (substitutable(d2, d1, i)) any_sub = true;
    for (std::size_t i = 0; i < d2.size() && !any_sub; ++i)
      if (substitutable(d1, d2, i)) any_sub = true;
    if (!any_sub) continue;

    // Random seed language, closed with respect to both distributions.
    std::set<Word> words;
    std::uniform_int_distribution<int> len(1, 4);
    std::uniform_int_distribution<int> sym(0, static_cast<int>(a.size()) - 1);
    for (int w = 0; w < 3; ++w) {
      Word word;
      for (int k = len(rng); k > 0; --k) word.push_back(sym(rng));
      words.insert(std::move(word));
    }
    FiniteLanguage l(a, std::move(words));
    bool ok = true;
    try {
      for (int rounds = 0; rounds < 16; ++rounds) {
        FiniteLanguage next =
            decomposition_closure(decomposition_closure(l, d1, 200'000), d2,
                                  200'000);
        if (next.words == l.words) break;
        l = std::move(next);
        if (rounds == 15) ok = false;  // did not settle; skip the sample
      }
    } catch (const Error&) {
      ok = false;
    }
    if (!ok || !is_decomposable(l, d1) || !is_decomposable(l, d2)) continue;

    ++done;
    auto check_dir = [&](const Distribution& left, const Distribution& right) {
      for (std::size_t i = 0; i < right.size(); ++i) {
        if (!substitutable(left, right, i)) continue;
        try {
          if (!is_decomposable(l, substitute(left, right, i), 200'000)) ++bad;
        } catch (const Error&) {
          // Capacity on a pathological sample is a skip, not a violation.
        }
      }
    };
    check_dir(d2, d1);
    check_dir(d1, d2);
  }
  return bad;
}

}  // namespace props
