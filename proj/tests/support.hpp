#pragma once

// Shared helpers for the test suites: compact constructors and brute-force
// oracles kept independent of the library's own algorithms.

#include <random>
#include <string>
#include <vector>

#include "distred/distribution.hpp"

namespace ts {

using namespace distred;

// One-character symbol names: al("abc") is the alphabet {a, b, c}.
inline Alphabet al(const std::string& letters) {
  std::vector<std::string> names;
  for (char c : letters) names.emplace_back(1, c);
  return Alphabet(std::move(names));
}

inline Mask pm(const Alphabet& a, const std::string& part) {
  Mask m = 0;
  for (char c : part) {
    auto idx = a.index(std::string(1, c));
    if (!idx) throw std::runtime_error("bad symbol in test");
    m |= mask_of(*idx);
  }
  return m;
}

// dist(a, "ab|bc|cd")
inline Distribution dist(const Alphabet& a, const std::string& spec) {
  std::vector<Mask> parts;
  std::string cur;
  for (char c : spec + "|") {
    if (c == '|') {
      parts.push_back(pm(a, cur));
      cur.clear();
    } else {
      cur += c;
    }
  }
  return Distribution(a, std::move(parts));
}

inline Distribution dist(const std::string& letters, const std::string& spec) {
  return dist(al(letters), spec);
}

// ring(n): n symbols, part i = {s_i, s_{i+1 mod n}}.
inline Distribution ring(int n) {
  std::vector<std::string> names;
  for (int i = 0; i < n; ++i) names.push_back(std::string(1, 'a' + i));
  Alphabet a(std::move(names));
  std::vector<Mask> parts;
  for (int i = 0; i < n; ++i)
    parts.push_back(mask_of(i) | mask_of((i + 1) % n));
  return Distribution(a, std::move(parts));
}

// All distributions of the alphabet: covering antichains of non-empty
// sub-alphabets, by direct recursive enumeration.
inline std::vector<Distribution> all_distributions(const Alphabet& a) {
  std::vector<Mask> masks;
  for (Mask m = 1; m <= a.universe(); ++m) masks.push_back(m);
  std::vector<Distribution> out;
  std::vector<Mask> chosen;
  std::function<void(std::size_t, Mask)> rec = [&](std::size_t i,
                                                   Mask covered) {
    if (i == masks.size()) {
      if (covered == a.universe() && !chosen.empty())
        out.emplace_back(a, chosen);
      return;
    }
    rec(i + 1, covered);
    Mask m = masks[i];
    for (Mask c : chosen)
      if ((c & m) == c || (c & m) == m) return;  // comparable; prune branch
    chosen.push_back(m);
    rec(i + 1, covered | m);
    chosen.pop_back();
  };
  rec(0, 0);
  return out;
}

// Random distribution with pairwise incomparable covering parts.
inline Distribution rand_dist(std::mt19937& rng, const Alphabet& a,
                              int min_parts = 2) {
  std::uniform_int_distribution<Mask> pick(1, a.universe());
  for (;;) {
    std::vector<Mask> parts;
    int target = min_parts + static_cast<int>(rng() % 3);
    for (int tries = 0; tries < 200 && static_cast<int>(parts.size()) < target;
         ++tries) {
      Mask m = pick(rng) & a.universe();
      if (m == 0 || m == a.universe()) continue;
      bool ok = true;
      for (Mask p : parts)
        if ((p & m) == p || (p & m) == m) {
          ok = false;
          break;
        }
      if (ok) parts.push_back(m);
    }
    if (static_cast<int>(parts.size()) < min_parts) continue;
    Mask covered = 0;
    for (Mask p : parts) covered |= p;
    if (covered != a.universe()) {
      Mask rest = a.universe() & ~covered;
      bool ok = true;
      for (Mask p : parts)
        if ((p & rest) == p) ok = false;  // would swallow an existing part
      Mask cand = rest;
      for (Mask p : parts)
        if ((p & cand) == cand) ok = false;
      if (!ok) continue;
      parts.push_back(cand);
    }
    try {
      return Distribution(a, std::move(parts));
    } catch (const Error&) {
      continue;
    }
  }
}

// Greatest lower bound by scanning the whole poset; null when absent.
inline const Distribution* brute_glb(const std::vector<Distribution>& all,
                                     const Distribution& x,
                                     const Distribution& y) {
  const Distribution* best = nullptr;
  for (const auto& c : all) {
    if (!leq_sigma(c, x) || !leq_sigma(c, y)) continue;
    if (!best || leq_sigma(*best, c)) best = &c;
  }
  if (!best) return nullptr;
  // Must dominate every common lower bound.
  for (const auto& c : all)
    if (leq_sigma(c, x) && leq_sigma(c, y) && !leq_sigma(c, *best))
      return nullptr;
  return best;
}

inline const Distribution* brute_lub(const std::vector<Distribution>& all,
                                     const Distribution& x,
                                     const Distribution& y) {
  const Distribution* best = nullptr;
  for (const auto& c : all) {
    if (!leq_sigma(x, c) || !leq_sigma(y, c)) continue;
    if (!best || leq_sigma(c, *best)) best = &c;
  }
  if (!best) return nullptr;
  for (const auto& c : all)
    if (leq_sigma(x, c) && leq_sigma(y, c) && !leq_sigma(*best, c))
      return nullptr;
  return best;
}

}  // namespace ts
