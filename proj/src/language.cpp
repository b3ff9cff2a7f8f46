#include "distred/language.hpp"

#include <algorithm>
#include <deque>
#include <map>

#include "distred/errors.hpp"

namespace distred {

namespace {

void check_cap(std::size_t count, std::size_t cap) {
  if (count > cap)
    throw Error(ErrorCode::CapacityExceeded,
                "word count exceeds the materialization cap");
}

void shuffle_rec(const Word& a, const Word& b, std::size_t i, std::size_t j,
                 Word& prefix, std::set<Word>& out, std::size_t cap) {
  if (i == a.size() && j == b.size()) {
    out.insert(prefix);
    check_cap(out.size(), cap);
    return;
  }
  if (i < a.size()) {
    prefix.push_back(a[i]);
    shuffle_rec(a, b, i + 1, j, prefix, out, cap);
    prefix.pop_back();
  }
  if (j < b.size()) {
    prefix.push_back(b[j]);
    shuffle_rec(a, b, i, j + 1, prefix, out, cap);
    prefix.pop_back();
  }
}

}  // namespace

std::set<Word> shuffle(const Word& a, const Word& b, std::size_t word_cap) {
  std::set<Word> out;
  Word prefix;
  prefix.reserve(a.size() + b.size());
  shuffle_rec(a, b, 0, 0, prefix, out, word_cap);
  return out;
}

Word project(const Word& w, Mask target) {
  Word out;
  for (Symbol s : w)
    if (mask_contains(target, s)) out.push_back(s);
  return out;
}

FiniteLanguage project_language(const FiniteLanguage& l, Mask target) {
  std::set<Word> out;
  for (const Word& w : l.words) out.insert(project(w, target));
  return FiniteLanguage(l.alphabet, std::move(out));
}

FiniteLanguage sync_product(
    const Alphabet& alphabet,
    const std::vector<std::pair<Mask, std::set<Word>>>& components,
    std::size_t word_cap) {
  Mask covered = 0;
  for (const auto& [mask, words] : components) {
    if (mask == 0 || (mask & ~alphabet.universe()))
      throw Error(ErrorCode::AlphabetMismatch,
                  "component alphabet is not a sub-alphabet");
    covered |= mask;
  }
  if (covered != alphabet.universe())
    throw Error(ErrorCode::NotCovering,
                "component alphabets do not cover the alphabet");

  // Per component: the set of prefixes of its words, for pruning, and a
  // length bound. Any product word w satisfies |w| <= sum of component
  // maxima because every position projects into at least one component.
  std::vector<std::set<Word>> prefixes(components.size());
  std::size_t max_len = 0;
  std::size_t budget = word_cap;
  for (std::size_t i = 0; i < components.size(); ++i) {
    std::size_t longest = 0;
    for (const Word& w : components[i].second) {
      longest = std::max(longest, w.size());
      for (std::size_t k = 0; k <= w.size(); ++k) {
        prefixes[i].insert(Word(w.begin(), w.begin() + k));
        check_cap(prefixes[i].size(), budget);
      }
    }
    max_len += longest;
  }

  std::set<Word> out;
  std::size_t explored = 0;
  // State: current prefix plus its projection onto every component.
  std::vector<Word> proj(components.size());
  Word prefix;
  auto accepts = [&] {
    for (std::size_t i = 0; i < components.size(); ++i)
      if (!components[i].second.count(proj[i])) return false;
    return true;
  };
  std::function<void()> rec = [&] {
    check_cap(++explored, budget);
    if (accepts()) {
      out.insert(prefix);
      check_cap(out.size(), budget);
    }
    if (prefix.size() == max_len) return;
    for (Symbol s = 0; s < static_cast<Symbol>(alphabet.size()); ++s) {
      bool viable = true;
      std::vector<std::size_t> extended;
      for (std::size_t i = 0; i < components.size(); ++i) {
        if (!mask_contains(components[i].first, s)) continue;
        proj[i].push_back(s);
        extended.push_back(i);
        if (!prefixes[i].count(proj[i])) {
          viable = false;
          break;
        }
      }
      if (viable) {
        prefix.push_back(s);
        rec();
        prefix.pop_back();
      }
      for (std::size_t i : extended) proj[i].pop_back();
    }
  };
  rec();
  return FiniteLanguage(alphabet, std::move(out));
}

FiniteLanguage decomposition_closure(const FiniteLanguage& l,
                                     const Distribution& d,
                                     std::size_t word_cap) {
  if (l.alphabet != d.alphabet())
    throw Error(ErrorCode::AlphabetMismatch,
                "language and distribution alphabets differ");
  std::vector<std::pair<Mask, std::set<Word>>> components;
  for (Mask p : d.parts())
    components.emplace_back(p, project_language(l, p).words);
  return sync_product(l.alphabet, components, word_cap);
}

bool is_decomposable(const FiniteLanguage& l, const Distribution& d,
                     std::size_t word_cap) {
  return decomposition_closure(l, d, word_cap).words == l.words;
}

FiniteLanguage trace_closure(const FiniteLanguage& l,
                             const std::vector<Mask>& indep,
                             std::size_t word_cap) {
  std::set<Word> out = l.words;
  std::deque<Word> queue(out.begin(), out.end());
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!mask_contains(indep[w[i]], w[i + 1])) continue;
      std::swap(w[i], w[i + 1]);
      if (out.insert(w).second) {
        check_cap(out.size(), word_cap);
        queue.push_back(w);
      }
      std::swap(w[i], w[i + 1]);
    }
  }
  return FiniteLanguage(l.alphabet, std::move(out));
}

bool is_trace_closed(const FiniteLanguage& l, const std::vector<Mask>& indep,
                     std::size_t word_cap) {
  return trace_closure(l, indep, word_cap).words == l.words;
}

bool trace_equivalent(const Word& a, const Word& b,
                      const std::vector<Mask>& indep, std::size_t word_cap) {
  if (a.size() != b.size()) return false;
  if (a == b) return true;
  std::set<Word> seen{a};
  std::deque<Word> queue{a};
  while (!queue.empty()) {
    Word w = std::move(queue.front());
    queue.pop_front();
    for (std::size_t i = 0; i + 1 < w.size(); ++i) {
      if (!mask_contains(indep[w[i]], w[i + 1])) continue;
      std::swap(w[i], w[i + 1]);
      if (w == b) return true;
      if (seen.insert(w).second) {
        check_cap(seen.size(), word_cap);
        queue.push_back(w);
      }
      std::swap(w[i], w[i + 1]);
    }
  }
  return false;
}

}  // namespace distred
