#include "distred/lcand.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "distred/errors.hpp"
#include "distred/structural.hpp"

namespace distred {

std::string ExponentVector::to_string(const Alphabet& a) const {
  std::ostringstream out;
  bool first = true;
  for (std::size_t s = 0; s < counts.size(); ++s) {
    if (counts[s] == 0) continue;
    if (!first) out << ' ';
    first = false;
    out << a.name(static_cast<Symbol>(s)) << '^' << counts[s];
  }
  return out.str();
}

ParikhUnion build_lcand(const Distribution& d) {
  std::size_t m = d.alphabet().size();
  ParikhUnion l{d.alphabet(), {}};
  for (std::size_t j = 0; j < d.size(); ++j) {
    ExponentVector v;
    v.counts.assign(m, static_cast<unsigned>(j + 2));
    for_each_symbol(d.parts()[j], [&](Symbol s) { v.counts[s] = 1; });
    l.classes.push_back(std::move(v));
  }
  return l;
}

namespace {

bool glue_rec(const ParikhUnion& l, const Distribution& dprime,
              std::size_t idx, std::vector<int>& assigned,
              ExponentVector* witness) {
  std::size_t m = l.alphabet.size();
  if (idx == dprime.size()) {
    ExponentVector glued;
    glued.counts.assign(m, 0);
    for (std::size_t i = 0; i < dprime.size(); ++i)
      for_each_symbol(dprime.parts()[i], [&](Symbol s) {
        glued.counts[s] = l.classes[assigned[i]].counts[s];
      });
    for (const auto& c : l.classes)
      if (c == glued) return true;
    if (witness) *witness = glued;
    return false;
  }
  Mask part = dprime.parts()[idx];
  for (std::size_t j = 0; j < l.classes.size(); ++j) {
    bool consistent = true;
    for (std::size_t prev = 0; prev < idx && consistent; ++prev) {
      Mask shared = part & dprime.parts()[prev];
      for_each_symbol(shared, [&](Symbol s) {
        if (l.classes[j].counts[s] != l.classes[assigned[prev]].counts[s])
          consistent = false;
      });
    }
    if (!consistent) continue;
    assigned[idx] = static_cast<int>(j);
    if (!glue_rec(l, dprime, idx + 1, assigned, witness)) return false;
  }
  return true;
}

}  // namespace

bool parikh_decomposable(const ParikhUnion& l, const Distribution& dprime,
                         ExponentVector* witness) {
  if (l.alphabet != dprime.alphabet())
    throw Error(ErrorCode::AlphabetMismatch,
                "class union and distribution alphabets differ");
  std::vector<int> assigned(dprime.size(), -1);
  return glue_rec(l, dprime, 0, assigned, witness);
}

namespace {

void words_of_class(const ExponentVector& v, std::set<Word>& out,
                    std::size_t cap) {
  std::vector<unsigned> remaining = v.counts;
  Word w;
  std::size_t total = 0;
  for (unsigned c : remaining) total += c;
  std::function<void()> rec = [&] {
    if (w.size() == total) {
      out.insert(w);
      if (out.size() > cap)
        throw Error(ErrorCode::CapacityExceeded,
                    "word count exceeds the materialization cap");
      return;
    }
    for (std::size_t s = 0; s < remaining.size(); ++s) {
      if (remaining[s] == 0) continue;
      --remaining[s];
      w.push_back(static_cast<Symbol>(s));
      rec();
      w.pop_back();
      ++remaining[s];
    }
  };
  rec();
}

}  // namespace

FiniteLanguage materialize(const ParikhUnion& l, std::size_t word_cap) {
  std::set<Word> out;
  for (const auto& c : l.classes) words_of_class(c, out, word_cap);
  return FiniteLanguage(l.alphabet, std::move(out));
}

std::optional<RefutationEvidence> refute_candidate(
    const CandidateReduction& p) {
  const Distribution& d = p.source();
  ParikhUnion l = build_lcand(d);
  RefutationEvidence ev;
  for (const Distribution& m : p.members()) {
    std::string method;
    if (theorem7_decomposable(m, d))
      method = "thm7";
    else if (appendixA_decomposable(m, d))
      method = "appendixA";
    else if (parikh_decomposable(l, m))
      method = "parikh";
    else
      return std::nullopt;
    ev.certificates.push_back({m, std::move(method)});
  }
  return ev;
}

}  // namespace distred
