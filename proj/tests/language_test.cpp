#include <doctest.h>

#include <set>

#include "distred/language.hpp"
#include "support.hpp"

using namespace distred;
using ts::al;
using ts::dist;
using ts::pm;

namespace {

Word w(const Alphabet& a, const std::string& s) {
  Word out;
  for (char c : s) out.push_back(a.index(std::string(1, c)).value());
  return out;
}

std::set<Word> ws(const Alphabet& a, std::initializer_list<const char*> lst) {
  std::set<Word> out;
  for (const char* s : lst) out.insert(w(a, s));
  return out;
}

}  // namespace

TEST_CASE("shuffle") {
  Alphabet a = al("ab");
  CHECK(shuffle(w(a, "a"), w(a, "bb")) == ws(a, {"abb", "bab", "bba"}));
  CHECK(shuffle(w(a, "ab"), w(a, "ab")) == ws(a, {"aabb", "abab"}));
  CHECK(shuffle(w(a, ""), w(a, "ab")) == ws(a, {"ab"}));
  CHECK(shuffle(w(a, ""), w(a, "")) == ws(a, {""}));
}

TEST_CASE("projection") {
  Alphabet a = al("abc");
  CHECK(project(w(a, "abcab"), pm(a, "ac")) == w(a, "aca"));
  CHECK(project(w(a, "bbb"), pm(a, "ac")) == w(a, ""));
  FiniteLanguage l(a, ws(a, {"abc", "cab"}));
  FiniteLanguage p = project_language(l, pm(a, "ab"));
  CHECK(p.words == ws(a, {"ab"}));
}

TEST_CASE("sync_product basics") {
  Alphabet a = al("abc");
  // L1 over {a,b}, L2 over {b,c}; product synchronizes on b.
  std::vector<std::pair<Mask, std::set<Word>>> comps{
      {pm(a, "ab"), ws(a, {"ab"})}, {pm(a, "bc"), ws(a, {"cb"})}};
  FiniteLanguage prod = sync_product(a, comps);
  CHECK(prod.words == ws(a, {"acb", "cab"}));

  // No common word when the shared symbol counts disagree.
  std::vector<std::pair<Mask, std::set<Word>>> comps2{
      {pm(a, "ab"), ws(a, {"b"})}, {pm(a, "bc"), ws(a, {"bb"})}};
  CHECK(sync_product(a, comps2).words.empty());
}

TEST_CASE("sync_product capacity guard") {
  Alphabet a = al("ab");
  // Independent components a^k and b^k explode combinatorially.
  std::string s1(12, 'a'), s2(12, 'b');
  std::vector<std::pair<Mask, std::set<Word>>> comps{
      {pm(a, "a"), {w(a, s1)}}, {pm(a, "b"), {w(a, s2)}}};
  try {
    sync_product(a, comps, 100);
    FAIL("expected CapacityExceeded");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::CapacityExceeded);
  }
}

TEST_CASE("decomposition closure and decomposability") {
  Alphabet a = al("abc");
  Distribution d = dist(a, "ab|bc");
  // {acb} is not decomposable: cab has the same projections.
  FiniteLanguage l(a, ws(a, {"acb"}));
  FiniteLanguage closure = decomposition_closure(l, d);
  CHECK(closure.words == ws(a, {"acb", "cab"}));
  CHECK_FALSE(is_decomposable(l, d));
  CHECK(is_decomposable(closure, d));

  // A language equal to its own product is decomposable.
  FiniteLanguage l2(a, ws(a, {"ab", "ba"}));
  CHECK(is_decomposable(l2, dist(a, "ab|c")));
}

TEST_CASE("trace closure") {
  Alphabet a = al("abc");
  Distribution d = dist(a, "ab|bc");  // a and c independent
  auto indep = independence(d);
  FiniteLanguage l(a, ws(a, {"acb"}));
  FiniteLanguage cl = trace_closure(l, indep);
  CHECK(cl.words == ws(a, {"acb", "cab"}));
  CHECK_FALSE(is_trace_closed(l, indep));
  CHECK(is_trace_closed(cl, indep));
  // abc has no adjacent independent pair, so it is alone in its class.
  CHECK(is_trace_closed(FiniteLanguage(a, ws(a, {"abc"})), indep));
  CHECK(trace_equivalent(w(a, "acb"), w(a, "cab"), indep));
  CHECK_FALSE(trace_equivalent(w(a, "abc"), w(a, "acb"), indep));
  CHECK_FALSE(trace_equivalent(w(a, "abc"), w(a, "ab"), indep));
}
