#include <doctest.h>

#include <algorithm>
#include <set>

#include "distred/generator.hpp"
#include "support.hpp"

using namespace distred;
using ts::dist;
using ts::ring;

namespace {

const char* kAbcdef = "abcdef";

Distribution ex1() { return dist(kAbcdef, "ab|bc|de|ef"); }

Distribution triangles() { return dist(kAbcdef, "ab|ac|bc|de|df|ef"); }

}  // namespace

TEST_CASE("cover_constraint") {
  Distribution d = triangles();
  Alphabet a = d.alphabet();
  // Parts in canonical order: [ab, ac, bc, de, df, ef].
  CoverConstraint c = cover_constraint(d, ts::pm(a, "abc"));
  CHECK(c.target == ts::pm(a, "abc"));
  // Any two of the first three parts cover {a,b,c}; no single part does.
  std::set<IndexSet> got(c.covers.begin(), c.covers.end());
  CHECK(got == std::set<IndexSet>{0b011, 0b101, 0b110});
}

TEST_CASE("separating_merges on the chain") {
  Distribution d = dist("abcde", "ab|bc|cd|de");
  Alphabet a = d.alphabet();
  Symbol sa = a.index("a").value(), sc = a.index("c").value();
  Symbol sb = a.index("b").value(), sd = a.index("d").value();
  Symbol se = a.index("e").value();

  auto m_ae = separating_merges(d, sa, se, 2);
  std::set<Distribution> got_ae(m_ae.begin(), m_ae.end());
  CHECK(got_ae == std::set<Distribution>{
                      dist("abcde", "ab|bcde"), dist("abcde", "abc|cde"),
                      dist("abcde", "abcd|bcde"), dist("abcde", "abcd|de")});

  auto m_ac = separating_merges(d, sa, sc, 2);
  std::set<Distribution> got_ac(m_ac.begin(), m_ac.end());
  CHECK(got_ac == std::set<Distribution>{dist("abcde", "ab|bcde"),
                                         dist("abcde", "abde|bcd")});

  auto m_bd = separating_merges(d, sb, sd, 2);
  REQUIRE(m_bd.size() == 1);
  CHECK(m_bd[0] == dist("abcde", "abc|cde"));

  // Ordering: sizes never decrease.
  auto m3 = separating_merges(d, sa, se, 3);
  for (std::size_t i = 1; i < m3.size(); ++i)
    CHECK(m3[i - 1].size() <= m3[i].size());
}

TEST_CASE("breaking_merges") {
  Distribution d = triangles();
  Alphabet a = d.alphabet();
  CoverConstraint c = cover_constraint(d, ts::pm(a, "abc"));
  auto ms = breaking_merges(d, c, 4);
  for (const auto& m : ms)
    for (Mask p : m.parts())
      CHECK((p & ts::pm(a, "abc")) != ts::pm(a, "abc"));
  CHECK(std::count(ms.begin(), ms.end(),
                   dist(kAbcdef, "ab|ac|bc|def")) == 1);

  // An unbreakable target yields nothing.
  Distribution chain = dist("abcd", "ab|bc|cd");
  CoverConstraint cb = cover_constraint(chain, ts::pm(chain.alphabet(), "b"));
  CHECK(breaking_merges(chain, cb, 3).empty());
}

TEST_CASE("breaking a pair agrees with separating it") {
  std::mt19937 rng(7);
  for (int it = 0; it < 25; ++it) {
    Alphabet a = ts::al(std::string("abcdef").substr(0, 4 + it % 2));
    Distribution d = ts::rand_dist(rng, a, 3);
    auto edges = independence_edges(d);
    if (edges.empty()) continue;
    auto [s1, s2] = edges[it % edges.size()];
    CoverConstraint c = cover_constraint(d, mask_of(s1) | mask_of(s2));
    CHECK(separating_merges(d, s1, s2, d.size()) ==
          breaking_merges(d, c, d.size()));
  }
}

TEST_CASE("incremental generation finds width-2 reductions") {
  GenerateResult r = incremental_generate(ex1());
  CHECK(r.status == GenerateStatus::Found);
  REQUIRE(r.reduction.has_value());
  CHECK(r.reduction->dimension().width == 2);
  CHECK(verify_reduction(ex1(), *r.reduction).outcome ==
        Outcome::ValidReduction);
  CHECK((r.mechanism == "sub" || r.mechanism == "ssub"));
  CHECK(r.candidates_tested > 0);
}

TEST_CASE("incremental generation on the two triangles") {
  GenerateResult r = incremental_generate(triangles());
  CHECK(r.status == GenerateStatus::Found);
  REQUIRE(r.reduction.has_value());
  CHECK(verify_reduction(triangles(), *r.reduction).outcome ==
        Outcome::ValidReduction);
}

TEST_CASE("generation short-circuits on refuted existence") {
  GenerateResult r5 = incremental_generate(ring(5));
  CHECK(r5.status == GenerateStatus::NoReduction);
  CHECK(r5.mechanism == "lcand");
  CHECK_FALSE(r5.reduction.has_value());

  GenerateResult r3 = incremental_generate(ring(3));
  CHECK(r3.status == GenerateStatus::NoReduction);
  CHECK(r3.mechanism == "bottom");

  GenerateResult rec5 = recursive_generate(ring(5));
  CHECK(rec5.status == GenerateStatus::NoReduction);
}

TEST_CASE("recursive generation") {
  GenerateResult r = recursive_generate(ex1());
  CHECK(r.status == GenerateStatus::Found);
  REQUIRE(r.reduction.has_value());
  CHECK(r.mechanism == "recursive");
  CHECK(verify_reduction(ex1(), *r.reduction).outcome ==
        Outcome::ValidReduction);

  GenerateResult t = recursive_generate(triangles());
  CHECK(t.status == GenerateStatus::Found);
  REQUIRE(t.reduction.has_value());
  CHECK(verify_reduction(triangles(), *t.reduction).outcome ==
        Outcome::ValidReduction);
}

TEST_CASE("collect_all_validated") {
  auto all = collect_all_validated(ex1());
  REQUIRE_FALSE(all.empty());
  CHECK(all.front().second == Dimension{2, 2});
  // Sorted best-first.
  for (std::size_t i = 1; i < all.size(); ++i)
    CHECK(compare_optimality(all[i - 1].second, all[i].second) <= 0);
  for (const auto& [cand, dim] : all) {
    CHECK(verify_reduction(ex1(), cand).outcome == Outcome::ValidReduction);
    CHECK(cand.dimension() == dim);
  }

  CHECK(collect_all_validated(ring(5)).empty());
}

TEST_CASE("progress events") {
  GenerateOptions opts;
  std::size_t events = 0;
  opts.progress = [&](const std::string& line) {
    CHECK_FALSE(line.empty());
    ++events;
  };
  incremental_generate(ex1(), opts);
  CHECK(events > 0);
}
