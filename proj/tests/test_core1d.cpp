#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <random>

#include "doctest.h"
#include "sfold/core1d.hpp"
#include "sfold/oracle.hpp"

using namespace sfold;

namespace {

Pattern1D pat(const char* text) { return parse_pattern1d(text); }

// All patterns with a given crease count, segment lengths drawn from
// `lens`, assignments drawn from `alpha`.
template <typename Fn>
void for_each_pattern(int n, const std::vector<Rat>& lens, const std::vector<Assignment>& alpha,
                      Fn&& fn) {
  std::vector<size_t> odo(2 * n + 1, 0);
  for (;;) {
    Pattern1D p;
    for (int i = 0; i <= n; ++i) p.segments.push_back(lens[odo[i]]);
    for (int i = 0; i < n; ++i) p.assignments.push_back(alpha[odo[n + 1 + i]]);
    fn(p);
    size_t pos = 0;
    for (; pos < odo.size(); ++pos) {
      size_t base = pos <= (size_t)n ? lens.size() : alpha.size();
      if (++odo[pos] < base) break;
      odo[pos] = 0;
    }
    if (pos == odo.size()) break;
  }
}

}  // namespace

TEST_CASE("comp complements assignments and fixes lengths") {
  CHECK(comp(Assignment::Mountain) == Assignment::Valley);
  CHECK(comp(Assignment::Valley) == Assignment::Mountain);
  CHECK(comp(Assignment::Unassigned) == Assignment::Unassigned);
  Symbol len = Rat(3);
  CHECK(comp(len) == len);
  // involution over every symbol kind
  for (Assignment a : {Assignment::Mountain, Assignment::Valley, Assignment::Unassigned})
    CHECK(comp(comp(a)) == a);
  CHECK(comp(comp(Symbol(Rat(5, 2)))) == Symbol(Rat(5, 2)));
}

TEST_CASE("1D parsing and formatting") {
  Pattern1D p = pat("1 M 2 V 3/2");
  CHECK(p.n() == 2);
  CHECK(p.segments == std::vector<Rat>{Rat(1), Rat(2), Rat(3, 2)});
  CHECK(p.assignments == std::vector<Assignment>{Assignment::Mountain, Assignment::Valley});
  CHECK(format_pattern1d(p) == "1 M 2 V 3/2");
  CHECK(parse_pattern1d(format_pattern1d(p)) == p);

  CHECK_THROWS_AS(pat("1 M"), ParseError);        // even token count
  CHECK_THROWS_AS(pat("0 M 1"), ParseError);      // zero segment
  CHECK_THROWS_AS(pat("1 X 1"), ParseError);      // bad assignment
  CHECK_THROWS_AS(pat("-1 M 1"), ParseError);     // negative segment
  CHECK_THROWS_AS(pat(""), ParseError);
  CHECK(pat("5").n() == 0);  // crease-free pattern is fine
}

TEST_CASE("symbol access matches the string encoding") {
  Pattern1D p = pat("1 M 2 V 3");
  CHECK(symbol_at(p, 1) == Symbol(Rat(1)));
  CHECK(symbol_at(p, 2) == Symbol(Assignment::Mountain));
  CHECK(symbol_at(p, 3) == Symbol(Rat(2)));
  CHECK(symbol_at(p, 4) == Symbol(Assignment::Valley));
  CHECK(symbol_at(p, 5) == Symbol(Rat(3)));
  CHECK_THROWS_AS(symbol_at(p, 0), IndexError);
  CHECK_THROWS_AS(symbol_at(p, 6), IndexError);
}

TEST_CASE("legal_fold_1d spec cases") {
  CHECK(legal_fold_1d(pat("1 U 1"), 1).legal());

  auto rep = legal_fold_1d(pat("2 M 1 M 2"), 1);
  CHECK_FALSE(rep.legal());
  CHECK_FALSE(rep.cond2);
  REQUIRE(rep.uncovered_point.has_value());
  CHECK(*rep.uncovered_point == Rat(1));  // crease at x=3 mirrors to x=1

  auto rep2 = legal_fold_1d(pat("1 M 1 U 1 M 1"), 2);
  CHECK_FALSE(rep2.legal());
  CHECK_FALSE(rep2.cond4);
  REQUIRE(rep2.conflict.has_value());
  CHECK(*rep2.conflict == std::make_pair(1, 3));
  CHECK(legal_fold_1d(pat("1 M 1 U 1 V 1"), 2).legal());

  CHECK_THROWS_AS(legal_fold_1d(pat("1 U 1"), 0), IndexError);
  CHECK_THROWS_AS(legal_fold_1d(pat("1 U 1"), 2), IndexError);
}

TEST_CASE("boundary ties are legal") {
  // mirror of a crease landing exactly on the paper edge
  CHECK(legal_fold_1d(pat("1 U 1 U 1"), 1).legal());   // crease 2 mirrors onto x=0
  // paper edge landing exactly on a crease
  CHECK(legal_fold_1d(pat("2 U 2 U 1"), 1).legal());   // left edge mirrors onto crease 2
}

TEST_CASE("apply_fold_1d spec cases") {
  CHECK(apply_fold_1d(pat("1 U 1 U 1"), 1) == pat("1 U 1"));
  CHECK(apply_fold_1d(pat("1 M 1"), 1) == pat("1"));
  CHECK(apply_fold_1d(pat("1 U 2 U 1"), 1) == pat("2 U 1"));
  CHECK_THROWS_AS(apply_fold_1d(pat("2 M 1 M 2"), 1), IllegalFoldError);
}

TEST_CASE("apply_fold_1d merges assignments onto unassigned creases") {
  // fold at the middle crease: M at distance 1 lands on a U crease and
  // stamps it with the flipped value
  Pattern1D p = pat("2 M 1 U 1 U 3");
  REQUIRE(legal_fold_1d(p, 2).legal());
  CHECK(apply_fold_1d(p, 2) == pat("1 V 3"));
  // assigned stationary creases keep their value
  Pattern1D q = pat("1 M 1 V 1");
  CHECK(apply_fold_1d(q, 1) == pat("1 V 1"));
}

TEST_CASE("apply_fold_1d folds the shorter side; ties move the left flap") {
  CHECK(apply_fold_1d(pat("2 U 1"), 1) == pat("2"));    // right flap shorter
  CHECK(apply_fold_1d(pat("1 U 2"), 1) == pat("2"));    // left flap shorter
  CHECK(apply_fold_1d(pat("1 U 1"), 1) == pat("1"));    // tie
}

TEST_CASE("leftmost_legal_fold spec cases") {
  auto r = leftmost_legal_fold(pat("1 U 2 U 1 U 2"));
  REQUIRE(r.has_value());
  CHECK(r->crease_index == 1);
  CHECK(r->side == Side::Left);

  CHECK_FALSE(leftmost_legal_fold(pat("2 U 1 U 3")).has_value());

  auto r2 = leftmost_legal_fold(pat("1 M 1 M 1"));
  REQUIRE(r2.has_value());
  CHECK(r2->crease_index == 1);
}

TEST_CASE("prefix scan matches the direct restricted scan exhaustively") {
  std::vector<Rat> lens{Rat(1), Rat(2)};
  std::vector<std::vector<Assignment>> regimes{
      {Assignment::Unassigned}, {Assignment::Mountain, Assignment::Valley}};
  for (int n = 0; n <= 6; ++n)
    for (auto& alpha : regimes)
      for_each_pattern(n, lens, alpha, [&](const Pattern1D& p) {
        CAPTURE(format_pattern1d(p));
        CHECK(leftmost_prefix_fold(p) == naive_leftmost_prefix_fold(p));
      });
}

TEST_CASE("decide_1d spec cases") {
  Pattern1D accordion;
  accordion.segments.assign(7, Rat(1));
  accordion.assignments.assign(6, Assignment::Unassigned);
  auto d = decide_1d(accordion);
  CHECK(d.foldable);
  CHECK(verify_witness(accordion, d.witness).ok);

  CHECK_FALSE(decide_1d(pat("2 M 1 M 2")).foldable);

  auto trivial = decide_1d(pat("5"));
  CHECK(trivial.foldable);
  CHECK(trivial.witness.empty());

  CHECK_THROWS_AS(decide_1d(pat("1 M 1 U 1")), UnsupportedPartialAssignment);
}

TEST_CASE("decide_1d is reversal symmetric") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + (int)(rng() % 9);
    Pattern1D p;
    bool assigned = rng() & 1;
    for (int i = 0; i <= n; ++i) p.segments.push_back(Rat(1 + (long long)(rng() % 3)));
    for (int i = 0; i < n; ++i)
      p.assignments.push_back(assigned ? (rng() & 1 ? Assignment::Mountain : Assignment::Valley)
                                       : Assignment::Unassigned);
    CAPTURE(format_pattern1d(p));
    CHECK(decide_1d(p).foldable == decide_1d(p.reversed()).foldable);
  }
}

TEST_CASE("decide_1d agrees with the rescanning baseline on random input") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 500; ++trial) {
    int n = 1 + (int)(rng() % 10);
    Pattern1D p;
    bool assigned = rng() & 1;
    for (int i = 0; i <= n; ++i) p.segments.push_back(Rat(1 + (long long)(rng() % 2)));
    for (int i = 0; i < n; ++i)
      p.assignments.push_back(assigned ? (rng() & 1 ? Assignment::Mountain : Assignment::Valley)
                                       : Assignment::Unassigned);
    CAPTURE(format_pattern1d(p));
    Decision1D fast = decide_1d(p);
    Decision1D slow = naive_decide_1d(p);
    CHECK(fast.foldable == slow.foldable);
    if (fast.foldable) {
      CHECK(verify_witness(p, fast.witness).ok);
      CHECK(verify_witness(p, slow.witness).ok);
    }
  }
}

TEST_CASE("rational arithmetic in patterns") {
  Pattern1D p = pat("1/2 U 1/2");
  CHECK(decide_1d(p).foldable);
  CHECK(p.total() == Rat(1));
  CHECK(p.position(1) == Rat(1, 2));
  // mixed denominators still compare exactly
  Pattern1D q = pat("1/3 U 2/6");
  CHECK(q.segments[0] == q.segments[1]);
}

TEST_CASE("fold strictly decreases the crease count") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 300; ++trial) {
    int n = 1 + (int)(rng() % 8);
    Pattern1D p;
    for (int i = 0; i <= n; ++i) p.segments.push_back(Rat(1 + (long long)(rng() % 2)));
    for (int i = 0; i < n; ++i)
      p.assignments.push_back((Assignment)(rng() % 3));
    for (int c = 1; c <= p.n(); ++c) {
      if (!legal_fold_1d(p, c).legal()) continue;
      Pattern1D folded = apply_fold_1d(p, c);
      CHECK(folded.n() < p.n());
      CHECK(folded.total() <= p.total());
    }
  }
}

TEST_CASE("greedy safety: the first bidirectional fold preserves foldability") {
  std::vector<Rat> lens{Rat(1), Rat(2)};
  std::vector<std::vector<Assignment>> regimes{
      {Assignment::Unassigned}, {Assignment::Mountain, Assignment::Valley}};
  for (int n = 1; n <= 5; ++n)
    for (auto& alpha : regimes)
      for_each_pattern(n, lens, alpha, [&](const Pattern1D& p) {
        if (oracle_1d(p).verdict != Verdict::Foldable) return;
        auto f = leftmost_legal_fold(p);
        REQUIRE(f.has_value());
        CAPTURE(format_pattern1d(p));
        CHECK(oracle_1d(apply_fold_1d(p, f->crease_index)).verdict == Verdict::Foldable);
      });
}

TEST_CASE("work bound: decide_1d comparisons stay linear") {
  for (std::size_t n : {1000u, 10000u}) {
    Pattern1D accordion;
    accordion.segments.assign(n + 1, Rat(1));
    accordion.assignments.assign(n, Assignment::Unassigned);
    CompCounter cnt;
    CHECK(decide_1d(accordion, &cnt).foldable);
    CHECK(cnt.comparisons <= 32 * (std::uint64_t)n);

    Pattern1D adv;
    adv.segments.assign(n + 1, Rat(1));
    adv.segments.front() = Rat(2);
    adv.segments.back() = Rat(2);
    adv.assignments.assign(n, Assignment::Unassigned);
    CompCounter cnt2;
    CHECK_FALSE(decide_1d(adv, &cnt2).foldable);
    CHECK(cnt2.comparisons <= 32 * (std::uint64_t)n);
  }
}
