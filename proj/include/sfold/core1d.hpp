#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "sfold/rational.hpp"

namespace sfold {

struct IndexError : Error {
  using Error::Error;
};
struct IllegalFoldError : Error {
  using Error::Error;
};
struct UnsupportedPartialAssignment : Error {
  using Error::Error;
};

enum class Assignment : std::uint8_t { Mountain, Valley, Unassigned };

// Mountain <-> Valley; Unassigned is its own complement.
constexpr Assignment comp(Assignment a) {
  switch (a) {
    case Assignment::Mountain: return Assignment::Valley;
    case Assignment::Valley: return Assignment::Mountain;
    default: return Assignment::Unassigned;
  }
}

char assignment_char(Assignment a);
std::optional<Assignment> assignment_from_char(char c);

// A 1D crease pattern: n+1 positive segment lengths with n crease
// assignments between them. Crease i (1-based) sits between segments
// i-1 and i; its position is the prefix sum of the first i segments.
struct Pattern1D {
  std::vector<Rat> segments;
  std::vector<Assignment> assignments;

  int n() const { return (int)assignments.size(); }
  Rat total() const;
  // Position of crease c, 1 <= c <= n.
  Rat position(int c) const;
  std::vector<Rat> positions() const;  // size n+2: 0, crease 1..n, total
  Pattern1D reversed() const;

  bool all_unassigned() const;
  bool all_assigned() const;

  bool operator==(const Pattern1D&) const = default;
};

// Throws ParseError on malformed input. Format: whitespace-separated
// alternating tokens "d0 a1 d1 ... an dn" with di positive rationals
// and ai in {M,V,U}; token count must be odd.
Pattern1D parse_pattern1d(std::string_view text);
std::string format_pattern1d(const Pattern1D& p);

// One symbol of the string encoding: lengths at odd positions,
// assignments at even positions.
using Symbol = std::variant<Rat, Assignment>;

Symbol comp(const Symbol& s);

// Symbol at string position pos, 1 <= pos <= 2n+1.
Symbol symbol_at(const Pattern1D& p, int pos);

enum class Side : std::uint8_t { Left, Right };

struct Fold1DResult {
  int crease_index = 0;  // 1-based, in the pattern's own numbering
  Side side = Side::Left;  // Right: found on the reversed string
  bool operator==(const Fold1DResult&) const = default;
};

// Legality of the fold at crease c per the four conditions. In 1D the
// fold point is a crease by construction (condition 1) and condition 3
// is vacuous, so only the crease-to-crease condition (2) and the merge
// consistency condition (4) can fail.
struct LegalityReport1D {
  bool cond2 = true;
  bool cond4 = true;
  std::optional<Rat> uncovered_point;            // cond2 witness: facet point hit by a mirrored crease
  std::optional<std::pair<int, int>> conflict;   // cond4 witness: crease index pair with clashing merge
  bool legal() const { return cond2 && cond4; }
};

// Direct geometric legality check. Handles partial assignments: a pair
// merges cleanly if either member is unassigned or the reflected
// assignment matches. Throws IndexError if c is out of range.
LegalityReport1D legal_fold_1d(const Pattern1D& p, int c);

// Executes the fold at crease c: the shorter side is reflected onto the
// longer one (ties fold the left flap) and overlapping creases merge,
// keeping the unique assigned value of each pair. Throws IllegalFoldError
// if the fold is not legal.
Pattern1D apply_fold_1d(const Pattern1D& p, int c);

struct CompCounter {
  std::uint64_t comparisons = 0;
};

// Smallest crease c that is fold-legal with the left part fitting into
// the right (2*position(c) <= total). Linear-time scan using failure
// numbers; cost is O(returned position), O(n) on failure.
std::optional<int> leftmost_prefix_fold(const Pattern1D& p, CompCounter* cnt = nullptr);

// Reference implementation of the same predicate by direct scanning
// with legal_fold_1d. Quadratic; used for equivalence testing and as
// the benchmark baseline engine.
std::optional<int> naive_leftmost_prefix_fold(const Pattern1D& p, CompCounter* cnt = nullptr);

// Bidirectional search: interleaves the prefix scan on the pattern and
// on its reversal and reports whichever returns first (ties prefer the
// forward side). The crease index refers to the input pattern.
std::optional<Fold1DResult> leftmost_legal_fold(const Pattern1D& p, CompCounter* cnt = nullptr);

struct Decision1D {
  bool foldable = false;
  // Fold crease indices, each relative to the pattern of its step.
  std::vector<int> witness;
};

// Linear-time decision for fully assigned or fully unassigned patterns.
// Throws UnsupportedPartialAssignment on mixed input.
Decision1D decide_1d(const Pattern1D& p, CompCounter* cnt = nullptr);

// Quadratic rescanning baseline with identical fold selection. Same
// result as decide_1d; comparison counts grow quadratically on inputs
// whose failures are detected late.
Decision1D naive_decide_1d(const Pattern1D& p, CompCounter* cnt = nullptr);

// Greedy bidirectional leftmost-fold strategy with the direct geometric
// legality predicate, applicable to partially assigned patterns. Used by
// the conjecture experiment; coincides with decide_1d on its domain.
Decision1D greedy_decide_1d(const Pattern1D& p, CompCounter* cnt = nullptr);

}  // namespace sfold
