#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfold/core1d.hpp"
#include "sfold/fold2d.hpp"

namespace sfold {

struct SearchLimits {
  std::uint64_t max_states = 1'000'000;
  std::uint64_t max_depth = 100'000;
  std::uint64_t max_millis = 60'000;
};

enum class Verdict : std::uint8_t { Foldable, Unfoldable, Unknown };

struct OracleResult1D {
  Verdict verdict = Verdict::Unknown;
  std::vector<int> witness;  // valid when Foldable
};

struct OracleResult2D {
  Verdict verdict = Verdict::Unknown;
  std::vector<FoldLine> witness;
};

// Exhaustive fold-sequence search with memoization on canonical pattern
// encodings (the lexicographically smaller of a pattern and its
// reversal). Partial assignments allowed. Never Unknown: intended for
// small n.
OracleResult1D oracle_1d(const Pattern1D& p);

// Bounded depth-first search over legal fold lines, memoizing states
// proven unfoldable. Returns Unknown when a limit cuts the search.
// Fold lines are explored sorted by axis then coordinate, so witnesses
// are deterministic (state limits permitting).
OracleResult2D oracle_2d(const CreasePattern2D& p, const SearchLimits& lim = {});

struct VerifyResult {
  bool ok = false;
  std::optional<std::size_t> failed_step;  // index of the first illegal step
  std::string reason;
  explicit operator bool() const { return ok; }
};

// Replays a fold sequence; ok iff every step is legal and no creases remain.
VerifyResult verify_witness(const Pattern1D& p, const std::vector<int>& witness);
VerifyResult verify_witness(const CreasePattern2D& p, const std::vector<FoldLine>& witness);

struct ConjectureFamily {
  int max_n = 5;
  std::vector<Rat> lengths = {Rat(1), Rat(2)};
  // Assignment alphabet per crease; defaults to the full mixed regime.
  std::vector<Assignment> alphabet = {Assignment::Mountain, Assignment::Valley,
                                      Assignment::Unassigned};
};

struct ConjectureCase {
  Pattern1D pattern;
  bool greedy_foldable = false;
  Verdict oracle_verdict = Verdict::Unknown;
};

struct ConjectureReport {
  std::uint64_t patterns_checked = 0;
  std::vector<ConjectureCase> disagreements;
};

// Compares the greedy bidirectional leftmost-fold strategy against the
// exhaustive oracle over every pattern of the family. Disagreements are
// returned as data, not failures.
ConjectureReport conjecture_check_1d(const ConjectureFamily& family);

}  // namespace sfold
