#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfold/geom2d.hpp"

namespace sfold {

enum class MovingSide : std::uint8_t { Low, High };

// A directed fold: the paper on `moving` side of `line` is reflected
// onto the other side. Low is below a horizontal line / left of a
// vertical one.
struct FoldLine {
  AxisLine line;
  MovingSide moving = MovingSide::Low;
  bool operator==(const FoldLine&) const = default;
};

// Serialization: "V x=<rational> move=<low|high>" / "H y=<rational> move=<low|high>".
std::string format_fold_line(const FoldLine& f);
FoldLine parse_fold_line(std::string_view text);

struct CondResult {
  bool pass = true;
  std::optional<Pt> point;  // offending point, when the condition fails on one
  std::optional<std::pair<CreaseSegment, CreaseSegment>> pair;  // offending crease pair
};

// Verdicts for the four legality conditions of a single fold:
//   1. the fold line meets the paper only along creases and boundary;
//   2. no crease lands on an open facet of the opposite side;
//   3. assigned creases on the fold line agree;
//   4. every overlap component of reflected vs. stationary creases has
//      a single assigned value.
struct LegalityReport {
  CondResult cond1, cond2, cond3, cond4;
  bool legal() const { return cond1.pass && cond2.pass && cond3.pass && cond4.pass; }
};

LegalityReport check_fold_legality_2d(const CreasePattern2D& p, const FoldLine& f);

// Executes a legal fold: clips and reflects the moving side, unions the
// paper, merges overlapping creases (reflected assignments negated) and
// consumes the creases on the fold line. Throws IllegalFoldError.
CreasePattern2D apply_fold_2d(const CreasePattern2D& p, const FoldLine& f);

// The canonical fold direction for a line: the side with smaller paper
// area moves; ties move Low. Legality and foldability do not depend on
// the direction.
FoldLine canonical_fold(const CreasePattern2D& p, const AxisLine& line);

// All supporting lines (canonical direction) whose fold is legal,
// sorted by axis then coordinate.
std::vector<FoldLine> legal_fold_lines(const CreasePattern2D& p);

}  // namespace sfold
