#pragma once

#include <vector>

#include "sfold/fold2d.hpp"
#include "sfold/geom2d.hpp"

namespace sfold {

struct LineOutsidePaper : Error {
  using Error::Error;
};
struct AssignedCreasePresent : Error {
  using Error::Error;
};
struct HolesUnsupported : Error {
  using Error::Error;
};

// The two 1D instances of a rectangle-with-lines input: vertical lines
// project onto the bottom edge, horizontal lines onto the left edge.
struct ProjectedPair {
  Pattern1D horizontal_instance;  // from vertical lines
  Pattern1D vertical_instance;    // from horizontal lines
};

struct Box {
  Rat x0, y0, x1, y1;
};

// Lines must strictly cross the rectangle's interior; throws
// LineOutsidePaper otherwise. The projected instances are unassigned.
ProjectedPair project_to_1d(const Box& rect, const std::vector<AxisLine>& lines);

struct Decision2D {
  bool foldable = false;
  std::vector<FoldLine> witness;
};

// Decision procedure for unassigned patterns on hole-free orthogonal
// paper: line-cover check, bounding box, projection to two 1D
// instances, one linear-time decision each. The returned witness folds
// all vertical lines first, then the horizontal ones, and is
// replay-verified before returning. Throws AssignedCreasePresent /
// HolesUnsupported.
Decision2D decide_unassigned_2d(const CreasePattern2D& p);

}  // namespace sfold
