#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sfold/core1d.hpp"
#include "sfold/rational.hpp"

namespace sfold {

struct ValidationError : Error {
  using Error::Error;
};

struct Pt {
  Rat x, y;
  bool operator==(const Pt&) const = default;
};

enum class Axis : std::uint8_t { Horizontal, Vertical };

// An axis-aligned infinite line: Horizontal means y == coord,
// Vertical means x == coord.
struct AxisLine {
  Axis axis = Axis::Horizontal;
  Rat coord;
  bool operator==(const AxisLine&) const = default;
  friend bool operator<(const AxisLine& a, const AxisLine& b) {
    if (a.axis != b.axis) return a.axis < b.axis;
    return a.coord < b.coord;
  }
};

// Closed y-interval list utilities shared by the region code. Intervals
// are sorted, disjoint, positive length; touching intervals are merged.
using IntervalList = std::vector<std::pair<Rat, Rat>>;

IntervalList interval_union(const IntervalList& a, const IntervalList& b);
IntervalList interval_intersect(const IntervalList& a, const IntervalList& b);
bool interval_contains(const IntervalList& a, const Rat& lo, const Rat& hi);

enum class PointClass : std::uint8_t { Outside, Boundary, Interior };

// Axis-aligned region as a slab decomposition: xs are the slab
// boundaries; cols[i] holds the closed y-intervals covering the slab
// (xs[i], xs[i+1]). Canonical form merges slabs with equal columns, so
// equality of regions is structural equality.
struct SlabRegion {
  std::vector<Rat> xs;
  std::vector<IntervalList> cols;

  bool empty() const { return xs.size() < 2; }
  void canonicalize();
  bool operator==(const SlabRegion&) const = default;

  Rat area() const;
  bool connected() const;
  // Bounding box as (xmin, ymin, xmax, ymax); region must be nonempty.
  std::array<Rat, 4> bbox() const;

  PointClass classify(const Pt& q) const;

  // Open intervals of the region's interior along an axis line.
  IntervalList interior_slice(const AxisLine& line) const;
  // Closed coverage (interior plus boundary) along an axis line.
  IntervalList closed_slice(const AxisLine& line) const;

  SlabRegion reflected(const AxisLine& line) const;
  // Closure of the part strictly below/left (Low) or above/right (High)
  // of the line.
  SlabRegion clipped(const AxisLine& line, bool keep_low) const;
  static SlabRegion unite(const SlabRegion& a, const SlabRegion& b);
  static SlabRegion from_box(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1);
};

// A polygon ring; consecutive vertices alternate horizontal/vertical
// moves and the ring closes back to the first vertex.
using Ring = std::vector<Pt>;

// Builds the region covered by an outer ring minus holes (even-odd
// rule). Throws ValidationError on non-orthogonal, non-simple, or
// mutually intersecting rings.
SlabRegion region_from_rings(const std::vector<Ring>& rings);

// Extracts canonical rings: first the outer ring (counterclockwise,
// starting at its lexicographically smallest vertex), then holes
// (clockwise, sorted). Throws ValidationError when the region's
// boundary pinches (not representable as one outer ring with holes).
std::vector<Ring> rings_from_region(const SlabRegion& region);

struct CreaseSegment {
  Pt a, b;  // normalized so a <= b along the segment's axis
  Assignment assignment = Assignment::Unassigned;

  Axis axis() const { return a.x == b.x ? Axis::Vertical : Axis::Horizontal; }
  AxisLine line() const {
    return a.x == b.x ? AxisLine{Axis::Vertical, a.x} : AxisLine{Axis::Horizontal, a.y};
  }
  // Span along the segment's own axis.
  std::pair<Rat, Rat> span() const {
    return a.x == b.x ? std::make_pair(a.y, b.y) : std::make_pair(a.x, b.x);
  }
  bool operator==(const CreaseSegment&) const = default;
};

// Orthogonal paper with axis-aligned creases. Creases are held in
// canonical form: grouped per supporting line, sorted, interior
// disjoint, touching runs merged when their assignments agree.
struct CreasePattern2D {
  SlabRegion paper;
  std::vector<CreaseSegment> creases;
  bool has_holes = false;

  bool operator==(const CreasePattern2D&) const = default;

  bool all_unassigned() const;
  // Creases lying on the given supporting line, in span order.
  std::vector<CreaseSegment> creases_on_line(const AxisLine& line) const;
};

// Builds a validated pattern: creases must be axis-aligned, positive
// length, contained in the paper, and collinear creases must not
// overlap. Transversal crossings are fine. Throws ValidationError.
CreasePattern2D make_pattern2d(const std::vector<Ring>& rings,
                               std::vector<CreaseSegment> creases);

// Text format: PAPER section (outer ring vertices), optional HOLE
// sections, CREASES section with "x1 y1 x2 y2 A" rows. '#' starts a
// comment. Throws ParseError / ValidationError.
CreasePattern2D parse_pattern2d(std::string_view text);
std::string format_pattern2d(const CreasePattern2D& p);

// Minimal axis-aligned rectangle containing the paper.
SlabRegion bounding_box(const SlabRegion& paper);

// Whether the region's complement has a component enclosed by it.
// Cavities pinched to the outside through a corner do not count.
bool region_has_holes(const SlabRegion& region);

// Deduplicated sorted supporting lines of the pattern's creases.
std::vector<AxisLine> supporting_lines(const CreasePattern2D& p);

struct LineCoverResult {
  bool ok = true;
  std::optional<AxisLine> line;
  std::optional<Pt> witness;  // uncovered facet point on `line`
};

// Checks that every facet point of the paper on a supporting line lies
// on a crease; returns a witness point otherwise.
LineCoverResult check_line_cover(const CreasePattern2D& p);

// The unassigned pattern whose creases are the paper's interior slices
// along the given lines (creases inferred from lines).
CreasePattern2D pattern_from_lines(const SlabRegion& paper, const std::vector<AxisLine>& lines);

}  // namespace sfold
