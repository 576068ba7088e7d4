#include "sfold/decide2d.hpp"

#include <algorithm>

#include "sfold/oracle.hpp"

namespace sfold {

ProjectedPair project_to_1d(const Box& rect, const std::vector<AxisLine>& lines) {
  std::vector<Rat> vxs, hys;
  for (auto& l : lines) {
    if (l.axis == Axis::Vertical) {
      if (!(rect.x0 < l.coord) || !(l.coord < rect.x1))
        throw LineOutsidePaper("vertical line x=" + l.coord.str() + " does not cross the rectangle");
      vxs.push_back(l.coord);
    } else {
      if (!(rect.y0 < l.coord) || !(l.coord < rect.y1))
        throw LineOutsidePaper("horizontal line y=" + l.coord.str() + " does not cross the rectangle");
      hys.push_back(l.coord);
    }
  }
  std::sort(vxs.begin(), vxs.end());
  vxs.erase(std::unique(vxs.begin(), vxs.end()), vxs.end());
  std::sort(hys.begin(), hys.end());
  hys.erase(std::unique(hys.begin(), hys.end()), hys.end());
  auto build = [](const Rat& lo, const Rat& hi, const std::vector<Rat>& cuts) {
    Pattern1D p;
    Rat prev = lo;
    for (auto& c : cuts) {
      p.segments.push_back(c - prev);
      p.assignments.push_back(Assignment::Unassigned);
      prev = c;
    }
    p.segments.push_back(hi - prev);
    return p;
  };
  return ProjectedPair{build(rect.x0, rect.x1, vxs), build(rect.y0, rect.y1, hys)};
}

namespace {

// Replays a 1D witness, emitting each fold as a plane fold line. The
// remaining pattern always occupies [lo, hi] of the plane with its
// local origin at lo (the stationary side is never reflected).
std::vector<FoldLine> map_witness_to_plane(const Pattern1D& inst, const std::vector<int>& witness,
                                           Axis axis, const Rat& origin) {
  std::vector<FoldLine> out;
  Pattern1D cur = inst;
  Rat lo = origin;
  for (int c : witness) {
    Rat q = cur.position(c);
    Rat total = cur.total();
    Rat rho = lo + q;
    bool left_flap = q + q <= total;  // same tie rule as apply_fold_1d
    out.push_back(FoldLine{AxisLine{axis, rho},
                           left_flap ? MovingSide::Low : MovingSide::High});
    cur = apply_fold_1d(cur, c);
    if (left_flap) lo = rho;
  }
  return out;
}

}  // namespace

Decision2D decide_unassigned_2d(const CreasePattern2D& p) {
  if (p.has_holes) throw HolesUnsupported("paper with holes is not supported by the decision procedure");
  if (!p.all_unassigned())
    throw AssignedCreasePresent("pattern has assigned creases; use the oracle instead");
  if (!check_line_cover(p).ok) return Decision2D{};
  if (p.creases.empty()) return Decision2D{true, {}};

  auto [x0, y0, x1, y1] = p.paper.bbox();
  std::vector<FoldLine> edge_folds;
  std::vector<AxisLine> interior;
  for (auto& l : supporting_lines(p)) {
    // Lines along the bounding box carry boundary creases only; folding
    // them moves nothing and just consumes those creases.
    if (l.axis == Axis::Vertical && l.coord == x0)
      edge_folds.push_back(FoldLine{l, MovingSide::Low});
    else if (l.axis == Axis::Vertical && l.coord == x1)
      edge_folds.push_back(FoldLine{l, MovingSide::High});
    else if (l.axis == Axis::Horizontal && l.coord == y0)
      edge_folds.push_back(FoldLine{l, MovingSide::Low});
    else if (l.axis == Axis::Horizontal && l.coord == y1)
      edge_folds.push_back(FoldLine{l, MovingSide::High});
    else
      interior.push_back(l);
  }

  ProjectedPair pp = project_to_1d(Box{x0, y0, x1, y1}, interior);
  Decision1D dh = decide_1d(pp.horizontal_instance);
  Decision1D dv = decide_1d(pp.vertical_instance);
  if (!dh.foldable || !dv.foldable) return Decision2D{};

  Decision2D d;
  d.foldable = true;
  d.witness = edge_folds;
  auto vert = map_witness_to_plane(pp.horizontal_instance, dh.witness, Axis::Vertical, x0);
  auto horiz = map_witness_to_plane(pp.vertical_instance, dv.witness, Axis::Horizontal, y0);
  d.witness.insert(d.witness.end(), vert.begin(), vert.end());
  d.witness.insert(d.witness.end(), horiz.begin(), horiz.end());

  VerifyResult chk = verify_witness(p, d.witness);
  if (!chk.ok) throw Error("internal: constructed witness failed replay (" + chk.reason + ")");
  return d;
}

}  // namespace sfold
