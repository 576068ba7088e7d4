#include "sfold/fold2d.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <map>
#include <numeric>

namespace sfold {

std::string format_fold_line(const FoldLine& f) {
  std::string s;
  s += f.line.axis == Axis::Vertical ? "V x=" : "H y=";
  s += f.line.coord.str();
  s += " move=";
  s += f.moving == MovingSide::Low ? "low" : "high";
  return s;
}

FoldLine parse_fold_line(std::string_view text) {
  std::vector<std::string> tok;
  std::string cur;
  for (char ch : text) {
    if (ch == ' ' || ch == '\t') {
      if (!cur.empty()) tok.push_back(cur), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tok.push_back(cur);
  if (tok.size() != 3) throw ParseError("fold line needs 'V x=<r> move=<low|high>'");
  FoldLine f;
  if (tok[0] == "V")
    f.line.axis = Axis::Vertical;
  else if (tok[0] == "H")
    f.line.axis = Axis::Horizontal;
  else
    throw ParseError("fold line axis must be V or H");
  std::string_view coord = tok[1];
  std::string_view want = f.line.axis == Axis::Vertical ? "x=" : "y=";
  if (coord.substr(0, 2) != want) throw ParseError("fold line coordinate must be " + std::string(want));
  f.line.coord = Rat::parse(coord.substr(2));
  if (tok[2] == "move=low")
    f.moving = MovingSide::Low;
  else if (tok[2] == "move=high")
    f.moving = MovingSide::High;
  else
    throw ParseError("fold line needs move=low or move=high");
  return f;
}

namespace {

Rat reflect_coord(const Rat& c, const Rat& about) { return about + about - c; }

struct Piece {
  AxisLine line;
  Rat lo, hi;
  Assignment asg = Assignment::Unassigned;
  const CreaseSegment* origin = nullptr;
};

struct SplitCreases {
  std::vector<Piece> low, high;
  std::vector<const CreaseSegment*> hinge;
};

SplitCreases split_at(const CreasePattern2D& p, const AxisLine& fold) {
  SplitCreases s;
  for (auto& c : p.creases) {
    AxisLine cl = c.line();
    auto [lo, hi] = c.span();
    if (cl.axis == fold.axis) {
      if (cl.coord == fold.coord) {
        s.hinge.push_back(&c);
        continue;
      }
      (cl.coord < fold.coord ? s.low : s.high).push_back({cl, lo, hi, c.assignment, &c});
    } else {
      if (lo < fold.coord) s.low.push_back({cl, lo, std::min(hi, fold.coord), c.assignment, &c});
      if (fold.coord < hi) s.high.push_back({cl, std::max(lo, fold.coord), hi, c.assignment, &c});
    }
  }
  return s;
}

Piece reflect_piece(const Piece& pc, const AxisLine& fold) {
  Piece r = pc;
  r.asg = comp(pc.asg);
  if (pc.line.axis == fold.axis) {
    r.line.coord = reflect_coord(pc.line.coord, fold.coord);
  } else {
    r.lo = reflect_coord(pc.hi, fold.coord);
    r.hi = reflect_coord(pc.lo, fold.coord);
  }
  return r;
}

Pt point_on(const AxisLine& line, const Rat& along) {
  return line.axis == Axis::Vertical ? Pt{line.coord, along} : Pt{along, line.coord};
}

// First point of [lo, hi] on `pline`, strictly on `side` of `fold`,
// interior to the paper and on no crease. Facets are open, so checking
// the midpoints of the elementary intervals between all structural
// coordinates is exact.
std::optional<Pt> probe_facet_hit(const CreasePattern2D& p, const AxisLine& fold, MovingSide side,
                                  const AxisLine& pline, const Rat& lo, const Rat& hi) {
  if (pline.axis == fold.axis) {
    bool is_low = pline.coord < fold.coord;
    bool is_high = fold.coord < pline.coord;
    if (side == MovingSide::Low ? !is_low : !is_high) return std::nullopt;
  }
  std::vector<Rat> evs{lo, hi};
  for (auto& iv : p.paper.interior_slice(pline)) {
    evs.push_back(iv.first);
    evs.push_back(iv.second);
  }
  IntervalList collinear;
  for (auto& c : p.creases) {
    AxisLine cl = c.line();
    auto [clo, chi] = c.span();
    if (cl == pline) {
      collinear.emplace_back(clo, chi);
      evs.push_back(clo);
      evs.push_back(chi);
    } else if (cl.axis != pline.axis) {
      // crossing coordinate, when the crease actually reaches the line
      if (!(pline.coord < clo) && !(chi < pline.coord)) evs.push_back(cl.coord);
    }
  }
  if (pline.axis != fold.axis) evs.push_back(fold.coord);
  std::sort(evs.begin(), evs.end());
  evs.erase(std::unique(evs.begin(), evs.end()), evs.end());
  auto interior = p.paper.interior_slice(pline);
  for (size_t i = 0; i + 1 < evs.size(); ++i) {
    if (evs[i + 1] < lo || evs[i + 1] == lo) continue;
    if (hi < evs[i] || hi == evs[i]) break;
    Rat m = (evs[i] + evs[i + 1]) / Rat(2);
    if (pline.axis != fold.axis) {
      bool is_low = m < fold.coord;
      if ((side == MovingSide::Low) != is_low) continue;
    }
    bool inside = false;
    for (auto& iv : interior)
      if (iv.first < m && m < iv.second) {
        inside = true;
        break;
      }
    if (!inside) continue;
    bool on_crease = false;
    for (auto& iv : collinear)
      if (!(m < iv.first) && !(iv.second < m)) {
        on_crease = true;
        break;
      }
    if (!on_crease) return point_on(pline, m);
  }
  return std::nullopt;
}

MovingSide opposite(MovingSide s) {
  return s == MovingSide::Low ? MovingSide::High : MovingSide::Low;
}

struct OverlapGroups {
  // per line: pieces from the stationary side plus reflected moving
  // pieces, with union-find components over the overlap relation
  std::map<AxisLine, std::vector<Piece>> by_line;
  std::map<AxisLine, std::vector<int>> comp;

  void build(const std::vector<Piece>& stationary, const std::vector<Piece>& moved) {
    for (auto& pc : stationary) by_line[pc.line].push_back(pc);
    for (auto& pc : moved) by_line[pc.line].push_back(pc);
    for (auto& [line, pieces] : by_line) {
      std::vector<int> parent(pieces.size());
      std::iota(parent.begin(), parent.end(), 0);
      std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
      };
      for (size_t i = 0; i < pieces.size(); ++i)
        for (size_t j = i + 1; j < pieces.size(); ++j) {
          // overlap means a nondegenerate shared segment
          if (std::max(pieces[i].lo, pieces[j].lo) < std::min(pieces[i].hi, pieces[j].hi))
            parent[find((int)i)] = find((int)j);
        }
      for (size_t i = 0; i < pieces.size(); ++i) parent[i] = find((int)i);
      comp[line] = std::move(parent);
    }
  }
};

}  // namespace

LegalityReport check_fold_legality_2d(const CreasePattern2D& p, const FoldLine& f) {
  LegalityReport rep;
  const AxisLine& fold = f.line;

  // (1) the fold line meets the paper only on creases or boundary
  {
    IntervalList spans;
    for (auto& c : p.creases_on_line(fold)) spans.push_back(c.span());
    for (auto& iv : p.paper.interior_slice(fold)) {
      Rat at = iv.first;
      bool failed = false;
      Rat gap_lo, gap_hi;
      for (auto& s : spans) {
        if (!(s.first < iv.second)) break;
        if (s.second < at || s.second == at) continue;
        if (at < s.first) {
          failed = true;
          gap_lo = at;
          gap_hi = std::min(s.first, iv.second);
          break;
        }
        at = s.second;
        if (!(at < iv.second)) break;
      }
      if (!failed && at < iv.second) {
        failed = true;
        gap_lo = at;
        gap_hi = iv.second;
      }
      if (failed) {
        rep.cond1.pass = false;
        rep.cond1.point = point_on(fold, (gap_lo + gap_hi) / Rat(2));
        break;
      }
    }
  }

  SplitCreases s = split_at(p, fold);
  const std::vector<Piece>& moving = f.moving == MovingSide::Low ? s.low : s.high;
  const std::vector<Piece>& stationary = f.moving == MovingSide::Low ? s.high : s.low;
  const MovingSide stat_side = opposite(f.moving);

  // (2) creases may not land on open facets of the other side
  for (auto& pc : moving) {
    Piece rp = reflect_piece(pc, fold);
    if (auto hit = probe_facet_hit(p, fold, stat_side, rp.line, rp.lo, rp.hi)) {
      rep.cond2.pass = false;
      rep.cond2.point = hit;
      break;
    }
  }
  if (rep.cond2.pass) {
    for (auto& pc : stationary) {
      Piece rp = reflect_piece(pc, fold);
      if (auto hit = probe_facet_hit(p, fold, f.moving, rp.line, rp.lo, rp.hi)) {
        rep.cond2.pass = false;
        rep.cond2.point = hit;
        break;
      }
    }
  }

  // (3) assigned creases on the fold line must agree
  {
    const CreaseSegment* first_assigned = nullptr;
    for (auto* c : s.hinge) {
      if (c->assignment == Assignment::Unassigned) continue;
      if (!first_assigned) {
        first_assigned = c;
      } else if (first_assigned->assignment != c->assignment) {
        rep.cond3.pass = false;
        rep.cond3.pair = std::make_pair(*first_assigned, *c);
        break;
      }
    }
  }

  // (4) every overlap component carries at most one assigned value
  {
    std::vector<Piece> moved;
    moved.reserve(moving.size());
    for (auto& pc : moving) moved.push_back(reflect_piece(pc, fold));
    OverlapGroups g;
    g.build(stationary, moved);
    for (auto& [line, pieces] : g.by_line) {
      auto& comp = g.comp[line];
      std::map<int, const Piece*> rep_assigned;
      for (size_t i = 0; i < pieces.size(); ++i) {
        if (pieces[i].asg == Assignment::Unassigned) continue;
        auto [it, inserted] = rep_assigned.try_emplace(comp[i], &pieces[i]);
        if (!inserted && it->second->asg != pieces[i].asg) {
          rep.cond4.pass = false;
          rep.cond4.pair = std::make_pair(*it->second->origin, *pieces[i].origin);
          break;
        }
      }
      if (!rep.cond4.pass) break;
    }
  }
  return rep;
}

CreasePattern2D apply_fold_2d(const CreasePattern2D& p, const FoldLine& f) {
  LegalityReport rep = check_fold_legality_2d(p, f);
  if (!rep.legal()) throw IllegalFoldError("fold " + format_fold_line(f) + " is illegal");
  const AxisLine& fold = f.line;

  SlabRegion stat_paper = p.paper.clipped(fold, /*keep_low=*/f.moving == MovingSide::High);
  SlabRegion mov_paper = p.paper.clipped(fold, f.moving == MovingSide::Low).reflected(fold);
  CreasePattern2D out;
  out.paper = SlabRegion::unite(stat_paper, mov_paper);

  SplitCreases s = split_at(p, fold);
  const std::vector<Piece>& moving = f.moving == MovingSide::Low ? s.low : s.high;
  const std::vector<Piece>& stationary = f.moving == MovingSide::Low ? s.high : s.low;
  std::vector<Piece> moved;
  moved.reserve(moving.size());
  for (auto& pc : moving) moved.push_back(reflect_piece(pc, fold));

  OverlapGroups g;
  g.build(stationary, moved);
  std::vector<CreaseSegment> creases;
  for (auto& [line, pieces] : g.by_line) {
    auto& comp = g.comp[line];
    std::map<int, std::pair<std::pair<Rat, Rat>, Assignment>> merged;
    for (size_t i = 0; i < pieces.size(); ++i) {
      auto it = merged.find(comp[i]);
      if (it == merged.end()) {
        merged.emplace(comp[i],
                       std::make_pair(std::make_pair(pieces[i].lo, pieces[i].hi), pieces[i].asg));
      } else {
        auto& [span, asg] = it->second;
        span.first = std::min(span.first, pieces[i].lo);
        span.second = std::max(span.second, pieces[i].hi);
        if (pieces[i].asg != Assignment::Unassigned) {
          assert(asg == Assignment::Unassigned || asg == pieces[i].asg);
          asg = pieces[i].asg;
        }
      }
    }
    for (auto& [id, sa] : merged) {
      (void)id;
      auto& [span, asg] = sa;
      CreaseSegment c;
      if (line.axis == Axis::Vertical) {
        c.a = Pt{line.coord, span.first};
        c.b = Pt{line.coord, span.second};
      } else {
        c.a = Pt{span.first, line.coord};
        c.b = Pt{span.second, line.coord};
      }
      c.assignment = asg;
      creases.push_back(c);
    }
  }
  // canonical ordering and merge of touching same-assignment runs
  std::sort(creases.begin(), creases.end(), [](const CreaseSegment& a, const CreaseSegment& b) {
    AxisLine la = a.line(), lb = b.line();
    if (!(la == lb)) return la < lb;
    return a.span() < b.span();
  });
  std::vector<CreaseSegment> canon;
  for (auto& c : creases) {
    if (!canon.empty() && canon.back().line() == c.line() &&
        canon.back().span().second == c.span().first &&
        canon.back().assignment == c.assignment) {
      if (c.a.x == c.b.x)
        canon.back().b.y = c.b.y;
      else
        canon.back().b.x = c.b.x;
    } else {
      canon.push_back(c);
    }
  }
  out.creases = std::move(canon);
  if (out.creases.size() >= p.creases.size())
    throw IllegalFoldError("fold consumes no crease");
  out.has_holes = region_has_holes(out.paper);
  return out;
}

FoldLine canonical_fold(const CreasePattern2D& p, const AxisLine& line) {
  Rat low = p.paper.clipped(line, true).area();
  Rat high = p.paper.clipped(line, false).area();
  return FoldLine{line, high < low ? MovingSide::High : MovingSide::Low};
}

std::vector<FoldLine> legal_fold_lines(const CreasePattern2D& p) {
  std::vector<FoldLine> out;
  for (auto& line : supporting_lines(p)) {
    FoldLine f = canonical_fold(p, line);
    if (check_fold_legality_2d(p, f).legal()) out.push_back(f);
  }
  return out;
}

}  // namespace sfold
