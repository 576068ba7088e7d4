#include "sfold/geom2d.hpp"

#include <algorithm>
#include <array>
#include <cassert>
#include <cctype>
#include <functional>
#include <map>
#include <sstream>

namespace sfold {

namespace {

void normalize_intervals(IntervalList& v) {
  std::sort(v.begin(), v.end());
  IntervalList out;
  for (auto& iv : v) {
    if (!(iv.first < iv.second)) continue;
    if (!out.empty() && !(out.back().second < iv.first)) {
      if (out.back().second < iv.second) out.back().second = iv.second;
    } else {
      out.push_back(iv);
    }
  }
  v = std::move(out);
}

bool point_in_closed(const IntervalList& a, const Rat& y) {
  for (auto& iv : a)
    if (!(y < iv.first) && !(iv.second < y)) return true;
  return false;
}

bool point_in_open(const IntervalList& a, const Rat& y) {
  for (auto& iv : a)
    if (iv.first < y && y < iv.second) return true;
  return false;
}

}  // namespace

IntervalList interval_union(const IntervalList& a, const IntervalList& b) {
  IntervalList v = a;
  v.insert(v.end(), b.begin(), b.end());
  normalize_intervals(v);
  return v;
}

IntervalList interval_intersect(const IntervalList& a, const IntervalList& b) {
  IntervalList out;
  size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    Rat lo = std::max(a[i].first, b[j].first);
    Rat hi = std::min(a[i].second, b[j].second);
    if (lo < hi) out.emplace_back(lo, hi);
    if (a[i].second < b[j].second)
      ++i;
    else
      ++j;
  }
  return out;
}

bool interval_contains(const IntervalList& a, const Rat& lo, const Rat& hi) {
  for (auto& iv : a)
    if (!(lo < iv.first) && !(iv.second < hi)) return true;
  return false;
}

void SlabRegion::canonicalize() {
  for (auto& c : cols) normalize_intervals(c);
  // trim empty edge slabs
  size_t lo = 0, hi = cols.size();
  while (lo < hi && cols[lo].empty()) ++lo;
  while (hi > lo && cols[hi - 1].empty()) --hi;
  if (lo > 0 || hi < cols.size()) {
    cols = std::vector<IntervalList>(cols.begin() + lo, cols.begin() + hi);
    xs = std::vector<Rat>(xs.begin() + lo, xs.begin() + lo + cols.size() + (cols.empty() ? 0 : 1));
  }
  if (cols.empty()) {
    xs.clear();
    return;
  }
  // merge adjacent slabs with identical columns
  std::vector<Rat> nxs{xs[0]};
  std::vector<IntervalList> ncols;
  for (size_t i = 0; i < cols.size(); ++i) {
    if (!ncols.empty() && ncols.back() == cols[i]) {
      nxs.back() = xs[i + 1];
    } else {
      ncols.push_back(cols[i]);
      nxs.push_back(xs[i + 1]);
    }
  }
  xs = std::move(nxs);
  cols = std::move(ncols);
}

Rat SlabRegion::area() const {
  Rat a(0);
  for (size_t i = 0; i < cols.size(); ++i) {
    Rat h(0);
    for (auto& iv : cols[i]) h += iv.second - iv.first;
    a += (xs[i + 1] - xs[i]) * h;
  }
  return a;
}

std::array<Rat, 4> SlabRegion::bbox() const {
  if (empty()) throw Error("bbox of empty region");
  Rat ymin, ymax;
  bool first = true;
  for (auto& c : cols) {
    for (auto& iv : c) {
      if (first || iv.first < ymin) ymin = iv.first;
      if (first || ymax < iv.second) ymax = iv.second;
      first = false;
    }
  }
  return {xs.front(), ymin, xs.back(), ymax};
}

bool SlabRegion::connected() const {
  if (empty()) return true;
  // union-find over (slab, interval) nodes
  std::vector<int> start(cols.size() + 1, 0);
  for (size_t i = 0; i < cols.size(); ++i) start[i + 1] = start[i] + (int)cols[i].size();
  int total = start.back();
  if (total == 0) return true;
  std::vector<int> parent(total);
  for (int i = 0; i < total; ++i) parent[i] = i;
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  auto unite = [&](int a, int b) { parent[find(a)] = find(b); };
  for (size_t i = 0; i + 1 < cols.size(); ++i) {
    for (size_t a = 0; a < cols[i].size(); ++a)
      for (size_t b = 0; b < cols[i + 1].size(); ++b) {
        auto& u = cols[i][a];
        auto& v = cols[i + 1][b];
        if (!(u.second < v.first) && !(v.second < u.first))
          unite(start[i] + (int)a, start[i + 1] + (int)b);
      }
  }
  int root = find(0);
  for (int i = 1; i < total; ++i)
    if (find(i) != root) return false;
  return true;
}

PointClass SlabRegion::classify(const Pt& q) const {
  if (empty()) return PointClass::Outside;
  if (q.x < xs.front() || xs.back() < q.x) return PointClass::Outside;
  // locate
  size_t i = std::upper_bound(xs.begin(), xs.end(), q.x) - xs.begin();
  if (i > 0 && xs[i - 1] == q.x) {
    // on a slab boundary
    const IntervalList* left = (i - 1 >= 1) ? &cols[i - 2] : nullptr;
    const IntervalList* right = (i - 1 < cols.size()) ? &cols[i - 1] : nullptr;
    bool lo = left && point_in_open(*left, q.y);
    bool ro = right && point_in_open(*right, q.y);
    if (lo && ro) return PointClass::Interior;
    bool lc = left && point_in_closed(*left, q.y);
    bool rc = right && point_in_closed(*right, q.y);
    if (lc || rc) return PointClass::Boundary;
    return PointClass::Outside;
  }
  // strictly inside slab i-1
  const IntervalList& c = cols[i - 1];
  if (point_in_open(c, q.y)) return PointClass::Interior;
  if (point_in_closed(c, q.y)) return PointClass::Boundary;
  return PointClass::Outside;
}

IntervalList SlabRegion::interior_slice(const AxisLine& line) const {
  IntervalList out;
  if (empty()) return out;
  if (line.axis == Axis::Vertical) {
    const Rat& a = line.coord;
    if (a < xs.front() || xs.back() < a) return out;
    size_t i = std::upper_bound(xs.begin(), xs.end(), a) - xs.begin();
    if (i > 0 && xs[i - 1] == a) {
      const IntervalList* left = (i - 1 >= 1) ? &cols[i - 2] : nullptr;
      const IntervalList* right = (i - 1 < cols.size()) ? &cols[i - 1] : nullptr;
      if (!left || !right) return out;
      out = interval_intersect(*left, *right);
    } else {
      out = cols[i - 1];
    }
    return out;  // callers treat intervals as open
  }
  const Rat& b = line.coord;
  std::optional<Rat> run_start;
  for (size_t i = 0; i < cols.size(); ++i) {
    bool covered = point_in_open(cols[i], b);
    if (covered && !run_start) run_start = xs[i];
    if (!covered && run_start) {
      out.emplace_back(*run_start, xs[i]);
      run_start.reset();
    }
  }
  if (run_start) out.emplace_back(*run_start, xs.back());
  return out;
}

IntervalList SlabRegion::closed_slice(const AxisLine& line) const {
  IntervalList out;
  if (empty()) return out;
  if (line.axis == Axis::Vertical) {
    const Rat& a = line.coord;
    if (a < xs.front() || xs.back() < a) return out;
    size_t i = std::upper_bound(xs.begin(), xs.end(), a) - xs.begin();
    if (i > 0 && xs[i - 1] == a) {
      IntervalList l = (i - 1 >= 1) ? cols[i - 2] : IntervalList{};
      IntervalList r = (i - 1 < cols.size()) ? cols[i - 1] : IntervalList{};
      return interval_union(l, r);
    }
    return cols[i - 1];
  }
  const Rat& b = line.coord;
  std::optional<Rat> run_start;
  for (size_t i = 0; i < cols.size(); ++i) {
    bool covered = point_in_closed(cols[i], b);
    if (covered && !run_start) run_start = xs[i];
    if (!covered && run_start) {
      out.emplace_back(*run_start, xs[i]);
      run_start.reset();
    }
  }
  if (run_start) out.emplace_back(*run_start, xs.back());
  return out;
}

SlabRegion SlabRegion::reflected(const AxisLine& line) const {
  SlabRegion r;
  if (empty()) return r;
  if (line.axis == Axis::Vertical) {
    const Rat a2 = line.coord + line.coord;
    r.xs.resize(xs.size());
    for (size_t i = 0; i < xs.size(); ++i) r.xs[xs.size() - 1 - i] = a2 - xs[i];
    r.cols.assign(cols.rbegin(), cols.rend());
  } else {
    const Rat b2 = line.coord + line.coord;
    r.xs = xs;
    r.cols.resize(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
      IntervalList c;
      for (auto& iv : cols[i]) c.emplace_back(b2 - iv.second, b2 - iv.first);
      std::reverse(c.begin(), c.end());
      r.cols[i] = std::move(c);
    }
  }
  return r;
}

SlabRegion SlabRegion::clipped(const AxisLine& line, bool keep_low) const {
  SlabRegion r;
  if (empty()) return r;
  if (line.axis == Axis::Vertical) {
    const Rat& a = line.coord;
    if (keep_low) {
      if (!(xs.front() < a)) return r;
      for (size_t i = 0; i < cols.size() && xs[i] < a; ++i) {
        if (r.xs.empty()) r.xs.push_back(xs[i]);
        r.cols.push_back(cols[i]);
        r.xs.push_back(std::min(xs[i + 1], a));
      }
    } else {
      if (!(a < xs.back())) return r;
      for (size_t i = 0; i < cols.size(); ++i) {
        if (!(a < xs[i + 1])) continue;
        if (r.xs.empty()) r.xs.push_back(std::max(xs[i], a));
        r.cols.push_back(cols[i]);
        r.xs.push_back(xs[i + 1]);
      }
    }
  } else {
    const Rat& b = line.coord;
    r.xs = xs;
    r.cols.resize(cols.size());
    for (size_t i = 0; i < cols.size(); ++i) {
      IntervalList c;
      for (auto& iv : cols[i]) {
        if (keep_low) {
          if (iv.first < b) c.emplace_back(iv.first, std::min(iv.second, b));
        } else {
          if (b < iv.second) c.emplace_back(std::max(iv.first, b), iv.second);
        }
      }
      r.cols[i] = std::move(c);
    }
  }
  r.canonicalize();
  return r;
}

SlabRegion SlabRegion::unite(const SlabRegion& a, const SlabRegion& b) {
  if (a.empty()) {
    SlabRegion r = b;
    r.canonicalize();
    return r;
  }
  if (b.empty()) {
    SlabRegion r = a;
    r.canonicalize();
    return r;
  }
  std::vector<Rat> xs;
  xs.insert(xs.end(), a.xs.begin(), a.xs.end());
  xs.insert(xs.end(), b.xs.begin(), b.xs.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  SlabRegion r;
  r.xs = xs;
  r.cols.resize(xs.size() - 1);
  auto col_at = [](const SlabRegion& s, const Rat& lo, const Rat& hi) -> IntervalList {
    // column of s over the slab (lo, hi), assuming the slab does not
    // straddle any of s's boundaries
    if (s.empty() || hi <= s.xs.front() || s.xs.back() <= lo) return {};
    Rat mid = (lo + hi) / Rat(2);
    size_t i = std::upper_bound(s.xs.begin(), s.xs.end(), mid) - s.xs.begin();
    if (i == 0 || i >= s.xs.size()) return {};
    return s.cols[i - 1];
  };
  for (size_t i = 0; i + 1 < xs.size(); ++i)
    r.cols[i] = interval_union(col_at(a, xs[i], xs[i + 1]), col_at(b, xs[i], xs[i + 1]));
  r.canonicalize();
  return r;
}

SlabRegion SlabRegion::from_box(const Rat& x0, const Rat& y0, const Rat& x1, const Rat& y1) {
  if (!(x0 < x1) || !(y0 < y1)) throw Error("degenerate box");
  SlabRegion r;
  r.xs = {x0, x1};
  r.cols = {{{y0, y1}}};
  return r;
}

namespace {

struct Edge {
  Pt a, b;
  bool horizontal() const { return a.y == b.y; }
};

std::vector<Edge> ring_edges(const Ring& ring) {
  std::vector<Edge> es;
  for (size_t i = 0; i < ring.size(); ++i) {
    const Pt& u = ring[i];
    const Pt& v = ring[(i + 1) % ring.size()];
    es.push_back({u, v});
  }
  return es;
}

bool segments_touch(const Edge& e, const Edge& f) {
  auto span = [](const Rat& a, const Rat& b) {
    return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
  };
  auto [ex0, ex1] = span(e.a.x, e.b.x);
  auto [ey0, ey1] = span(e.a.y, e.b.y);
  auto [fx0, fx1] = span(f.a.x, f.b.x);
  auto [fy0, fy1] = span(f.a.y, f.b.y);
  return !(ex1 < fx0) && !(fx1 < ex0) && !(ey1 < fy0) && !(fy1 < ey0);
}

void validate_ring(const Ring& ring) {
  if (ring.size() < 4) throw ValidationError("ring needs at least 4 vertices");
  auto es = ring_edges(ring);
  for (size_t i = 0; i < es.size(); ++i) {
    const Edge& e = es[i];
    bool h = e.a.y == e.b.y;
    bool v = e.a.x == e.b.x;
    if (h == v) throw ValidationError("ring edge must be axis-aligned and nondegenerate");
    const Edge& next = es[(i + 1) % es.size()];
    bool nh = next.a.y == next.b.y;
    if (h == nh) throw ValidationError("consecutive ring edges must alternate direction");
  }
  // simplicity: non-adjacent edges must not touch
  for (size_t i = 0; i < es.size(); ++i)
    for (size_t j = i + 1; j < es.size(); ++j) {
      bool adjacent = (j == i + 1) || (i == 0 && j == es.size() - 1);
      if (adjacent) continue;
      if (segments_touch(es[i], es[j])) throw ValidationError("ring is not simple");
    }
}

}  // namespace

SlabRegion region_from_rings(const std::vector<Ring>& rings) {
  if (rings.empty()) throw ValidationError("no rings");
  for (auto& r : rings) validate_ring(r);
  for (size_t i = 0; i < rings.size(); ++i)
    for (size_t j = i + 1; j < rings.size(); ++j) {
      auto ei = ring_edges(rings[i]);
      auto ej = ring_edges(rings[j]);
      for (auto& e : ei)
        for (auto& f : ej)
          if (segments_touch(e, f)) throw ValidationError("rings must be disjoint");
    }
  std::vector<Rat> xs;
  for (auto& r : rings)
    for (auto& p : r) xs.push_back(p.x);
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  if (xs.size() < 2) throw ValidationError("degenerate polygon");
  SlabRegion region;
  region.xs = xs;
  region.cols.resize(xs.size() - 1);
  for (size_t i = 0; i + 1 < xs.size(); ++i) {
    std::vector<Rat> ys;
    for (auto& r : rings) {
      auto es = ring_edges(r);
      for (auto& e : es) {
        if (!e.horizontal()) continue;
        Rat lo = std::min(e.a.x, e.b.x), hi = std::max(e.a.x, e.b.x);
        if (!(xs[i] < lo) && !(hi < xs[i + 1])) ys.push_back(e.a.y);
      }
    }
    std::sort(ys.begin(), ys.end());
    if (ys.size() % 2 != 0) throw ValidationError("inconsistent polygon boundary");
    IntervalList col;
    for (size_t k = 0; k + 1 < ys.size(); k += 2) col.emplace_back(ys[k], ys[k + 1]);
    normalize_intervals(col);
    region.cols[i] = std::move(col);
  }
  region.canonicalize();
  if (region.empty()) throw ValidationError("polygon encloses no area");
  return region;
}

namespace {

struct DirEdge {
  Pt a, b;  // walk a -> b, region interior on the left
};

int dir_code(const Pt& a, const Pt& b) {
  // 0=east 1=north 2=west 3=south
  if (a.y == b.y) return a.x < b.x ? 0 : 2;
  return a.y < b.y ? 1 : 3;
}

}  // namespace

std::vector<Ring> rings_from_region(const SlabRegion& region) {
  std::vector<Ring> out;
  if (region.empty()) throw ValidationError("empty region has no rings");
  std::vector<DirEdge> edges;
  // horizontal edges per slab
  for (size_t i = 0; i < region.cols.size(); ++i) {
    const Rat& x0 = region.xs[i];
    const Rat& x1 = region.xs[i + 1];
    for (auto& iv : region.cols[i]) {
      edges.push_back({{x0, iv.first}, {x1, iv.first}});   // bottom, interior above
      edges.push_back({{x1, iv.second}, {x0, iv.second}});  // top, interior below
    }
  }
  // vertical edges at slab boundaries
  for (size_t bi = 0; bi < region.xs.size(); ++bi) {
    const Rat& x = region.xs[bi];
    IntervalList left = bi >= 1 ? region.cols[bi - 1] : IntervalList{};
    IntervalList right = bi < region.cols.size() ? region.cols[bi] : IntervalList{};
    std::vector<Rat> ys;
    for (auto& iv : left) ys.push_back(iv.first), ys.push_back(iv.second);
    for (auto& iv : right) ys.push_back(iv.first), ys.push_back(iv.second);
    std::sort(ys.begin(), ys.end());
    ys.erase(std::unique(ys.begin(), ys.end()), ys.end());
    for (size_t k = 0; k + 1 < ys.size(); ++k) {
      Rat mid = (ys[k] + ys[k + 1]) / Rat(2);
      bool inl = point_in_closed(left, mid);
      bool inr = point_in_closed(right, mid);
      if (inr && !inl) edges.push_back({{x, ys[k + 1]}, {x, ys[k]}});  // interior east: walk south
      if (inl && !inr) edges.push_back({{x, ys[k]}, {x, ys[k + 1]}});  // interior west: walk north
    }
  }
  // split horizontal edges at vertical edge endpoints on the same row so
  // vertices line up, then merge collinear runs after stitching
  std::map<std::pair<Rat, Rat>, std::vector<size_t>> outgoing;
  auto key = [](const Pt& p) { return std::make_pair(p.x, p.y); };
  // split horizontals at interior slab boundaries they span
  std::vector<DirEdge> split;
  for (auto& e : edges) {
    if (e.a.y == e.b.y) {
      Rat lo = std::min(e.a.x, e.b.x), hi = std::max(e.a.x, e.b.x);
      std::vector<Rat> cuts{lo};
      for (auto& x : region.xs)
        if (lo < x && x < hi) cuts.push_back(x);
      cuts.push_back(hi);
      bool fwd = e.a.x < e.b.x;
      if (!fwd) std::reverse(cuts.begin(), cuts.end());
      for (size_t k = 0; k + 1 < cuts.size(); ++k)
        split.push_back({{cuts[k], e.a.y}, {cuts[k + 1], e.a.y}});
    } else {
      split.push_back(e);
    }
  }
  for (size_t i = 0; i < split.size(); ++i) outgoing[key(split[i].a)].push_back(i);
  std::vector<bool> used(split.size(), false);
  for (size_t seed = 0; seed < split.size(); ++seed) {
    if (used[seed]) continue;
    Ring ring;
    size_t cur = seed;
    while (!used[cur]) {
      used[cur] = true;
      ring.push_back(split[cur].a);
      auto& outs = outgoing[key(split[cur].b)];
      int incoming = dir_code(split[cur].a, split[cur].b);
      // Deterministic successor: sharpest left turn keeps the interior
      // on the left and splits pinch vertices into separate rings.
      size_t next = SIZE_MAX;
      int best = -1;
      for (size_t cand : outs) {
        int turn = ((dir_code(split[cand].a, split[cand].b) - incoming) + 4) % 4;
        if (turn == 2) continue;  // no U-turns
        int score = turn == 1 ? 3 : (turn == 0 ? 2 : 1);
        if (score > best) {
          best = score;
          next = cand;
        }
      }
      if (next == SIZE_MAX || (used[next] && next != seed))
        throw Error("internal: boundary trace failed");
      if (next == seed) break;
      cur = next;
    }
    // drop collinear intermediate vertices
    Ring clean;
    size_t m = ring.size();
    for (size_t i = 0; i < m; ++i) {
      const Pt& prev = ring[(i + m - 1) % m];
      const Pt& here = ring[i];
      const Pt& nxt = ring[(i + 1) % m];
      bool collinear = (prev.x == here.x && here.x == nxt.x) || (prev.y == here.y && here.y == nxt.y);
      if (!collinear) clean.push_back(here);
    }
    if (clean.size() >= 4) out.push_back(std::move(clean));
  }
  // orient: signed area > 0 means counterclockwise (outer)
  auto signed_area2 = [](const Ring& r) {
    Rat s(0);
    for (size_t i = 0; i < r.size(); ++i) {
      const Pt& u = r[i];
      const Pt& v = r[(i + 1) % r.size()];
      s += u.x * v.y - v.x * u.y;
    }
    return s;
  };
  auto rotate_to_min = [](Ring& r) {
    size_t best = 0;
    for (size_t i = 1; i < r.size(); ++i)
      if (std::make_pair(r[i].x, r[i].y) < std::make_pair(r[best].x, r[best].y)) best = i;
    std::rotate(r.begin(), r.begin() + best, r.end());
  };
  std::vector<Ring> outers, holes;
  for (auto& r : out) {
    if (Rat(0) < signed_area2(r))
      outers.push_back(r);
    else
      holes.push_back(r);
  }
  if (outers.size() != 1)
    throw ValidationError("region boundary is pinched or disconnected; cannot serialize");
  for (auto& r : outers) rotate_to_min(r);
  for (auto& r : holes) rotate_to_min(r);
  std::sort(holes.begin(), holes.end(), [](const Ring& a, const Ring& b) {
    return std::make_pair(a[0].x, a[0].y) < std::make_pair(b[0].x, b[0].y);
  });
  std::vector<Ring> result;
  result.push_back(outers[0]);
  for (auto& h : holes) result.push_back(h);
  return result;
}

bool CreasePattern2D::all_unassigned() const {
  return std::all_of(creases.begin(), creases.end(), [](const CreaseSegment& c) {
    return c.assignment == Assignment::Unassigned;
  });
}

std::vector<CreaseSegment> CreasePattern2D::creases_on_line(const AxisLine& line) const {
  std::vector<CreaseSegment> out;
  for (auto& c : creases)
    if (c.line() == line) out.push_back(c);
  return out;
}

namespace {

CreaseSegment normalize_crease(CreaseSegment c) {
  if (c.b.x < c.a.x || (c.a.x == c.b.x && c.b.y < c.a.y)) std::swap(c.a, c.b);
  return c;
}

std::vector<CreaseSegment> canonicalize_creases(std::vector<CreaseSegment> cs, bool reject_overlap) {
  for (auto& c : cs) c = normalize_crease(c);
  std::sort(cs.begin(), cs.end(), [](const CreaseSegment& a, const CreaseSegment& b) {
    AxisLine la = a.line(), lb = b.line();
    if (!(la == lb)) return la < lb;
    return a.span() < b.span();
  });
  std::vector<CreaseSegment> out;
  for (auto& c : cs) {
    if (!out.empty() && out.back().line() == c.line()) {
      auto& prev = out.back();
      auto [plo, phi] = prev.span();
      auto [lo, hi] = c.span();
      (void)plo;
      (void)lo;
      if (c.span().first < phi) {
        if (reject_overlap) throw ValidationError("collinear creases overlap");
        throw Error("internal: overlapping creases after merge");
      }
      if (c.span().first == phi && prev.assignment == c.assignment) {
        // merge touching same-assignment runs
        if (prev.a.x == prev.b.x)
          prev.b.y = hi;
        else
          prev.b.x = hi;
        continue;
      }
    }
    out.push_back(c);
  }
  return out;
}

}  // namespace

CreasePattern2D make_pattern2d(const std::vector<Ring>& rings, std::vector<CreaseSegment> creases) {
  CreasePattern2D p;
  p.paper = region_from_rings(rings);
  if (!p.paper.connected()) throw ValidationError("paper must be connected");
  p.has_holes = rings.size() > 1;
  for (auto& c : creases) {
    bool h = c.a.y == c.b.y && c.a.x != c.b.x;
    bool v = c.a.x == c.b.x && c.a.y != c.b.y;
    if (h == v) throw ValidationError("crease must be axis-aligned with positive length");
    c = normalize_crease(c);
    auto [lo, hi] = c.span();
    if (!interval_contains(p.paper.closed_slice(c.line()), lo, hi))
      throw ValidationError("crease not contained in the paper");
  }
  p.creases = canonicalize_creases(std::move(creases), /*reject_overlap=*/true);
  return p;
}

namespace {

std::vector<std::string> split_ws(const std::string& line) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (std::isspace((unsigned char)ch)) {
      if (!cur.empty()) out.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

}  // namespace

CreasePattern2D parse_pattern2d(std::string_view text) {
  enum class Section { None, Paper, Hole, Creases };
  Section sec = Section::None;
  std::vector<Ring> rings;
  Ring cur;
  std::vector<CreaseSegment> creases;
  std::istringstream in{std::string(text)};
  std::string line;
  auto flush_ring = [&] {
    if (sec == Section::Paper || sec == Section::Hole) {
      if (cur.empty()) throw ParseError("empty ring section");
      rings.push_back(std::move(cur));
      cur.clear();
    }
  };
  while (std::getline(in, line)) {
    if (auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    auto tok = split_ws(line);
    if (tok.empty()) continue;
    if (tok.size() == 1 && (tok[0] == "PAPER" || tok[0] == "HOLE" || tok[0] == "CREASES")) {
      flush_ring();
      if (tok[0] == "PAPER") {
        if (sec != Section::None) throw ParseError("PAPER section must come first and only once");
        sec = Section::Paper;
      } else if (tok[0] == "HOLE") {
        if (sec == Section::None || sec == Section::Creases)
          throw ParseError("HOLE section out of order");
        sec = Section::Hole;
      } else {
        if (sec == Section::None) throw ParseError("CREASES before PAPER");
        sec = Section::Creases;
      }
      continue;
    }
    switch (sec) {
      case Section::Paper:
      case Section::Hole: {
        if (tok.size() != 2) throw ParseError("ring vertex needs 'x y'");
        cur.push_back(Pt{Rat::parse(tok[0]), Rat::parse(tok[1])});
        break;
      }
      case Section::Creases: {
        if (tok.size() != 5) throw ParseError("crease row needs 'x1 y1 x2 y2 A'");
        auto a = assignment_from_char(tok[4].size() == 1 ? tok[4][0] : '?');
        if (!a) throw ParseError("bad crease assignment: " + tok[4]);
        creases.push_back(CreaseSegment{Pt{Rat::parse(tok[0]), Rat::parse(tok[1])},
                                        Pt{Rat::parse(tok[2]), Rat::parse(tok[3])}, *a});
        break;
      }
      default:
        throw ParseError("content before PAPER section");
    }
  }
  flush_ring();
  if (rings.empty()) throw ParseError("missing PAPER section");
  return make_pattern2d(rings, std::move(creases));
}

std::string format_pattern2d(const CreasePattern2D& p) {
  auto rings = rings_from_region(p.paper);
  std::string out;
  for (size_t i = 0; i < rings.size(); ++i) {
    out += i == 0 ? "PAPER\n" : "HOLE\n";
    for (auto& v : rings[i]) {
      out += v.x.str();
      out += ' ';
      out += v.y.str();
      out += '\n';
    }
  }
  out += "CREASES\n";
  for (auto& c : p.creases) {
    out += c.a.x.str();
    out += ' ';
    out += c.a.y.str();
    out += ' ';
    out += c.b.x.str();
    out += ' ';
    out += c.b.y.str();
    out += ' ';
    out += assignment_char(c.assignment);
    out += '\n';
  }
  return out;
}

SlabRegion bounding_box(const SlabRegion& paper) {
  auto [x0, y0, x1, y1] = paper.bbox();
  return SlabRegion::from_box(x0, y0, x1, y1);
}

bool region_has_holes(const SlabRegion& region) {
  if (region.empty()) return false;
  auto [x0, y0, x1, y1] = region.bbox();
  Rat fy0 = y0 - Rat(1), fy1 = y1 + Rat(1);
  SlabRegion comp;
  comp.xs.push_back(x0 - Rat(1));
  for (auto& x : region.xs) comp.xs.push_back(x);
  comp.xs.push_back(x1 + Rat(1));
  comp.cols.resize(comp.xs.size() - 1);
  comp.cols.front() = {{fy0, fy1}};
  comp.cols.back() = {{fy0, fy1}};
  for (size_t i = 0; i < region.cols.size(); ++i) {
    IntervalList c;
    Rat at = fy0;
    for (auto& iv : region.cols[i]) {
      if (at < iv.first) c.emplace_back(at, iv.first);
      at = iv.second;
    }
    if (at < fy1) c.emplace_back(at, fy1);
    comp.cols[i + 1] = std::move(c);
  }
  return !comp.connected();
}

std::vector<AxisLine> supporting_lines(const CreasePattern2D& p) {
  std::vector<AxisLine> lines;
  for (auto& c : p.creases) lines.push_back(c.line());
  std::sort(lines.begin(), lines.end());
  lines.erase(std::unique(lines.begin(), lines.end()), lines.end());
  return lines;
}

namespace {

// Gaps of the open interval (lo, hi) not covered by the closed spans.
IntervalList open_minus_closed(const Rat& lo, const Rat& hi, const IntervalList& covers) {
  IntervalList gaps;
  Rat at = lo;
  for (auto& c : covers) {
    if (!(c.first < hi)) break;
    if (c.second < at || c.second == at) continue;
    if (at < c.first) gaps.emplace_back(at, std::min(c.first, hi));
    at = c.second;
    if (!(at < hi)) return gaps;
  }
  if (at < hi) gaps.emplace_back(at, hi);
  return gaps;
}

}  // namespace

LineCoverResult check_line_cover(const CreasePattern2D& p) {
  for (auto& line : supporting_lines(p)) {
    IntervalList spans;
    for (auto& c : p.creases_on_line(line)) spans.push_back(c.span());
    normalize_intervals(spans);
    for (auto& open_iv : p.paper.interior_slice(line)) {
      auto gaps = open_minus_closed(open_iv.first, open_iv.second, spans);
      if (!gaps.empty()) {
        Rat mid = (gaps[0].first + gaps[0].second) / Rat(2);
        Pt w = line.axis == Axis::Vertical ? Pt{line.coord, mid} : Pt{mid, line.coord};
        return LineCoverResult{false, line, w};
      }
    }
  }
  return LineCoverResult{};
}

CreasePattern2D pattern_from_lines(const SlabRegion& paper, const std::vector<AxisLine>& lines) {
  CreasePattern2D p;
  p.paper = paper;
  std::vector<CreaseSegment> cs;
  for (auto& line : lines) {
    for (auto& iv : paper.interior_slice(line)) {
      if (line.axis == Axis::Vertical)
        cs.push_back(CreaseSegment{Pt{line.coord, iv.first}, Pt{line.coord, iv.second},
                                   Assignment::Unassigned});
      else
        cs.push_back(CreaseSegment{Pt{iv.first, line.coord}, Pt{iv.second, line.coord},
                                   Assignment::Unassigned});
    }
  }
  p.creases = canonicalize_creases(std::move(cs), /*reject_overlap=*/false);
  return p;
}

}  // namespace sfold
