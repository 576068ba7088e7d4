#include "sfold/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <set>

namespace sfold {

namespace {

void encode_rat(std::string& s, const Rat& r) {
  s += std::to_string(r.num());
  s += '/';
  s += std::to_string(r.den());
  s += ';';
}

std::string encode1d(const Pattern1D& p) {
  std::string s;
  for (size_t i = 0; i < p.segments.size(); ++i) {
    encode_rat(s, p.segments[i]);
    if (i < p.assignments.size()) s += assignment_char(p.assignments[i]);
  }
  return s;
}

std::string canonical1d(const Pattern1D& p) {
  return std::min(encode1d(p), encode1d(p.reversed()));
}

}  // namespace

OracleResult1D oracle_1d(const Pattern1D& p) {
  std::set<std::string> unfoldable;
  std::vector<int> witness;
  std::function<bool(const Pattern1D&)> dfs = [&](const Pattern1D& cur) -> bool {
    if (cur.n() == 0) return true;
    std::string key = canonical1d(cur);
    if (unfoldable.count(key)) return false;
    for (int c = 1; c <= cur.n(); ++c) {
      if (!legal_fold_1d(cur, c).legal()) continue;
      witness.push_back(c);
      if (dfs(apply_fold_1d(cur, c))) return true;
      witness.pop_back();
    }
    unfoldable.insert(key);
    return false;
  };
  if (dfs(p)) return OracleResult1D{Verdict::Foldable, std::move(witness)};
  return OracleResult1D{Verdict::Unfoldable, {}};
}

namespace {

SlabRegion translated(const SlabRegion& r, const Rat& dx, const Rat& dy) {
  SlabRegion t = r;
  for (auto& x : t.xs) x += dx;
  for (auto& c : t.cols)
    for (auto& iv : c) {
      iv.first += dy;
      iv.second += dy;
    }
  return t;
}

CreasePattern2D transformed(const CreasePattern2D& p, bool mirror_x, bool mirror_y) {
  SlabRegion reg = p.paper;
  std::vector<CreaseSegment> cs = p.creases;
  auto flip_pt = [&](Pt q) {
    if (mirror_x) q.x = -q.x;
    if (mirror_y) q.y = -q.y;
    return q;
  };
  if (mirror_x) reg = reg.reflected(AxisLine{Axis::Vertical, Rat(0)});
  if (mirror_y) reg = reg.reflected(AxisLine{Axis::Horizontal, Rat(0)});
  for (auto& c : cs) {
    c.a = flip_pt(c.a);
    c.b = flip_pt(c.b);
    if (c.b.x < c.a.x || (c.a.x == c.b.x && c.b.y < c.a.y)) std::swap(c.a, c.b);
  }
  auto [x0, y0, x1, y1] = reg.bbox();
  (void)x1;
  (void)y1;
  CreasePattern2D out;
  out.paper = translated(reg, -x0, -y0);
  for (auto& c : cs) {
    c.a.x -= x0;
    c.a.y -= y0;
    c.b.x -= x0;
    c.b.y -= y0;
  }
  std::sort(cs.begin(), cs.end(), [](const CreaseSegment& a, const CreaseSegment& b) {
    AxisLine la = a.line(), lb = b.line();
    if (!(la == lb)) return la < lb;
    return a.span() < b.span();
  });
  out.creases = std::move(cs);
  out.has_holes = p.has_holes;
  return out;
}

std::string encode2d(const CreasePattern2D& p) {
  std::string s;
  for (auto& x : p.paper.xs) encode_rat(s, x);
  s += '|';
  for (auto& col : p.paper.cols) {
    for (auto& iv : col) {
      encode_rat(s, iv.first);
      encode_rat(s, iv.second);
    }
    s += ',';
  }
  s += '|';
  for (auto& c : p.creases) {
    s += c.line().axis == Axis::Vertical ? 'V' : 'H';
    encode_rat(s, c.line().coord);
    encode_rat(s, c.span().first);
    encode_rat(s, c.span().second);
    s += assignment_char(c.assignment);
  }
  return s;
}

// Canonical key: the smallest encoding over the four axis mirrors,
// translated to the origin. Mirrors preserve foldability.
std::string canonical2d(const CreasePattern2D& p) {
  std::string best;
  for (int mx = 0; mx < 2; ++mx)
    for (int my = 0; my < 2; ++my) {
      std::string e = encode2d(transformed(p, mx != 0, my != 0));
      if (best.empty() || e < best) best = std::move(e);
    }
  return best;
}

struct Search2D {
  SearchLimits lim;
  std::chrono::steady_clock::time_point deadline;
  std::set<std::string> unfoldable;
  std::uint64_t states = 0;
  std::vector<FoldLine> witness;

  enum { FOLDABLE = 1, UNFOLDABLE = 0, CUT = -1 };

  int dfs(const CreasePattern2D& cur, std::uint64_t depth) {
    if (cur.creases.empty()) return FOLDABLE;
    if (depth >= lim.max_depth) return CUT;
    if (++states > lim.max_states) return CUT;
    if ((states & 0x3ff) == 0 && std::chrono::steady_clock::now() > deadline) return CUT;
    std::string key = canonical2d(cur);
    if (unfoldable.count(key)) return UNFOLDABLE;
    bool cut = false;
    for (auto& f : legal_fold_lines(cur)) {
      witness.push_back(f);
      int r = dfs(apply_fold_2d(cur, f), depth + 1);
      if (r == FOLDABLE) return FOLDABLE;
      witness.pop_back();
      if (r == CUT) cut = true;
    }
    if (cut) return CUT;
    unfoldable.insert(key);
    return UNFOLDABLE;
  }
};

}  // namespace

OracleResult2D oracle_2d(const CreasePattern2D& p, const SearchLimits& lim) {
  Search2D s;
  s.lim = lim;
  s.deadline = std::chrono::steady_clock::now() + std::chrono::milliseconds(lim.max_millis);
  int r = s.dfs(p, 0);
  if (r == Search2D::FOLDABLE) return OracleResult2D{Verdict::Foldable, std::move(s.witness)};
  if (r == Search2D::UNFOLDABLE) return OracleResult2D{Verdict::Unfoldable, {}};
  return OracleResult2D{Verdict::Unknown, {}};
}

VerifyResult verify_witness(const Pattern1D& p, const std::vector<int>& witness) {
  Pattern1D cur = p;
  for (size_t i = 0; i < witness.size(); ++i) {
    int c = witness[i];
    if (c < 1 || c > cur.n()) return VerifyResult{false, i, "crease index out of range"};
    if (!legal_fold_1d(cur, c).legal()) return VerifyResult{false, i, "illegal fold"};
    cur = apply_fold_1d(cur, c);
  }
  if (cur.n() != 0) return VerifyResult{false, std::nullopt, "creases remain after replay"};
  return VerifyResult{true, std::nullopt, ""};
}

VerifyResult verify_witness(const CreasePattern2D& p, const std::vector<FoldLine>& witness) {
  CreasePattern2D cur = p;
  for (size_t i = 0; i < witness.size(); ++i) {
    if (!check_fold_legality_2d(cur, witness[i]).legal())
      return VerifyResult{false, i, "illegal fold " + format_fold_line(witness[i])};
    try {
      cur = apply_fold_2d(cur, witness[i]);
    } catch (const Error& e) {
      return VerifyResult{false, i, e.what()};
    }
  }
  if (!cur.creases.empty()) return VerifyResult{false, std::nullopt, "creases remain after replay"};
  return VerifyResult{true, std::nullopt, ""};
}

ConjectureReport conjecture_check_1d(const ConjectureFamily& family) {
  ConjectureReport rep;
  if (family.lengths.empty() || family.alphabet.empty())
    throw Error("conjecture family needs lengths and an assignment alphabet");
  for (int n = 0; n <= family.max_n; ++n) {
    const size_t nl = family.lengths.size();
    const size_t na = family.alphabet.size();
    std::vector<size_t> odo(2 * n + 1, 0);  // n+1 length slots then n assignment slots
    for (;;) {
      Pattern1D pat;
      for (int i = 0; i <= n; ++i) pat.segments.push_back(family.lengths[odo[i]]);
      for (int i = 0; i < n; ++i) pat.assignments.push_back(family.alphabet[odo[n + 1 + i]]);
      Decision1D greedy = greedy_decide_1d(pat);
      OracleResult1D oracle = oracle_1d(pat);
      ++rep.patterns_checked;
      if (greedy.foldable != (oracle.verdict == Verdict::Foldable))
        rep.disagreements.push_back(ConjectureCase{pat, greedy.foldable, oracle.verdict});
      // odometer
      size_t pos = 0;
      for (; pos < odo.size(); ++pos) {
        size_t base = pos <= (size_t)n ? nl : na;
        if (++odo[pos] < base) break;
        odo[pos] = 0;
      }
      if (pos == odo.size()) break;
    }
  }
  return rep;
}

}  // namespace sfold
