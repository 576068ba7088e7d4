#include "sfold/core1d.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace sfold {

char assignment_char(Assignment a) {
  switch (a) {
    case Assignment::Mountain: return 'M';
    case Assignment::Valley: return 'V';
    default: return 'U';
  }
}

std::optional<Assignment> assignment_from_char(char c) {
  switch (c) {
    case 'M': return Assignment::Mountain;
    case 'V': return Assignment::Valley;
    case 'U': return Assignment::Unassigned;
    default: return std::nullopt;
  }
}

Rat Pattern1D::total() const {
  Rat t;
  for (const Rat& s : segments) t += s;
  return t;
}

Rat Pattern1D::position(int c) const {
  if (c < 1 || c > n()) throw IndexError("crease index out of range");
  Rat t;
  for (int i = 0; i < c; ++i) t += segments[i];
  return t;
}

std::vector<Rat> Pattern1D::positions() const {
  std::vector<Rat> pos(segments.size() + 1);
  Rat t;
  pos[0] = t;
  for (size_t i = 0; i < segments.size(); ++i) {
    t += segments[i];
    pos[i + 1] = t;
  }
  return pos;
}

Pattern1D Pattern1D::reversed() const {
  Pattern1D r;
  r.segments.assign(segments.rbegin(), segments.rend());
  r.assignments.assign(assignments.rbegin(), assignments.rend());
  return r;
}

bool Pattern1D::all_unassigned() const {
  return std::all_of(assignments.begin(), assignments.end(),
                     [](Assignment a) { return a == Assignment::Unassigned; });
}

bool Pattern1D::all_assigned() const {
  return std::all_of(assignments.begin(), assignments.end(),
                     [](Assignment a) { return a != Assignment::Unassigned; });
}

Pattern1D parse_pattern1d(std::string_view text) {
  std::vector<std::string> tokens;
  std::string cur;
  for (char ch : text) {
    if (std::isspace((unsigned char)ch)) {
      if (!cur.empty()) tokens.push_back(std::move(cur)), cur.clear();
    } else {
      cur.push_back(ch);
    }
  }
  if (!cur.empty()) tokens.push_back(std::move(cur));
  if (tokens.empty()) throw ParseError("empty 1D pattern");
  if (tokens.size() % 2 == 0)
    throw ParseError("1D pattern needs an odd token count (d0 a1 d1 ... an dn)");
  Pattern1D p;
  for (size_t i = 0; i < tokens.size(); ++i) {
    if (i % 2 == 0) {
      Rat len = Rat::parse(tokens[i]);
      if (!(Rat(0) < len)) throw ParseError("segment length must be positive: " + tokens[i]);
      p.segments.push_back(len);
    } else {
      if (tokens[i].size() != 1) throw ParseError("bad assignment token: " + tokens[i]);
      auto a = assignment_from_char(tokens[i][0]);
      if (!a) throw ParseError("bad assignment token: " + tokens[i]);
      p.assignments.push_back(*a);
    }
  }
  return p;
}

std::string format_pattern1d(const Pattern1D& p) {
  std::string out;
  for (size_t i = 0; i < p.segments.size(); ++i) {
    if (i > 0) {
      out += ' ';
      out += assignment_char(p.assignments[i - 1]);
      out += ' ';
    }
    out += p.segments[i].str();
  }
  return out;
}

Symbol comp(const Symbol& s) {
  if (std::holds_alternative<Rat>(s)) return s;
  return Symbol(comp(std::get<Assignment>(s)));
}

Symbol symbol_at(const Pattern1D& p, int pos) {
  int len = 2 * p.n() + 1;
  if (pos < 1 || pos > len) throw IndexError("symbol position out of range");
  if (pos % 2 == 1) return Symbol(p.segments[(pos - 1) / 2]);
  return Symbol(p.assignments[pos / 2 - 1]);
}

namespace {

// Two assignments merge cleanly when the reflected one lands on the other:
// either is unassigned, or the reflection of `moved` equals `stationary`.
bool merge_compatible(Assignment moved, Assignment stationary) {
  return moved == Assignment::Unassigned || stationary == Assignment::Unassigned ||
         comp(moved) == stationary;
}

}  // namespace

LegalityReport1D legal_fold_1d(const Pattern1D& p, int c) {
  if (c < 1 || c > p.n()) throw IndexError("crease index out of range");
  auto P = p.positions();
  const Rat x = P[c];
  const Rat total = P[p.n() + 1];
  LegalityReport1D rep;
  int li = c - 1;
  int ri = c + 1;
  while (li >= 1 || ri <= p.n()) {
    if (li >= 1 && ri <= p.n()) {
      Rat dl = x - P[li];
      Rat dr = P[ri] - x;
      if (dl == dr) {
        if (!merge_compatible(p.assignments[li - 1], p.assignments[ri - 1])) {
          rep.cond4 = false;
          if (!rep.conflict) rep.conflict = std::make_pair(li, ri);
        }
        --li;
        ++ri;
      } else if (dl < dr) {
        // Left crease mirrors into an open gap on the right side.
        Rat mirror = x + dl;
        if (mirror < total) {
          rep.cond2 = false;
          if (!rep.uncovered_point) rep.uncovered_point = mirror;
          return rep;
        }
        --li;
      } else {
        Rat mirror = x - dr;
        if (Rat(0) < mirror) {
          rep.cond2 = false;
          if (!rep.uncovered_point) rep.uncovered_point = mirror;
          return rep;
        }
        ++ri;
      }
    } else if (ri <= p.n()) {
      // Left side exhausted: remaining right creases must mirror onto or
      // beyond the left paper edge.
      Rat mirror = x - (P[ri] - x);
      if (Rat(0) < mirror) {
        rep.cond2 = false;
        if (!rep.uncovered_point) rep.uncovered_point = mirror;
        return rep;
      }
      break;  // farther creases mirror even farther out
    } else {
      Rat mirror = x + (x - P[li]);
      if (mirror < total) {
        rep.cond2 = false;
        if (!rep.uncovered_point) rep.uncovered_point = mirror;
        return rep;
      }
      break;
    }
  }
  return rep;
}

Pattern1D apply_fold_1d(const Pattern1D& p, int c) {
  LegalityReport1D rep = legal_fold_1d(p, c);
  if (!rep.legal()) throw IllegalFoldError("fold at crease " + std::to_string(c) + " is illegal");
  auto P = p.positions();
  const Rat x = P[c];
  const Rat total = P[p.n() + 1];
  const int n = p.n();
  const bool left_moves = x + x <= total;  // ties fold the left flap
  Pattern1D r;
  if (left_moves) {
    r.segments.assign(p.segments.begin() + c, p.segments.end());
    r.assignments.assign(p.assignments.begin() + c, p.assignments.end());
    int li = c - 1, ri = c + 1;
    while (li >= 1 && ri <= n) {
      Rat dl = x - P[li];
      Rat dr = P[ri] - x;
      if (dl == dr) {
        Assignment stat = p.assignments[ri - 1];
        if (stat == Assignment::Unassigned) stat = comp(p.assignments[li - 1]);
        r.assignments[ri - (c + 1)] = stat;
        --li;
        ++ri;
      } else if (dl < dr) {
        --li;
      } else {
        ++ri;
      }
    }
  } else {
    r.segments.assign(p.segments.begin(), p.segments.begin() + c);
    r.assignments.assign(p.assignments.begin(), p.assignments.begin() + (c - 1));
    int li = c - 1, ri = c + 1;
    while (li >= 1 && ri <= n) {
      Rat dl = x - P[li];
      Rat dr = P[ri] - x;
      if (dl == dr) {
        Assignment stat = p.assignments[li - 1];
        if (stat == Assignment::Unassigned) stat = comp(p.assignments[ri - 1]);
        r.assignments[li - 1] = stat;
        --li;
        ++ri;
      } else if (dl < dr) {
        --li;
      } else {
        ++ri;
      }
    }
  }
  return r;
}

namespace {

// Window into a pattern's symbol string, optionally reversed. Symbol
// positions are 1-based: odd positions are segment lengths, even
// positions are crease assignments.
struct SymView {
  const Pattern1D* p = nullptr;
  int seg_lo = 0;
  int ncr = 0;
  bool rev = false;
  CompCounter* cnt = nullptr;

  int len() const { return 2 * ncr + 1; }

  const Rat& len_sym(int pos) const {
    int j = (pos - 1) / 2;
    return p->segments[rev ? seg_lo + ncr - j : seg_lo + j];
  }

  Assignment asg_sym(int pos) const {
    int c = pos / 2;
    return p->assignments[rev ? seg_lo + ncr - c : seg_lo + c - 1];
  }

  // S[a] == comp(S[b]) for same-parity positions.
  bool match_comp(int a, int b) const {
    if (cnt) ++cnt->comparisons;
    if (a % 2 == 1) return len_sym(a) == len_sym(b);
    return asg_sym(a) == comp(asg_sym(b));
  }

  bool le(int a, int b) const {
    if (cnt) ++cnt->comparisons;
    return len_sym(a) <= len_sym(b);
  }
};

// Failure-number scan for the leftmost crease k (even string position)
// whose prefix mirrors onto the string after it: S[k-i] == comp(S[k+i])
// for i in [1, k-2], and S[1] <= S[2k-1] at the boundary offset. Failure
// numbers let a dead candidate transfer its verified span to the next
// viable one, so the total work stays linear in the scan position.
struct PrefixScanner {
  SymView s;
  std::vector<int> fail_off;  // by even string position; 0 = unset
  long long k = 2;
  long long it = 3;
  bool done = false;
  int result = 0;  // winning string position, 0 when no prefix fold exists

  explicit PrefixScanner(SymView v) : s(v) {
    if (s.ncr < 1) {
      done = true;
    } else {
      fail_off.assign(s.len() + 1, 0);
    }
  }

  // Advances by one scan position (at most one symbol comparison).
  // Returns true when the scan has finished.
  bool step() {
    if (done) return true;
    if (it > s.len()) {
      done = true;
      return true;
    }
    long long i = it - k;
    if (i < 1) {
      ++it;
      return false;
    }
    if (i == k - 1) {
      if (s.le(1, (int)it)) {
        done = true;
        result = (int)k;
        return true;
      }
      fail((int)i);
      return false;
    }
    if (s.match_comp((int)(k - i), (int)it)) {
      ++it;
      return false;
    }
    fail((int)i);
    return false;
  }

  void run() {
    while (!step()) {
    }
  }

private:
  void fail(int i) {
    fail_off[k] = i;
    long long kp = k + 2;
    while (kp < it) {
      long long mirror = 2 * k - kp;
      long long fm = fail_off[mirror];
      long long rem = it - kp;
      if (fm == rem) {
        // Inconclusive: kp inherits the verified span and the current
        // position is re-examined against it.
        k = kp;
        return;
      }
      fail_off[kp] = (int)std::min(fm, rem);
      kp += 2;
    }
    k = kp;
  }
};

std::optional<Fold1DResult> scanner_leftmost(const Pattern1D& p, int seg_lo, int ncr,
                                             CompCounter* cnt) {
  if (ncr < 1) return std::nullopt;
  PrefixScanner fwd(SymView{&p, seg_lo, ncr, false, cnt});
  PrefixScanner rev(SymView{&p, seg_lo, ncr, true, cnt});
  for (;;) {
    if (!fwd.done && fwd.step() && fwd.result > 0)
      return Fold1DResult{fwd.result / 2, Side::Left};
    if (!rev.done && rev.step() && rev.result > 0)
      return Fold1DResult{ncr + 1 - rev.result / 2, Side::Right};
    if (fwd.done && rev.done) return std::nullopt;
  }
}

// Direct legality walk over a window, restricted to folds whose flap on
// `side` fits into the rest. Costs one count per pair/boundary test.
// Instantiated with exact rational positions and, for integral
// patterns, with plain integers (identical counting either way).
template <typename PosT>
bool naive_window_fits_legal(const Pattern1D& p, const std::vector<PosT>& P, int seg_lo, int ncr,
                             int c_local, bool left_flap, CompCounter* cnt) {
  const int g = seg_lo + c_local;
  const PosT x = P[g];
  const PosT lo = P[seg_lo];
  const PosT hi = P[seg_lo + ncr + 1];
  auto count = [&] {
    if (cnt) ++cnt->comparisons;
  };
  count();
  if (left_flap) {
    if (!((x - lo) + (x - lo) <= hi - lo)) return false;
  } else {
    if (!((hi - x) + (hi - x) <= hi - lo)) return false;
  }
  int li = g - 1, ri = g + 1;
  const int lmin = seg_lo + 1, rmax = seg_lo + ncr;
  while (li >= lmin || ri <= rmax) {
    if (li >= lmin && ri <= rmax) {
      PosT dl = x - P[li];
      PosT dr = P[ri] - x;
      count();
      if (dl == dr) {
        count();
        if (!merge_compatible(p.assignments[li - 1], p.assignments[ri - 1])) return false;
        --li;
        ++ri;
      } else if (dl < dr) {
        if (x + dl < hi) return false;
        --li;
      } else {
        if (lo < x - dr) return false;
        ++ri;
      }
    } else if (ri <= rmax) {
      count();
      if (lo < x - (P[ri] - x)) return false;
      break;
    } else {
      count();
      if (x + (x - P[li]) < hi) return false;
      break;
    }
  }
  return true;
}

template <typename PosT>
std::optional<Fold1DResult> naive_leftmost(const Pattern1D& p, const std::vector<PosT>& P,
                                           int seg_lo, int ncr, CompCounter* cnt) {
  for (int d = 1; d <= ncr; ++d) {
    if (naive_window_fits_legal(p, P, seg_lo, ncr, d, true, cnt))
      return Fold1DResult{d, Side::Left};
    int mirror = ncr + 1 - d;
    if (naive_window_fits_legal(p, P, seg_lo, ncr, mirror, false, cnt))
      return Fold1DResult{mirror, Side::Right};
  }
  return std::nullopt;
}

void require_uniform_regime(const Pattern1D& p) {
  if (!p.all_assigned() && !p.all_unassigned())
    throw UnsupportedPartialAssignment(
        "pattern mixes assigned and unassigned creases; use the oracle instead");
}

template <typename FindFold>
Decision1D windowed_decide(const Pattern1D& p, FindFold find) {
  int seg_lo = 0;
  int ncr = p.n();
  Decision1D d;
  while (ncr > 0) {
    std::optional<Fold1DResult> f = find(seg_lo, ncr);
    if (!f) return Decision1D{false, {}};
    d.witness.push_back(f->crease_index);
    if (f->side == Side::Left) {
      seg_lo += f->crease_index;
      ncr -= f->crease_index;
    } else {
      ncr = f->crease_index - 1;
    }
  }
  d.foldable = true;
  return d;
}

}  // namespace

std::optional<int> leftmost_prefix_fold(const Pattern1D& p, CompCounter* cnt) {
  if (p.n() < 1) return std::nullopt;
  PrefixScanner sc(SymView{&p, 0, p.n(), false, cnt});
  sc.run();
  if (sc.result > 0) return sc.result / 2;
  return std::nullopt;
}

std::optional<int> naive_leftmost_prefix_fold(const Pattern1D& p, CompCounter* cnt) {
  auto P = p.positions();
  for (int c = 1; c <= p.n(); ++c)
    if (naive_window_fits_legal(p, P, 0, p.n(), c, true, cnt)) return c;
  return std::nullopt;
}

std::optional<Fold1DResult> leftmost_legal_fold(const Pattern1D& p, CompCounter* cnt) {
  return scanner_leftmost(p, 0, p.n(), cnt);
}

Decision1D decide_1d(const Pattern1D& p, CompCounter* cnt) {
  require_uniform_regime(p);
  return windowed_decide(
      p, [&](int seg_lo, int ncr) { return scanner_leftmost(p, seg_lo, ncr, cnt); });
}

Decision1D naive_decide_1d(const Pattern1D& p, CompCounter* cnt) {
  require_uniform_regime(p);
  bool integral = std::all_of(p.segments.begin(), p.segments.end(),
                              [](const Rat& r) { return r.is_integer(); });
  if (integral) {
    constexpr long long kMax = 1LL << 61;
    std::vector<long long> P(p.segments.size() + 1, 0);
    for (size_t i = 0; i < p.segments.size(); ++i) {
      P[i + 1] = P[i] + p.segments[i].num();
      if (P[i + 1] > kMax) {
        integral = false;  // fall back to exact rationals
        break;
      }
    }
    if (integral)
      return windowed_decide(
          p, [&](int seg_lo, int ncr) { return naive_leftmost(p, P, seg_lo, ncr, cnt); });
  }
  auto P = p.positions();
  return windowed_decide(
      p, [&](int seg_lo, int ncr) { return naive_leftmost(p, P, seg_lo, ncr, cnt); });
}

Decision1D greedy_decide_1d(const Pattern1D& p, CompCounter* cnt) {
  Pattern1D cur = p;
  Decision1D d;
  while (cur.n() > 0) {
    auto P = cur.positions();
    std::optional<Fold1DResult> f = naive_leftmost(cur, P, 0, cur.n(), cnt);
    if (!f) return Decision1D{false, {}};
    d.witness.push_back(f->crease_index);
    cur = apply_fold_1d(cur, f->crease_index);
  }
  d.foldable = true;
  return d;
}

}  // namespace sfold
