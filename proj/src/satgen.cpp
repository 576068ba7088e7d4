#include "sfold/satgen.hpp"

#include <cctype>
#include <map>
#include <sstream>

namespace sfold {

CnfFormula parse_dimacs(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  CnfFormula cnf;
  int expected_clauses = -1;
  std::vector<int> pending;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == 'c' || line[0] == '%') continue;
    std::istringstream ls(line);
    if (line[0] == 'p') {
      std::string p, fmt;
      if (!(ls >> p >> fmt >> cnf.num_vars >> expected_clauses) || fmt != "cnf")
        throw ParseError("bad DIMACS header");
      if (cnf.num_vars < 1 || expected_clauses < 1)
        throw ParseError("DIMACS needs at least one variable and one clause");
      continue;
    }
    int lit;
    while (ls >> lit) {
      if (lit == 0) {
        if (pending.size() != 3)
          throw ParseError("every clause must have exactly 3 literals");
        cnf.clauses.push_back({pending[0], pending[1], pending[2]});
        pending.clear();
      } else {
        if (expected_clauses < 0) throw ParseError("clause before DIMACS header");
        int v = lit < 0 ? -lit : lit;
        if (v > cnf.num_vars) throw ParseError("literal exceeds declared variable count");
        pending.push_back(lit);
      }
    }
  }
  if (!pending.empty()) throw ParseError("unterminated clause");
  if (expected_clauses < 0) throw ParseError("missing DIMACS header");
  if ((int)cnf.clauses.size() != expected_clauses)
    throw ParseError("clause count does not match header");
  return cnf;
}

std::string format_dimacs(const CnfFormula& cnf) {
  std::string out = "p cnf " + std::to_string(cnf.num_vars) + " " +
                    std::to_string(cnf.clauses.size()) + "\n";
  for (auto& c : cnf.clauses)
    out += std::to_string(c[0]) + " " + std::to_string(c[1]) + " " + std::to_string(c[2]) + " 0\n";
  return out;
}

ReferenceGeometry reference_geometry(const CnfFormula& cnf) {
  ReferenceGeometry geo;
  const long long n = geo.n = cnf.num_vars;
  const long long m = geo.m = (long long)cnf.clauses.size();
  geo.width = 2 * n + m + 3;
  geo.height = 2 * n * (5 * m + 1) + 5 * m + 2;  // one unit of paper above the top reference row
  geo.f.assign(n + 2, 0);
  geo.t.assign(n + 2, 0);
  geo.fp.assign(n + 1, 0);
  geo.tp.assign(n + 1, 0);
  geo.v.assign(n + 1, 0);
  geo.vp.assign(n + 2, 0);
  for (long long i = 1; i <= n + 1; ++i) {
    geo.f[i] = 5 * m + 2 * (i - 1) * (5 * m + 1);
    geo.t[i] = geo.f[i] + 1;
  }
  for (long long i = 1; i <= n; ++i) {
    geo.fp[i] = geo.f[i] + 5 * m + 1;
    geo.tp[i] = geo.f[i] + 5 * m + 2;
    geo.v[i] = m + 2 * n - 2 * i + 2;
    geo.vp[i] = m + 2 * n - 2 * i + 3;
  }
  geo.vp[n + 1] = m + 1;
  geo.p.assign(m + 1, std::vector<Pt>(n + 2));
  geo.r.assign(m + 1, std::vector<Pt>(n + 1));
  geo.g.assign(m + 1, std::vector<Pt>(n + 1));
  for (long long j = 1; j <= m; ++j) {
    for (long long i = 1; i <= n + 1; ++i)
      geo.p[j][i] = Pt{Rat(j + 1), Rat(geo.f[i] - 5 * j + 2)};
    for (long long i = 1; i <= n; ++i) {
      // reflection of p[j][i] about f[i]; one unit-fold aligns them
      geo.r[j][i] = Pt{Rat(j + 1), Rat(geo.f[i] + 5 * j - 2)};
      geo.g[j][i] = Pt{geo.r[j][i].x, geo.r[j][i].y + Rat(2)};
    }
  }
  return geo;
}

namespace {

struct UnitCrease {
  bool vertical = false;
  long long x = 0, y = 0;  // lower/left endpoint of the unit segment
  bool operator<(const UnitCrease& o) const {
    return std::tie(vertical, x, y) < std::tie(o.vertical, o.x, o.y);
  }
};

struct Builder {
  const ReferenceGeometry& geo;
  std::map<UnitCrease, Assignment> asg;
  std::vector<AssignRun> runs;

  void check_bounds(const UnitCrease& c) {
    bool ok;
    if (c.vertical)
      ok = c.x >= 1 && c.x <= geo.width - 1 && c.y >= 0 && c.y <= geo.height - 1;
    else
      ok = c.y >= 1 && c.y <= geo.height - 1 && c.x >= 0 && c.x <= geo.width - 1;
    if (!ok)
      throw FeatureOutOfPaper("assigned crease outside the paper at (" + std::to_string(c.x) +
                              "," + std::to_string(c.y) + ")");
  }

  void set(const UnitCrease& c, Assignment a) {
    check_bounds(c);
    auto [it, inserted] = asg.try_emplace(c, a);
    if (!inserted && it->second != a)
      throw Error("conflicting assignment at (" + std::to_string(c.x) + "," +
                  std::to_string(c.y) + ")");
  }

  // `count` unit creases on a vertical line, starting `skip` creases
  // below the anchor and growing downward (or upward from the anchor).
  void vertical_run(const std::string& tag, long long x, long long anchor, long long count,
                    long long skip, bool upward, Assignment val) {
    runs.push_back(AssignRun{tag, AxisLine{Axis::Vertical, Rat(x)}, anchor, count, skip, upward, val});
    for (long long k = 0; k < count; ++k) {
      long long y = upward ? anchor + skip + k : anchor - skip - k - 1;
      set(UnitCrease{true, x, y}, val);
    }
  }

  void single(const std::string& tag, UnitCrease c, Assignment val) {
    runs.push_back(AssignRun{tag,
                             c.vertical ? AxisLine{Axis::Vertical, Rat(c.x)}
                                        : AxisLine{Axis::Horizontal, Rat(c.y)},
                             c.vertical ? c.y : c.x, 1, 0, true, val});
    set(c, val);
  }
};

}  // namespace

GeneratedInstance generate_instance(const CnfFormula& cnf) {
  GeneratedInstance out;
  out.geometry = reference_geometry(cnf);
  const ReferenceGeometry& geo = out.geometry;
  const long long n = geo.n, m = geo.m, W = geo.width, H = geo.height;
  Builder b{geo, {}, {}};

  auto lat = [](const Pt& q) {
    return std::make_pair(q.x.num(), q.y.num());  // reference points are lattice points
  };

  // valley crease hanging below every clause dot
  for (long long j = 1; j <= m; ++j)
    for (long long i = 1; i <= n + 1; ++i) {
      auto [x, y] = lat(geo.p[j][i]);
      b.single("p-below", UnitCrease{true, x, y - 1}, Assignment::Valley);
    }

  // literal anchors: 1st literal marks the crease right of its dot,
  // 2nd below it, 3rd left of it; positive literals use r, negated use g
  for (long long j = 1; j <= m; ++j) {
    const auto& clause = cnf.clauses[j - 1];
    for (int k = 0; k < 3; ++k) {
      int lit = clause[k];
      long long i = lit < 0 ? -lit : lit;
      auto [x, y] = lat(lit > 0 ? geo.r[j][i] : geo.g[j][i]);
      if (k == 0)
        b.single("literal-right", UnitCrease{false, x, y}, Assignment::Mountain);
      else if (k == 1)
        b.single("literal-below", UnitCrease{true, x, y - 1}, Assignment::Mountain);
      else
        b.single("literal-left", UnitCrease{false, x - 1, y}, Assignment::Mountain);
    }
  }

  // per-variable vertical lines; the historical runs (below f_k / below
  // t'_k) appear on both lines of every later variable
  for (long long i = 1; i <= n; ++i) {
    for (long long x : {geo.v[i], geo.vp[i]}) {
      for (long long k = 1; k <= i; ++k)
        b.vertical_run("below-f", x, geo.f[k], 5 * m, 0, false, Assignment::Valley);
      for (long long k = 1; k < i; ++k)
        b.vertical_run("below-tp", x, geo.tp[k], 5 * m - 2, 1, false, Assignment::Mountain);
    }
    b.vertical_run("below-fp", geo.v[i], geo.fp[i], 5 * m - 1, 0, false, Assignment::Mountain);
    b.vertical_run("above-tp", geo.v[i], geo.tp[i], H - geo.tp[i], 0, true, Assignment::Valley);
    b.vertical_run("above-t", geo.vp[i], geo.t[i], H - geo.t[i], 0, true, Assignment::Mountain);
  }

  // top reference row: a block of valleys, then strict alternation
  for (long long x = 0; x <= W - 1; ++x) {
    Assignment a;
    if (x <= m + 1)
      a = Assignment::Valley;
    else
      a = (x - (m + 1)) % 2 == 1 ? Assignment::Mountain : Assignment::Valley;
    b.set(UnitCrease{false, x, geo.f[n + 1]}, a);
  }
  b.runs.push_back(AssignRun{"row-f-top-block", AxisLine{Axis::Horizontal, Rat(geo.f[n + 1])}, 0,
                             m + 2, 0, true, Assignment::Valley});
  b.runs.push_back(AssignRun{"row-f-top-alt", AxisLine{Axis::Horizontal, Rat(geo.f[n + 1])}, m + 2,
                             W - (m + 2), 0, true, Assignment::Unassigned});

  // full unit grid with the collected partial assignment
  std::vector<CreaseSegment> creases;
  creases.reserve((size_t)((W - 1) * H + (H - 1) * W));
  for (long long x = 1; x <= W - 1; ++x)
    for (long long y = 0; y <= H - 1; ++y) {
      auto it = b.asg.find(UnitCrease{true, x, y});
      creases.push_back(CreaseSegment{Pt{Rat(x), Rat(y)}, Pt{Rat(x), Rat(y + 1)},
                                      it == b.asg.end() ? Assignment::Unassigned : it->second});
    }
  for (long long y = 1; y <= H - 1; ++y)
    for (long long x = 0; x <= W - 1; ++x) {
      auto it = b.asg.find(UnitCrease{false, x, y});
      creases.push_back(CreaseSegment{Pt{Rat(x), Rat(y)}, Pt{Rat(x + 1), Rat(y)},
                                      it == b.asg.end() ? Assignment::Unassigned : it->second});
    }

  Ring rect{Pt{Rat(0), Rat(0)}, Pt{Rat(W), Rat(0)}, Pt{Rat(W), Rat(H)}, Pt{Rat(0), Rat(H)}};
  out.pattern = make_pattern2d({rect}, std::move(creases));
  out.runs = std::move(b.runs);
  return out;
}

std::string format_runs(const std::vector<AssignRun>& runs) {
  std::string out;
  for (auto& r : runs) {
    out += r.tag;
    out += ' ';
    out += r.line.axis == Axis::Vertical ? "V x=" : "H y=";
    out += r.line.coord.str();
    out += " anchor=" + std::to_string(r.anchor);
    out += " count=" + std::to_string(r.count);
    out += " skip=" + std::to_string(r.skip);
    out += r.upward ? " dir=up" : " dir=down";
    out += " val=";
    out += assignment_char(r.value);
    out += '\n';
  }
  return out;
}

}  // namespace sfold
