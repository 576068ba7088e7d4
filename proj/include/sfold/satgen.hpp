#pragma once

#include <array>
#include <string>
#include <vector>

#include "sfold/geom2d.hpp"

namespace sfold {

struct FeatureOutOfPaper : Error {
  using Error::Error;
};

struct CnfFormula {
  int num_vars = 0;
  std::vector<std::array<int, 3>> clauses;  // signed 1-based variable indices
};

// Standard DIMACS with "p cnf <vars> <clauses>"; every clause must have
// exactly three literals (duplicates allowed). Throws ParseError.
CnfFormula parse_dimacs(std::string_view text);
std::string format_dimacs(const CnfFormula& cnf);

// Reference coordinates of the reduction. All vectors are 1-based
// (index 0 unused): p[j][i] for j in 1..m, i in 1..n+1; r and g up to
// i = n; f,t up to n+1; fp,tp up to n; v up to n; vp up to n+1.
struct ReferenceGeometry {
  int n = 0, m = 0;
  long long width = 0, height = 0;
  std::vector<std::vector<Pt>> p, r, g;
  std::vector<long long> f, t, fp, tp;
  std::vector<long long> v, vp;
};

ReferenceGeometry reference_geometry(const CnfFormula& cnf);

// One contiguous run of assigned unit creases, as produced by the
// construction rules. `anchor` is the reference coordinate on the line;
// the run covers `count` creases starting `skip` creases away from it,
// growing upward or downward along the line.
struct AssignRun {
  std::string tag;
  AxisLine line;
  long long anchor = 0;
  long long count = 0;
  long long skip = 0;
  bool upward = false;
  Assignment value = Assignment::Unassigned;
};

struct GeneratedInstance {
  CreasePattern2D pattern;
  ReferenceGeometry geometry;
  std::vector<AssignRun> runs;
};

// Builds the full unit-grid pattern on the reduction's rectangle with
// the partial assignment applied. Throws FeatureOutOfPaper if a
// reference crease would fall outside the paper and Error on
// conflicting assignments (which would indicate a construction bug).
GeneratedInstance generate_instance(const CnfFormula& cnf);

std::string format_runs(const std::vector<AssignRun>& runs);

}  // namespace sfold
