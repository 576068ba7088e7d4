#include "sfold/bench.hpp"

#include <chrono>
#include <random>

namespace sfold {

std::optional<BenchFamily> bench_family_from_name(std::string_view name) {
  if (name == "accordion") return BenchFamily::Accordion;
  if (name == "adversarial") return BenchFamily::Adversarial;
  if (name == "random") return BenchFamily::Random;
  return std::nullopt;
}

Pattern1D make_bench_pattern(BenchFamily family, std::size_t n, std::uint64_t seed) {
  Pattern1D p;
  p.segments.reserve(n + 1);
  p.assignments.reserve(n);
  switch (family) {
    case BenchFamily::Accordion:
      p.segments.assign(n + 1, Rat(1));
      p.assignments.assign(n, Assignment::Unassigned);
      break;
    case BenchFamily::Adversarial:
      p.segments.assign(n + 1, Rat(1));
      p.segments.front() = Rat(2);
      p.segments.back() = Rat(2);
      p.assignments.assign(n, Assignment::Unassigned);
      break;
    case BenchFamily::Random: {
      std::mt19937_64 rng(seed ^ (0x9e3779b97f4a7c15ULL * (n + 1)));
      for (std::size_t i = 0; i <= n; ++i) p.segments.push_back(Rat(1 + (long long)(rng() & 1)));
      for (std::size_t i = 0; i < n; ++i)
        p.assignments.push_back(rng() & 1 ? Assignment::Mountain : Assignment::Valley);
      break;
    }
  }
  return p;
}

std::vector<BenchRow> run_bench_1d(const std::vector<std::size_t>& sizes, BenchFamily family,
                                   std::uint64_t seed, std::optional<std::size_t> baseline_cap) {
  std::vector<BenchRow> rows;
  using clock = std::chrono::steady_clock;
  for (std::size_t n : sizes) {
    Pattern1D p = make_bench_pattern(family, n, seed);
    {
      CompCounter cnt;
      auto t0 = clock::now();
      Decision1D d = decide_1d(p, &cnt);
      auto t1 = clock::now();
      (void)d;
      rows.push_back(BenchRow{
          n, "decide1d",
          (std::uint64_t)std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
          cnt.comparisons});
    }
    if (!baseline_cap || n <= *baseline_cap) {
      CompCounter cnt;
      auto t0 = clock::now();
      Decision1D d = naive_decide_1d(p, &cnt);
      auto t1 = clock::now();
      (void)d;
      rows.push_back(BenchRow{
          n, "baseline",
          (std::uint64_t)std::chrono::duration_cast<std::chrono::nanoseconds>(t1 - t0).count(),
          cnt.comparisons});
    }
  }
  return rows;
}

std::string bench_csv(const std::vector<BenchRow>& rows) {
  std::string out = "n,algorithm,wall_ns,comparisons\n";
  for (auto& r : rows)
    out += std::to_string(r.n) + "," + r.algorithm + "," + std::to_string(r.wall_ns) + "," +
           std::to_string(r.comparisons) + "\n";
  return out;
}

}  // namespace sfold
