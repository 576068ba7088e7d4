#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "sfold/core1d.hpp"

namespace sfold {

enum class BenchFamily { Accordion, Adversarial, Random };

std::optional<BenchFamily> bench_family_from_name(std::string_view name);

// accordion: unit segments, unassigned. adversarial: long end segments
// around a unit lattice, unassigned and unfoldable; every naive legality
// scan fails only at the flap boundary, so rescanning goes quadratic.
// random: seeded lengths in {1,2} with a full random assignment.
Pattern1D make_bench_pattern(BenchFamily family, std::size_t n, std::uint64_t seed);

struct BenchRow {
  std::size_t n = 0;
  std::string algorithm;
  std::uint64_t wall_ns = 0;
  std::uint64_t comparisons = 0;
};

// Times decide_1d and the rescanning baseline on identical inputs.
// Rows for sizes above `baseline_cap` skip the baseline.
std::vector<BenchRow> run_bench_1d(const std::vector<std::size_t>& sizes, BenchFamily family,
                                   std::uint64_t seed = 0,
                                   std::optional<std::size_t> baseline_cap = std::nullopt);

// CSV with header "n,algorithm,wall_ns,comparisons".
std::string bench_csv(const std::vector<BenchRow>& rows);

}  // namespace sfold
