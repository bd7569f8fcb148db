#pragma once

#include "gt/set_family.hpp"

namespace gt {

// The executable theorem checks: each sweep replays an equivalence or an
// impossibility claim over a family population and counts disagreements.
enum class SweepTheorem {
  model1d,            // semantic == dual d-cover-free == d-sep + all tau(H_x) > d
  model2dbl,          // semantic == primal bullets == dual union-free/Sperner/int-canc
  model2prime_sandwich,  // dual (2,d)-CF => semantic => dual d-CF
  intcan,             // intersection-cancellative == complement cancellative
  dsepdual,           // d-separating => dual is d-union-free
  claim_canc,         // intersection-cancellative == two-of-three circles
  model2_impossible,  // no family solves model 2
  model4_impossible,  // no family solves model 4 when i >= d or j <= d
};

struct SweepSpec {
  int n = 4;
  int max_sets = 4;
  int d = 2;
  bool random_mode = false;      // false = exhaustive enumeration
  std::uint64_t random_count = 0;
  std::uint64_t seed = 0;
  int jobs = 1;
};

struct SweepMismatch {
  std::uint64_t ordinal = 0;  // position in the population (0-based)
  SetFamily family;
  std::string detail;
};

struct SweepResult {
  std::uint64_t cases = 0;
  std::uint64_t mismatches = 0;
  std::optional<SweepMismatch> first;  // globally first by ordinal
};

const char* sweep_name(SweepTheorem t);
std::optional<SweepTheorem> sweep_by_name(std::string_view name);

// Deterministic for a fixed spec regardless of jobs.
SweepResult run_sweep(SweepTheorem theorem, const SweepSpec& spec);

}  // namespace gt
