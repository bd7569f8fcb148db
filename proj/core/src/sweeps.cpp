#include "gt/sweeps.hpp"

#include <functional>
#include <mutex>
#include <thread>

#include "gt/family_ops.hpp"
#include "gt/generators.hpp"
#include "gt/knowledge.hpp"
#include "gt/models.hpp"
#include "gt/separation.hpp"

namespace gt {

namespace {

// empty string = family passes the check
using Checker = std::function<std::string(const SetFamily&, const SweepSpec&)>;

std::string check_model1d(const SetFamily& f, const SweepSpec& spec) {
  bool semantic = solves_model1_semantic(f, spec.d).solves;
  bool dual_form = model1_characterization(f, spec.d).holds;
  bool tau_form = is_d_separating(f, spec.d).holds;
  if (tau_form)
    for (int x = 1; x <= f.n && tau_form; ++x)
      tau_form = element_always_knows_status(f, x, spec.d);
  if (semantic == dual_form && dual_form == tau_form) return {};
  return "model1 forms disagree: semantic=" + std::to_string(semantic) +
         " dual=" + std::to_string(dual_form) + " tau=" + std::to_string(tau_form);
}

std::string check_model2dbl(const SetFamily& f, const SweepSpec& spec) {
  bool semantic = solves_model2dbl_semantic(f, spec.d).solves;
  bool primal = model2dbl_characterization_primal(f, spec.d).holds;
  bool dual = model2dbl_characterization_dual(f, spec.d).holds;
  if (semantic == primal && primal == dual) return {};
  return "model2'' forms disagree: semantic=" + std::to_string(semantic) +
         " primal=" + std::to_string(primal) + " dual=" + std::to_string(dual);
}

std::string check_model2prime_sandwich(const SetFamily& f, const SweepSpec& spec) {
  SetFamily dual = dual_family(f);
  bool lower = is_r_d_cover_free(dual, 2, spec.d, DistinctBy::index).holds;
  bool semantic = solves_model2prime_semantic(f, spec.d).solves;
  bool upper = is_d_cover_free(dual, spec.d, DistinctBy::index).holds;
  if (lower && !semantic) return "dual (2,d)-cover-free family fails to solve model 2'";
  if (semantic && !upper) return "model 2' solution whose dual is not d-cover-free";
  return {};
}

std::string check_intcan(const SetFamily& f, const SweepSpec&) {
  bool a = is_intersection_cancellative(f).holds;
  bool b = is_cancellative(complement_family(f)).holds;
  if (a == b) return {};
  return "intersection-cancellative disagrees with complement cancellative";
}

std::string check_dsepdual(const SetFamily& f, const SweepSpec& spec) {
  if (!is_d_separating(f, spec.d).holds) return {};
  if (is_d_union_free(dual_family(f), spec.d, DistinctBy::index).holds) return {};
  return "d-separating family whose dual is not d-union-free";
}

std::string check_claim_canc(const SetFamily& f, const SweepSpec&) {
  bool canc = is_intersection_cancellative(f).holds;
  bool two_of_three = true;
  auto values = f.distinct_values();
  int k = (int)values.size();
  for (int a = 0; a < k && two_of_three; ++a)
    for (int b = a + 1; b < k && two_of_three; ++b)
      for (int c = b + 1; c < k && two_of_three; ++c) {
        auto flags = triple_circle_profile(values[a], values[b], values[c]);
        if ((int)flags[0] + (int)flags[1] + (int)flags[2] < 2) two_of_three = false;
      }
  if (canc == two_of_three) return {};
  return "two-of-three circle profile disagrees with intersection-cancellative";
}

std::string check_model2_impossible(const SetFamily& f, const SweepSpec& spec) {
  if (!solves_model2_semantic(f, spec.d).solves) return {};
  return "family claims to solve model 2";
}

std::string check_model4_impossible(const SetFamily& f, const SweepSpec& spec) {
  for (int i = 1; i < f.n; ++i)
    for (int j = i + 1; j <= f.n; ++j) {
      if (i < spec.d && j > spec.d) continue;  // not covered by the impossibility claims
      if (solves_model4_semantic(f, spec.d, i, j).solves)
        return "family claims to solve model 4 with i=" + std::to_string(i) +
               " j=" + std::to_string(j);
    }
  return {};
}

Checker checker_for(SweepTheorem t) {
  switch (t) {
    case SweepTheorem::model1d: return check_model1d;
    case SweepTheorem::model2dbl: return check_model2dbl;
    case SweepTheorem::model2prime_sandwich: return check_model2prime_sandwich;
    case SweepTheorem::intcan: return check_intcan;
    case SweepTheorem::dsepdual: return check_dsepdual;
    case SweepTheorem::claim_canc: return check_claim_canc;
    case SweepTheorem::model2_impossible: return check_model2_impossible;
    case SweepTheorem::model4_impossible: return check_model4_impossible;
  }
  throw BadParameter("unknown sweep theorem");
}

SetFamily random_population_family(const SweepSpec& spec, std::uint64_t index) {
  std::uint64_t h = mix_seed(spec.seed, index);
  int m = 1 + (int)(h % (std::uint64_t)spec.max_sets);
  return random_family(spec.n, m, 0.5, mix_seed(h, 0x5eed));
}

}  // namespace

const char* sweep_name(SweepTheorem t) {
  switch (t) {
    case SweepTheorem::model1d: return "model1d";
    case SweepTheorem::model2dbl: return "model2dbl";
    case SweepTheorem::model2prime_sandwich: return "model2prime-sandwich";
    case SweepTheorem::intcan: return "intcan";
    case SweepTheorem::dsepdual: return "dsepdual";
    case SweepTheorem::claim_canc: return "claim-canc";
    case SweepTheorem::model2_impossible: return "model2-impossible";
    case SweepTheorem::model4_impossible: return "model4-impossible";
  }
  return "?";
}

std::optional<SweepTheorem> sweep_by_name(std::string_view name) {
  for (SweepTheorem t :
       {SweepTheorem::model1d, SweepTheorem::model2dbl, SweepTheorem::model2prime_sandwich,
        SweepTheorem::intcan, SweepTheorem::dsepdual, SweepTheorem::claim_canc,
        SweepTheorem::model2_impossible, SweepTheorem::model4_impossible})
    if (name == sweep_name(t)) return t;
  return std::nullopt;
}

SweepResult run_sweep(SweepTheorem theorem, const SweepSpec& spec) {
  Checker check = checker_for(theorem);
  int jobs = std::max(1, spec.jobs);
  std::mutex merge_mutex;
  SweepResult result;

  auto merge = [&](std::uint64_t cases, std::uint64_t mismatches,
                   std::optional<SweepMismatch> first) {
    std::lock_guard<std::mutex> lock(merge_mutex);
    result.cases += cases;
    result.mismatches += mismatches;
    if (first && (!result.first || first->ordinal < result.first->ordinal))
      result.first = std::move(first);
  };

  auto worker = [&](int stripe) {
    std::uint64_t cases = 0, mismatches = 0;
    std::optional<SweepMismatch> first;
    auto consider = [&](std::uint64_t ordinal, const SetFamily& f) {
      ++cases;
      std::string detail = check(f, spec);
      if (!detail.empty()) {
        ++mismatches;
        if (!first || ordinal < first->ordinal) first = SweepMismatch{ordinal, f, detail};
      }
    };
    if (spec.random_mode) {
      for (std::uint64_t idx = stripe; idx < spec.random_count; idx += jobs)
        consider(idx, random_population_family(spec, idx));
    } else {
      FamilyEnumerator stream(spec.n, spec.max_sets);
      std::uint64_t ordinal = 0;
      while (auto f = stream.next()) {
        if (ordinal % (std::uint64_t)jobs == (std::uint64_t)stripe) consider(ordinal, *f);
        ++ordinal;
      }
    }
    merge(cases, mismatches, std::move(first));
  };

  if (jobs == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (int s = 0; s < jobs; ++s) pool.emplace_back(worker, s);
    for (auto& th : pool) th.join();
  }
  return result;
}

}  // namespace gt
