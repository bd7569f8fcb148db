#include "gt/models.hpp"

#include "gt/family_ops.hpp"

namespace gt {

namespace {

std::optional<FailingCase> separation_gate(const SetFamily& f, int d) {
  PropertyReport sep = is_d_separating(f, d);
  if (sep.holds) return std::nullopt;
  FailingCase c;
  c.clause = "not d-separating";
  if (sep.witness && sep.witness->scenarios.size() == 2) {
    c.defectives = sep.witness->scenarios[0];
    c.coalition = sep.witness->scenarios[1];
  }
  return c;
}

void check_solver_params(const SetFamily& f, int d) {
  if (d < 1 || d > f.n - 1) throw BadParameter("model solver: need 1 <= d <= n-1");
}

// run fn(D) over every d-subset; fn returns an optional failing case
template <typename Fn>
ModelVerdict scan_scenarios(const SetFamily& f, int d, Fn&& fn) {
  ModelVerdict v = ModelVerdict::ok();
  for_each_combination(f.n, d, [&](const std::vector<int>& dv) {
    Bitset defectives = Bitset::of(f.n, dv);
    if (auto fail = fn(defectives, dv)) {
      v = ModelVerdict::fail(std::move(*fail));
      return false;
    }
    return true;
  });
  return v;
}

}  // namespace

ModelVerdict solves_model1_semantic(const SetFamily& f, int d) {
  check_solver_params(f, d);
  if (auto gate = separation_gate(f, d)) return ModelVerdict::fail(std::move(*gate));
  return scan_scenarios(f, d, [&](const Bitset& defectives, const std::vector<int>& dv)
                                  -> std::optional<FailingCase> {
    for (int x = 1; x <= f.n; ++x)
      if (!knows_own_status(f, x, defectives, d))
        return FailingCase{dv, {x}, "element cannot decide its own status"};
    return std::nullopt;
  });
}

PropertyReport model1_characterization(const SetFamily& f, int d) {
  return is_d_cover_free(dual_family(f), d, DistinctBy::index);
}

ModelVerdict solves_model2_semantic(const SetFamily& f, int d) {
  check_solver_params(f, d);
  if (auto gate = separation_gate(f, d)) return ModelVerdict::fail(std::move(*gate));
  return scan_scenarios(f, d, [&](const Bitset& defectives, const std::vector<int>& dv)
                                  -> std::optional<FailingCase> {
    for (int x = 1; x <= f.n; ++x) {
      Bitset s(f.n);
      s.set(x);
      if (!identifies_set(f, s, defectives, d))
        return FailingCase{dv, {x}, "element cannot pin down the defective set"};
    }
    return std::nullopt;
  });
}

ModelVerdict solves_model2prime_semantic(const SetFamily& f, int d) {
  check_solver_params(f, d);
  if (auto gate = separation_gate(f, d)) return ModelVerdict::fail(std::move(*gate));
  return scan_scenarios(f, d, [&](const Bitset& defectives, const std::vector<int>& dv)
                                  -> std::optional<FailingCase> {
    for (int x = 1; x <= f.n; ++x) {
      if (defectives.test(x)) continue;
      Bitset s(f.n);
      s.set(x);
      if (!identifies_set(f, s, defectives, d))
        return FailingCase{dv, {x}, "non-defective element cannot pin down the defective set"};
    }
    return std::nullopt;
  });
}

ModelVerdict solves_model2dbl_semantic(const SetFamily& f, int d) {
  check_solver_params(f, d);
  if (auto gate = separation_gate(f, d)) return ModelVerdict::fail(std::move(*gate));
  return scan_scenarios(f, d, [&](const Bitset& defectives, const std::vector<int>& dv)
                                  -> std::optional<FailingCase> {
    std::optional<FailingCase> fail;
    for_each_combination(f.n, d, [&](const std::vector<int>& sv) {
      Bitset s = Bitset::of(f.n, sv);
      if (!identifies_set(f, s, defectives, d)) {
        fail = FailingCase{dv, sv, "d-coalition cannot pin down the defective set"};
        return false;
      }
      return true;
    });
    return fail;
  });
}

PropertyReport model2dbl_characterization_primal(const SetFamily& f, int d) {
  if (d < 1 || d > f.n) throw BadParameter("model2dbl primal characterization: need 1 <= d <= n");
  // collect scenario masks once; mask bit i = member i meets the scenario
  std::vector<Bitset> masks;
  std::vector<std::vector<int>> scen;
  int m = f.size();
  for_each_combination(f.n, d, [&](const std::vector<int>& c) {
    Bitset x = Bitset::of(f.n, c);
    Bitset mask(std::max(m, 1));
    for (int i = 0; i < m; ++i)
      if (f.sets[i].intersects(x)) mask.set(i + 1);
    masks.push_back(std::move(mask));
    scen.push_back(c);
    return true;
  });
  int k = (int)masks.size();
  // bullet_1 over ordered pairs: some member meets X and misses Y
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b) {
      if (a == b) continue;
      if (masks[a].minus(masks[b]).empty())
        return PropertyReport::fail(
            {{}, {}, {scen[a], scen[b]}, "bullet_1: no member meets the first scenario only"});
    }
  // bullet_2 over a designated X against an unordered {Y,Z}
  for (int a = 0; a < k; ++a)
    for (int b = 0; b < k; ++b)
      for (int c = b + 1; c < k; ++c) {
        if (a == b || a == c) continue;
        Bitset left = masks[a] & masks[b].minus(masks[c]);
        if (!left.empty()) continue;
        Bitset right = masks[a] & masks[c].minus(masks[b]);
        if (!right.empty()) continue;
        return PropertyReport::fail({{},
                                     {},
                                     {scen[a], scen[b], scen[c]},
                                     "bullet_2: no member meets the first scenario and exactly "
                                     "one of the other two"});
      }
  return PropertyReport::ok();
}

PropertyReport model2dbl_characterization_dual(const SetFamily& f, int d) {
  SetFamily g = dual_family(f);
  PropertyReport uf = is_d_union_free(g, d, DistinctBy::index);
  if (!uf.holds) {
    uf.witness->note = "dual: " + uf.witness->note;
    return uf;
  }
  SetFamily gd = d_fold_unions(g, d);
  PropertyReport sp = is_sperner(gd);
  if (!sp.holds) {
    sp.witness->note = "dual d-fold unions: " + sp.witness->note;
    return sp;
  }
  PropertyReport ic = is_intersection_cancellative(gd);
  if (!ic.holds) {
    ic.witness->note = "dual d-fold unions: " + ic.witness->note;
    return ic;
  }
  return PropertyReport::ok();
}

std::array<bool, 3> triple_circle_profile(const Bitset& a, const Bitset& b, const Bitset& c) {
  return {!(a & b).is_subset_of(c), !(a & c).is_subset_of(b), !(b & c).is_subset_of(a)};
}

ModelVerdict solves_model3_semantic(const SetFamily& f, int d) {
  check_solver_params(f, d);
  if (auto gate = separation_gate(f, d)) return ModelVerdict::fail(std::move(*gate));
  return scan_scenarios(f, d, [&](const Bitset& defectives, const std::vector<int>& dv)
                                  -> std::optional<FailingCase> {
    for (int x = 1; x <= f.n; ++x) {
      Bitset s(f.n);
      s.set(x);
      if (!identifies_no_defective(f, s, defectives, d))
        return FailingCase{dv, {x}, "element can point at a defective"};
    }
    return std::nullopt;
  });
}

ModelVerdict solves_model4_semantic(const SetFamily& f, int d, int i, int j) {
  check_solver_params(f, d);
  if (i < 1 || i >= j || j > f.n) throw BadParameter("model 4: need 1 <= i < j <= n");
  if (auto gate = separation_gate(f, d)) return ModelVerdict::fail(std::move(*gate));
  return scan_scenarios(f, d, [&](const Bitset& defectives, const std::vector<int>& dv)
                                  -> std::optional<FailingCase> {
    std::optional<FailingCase> fail;
    for_each_combination(f.n, j, [&](const std::vector<int>& sv) {
      if (!identifies_set(f, Bitset::of(f.n, sv), defectives, d)) {
        fail = FailingCase{dv, sv, "j-coalition cannot pin down the defective set"};
        return false;
      }
      return true;
    });
    if (fail) return fail;
    for_each_combination(f.n, i, [&](const std::vector<int>& tv) {
      if (!identifies_no_defective(f, Bitset::of(f.n, tv), defectives, d)) {
        fail = FailingCase{dv, tv, "i-coalition can point at a defective"};
        return false;
      }
      return true;
    });
    return fail;
  });
}

}  // namespace gt
