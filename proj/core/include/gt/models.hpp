#pragma once

#include <array>

#include "gt/knowledge.hpp"
#include "gt/separation.hpp"

namespace gt {

struct FailingCase {
  std::vector<int> defectives;  // the scenario that breaks the model
  std::vector<int> coalition;   // the element/coalition involved, if any
  std::string clause;
};

struct ModelVerdict {
  bool solves = true;
  std::optional<FailingCase> failing;

  static ModelVerdict ok() { return {}; }
  static ModelVerdict fail(FailingCase c) { return {false, std::move(c)}; }
  explicit operator bool() const { return solves; }
};

// All solvers require d-separation up front; a family failing it gets the
// verdict "not d-separating" rather than an ambient assumption.

// every element learns whether it is defective
ModelVerdict solves_model1_semantic(const SetFamily& f, int d);

// dual is d-cover-free (index semantics); equivalent to the semantic form
PropertyReport model1_characterization(const SetFamily& f, int d);

// every element learns the whole defective set (unsolvable for 1 < d < n)
ModelVerdict solves_model2_semantic(const SetFamily& f, int d);

// every non-defective element learns the whole defective set
ModelVerdict solves_model2prime_semantic(const SetFamily& f, int d);

// every d elements together learn the defective set
ModelVerdict solves_model2dbl_semantic(const SetFamily& f, int d);

// bullet_1: for ordered distinct d-sets (X,Y) some member meets X, misses Y;
// bullet_2: for distinct d-sets (X,{Y,Z}) some member meets X and exactly one of Y,Z
PropertyReport model2dbl_characterization_primal(const SetFamily& f, int d);

// dual G is d-union-free (index semantics), G^d Sperner and
// intersection-cancellative
PropertyReport model2dbl_characterization_dual(const SetFamily& f, int d);

// (A&B !<= C, A&C !<= B, B&C !<= A); a family is intersection-cancellative
// iff every distinct triple shows at least two true flags
std::array<bool, 3> triple_circle_profile(const Bitset& a, const Bitset& b, const Bitset& c);

// no element can point at any defective
ModelVerdict solves_model3_semantic(const SetFamily& f, int d);

// any j elements together identify the defectives while no i elements can
// point at any defective (1 <= i < j <= n)
ModelVerdict solves_model4_semantic(const SetFamily& f, int d, int i, int j);

}  // namespace gt
