#pragma once

#include "rinorm/norm_spec.hpp"
#include "rinorm/step_function.hpp"

namespace rinorm {

// Representation norm ||u|| = ||u*|| evaluated exactly on the decreasing
// rearrangement; every family reduces to closed-form piece sums except the
// Orlicz gauge, which brackets and bisects its Luxemburg infimum.
real rep_norm(const StepFunction& u, const NormSpec& spec);

// Normalised norm over an interval g: the restriction of u to g is
// rearranged and the domain rescaled to unit length, so the result depends
// on g only through the values u takes there. For u constant on g it equals
// that constant times the norm of the unit indicator.
real averaged_norm(const StepFunction& u, const Interval& g, const NormSpec& spec);

// Norm of the indicator of (0, s); closed forms per family.
// Throws NonPositiveArgument for s <= 0.
real fundamental_function(const NormSpec& spec, real s);

// Integral of A(u(s)) ds (the Orlicz modular at gauge 1).
real young_modular(const StepFunction& u, const YoungFunction& a);

// Amemiya form of the Orlicz norm: inf_k (1/k)(1 + int A(k u)). Closed form
// for the power family, golden-section on log k otherwise. Rejects the
// essential-sup indicator family.
real amemiya_norm(const StepFunction& u, const YoungFunction& a);

}  // namespace rinorm
