#pragma once

#include <string>
#include <vector>

#include "rinorm/norms.hpp"

namespace rinorm {

// A function together with disjoint intervals I_k and weights a_k >= |I_k|.
// The averaged norm of f over each I_k taken at scale a_k should stay above 1
// while sum a_k diverges; this breaks the summability the averaging property
// would force.
struct HWitness {
    StepFunction f;
    std::vector<Interval> intervals;
    std::vector<real> weights;
};

// Witness for the Lorentz functional with p < q: f = c * sum_k (3^k / k)^{1/p}
// on I_k = (3^{-k}/2, 3^{-(k-1)}/2), weights a_k = 1/k.  Each averaged value
// equals c * (p/q)^{1/q} exactly, so any c > (q/p)^{1/q} pushes them above 1
// while sum 1/k diverges.  Requires 1 <= p < q < inf.
HWitness lorentz_h_witness(real p, real q, real c, int pieces);

struct HWitnessReport {
    struct Entry {
        int k;
        Interval interval;
        real weight;
        real averaged_value;   // averaged norm of f over I_k at scale a_k
        bool exceeds_one;
        bool weight_admissible;  // a_k >= |I_k|
        real partial_weight_sum;
    };
    std::vector<Entry> entries;
    real weight_sum;
    real divergence_bound;
    bool all_exceed_one;
    bool all_admissible;
    std::string verdict;  // "violates-averaging" or "no-violation"
};

// Checks every interval of the witness; the verdict is "violates-averaging"
// when all averaged values exceed 1, all weights are admissible, and the
// weight sum clears divergence_bound.
HWitnessReport verify_h_witness(const HWitness& w, const NormSpec& spec,
                                real divergence_bound = 2.0L);

// Builds a witness from a non-increasing g whose restricted norms do not
// vanish near 0: splits (0, 1) into shells (b_{k+1}, b_k) with piece norm in
// (1, ||g||_(0, b_k)] and unit weights.  Throws NormVanishes when the
// restricted norm drops below 2 before `pieces` shells are found.
HWitness witness_from_non_lac(const StepFunction& g, const NormSpec& spec, int pieces);

struct Transplant {
    StepFunction u;
    std::vector<Interval> balls;
};

// Lays the rearranged slices of a witness side by side: ball k has length
// a_k and carries (f restricted to I_k) rearranged, so the average of u over
// ball k reproduces the witness value.
Transplant transplant(const HWitness& w, real origin = 0.0L);

// Step approximation of the extremal function for the endpoint functional
// with phi(s) = s^alpha: u*(s) ~ d/ds s^{1-alpha} sampled on a geometric
// grid, with the head chosen so that the running average hits phi exactly at
// the grid nodes.  Requires 0 < alpha < 1.
StepFunction marcinkiewicz_extremal(real alpha, real s_min, real s_max,
                                    int pieces_per_decade);

// Step approximation on (delta, 1) of g(s) = log(1 + 1/(s * (1 - log s)^2)),
// whose local averaged Orlicz norm under A(t) = e^t - 1 stays bounded away
// from 0: the gauge modular diverges on every (0, t).
StepFunction orlicz_non_doubling_probe(real delta, int pieces_per_decade);

struct ProbeCurve {
    std::vector<real> ts;
    std::vector<real> values;
};

// ||u* restricted to (0, t)|| along a decreasing sequence of t; tends to 0
// exactly when the functional is locally absolutely continuous at u.
ProbeCurve lac_probe(const StepFunction& u, const NormSpec& spec,
                     const std::vector<real>& ts);

}  // namespace rinorm
