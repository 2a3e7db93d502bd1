#pragma once

#include <vector>

#include "rinorm/norms.hpp"

namespace rinorm {

// Finite partition of (0, 1) given by cuts 0 = c_0 < c_1 < ... < c_m = 1.
struct Partition {
    std::vector<real> cuts;

    explicit Partition(std::vector<real> cut_points);
    std::size_t size() const { return cuts.size() - 1; }
    Interval piece(std::size_t i) const { return Interval(cuts[i], cuts[i + 1]); }
};

// Convex combination of non-increasing functions with values in [0, 1].
struct ConvexCombo {
    std::vector<StepFunction> functions;
    std::vector<real> weights;

    ConvexCombo(std::vector<StepFunction> fs, std::vector<real> ws);
    StepFunction combined() const;
};

// G(f) = || f^{-1} ||, the norm of the right-continuous inverse.
// Requires f non-increasing.
real gx_value(const StepFunction& f, const NormSpec& spec);

// Closed form of G under the Lorentz functional:
//   ( p * int_0^inf s^{q-1} f(s)^{q/p} ds )^{1/q}        q < inf
//   sup_s s * f(s)^{1/p}                                  q = inf, p < inf
//   measure{ f > 0 }                                      p = q = inf
real gx_closed_lorentz(const StepFunction& f, real p, real q);

// Closed form of G under the Lambda(phi) functional:
//   int_0^{measure{f > 0}} phi(f(t)) dt.
real gx_closed_lambda(const StepFunction& f, const ConcavePhi& phi);

// G computed through the Amemiya form of the Orlicz norm; as an infimum of
// functionals affine in f it is concave on the non-increasing cone.
real gx_amemiya(const StepFunction& f, const YoungFunction& a);

// G(sum lam_i f_i) / sum lam_i G(f_i); at least 1 - eps when G is concave.
real concavity_ratio(const ConvexCombo& combo, const NormSpec& spec);
real concavity_ratio_amemiya(const ConvexCombo& combo, const YoungFunction& a);

struct PartitionReport {
    real sum_ratio;    // sum_k |I_k| * avg_k / ||f||
    real min_ratio;    // min_k avg_k / ||f||
    real weighted_sum; // sum_k |I_k| * avg_k
    real norm;         // ||f||
    std::vector<real> piece_values;  // avg_k per partition piece
};

// Averaged-norm partition diagnostics for f supported in (0, 1).
PartitionReport partition_ratios(const StepFunction& f, const Partition& partition,
                                 const NormSpec& spec);

struct ProfileCurve {
    std::vector<real> radii;
    std::vector<real> values;
    bool monotone_ok;    // F non-decreasing and F/r non-increasing
    real max_violation;  // worst relative slack observed (0 when clean)
};

// F(r) = r * ||f*||_avg over (0, r), evaluated on an increasing radius grid.
// F is non-decreasing and F(r)/r non-increasing; both are checked and the
// worst relative violation is reported alongside the curve.
ProfileCurve f_profile(const StepFunction& f, const NormSpec& spec,
                       const std::vector<real>& radii);

}  // namespace rinorm
