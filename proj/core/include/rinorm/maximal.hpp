#pragma once

#include <variant>
#include <vector>

#include "rinorm/norms.hpp"

namespace rinorm {

// Uniform grid of n cells over [a, b): cell j = [a + j*h, a + (j+1)*h), h = (b-a)/n.
struct Grid1D {
    real a, b;
    int n;

    Grid1D(real a_, real b_, int n_);
    real width() const { return (b - a) / n; }
    real node(int j) const { return a + j * width(); }
    real boundary(int i) const { return i == n ? b : a + i * width(); }
    Interval cell(int j) const { return Interval(boundary(j), boundary(j + 1)); }
};

struct SampledField {
    Grid1D grid;
    std::vector<real> values;
    bool clipped;  // input had support outside [a, b]
};

// Candidate intervals for the sup defining the discretized maximal function.
struct AllPairs {};  // every (boundary_i, boundary_l), i < l
struct ExplicitList {
    std::vector<Interval> candidates;
};
using CandidateStrategy = std::variant<AllPairs, ExplicitList>;

// field[j] = max over candidate intervals B meeting cell j of the averaged
// norm of u over B.  A candidate counts for every cell it intersects.
SampledField maximal_field(const StepFunction& u, const NormSpec& spec, const Grid1D& grid,
                           const CandidateStrategy& strategy);

// measure{ field > t }, counting whole cells.
real level_set_measure(const SampledField& field, real t);

struct CurvePoint {
    real x;
    real value;
};

struct EstimateReport {
    real sup_value;
    real arg_sup;
    std::vector<CurvePoint> curve;
};

// sup over thresholds t of t * measure{ field > t within window } / ||u||.
// Bounded for weak-type (1,1)-style behaviour of the discretized operator.
EstimateReport weak_type_profile(const StepFunction& u, const Interval& window,
                                 const NormSpec& spec, const SampledField& field,
                                 const std::vector<real>& thresholds);

// sup over s of (Mu)*(s) / ||u* restricted to (0, s)||_avg, with (Mu)* taken
// from the sampled field.  Stays bounded iff the averaged norm controls the
// maximal operator in rearrangement.
EstimateReport riesz_wiener_profile(const StepFunction& u, const NormSpec& spec,
                                    const SampledField& field, const std::vector<real>& ss);

}  // namespace rinorm
