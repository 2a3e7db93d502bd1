#pragma once

#include <vector>

#include "rinorm/norms.hpp"

namespace rinorm {

// Averaged norm over (x - r, x + r) of |u - u(x)|, with u extended by zero
// to the whole line.  Tends to 0 as r -> 0 at continuity points whenever the
// functional is locally absolutely continuous.
real local_oscillation(const StepFunction& u, real x, real r, const NormSpec& spec);

struct ScanPoint {
    real x;
    bool excluded;  // within one radius-floor of a jump of u
    std::vector<real> oscillations;
    real terminal;     // oscillation at the smallest radius
    real tail_limsup;  // max oscillation over the smaller half of the radii
    bool pass;         // terminal <= threshold
};

struct ScanReport {
    std::vector<ScanPoint> points;
    std::vector<real> radii;
    real threshold;
    std::size_t evaluated_count;
    std::size_t excluded_count;
    real pass_fraction;     // among evaluated points
    real excluded_measure;  // measure of the exclusion zone inside the span of xs
};

// Evaluates local oscillations at each sample point over a decreasing radius
// grid.  Points within radii.back() of a jump of u are excluded: no
// functional can shrink the oscillation there.  Everywhere else the terminal
// oscillation must drop below the threshold for the point to pass.
ScanReport lebesgue_scan(const StepFunction& u, const NormSpec& spec,
                         const std::vector<real>& xs, const std::vector<real>& radii,
                         real threshold);

}  // namespace rinorm
