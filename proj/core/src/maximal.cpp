#include "rinorm/maximal.hpp"

#include <algorithm>
#include <cmath>

#include "rinorm/errors.hpp"

namespace rinorm {

Grid1D::Grid1D(real a_, real b_, int n_) : a(a_), b(b_), n(n_) {
    if (!std::isfinite(a) || !std::isfinite(b) || !(a < b))
        throw InvalidParameters("grid needs finite endpoints with a < b");
    if (n < 2) throw InvalidParameters("grid needs at least two cells");
}

namespace {

bool support_outside(const StepFunction& u, real a, real b) {
    for (std::size_t i = 0; i < u.piece_count(); ++i) {
        if (u.piece_value(i) == 0) continue;
        if (u.piece_lower(i) < a || u.piece_upper(i) > b) return true;
    }
    return false;
}

void apply_all_pairs(const StepFunction& u, const NormSpec& spec, const Grid1D& grid,
                     std::vector<real>& field) {
    const int n = grid.n;
    std::vector<real> suffix(n + 1);
    for (int i = 0; i < n; ++i) {
        suffix[n] = 0;
        for (int l = n; l > i; --l) {
            const real val =
                averaged_norm(u, Interval(grid.boundary(i), grid.boundary(l)), spec);
            suffix[l] = l == n ? val : std::max(val, suffix[l + 1]);
        }
        for (int j = i; j < n; ++j) field[j] = std::max(field[j], suffix[j + 1]);
    }
}

void apply_explicit(const StepFunction& u, const NormSpec& spec, const Grid1D& grid,
                    const std::vector<Interval>& candidates, std::vector<real>& field) {
    if (candidates.empty())
        throw EmptyCandidates("explicit candidate strategy needs at least one interval");
    const real h = grid.width();
    for (const Interval& b : candidates) {
        const real val = averaged_norm(u, b, spec);
        int lo = static_cast<int>(std::floor((b.left - grid.a) / h));
        lo = std::clamp(lo, 0, grid.n - 1);
        while (lo > 0 && grid.boundary(lo) > b.left) --lo;
        while (lo < grid.n && !(grid.boundary(lo + 1) > b.left)) ++lo;
        for (int j = lo; j < grid.n && grid.boundary(j) < b.right; ++j)
            field[j] = std::max(field[j], val);
    }
}

}  // namespace

SampledField maximal_field(const StepFunction& u, const NormSpec& spec, const Grid1D& grid,
                           const CandidateStrategy& strategy) {
    SampledField field{grid, std::vector<real>(grid.n, 0.0L),
                       support_outside(u, grid.a, grid.b)};
    if (std::holds_alternative<AllPairs>(strategy)) {
        apply_all_pairs(u, spec, grid, field.values);
    } else {
        apply_explicit(u, spec, grid, std::get<ExplicitList>(strategy).candidates,
                       field.values);
    }
    return field;
}

real level_set_measure(const SampledField& field, real t) {
    std::size_t count = 0;
    for (real v : field.values)
        if (v > t) ++count;
    return static_cast<real>(count) * field.grid.width();
}

EstimateReport weak_type_profile(const StepFunction& u, const Interval& window,
                                 const NormSpec& spec, const SampledField& field,
                                 const std::vector<real>& thresholds) {
    if (thresholds.empty()) throw InvalidParameters("profile needs thresholds");
    const real norm = rep_norm(u, spec);
    if (norm == 0) throw ZeroNorm("weak-type profile needs a nonzero function");
    EstimateReport report{0, thresholds.front(), {}};
    for (real t : thresholds) {
        if (!(t > 0)) throw InvalidParameters("thresholds must be positive");
        real measure = 0;
        for (int j = 0; j < field.grid.n; ++j) {
            if (field.values[j] <= t) continue;
            const Interval cell = field.grid.cell(j);
            const real lo = std::max(cell.left, window.left);
            const real hi = std::min(cell.right, window.right);
            if (hi > lo) measure += hi - lo;
        }
        const real value = t * measure / norm;
        report.curve.push_back({t, value});
        if (value > report.sup_value) {
            report.sup_value = value;
            report.arg_sup = t;
        }
    }
    return report;
}

EstimateReport riesz_wiener_profile(const StepFunction& u, const NormSpec& spec,
                                    const SampledField& field, const std::vector<real>& ss) {
    if (ss.empty()) throw InvalidParameters("profile needs evaluation points");
    if (u.is_zero()) throw ZeroNorm("ratio profile needs a nonzero function");
    const StepFunction ustar = rearrangement(u);
    const real h = field.grid.width();
    std::vector<real> bounds, values;
    for (int j = 0; j < field.grid.n; ++j) {
        bounds.push_back(static_cast<real>(j + 1) * h);
        values.push_back(field.values[j]);
    }
    const StepFunction mstar = rearrangement(StepFunction(bounds, values));
    EstimateReport report{0, ss.front(), {}};
    for (real s : ss) {
        if (!(s > 0)) throw InvalidParameters("evaluation points must be positive");
        const real den = averaged_norm(ustar, Interval(0, s), spec);
        const real value = den > 0 ? mstar(s) / den : 0;
        report.curve.push_back({s, value});
        if (value > report.sup_value) {
            report.sup_value = value;
            report.arg_sup = s;
        }
    }
    return report;
}

}  // namespace rinorm
