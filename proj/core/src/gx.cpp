#include "rinorm/gx.hpp"

#include <algorithm>
#include <cmath>

#include "rinorm/errors.hpp"

namespace rinorm {

Partition::Partition(std::vector<real> cut_points) : cuts(std::move(cut_points)) {
    if (cuts.size() < 2) throw InvalidParameters("partition needs at least two cuts");
    if (cuts.front() != 0.0L || cuts.back() != 1.0L)
        throw InvalidParameters("partition cuts must start at 0 and end at 1");
    for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
        if (!(cuts[i] < cuts[i + 1]))
            throw InvalidParameters("partition cuts must be strictly increasing");
    }
}

ConvexCombo::ConvexCombo(std::vector<StepFunction> fs, std::vector<real> ws)
    : functions(std::move(fs)), weights(std::move(ws)) {
    if (functions.empty() || functions.size() != weights.size())
        throw InvalidParameters("convex combination needs matching functions and weights");
    real total = 0;
    for (real w : weights) {
        if (!(w > 0) || w > 1) throw InvalidParameters("weights must lie in (0, 1]");
        total += w;
    }
    if (std::fabs(total - 1.0L) > 1e-12L)
        throw InvalidParameters("weights must sum to 1");
    for (const auto& f : functions) {
        if (!f.non_increasing()) throw NotMonotone("combination members must be non-increasing");
        if (f.max_value() > 1.0L + 1e-12L)
            throw InvalidParameters("combination members must take values in [0, 1]");
    }
}

StepFunction ConvexCombo::combined() const {
    StepFunction acc = scale(functions[0], weights[0]);
    for (std::size_t i = 1; i < functions.size(); ++i)
        acc = superpose(acc, scale(functions[i], weights[i]));
    return acc;
}

real gx_value(const StepFunction& f, const NormSpec& spec) {
    return rep_norm(right_inverse(f), spec);
}

real gx_closed_lorentz(const StepFunction& f, real p, real q) {
    NormSpec::lorentz(p, q);  // parameter validation only
    if (!f.non_increasing()) throw NotMonotone("closed form requires a non-increasing function");
    if (f.is_zero()) return 0;
    const bool p_inf = std::isinf(static_cast<double>(p));
    const bool q_inf = std::isinf(static_cast<double>(q));
    if (p_inf) return f.support_measure();
    if (q_inf) {
        real best = 0;
        for (std::size_t i = 0; i < f.piece_count(); ++i)
            best = std::max(best, f.piece_upper(i) * std::pow(f.piece_value(i), 1.0L / p));
        return best;
    }
    real acc = 0;
    real prev = 0;
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        const real t = f.piece_upper(i);
        const real tq = std::pow(t, q);
        const real v = f.piece_value(i);
        if (v > 0) acc += (p / q) * std::pow(v, q / p) * (tq - prev);
        prev = tq;
    }
    return std::pow(acc, 1.0L / q);
}

real gx_closed_lambda(const StepFunction& f, const ConcavePhi& phi) {
    if (!f.non_increasing()) throw NotMonotone("closed form requires a non-increasing function");
    real acc = 0;
    for (std::size_t i = 0; i < f.piece_count(); ++i) {
        const real v = f.piece_value(i);
        if (v > 0) acc += f.piece_length(i) * phi.evaluate(v);
    }
    return acc;
}

real gx_amemiya(const StepFunction& f, const YoungFunction& a) {
    return amemiya_norm(right_inverse(f), a);
}

namespace {

template <typename G>
real ratio_impl(const ConvexCombo& combo, G&& g) {
    real denom = 0;
    for (std::size_t i = 0; i < combo.functions.size(); ++i)
        denom += combo.weights[i] * g(combo.functions[i]);
    if (denom == 0) throw DegenerateCombo("all combination members have zero value");
    return g(combo.combined()) / denom;
}

}  // namespace

real concavity_ratio(const ConvexCombo& combo, const NormSpec& spec) {
    return ratio_impl(combo, [&](const StepFunction& f) { return gx_value(f, spec); });
}

real concavity_ratio_amemiya(const ConvexCombo& combo, const YoungFunction& a) {
    return ratio_impl(combo, [&](const StepFunction& f) { return gx_amemiya(f, a); });
}

PartitionReport partition_ratios(const StepFunction& f, const Partition& partition,
                                 const NormSpec& spec) {
    if (f.domain_end() > 1.0L + 1e-12L)
        throw UnsupportedSupport("partition diagnostics require support inside (0, 1)");
    PartitionReport report;
    report.norm = rep_norm(f, spec);
    if (report.norm == 0) throw ZeroNorm("partition diagnostics need a nonzero function");
    report.weighted_sum = 0;
    report.min_ratio = 0;
    for (std::size_t k = 0; k < partition.size(); ++k) {
        const Interval piece = partition.piece(k);
        const real avg = averaged_norm(f, piece, spec);
        report.piece_values.push_back(avg);
        report.weighted_sum += piece.length() * avg;
        const real ratio = avg / report.norm;
        if (k == 0 || ratio < report.min_ratio) report.min_ratio = ratio;
    }
    report.sum_ratio = report.weighted_sum / report.norm;
    return report;
}

ProfileCurve f_profile(const StepFunction& f, const NormSpec& spec,
                       const std::vector<real>& radii) {
    if (radii.empty()) throw InvalidParameters("profile needs at least one radius");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0)) throw InvalidParameters("profile radii must be positive");
        if (i > 0 && !(radii[i] > radii[i - 1]))
            throw InvalidParameters("profile radii must be strictly increasing");
    }
    const StepFunction g = rearrangement(f);
    ProfileCurve curve;
    curve.radii = radii;
    curve.monotone_ok = true;
    curve.max_violation = 0;
    for (real r : radii)
        curve.values.push_back(r * averaged_norm(g, Interval(0, r), spec));
    for (std::size_t i = 1; i < radii.size(); ++i) {
        const real fi = curve.values[i - 1], fj = curve.values[i];
        const real scale_f = std::max<real>(1, std::max(fi, fj));
        if (fj < fi - 1e-9L * scale_f) {
            curve.monotone_ok = false;
            curve.max_violation = std::max(curve.max_violation, (fi - fj) / scale_f);
        }
        const real si = fi / radii[i - 1], sj = fj / radii[i];
        const real scale_s = std::max<real>(1, std::max(si, sj));
        if (sj > si + 1e-9L * scale_s) {
            curve.monotone_ok = false;
            curve.max_violation = std::max(curve.max_violation, (sj - si) / scale_s);
        }
    }
    return curve;
}

}  // namespace rinorm
