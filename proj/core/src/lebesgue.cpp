#include "rinorm/lebesgue.hpp"

#include <algorithm>
#include <cmath>

#include "rinorm/errors.hpp"

namespace rinorm {

real local_oscillation(const StepFunction& u, real x, real r, const NormSpec& spec) {
    if (!std::isfinite(x)) throw InvalidParameters("oscillation point must be finite");
    if (!(r > 0) || !std::isfinite(r)) throw InvalidParameters("radius must be positive");
    const real c = u(x);
    const real lo = x - r, hi = x + r;
    std::vector<std::pair<real, real>> parts;  // (|u - c|, length)
    if (lo < 0) parts.emplace_back(c, std::min(hi, 0.0L) - lo);
    const real start = std::max(lo, 0.0L);
    if (hi > start) {
        const real end = u.domain_end();
        for (std::size_t i = 0; i < u.piece_count(); ++i) {
            const real a = std::max(start, u.piece_lower(i));
            const real b = std::min(hi, u.piece_upper(i));
            if (b > a) parts.emplace_back(std::fabs(u.piece_value(i) - c), b - a);
        }
        if (hi > std::max(start, end)) parts.emplace_back(c, hi - std::max(start, end));
    }
    std::sort(parts.begin(), parts.end(), [](const auto& s, const auto& t) {
        return s.first > t.first;
    });
    std::vector<real> bounds, values;
    real cum = 0;
    for (const auto& [value, length] : parts) {
        if (value == 0) continue;
        cum += length;
        bounds.push_back(cum);
        values.push_back(value);
    }
    if (bounds.empty()) return 0;
    return rep_norm(dilate(StepFunction(bounds, values), 2 * r), spec);
}

ScanReport lebesgue_scan(const StepFunction& u, const NormSpec& spec,
                         const std::vector<real>& xs, const std::vector<real>& radii,
                         real threshold) {
    if (xs.empty()) throw InvalidParameters("scan needs sample points");
    if (radii.empty()) throw InvalidParameters("scan needs radii");
    for (std::size_t i = 0; i < radii.size(); ++i) {
        if (!(radii[i] > 0)) throw InvalidParameters("scan radii must be positive");
        if (i > 0 && !(radii[i] < radii[i - 1]))
            throw InvalidParameters("scan radii must be strictly decreasing");
    }
    if (!(threshold > 0)) throw InvalidParameters("scan threshold must be positive");

    const real floor_r = radii.back();
    std::vector<real> jumps;
    if (!u.is_zero() && u(0.0L) > 0) jumps.push_back(0.0L);
    for (std::size_t i = 0; i < u.piece_count(); ++i) jumps.push_back(u.piece_upper(i));

    ScanReport report;
    report.radii = radii;
    report.threshold = threshold;
    report.evaluated_count = 0;
    report.excluded_count = 0;
    std::size_t passes = 0;
    for (real x : xs) {
        ScanPoint point;
        point.x = x;
        point.excluded = false;
        for (real j : jumps) {
            if (std::fabs(x - j) <= floor_r) {
                point.excluded = true;
                break;
            }
        }
        if (point.excluded) {
            ++report.excluded_count;
            point.terminal = 0;
            point.tail_limsup = 0;
            point.pass = false;
        } else {
            for (real r : radii) point.oscillations.push_back(local_oscillation(u, x, r, spec));
            point.terminal = point.oscillations.back();
            point.tail_limsup = 0;
            for (std::size_t i = radii.size() / 2; i < radii.size(); ++i)
                point.tail_limsup = std::max(point.tail_limsup, point.oscillations[i]);
            point.pass = point.terminal <= threshold;
            ++report.evaluated_count;
            if (point.pass) ++passes;
        }
        report.points.push_back(std::move(point));
    }
    report.pass_fraction =
        report.evaluated_count ? static_cast<real>(passes) / report.evaluated_count : 0.0L;

    const auto [lo_it, hi_it] = std::minmax_element(xs.begin(), xs.end());
    const real span_lo = *lo_it, span_hi = *hi_it;
    std::vector<std::pair<real, real>> zones;
    for (real j : jumps) {
        const real a = std::max(j - floor_r, span_lo);
        const real b = std::min(j + floor_r, span_hi);
        if (b > a) zones.emplace_back(a, b);
    }
    std::sort(zones.begin(), zones.end());
    real measure = 0, edge = span_lo;
    for (const auto& [a, b] : zones) {
        const real from = std::max(a, edge);
        if (b > from) measure += b - from, edge = b;
    }
    report.excluded_measure = measure;
    return report;
}

}  // namespace rinorm
