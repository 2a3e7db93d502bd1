#include "rinorm/witness.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rinorm/errors.hpp"

namespace rinorm {

HWitness lorentz_h_witness(real p, real q, real c, int pieces) {
    NormSpec::lorentz(p, q);
    if (std::isinf(static_cast<double>(q)) || !(p < q))
        throw InvalidParameters("witness needs 1 <= p < q < inf");
    if (!(c > std::pow(q / p, 1.0L / q)))
        throw InvalidParameters("witness height must exceed (q/p)^(1/q)");
    if (pieces < 1) throw InvalidParameters("witness needs at least one piece");
    const real last = c * std::pow(std::pow(3.0L, static_cast<real>(pieces)) /
                                       static_cast<real>(pieces),
                                   1.0L / p);
    if (!std::isfinite(last)) throw InvalidParameters("witness height overflows");

    HWitness w;
    std::vector<real> bounds, values;
    for (int k = pieces; k >= 1; --k) {
        const real lo = 0.5L * std::pow(3.0L, static_cast<real>(-k));
        const real hi = 1.5L * std::pow(3.0L, static_cast<real>(-k));
        bounds.push_back(hi);
        values.push_back(c * std::pow(std::pow(3.0L, static_cast<real>(k)) /
                                          static_cast<real>(k),
                                      1.0L / p));
        if (k == pieces) bounds.insert(bounds.begin(), lo), values.insert(values.begin(), 0.0L);
    }
    w.f = StepFunction(bounds, values);
    for (int k = 1; k <= pieces; ++k) {
        const real lo = 0.5L * std::pow(3.0L, static_cast<real>(-k));
        w.intervals.emplace_back(lo, 3.0L * lo);
        w.weights.push_back(1.0L / static_cast<real>(k));
    }
    return w;
}

HWitnessReport verify_h_witness(const HWitness& w, const NormSpec& spec,
                                real divergence_bound) {
    if (w.intervals.size() != w.weights.size() || w.intervals.empty())
        throw InvalidParameters("witness needs matching intervals and weights");
    HWitnessReport report;
    report.divergence_bound = divergence_bound;
    report.weight_sum = 0;
    report.all_exceed_one = true;
    report.all_admissible = true;
    for (std::size_t i = 0; i < w.intervals.size(); ++i) {
        const Interval& piece = w.intervals[i];
        const real a = w.weights[i];
        const StepFunction slice = rearrangement(restrict_to(w.f, piece));
        const real value = rep_norm(dilate(slice, a), spec);
        HWitnessReport::Entry entry{static_cast<int>(i) + 1, piece,        a,
                                    value,
                                    value > 1.0L,             a >= piece.length(),
                                    0.0L};
        report.weight_sum += a;
        entry.partial_weight_sum = report.weight_sum;
        report.all_exceed_one = report.all_exceed_one && entry.exceeds_one;
        report.all_admissible = report.all_admissible && entry.weight_admissible;
        report.entries.push_back(entry);
    }
    const bool diverges = report.weight_sum >= divergence_bound;
    report.verdict = (report.all_exceed_one && report.all_admissible && diverges)
                         ? "violates-averaging"
                         : "no-violation";
    return report;
}

namespace {

real shell_norm(const StepFunction& g, const NormSpec& spec, real lo, real hi) {
    return rep_norm(restrict_to(g, Interval(lo, hi)), spec);
}

}  // namespace

HWitness witness_from_non_lac(const StepFunction& g, const NormSpec& spec, int pieces) {
    if (!g.non_increasing()) throw NotMonotone("witness construction needs g non-increasing");
    if (pieces < 1) throw InvalidParameters("witness needs at least one piece");
    HWitness w;
    w.f = g;
    real b = 1.0L;
    for (int k = 0; k < pieces; ++k) {
        const real head = rep_norm(restrict_to(g, Interval(0, b)), spec);
        if (!(head >= 2.0L))
            throw NormVanishes("restricted norm fell below 2; tail is norm-vanishing");
        long l = 2;
        while (!(shell_norm(g, spec, b / static_cast<real>(l), b) > 1.0L)) {
            if (l > (1L << 60)) throw NormVanishes("no shell with norm above 1 found");
            l *= 2;
        }
        long lo = std::max(2L, l / 2), hi = l;
        while (lo < hi) {
            const long mid = lo + (hi - lo) / 2;
            if (shell_norm(g, spec, b / static_cast<real>(mid), b) > 1.0L)
                hi = mid;
            else
                lo = mid + 1;
        }
        const real next = b / static_cast<real>(lo);
        w.intervals.emplace_back(next, b);
        w.weights.push_back(1.0L);
        b = next;
    }
    return w;
}

Transplant transplant(const HWitness& w, real origin) {
    if (!(origin >= 0) || !std::isfinite(origin))
        throw InvalidParameters("transplant origin must be finite and non-negative");
    if (w.intervals.size() != w.weights.size() || w.intervals.empty())
        throw InvalidParameters("witness needs matching intervals and weights");
    Transplant out;
    std::vector<real> bounds, values;
    real left = origin;
    if (left > 0) {
        bounds.push_back(left);
        values.push_back(0.0L);
    }
    for (std::size_t i = 0; i < w.intervals.size(); ++i) {
        const real a = w.weights[i];
        if (a < w.intervals[i].length() - 1e-15L)
            throw InvalidParameters("weight smaller than its interval");
        const StepFunction slice = rearrangement(restrict_to(w.f, w.intervals[i]));
        for (std::size_t j = 0; j < slice.piece_count(); ++j) {
            real b = left + slice.piece_upper(j);
            // A slice shorter than one ulp of its offset would round to an
            // empty piece and silently drop the ball's mass; keep at least
            // one representable step instead (heights stay exact, so the
            // ball's averaged norm still exceeds its target).
            const real prev_bound = bounds.empty() ? left : bounds.back();
            if (b <= prev_bound)
                b = std::nextafter(prev_bound, std::numeric_limits<real>::infinity());
            bounds.push_back(b);
            values.push_back(slice.piece_value(j));
        }
        const real end = left + a;
        if (bounds.empty() || bounds.back() < end) {
            bounds.push_back(end);
            values.push_back(0.0L);
        }
        out.balls.emplace_back(left, end);
        left = end;
    }
    out.u = StepFunction(bounds, values);
    return out;
}

StepFunction marcinkiewicz_extremal(real alpha, real s_min, real s_max,
                                    int pieces_per_decade) {
    if (!(alpha > 0) || !(alpha < 1)) throw InvalidParameters("alpha must lie in (0, 1)");
    if (!(s_min > 0) || !(s_min < s_max)) throw InvalidParameters("need 0 < s_min < s_max");
    if (pieces_per_decade < 1) throw InvalidParameters("need at least one piece per decade");
    const real decades = std::log10(s_max / s_min);
    const int m = std::max(1, static_cast<int>(std::ceil(decades * pieces_per_decade)));
    const auto psi = [&](real s) { return std::pow(s, 1.0L - alpha); };
    std::vector<real> bounds{s_min};
    std::vector<real> values{psi(s_min) / s_min};
    real prev = s_min;
    for (int j = 1; j <= m; ++j) {
        real s = j == m ? s_max : s_min * std::pow(10.0L, decades * j / m);
        bounds.push_back(s);
        values.push_back((psi(s) - psi(prev)) / (s - prev));
        prev = s;
    }
    return StepFunction(bounds, values);
}

StepFunction orlicz_non_doubling_probe(real delta, int pieces_per_decade) {
    if (!(delta > 0) || !(delta < 0.5L)) throw InvalidParameters("delta must lie in (0, 0.5)");
    if (pieces_per_decade < 1) throw InvalidParameters("need at least one piece per decade");
    const auto g = [](real s) {
        const real w = 1.0L - std::log(s);
        return std::log1p(1.0L / (s * w * w));
    };
    const real decades = std::log10(1.0L / delta);
    const int m = std::max(1, static_cast<int>(std::ceil(decades * pieces_per_decade)));
    std::vector<real> bounds{delta};
    std::vector<real> values{g(delta)};
    real prev = delta;
    for (int j = 1; j <= m; ++j) {
        real s = j == m ? 1.0L : delta * std::pow(10.0L, decades * j / m);
        bounds.push_back(s);
        values.push_back(g(std::sqrt(prev * s)));
        prev = s;
    }
    return StepFunction(bounds, values);
}

ProbeCurve lac_probe(const StepFunction& u, const NormSpec& spec,
                     const std::vector<real>& ts) {
    if (ts.empty()) throw InvalidParameters("probe needs evaluation points");
    for (std::size_t i = 0; i < ts.size(); ++i) {
        if (!(ts[i] > 0)) throw InvalidParameters("probe points must be positive");
        if (i > 0 && !(ts[i] < ts[i - 1]))
            throw InvalidParameters("probe points must be strictly decreasing");
    }
    const StepFunction g = rearrangement(u);
    ProbeCurve curve;
    curve.ts = ts;
    for (real t : ts) curve.values.push_back(rep_norm(restrict_to(g, Interval(0, t)), spec));
    return curve;
}

}  // namespace rinorm
