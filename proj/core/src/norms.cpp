#include "rinorm/norms.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace rinorm {

namespace {

constexpr real kInf = std::numeric_limits<real>::infinity();

// ||g||_{p,q} for non-increasing g: (int s^{q/p - 1} g(s)^q ds)^{1/q},
// with the usual sup form at q = inf.
real lorentz_of_decreasing(const StepFunction& g, real p, real q) {
    if (g.is_zero()) return 0;
    if (p == kInf) return g.max_value();  // q = inf enforced by NormSpec
    if (q == kInf) {
        real best = 0;
        for (std::size_t i = 0; i < g.piece_count(); ++i) {
            best = std::max(best, std::pow(g.piece_upper(i), 1 / p) * g.piece_value(i));
        }
        return best;
    }
    real e = q / p;
    real acc = 0;
    real prev = 0;
    for (std::size_t i = 0; i < g.piece_count(); ++i) {
        real upper = std::pow(g.piece_upper(i), e);
        real v = g.piece_value(i);
        if (v > 0) acc += std::pow(v, q) * (p / q) * (upper - prev);
        prev = upper;
    }
    return std::pow(acc, 1 / q);
}

real modular_scaled(const StepFunction& g, const YoungFunction& a, real factor) {
    real acc = 0;
    for (std::size_t i = 0; i < g.piece_count(); ++i) {
        real v = g.piece_value(i);
        if (v > 0) acc += a.evaluate(factor * v) * g.piece_length(i);
        if (acc == kInf) return kInf;
    }
    return acc;
}

real luxemburg_of_decreasing(const StepFunction& g, const YoungFunction& a) {
    if (g.is_zero()) return 0;
    if (a.family() == YoungFunction::Family::EssSupIndicator) return g.max_value();

    auto modular = [&](real lam) { return modular_scaled(g, a, 1 / lam); };

    real hi = g.max_value();
    int steps = 0;
    while (modular(hi) > 1) {
        hi *= 2;
        if (++steps > 200) throw BisectionFailure("Luxemburg upper bracket not found");
    }
    real lo = hi / 2;
    steps = 0;
    while (modular(lo) <= 1) {
        hi = lo;
        lo /= 2;
        if (++steps > 200) throw BisectionFailure("Luxemburg lower bracket not found");
    }
    for (int i = 0; i < 200; ++i) {
        real width = hi - lo;
        if (width <= 1e-12L && width <= 1e-12L * hi) break;
        real mid = lo + width / 2;
        (modular(mid) <= 1 ? hi : lo) = mid;
    }
    return hi;
}

real lambda_of_decreasing(const StepFunction& g, const ConcavePhi& phi) {
    if (g.is_zero()) return 0;
    real acc = g.max_value() * phi.zero_plus();
    real prev = phi.zero_plus();
    for (std::size_t i = 0; i < g.piece_count(); ++i) {
        real cur = phi.evaluate(g.piece_upper(i));
        acc += g.piece_value(i) * (cur - prev);
        prev = cur;
    }
    return acc;
}

// sup_s g**(s) phi(s). On each piece of g the running mean g** is affine
// and phi is concave, so the product is extremal at piece endpoints; the
// limits at 0+ and at infinity are appended explicitly.
real marcinkiewicz_of_decreasing(const StepFunction& g, const ConcavePhi& phi) {
    if (g.is_zero()) return 0;
    real best = g.piece_value(0) * phi.zero_plus();
    real cum = 0;
    for (std::size_t i = 0; i < g.piece_count(); ++i) {
        cum += g.piece_value(i) * g.piece_length(i);
        real t = g.piece_upper(i);
        best = std::max(best, cum / t * phi.evaluate(t));
    }
    real tail = 0;  // lim of integral * phi(s)/s as s grows
    if (phi.family() == ConcavePhi::Family::Power) {
        tail = phi.alpha() == 1 ? cum : 0;
    } else {
        tail = cum * phi.m();
    }
    return std::max(best, tail);
}

}  // namespace

real rep_norm(const StepFunction& u, const NormSpec& spec) {
    StepFunction g = rearrangement(u);
    switch (spec.family()) {
        case NormSpec::Family::Lebesgue:
        case NormSpec::Family::Lorentz:
            return lorentz_of_decreasing(g, spec.p(), spec.q());
        case NormSpec::Family::Orlicz:
            return luxemburg_of_decreasing(g, spec.young());
        case NormSpec::Family::LambdaPhi:
            return lambda_of_decreasing(g, spec.phi());
        case NormSpec::Family::MarcPhi:
            return marcinkiewicz_of_decreasing(g, spec.phi());
    }
    return 0;
}

real averaged_norm(const StepFunction& u, const Interval& g, const NormSpec& spec) {
    StepFunction r = rearrangement(restrict_to(u, g));
    return rep_norm(dilate(r, g.length()), spec);
}

real fundamental_function(const NormSpec& spec, real s) {
    if (!(s > 0)) throw NonPositiveArgument("fundamental_function requires s > 0");
    switch (spec.family()) {
        case NormSpec::Family::Lebesgue:
        case NormSpec::Family::Lorentz: {
            real p = spec.p();
            real q = spec.q();
            if (p == kInf) return 1;
            if (q == kInf) return std::pow(s, 1 / p);
            return std::pow(p / q, 1 / q) * std::pow(s, 1 / p);
        }
        case NormSpec::Family::Orlicz:
            return 1 / spec.young().inverse(1 / s);
        case NormSpec::Family::LambdaPhi:
        case NormSpec::Family::MarcPhi:
            return spec.phi().evaluate(s);
    }
    return 0;
}

real young_modular(const StepFunction& u, const YoungFunction& a) {
    return modular_scaled(u, a, 1);
}

real amemiya_norm(const StepFunction& u, const YoungFunction& a) {
    if (a.family() == YoungFunction::Family::EssSupIndicator) {
        throw UnsupportedYoungFamily("Amemiya form undefined for the ess-sup indicator");
    }
    if (u.is_zero()) return 0;

    if (a.family() == YoungFunction::Family::Power ||
        (a.family() == YoungFunction::Family::PowerLog && a.a() == 0)) {
        real p = a.p();
        real mod = 0;
        for (std::size_t i = 0; i < u.piece_count(); ++i) {
            real v = u.piece_value(i);
            if (v > 0) mod += std::pow(v, p) * u.piece_length(i);
        }
        if (p == 1) return mod;  // infimum attained in the limit k -> inf
        return p * std::pow(p - 1, (1 - p) / p) * std::pow(mod, 1 / p);
    }

    auto value = [&](real x) {
        real k = std::exp2(x);
        return (1 + modular_scaled(u, a, k)) / k;
    };

    // Coarse scan over dyadic k, then golden-section inside the best bracket.
    int best_j = 0;
    real best = kInf;
    for (int j = -60; j <= 60; ++j) {
        real h = value(static_cast<real>(j));
        if (h < best) {
            best = h;
            best_j = j;
        }
    }
    real xl = static_cast<real>(best_j) - 1;
    real xr = static_cast<real>(best_j) + 1;
    const real ratio = (std::sqrt(5.0L) - 1) / 2;
    real x1 = xr - ratio * (xr - xl);
    real x2 = xl + ratio * (xr - xl);
    real f1 = value(x1);
    real f2 = value(x2);
    while (xr - xl > 1e-10L * std::max<real>(1, std::abs(xl) + std::abs(xr))) {
        if (f1 <= f2) {
            xr = x2;
            x2 = x1;
            f2 = f1;
            x1 = xr - ratio * (xr - xl);
            f1 = value(x1);
        } else {
            xl = x1;
            x1 = x2;
            f1 = f2;
            x2 = xl + ratio * (xr - xl);
            f2 = value(x2);
        }
    }
    return std::min(f1, f2);
}

}  // namespace rinorm
