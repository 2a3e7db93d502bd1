#pragma once

#include <string>

#include "rinorm/errors.hpp"
#include "rinorm/step_function.hpp"

namespace rinorm {

// Young function: convex, vanishing at 0, increasing to infinity.
// Four concrete families are supported.
class YoungFunction {
  public:
    enum class Family {
        Power,           // t^p, p >= 1
        PowerLog,        // t^p * ln(e + t)^a, p >= 1, a >= 0
        ExpMinusOne,     // e^t - 1
        EssSupIndicator  // 0 on [0, 1], +inf beyond (Luxemburg norm = ess sup)
    };

    static YoungFunction power(real p);
    static YoungFunction power_log(real p, real a);
    static YoungFunction exp_minus_one();
    static YoungFunction ess_sup_indicator();

    Family family() const { return family_; }
    real p() const { return p_; }
    real a() const { return a_; }

    // A(t) for t >= 0; may be +inf (EssSupIndicator beyond 1, or overflow).
    real evaluate(real t) const;

    // Left derivative A'(t); piecewise formula per family.
    real derivative(real t) const;

    // Right-continuous inverse: sup{ t >= 0 : A(t) <= y } for y >= 0.
    real inverse(real y) const;

    // Whether A(2t) <= C * A(t) holds for large t (doubling growth).
    bool doubling() const;

    std::string name() const;

  private:
    YoungFunction(Family f, real p, real a) : family_(f), p_(p), a_(a) {}

    Family family_;
    real p_;
    real a_;
};

// Concave weight phi on [0, inf), nonnegative, non-decreasing, phi(0) = 0,
// with a possible jump at 0 captured by zero_plus().
class ConcavePhi {
  public:
    enum class Family {
        Power,  // s^alpha, 0 < alpha <= 1
        Affine  // b + m*s for s > 0; b, m >= 0, not both zero
    };

    static ConcavePhi power(real alpha);
    static ConcavePhi affine(real b, real m);

    Family family() const { return family_; }
    real alpha() const { return alpha_; }
    real b() const { return b_; }
    real m() const { return m_; }

    // phi(s) for s > 0; returns 0 at s = 0.
    real evaluate(real s) const;

    // lim phi(s) as s -> 0+.
    real zero_plus() const;

    std::string name() const;

  private:
    ConcavePhi(Family f, real alpha, real b, real m)
        : family_(f), alpha_(alpha), b_(b), m_(m) {}

    Family family_;
    real alpha_;
    real b_;
    real m_;
};

}  // namespace rinorm
