#pragma once

#include <cstddef>
#include <vector>

#include "rinorm/errors.hpp"

namespace rinorm {

// Scalar type used throughout. The extended range (about 1e+/-4932 on x86)
// keeps deeply graded constructions, whose piece heights and widths span
// hundreds of decades, inside the representable range.
using real = long double;

// Open interval (left, right) with left < right, both finite.
struct Interval {
    real left;
    real right;

    Interval(real l, real r);
    real length() const { return right - left; }
};

// Nonnegative piecewise-constant function on the half line [0, inf).
//
// A function with m pieces is stored as strictly increasing breakpoints
// t_1 < ... < t_m (t_0 = 0 implicit) together with values v_1 ... v_m,
// where piece i is the right-open interval [t_{i-1}, t_i). The function is
// identically zero on [t_m, inf). The value at a breakpoint is the value of
// the piece to its right.
//
// Canonical form is enforced by every constructor and operation: adjacent
// pieces with equal values are merged, zero-length pieces are dropped, and
// trailing zero-valued pieces are removed (they are indistinguishable from
// the implicit zero tail). The zero function is represented by empty arrays.
class StepFunction {
  public:
    StepFunction() = default;
    StepFunction(std::vector<real> breakpoints, std::vector<real> values);

    // Indicator of an interval, clipped to [0, inf), scaled by height >= 0.
    static StepFunction indicator(const Interval& g, real height = 1);

    bool is_zero() const { return values_.empty(); }
    std::size_t piece_count() const { return values_.size(); }

    const std::vector<real>& breakpoints() const { return bounds_; }
    const std::vector<real>& values() const { return values_; }

    real piece_lower(std::size_t i) const { return i == 0 ? 0 : bounds_[i - 1]; }
    real piece_upper(std::size_t i) const { return bounds_[i]; }
    real piece_value(std::size_t i) const { return values_[i]; }
    real piece_length(std::size_t i) const { return piece_upper(i) - piece_lower(i); }

    // Right-continuous evaluation; zero for s < 0 and for s >= t_m.
    real operator()(real s) const;

    // Last breakpoint, i.e. the end of the explicitly represented part.
    real domain_end() const { return bounds_.empty() ? 0 : bounds_.back(); }

    real integral() const;
    real max_value() const;
    real support_measure() const;
    bool non_increasing() const;

  private:
    std::vector<real> bounds_;
    std::vector<real> values_;

    void canonicalize();
    void validate() const;
};

// Structural comparison of canonical forms: equal piece counts and
// breakpoints/values that agree within the absolute tolerance.
bool approx_equal(const StepFunction& a, const StepFunction& b, real tol = 1e-12L);

// Distribution function t -> measure of {u > t}, itself a step function.
StepFunction distribution(const StepFunction& u);

// Decreasing rearrangement: pieces sorted by value, left-packed at 0.
StepFunction rearrangement(const StepFunction& u);

// Right-continuous inverse of a non-increasing function,
// f^{-1}(y) = sup{ s : f(s) > y }. For step functions this coincides with
// the distribution function. Throws NotMonotone otherwise.
StepFunction right_inverse(const StepFunction& f);

// Integral of u over (0, s) for s > 0. Throws NonPositiveArgument.
real partial_integral(const StepFunction& u, real s);

// Dilation s -> u(s * delta) for delta > 0. Throws NonPositiveArgument.
StepFunction dilate(const StepFunction& u, real delta);

// Pointwise sum.
StepFunction superpose(const StepFunction& u, const StepFunction& v);

// Pointwise scaling by c >= 0. Throws InvalidParameters for c < 0.
StepFunction scale(const StepFunction& u, real c);

// u restricted to g (zero outside). The part of g below 0 contributes
// nothing; u is treated as zero there.
StepFunction restrict_to(const StepFunction& u, const Interval& g);

// Shift to the right by dx >= 0. Throws InvalidParameters for dx < 0.
StepFunction translate(const StepFunction& u, real dx);

StepFunction pointwise_max(const StepFunction& u, const StepFunction& v);
StepFunction pointwise_min(const StepFunction& u, const StepFunction& v);

// Integral of the pointwise product u * v.
real product_integral(const StepFunction& u, const StepFunction& v);

}  // namespace rinorm
