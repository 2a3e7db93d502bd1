#include "doctest.h"

#include <cmath>

#include "rinorm/lebesgue.hpp"
#include "rinorm/witness.hpp"

using namespace rinorm;

TEST_CASE("local oscillation on hand-checked configurations") {
    StepFunction one = StepFunction::indicator(Interval(0, 1));
    NormSpec l2 = NormSpec::lebesgue(2);

    // Interior of a constant piece: zero, at any radius reaching the edges.
    CHECK(local_oscillation(one, 0.5L, 0.25L, l2) == 0.0L);

    // At the jump x = 1 the function evaluates to the right, i.e. 0; the
    // mismatch fills half the ball (0.5, 1.5).
    CHECK(local_oscillation(one, 1.0L, 0.5L, l2) ==
          doctest::Approx(std::sqrt(0.5)));

    // Near the origin the zero extension to the negative axis shows up:
    // ball (-0.1, 0.3) disagrees with u(0.1) = 1 on measure 0.1 out of 0.4.
    CHECK(local_oscillation(one, 0.1L, 0.2L, l2) == doctest::Approx(0.5));

    // Beyond the support everything vanishes.
    CHECK(local_oscillation(one, 5.0L, 1.0L, l2) == 0.0L);
    // A constant function has no oscillation anywhere inside its support.
    StepFunction flat = StepFunction::indicator(Interval(0, 10), 3.0L);
    CHECK(local_oscillation(flat, 5.0L, 1.0L, l2) == 0.0L);

    CHECK_THROWS_AS(local_oscillation(one, 0.5L, 0.0L, l2), InvalidParameters);
    CHECK_THROWS_AS(local_oscillation(one, std::numeric_limits<real>::infinity(), 1.0L, l2),
                    InvalidParameters);
}

TEST_CASE("oscillation at a jump scales with the averaging norm") {
    StepFunction u({1.0L, 2.0L}, {3.0L, 1.0L});
    NormSpec l1 = NormSpec::lebesgue(1);
    // x = 1: c = 1, ball (0.75, 1.25): |u - 1| = 2 on (0.75, 1); average 1.
    CHECK(local_oscillation(u, 1.0L, 0.25L, l1) == doctest::Approx(1.0));
    // Shrinking the radius keeps the balance for L1 (half the ball differs).
    CHECK(local_oscillation(u, 1.0L, 0.05L, l1) == doctest::Approx(1.0));
    // Under the sup norm the mismatch never averages away.
    CHECK(local_oscillation(u, 1.0L, 0.05L, NormSpec::lebesgue(
                                                std::numeric_limits<real>::infinity())) ==
          doctest::Approx(2.0));
}

TEST_CASE("oscillation around the graded witness refuses to decay") {
    // The singular accumulation at 0 defeats the averaging: radii shrinking
    // through the shells see averaged values that grow without bound.
    HWitness w = lorentz_h_witness(1, 2, 1.5L, 20);
    NormSpec spec = NormSpec::lorentz(1, 2);
    real prev = 0;
    for (int k = 4; k <= 8; ++k) {
        real r = 1.5L * std::pow(3.0L, static_cast<real>(-k));
        real osc = local_oscillation(w.f, 0.0L, r, spec);
        CHECK(osc > 10.0L);
        CHECK(osc > prev);
        prev = osc;
    }
    // The same radii at an ordinary continuity point decay to zero.
    CHECK(local_oscillation(StepFunction::indicator(Interval(0, 1)), 0.5L, 1e-4L, spec) ==
          0.0L);
}

TEST_CASE("scan bookkeeping: exclusion zones, pass fraction, curves") {
    StepFunction one = StepFunction::indicator(Interval(0, 1));
    NormSpec l2 = NormSpec::lebesgue(2);
    std::vector<real> xs;
    for (int i = 0; i <= 40; ++i) xs.push_back(-0.2L + 0.05L * i);  // [-0.2, 1.8]
    std::vector<real> radii = {0.2L, 0.1L, 0.05L, 0.02L};

    ScanReport rep = lebesgue_scan(one, l2, xs, radii, 0.01L);
    CHECK(rep.points.size() == xs.size());
    CHECK(rep.evaluated_count + rep.excluded_count == xs.size());
    // Jumps at 0 and 1; floor 0.02 excludes exactly the two sampled points
    // sitting on the jumps themselves.
    CHECK(rep.excluded_count == 2);
    // Everything evaluated has a jump-free terminal ball: zero oscillation.
    CHECK(rep.pass_fraction == doctest::Approx(1.0));
    for (const auto& pt : rep.points) {
        if (pt.excluded) continue;
        CHECK(pt.oscillations.size() == radii.size());
        CHECK(pt.terminal == 0.0L);
        CHECK(pt.terminal <= pt.tail_limsup + 1e-18L);
        CHECK(pt.pass);
    }
    // Exclusion zone: two radius-0.02 neighbourhoods fully inside the span.
    CHECK(rep.excluded_measure == doctest::Approx(0.08));

    // Tail curves near the jump see positive oscillation at larger radii.
    bool saw_positive_tail = false;
    for (const auto& pt : rep.points) {
        if (!pt.excluded && pt.tail_limsup > 0) saw_positive_tail = true;
    }
    CHECK(saw_positive_tail);
}

TEST_CASE("scan input validation") {
    StepFunction one = StepFunction::indicator(Interval(0, 1));
    NormSpec l2 = NormSpec::lebesgue(2);
    CHECK_THROWS_AS(lebesgue_scan(one, l2, {}, {0.1L}, 0.5L), InvalidParameters);
    CHECK_THROWS_AS(lebesgue_scan(one, l2, {0.5L}, {}, 0.5L), InvalidParameters);
    CHECK_THROWS_AS(lebesgue_scan(one, l2, {0.5L}, {0.1L, 0.1L}, 0.5L), InvalidParameters);
    CHECK_THROWS_AS(lebesgue_scan(one, l2, {0.5L}, {0.1L, 0.2L}, 0.5L), InvalidParameters);
    CHECK_THROWS_AS(lebesgue_scan(one, l2, {0.5L}, {0.1L}, 0.0L), InvalidParameters);
}

TEST_CASE("finer radius floors shrink the excluded measure") {
    StepFunction u({0.4L, 1.0L}, {2.0L, 1.0L});
    NormSpec l1 = NormSpec::lebesgue(1);
    std::vector<real> xs;
    for (int i = 0; i <= 100; ++i) xs.push_back(0.01L * i);
    ScanReport coarse = lebesgue_scan(u, l1, xs, {0.2L, 0.1L}, 0.5L);
    ScanReport fine = lebesgue_scan(u, l1, xs, {0.2L, 0.1L, 0.01L}, 0.5L);
    CHECK(fine.excluded_measure < coarse.excluded_measure);
    CHECK(fine.evaluated_count > coarse.evaluated_count);
    CHECK(fine.pass_fraction == doctest::Approx(1.0));
}
