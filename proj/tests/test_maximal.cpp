#include "doctest.h"

#include <cmath>

#include "rinorm/maximal.hpp"
#include "rinorm/random_gen.hpp"

using namespace rinorm;

TEST_CASE("grid geometry") {
    Grid1D g(0.0L, 2.0L, 4);
    CHECK(g.width() == 0.5L);
    CHECK(g.boundary(0) == 0.0L);
    CHECK(g.boundary(4) == 2.0L);  // exact right endpoint, no rounding
    CHECK(g.cell(2).left == 1.0L);
    CHECK(g.cell(2).right == 1.5L);
    CHECK_THROWS_AS(Grid1D(1.0L, 1.0L, 4), InvalidParameters);
    CHECK_THROWS_AS(Grid1D(0.0L, 1.0L, 1), InvalidParameters);
}

TEST_CASE("all-pairs maximal field of the unit indicator, by hand") {
    StepFunction u = StepFunction::indicator(Interval(0, 1));
    SampledField field = maximal_field(u, NormSpec::lebesgue(1), Grid1D(0, 2, 4), AllPairs{});
    REQUIRE(field.values.size() == 4);
    CHECK(field.values[0] == doctest::Approx(1.0));
    CHECK(field.values[1] == doctest::Approx(1.0));
    CHECK(field.values[2] == doctest::Approx(2.0 / 3.0));
    CHECK(field.values[3] == doctest::Approx(0.5));
    CHECK_FALSE(field.clipped);

    CHECK(level_set_measure(field, 0.6L) == doctest::Approx(1.5));
    CHECK(level_set_measure(field, 0.9L) == doctest::Approx(1.0));
    CHECK(level_set_measure(field, 1.0L) == 0.0L);  // strict inequality

    // Support sticking out of the grid only sets the flag.
    SampledField part = maximal_field(u, NormSpec::lebesgue(1), Grid1D(0, 0.5L, 2), AllPairs{});
    CHECK(part.clipped);
    CHECK(part.values[0] == doctest::Approx(1.0));
}

TEST_CASE("explicit candidate lists attribute a value to every touched cell") {
    StepFunction u = StepFunction::indicator(Interval(0, 1));
    Grid1D grid(0, 2, 4);
    SampledField field = maximal_field(u, NormSpec::lebesgue(1), grid,
                                       ExplicitList{{Interval(0, 1)}});
    CHECK(field.values[0] == doctest::Approx(1.0));
    CHECK(field.values[1] == doctest::Approx(1.0));
    CHECK(field.values[2] == 0.0L);  // cell [1, 1.5) only shares the endpoint
    CHECK(field.values[3] == 0.0L);

    // An interval reaching into a cell interior marks that cell too.
    SampledField wide = maximal_field(u, NormSpec::lebesgue(1), grid,
                                      ExplicitList{{Interval(0.25L, 1.25L)}});
    CHECK(wide.values[0] == doctest::Approx(0.75));
    CHECK(wide.values[2] == doctest::Approx(0.75));
    CHECK(wide.values[3] == 0.0L);

    CHECK_THROWS_AS(maximal_field(u, NormSpec::lebesgue(1), grid, ExplicitList{{}}),
                    EmptyCandidates);
}

TEST_CASE("explicit list is dominated by all pairs on shared endpoints") {
    Rng rng(24601);
    for (int i = 0; i < 20; ++i) {
        StepFunction u = random_step(rng, 6, 2.0L, 3.0L);
        if (u.is_zero()) continue;
        Grid1D grid(0, 2, 8);
        std::vector<Interval> cands;
        for (int a = 0; a < 8; ++a)
            for (int b = a + 1; b <= 8; ++b)
                cands.push_back(Interval(grid.boundary(a), grid.boundary(b)));
        SampledField ex =
            maximal_field(u, NormSpec::lebesgue(1), grid, ExplicitList{std::move(cands)});
        SampledField ap = maximal_field(u, NormSpec::lebesgue(1), grid, AllPairs{});
        for (int j = 0; j < 8; ++j)
            CHECK(ex.values[j] == doctest::Approx(static_cast<double>(ap.values[j])));
    }
}

TEST_CASE("maximal field dominates the function average on each cell") {
    Rng rng(0x1234);
    for (int i = 0; i < 25; ++i) {
        StepFunction u = random_step(rng, 6, 2.0L, 3.0L);
        Grid1D grid(0, 2, 10);
        SampledField field = maximal_field(u, NormSpec::lebesgue(1), grid, AllPairs{});
        for (int j = 0; j < grid.n; ++j) {
            Interval cell = grid.cell(j);
            real avg = (partial_integral(u, cell.right) -
                        (cell.left > 0 ? partial_integral(u, cell.left) : 0)) /
                       cell.length();
            CHECK(field.values[j] >= avg - 1e-9L);
        }
    }
}

TEST_CASE("weak-type profile on the hand-checked field") {
    StepFunction u = StepFunction::indicator(Interval(0, 1));
    SampledField field = maximal_field(u, NormSpec::lebesgue(1), Grid1D(0, 2, 4), AllPairs{});
    EstimateReport rep = weak_type_profile(u, Interval(0, 2), NormSpec::lebesgue(1), field,
                                           {0.55L, 0.8L});
    CHECK(rep.sup_value == doctest::Approx(0.825));
    CHECK(rep.arg_sup == doctest::Approx(0.55));
    CHECK(rep.curve.size() == 2);
    CHECK(rep.curve[1].value == doctest::Approx(0.8));

    CHECK_THROWS_AS(weak_type_profile(StepFunction(), Interval(0, 2), NormSpec::lebesgue(1),
                                      field, {0.5L}),
                    ZeroNorm);
    CHECK_THROWS_AS(
        weak_type_profile(u, Interval(0, 2), NormSpec::lebesgue(1), field, {}),
        InvalidParameters);
    CHECK_THROWS_AS(
        weak_type_profile(u, Interval(0, 2), NormSpec::lebesgue(1), field, {-0.5L}),
        InvalidParameters);
}

TEST_CASE("rearranged-ratio profile on the hand-checked field") {
    StepFunction u = StepFunction::indicator(Interval(0, 1));
    SampledField field = maximal_field(u, NormSpec::lebesgue(1), Grid1D(0, 2, 4), AllPairs{});
    EstimateReport rep =
        riesz_wiener_profile(u, NormSpec::lebesgue(1), field, {0.5L, 1.0L, 2.0L});
    CHECK(rep.sup_value == doctest::Approx(1.0));
    CHECK(rep.arg_sup == doctest::Approx(0.5));
    CHECK(rep.curve[1].value == doctest::Approx(2.0 / 3.0));
    CHECK(rep.curve[2].value == doctest::Approx(0.0));

    CHECK_THROWS_AS(riesz_wiener_profile(StepFunction(), NormSpec::lebesgue(1), field, {0.5L}),
                    ZeroNorm);
    CHECK_THROWS_AS(riesz_wiener_profile(u, NormSpec::lebesgue(1), field, {}),
                    InvalidParameters);
}

TEST_CASE("level-set measure is exact on power-of-two grids") {
    // Width 3/16 has an exact binary representation, so count * width
    // reproduces dyadic measures without rounding.
    StepFunction u = StepFunction::indicator(Interval(0, 1.5L));
    SampledField field = maximal_field(u, NormSpec::lebesgue(1), Grid1D(0, 3.0L, 16), AllPairs{});
    real measure = level_set_measure(field, 0.999L);
    CHECK(measure == 1.5L);  // exact: eight cells of width exactly 0.1875
}
