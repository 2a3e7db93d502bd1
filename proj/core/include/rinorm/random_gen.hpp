#pragma once

#include <cstdint>
#include <random>

#include "rinorm/norm_spec.hpp"
#include "rinorm/step_function.hpp"

namespace rinorm {

// Deterministic generator: same seed gives the same stream on every platform
// (values are derived from raw mt19937_64 output, not from distribution
// objects, whose results vary across standard library implementations).
class Rng {
  public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }
    real uniform();                     // [0, 1)
    real uniform(real a, real b);       // [a, b)
    int uniform_int(int lo, int hi);    // inclusive on both ends

  private:
    std::mt19937_64 eng_;
};

// Step function with up to max_pieces pieces supported in (0, span], values
// in [0, vmax]; occasionally inserts interior zero pieces.
StepFunction random_step(Rng& rng, int max_pieces, real span, real vmax);

// Non-increasing step function with values in [0, 1] and support in (0, 1],
// breakpoints on a random dyadic grid.
StepFunction random_monotone_unit(Rng& rng, int max_depth);

// Uniformly mixes the five supported families with moderate parameters.
NormSpec random_spec(Rng& rng);

}  // namespace rinorm
