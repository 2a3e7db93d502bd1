#include "rinorm/random_gen.hpp"

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "rinorm/errors.hpp"

namespace rinorm {

real Rng::uniform() {
    return static_cast<real>(next_u64() >> 11) * 0x1p-53L;
}

real Rng::uniform(real a, real b) { return a + (b - a) * uniform(); }

int Rng::uniform_int(int lo, int hi) {
    const auto span = static_cast<std::uint64_t>(hi - lo) + 1;
    return lo + static_cast<int>(next_u64() % span);
}

StepFunction random_step(Rng& rng, int max_pieces, real span, real vmax) {
    if (max_pieces < 1 || !(span > 0) || !(vmax > 0))
        throw InvalidParameters("random step needs positive shape parameters");
    const int m = rng.uniform_int(1, max_pieces);
    std::set<real> cuts;
    while (static_cast<int>(cuts.size()) < m) {
        const real t = rng.uniform(0.0L, span);
        if (t > 0) cuts.insert(t);
    }
    std::vector<real> bounds(cuts.begin(), cuts.end());
    std::vector<real> values;
    for (int i = 0; i < m; ++i) {
        const bool zero = rng.uniform() < 0.1L;
        values.push_back(zero ? 0.0L : rng.uniform(0.0L, vmax));
    }
    return StepFunction(bounds, values);
}

StepFunction random_monotone_unit(Rng& rng, int max_depth) {
    if (max_depth < 2) throw InvalidParameters("dyadic depth must be at least 2");
    const int depth = rng.uniform_int(2, max_depth);
    const int cells = 1 << depth;
    const int m = rng.uniform_int(1, std::min(cells, 12));
    std::set<int> picks;
    while (static_cast<int>(picks.size()) < m) picks.insert(rng.uniform_int(1, cells));
    std::vector<real> values;
    for (int i = 0; i < m; ++i) values.push_back(rng.uniform());
    std::sort(values.begin(), values.end(), std::greater<real>());
    std::vector<real> bounds;
    for (int c : picks) bounds.push_back(static_cast<real>(c) / cells);
    return StepFunction(bounds, values);
}

NormSpec random_spec(Rng& rng) {
    switch (rng.uniform_int(0, 4)) {
        case 0: {
            const real ps[] = {1.0L, 1.5L, 2.0L, 3.0L};
            return NormSpec::lebesgue(ps[rng.uniform_int(0, 3)]);
        }
        case 1: {
            const real pairs[][2] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}, {1, 2}, {2, 4}};
            const auto& pq = pairs[rng.uniform_int(0, 5)];
            return NormSpec::lorentz(pq[0], pq[1]);
        }
        case 2:
            switch (rng.uniform_int(0, 2)) {
                case 0: return NormSpec::orlicz(YoungFunction::power(rng.uniform(1.0L, 3.0L)));
                case 1:
                    return NormSpec::orlicz(
                        YoungFunction::power_log(rng.uniform(1.0L, 2.5L), rng.uniform(0.0L, 2.0L)));
                default: return NormSpec::orlicz(YoungFunction::exp_minus_one());
            }
        case 3:
            if (rng.uniform() < 0.5L)
                return NormSpec::lambda_phi(ConcavePhi::power(rng.uniform(0.25L, 1.0L)));
            return NormSpec::lambda_phi(
                ConcavePhi::affine(rng.uniform(0.0L, 0.5L), rng.uniform(0.5L, 2.0L)));
        default:
            if (rng.uniform() < 0.5L)
                return NormSpec::marcinkiewicz(ConcavePhi::power(rng.uniform(0.25L, 1.0L)));
            return NormSpec::marcinkiewicz(
                ConcavePhi::affine(rng.uniform(0.1L, 0.5L), rng.uniform(0.5L, 2.0L)));
    }
    throw InvalidParameters("unreachable");
}

}  // namespace rinorm
