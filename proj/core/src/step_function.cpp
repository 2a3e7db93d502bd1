#include "rinorm/step_function.hpp"

#include <algorithm>
#include <cmath>
#include <utility>

namespace rinorm {

namespace {

void require_finite(real x, const char* what) {
    if (!std::isfinite(x)) throw InvalidParameters(std::string(what) + " must be finite");
}

}  // namespace

Interval::Interval(real l, real r) : left(l), right(r) {
    require_finite(l, "interval endpoint");
    require_finite(r, "interval endpoint");
    if (!(l < r)) throw InvalidParameters("interval requires left < right");
}

StepFunction::StepFunction(std::vector<real> breakpoints, std::vector<real> values)
    : bounds_(std::move(breakpoints)), values_(std::move(values)) {
    validate();
    canonicalize();
}

StepFunction StepFunction::indicator(const Interval& g, real height) {
    if (height < 0) throw InvalidParameters("indicator height must be nonnegative");
    real lo = std::max<real>(g.left, 0);
    real hi = g.right;
    if (!(lo < hi) || height == 0) return StepFunction();
    if (lo == 0) return StepFunction({hi}, {height});
    return StepFunction({lo, hi}, {0, height});
}

void StepFunction::validate() const {
    if (bounds_.size() != values_.size()) {
        throw InvalidParameters("breakpoint/value arrays must have equal length");
    }
    real prev = 0;
    for (real t : bounds_) {
        require_finite(t, "breakpoint");
        if (t < prev) throw InvalidParameters("breakpoints must be nondecreasing and positive");
        prev = t;
    }
    for (real v : values_) {
        require_finite(v, "value");
        if (v < 0) throw InvalidParameters("values must be nonnegative");
    }
}

void StepFunction::canonicalize() {
    std::vector<real> b;
    std::vector<real> v;
    b.reserve(bounds_.size());
    v.reserve(values_.size());
    real lower = 0;
    for (std::size_t i = 0; i < bounds_.size(); ++i) {
        if (!(bounds_[i] > lower)) continue;  // zero-length piece
        if (!v.empty() && v.back() == values_[i]) {
            b.back() = bounds_[i];  // merge with equal neighbour
        } else {
            b.push_back(bounds_[i]);
            v.push_back(values_[i]);
        }
        lower = bounds_[i];
    }
    while (!v.empty() && v.back() == 0) {
        b.pop_back();
        v.pop_back();
    }
    bounds_ = std::move(b);
    values_ = std::move(v);
}

real StepFunction::operator()(real s) const {
    if (s < 0 || bounds_.empty() || s >= bounds_.back()) return 0;
    auto it = std::upper_bound(bounds_.begin(), bounds_.end(), s);
    return values_[static_cast<std::size_t>(it - bounds_.begin())];
}

real StepFunction::integral() const {
    real acc = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) acc += values_[i] * piece_length(i);
    return acc;
}

real StepFunction::max_value() const {
    real m = 0;
    for (real v : values_) m = std::max(m, v);
    return m;
}

real StepFunction::support_measure() const {
    real acc = 0;
    for (std::size_t i = 0; i < values_.size(); ++i) {
        if (values_[i] > 0) acc += piece_length(i);
    }
    return acc;
}

bool StepFunction::non_increasing() const {
    for (std::size_t i = 1; i < values_.size(); ++i) {
        if (values_[i] > values_[i - 1]) return false;
    }
    return true;
}

bool approx_equal(const StepFunction& a, const StepFunction& b, real tol) {
    if (a.piece_count() != b.piece_count()) return false;
    for (std::size_t i = 0; i < a.piece_count(); ++i) {
        if (std::abs(a.piece_upper(i) - b.piece_upper(i)) > tol) return false;
        if (std::abs(a.piece_value(i) - b.piece_value(i)) > tol) return false;
    }
    return true;
}

namespace {

// Pieces of u with positive value, sorted by value descending.
std::vector<std::pair<real, real>> sorted_level_pieces(const StepFunction& u) {
    std::vector<std::pair<real, real>> pieces;  // (value, length)
    pieces.reserve(u.piece_count());
    for (std::size_t i = 0; i < u.piece_count(); ++i) {
        if (u.piece_value(i) > 0) pieces.emplace_back(u.piece_value(i), u.piece_length(i));
    }
    std::sort(pieces.begin(), pieces.end(),
              [](const auto& a, const auto& b) { return a.first > b.first; });
    return pieces;
}

}  // namespace

StepFunction distribution(const StepFunction& u) {
    auto pieces = sorted_level_pieces(u);
    if (pieces.empty()) return StepFunction();
    // Walk values from the largest down, accumulating measure{u >= value}.
    // For t in [y_{j-1}, y_j) the distribution equals measure{u >= y_j}.
    std::vector<real> levels;   // distinct values, descending
    std::vector<real> measures; // matching measure{u >= value}
    real cum = 0;
    std::size_t i = 0;
    while (i < pieces.size()) {
        real v = pieces[i].first;
        while (i < pieces.size() && pieces[i].first == v) {
            cum += pieces[i].second;
            ++i;
        }
        levels.push_back(v);
        measures.push_back(cum);
    }
    std::vector<real> bounds(levels.rbegin(), levels.rend());
    std::vector<real> values(measures.rbegin(), measures.rend());
    return StepFunction(std::move(bounds), std::move(values));
}

StepFunction rearrangement(const StepFunction& u) {
    auto pieces = sorted_level_pieces(u);
    std::vector<real> bounds;
    std::vector<real> values;
    bounds.reserve(pieces.size());
    values.reserve(pieces.size());
    real edge = 0;
    for (const auto& [v, len] : pieces) {
        edge += len;
        bounds.push_back(edge);
        values.push_back(v);
    }
    return StepFunction(std::move(bounds), std::move(values));
}

StepFunction right_inverse(const StepFunction& f) {
    if (!f.non_increasing()) throw NotMonotone("right_inverse requires a non-increasing function");
    return distribution(f);
}

real partial_integral(const StepFunction& u, real s) {
    if (!(s > 0)) throw NonPositiveArgument("partial_integral requires s > 0");
    real acc = 0;
    for (std::size_t i = 0; i < u.piece_count(); ++i) {
        real lo = u.piece_lower(i);
        if (lo >= s) break;
        real hi = std::min(u.piece_upper(i), s);
        acc += u.piece_value(i) * (hi - lo);
    }
    return acc;
}

StepFunction dilate(const StepFunction& u, real delta) {
    if (!(delta > 0)) throw NonPositiveArgument("dilate requires delta > 0");
    std::vector<real> bounds;
    bounds.reserve(u.piece_count());
    for (real t : u.breakpoints()) bounds.push_back(t / delta);
    return StepFunction(std::move(bounds), u.values());
}

namespace {

// Sweep two step functions over the merged breakpoint set.
StepFunction combine(const StepFunction& u, const StepFunction& v, real (*op)(real, real)) {
    std::vector<real> cuts;
    cuts.reserve(u.piece_count() + v.piece_count());
    cuts.insert(cuts.end(), u.breakpoints().begin(), u.breakpoints().end());
    cuts.insert(cuts.end(), v.breakpoints().begin(), v.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());

    std::vector<real> bounds;
    std::vector<real> values;
    bounds.reserve(cuts.size());
    values.reserve(cuts.size());
    real lower = 0;
    for (real t : cuts) {
        bounds.push_back(t);
        values.push_back(op(u(lower), v(lower)));
        lower = t;
    }
    return StepFunction(std::move(bounds), std::move(values));
}

}  // namespace

StepFunction superpose(const StepFunction& u, const StepFunction& v) {
    return combine(u, v, [](real a, real b) { return a + b; });
}

StepFunction pointwise_max(const StepFunction& u, const StepFunction& v) {
    return combine(u, v, [](real a, real b) { return std::max(a, b); });
}

StepFunction pointwise_min(const StepFunction& u, const StepFunction& v) {
    return combine(u, v, [](real a, real b) { return std::min(a, b); });
}

StepFunction scale(const StepFunction& u, real c) {
    if (c < 0) throw InvalidParameters("scale requires c >= 0");
    std::vector<real> values;
    values.reserve(u.piece_count());
    for (real v : u.values()) values.push_back(c * v);
    return StepFunction(u.breakpoints(), std::move(values));
}

StepFunction restrict_to(const StepFunction& u, const Interval& g) {
    real lo = std::max<real>(g.left, 0);
    real hi = g.right;
    if (!(lo < hi)) return StepFunction();
    std::vector<real> bounds;
    std::vector<real> values;
    if (lo > 0) {
        bounds.push_back(lo);
        values.push_back(0);
    }
    for (std::size_t i = 0; i < u.piece_count(); ++i) {
        real a = std::max(u.piece_lower(i), lo);
        real b = std::min(u.piece_upper(i), hi);
        if (a < b) {
            bounds.push_back(b);
            values.push_back(u.piece_value(i));
        }
    }
    return StepFunction(std::move(bounds), std::move(values));
}

StepFunction translate(const StepFunction& u, real dx) {
    if (dx < 0) throw InvalidParameters("translate requires dx >= 0");
    if (u.is_zero()) return StepFunction();
    std::vector<real> bounds;
    std::vector<real> values;
    bounds.reserve(u.piece_count() + 1);
    values.reserve(u.piece_count() + 1);
    if (dx > 0) {
        bounds.push_back(dx);
        values.push_back(0);
    }
    for (std::size_t i = 0; i < u.piece_count(); ++i) {
        bounds.push_back(u.piece_upper(i) + dx);
        values.push_back(u.piece_value(i));
    }
    return StepFunction(std::move(bounds), std::move(values));
}

real product_integral(const StepFunction& u, const StepFunction& v) {
    std::vector<real> cuts;
    cuts.reserve(u.piece_count() + v.piece_count());
    cuts.insert(cuts.end(), u.breakpoints().begin(), u.breakpoints().end());
    cuts.insert(cuts.end(), v.breakpoints().begin(), v.breakpoints().end());
    std::sort(cuts.begin(), cuts.end());
    cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
    real acc = 0;
    real lower = 0;
    for (real t : cuts) {
        acc += u(lower) * v(lower) * (t - lower);
        lower = t;
    }
    return acc;
}

}  // namespace rinorm
