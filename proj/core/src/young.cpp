#include "rinorm/young.hpp"

#include <cmath>
#include <limits>
#include <numbers>
#include <sstream>

namespace rinorm {

namespace {

constexpr real kInf = std::numeric_limits<real>::infinity();
constexpr real kE = std::numbers::e_v<real>;

}  // namespace

YoungFunction YoungFunction::power(real p) {
    if (!(p >= 1) || !std::isfinite(p)) throw InvalidSpec("Young power exponent requires p >= 1");
    return YoungFunction(Family::Power, p, 0);
}

YoungFunction YoungFunction::power_log(real p, real a) {
    if (!(p >= 1) || !std::isfinite(p)) throw InvalidSpec("Young power_log requires p >= 1");
    if (!(a >= 0) || !std::isfinite(a)) throw InvalidSpec("Young power_log requires a >= 0");
    return YoungFunction(Family::PowerLog, p, a);
}

YoungFunction YoungFunction::exp_minus_one() { return YoungFunction(Family::ExpMinusOne, 0, 0); }

YoungFunction YoungFunction::ess_sup_indicator() {
    return YoungFunction(Family::EssSupIndicator, 0, 0);
}

real YoungFunction::evaluate(real t) const {
    switch (family_) {
        case Family::Power:
            return std::pow(t, p_);
        case Family::PowerLog:
            return std::pow(t, p_) * std::pow(std::log(kE + t), a_);
        case Family::ExpMinusOne:
            return std::expm1(t);
        case Family::EssSupIndicator:
            return t <= 1 ? 0 : kInf;
    }
    return 0;
}

real YoungFunction::derivative(real t) const {
    switch (family_) {
        case Family::Power:
            if (t == 0) return p_ == 1 ? 1 : 0;
            return p_ * std::pow(t, p_ - 1);
        case Family::PowerLog: {
            if (t == 0) return (p_ == 1 && a_ == 0) ? 1 : 0;
            real l = std::log(kE + t);
            return std::pow(t, p_ - 1) * std::pow(l, a_ - 1) * (p_ * l + a_ * t / (kE + t));
        }
        case Family::ExpMinusOne:
            return std::exp(t);
        case Family::EssSupIndicator:
            return t <= 1 ? 0 : kInf;
    }
    return 0;
}

real YoungFunction::inverse(real y) const {
    if (!(y >= 0)) throw NonPositiveArgument("Young inverse requires y >= 0");
    switch (family_) {
        case Family::Power:
            return std::pow(y, 1 / p_);
        case Family::PowerLog: {
            if (y == 0) return 0;
            // A is continuous and strictly increasing: bracket then bisect.
            real hi = std::max<real>(std::pow(y, 1 / p_), 1);
            while (evaluate(hi) < y) hi *= 2;
            real lo = 0;
            for (int i = 0; i < 200 && (hi - lo) > 1e-16L * hi; ++i) {
                real mid = (lo + hi) / 2;
                (evaluate(mid) < y ? lo : hi) = mid;
            }
            return hi;
        }
        case Family::ExpMinusOne:
            return std::log1p(y);
        case Family::EssSupIndicator:
            return 1;
    }
    return 0;
}

bool YoungFunction::doubling() const {
    return family_ == Family::Power || family_ == Family::PowerLog;
}

std::string YoungFunction::name() const {
    std::ostringstream os;
    switch (family_) {
        case Family::Power:
            os << "power(p=" << static_cast<double>(p_) << ")";
            break;
        case Family::PowerLog:
            os << "power-log(p=" << static_cast<double>(p_) << ";a=" << static_cast<double>(a_)
               << ")";
            break;
        case Family::ExpMinusOne:
            os << "exp-minus-one";
            break;
        case Family::EssSupIndicator:
            os << "ess-sup";
            break;
    }
    return os.str();
}

ConcavePhi ConcavePhi::power(real alpha) {
    if (!(alpha > 0) || !(alpha <= 1)) throw InvalidSpec("phi power requires alpha in (0, 1]");
    return ConcavePhi(Family::Power, alpha, 0, 0);
}

ConcavePhi ConcavePhi::affine(real b, real m) {
    if (!(b >= 0) || !(m >= 0) || !std::isfinite(b) || !std::isfinite(m)) {
        throw InvalidSpec("phi affine requires b, m >= 0");
    }
    if (b == 0 && m == 0) throw InvalidSpec("phi affine requires b, m not both zero");
    return ConcavePhi(Family::Affine, 0, b, m);
}

real ConcavePhi::evaluate(real s) const {
    if (s <= 0) return 0;
    if (family_ == Family::Power) return std::pow(s, alpha_);
    return b_ + m_ * s;
}

real ConcavePhi::zero_plus() const { return family_ == Family::Power ? 0 : b_; }

std::string ConcavePhi::name() const {
    std::ostringstream os;
    if (family_ == Family::Power) {
        os << "power(alpha=" << static_cast<double>(alpha_) << ")";
    } else {
        os << "affine(b=" << static_cast<double>(b_) << ";m=" << static_cast<double>(m_) << ")";
    }
    return os.str();
}

}  // namespace rinorm
