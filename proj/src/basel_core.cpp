#include <basel/basel_core.hpp>

#include <cmath>
#include <stdexcept>
#include <string>

namespace basel::core {

namespace {

// Rounding slop allowed on the arccos argument; anything further outside
// [-1, 1] is treated as a bug in the caller, not noise.
constexpr double kAcosSlop = 1e-14;

// Width of the band around t = 1 where g' switches to its series form.
constexpr double kGprimeSeriesSwitch = 1e-4;

double clamped_acos(double arg) {
    if (arg > 1.0) {
        if (arg - 1.0 > kAcosSlop) {
            throw std::domain_error("arccos argument " + std::to_string(arg) +
                                    " exceeds 1 beyond rounding slop");
        }
        arg = 1.0;
    } else if (arg < -1.0) {
        if (-1.0 - arg > kAcosSlop) {
            throw std::domain_error("arccos argument " + std::to_string(arg) +
                                    " is below -1 beyond rounding slop");
        }
        arg = -1.0;
    }
    return std::acos(arg);
}

}  // namespace

ParamT::ParamT(double t) : t_(t) {
    if (!(t >= 0.0 && t <= 1.0)) {
        throw std::domain_error("ParamT: t must lie in [0, 1], got " + std::to_string(t));
    }
}

AngleX::AngleX(double x) : x_(x) {
    if (!(x > 0.0 && x < kHalfPi)) {
        throw std::domain_error("AngleX: x must lie strictly inside (0, pi/2), got " +
                                std::to_string(x));
    }
}

double eval_f(AngleX x, ParamT t) {
    const double c = std::cos(x.value());
    const double s = std::sin(x.value());
    const double tcc = t.value() * c * c;
    const double ss = s * s;
    return clamped_acos((tcc - ss) / (tcc + ss));
}

double eval_dfdt(AngleX x, double t) {
    if (!(t > 0.0 && t <= 1.0)) {
        throw std::domain_error("eval_dfdt: t must lie in (0, 1], got " + std::to_string(t));
    }
    const double c = std::cos(x.value());
    const double s = std::sin(x.value());
    return -(s * c) / (std::sqrt(t) * (t * c * c + s * s));
}

quadrature::QuadResult g_numeric(ParamT t, const quadrature::QuadConfig& cfg) {
    return quadrature::integrate(
        [t](double x) { return eval_f(AngleX(x), t); }, 0.0, kHalfPi, cfg);
}

double gprime_closed(double t) {
    if (!(t > 0.0 && t <= 1.0)) {
        throw std::domain_error("gprime_closed: t must lie in (0, 1], got " +
                                std::to_string(t));
    }
    const double u = 1.0 - t;
    if (u < kGprimeSeriesSwitch) {
        // log t/(1 - t) = -(1 + u/2 + u^2/3 + u^3/4) + O(u^4), u = 1 - t
        const double ratio = -(1.0 + u * (0.5 + u * (1.0 / 3.0 + u * 0.25)));
        return ratio / (2.0 * std::sqrt(t));
    }
    return std::log(t) / (2.0 * std::sqrt(t) * u);
}

double inner_antiderivative(double x, double t) {
    if (!(t > 0.0 && t < 1.0)) {
        throw std::domain_error("inner_antiderivative: t must lie in (0, 1), got " +
                                std::to_string(t));
    }
    if (!(x >= 0.0 && x <= kHalfPi)) {
        throw std::domain_error("inner_antiderivative: x must lie in [0, pi/2], got " +
                                std::to_string(x));
    }
    // argument of the log stays in [2t, 2] for t in (0, 1)
    const double arg = (t - 1.0) * std::cos(2.0 * x) + t + 1.0;
    return std::log(arg) / (2.0 * std::sqrt(t) * (t - 1.0));
}

quadrature::QuadResult log_moment_integral(int n, const quadrature::QuadConfig& cfg) {
    if (n < 0) {
        throw std::domain_error("log_moment_integral: n must be >= 0, got " +
                                std::to_string(n));
    }
    const double power = 2.0 * n;
    return quadrature::integrate(
        [power](double u) { return std::pow(u, power) * std::log(u); }, 0.0, 1.0, cfg);
}

}  // namespace basel::core
