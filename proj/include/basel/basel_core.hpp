#pragma once

#include <numbers>

#include <basel/quadrature.hpp>

namespace basel::core {

inline constexpr double kHalfPi = std::numbers::pi / 2.0;

/// Parameter value validated to lie in [0, 1].
class ParamT {
public:
    explicit ParamT(double t);
    double value() const { return t_; }

private:
    double t_;
};

/// Angle validated to lie strictly inside (0, pi/2).
class AngleX {
public:
    explicit AngleX(double x);
    double value() const { return x_; }

private:
    double x_;
};

/// f(x,t) = arccos((t cos^2 x - sin^2 x)/(t cos^2 x + sin^2 x)), the
/// tan-free rewrite of arccos((t - tan^2 x)/(t + tan^2 x)). Finite for the
/// whole domain, including x near pi/2; result lies in [0, pi].
double eval_f(AngleX x, ParamT t);

/// df/dt(x,t) = -(sin x cos x)/(sqrt(t) (t cos^2 x + sin^2 x)), the stable
/// form of -tan x/(sqrt(t)(t + tan^2 x)). Defined for t in (0, 1]; strictly
/// negative and vanishing as x -> pi/2.
double eval_dfdt(AngleX x, double t);

/// g(t) = integral of f(.,t) over (0, pi/2) by adaptive quadrature.
quadrature::QuadResult g_numeric(ParamT t, const quadrature::QuadConfig& cfg);

/// g'(t) = log t/(2 sqrt(t) (1 - t)) on (0, 1]; the removable singularity
/// at t = 1 (limit -1/2) is evaluated by a short series once |1 - t| < 1e-4.
double gprime_closed(double t);

/// Antiderivative in x of df/dt: log((t-1) cos 2x + t + 1)/(2 sqrt(t)(t-1)),
/// finite on the closed x-range [0, pi/2] for t in (0, 1). Its endpoint
/// difference over [0, pi/2] equals gprime_closed(t).
double inner_antiderivative(double x, double t);

/// Integral of u^(2n) log u over (0, 1); equals -1/(2n+1)^2.
quadrature::QuadResult log_moment_integral(int n, const quadrature::QuadConfig& cfg);

}  // namespace basel::core
