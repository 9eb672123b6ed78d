#pragma once

#include <utility>
#include <vector>

#include <basel/quadrature.hpp>

namespace basel::leibniz {

/// Allowed overshoot of |df/dt| over the 1/(2t) bound before the
/// domination check fails; the bound itself is attainable (AM-GM equality
/// at t = tan^2 x), so only rounding noise is tolerated.
inline constexpr double kDominationSlack = 1e-12;

struct DominationReport {
    double delta = 0.0;
    std::vector<std::pair<double, double>> grid;  // sampled (x, t) points
    double max_violation = 0.0;                   // max of |df/dt| - 1/(2t)
    bool pass = false;
};

/// Sweeps |df/dt(x,t)| against the uniform bound 1/(2t) on an nx-by-nt
/// grid with x pushed toward both endpoints of (0, pi/2) and t uniform in
/// (delta, 1). Every sample is also a finiteness check on f and df/dt.
DominationReport check_domination(double delta, int nx, int nt);

struct LeibnizCheck {
    double t = 0.0;
    double fd_value = 0.0;       // central difference of g
    double quad_of_dfdt = 0.0;   // integral of df/dt(., t)
    double closed_form = 0.0;    // gprime_closed(t)
    double max_pairwise_gap = 0.0;
    bool pass = false;
    long long n_evals = 0;       // diagnostic: total integrand evaluations
    bool legs_converged = true;  // diagnostic: all quadrature legs converged
};

/// Three-way derivative agreement at one t: (g(t+h) - g(t-h))/(2h), the
/// integral of df/dt over (0, pi/2), and the closed form must pairwise
/// agree within tol. Requires [t-h, t+h] inside (0, 1).
LeibnizCheck check_leibniz(double t, double h, const quadrature::QuadConfig& cfg,
                           double tol);

struct ContinuityCheck {
    double limit_value = 0.0;    // g at the endpoint
    std::vector<double> gaps;    // |g(t_n) - g(end)| per sequence entry
    bool trend_ok = false;       // last gap is the smallest
    bool pass = false;
    long long n_evals = 0;
    bool legs_converged = true;
};

/// Evaluates |g(t_n) - g(end)| along a sequence approaching the chosen
/// endpoint (end is 0 or 1). Passes when the last gap is both <= tol and
/// the smallest of the sequence.
ContinuityCheck check_endpoint_continuity_detail(int end, const std::vector<double>& ts,
                                                 const quadrature::QuadConfig& cfg,
                                                 double tol);

bool check_endpoint_continuity(int end, const std::vector<double>& ts,
                               const quadrature::QuadConfig& cfg, double tol);

}  // namespace basel::leibniz
