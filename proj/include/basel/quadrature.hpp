#pragma once

#include <functional>
#include <stdexcept>

namespace basel::quadrature {

/// Integration settings. abs_tol is the requested absolute error target;
/// the two budgets cap adaptive refinement.
struct QuadConfig {
    double abs_tol = 1e-8;
    int max_subdivisions = 2000;
    long long max_evals = 1'000'000;
};

/// Result of one integration. error_est is the heuristic embedded-rule
/// difference, not a rigorous bound. converged == true implies
/// error_est <= the abs_tol requested in the producing call.
struct QuadResult {
    double value = 0.0;
    double error_est = 0.0;
    long long n_evals = 0;
    bool converged = false;
};

/// Thrown when the integrand returns NaN or infinity at an interior sample.
class NonfiniteSampleError : public std::runtime_error {
public:
    NonfiniteSampleError(double x, double fx);
    double where() const { return x_; }

private:
    double x_;
};

using Integrand = std::function<double(double)>;

/// Adaptive Gauss-Kronrod (G7,K15) integration over the open interval
/// (a, b). All sample points are strictly interior, so the integrand may
/// be singular or undefined at the endpoints. The panel with the largest
/// error estimate is bisected until the estimated total error drops below
/// cfg.abs_tol or a budget runs out; in the latter case the best value and
/// estimate so far are returned with converged = false.
QuadResult integrate(const Integrand& f, double a, double b, const QuadConfig& cfg);

/// Strictly monotone differentiable change of variables from a reference
/// interval onto the integration interval.
struct VariableTransform {
    Integrand map;         // u -> x
    Integrand derivative;  // u -> dx/du
    double ref_lo = 0.0;
    double ref_hi = 1.0;

    static VariableTransform identity(double a, double b);
    /// x = u^2 on (0,1); regularizes 1/sqrt(x) behaviour at the left end.
    static VariableTransform square();
};

/// integrate() applied to the pulled-back integrand
/// f(transform.map(u)) * |transform.derivative(u)| over the reference
/// interval of the transform.
QuadResult integrate_with_transform(const Integrand& f, double a, double b,
                                    const VariableTransform& transform,
                                    const QuadConfig& cfg);

}  // namespace basel::quadrature
