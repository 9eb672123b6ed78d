#include <basel/leibniz.hpp>

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include <basel/basel_core.hpp>

namespace basel::leibniz {

namespace {

// Maps uniform u in (0,1) to (0,1) with cubic clustering at both ends.
double endpoint_dense(double u) {
    const double v = 1.0 - u;
    const double u3 = u * u * u;
    const double v3 = v * v * v;
    return u3 / (u3 + v3);
}

}  // namespace

DominationReport check_domination(double delta, int nx, int nt) {
    if (!(delta > 0.0 && delta < 1.0)) {
        throw std::domain_error("check_domination: delta must lie in (0, 1)");
    }
    if (nx < 2 || nt < 2) {
        throw std::invalid_argument("check_domination: grid must be at least 2x2");
    }

    DominationReport report;
    report.delta = delta;
    report.grid.reserve(static_cast<std::size_t>(nx) * static_cast<std::size_t>(nt));
    report.max_violation = -std::numeric_limits<double>::infinity();

    for (int i = 0; i < nx; ++i) {
        const double u = (i + 1.0) / (nx + 1.0);
        const double x = core::kHalfPi * endpoint_dense(u);
        const core::AngleX ax(x);
        for (int j = 0; j < nt; ++j) {
            const double t = delta + (1.0 - delta) * (j + 1.0) / (nt + 1.0);
            // eval_f throws on any non-finite excursion, so a completed
            // sweep doubles as the finiteness check on f itself.
            (void)core::eval_f(ax, core::ParamT(t));
            const double d = core::eval_dfdt(ax, t);
            const double violation = std::abs(d) - 1.0 / (2.0 * t);
            report.max_violation = std::max(report.max_violation, violation);
            report.grid.emplace_back(x, t);
        }
    }

    report.pass = report.max_violation <= kDominationSlack;
    return report;
}

LeibnizCheck check_leibniz(double t, double h, const quadrature::QuadConfig& cfg,
                           double tol) {
    if (!(t > 0.0 && t < 1.0)) {
        throw std::domain_error("check_leibniz: t must lie in (0, 1), got " +
                                std::to_string(t));
    }
    if (!(h > 0.0)) {
        throw std::invalid_argument("check_leibniz: h must be > 0");
    }
    if (!(t - h > 0.0 && t + h < 1.0)) {
        throw std::invalid_argument("check_leibniz: step h = " + std::to_string(h) +
                                    " pushes [t-h, t+h] outside (0, 1)");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("check_leibniz: tol must be > 0");
    }

    const auto g_hi = core::g_numeric(core::ParamT(t + h), cfg);
    const auto g_lo = core::g_numeric(core::ParamT(t - h), cfg);
    const auto quad = quadrature::integrate(
        [t](double x) { return core::eval_dfdt(core::AngleX(x), t); }, 0.0,
        core::kHalfPi, cfg);

    LeibnizCheck check;
    check.t = t;
    check.fd_value = (g_hi.value - g_lo.value) / (2.0 * h);
    check.quad_of_dfdt = quad.value;
    check.closed_form = core::gprime_closed(t);
    check.max_pairwise_gap = std::max({std::abs(check.fd_value - check.quad_of_dfdt),
                                       std::abs(check.fd_value - check.closed_form),
                                       std::abs(check.quad_of_dfdt - check.closed_form)});
    check.n_evals = g_hi.n_evals + g_lo.n_evals + quad.n_evals;
    check.legs_converged = g_hi.converged && g_lo.converged && quad.converged;
    check.pass = check.max_pairwise_gap <= tol;
    return check;
}

ContinuityCheck check_endpoint_continuity_detail(int end, const std::vector<double>& ts,
                                                 const quadrature::QuadConfig& cfg,
                                                 double tol) {
    if (end != 0 && end != 1) {
        throw std::domain_error("check_endpoint_continuity: end must be 0 or 1");
    }
    if (ts.empty()) {
        throw std::invalid_argument("check_endpoint_continuity: empty t sequence");
    }
    if (!(tol > 0.0)) {
        throw std::invalid_argument("check_endpoint_continuity: tol must be > 0");
    }
    for (double t : ts) {
        if (!(t > 0.0 && t < 1.0)) {
            throw std::domain_error("check_endpoint_continuity: sequence must stay in (0, 1)");
        }
    }
    for (std::size_t i = 1; i < ts.size(); ++i) {
        const bool toward_end = (end == 0) ? ts[i] < ts[i - 1] : ts[i] > ts[i - 1];
        if (!toward_end) {
            throw std::invalid_argument(
                "check_endpoint_continuity: sequence must approach the endpoint monotonically");
        }
    }

    ContinuityCheck check;
    const auto g_end = core::g_numeric(core::ParamT(static_cast<double>(end)), cfg);
    check.limit_value = g_end.value;
    check.n_evals = g_end.n_evals;
    check.legs_converged = g_end.converged;

    check.gaps.reserve(ts.size());
    for (double t : ts) {
        const auto g_t = core::g_numeric(core::ParamT(t), cfg);
        check.gaps.push_back(std::abs(g_t.value - g_end.value));
        check.n_evals += g_t.n_evals;
        check.legs_converged = check.legs_converged && g_t.converged;
    }

    const double last = check.gaps.back();
    check.trend_ok = std::all_of(check.gaps.begin(), check.gaps.end(),
                                 [last](double gap) { return gap >= last; });
    check.pass = check.trend_ok && last <= tol;
    return check;
}

bool check_endpoint_continuity(int end, const std::vector<double>& ts,
                               const quadrature::QuadConfig& cfg, double tol) {
    return check_endpoint_continuity_detail(end, ts, cfg, tol).pass;
}

}  // namespace basel::leibniz
