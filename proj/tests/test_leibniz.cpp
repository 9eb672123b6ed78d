#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <numbers>
#include <vector>

#include <basel/basel_core.hpp>
#include <basel/leibniz.hpp>

using namespace basel::leibniz;
using basel::core::AngleX;
using basel::core::ParamT;
using basel::core::eval_dfdt;
using basel::core::g_numeric;
using basel::core::gprime_closed;
using basel::quadrature::QuadConfig;

namespace {

constexpr double kPi = std::numbers::pi;

QuadConfig tol_cfg(double tol) {
    QuadConfig cfg;
    cfg.abs_tol = tol;
    return cfg;
}

}  // namespace

TEST_CASE("bound is attained at t = tan^2 x and respected nearby") {
    CHECK(std::fabs(std::fabs(eval_dfdt(AngleX{kPi / 4.0}, 1.0)) * 2.0 - 1.0) <= 1e-15);
    CHECK(std::fabs(std::fabs(eval_dfdt(AngleX{kPi / 4.0}, 0.25)) * 0.5 - 0.8) <= 1e-14);
}

TEST_CASE("domination sweep on the full grid") {
    const auto report = check_domination(0.01, 200, 200);
    CHECK(report.pass);
    CHECK(report.max_violation <= 0.0);
    CHECK(report.delta == 0.01);
    CHECK(report.grid.size() == 200u * 200u);
    for (const auto& [x, t] : report.grid) {
        CHECK(x > 0.0);
        CHECK(x < kPi / 2.0);
        CHECK(t > 0.01);
        CHECK(t < 1.0);
        CHECK(std::fabs(eval_dfdt(AngleX{x}, t)) <= 1.0 / (2.0 * t) + kDominationSlack);
    }
}

TEST_CASE("domination sweep on a coarse grid still passes") {
    const auto report = check_domination(0.3, 5, 7);
    CHECK(report.pass);
    CHECK(report.grid.size() == 5u * 7u);
}

TEST_CASE("domination input validation") {
    CHECK_THROWS_AS(check_domination(0.0, 10, 10), std::domain_error);
    CHECK_THROWS_AS(check_domination(1.0, 10, 10), std::domain_error);
    CHECK_THROWS_AS(check_domination(0.5, 1, 10), std::invalid_argument);
    CHECK_THROWS_AS(check_domination(0.5, 10, 1), std::invalid_argument);
}

TEST_CASE("three-way derivative agreement at pinned t") {
    const auto at_half = check_leibniz(0.5, 1e-5, tol_cfg(1e-10), 1e-6);
    CHECK(at_half.pass);
    CHECK(at_half.legs_converged);
    CHECK(std::fabs(at_half.closed_form - (-0.9802581434685472)) <= 1e-12);
    CHECK(std::fabs(at_half.fd_value - at_half.closed_form) <= 1e-6);
    CHECK(std::fabs(at_half.quad_of_dfdt - at_half.closed_form) <= 1e-6);

    const auto at_quarter = check_leibniz(0.25, 1e-5, tol_cfg(1e-10), 1e-6);
    CHECK(at_quarter.pass);
    CHECK(std::fabs(at_quarter.closed_form - (-1.8483924814931876)) <= 2e-15);
}

TEST_CASE("three-way agreement across the whole t grid") {
    for (double t : {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9}) {
        const auto check = check_leibniz(t, 1e-5, tol_cfg(1e-10), 1e-6);
        CHECK(check.pass);
        CHECK(check.max_pairwise_gap <= 1e-6);
        CHECK(check.t == t);
        CHECK(check.n_evals > 0);
    }
}

TEST_CASE("finite difference converges at second order") {
    const double t = 0.5;
    const QuadConfig cfg = tol_cfg(1e-12);
    const auto fd = [&](double h) {
        return (g_numeric(ParamT{t + h}, cfg).value -
                g_numeric(ParamT{t - h}, cfg).value) /
               (2.0 * h);
    };
    const double closed = gprime_closed(t);
    const double dev_coarse = std::fabs(fd(1e-3) - closed);
    const double dev_fine = std::fabs(fd(5e-4) - closed);
    const double ratio = dev_coarse / dev_fine;
    CHECK(ratio >= 3.5);
    CHECK(ratio <= 4.5);
}

TEST_CASE("check_leibniz input validation") {
    const QuadConfig cfg = tol_cfg(1e-10);
    CHECK_THROWS_AS(check_leibniz(0.999999, 1e-5, cfg, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(check_leibniz(1e-7, 1e-5, cfg, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(check_leibniz(0.5, 0.0, cfg, 1e-6), std::invalid_argument);
    CHECK_THROWS_AS(check_leibniz(0.5, 1e-5, cfg, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(check_leibniz(1.5, 1e-5, cfg, 1e-6), std::domain_error);
}

TEST_CASE("continuity toward t = 0") {
    const QuadConfig cfg = tol_cfg(1e-8);

    // the shallow sequence trends correctly but stops 0.28 above the limit,
    // an order beyond tol = 0.05
    CHECK(check_endpoint_continuity(0, {0.1, 0.01, 0.001}, cfg, 0.05) == false);

    const auto detail =
        check_endpoint_continuity_detail(0, {1e-2, 1e-4, 1e-6, 1e-8}, cfg, 0.01);
    CHECK(detail.pass);
    CHECK(detail.trend_ok);
    CHECK(detail.gaps.size() == 4);
    CHECK(detail.gaps.back() <= 0.01);
    CHECK(std::fabs(detail.limit_value - kPi * kPi / 2.0) <= 1e-8);
    CHECK(detail.legs_converged);
    for (size_t i = 0; i + 1 < detail.gaps.size(); ++i) {
        CHECK(detail.gaps[i] > detail.gaps.back());
    }
}

TEST_CASE("continuity toward t = 1") {
    const QuadConfig cfg = tol_cfg(1e-8);
    CHECK(check_endpoint_continuity(1, {0.9, 0.99, 0.999}, cfg, 0.05) == true);

    const auto detail =
        check_endpoint_continuity_detail(1, {0.9, 0.99, 0.999}, cfg, 0.05);
    CHECK(std::fabs(detail.limit_value - kPi * kPi / 4.0) <= 1e-8);
    CHECK(detail.gaps.back() <= 0.05);
}

TEST_CASE("single distant sample fails a tight tolerance") {
    CHECK(check_endpoint_continuity(0, {0.5}, tol_cfg(1e-8), 1e-9) == false);
}

TEST_CASE("continuity input validation") {
    const QuadConfig cfg = tol_cfg(1e-8);
    CHECK_THROWS_AS(check_endpoint_continuity(2, {0.1}, cfg, 0.05), std::domain_error);
    CHECK_THROWS_AS(check_endpoint_continuity(0, {}, cfg, 0.05), std::invalid_argument);
    CHECK_THROWS_AS(check_endpoint_continuity(0, {0.1, 0.2}, cfg, 0.05),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_endpoint_continuity(1, {0.9, 0.8}, cfg, 0.05),
                    std::invalid_argument);
    CHECK_THROWS_AS(check_endpoint_continuity(0, {0.1, -0.2}, cfg, 0.05),
                    std::domain_error);
    CHECK_THROWS_AS(check_endpoint_continuity(0, {0.1}, cfg, 0.0), std::invalid_argument);
}

TEST_CASE("starved quadrature budget is reported, not hidden") {
    QuadConfig cfg = tol_cfg(1e-10);
    cfg.max_evals = 10;
    const auto check = check_leibniz(0.5, 1e-5, cfg, 1e-6);
    CHECK(!check.legs_converged);
}
