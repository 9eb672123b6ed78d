#include <basel/pipeline.hpp>

#include <algorithm>
#include <array>
#include <cfloat>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ctime>
#include <numbers>
#include <set>
#include <utility>

#include <json.hpp>

#include <basel/basel_core.hpp>
#include <basel/compensated_sum.hpp>
#include <basel/leibniz.hpp>
#include <basel/series.hpp>
#include <basel/version.hpp>

namespace basel::pipeline {

namespace {

using quadrature::QuadConfig;
using quadrature::QuadResult;

constexpr double kPi = std::numbers::pi;

struct Legs {
    long long evals = 0;
    bool converged = true;

    void add(const QuadResult& r) {
        evals += r.n_evals;
        converged = converged && r.converged;
    }
};

StepReport finish(const char* id, const char* description, double computed,
                  double expected, double tol, const Legs& legs,
                  std::string notes = {}) {
    StepReport s;
    s.step_id = id;
    s.description = description;
    s.computed = computed;
    s.expected = expected;
    s.abs_err = std::fabs(computed - expected);
    s.tol = tol;
    s.pass = s.abs_err <= tol && legs.converged;
    s.n_evals = legs.evals;
    s.notes = std::move(notes);
    if (!legs.converged) {
        if (!s.notes.empty()) s.notes += "; ";
        s.notes += "quadrature budget exhausted before convergence";
    }
    return s;
}

double regular_tol(const PipelineConfig& cfg) { return cfg.quad.abs_tol; }

double singular_tol(const PipelineConfig& cfg) {
    return cfg.quad.abs_tol * cfg.singular_tol_factor;
}

StepReport run_g0(const PipelineConfig& cfg) {
    Legs legs;
    const QuadResult r = core::g_numeric(core::ParamT{0.0}, cfg.quad);
    legs.add(r);
    return finish("g0", "integral of f(x,0) over (0,pi/2) equals pi^2/2",
                  r.value, kPi * kPi / 2.0, regular_tol(cfg), legs);
}

StepReport run_g1(const PipelineConfig& cfg) {
    Legs legs;
    const QuadResult r = core::g_numeric(core::ParamT{1.0}, cfg.quad);
    legs.add(r);
    return finish("g1", "integral of f(x,1) over (0,pi/2) equals pi^2/4",
                  r.value, kPi * kPi / 4.0, regular_tol(cfg), legs);
}

StepReport run_lemma_gprime(const PipelineConfig& cfg) {
    QuadConfig leg_cfg = cfg.quad;
    leg_cfg.abs_tol = cfg.leibniz_quad_tol;

    Legs legs;
    double worst = 0.0;
    for (double t : cfg.leibniz_grid) {
        const auto check =
            leibniz::check_leibniz(t, cfg.leibniz_h, leg_cfg, singular_tol(cfg));
        worst = std::max(worst, check.max_pairwise_gap);
        legs.evals += check.n_evals;
        legs.converged = legs.converged && check.legs_converged;
    }
    return finish("lemma-gprime",
                  "finite difference of g, integral of df/dt, and closed-form "
                  "g' pairwise agree on a t grid",
                  worst, 0.0, singular_tol(cfg), legs);
}

StepReport run_domination(const PipelineConfig& cfg) {
    const auto report = leibniz::check_domination(cfg.domination_delta,
                                                  cfg.domination_nx, cfg.domination_nt);

    // AM-GM equality case: |df/dt| attains 1/(2t) at x = atan(sqrt(t)).
    const double t_eq = 0.5;
    const core::AngleX x_eq{std::atan(std::sqrt(t_eq))};
    const double equality_gap =
        std::fabs(std::fabs(core::eval_dfdt(x_eq, t_eq)) * 2.0 * t_eq - 1.0);

    const double worst = std::max(std::max(report.max_violation, 0.0), equality_gap);
    return finish("domination",
                  "|df/dt| <= 1/(2t) on a dense grid, with equality attained "
                  "at x = atan(sqrt(t))",
                  worst, 0.0, leibniz::kDominationSlack, Legs{});
}

StepReport run_continuity(const PipelineConfig& cfg, int end) {
    const auto& seq = end == 0 ? cfg.continuity_seq_to_0 : cfg.continuity_seq_to_1;
    const double tol = std::max(cfg.continuity_tol, cfg.quad.abs_tol);
    const auto check = leibniz::check_endpoint_continuity_detail(end, seq, cfg.quad, tol);

    Legs legs;
    legs.evals = check.n_evals;
    legs.converged = check.legs_converged;

    std::string notes;
    double gap = check.gaps.empty() ? DBL_MAX : check.gaps.back();
    if (!check.trend_ok) {
        gap = DBL_MAX;
        notes = "gaps do not shrink toward the endpoint";
    }
    const char* id = end == 0 ? "continuity-0" : "continuity-1";
    const char* desc = end == 0
                           ? "g(t) -> g(0) along a sequence decreasing to 0"
                           : "g(t) -> g(1) along a sequence increasing to 1";
    return finish(id, desc, gap, 0.0, tol, legs, std::move(notes));
}

StepReport run_ftc(const PipelineConfig& cfg) {
    Legs legs;
    const QuadResult integral = quadrature::integrate_with_transform(
        [](double t) { return core::gprime_closed(t); }, 0.0, 1.0,
        quadrature::VariableTransform::square(), cfg.quad);
    legs.add(integral);
    const QuadResult g1 = core::g_numeric(core::ParamT{1.0}, cfg.quad);
    legs.add(g1);
    const QuadResult g0 = core::g_numeric(core::ParamT{0.0}, cfg.quad);
    legs.add(g0);
    return finish("ftc", "integral of g' over (0,1), via t = u^2, equals g(1) - g(0)",
                  integral.value, g1.value - g0.value, singular_tol(cfg), legs);
}

StepReport run_substitution(const PipelineConfig& cfg) {
    Legs legs;
    const QuadResult t_space = quadrature::integrate(
        [](double t) { return core::gprime_closed(t); }, 0.0, 1.0, cfg.quad);
    legs.add(t_space);
    const QuadResult u_space = quadrature::integrate(
        [](double u) { return 2.0 * std::log(u) / ((1.0 - u) * (1.0 + u)); },
        0.0, 1.0, cfg.quad);
    legs.add(u_space);
    return finish("substitution",
                  "integral of log t/(2 sqrt t (1-t)) over t equals "
                  "2 integral of log u/(1-u^2) over u",
                  t_space.value, u_space.value, singular_tol(cfg), legs);
}

StepReport run_interchange(const PipelineConfig& cfg) {
    const int n_terms = cfg.interchange_terms;

    // sum_{n=0}^{N} u^{2n} = expm1((2N+2) log u)/expm1(2 log u), stable for
    // u near 1 where the naive geometric-sum formula cancels.
    const auto kernel = [n_terms](double u) {
        const double lu = std::log(u);
        return std::expm1((2.0 * n_terms + 2.0) * lu) / std::expm1(2.0 * lu) * lu;
    };

    Legs legs;
    QuadConfig kernel_cfg = cfg.quad;
    kernel_cfg.abs_tol = cfg.quad.abs_tol / 2.0;
    const QuadResult lhs = quadrature::integrate(kernel, 0.0, 1.0, kernel_cfg);
    legs.add(lhs);

    QuadConfig moment_cfg = cfg.quad;
    moment_cfg.abs_tol = cfg.quad.abs_tol / (2.0 * (n_terms + 1));
    CompensatedSum rhs;
    for (int n = 0; n <= n_terms; ++n) {
        const QuadResult moment = core::log_moment_integral(n, moment_cfg);
        legs.add(moment);
        rhs += moment.value;
    }
    return finish("interchange",
                  "integrating the truncated kernel equals summing its "
                  "integrated terms",
                  lhs.value, rhs.value(), regular_tol(cfg), legs);
}

StepReport run_moments(const PipelineConfig& cfg) {
    QuadConfig leg_cfg = cfg.quad;
    leg_cfg.abs_tol = cfg.quad.abs_tol / 10.0;

    Legs legs;
    double worst = 0.0;
    for (int n = 0; n <= cfg.moments_max_n; ++n) {
        const QuadResult moment = core::log_moment_integral(n, leg_cfg);
        legs.add(moment);
        const double expected = -1.0 / ((2.0 * n + 1.0) * (2.0 * n + 1.0));
        worst = std::max(worst, std::fabs(moment.value - expected));
    }
    return finish("moments",
                  "integral of u^(2n) log u equals -1/(2n+1)^2 for n = 0..20",
                  worst, 0.0, regular_tol(cfg), legs);
}

StepReport run_series_odd(const PipelineConfig& cfg) {
    const auto enc = series::sum_odd_reciprocal_squares(cfg.series_terms);
    return finish("series-odd",
                  "enclosure of sum 1/(2n+1)^2 contains pi^2/8",
                  enc.midpoint(), kPi * kPi / 8.0, enc.half_width(), Legs{},
                  "tolerance is the enclosure half-width");
}

StepReport run_basel(const PipelineConfig& cfg) {
    const auto [odd, scaled_full] = series::odd_to_full_relation(cfg.series_terms);
    const auto common = series::Enclosure::intersection(odd, scaled_full);
    if (!common) {
        Legs legs;
        legs.converged = false;
        return finish("basel", "4/3 of the combined enclosures contains pi^2/6",
                      DBL_MAX, kPi * kPi / 6.0, 0.0, legs,
                      "odd and scaled full enclosures are disjoint");
    }
    const auto enc = common->scaled(4.0 / 3.0);
    return finish("basel", "4/3 of the combined enclosures contains pi^2/6",
                  enc.midpoint(), kPi * kPi / 6.0, enc.half_width(), Legs{},
                  "tolerance is the enclosure half-width");
}

struct StepDef {
    const char* id;
    StepReport (*run)(const PipelineConfig&);
};

constexpr std::array<StepDef, 12> kRegistry{{
    {"g0", run_g0},
    {"g1", run_g1},
    {"lemma-gprime", run_lemma_gprime},
    {"domination", run_domination},
    {"continuity-0", [](const PipelineConfig& cfg) { return run_continuity(cfg, 0); }},
    {"continuity-1", [](const PipelineConfig& cfg) { return run_continuity(cfg, 1); }},
    {"ftc", run_ftc},
    {"substitution", run_substitution},
    {"interchange", run_interchange},
    {"moments", run_moments},
    {"series-odd", run_series_odd},
    {"basel", run_basel},
}};

std::string iso8601_utc_now() {
    const std::time_t now = std::chrono::system_clock::to_time_t(
        std::chrono::system_clock::now());
    std::tm tm{};
    gmtime_r(&now, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

nlohmann::ordered_json config_to_json(const PipelineConfig& cfg) {
    nlohmann::ordered_json j;
    j["abs_tol"] = cfg.quad.abs_tol;
    j["max_subdivisions"] = cfg.quad.max_subdivisions;
    j["max_evals"] = cfg.quad.max_evals;
    j["singular_tol_factor"] = cfg.singular_tol_factor;
    j["leibniz_h"] = cfg.leibniz_h;
    j["leibniz_quad_tol"] = cfg.leibniz_quad_tol;
    j["leibniz_grid"] = cfg.leibniz_grid;
    j["domination_delta"] = cfg.domination_delta;
    j["domination_nx"] = cfg.domination_nx;
    j["domination_nt"] = cfg.domination_nt;
    j["continuity_seq_to_0"] = cfg.continuity_seq_to_0;
    j["continuity_seq_to_1"] = cfg.continuity_seq_to_1;
    j["continuity_tol"] = cfg.continuity_tol;
    j["moments_max_n"] = cfg.moments_max_n;
    j["interchange_terms"] = cfg.interchange_terms;
    j["series_terms"] = cfg.series_terms;
    return j;
}

std::string fmt_full(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string fmt_short(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.3g", v);
    return buf;
}

std::string to_markdown(const ProofReport& report) {
    std::string out;
    out += "# Proof verification report\n\n";
    out += "- version: " + std::string(kVersion) + "\n";
    out += "- timestamp: " + report.timestamp + "\n";
    out += std::string("- all_pass: ") + (report.all_pass ? "true" : "false") + "\n\n";
    out += "| step | description | computed | expected | abs err | tol | evals | status | notes |\n";
    out += "|---|---|---|---|---|---|---|---|---|\n";
    for (const auto& s : report.steps) {
        out += "| " + s.step_id + " | " + s.description + " | " + fmt_full(s.computed) +
               " | " + fmt_full(s.expected) + " | " + fmt_short(s.abs_err) + " | " +
               fmt_short(s.tol) + " | " + std::to_string(s.n_evals) + " | " +
               (s.pass ? "PASS" : "FAIL") + " | " + s.notes + " |\n";
    }
    return out;
}

std::string to_json(const ProofReport& report) {
    nlohmann::ordered_json j;
    j["version"] = report.version;
    j["timestamp"] = report.timestamp;
    j["all_pass"] = report.all_pass;
    j["config"] = config_to_json(report.config);
    j["steps"] = nlohmann::ordered_json::array();
    for (const auto& s : report.steps) {
        nlohmann::ordered_json step;
        step["step_id"] = s.step_id;
        step["description"] = s.description;
        step["computed"] = s.computed;
        step["expected"] = s.expected;
        step["abs_err"] = s.abs_err;
        step["tol"] = s.tol;
        step["pass"] = s.pass;
        step["n_evals"] = s.n_evals;
        step["notes"] = s.notes;
        j["steps"].push_back(std::move(step));
    }
    return j.dump(2) + "\n";
}

}  // namespace

UnknownStepError::UnknownStepError(const std::string& step_id)
    : std::invalid_argument("unknown step id: " + step_id) {}

const std::vector<std::string>& step_ids() {
    static const std::vector<std::string> ids = [] {
        std::vector<std::string> v;
        v.reserve(kRegistry.size());
        for (const auto& def : kRegistry) v.emplace_back(def.id);
        return v;
    }();
    return ids;
}

bool is_known_step(const std::string& step_id) {
    return std::any_of(kRegistry.begin(), kRegistry.end(),
                       [&](const StepDef& def) { return step_id == def.id; });
}

StepReport run_step(const std::string& step_id, const PipelineConfig& cfg) {
    for (const auto& def : kRegistry) {
        if (step_id == def.id) return def.run(cfg);
    }
    throw UnknownStepError(step_id);
}

ProofReport run_all(const PipelineConfig& cfg) {
    return run_steps(step_ids(), cfg);
}

ProofReport run_steps(const std::vector<std::string>& ids, const PipelineConfig& cfg) {
    for (const auto& id : ids) {
        if (!is_known_step(id)) throw UnknownStepError(id);
    }
    const std::set<std::string> wanted(ids.begin(), ids.end());
    std::vector<StepReport> steps;
    steps.reserve(wanted.size());
    for (const auto& def : kRegistry) {
        if (wanted.count(def.id)) steps.push_back(def.run(cfg));
    }
    return make_report(std::move(steps), cfg);
}

ProofReport make_report(std::vector<StepReport> steps, const PipelineConfig& cfg) {
    ProofReport report;
    report.steps = std::move(steps);
    report.all_pass = std::all_of(report.steps.begin(), report.steps.end(),
                                  [](const StepReport& s) { return s.pass; });
    report.config = cfg;
    report.timestamp = iso8601_utc_now();
    report.version = kVersion;
    return report;
}

std::string serialize_report(const ProofReport& report, ReportFormat format) {
    return format == ReportFormat::json ? to_json(report) : to_markdown(report);
}

}  // namespace basel::pipeline
