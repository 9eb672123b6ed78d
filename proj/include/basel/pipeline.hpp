#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <basel/quadrature.hpp>

namespace basel::pipeline {

/// One verified proof step. pass is abs_err <= tol, additionally forced
/// false when a quadrature leg inside the step failed to converge (the
/// notes say so in that case).
struct StepReport {
    std::string step_id;
    std::string description;
    double computed = 0.0;
    double expected = 0.0;
    double abs_err = 0.0;
    double tol = 0.0;
    bool pass = false;
    long long n_evals = 0;
    std::string notes;
};

/// Everything a run depends on; echoed into the report so results are
/// reproducible from the report alone.
struct PipelineConfig {
    quadrature::QuadConfig quad{};

    /// Steps whose integrands are endpoint-singular (and the three-way
    /// derivative check) pass at quad.abs_tol times this factor.
    double singular_tol_factor = 100.0;

    double leibniz_h = 1e-5;
    double leibniz_quad_tol = 1e-10;
    std::vector<double> leibniz_grid = {0.1, 0.2, 0.3, 0.4, 0.5, 0.6, 0.7, 0.8, 0.9};

    double domination_delta = 0.01;
    int domination_nx = 200;
    int domination_nt = 200;

    std::vector<double> continuity_seq_to_0 = {1e-2, 1e-4, 1e-6, 1e-8};
    std::vector<double> continuity_seq_to_1 = {0.9, 0.99, 0.999, 0.9999};
    /// Floor for the continuity pass tolerance; the sequences above reach
    /// the limit to about 2e-3, so 1e-2 is attainable without slack.
    double continuity_tol = 1e-2;

    int moments_max_n = 20;      // moments step checks n = 0..moments_max_n
    int interchange_terms = 50;  // truncation order N of the geometric kernel
    long long series_terms = 1'000'000;
};

struct ProofReport {
    std::vector<StepReport> steps;
    bool all_pass = true;
    PipelineConfig config;
    std::string timestamp;  // ISO-8601 UTC
    std::string version;
};

class UnknownStepError : public std::invalid_argument {
public:
    explicit UnknownStepError(const std::string& step_id);
};

/// Registered step ids in proof order.
const std::vector<std::string>& step_ids();
bool is_known_step(const std::string& step_id);

/// Runs exactly one registered step. Throws UnknownStepError for ids not
/// in the registry; a failing check is reported, not thrown.
StepReport run_step(const std::string& step_id, const PipelineConfig& cfg);

/// Runs every registered step in proof order.
ProofReport run_all(const PipelineConfig& cfg);

/// Runs a subset of steps (duplicates ignored), still in proof order.
ProofReport run_steps(const std::vector<std::string>& ids, const PipelineConfig& cfg);

/// Assembles a report from already-computed steps (all_pass recomputed).
ProofReport make_report(std::vector<StepReport> steps, const PipelineConfig& cfg);

enum class ReportFormat { json, markdown };

/// JSON carries the documented stable schema (see README); markdown is a
/// human-readable table in the same step order.
std::string serialize_report(const ProofReport& report, ReportFormat format);

}  // namespace basel::pipeline
