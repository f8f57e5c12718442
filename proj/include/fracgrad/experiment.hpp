#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fracgrad/catalog.hpp"
#include "fracgrad/descent.hpp"

namespace fracgrad {

struct MethodSpec {
  std::string name;
  DescentConfig config;
};

struct ExperimentConfig {
  std::string name = "experiment";
  std::string problem_name;                       // catalog problem name...
  std::optional<QuadraticForm> inline_quadratic;  // ...or an explicit form
  std::optional<Eigen::VectorXd> x0;              // overrides the catalog default
  std::vector<MethodSpec> methods;
  int horizon = 200;
  unsigned seed = 1;
  double tol = 1e-8;
};

/// Parses the JSON experiment schema (see README).
ExperimentConfig parse_experiment_json(const std::string& text);

/// Accepts a builtin name ("fig1", "fig3", "fig4") or a path to a JSON file.
ExperimentConfig load_experiment(const std::string& spec);
bool is_builtin_experiment(const std::string& name);
std::string builtin_experiment_json(const std::string& name);

struct MethodSummary {
  std::string name;
  int iterations_to_tol = -1;  // -1: threshold not reached within the horizon
  double final_error = std::numeric_limits<double>::quiet_NaN();
  double final_grad_norm = std::numeric_limits<double>::quiet_NaN();
  double mean_contraction = std::numeric_limits<double>::quiet_NaN();
  bool has_bound = false;  // the run emitted contraction factors
  bool bound_ok = true;    // cumulative rho product bounds dist_sq (1e-9/step slack)
};

struct ExperimentResult {
  ExperimentConfig config;
  Eigen::VectorXd x0;
  std::vector<IterateTrace> traces;
  std::vector<MethodSummary> summaries;
};

struct OutputOptions {
  std::string out_dir = "out";
  bool emit_plots = false;
  double tol_f = 1e-8;      // f - f* convergence threshold
  double tol_grad = 1e-6;   // gradient threshold (non-convex)
  double tol_margin = 1e-6; // certificate tolerance
  int samples = 30;         // certify samples per function
  unsigned seed = 1;
  int node_count = 128;     // certify quadrature budget
};

/// Runs every method of the experiment and computes summaries.  Throws on
/// bad configs / infeasible hyperparameters / divergence.
ExperimentResult run_experiment(const ExperimentConfig& config, double tol_f,
                                double tol_grad);

/// Certificate sweep over a scalar catalog.  Margins are normalized by
/// 1 + |x-c|^q with q the bound's own exponent; a row passes when its worst
/// normalized margin is >= -tol.
struct CertificateRow {
  std::string function;
  std::string certificate;
  int samples = 0;
  double worst_margin = std::numeric_limits<double>::infinity();
  bool pass = true;
};
struct CertifyReport {
  std::vector<CertificateRow> rows;
  long total_checks = 0;
  bool all_pass = true;
};
CertifyReport run_certificates(const std::string& selector, int samples,
                               unsigned seed, double tol, int node_count);

struct QuadraticReportSpec {
  std::string name = "quadratic";
  QuadraticForm q;
  double alpha = 0.5;
  double beta = -0.4;
  std::vector<double> deltas;
  Eigen::VectorXd x0;
  int horizon = 5000;
};
QuadraticReportSpec load_quadratic_report_spec(const std::string& spec);

struct QuadraticReportRow {
  double delta = 0.0;
  bool feasible = true;
  double kappa_a = 0.0;
  double kappa_a_prime = 0.0;
  bool frac_faster = false;
  double predicted_rate = std::numeric_limits<double>::quiet_NaN();
  int iterations_to_tol = -1;
};
std::vector<QuadraticReportRow> run_quadratic_report(const QuadraticReportSpec& spec,
                                                     double tol_f);

/// CLI entry points.  They write files under options.out_dir and return the
/// process exit code: 0 success (all bounds/certificates hold), 2 bad
/// configuration, 3 infeasible hyperparameters, 4 divergence.
int cmd_run(const std::string& spec, const OutputOptions& options);
int cmd_certify(const std::string& selector, const OutputOptions& options);
int cmd_quadratic_report(const std::string& spec, const OutputOptions& options);

/// Shortest round-trippable decimal form; NaN renders as an empty field.
std::string format_double(double v);

/// Trace CSV with the fixed column order
/// t,f,grad_norm_2,dist_sq_to_opt,eta_t,lambda_t,rho_t.
void write_trace_csv(const std::string& path, const IterateTrace& trace);

}  // namespace fracgrad
