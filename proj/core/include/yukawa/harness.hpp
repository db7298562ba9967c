#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "yukawa/means.hpp"
#include "yukawa/report.hpp"
#include "yukawa/solutions.hpp"

namespace yukawa {

/// Quadrature orders and seeds shared by all verifiers.
struct HarnessOptions {
  int sphere_order = 0;              // 0: 128 for n = 1, 16 per axis for n = 2, mc_samples otherwise
  int radial_order = 24;
  int energy_radial_order = 32;
  int oscillation_sphere_order = 0;  // 0: 64 for n = 1, 12 per axis for n = 2
  int oscillation_radial_order = 12;
  int mc_samples = 4096;
  std::uint64_t seed = 1;
  bool auto_double = true;
  std::optional<Tolerance> tolerance;  // overrides every check's default
};

/// Same options with every quadrature order doubled.
HarnessOptions doubled(const HarnessOptions& opt);

SphereRule harness_sphere_rule(int n, const HarnessOptions& opt);
SphereRule oscillation_sphere_rule(int n, const HarnessOptions& opt);

/// Per-check parameters; unset fields take the documented defaults.
struct CheckParams {
  std::optional<std::vector<double>> p;
  std::optional<std::vector<double>> beta;
  std::optional<std::vector<Majorant>> majorants;
  std::optional<std::vector<double>> r_grid;
  std::optional<std::size_t> z_samples;
  std::optional<std::size_t> ball_samples;
  std::optional<std::vector<double>> lambda_grid;
};

/// Known check ids, in canonical order.
const std::vector<std::string>& check_ids();
bool is_check_id(std::string_view id);

/// Default tolerance of a check.
Tolerance default_tolerance(std::string_view check_id);

/// Runs one check. Applicability gates yield an inapplicable report.
/// Throws DomainError for an unknown id.
MarginReport run_check(std::string_view check_id, const Solution& f, const CheckParams& params,
                       const HarnessOptions& opt);

// ---------------------------------------------------------------------------
// Verifiers

MarginReport verify_residual(const Solution& f, std::size_t count, const HarnessOptions& opt);
MarginReport verify_green_identity(const Solution& f, const std::vector<double>& r_grid, const HarnessOptions& opt);
MarginReport verify_mp_representation(const Solution& f, const std::vector<double>& p_list,
                                      const std::vector<double>& r_grid, const HarnessOptions& opt);
MarginReport verify_monotone_subharmonic(const Solution& f, const std::vector<double>& p_list,
                                         const std::vector<double>& r_grid, std::size_t centers,
                                         const HarnessOptions& opt);
MarginReport verify_kernel_moment(const Solution& f, const std::vector<double>& p_list,
                                  const std::vector<double>& r_grid, const HarnessOptions& opt);
MarginReport verify_radial_growth(const Solution& f, const std::vector<double>& p_list,
                                  const std::vector<Majorant>& omegas, const std::vector<double>& r_grid,
                                  const HarnessOptions& opt);
MarginReport verify_lipschitz_mean(const Solution& f, const std::vector<Majorant>& omegas, std::size_t samples,
                                   const HarnessOptions& opt);
MarginReport verify_gradient_from_means(const Solution& f, const std::vector<Majorant>& omegas,
                                        std::size_t samples, const HarnessOptions& opt);
MarginReport verify_bmo(const Solution& f, std::size_t centers, const HarnessOptions& opt);
MarginReport verify_energy_reduction(const Solution& f, const std::vector<double>& p_list,
                            const std::vector<double>& beta_list, const HarnessOptions& opt);
MarginReport verify_gradient_decay(const Solution& f, const std::vector<double>& beta_list, std::size_t count,
                                   const HarnessOptions& opt);
MarginReport verify_energy_laplacian(const Solution& f, const std::vector<double>& beta_list,
                                     const HarnessOptions& opt);
MarginReport verify_hardy_membership(const Solution& f, const std::vector<double>& beta_list,
                                     const std::vector<double>& r_grid, const HarnessOptions& opt);
MarginReport verify_power_inequality(std::size_t count, const HarnessOptions& opt);
MarginReport verify_majorant_regularity(const std::vector<Majorant>& omegas, const HarnessOptions& opt);

// ---------------------------------------------------------------------------
// Building blocks exposed for tests and the CLI

/// max over r in {0} U grid of M_p(r, grad f) / omega(1/(1-r)).
double radial_growth_constant(const Solution& f, double p, const Majorant& omega, const std::vector<double>& grid,
                              const SphereRule& rule);

/// (4n / (4n - p lambda))^{1/2}; requires lambda < 4n/p.
double radial_growth_prefactor(int n, double p, double lambda);

/// Bound assembled from the Hardy-membership proof with split radius 1/2:
///   |f(0)|^p + (1/2) int_{|z|<1/2} Lap|f|^p log(1/|z|) dA + 2 int_{|z|>1/2} Lap|f|^p (1-|z|) dA.
double hardy_bound(const Solution& f, double p, const HarnessOptions& opt);

/// sqrt(2n) * sum_{j=1}^{2n} 1/j.
double lipschitz_factor(int n);

/// |grad f(a)| against (4n sqrt(n) / r) * sphere mean of |f(a + r zeta) - f(a)|.
InequalityCheck gradient_mean_margin(const Solution& f, const BallPoint& a, double r, const SphereRule& rule);

struct SweepRow {
  double lambda = 0.0;
  bool inside_hypothesis = false;
  std::string status;  // "pass", "fail", "outside theorem hypothesis", "unsupported by family"
  std::optional<double> min_margin;
};

struct SweepTable {
  std::string solution;
  double p = 2.0;
  std::string omega;
  std::vector<SweepRow> rows;
};

/// Radial-growth verification at each lambda of the grid via with_lambda.
/// Exploratory; never an acceptance gate.
SweepTable lambda_sweep(const Solution& f, double p, const Majorant& omega, const std::vector<double>& lambda_grid,
                        const std::vector<double>& r_grid, const HarnessOptions& opt);

/// Evenly spaced lambda grid over [0, 8n/p] with `count` points.
std::vector<double> default_lambda_grid(int n, double p, std::size_t count = 9);

// ---------------------------------------------------------------------------
// Solution catalogue

struct CatalogueEntry {
  std::string name;
  Solution solution;
};

/// Named reference solutions used by the acceptance suite and scenarios.
const std::vector<CatalogueEntry>& solution_catalogue();
/// Throws DomainError for an unknown name.
const Solution& catalogue_solution(std::string_view name);

}  // namespace yukawa
