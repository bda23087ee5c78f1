#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "uncert/bounds.hpp"
#include "uncert/spin.hpp"

namespace uncert {

struct Figure1Row {
  double phi;
  double var_jx;
  double var_jy;
  double sum_var;
  double prod_var;
  double hr;
  double schroedinger;
  double eq4;
  double triple_max;
};

struct Eq3SampleRow {
  double phi;
  std::size_t sample_index;
  double eq3_value;
  char resolved_sign;  // '+' or '-'
};

struct Figure1Data {
  std::vector<Figure1Row> rows;
  std::vector<Eq3SampleRow> samples;
};

/// The spin-1 Jx/Jy comparison sweep over the cosφ|+⟩ + sinφ|−⟩ family.
/// φ_k = k·π/(phi_steps−1), k = 0..phi_steps−1, and perp_samples random
/// perps per φ with per-(k, sample) sub-seeds (stream index
/// k·perp_samples + sample), so parallel and serial runs agree.
Figure1Data run_figure1(std::size_t phi_steps = 200, std::size_t perp_samples = 20,
                        std::uint64_t seed = 42, const Tolerances& tol = default_tolerances());

struct InequalityStats {
  std::uint64_t trials = 0;   // evaluated (attempted − skipped)
  std::uint64_t passes = 0;
  std::uint64_t skipped = 0;
  double max_violation = 0.0;
  std::uint64_t worst_case_seed = 0;
  std::map<std::string, std::uint64_t> skip_reasons;
};

struct CampaignConfig {
  std::vector<std::size_t> dims{2, 3, 4, 8};
  std::uint64_t trials_per_dim = 1000;
  std::uint64_t seed = 7;
  double tol = 1e-9;   // violation tolerance for contracts and equality rows
  unsigned threads = 1;
};

struct CampaignReport {
  CampaignConfig config;
  std::map<std::string, InequalityStats> inequalities;

  std::uint64_t total_violations() const;
};

/// Fuzz campaign over random (A, B, ψ, ψ⊥, ψ′, ρ): every bound contract and
/// identity, aggregated per inequality. Violations are data, not exceptions.
CampaignReport run_verification(const CampaignConfig& config,
                                const Tolerances& tol = default_tolerances());

/// Saturation campaign: |LHS − RHS| for the sum relation at optimal_perp_sum
/// and the amended product relation at optimal_perp_product.
CampaignReport run_saturation(const CampaignConfig& config,
                              const Tolerances& tol = default_tolerances());

// --- serialization (schemas fixed; 17 significant digits, '\n' line ends) --

std::string curves_csv(const std::vector<Figure1Row>& rows);
std::string eq3_samples_csv(const std::vector<Eq3SampleRow>& samples);
std::string report_json(const CampaignReport& report);
std::string plot_script();

std::string format_double(double value);  // %.17g

}  // namespace uncert
