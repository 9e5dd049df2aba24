#pragma once

#include <optional>
#include <string>

#include "riesz/app/acceptance.hpp"
#include "riesz/app/run_config.hpp"
#include "riesz/spectrum.hpp"

namespace riesz::app {

struct BoundRow {
  double lambda = 0.0;
  std::optional<double> kappa_emp;
  std::optional<double> n_emp;
  std::optional<double> i1;
  std::optional<double> i2;
  std::optional<double> simple_upper;
  std::optional<double> dyadic_lower;
  std::optional<double> dyadic_upper;
  std::optional<double> proof_chain_upper;
  std::optional<double> proof_chain_lower;
  std::optional<double> theorem1;
  std::optional<double> leading;
  std::optional<double> weyl_ratio;
  std::optional<bool> kappa_in_bounds;  // I2 <= kappa_emp <= I1
  std::string status = "ok";            // ok | out_of_range | error
  std::string message;
};

/// One report row. Quantities outside their own domain are left empty; a
/// failing phase-volume quadrature marks the row as an error.
BoundRow compute_bound_row(double lambda, const RunConfig& cfg, const Spectrum* spec);

/// Spectrum named by the config, else spectrum.csv in the output directory.
std::optional<Spectrum> load_spectrum(const RunConfig& cfg);

// Each command writes its files into cfg.output_dir and returns the exit code.
int cmd_spectrum(const RunConfig& cfg);
int cmd_bounds(const RunConfig& cfg);
int cmd_figures(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg, const VerifyHooks& hooks = {});

}  // namespace riesz::app
