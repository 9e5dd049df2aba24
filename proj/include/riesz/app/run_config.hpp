#pragma once

#include <cstdint>
#include <filesystem>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "riesz/phase_symbol.hpp"

namespace riesz::app {

struct RunConfig {
  ModelParams params;
  double lambda_max = 1e6;
  std::vector<double> lambda_grid;  // strictly increasing
  std::map<std::string, double> tolerances;
  std::filesystem::path output_dir = "riesz_out";
  std::uint64_t seed = 20240917;
  std::optional<std::filesystem::path> spectrum_file;

  double tol(const std::string& name) const;
  /// Throws DomainError on a bad grid, tolerance or parameter.
  void validate() const;
};

RunConfig default_config();

/// 25 points per decade from 10, ending exactly at lambda_max.
std::vector<double> log_grid(double lo, double hi, int per_decade = 25);

/// Sectioned key = value file:
///   [model] b, zeta, a
///   [lambda] max, per_decade, values (comma separated, overrides the log grid)
///   [tolerances] refine, quad_reduced, quad_2d, dyadic_tail, quadratic_form
///   [output] dir
///   [run] seed, spectrum
/// Unknown keys are rejected.
void apply_config_file(RunConfig& cfg, const std::filesystem::path& file);

/// RIESZ_OUT_DIR, if set and non-empty.
void apply_environment(RunConfig& cfg);

}  // namespace riesz::app
