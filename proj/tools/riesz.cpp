// riesz spectrum|bounds|figures|verify [--config FILE] [--b X] [--zeta X] [--a X]
//       [--lambda-max X] [--out DIR] [--spectrum FILE] [--seed N]
#include <iostream>
#include <optional>
#include <string>

#include <CLI11.hpp>

#include "riesz/app/commands.hpp"
#include "riesz/app/run_config.hpp"

namespace app = riesz::app;

int main(int argc, char** argv) {
  CLI::App cli{"Spectrum, Riesz means and phase-space bounds for U + U^-1 + V + zeta V^-1"};
  cli.require_subcommand(1, 1);

  std::string config_file;
  std::optional<double> b, zeta, a, lambda_max;
  std::optional<std::string> out, spectrum;
  std::optional<std::uint64_t> seed;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--config", config_file, "sectioned key = value config file")
        ->check(CLI::ExistingFile);
    sub->add_option("--b", b, "quantization parameter b > 0");
    sub->add_option("--zeta", zeta, "mass parameter zeta >= 0");
    sub->add_option("--a", a, "coherent window width a > 0 (default 2 pi)");
    sub->add_option("--lambda-max", lambda_max, "top of the lambda grid / spectral cut");
    sub->add_option("--out", out, "output directory (overrides RIESZ_OUT_DIR)");
    sub->add_option("--spectrum", spectrum, "spectrum.csv to read for kappa and N columns");
    sub->add_option("--seed", seed, "seed for randomized oracle checks");
  };
  CLI::App* s_spec = cli.add_subcommand("spectrum", "converged eigenvalues below lambda-max");
  CLI::App* s_bounds = cli.add_subcommand("bounds", "bound report over the lambda grid");
  CLI::App* s_fig = cli.add_subcommand("figures", "plot data for the Riesz-mean and surface figures");
  CLI::App* s_verify = cli.add_subcommand("verify", "run the acceptance checks");
  for (CLI::App* s : {s_spec, s_bounds, s_fig, s_verify}) add_common(s);

  CLI11_PARSE(cli, argc, argv);

  app::RunConfig cfg = app::default_config();
  try {
    if (!config_file.empty()) app::apply_config_file(cfg, config_file);
    app::apply_environment(cfg);
    if (b) cfg.params.b = *b;
    if (zeta) cfg.params.zeta = *zeta;
    if (a) cfg.params.a = *a;
    if (lambda_max) {
      cfg.lambda_max = *lambda_max;
      cfg.lambda_grid = app::log_grid(10.0, *lambda_max);
    }
    if (out) cfg.output_dir = *out;
    if (spectrum) cfg.spectrum_file = *spectrum;
    if (seed) cfg.seed = *seed;
  } catch (const std::exception& e) {
    std::cerr << "riesz: " << e.what() << '\n';
    return 2;
  }

  if (s_spec->parsed()) return app::cmd_spectrum(cfg);
  if (s_bounds->parsed()) return app::cmd_bounds(cfg);
  if (s_fig->parsed()) return app::cmd_figures(cfg);
  return app::cmd_verify(cfg);
}
