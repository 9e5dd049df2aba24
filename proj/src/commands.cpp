#include "riesz/app/commands.hpp"

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <iostream>

#include "riesz/app/report_io.hpp"
#include "riesz/asymptotics.hpp"
#include "riesz/dyadic.hpp"
#include "riesz/errors.hpp"
#include "riesz/phase_symbol.hpp"

namespace riesz::app {
namespace {

using nlohmann::json;
namespace fs = std::filesystem;

json opt(const std::optional<double>& x) { return x ? json(*x) : json(); }

int fail(const RunConfig& cfg, const std::string& command, const std::string& message) {
  std::cerr << "riesz " << command << ": " << message << '\n';
  try {
    append_error_log(cfg.output_dir, command + ": " + message);
  } catch (const std::exception&) {
  }
  return 1;
}

template <class F>
std::optional<double> attempt(F&& f) {
  try {
    return f();
  } catch (const DomainError&) {
    return std::nullopt;
  }
}

std::vector<double> figure_lambdas() {
  std::vector<double> l(200);
  for (int i = 0; i < 200; ++i) l[i] = 20.1 + (97.0 - 20.1) * i / 199.0;
  l.front() = 20.1;
  l.back() = 97.0;
  return l;
}

}  // namespace

std::optional<Spectrum> load_spectrum(const RunConfig& cfg) {
  if (cfg.spectrum_file) return read_spectrum(*cfg.spectrum_file);
  const fs::path local = cfg.output_dir / "spectrum.csv";
  if (fs::exists(local)) return read_spectrum(local);
  return std::nullopt;
}

BoundRow compute_bound_row(double lambda, const RunConfig& cfg, const Spectrum* spec) {
  const ModelParams& p = cfg.params;
  BoundRow row;
  row.lambda = lambda;
  if (spec) {
    if (lambda <= spec->converged_below) {
      row.kappa_emp = riesz_mean(*spec, lambda);
      row.n_emp = counting(*spec, lambda);
    } else {
      row.status = "out_of_range";
      row.message = "lambda beyond the spectrum's converged range";
    }
  }
  try {
    const BoundIntegrals bi = bound_integrals(lambda, p, cfg.tol("quad_reduced"));
    row.i1 = bi.i1;
    row.i2 = bi.i2;
  } catch (const Error& e) {
    row.status = "error";
    row.message = e.what();
  }
  const CoherentConstants d = coherent_constants(p.a, p.b);
  const double c = std::min(d.d1, d.d2);
  const double c_lower = std::max(1.0 / d.d1, 1.0 / d.d2);
  row.simple_upper = attempt([&] { return simple_upper_bound(lambda, p); });
  if (lambda > 4.0 * c) {
    try {
      const DyadicSums s = dyadic_sums(lambda, c, p.b, cfg.tol("dyadic_tail"));
      row.dyadic_lower = s.lower;
      row.dyadic_upper = s.upper;
    } catch (const Error& e) {
      row.status = "error";
      row.message = e.what();
    }
  }
  row.proof_chain_upper = attempt([&] { return proof_chain_upper(lambda, p.b, c); });
  row.proof_chain_lower = attempt([&] { return proof_chain_lower(lambda, p.b, c_lower); });
  row.theorem1 = attempt([&] { return theorem1_expression(lambda, p.b); });
  row.leading = attempt([&] { return leading_term(lambda, p.b); });
  if (row.kappa_emp && row.leading) row.weyl_ratio = *row.kappa_emp / *row.leading;
  if (row.kappa_emp && row.i1 && row.i2)
    row.kappa_in_bounds = *row.i2 <= *row.kappa_emp && *row.kappa_emp <= *row.i1;
  return row;
}

int cmd_spectrum(const RunConfig& cfg) {
  try {
    cfg.validate();
    const Spectrum spec = refine_until_converged(cfg.params, cfg.lambda_max, cfg.tol("refine"));
    write_spectrum(cfg.output_dir, spec);
    std::cout << "spectrum: " << counting(spec, spec.converged_below) << " eigenvalues below "
              << format_number(spec.converged_below) << " (drift "
              << format_number(spec.drift) << ", N = " << spec.grid.N << ")\n";
    return 0;
  } catch (const ConvergenceError& e) {
    std::string trace;
    for (double d : e.drift_trace()) trace += " " + format_number(d);
    return fail(cfg, "spectrum", std::string(e.what()) + "; drift trace:" + trace);
  } catch (const std::exception& e) {
    return fail(cfg, "spectrum", e.what());
  }
}

int cmd_bounds(const RunConfig& cfg) {
  try {
    cfg.validate();
  } catch (const std::exception& e) {
    return fail(cfg, "bounds", e.what());
  }
  std::optional<Spectrum> spec;
  json spec_info = nullptr;
  try {
    spec = load_spectrum(cfg);
  } catch (const std::exception& e) {
    return fail(cfg, "bounds", e.what());
  }
  if (spec) {
    const bool match = spec->params.b == cfg.params.b && spec->params.zeta == cfg.params.zeta;
    spec_info = {{"params", params_json(spec->params)},
                 {"converged_below", spec->converged_below},
                 {"used", match}};
    if (!match) {
      spec_info["reason"] = "b or zeta differ from the run parameters";
      spec.reset();
    }
  }

  std::vector<BoundRow> rows;
  for (double lambda : cfg.lambda_grid)
    rows.push_back(compute_bound_row(lambda, cfg, spec ? &*spec : nullptr));

  const CoherentConstants d = coherent_constants(cfg.params.a, cfg.params.b);
  const std::vector<std::string> header = {
      "lambda",       "kappa_emp",    "N_emp",         "I1",
      "I2",           "simple_upper", "dyadic_lower",  "dyadic_upper",
      "proof_chain_upper", "proof_chain_lower", "theorem1", "leading",
      "weyl_ratio",   "kappa_in_bounds", "status"};
  std::vector<std::vector<std::string>> cells;
  json jrows = json::array();
  int failures = 0;
  for (const BoundRow& r : rows) {
    if (r.status == "error") ++failures;
    const std::string inb = r.kappa_in_bounds ? (*r.kappa_in_bounds ? "true" : "false") : "";
    cells.push_back({format_number(r.lambda), format_optional(r.kappa_emp),
                     format_optional(r.n_emp), format_optional(r.i1), format_optional(r.i2),
                     format_optional(r.simple_upper), format_optional(r.dyadic_lower),
                     format_optional(r.dyadic_upper), format_optional(r.proof_chain_upper),
                     format_optional(r.proof_chain_lower), format_optional(r.theorem1),
                     format_optional(r.leading), format_optional(r.weyl_ratio), inb, r.status});
    json jr = {{"lambda", r.lambda},
               {"kappa_emp", opt(r.kappa_emp)},
               {"N_emp", opt(r.n_emp)},
               {"I1", opt(r.i1)},
               {"I2", opt(r.i2)},
               {"simple_upper", opt(r.simple_upper)},
               {"dyadic_lower", opt(r.dyadic_lower)},
               {"dyadic_upper", opt(r.dyadic_upper)},
               {"proof_chain_upper", opt(r.proof_chain_upper)},
               {"proof_chain_lower", opt(r.proof_chain_lower)},
               {"theorem1", opt(r.theorem1)},
               {"leading", opt(r.leading)},
               {"weyl_ratio", opt(r.weyl_ratio)},
               {"kappa_in_bounds", r.kappa_in_bounds ? json(*r.kappa_in_bounds) : json()},
               {"status", r.status}};
    if (!r.message.empty()) jr["message"] = r.message;
    jrows.push_back(jr);
  }
  const json doc = {{"params", params_json(cfg.params)},
                    {"coherent", {{"d1", d.d1}, {"d2", d.d2}}},
                    {"dyadic_weight", std::min(d.d1, d.d2)},
                    {"spectrum", spec_info},
                    {"rows", jrows}};
  try {
    write_text(cfg.output_dir / "bounds.csv", csv_text(header, cells));
    write_json(cfg.output_dir / "bounds.json", doc);
  } catch (const std::exception& e) {
    return fail(cfg, "bounds", e.what());
  }
  if (failures > 0) {
    for (const BoundRow& r : rows)
      if (r.status == "error")
        append_error_log(cfg.output_dir, "bounds: lambda " + format_number(r.lambda) + ": " + r.message);
  }
  std::cout << "bounds: " << rows.size() << " rows, " << failures << " failed\n";
  return failures == static_cast<int>(rows.size()) ? 1 : 0;
}

int cmd_figures(const RunConfig& cfg) {
  std::optional<Spectrum> spec;
  try {
    spec = load_spectrum(cfg);
  } catch (const std::exception& e) {
    return fail(cfg, "figures", e.what());
  }
  const std::vector<double> lambdas = figure_lambdas();
  try {
    for (double b : {1.0, 10.0}) {
      const bool with_kappa = spec && spec->params.b == b && spec->converged_below >= 97.0;
      std::string body = "# Riesz-mean candidates, b = " + format_number(b) +
                         "\n# lambda theorem1_expression" + (with_kappa ? " kappa_emp" : "") + "\n";
      Polyline t1{"theorem1_expression", {}};
      Polyline kap{"kappa_emp", {}};
      for (double l : lambdas) {
        const double v = theorem1_expression(l, b);
        body += format_number(l) + ' ' + format_number(v);
        t1.points.emplace_back(l, v);
        if (with_kappa) {
          const double k = riesz_mean(*spec, l);
          body += ' ' + format_number(k);
          kap.points.emplace_back(l, k);
        }
        body += '\n';
      }
      const std::string stem = b == 1.0 ? "fig_riesz_b1" : "fig_riesz_b10";
      std::vector<Polyline> curves{t1};
      if (with_kappa) curves.push_back(kap);
      write_text(cfg.output_dir / (stem + ".dat"), body);
      write_text(cfg.output_dir / (stem + ".svg"),
                 svg_text("Riesz means, b = " + format_number(b), curves));
    }

    std::string surf = "# k y z = 2cosh(2 pi k) + 2cosh(2 pi y)\n";
    for (int i = 0; i <= 40; ++i) {
      const double k = (i - 20) / 20.0;
      for (int j = 0; j <= 40; ++j) {
        const double y = (j - 20) / 20.0;
        const double z = 2.0 * std::cosh(2.0 * std::numbers::pi * k) +
                         2.0 * std::cosh(2.0 * std::numbers::pi * y);
        surf += format_number(k) + ' ' + format_number(y) + ' ' + format_number(z) + '\n';
      }
      surf += '\n';
    }
    std::vector<Polyline> levels;
    for (double z : {6.0, 12.0, 25.0, 50.0, 100.0, 200.0}) {
      // cosh(2 pi k) + cosh(2 pi y) = z/2, traced around the closed curve
      const double ymax = std::acosh(z / 2.0 - 1.0) / (2.0 * std::numbers::pi);
      Polyline curve{"z=" + format_number(z), {}};
      std::vector<std::pair<double, double>> upper, lower;
      for (int s = 0; s <= 200; ++s) {
        const double y = -ymax + 2.0 * ymax * s / 200.0;
        const double arg = std::max(z / 2.0 - std::cosh(2.0 * std::numbers::pi * y), 1.0);
        const double k = std::acosh(arg) / (2.0 * std::numbers::pi);
        upper.emplace_back(k, y);
        lower.emplace_back(-k, y);
      }
      curve.points = upper;
      curve.points.insert(curve.points.end(), lower.rbegin(), lower.rend());
      curve.points.push_back(upper.front());
      levels.push_back(curve);
    }
    write_text(cfg.output_dir / "fig_surface.dat", surf);
    write_text(cfg.output_dir / "fig_surface.svg",
               svg_text("level sets of 2cosh(2 pi k) + 2cosh(2 pi y)", levels));
  } catch (const std::exception& e) {
    return fail(cfg, "figures", e.what());
  }
  std::cout << "figures: written to " << cfg.output_dir.string() << '\n';
  return 0;
}

int cmd_verify(const RunConfig& cfg, const VerifyHooks& hooks) {
  const AcceptanceReport rep = run_acceptance(cfg.seed, hooks);
  json doc = rep.to_json();
  doc["seed"] = cfg.seed;
  try {
    write_json(cfg.output_dir / "verify.json", doc);
  } catch (const std::exception& e) {
    return fail(cfg, "verify", e.what());
  }
  for (const CheckResult& c : rep.checks)
    std::cout << (c.passed ? "PASS " : "FAIL ") << c.name << (c.gating ? "" : " (non-gating)")
              << ": " << c.detail << '\n';
  const std::string first = rep.first_failure();
  if (!first.empty()) return fail(cfg, "verify", "first failed check: " + first);
  return 0;
}

}  // namespace riesz::app
