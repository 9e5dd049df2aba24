#include "riesz/app/run_config.hpp"

#include <cmath>
#include <cstdlib>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>

#include "riesz/errors.hpp"

namespace riesz::app {
namespace {

const std::map<std::string, double> kDefaultTolerances = {
    {"refine", 1e-8},     {"quad_reduced", 1e-10},  {"quad_2d", 1e-9},
    {"dyadic_tail", 1e-12}, {"quadratic_form", 1e-6},
};

double parse_number(const std::string& key, const std::string& text) {
  std::size_t used = 0;
  double v = 0.0;
  try {
    v = std::stod(text, &used);
  } catch (const std::exception&) {
    used = 0;
  }
  while (used < text.size() && std::isspace(static_cast<unsigned char>(text[used]))) ++used;
  if (used == 0 || used != text.size())
    throw DomainError("config key " + key + ": '" + text + "' is not a number");
  return v;
}

}  // namespace

double RunConfig::tol(const std::string& name) const {
  auto it = tolerances.find(name);
  if (it == tolerances.end()) throw DomainError("unknown tolerance " + name);
  return it->second;
}

void RunConfig::validate() const {
  params.validate();
  if (lambda_grid.empty()) throw DomainError("lambda grid is empty");
  for (std::size_t i = 0; i < lambda_grid.size(); ++i) {
    if (!std::isfinite(lambda_grid[i]) || lambda_grid[i] <= 0.0)
      throw DomainError("lambda grid values must be positive");
    if (i > 0 && !(lambda_grid[i] > lambda_grid[i - 1]))
      throw DomainError("lambda grid must be strictly increasing");
  }
  for (const auto& [name, v] : tolerances)
    if (!(v > 0.0)) throw DomainError("tolerance " + name + " must be positive");
}

std::vector<double> log_grid(double lo, double hi, int per_decade) {
  if (!(hi > 0.0) || per_decade < 1) throw DomainError("bad log grid request");
  std::vector<double> g;
  if (hi < lo) return {hi};
  const double l0 = std::log10(lo);
  const int steps = static_cast<int>(std::floor((std::log10(hi) - l0) * per_decade + 1e-9));
  for (int i = 0; i <= steps; ++i) {
    const double v = std::pow(10.0, l0 + static_cast<double>(i) / per_decade);
    if (v < hi * (1.0 - 1e-12)) g.push_back(v);
  }
  g.push_back(hi);
  return g;
}

RunConfig default_config() {
  RunConfig c;
  c.tolerances = kDefaultTolerances;
  c.lambda_grid = log_grid(10.0, c.lambda_max);
  return c;
}

void apply_config_file(RunConfig& cfg, const std::filesystem::path& file) {
  boost::property_tree::ptree tree;
  try {
    boost::property_tree::ini_parser::read_ini(file.string(), tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw DomainError("cannot read config " + file.string() + ": " + e.message());
  }
  int per_decade = 25;
  bool grid_given = false;
  bool max_given = false;
  for (const auto& [section, body] : tree) {
    for (const auto& [key, node] : body) {
      const std::string full = section + "." + key;
      const std::string text = node.get_value<std::string>();
      if (section == "model" && key == "b") cfg.params.b = parse_number(full, text);
      else if (section == "model" && key == "zeta") cfg.params.zeta = parse_number(full, text);
      else if (section == "model" && key == "a") cfg.params.a = parse_number(full, text);
      else if (section == "lambda" && key == "max") {
        cfg.lambda_max = parse_number(full, text);
        max_given = true;
      } else if (section == "lambda" && key == "per_decade") {
        per_decade = static_cast<int>(parse_number(full, text));
      } else if (section == "lambda" && key == "values") {
        cfg.lambda_grid.clear();
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
          const auto b = item.find_first_not_of(" \t");
          const auto e = item.find_last_not_of(" \t");
          if (b == std::string::npos) continue;
          cfg.lambda_grid.push_back(parse_number(full, item.substr(b, e - b + 1)));
        }
        grid_given = true;
      } else if (section == "tolerances" && kDefaultTolerances.count(key)) {
        cfg.tolerances[key] = parse_number(full, text);
      } else if (section == "output" && key == "dir") {
        cfg.output_dir = text;
      } else if (section == "run" && key == "seed") {
        try {
          cfg.seed = std::stoull(text);
        } catch (const std::exception&) {
          throw DomainError("config key run.seed: '" + text + "' is not an unsigned integer");
        }
      } else if (section == "run" && key == "spectrum") {
        cfg.spectrum_file = std::filesystem::path(text);
      } else {
        throw DomainError("unknown config key " + full);
      }
    }
  }
  if (grid_given) {
    if (!max_given && !cfg.lambda_grid.empty()) cfg.lambda_max = cfg.lambda_grid.back();
  } else if (max_given || per_decade != 25) {
    cfg.lambda_grid = log_grid(10.0, cfg.lambda_max, per_decade);
  }
}

void apply_environment(RunConfig& cfg) {
  if (const char* dir = std::getenv("RIESZ_OUT_DIR"); dir && *dir) cfg.output_dir = dir;
}

}  // namespace riesz::app
