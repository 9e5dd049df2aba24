#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <json.hpp>

#include "riesz/spectrum.hpp"

namespace riesz::app {

/// Shortest decimal string that reads back to the same double.
std::string format_number(double x);
std::string format_optional(const std::optional<double>& x);

void write_text(const std::filesystem::path& file, const std::string& body);
void write_json(const std::filesystem::path& file, const nlohmann::json& j);

std::string csv_text(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows);

nlohmann::json grid_json(const Grid& g);
nlohmann::json params_json(const ModelParams& p);

/// spectrum.csv (index, eigenvalue for eigenvalues <= converged_below) and
/// spectrum.meta.json.
void write_spectrum(const std::filesystem::path& dir, const Spectrum& spec);

/// Reads spectrum.csv and the .meta.json beside it.
Spectrum read_spectrum(const std::filesystem::path& csv_file);

struct Polyline {
  std::string label;
  std::vector<std::pair<double, double>> points;
};

/// Standalone SVG with one <polyline> per curve, scaled to a shared box.
std::string svg_text(const std::string& title, const std::vector<Polyline>& curves);

void append_error_log(const std::filesystem::path& dir, const std::string& message);

}  // namespace riesz::app
