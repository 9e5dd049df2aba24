#include "riesz/app/report_io.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "riesz/errors.hpp"

namespace riesz::app {

std::string format_number(double x) {
  if (std::isnan(x)) return "nan";
  if (std::isinf(x)) return x > 0 ? "inf" : "-inf";
  char buf[64];
  const auto r = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, r.ptr);
}

std::string format_optional(const std::optional<double>& x) {
  return x ? format_number(*x) : std::string();
}

void write_text(const std::filesystem::path& file, const std::string& body) {
  if (file.has_parent_path()) std::filesystem::create_directories(file.parent_path());
  std::ofstream out(file, std::ios::binary | std::ios::trunc);
  if (!out) throw Error("cannot open " + file.string() + " for writing");
  out << body;
  if (!out) throw Error("failed writing " + file.string());
}

void write_json(const std::filesystem::path& file, const nlohmann::json& j) {
  write_text(file, j.dump(2) + "\n");
}

std::string csv_text(const std::vector<std::string>& header,
                     const std::vector<std::vector<std::string>>& rows) {
  std::string out;
  auto line = [&](const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (i) out += ',';
      out += cells[i];
    }
    out += '\n';
  };
  line(header);
  for (const auto& r : rows) line(r);
  return out;
}

nlohmann::json grid_json(const Grid& g) {
  return {{"L", g.L}, {"N", g.N}, {"center", g.center}};
}

nlohmann::json params_json(const ModelParams& p) {
  return {{"b", p.b}, {"zeta", p.zeta}, {"a", p.a}};
}

void write_spectrum(const std::filesystem::path& dir, const Spectrum& spec) {
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < spec.eigenvalues.size(); ++i) {
    if (spec.eigenvalues[i] > spec.converged_below) break;
    rows.push_back({std::to_string(i + 1), format_number(spec.eigenvalues[i])});
  }
  nlohmann::json trace = nlohmann::json::array();
  for (const RefinementLevel& l : spec.trace) {
    trace.push_back({{"N", l.N}, {"L", l.L}, {"safety", l.safety}, {"cap", l.cap},
                     {"drift", std::isfinite(l.drift) ? nlohmann::json(l.drift) : nlohmann::json()}});
  }
  const nlohmann::json meta = {
      {"params", params_json(spec.params)},
      {"grid", grid_json(spec.grid)},
      {"converged_below", spec.converged_below},
      {"drift", spec.drift},
      {"cap_drift", spec.cap_drift},
      {"count", rows.size()},
      {"refinement", trace},
  };
  // Write only after both bodies exist so a failure leaves no half pair.
  const std::string csv = csv_text({"index", "eigenvalue"}, rows);
  write_text(dir / "spectrum.csv", csv);
  write_json(dir / "spectrum.meta.json", meta);
}

Spectrum read_spectrum(const std::filesystem::path& csv_file) {
  std::ifstream in(csv_file);
  if (!in) throw Error("cannot open spectrum file " + csv_file.string());
  std::string line;
  std::getline(in, line);
  if (line.rfind("index,eigenvalue", 0) != 0)
    throw Error(csv_file.string() + " does not start with the index,eigenvalue header");
  std::vector<double> ev;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    const auto comma = line.find(',');
    if (comma == std::string::npos) throw Error("malformed spectrum row: " + line);
    double v = 0.0;
    const char* first = line.data() + comma + 1;
    const auto r = std::from_chars(first, line.data() + line.size(), v);
    if (r.ec != std::errc()) throw Error("malformed eigenvalue: " + line);
    ev.push_back(v);
  }
  std::filesystem::path meta_file = csv_file;
  meta_file.replace_extension(".meta.json");
  std::ifstream mf(meta_file);
  if (!mf) throw Error("missing " + meta_file.string() + " beside the spectrum file");
  const nlohmann::json meta = nlohmann::json::parse(mf);
  ModelParams p;
  p.b = meta.at("params").at("b").get<double>();
  p.zeta = meta.at("params").at("zeta").get<double>();
  p.a = meta.at("params").at("a").get<double>();
  Spectrum s = spectrum_from_values(std::move(ev), meta.at("converged_below").get<double>(), p);
  s.grid.L = meta.at("grid").at("L").get<double>();
  s.grid.N = meta.at("grid").at("N").get<int>();
  s.grid.center = meta.at("grid").at("center").get<double>();
  s.drift = meta.at("drift").get<double>();
  return s;
}

std::string svg_text(const std::string& title, const std::vector<Polyline>& curves) {
  double x0 = std::numeric_limits<double>::infinity(), x1 = -x0, y0 = x0, y1 = -x0;
  for (const auto& c : curves)
    for (const auto& [x, y] : c.points) {
      x0 = std::min(x0, x); x1 = std::max(x1, x);
      y0 = std::min(y0, y); y1 = std::max(y1, y);
    }
  if (!(x1 > x0)) { x0 -= 1.0; x1 += 1.0; }
  if (!(y1 > y0)) { y0 -= 1.0; y1 += 1.0; }
  const double W = 640, Hh = 480, pad = 40;
  auto px = [&](double x) { return pad + (x - x0) / (x1 - x0) * (W - 2 * pad); };
  auto py = [&](double y) { return Hh - pad - (y - y0) / (y1 - y0) * (Hh - 2 * pad); };
  static const char* colors[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};

  std::ostringstream os;
  os.imbue(std::locale::classic());
  os.precision(6);
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << W << "\" height=\"" << Hh
     << "\" viewBox=\"0 0 " << W << ' ' << Hh << "\">\n";
  os << "<title>" << title << "</title>\n";
  os << "<rect x=\"" << pad << "\" y=\"" << pad << "\" width=\"" << W - 2 * pad << "\" height=\""
     << Hh - 2 * pad << "\" fill=\"none\" stroke=\"#888\"/>\n";
  for (std::size_t i = 0; i < curves.size(); ++i) {
    os << "<polyline fill=\"none\" stroke=\"" << colors[i % 6] << "\" stroke-width=\"1.2\"";
    if (!curves[i].label.empty()) os << " data-label=\"" << curves[i].label << "\"";
    os << " points=\"";
    for (std::size_t k = 0; k < curves[i].points.size(); ++k) {
      if (k) os << ' ';
      os << px(curves[i].points[k].first) << ',' << py(curves[i].points[k].second);
    }
    os << "\"/>\n";
  }
  os << "<text x=\"" << pad << "\" y=\"" << pad - 12 << "\" font-size=\"13\">" << title
     << "</text>\n</svg>\n";
  return os.str();
}

void append_error_log(const std::filesystem::path& dir, const std::string& message) {
  std::filesystem::create_directories(dir);
  std::ofstream out(dir / "errors.log", std::ios::app);
  out << message << '\n';
}

}  // namespace riesz::app
