#include "hof/runcmd.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>
#include <sstream>
#include <vector>

#include <nlohmann/json.hpp>

#include "hof/dynamics.hpp"
#include "hof/error.hpp"
#include "hof/flux.hpp"
#include "hof/gutzwiller.hpp"
#include "hof/io.hpp"
#include "hof/laser.hpp"
#include "hof/lattice.hpp"
#include "hof/parallel.hpp"
#include "hof/spectra.hpp"
#include "hof/wannier.hpp"

namespace hof {

namespace {

constexpr double kPi = std::numbers::pi;

const char* kUnitsHeader = "# units: energy/J, length/lambda, time*J\n";

struct ParamSpec {
  const char* key;
  const char* default_value;
};

const std::vector<ParamSpec>& command_params(const std::string& command) {
  static const std::vector<ParamSpec> butterfly_p = {
      {"rmax", "8"}, {"ksamples", "64"}, {"j", "1"}, {"parallelism", "1"}};
  static const std::vector<ParamSpec> spectrum_p = {{"alpha", "1/3"},
                                                    {"ksamples", "64"},
                                                    {"j", "1"},
                                                    {"gap-tol", "0.001"},
                                                    {"parallelism", "1"}};
  static const std::vector<ParamSpec> evolve_p = {
      {"alpha", "1/6"},  {"nx", "36"},      {"ny", "36"},
      {"bc-x", "periodic"}, {"bc-y", "periodic"}, {"tmax", "6"},
      {"samples", "60"}, {"j", "1"},        {"max-period", "12"},
      {"parallelism", "1"}};
  static const std::vector<ParamSpec> wannier_p = {
      {"depth", ""}, {"alpha", ""}, {"parallelism", "1"}};
  static const std::vector<ParamSpec> laser_p = {{"q", "1.2"},
                                                 {"delta-prime", "0.01"},
                                                 {"kg", "1"},
                                                 {"lambda", ""},
                                                 {"parallelism", "1"}};
  static const std::vector<ParamSpec> gutzwiller_p = {
      {"alpha", "0"},     {"u", "16"},        {"mu", "6"},
      {"omega-t", "0.06"}, {"nmax", "8"},     {"size", "32"},
      {"tol", "1e-8"},    {"max-sweeps", "5000"}, {"j", "1"},
      {"parallelism", "1"}};
  static const std::vector<ParamSpec> empty;
  if (command == "butterfly") return butterfly_p;
  if (command == "spectrum") return spectrum_p;
  if (command == "evolve") return evolve_p;
  if (command == "wannier") return wannier_p;
  if (command == "laser-angles") return laser_p;
  if (command == "gutzwiller") return gutzwiller_p;
  return empty;
}

double to_double(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    double d = std::stod(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return d;
  } catch (const std::exception&) {
    throw ConfigError("parameter '" + key + "': expected a number, got '" + v +
                      "'");
  }
}

long to_long(const std::string& key, const std::string& v) {
  try {
    std::size_t pos = 0;
    long n = std::stol(v, &pos);
    if (pos != v.size()) throw std::invalid_argument(v);
    return n;
  } catch (const std::exception&) {
    throw ConfigError("parameter '" + key + "': expected an integer, got '" +
                      v + "'");
  }
}

Boundary to_boundary(const std::string& key, const std::string& v) {
  if (v == "open") return Boundary::open;
  if (v == "periodic") return Boundary::periodic;
  throw ConfigError("parameter '" + key + "': expected open|periodic, got '" +
                    v + "'");
}

// Accepts "p/r", a decimal, or the token "1/2pi" (irrational flux 1/(2*pi)).
FluxRatio parse_alpha(const std::string& v) {
  if (v == "1/2pi") return FluxRatio::real(1.0 / (2.0 * kPi));
  auto slash = v.find('/');
  if (slash != std::string::npos) {
    long p = to_long("alpha", v.substr(0, slash));
    long r = to_long("alpha", v.substr(slash + 1));
    if (r < 1) throw ConfigError("alpha denominator must be >= 1");
    if (p < 0) throw ConfigError("alpha numerator must be >= 0");
    return FluxRatio::rational(p, r);
  }
  return FluxRatio::real(to_double("alpha", v));
}

void validate(const RunConfig& cfg) {
  if (cfg.parallelism < 1)
    throw ConfigError("parallelism must be >= 1");
  const auto& p = cfg.params;
  if (cfg.command == "butterfly") {
    if (to_long("rmax", p.at("rmax")) < 1) throw ConfigError("rmax must be >= 1");
    if (to_long("ksamples", p.at("ksamples")) < 2)
      throw ConfigError("ksamples must be >= 2");
  } else if (cfg.command == "spectrum") {
    FluxRatio f = parse_alpha(p.at("alpha"));
    if (!f.is_rational() && !f.snap_to_rational())
      throw ConfigError("spectrum requires rational alpha p/r");
    if (to_long("ksamples", p.at("ksamples")) < 2)
      throw ConfigError("ksamples must be >= 2");
  } else if (cfg.command == "evolve") {
    FluxRatio f = parse_alpha(p.at("alpha"));
    long ny = to_long("ny", p.at("ny"));
    long nx = to_long("nx", p.at("nx"));
    if (nx < 1 || ny < 1) throw ConfigError("lattice dimensions must be >= 1");
    Boundary bcy = to_boundary("bc-y", p.at("bc-y"));
    to_boundary("bc-x", p.at("bc-x"));
    if (bcy == Boundary::periodic && f.is_rational() && ny % f.r() != 0)
      throw ConfigError("commensurability: r = " + std::to_string(f.r()) +
                        " does not divide ny = " + std::to_string(ny) +
                        " with bc-y periodic");
    if (to_double("tmax", p.at("tmax")) < 0.0)
      throw ConfigError("tmax must be >= 0");
    if (to_long("samples", p.at("samples")) < 1)
      throw ConfigError("samples must be >= 1");
  } else if (cfg.command == "wannier") {
    if (!p.at("depth").empty() && to_double("depth", p.at("depth")) <= 0.0)
      throw ConfigError("depth must be > 0");
    if (!p.at("alpha").empty()) to_double("alpha", p.at("alpha"));
  } else if (cfg.command == "laser-angles") {
    to_double("q", p.at("q"));
    to_double("delta-prime", p.at("delta-prime"));
    if (to_double("kg", p.at("kg")) <= 0.0)
      throw ConfigError("kg must be > 0");
    if (!p.at("lambda").empty()) to_double("lambda", p.at("lambda"));
  } else if (cfg.command == "gutzwiller") {
    parse_alpha(p.at("alpha"));
    if (to_double("u", p.at("u")) < 0.0) throw ConfigError("u must be >= 0");
    if (to_long("nmax", p.at("nmax")) < 1)
      throw ConfigError("nmax must be >= 1");
    if (to_long("size", p.at("size")) < 1)
      throw ConfigError("size must be >= 1");
    if (to_double("omega-t", p.at("omega-t")) < 0.0)
      throw ConfigError("omega-t must be >= 0");
  }
}

std::string csv_row(std::initializer_list<std::string> cells) {
  std::string row;
  for (const auto& c : cells) {
    if (!row.empty()) row += ',';
    row += c;
  }
  row += '\n';
  return row;
}

void run_butterfly(const RunConfig& cfg) {
  long rmax = to_long("rmax", cfg.params.at("rmax"));
  long ks = to_long("ksamples", cfg.params.at("ksamples"));
  double j = to_double("j", cfg.params.at("j"));
  ButterflyDataset ds = butterfly(static_cast<int>(rmax),
                                  static_cast<int>(ks), j, cfg.parallelism);

  std::string csv = kUnitsHeader;
  csv += "alpha_p,alpha_r,alpha,energy_over_J\n";
  std::vector<double> xs, ys;
  xs.reserve(ds.points.size());
  ys.reserve(ds.points.size());
  for (const auto& pt : ds.points) {
    csv += csv_row({std::to_string(pt.alpha_p), std::to_string(pt.alpha_r),
                    format_double(pt.alpha), format_double(pt.energy)});
    xs.push_back(pt.alpha);
    ys.push_back(pt.energy);
  }
  write_text_file(cfg.output_dir + "/butterfly.csv", csv);
  write_text_file(cfg.output_dir + "/butterfly.svg",
                  svg_scatter(xs, ys, 0.0, 1.0, -4.0 * j, 4.0 * j));
}

void run_spectrum(const RunConfig& cfg) {
  FluxRatio f = parse_alpha(cfg.params.at("alpha"));
  if (!f.is_rational()) f = *f.snap_to_rational();
  long ks = to_long("ksamples", cfg.params.at("ksamples"));
  double j = to_double("j", cfg.params.at("j"));
  double gap_tol = to_double("gap-tol", cfg.params.at("gap-tol"));
  SpectrumSlice slice =
      spectrum_slice(f, static_cast<int>(ks), j, gap_tol, cfg.parallelism);

  std::string csv = kUnitsHeader;
  csv += "alpha_p,alpha_r,alpha,energy_over_J\n";
  for (double e : slice.energies)
    csv += csv_row({std::to_string(f.p()), std::to_string(f.r()),
                    format_double(f.value()), format_double(e)});
  write_text_file(cfg.output_dir + "/spectrum.csv", csv);

  std::string bands = kUnitsHeader;
  bands += "band,lo_over_J,hi_over_J\n";
  for (std::size_t b = 0; b < slice.bands.size(); ++b)
    bands += csv_row({std::to_string(b), format_double(slice.bands[b].lo),
                      format_double(slice.bands[b].hi)});
  write_text_file(cfg.output_dir + "/bands.csv", bands);

  std::string summary = "band_count = " + std::to_string(slice.band_count) +
                        "\ntouching = " +
                        (slice.touching ? std::string("true")
                                        : std::string("false")) +
                        "\n";
  write_text_file(cfg.output_dir + "/summary.txt", summary);
}

void run_evolve(const RunConfig& cfg) {
  const auto& p = cfg.params;
  FluxRatio f = parse_alpha(p.at("alpha"));
  LatticeSpec spec;
  spec.n_x = static_cast<int>(to_long("nx", p.at("nx")));
  spec.n_y = static_cast<int>(to_long("ny", p.at("ny")));
  spec.bc_x = to_boundary("bc-x", p.at("bc-x"));
  spec.bc_y = to_boundary("bc-y", p.at("bc-y"));
  double tmax = to_double("tmax", p.at("tmax"));
  int samples = static_cast<int>(to_long("samples", p.at("samples")));
  double j = to_double("j", p.at("j"));
  int max_period = static_cast<int>(to_long("max-period", p.at("max-period")));

  SparseHermitian op = build_hamiltonian(spec, f, j);
  WaveState psi0 = uniform_initial_state(spec);
  SpectralPropagator prop(op);

  std::string csv = kUnitsHeader;
  csv += "t,m,density\n";
  DensityProfileSeries series;
  for (int s = 0; s <= samples; ++s) {
    double t = tmax * s / samples;
    WaveState st = psi0;
    st.amplitudes = prop.at(psi0.amplitudes, t);
    st.time = t;
    auto rho = density_profile(st);
    series.times.push_back(t);
    series.density.push_back(rho);
    for (int m = 0; m < spec.n_y; ++m)
      csv += csv_row({format_double(t), std::to_string(m),
                      format_double(rho[m])});
  }
  write_text_file(cfg.output_dir + "/density.csv", csv);

  // Grayscale heat map, light = high density, normalized per dataset.
  double peak = 0.0;
  for (const auto& row : series.density)
    for (double v : row) peak = std::max(peak, v);
  std::vector<std::vector<double>> img;
  for (const auto& row : series.density) {
    std::vector<double> r(row.size());
    for (std::size_t i = 0; i < row.size(); ++i)
      r[i] = peak > 0.0 ? row[i] / peak : 0.0;
    img.push_back(r);
  }
  write_text_file(cfg.output_dir + "/density.svg", svg_heatmap(img));

  int trim = f.is_rational()
                 ? static_cast<int>(std::min<long>(f.r(), spec.n_y / 4))
                 : std::min(6, spec.n_y / 4);
  auto period = detect_period(series.density.back(), max_period, trim);
  std::string summary =
      "period = " + (period ? std::to_string(*period)
                            : std::string("aperiodic")) +
      "\n";
  WaveState last = psi0;
  last.amplitudes = prop.at(psi0.amplitudes, tmax);
  summary += "norm_error = " + format_double(std::abs(last.norm() - 1.0)) + "\n";
  write_text_file(cfg.output_dir + "/summary.txt", summary);
}

void run_wannier(const RunConfig& cfg) {
  const auto& p = cfg.params;
  std::vector<double> depths;
  if (p.at("depth").empty()) {
    for (int d = 2; d <= 30; d += 2) depths.push_back(d);
  } else {
    depths.push_back(to_double("depth", p.at("depth")));
  }
  std::vector<double> alphas;
  if (p.at("alpha").empty()) {
    alphas = {1.0 / 8.0, 1.0 / 4.0, 3.0 / 8.0, 1.0 / 2.0};
  } else {
    alphas.push_back(to_double("alpha", p.at("alpha")));
  }

  struct Row {
    double depth, alpha, gx, gy, j;
  };
  std::vector<Row> rows(depths.size() * alphas.size());
  // Independent (depth, alpha) points; each index owns its slot.
  parallel_for(rows.size(), cfg.parallelism, [&](std::size_t idx) {
    double depth = depths[idx / alphas.size()];
    double alpha = alphas[idx % alphas.size()];
    BandSolution sol = solve_bands_1d(depth);
    rows[idx] = {depth, alpha, gamma_x(depth), gamma_y(depth, alpha),
                 hopping_J(sol).value};
  });

  std::string csv = "# units: energy/E_R, length/lambda\n";
  csv += "depth,alpha,gamma_x,gamma_y,J_over_ER\n";
  for (const auto& r : rows)
    csv += csv_row({format_double(r.depth), format_double(r.alpha),
                    format_double(r.gx), format_double(r.gy),
                    format_double(r.j)});
  write_text_file(cfg.output_dir + "/wannier.csv", csv);
}

void run_laser(const RunConfig& cfg) {
  const auto& p = cfg.params;
  double q = to_double("q", p.at("q"));
  double dp = to_double("delta-prime", p.at("delta-prime"));
  double kg = to_double("kg", p.at("kg"));
  double lambda =
      p.at("lambda").empty() ? 2.0 * kPi / kg : to_double("lambda", p.at("lambda"));

  BeamAngles angles = solve_angles(q, dp, kg);
  auto [amin, amax] = attainable_alpha_window(dp, kg, lambda);
  double alpha = FluxRatio::from_wavenumber(q, lambda).value();

  std::ostringstream os;
  os << "phi_e_rad = " << format_double(angles.phi_e) << "\n"
     << "phi_g_rad = " << format_double(angles.phi_g) << "\n"
     << "phi_e_deg = " << format_double(angles.phi_e * 180.0 / kPi) << "\n"
     << "phi_g_deg = " << format_double(angles.phi_g * 180.0 / kPi) << "\n"
     << "residual_x = " << format_double(angles.residual_x) << "\n"
     << "residual_y = " << format_double(angles.residual_y) << "\n"
     << "alpha = " << format_double(alpha) << "\n"
     << "alpha_min = " << format_double(amin) << "\n"
     << "alpha_max = " << format_double(amax) << "\n";
  write_text_file(cfg.output_dir + "/angles.txt", os.str());
}

void run_gutzwiller(const RunConfig& cfg) {
  const auto& p = cfg.params;
  FluxRatio f = parse_alpha(p.at("alpha"));
  int size = static_cast<int>(to_long("size", p.at("size")));
  LatticeSpec spec{size, size, Boundary::open, Boundary::open};
  HubbardParams params;
  params.J = to_double("j", p.at("j"));
  params.U_even = params.U_odd = to_double("u", p.at("u"));
  TrapParams trap;
  trap.omega_T = to_double("omega-t", p.at("omega-t"));
  trap.center_x = (size - 1) / 2.0;
  trap.center_y = (size - 1) / 2.0;
  GutzwillerOptions opts;
  opts.n_max = static_cast<int>(to_long("nmax", p.at("nmax")));
  opts.tol = to_double("tol", p.at("tol"));
  opts.max_sweeps = static_cast<int>(to_long("max-sweeps", p.at("max-sweeps")));

  GutzwillerState state = solve_ground_state(
      spec, f, params, trap, to_double("mu", p.at("mu")), opts);

  std::string csv = kUnitsHeader;
  csv += "n,m,abs_phi,sigma2,mean_n\n";
  std::vector<std::vector<double>> phi_img(spec.n_y,
                                           std::vector<double>(spec.n_x));
  std::vector<std::vector<double>> sig_img(spec.n_y,
                                           std::vector<double>(spec.n_x));
  for (int m = 0; m < spec.n_y; ++m)
    for (int n = 0; n < spec.n_x; ++n) {
      int i = spec.index(n, m);
      csv += csv_row({std::to_string(n), std::to_string(m),
                      format_double(std::abs(state.phi[i])),
                      format_double(state.sigma2[i]),
                      format_double(state.mean_n[i])});
      phi_img[m][n] = std::abs(state.phi[i]);
      sig_img[m][n] = state.sigma2[i];
    }
  write_text_file(cfg.output_dir + "/gutzwiller.csv", csv);
  write_text_file(cfg.output_dir + "/phi.svg", svg_heatmap(phi_img));
  write_text_file(cfg.output_dir + "/sigma2.svg", svg_heatmap(sig_img));

  double total_n = 0.0;
  for (double n : state.mean_n) total_n += n;
  std::ostringstream os;
  os << "converged = " << (state.converged ? "true" : "false") << "\n"
     << "sweeps = " << state.sweeps << "\n"
     << "residual = " << format_double(state.residual) << "\n"
     << "total_n = " << format_double(total_n) << "\n"
     << "cutoff_warning = " << (state.cutoff_warning ? "true" : "false")
     << "\n";
  write_text_file(cfg.output_dir + "/summary.txt", os.str());
}

}  // namespace

RunConfig resolve_config(const std::string& command,
                         const std::map<std::string, std::string>& overrides,
                         const std::string& output_dir) {
  const auto& specs = command_params(command);
  if (specs.empty())
    throw ConfigError("unknown command '" + command + "'");

  RunConfig cfg;
  cfg.command = command;
  cfg.output_dir = output_dir;
  for (const auto& s : specs) cfg.params[s.key] = s.default_value;
  for (const auto& [k, v] : overrides) {
    if (!cfg.params.count(k))
      throw ConfigError("unknown parameter '" + k + "' for command '" +
                        command + "'");
    cfg.params[k] = v;
  }
  cfg.parallelism =
      static_cast<int>(to_long("parallelism", cfg.params.at("parallelism")));
  validate(cfg);
  return cfg;
}

std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::istringstream is(read_text_file(path));
  std::map<std::string, std::string> out;
  std::string line;
  auto strip = [](std::string s) {
    auto b = s.find_first_not_of(" \t\r");
    auto e = s.find_last_not_of(" \t\r");
    return b == std::string::npos ? std::string() : s.substr(b, e - b + 1);
  };
  while (std::getline(is, line)) {
    auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    line = strip(line);
    if (line.empty()) continue;
    auto eq = line.find('=');
    if (eq == std::string::npos)
      throw ConfigError("config file: expected 'key = value', got '" + line +
                        "'");
    out[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
  }
  return out;
}

void run_command(const RunConfig& cfg) {
  validate(cfg);

  // Provenance: resolved config, stable key order, no timestamps.
  nlohmann::ordered_json j;
  j["command"] = cfg.command;
  j["parallelism"] = cfg.parallelism;
  nlohmann::ordered_json params;
  for (const auto& [k, v] : cfg.params) params[k] = v;
  j["parameters"] = params;
  write_text_file(cfg.output_dir + "/run.json", j.dump(2) + "\n");

  if (cfg.command == "butterfly") run_butterfly(cfg);
  else if (cfg.command == "spectrum") run_spectrum(cfg);
  else if (cfg.command == "evolve") run_evolve(cfg);
  else if (cfg.command == "wannier") run_wannier(cfg);
  else if (cfg.command == "laser-angles") run_laser(cfg);
  else if (cfg.command == "gutzwiller") run_gutzwiller(cfg);
  else throw ConfigError("unknown command '" + cfg.command + "'");
}

}  // namespace hof
