// Command-line front end for the effective-magnetic-field lattice
// laboratory. Thin shell over the C API: flags are folded into key-value
// overrides (CLI flags > config file > defaults) and handed to hof_run.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "hofstadter.h"

namespace {

int status_to_exit_code(hof_status s) {
  switch (s) {
    case HOF_OK:
      return 0;
    case HOF_ERR_INVALID:
    case HOF_ERR_DOMAIN:
    case HOF_ERR_CONFIG:
    case HOF_ERR_RANGE:
      return 2;  // usage error
    default:
      return 1;  // runtime error
  }
}

// Flat `key = value` file, '#' comments.
std::map<std::string, std::string> read_config_file(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw CLI::ValidationError("--config", "cannot read " + path);
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
      throw CLI::ValidationError("--config",
                                 "expected 'key = value', got '" + line + "'");
    out[strip(line.substr(0, eq))] = strip(line.substr(eq + 1));
  }
  return out;
}

struct CommandSetup {
  CLI::App* app = nullptr;
  // flag storage; only values the user actually set become overrides
  std::map<std::string, std::string> values;
  std::vector<std::pair<CLI::Option*, std::string>> options;
  std::string config_path;
  std::string output_dir;
  std::string parallelism;

  void add(const std::string& flag, const std::string& key,
           const std::string& help) {
    auto* opt = app->add_option(flag, values[key], help);
    options.emplace_back(opt, key);
  }
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App cli{"hoflab: Hofstadter-butterfly lattice laboratory"};
  cli.require_subcommand(0, 1);

  std::vector<CommandSetup> setups(6);
  const char* names[6] = {"butterfly", "spectrum",    "evolve",
                          "wannier",   "laser-angles", "gutzwiller"};
  const char* descs[6] = {
      "Hofstadter butterfly dataset (CSV + SVG scatter)",
      "Harper band structure for one rational flux",
      "Density dynamics from the uniform initial state",
      "Wannier calibration table (Gamma_x, Gamma_y, J)",
      "Raman beam angles realizing a requested q",
      "Gutzwiller mean-field ground state in a trap"};

  for (int i = 0; i < 6; ++i) {
    auto& s = setups[i];
    s.app = cli.add_subcommand(names[i], descs[i]);
    s.app->add_option("--config", s.config_path,
                      "flat key = value config file");
    s.app->add_option("-o,--output", s.output_dir, "output directory")
        ->default_val(std::string("out/") + names[i]);
    auto* par = s.app->add_option("--parallelism", s.parallelism,
                                  "worker thread count");
    s.options.emplace_back(par, "parallelism");
  }

  setups[0].add("--rmax", "rmax", "largest flux denominator");
  setups[0].add("--ksamples", "ksamples", "k-grid points per axis");
  setups[0].add("--j", "j", "hopping energy");

  setups[1].add("--alpha", "alpha", "flux p/r");
  setups[1].add("--ksamples", "ksamples", "k-grid points per axis");
  setups[1].add("--j", "j", "hopping energy");
  setups[1].add("--gap-tol", "gap-tol", "band gap threshold (units of J)");

  setups[2].add("--alpha", "alpha", "flux: p/r, decimal, or 1/2pi");
  setups[2].add("--nx", "nx", "sites along x");
  setups[2].add("--ny", "ny", "sites along y");
  setups[2].add("--bc-x", "bc-x", "open|periodic");
  setups[2].add("--bc-y", "bc-y", "open|periodic");
  setups[2].add("--tmax", "tmax", "final time (units 1/J)");
  setups[2].add("--samples", "samples", "time samples");
  setups[2].add("--max-period", "max-period", "largest period probed");

  setups[3].add("--depth", "depth", "lattice depth V0/E_R (empty: sweep)");
  setups[3].add("--alpha", "alpha", "flux (empty: {1/8,1/4,3/8,1/2})");

  setups[4].add("--q", "q", "Raman wave number along y");
  setups[4].add("--delta-prime", "delta-prime", "(Delta + omega_eg)/c");
  setups[4].add("--kg", "kg", "wave number of the g-beam");
  setups[4].add("--lambda", "lambda", "lattice wavelength (default 2*pi/kg)");

  setups[5].add("--alpha", "alpha", "flux p/r or decimal");
  setups[5].add("--u", "u", "onsite interaction (units of J)");
  setups[5].add("--mu", "mu", "chemical potential (units of J)");
  setups[5].add("--omega-t", "omega-t", "trap curvature (units of J)");
  setups[5].add("--nmax", "nmax", "Fock cutoff");
  setups[5].add("--size", "size", "lattice edge length");
  setups[5].add("--tol", "tol", "self-consistency tolerance");
  setups[5].add("--max-sweeps", "max-sweeps", "sweep limit");

  try {
    cli.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {  // --help
      cli.exit(e);
      return 0;
    }
    cli.exit(e);
    return 2;
  }

  if (cli.get_subcommands().empty()) {
    std::cout << cli.help();
    return 0;
  }

  for (int i = 0; i < 6; ++i) {
    auto& s = setups[i];
    if (!s.app->parsed()) continue;

    std::map<std::string, std::string> overrides;
    if (!s.config_path.empty()) {
      try {
        overrides = read_config_file(s.config_path);
      } catch (const CLI::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
      }
    }
    for (const auto& [opt, key] : s.options)
      if (opt->count() > 0) overrides[key] = s.values.count(key)
                                                  ? s.values[key]
                                                  : s.parallelism;

    std::vector<const char*> keys, values;
    for (const auto& [k, v] : overrides) {
      keys.push_back(k.c_str());
      values.push_back(v.c_str());
    }
    hof_status rc = hof_run(names[i], keys.data(), values.data(), keys.size(),
                            s.output_dir.c_str());
    if (rc != HOF_OK) {
      std::cerr << "error: " << hof_last_error() << "\n";
      return status_to_exit_code(rc);
    }

    if (std::string(names[i]) == "laser-angles") {
      // Echo the solved angles to stdout as well.
      double q = overrides.count("q") ? std::stod(overrides["q"]) : 1.2;
      double dp = overrides.count("delta-prime")
                      ? std::stod(overrides["delta-prime"])
                      : 0.01;
      double kg = overrides.count("kg") ? std::stod(overrides["kg"]) : 1.0;
      double pe, pg, rx, ry;
      if (hof_solve_angles(q, dp, kg, &pe, &pg, &rx, &ry) == HOF_OK) {
        std::printf("phi_e = %.12g rad (%.6f deg)\n", pe, pe * 180.0 / 3.14159265358979323846);
        std::printf("phi_g = %.12g rad (%.6f deg)\n", pg, pg * 180.0 / 3.14159265358979323846);
        std::printf("residuals: x %.3e  y %.3e\n", rx, ry);
      }
    }
    std::cout << "wrote " << s.output_dir << "\n";
  }
  return 0;
}
