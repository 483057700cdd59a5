#ifndef HOF_RUNCMD_HPP
#define HOF_RUNCMD_HPP

#include <map>
#include <string>

namespace hof {

// Resolved run configuration: command plus typed key-value parameters.
// Unknown keys are rejected; every parameter has a documented default.
struct RunConfig {
  std::string command;
  std::map<std::string, std::string> params;
  std::string output_dir;
  int parallelism = 1;
};

// Applies per-command defaults, validates keys/values and cross-field
// constraints (throws ConfigError naming the violated constraint).
RunConfig resolve_config(const std::string& command,
                         const std::map<std::string, std::string>& overrides,
                         const std::string& output_dir);

// Reads a flat `key = value` config file (one pair per line, '#' comments).
std::map<std::string, std::string> read_config_file(const std::string& path);

// Executes a command end to end, writing data files plus the resolved
// config (run.json) into config.output_dir.
void run_command(const RunConfig& config);

}  // namespace hof

#endif
