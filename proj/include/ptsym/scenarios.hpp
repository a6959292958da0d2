#ifndef PTSYM_SCENARIOS_HPP
#define PTSYM_SCENARIOS_HPP

#include "ptsym/dynamics.hpp"
#include "ptsym/measures.hpp"

#include <string>
#include <vector>

namespace ptsym {

/// Configuration of one scenario run; defaults follow the paper's figure
/// parameters (r=0.1, s=0.4, psi=pi/6, omega_0=omega_c=2, T=10, bath dim 10).
struct ScenarioConfig {
  std::string scenario;  // trace-check | blp | fidelity | concurrence
  bool hermitian = false;
  double r = 0.1;
  double s = 0.4;
  double psi = 0.5235987755982988;  // pi/6
  double omega0 = 2.0;
  double omega_c = 2.0;
  double temperature = 10.0;
  int bath_dim = 10;
  std::vector<double> g{0.5};
  std::vector<double> j{1.0};
  double t_max = 25.0;
  int steps = 500;
  std::string out_path;  // defaults to "<scenario>.csv"
  bool parallel = false;
};

/// Thrown when --help is requested; carries the help text.
struct HelpRequested {
  std::string text;
};

/// Parse command-line arguments (argv[0] excluded). Flags override --config
/// file values override defaults. Throws std::invalid_argument with the
/// offending key on bad input.
ScenarioConfig parse_config(const std::vector<std::string>& args);

/// Comma-separated value list, e.g. "0.05,0.5,1". `key` names the flag in
/// error messages.
std::vector<double> parse_sweep(const std::string& text, const std::string& key);

struct ScenarioTable {
  std::vector<std::string> columns;        // without the leading "t"
  std::vector<double> times;
  std::vector<std::vector<double>> rows;   // rows[k][c], one row per time
  std::string summary_label;               // "BLP" for the blp scenario
  std::vector<double> summary_values;      // one per column
  std::vector<std::string> warnings;
};

ScenarioTable compute_scenario(const ScenarioConfig& c);

std::string format_number(double v);  // 9 significant digits
std::string format_csv(const ScenarioTable& t);

/// Compute and write the CSV to c.out_path; warnings go to stderr.
void run_scenario(const ScenarioConfig& c);

}  // namespace ptsym

#endif
