#include "ptsym/scenarios.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>

namespace ptsym {

namespace {

GeneralizedDensityMatrix qubit_excited() {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 0) = 1.0;
  return {m};
}

GeneralizedDensityMatrix qubit_ground() {
  Matrix m = Matrix::Zero(2, 2);
  m(1, 1) = 1.0;
  return {m};
}

PTParams pt_params(const ScenarioConfig& c) {
  return PTParams{c.r, c.s, c.psi, 0.0};
}

BathSpec bath_spec(const ScenarioConfig& c) {
  return BathSpec{c.omega_c, c.bath_dim, c.temperature};
}

struct EntryResult {
  std::vector<std::string> names;
  std::vector<std::vector<double>> series;
  std::vector<double> summaries;  // only for blp
  std::vector<std::string> warnings;
};

void note_truncation(EntryResult& out, const Trajectory& traj,
                     const std::string& tag) {
  if (!traj.truncation_warning) return;
  char buf[160];
  std::snprintf(buf, sizeof(buf),
                "bath truncation suspect%s: top Fock level population reached "
                "%.3g (>= %.0e)",
                tag.c_str(), traj.max_top_level_population,
                kTruncationWarnLevel);
  out.warnings.emplace_back(buf);
}

EntryResult run_trace_check(const ScenarioConfig& c,
                            const std::vector<double>& grid, double g,
                            const std::string& tag, Exec exec) {
  EntryResult out;
  CompositeModel model =
      c.hermitian ? build_single_hermitian_model(c.omega0, bath_spec(c), g)
                  : build_single_pt_model(pt_params(c), bath_spec(c), g);
  GeneralizedDensityMatrix rho0 =
      c.hermitian ? qubit_excited() : pseudo_ground_excited(pt_params(c)).excited;
  Trajectory traj = evolve_rotated(model, rho0, grid, exec);
  note_truncation(out, traj, tag);

  std::vector<double> tr_g(grid.size()), tr_improper(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k) {
    tr_g[k] = traj.states[k].mat.trace().real();
    tr_improper[k] = improper_rho_trace(traj.states[k], model.system_metric);
  }
  out.names = {"tr_rho_G" + tag, "tr_rho_improper" + tag};
  out.series = {std::move(tr_g), std::move(tr_improper)};
  return out;
}

EntryResult run_blp(const ScenarioConfig& c, const std::vector<double>& grid,
                    double g, const std::string& tag, Exec exec) {
  EntryResult out;
  CompositeModel model =
      c.hermitian ? build_single_hermitian_model(c.omega0, bath_spec(c), g)
                  : build_single_pt_model(pt_params(c), bath_spec(c), g);
  GeneralizedDensityMatrix excited, ground;
  if (c.hermitian) {
    excited = qubit_excited();
    ground = qubit_ground();
  } else {
    const PseudoStatePair pair = pseudo_ground_excited(pt_params(c));
    excited = pair.excited;
    ground = pair.ground;
  }
  Trajectory traj_e = evolve_rotated(model, excited, grid, exec);
  Trajectory traj_g = evolve_rotated(model, ground, grid, exec);
  note_truncation(out, traj_e, tag);

  std::vector<double> dist(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    dist[k] = pseudo_trace_distance(traj_e.states[k], traj_g.states[k],
                                    model.system_metric);
  out.summaries = {blp_functional(dist)};
  out.names = {"D" + tag};
  out.series = {std::move(dist)};
  return out;
}

EntryResult run_fidelity(const ScenarioConfig& c,
                         const std::vector<double>& grid, double g,
                         const std::string& tag, Exec exec) {
  EntryResult out;
  CompositeModel model =
      c.hermitian ? build_single_hermitian_model(c.omega0, bath_spec(c), g)
                  : build_single_pt_model(pt_params(c), bath_spec(c), g);
  GeneralizedDensityMatrix rho0 =
      c.hermitian ? qubit_excited() : pseudo_ground_excited(pt_params(c)).excited;
  Trajectory traj = evolve_rotated(model, rho0, grid, exec);
  note_truncation(out, traj, tag);

  std::vector<double> fid(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    fid[k] = pseudo_fidelity(traj.states[k], rho0, model.system_metric);
  out.names = {"F" + tag};
  out.series = {std::move(fid)};
  return out;
}

EntryResult run_concurrence(const ScenarioConfig& c,
                            const std::vector<double>& grid, double g,
                            double j, const std::string& tag, Exec exec) {
  EntryResult out;
  CompositeModel model =
      c.hermitian ? build_two_hermitian_model(c.omega0, bath_spec(c), g, j)
                  : build_two_pt_model(pt_params(c), bath_spec(c), g, j);
  GeneralizedDensityMatrix site =
      c.hermitian ? qubit_excited() : pseudo_ground_excited(pt_params(c)).excited;
  GeneralizedDensityMatrix rho0{kron(site.mat, site.mat)};
  Trajectory traj = evolve_rotated(model, rho0, grid, exec);
  note_truncation(out, traj, tag);

  std::vector<double> conc(grid.size());
  for (std::size_t k = 0; k < grid.size(); ++k)
    conc[k] = pseudo_concurrence(traj.states[k], model.site_metric);
  out.names = {"C" + tag};
  out.series = {std::move(conc)};
  return out;
}

}  // namespace

std::vector<double> parse_sweep(const std::string& text,
                                const std::string& key) {
  std::vector<double> values;
  std::stringstream stream(text);
  std::string token;
  while (std::getline(stream, token, ',')) {
    std::size_t pos = 0;
    double v = 0.0;
    try {
      v = std::stod(token, &pos);
    } catch (const std::exception&) {
      throw std::invalid_argument("malformed sweep list for " + key + ": '" +
                                  token + "'");
    }
    while (pos < token.size() && std::isspace(static_cast<unsigned char>(token[pos])))
      ++pos;
    if (pos != token.size())
      throw std::invalid_argument("malformed sweep list for " + key + ": '" +
                                  token + "'");
    values.push_back(v);
  }
  if (values.empty())
    throw std::invalid_argument("empty sweep list for " + key);
  return values;
}

ScenarioConfig parse_config(const std::vector<std::string>& args) {
  ScenarioConfig cfg;
  std::string g_spec = "0.5";
  std::string j_spec = "1";

  CLI::App app{"PT-symmetric open-system scenario runner"};
  app.name("ptsym");
  app.add_option("--scenario", cfg.scenario,
                 "one of trace-check | blp | fidelity | concurrence")
      ->required()
      ->check(CLI::IsMember(
          {"trace-check", "blp", "fidelity", "concurrence"}));
  app.add_flag("--hermitian", cfg.hermitian,
               "run the Hermitian counterpart model");
  app.add_option("--r", cfg.r, "PT parameter r");
  app.add_option("--s", cfg.s, "PT parameter s");
  app.add_option("--psi", cfg.psi, "PT phase psi (radians)");
  app.add_option("--omega0", cfg.omega0, "Hermitian system frequency");
  app.add_option("--omega-c", cfg.omega_c, "bath mode frequency");
  app.add_option("--temperature", cfg.temperature, "bath temperature");
  app.add_option("--bath-dim", cfg.bath_dim, "Fock truncation of the bath");
  app.add_option("--g", g_spec, "system-bath coupling, value or comma list");
  app.add_option("--j", j_spec,
                 "system-system coupling (two-system scenarios), value or comma list");
  app.add_option("--t-max", cfg.t_max, "end of the time grid");
  app.add_option("--steps", cfg.steps, "number of grid points");
  app.add_option("--out", cfg.out_path, "output CSV path");
  app.add_flag("--parallel", cfg.parallel,
               "evaluate sweep points and grid points with OpenMP");
  app.set_config("--config", "", "flat key=value config file");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(std::move(reversed));
  } catch (const CLI::CallForHelp&) {
    throw HelpRequested{app.help()};
  } catch (const CLI::ParseError& e) {
    throw std::invalid_argument(e.what());
  }

  cfg.g = parse_sweep(g_spec, "--g");
  cfg.j = parse_sweep(j_spec, "--j");
  if (cfg.steps < 2) throw std::invalid_argument("--steps must be >= 2");
  if (cfg.bath_dim < 2) throw std::invalid_argument("--bath-dim must be >= 2");
  if (!(cfg.temperature > 0.0))
    throw std::invalid_argument("--temperature must be > 0");
  if (!(cfg.t_max > 0.0)) throw std::invalid_argument("--t-max must be > 0");
  if (!cfg.hermitian && !unbroken(pt_params(cfg))) {
    std::ostringstream msg;
    msg << "broken-PT parameters: r=" << cfg.r << ", s=" << cfg.s
        << ", psi=" << cfg.psi << " (need s^2 > r^2 sin^2 psi)";
    throw std::invalid_argument(msg.str());
  }
  if (cfg.out_path.empty()) cfg.out_path = cfg.scenario + ".csv";
  return cfg;
}

ScenarioTable compute_scenario(const ScenarioConfig& c) {
  const std::vector<double> grid = uniform_grid(c.t_max, c.steps);

  struct Task {
    double g;
    double j;
    std::string tag;
  };
  std::vector<Task> tasks;
  if (c.scenario == "concurrence") {
    const bool bracket = c.g.size() * c.j.size() > 1;
    for (double g : c.g)
      for (double j : c.j)
        tasks.push_back({g, j,
                         bracket ? "[g=" + format_number(g) +
                                       ";j=" + format_number(j) + "]"
                                 : ""});
  } else {
    const bool bracket = c.g.size() > 1;
    for (double g : c.g)
      tasks.push_back({g, 0.0, bracket ? "[g=" + format_number(g) + "]" : ""});
  }

  // Sweep entries are independent; results are buffered per entry and
  // assembled in configured order, so the CSV is deterministic either way.
  const bool sweep_parallel = c.parallel && tasks.size() > 1;
  const Exec exec_points =
      (c.parallel && !sweep_parallel) ? Exec::parallel : Exec::serial;

  std::vector<EntryResult> results(tasks.size());
  std::vector<std::string> errors(tasks.size());
#pragma omp parallel for schedule(dynamic) if (sweep_parallel)
  for (long long idx = 0; idx < static_cast<long long>(tasks.size()); ++idx) {
    const Task& task = tasks[static_cast<std::size_t>(idx)];
    EntryResult& slot = results[static_cast<std::size_t>(idx)];
    try {
      if (c.scenario == "trace-check")
        slot = run_trace_check(c, grid, task.g, task.tag, exec_points);
      else if (c.scenario == "blp")
        slot = run_blp(c, grid, task.g, task.tag, exec_points);
      else if (c.scenario == "fidelity")
        slot = run_fidelity(c, grid, task.g, task.tag, exec_points);
      else if (c.scenario == "concurrence")
        slot = run_concurrence(c, grid, task.g, task.j, task.tag, exec_points);
      else
        throw std::invalid_argument("unknown scenario: " + c.scenario);
    } catch (const std::exception& e) {
      errors[static_cast<std::size_t>(idx)] = e.what();
    }
  }
  for (const auto& e : errors)
    if (!e.empty()) throw std::runtime_error(e);

  ScenarioTable table;
  table.times = grid;
  for (auto& entry : results) {
    for (std::size_t i = 0; i < entry.names.size(); ++i) {
      table.columns.push_back(entry.names[i]);
      if (table.rows.empty()) table.rows.resize(grid.size());
      for (std::size_t k = 0; k < grid.size(); ++k)
        table.rows[k].push_back(entry.series[i][k]);
    }
    for (double s : entry.summaries) table.summary_values.push_back(s);
    for (auto& w : entry.warnings) table.warnings.push_back(std::move(w));
  }
  if (c.scenario == "blp") table.summary_label = "BLP";
  return table;
}

std::string format_number(double v) {
  char buf[40];
  std::snprintf(buf, sizeof(buf), "%.9g", v);
  return buf;
}

std::string format_csv(const ScenarioTable& t) {
  std::string out = "t";
  for (const auto& name : t.columns) {
    out += ',';
    out += name;
  }
  out += '\n';
  for (std::size_t k = 0; k < t.times.size(); ++k) {
    out += format_number(t.times[k]);
    for (double v : t.rows[k]) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  if (!t.summary_label.empty()) {
    out += t.summary_label;
    for (double v : t.summary_values) {
      out += ',';
      out += format_number(v);
    }
    out += '\n';
  }
  return out;
}

void run_scenario(const ScenarioConfig& c) {
  const ScenarioTable table = compute_scenario(c);
  std::ofstream os(c.out_path, std::ios::binary);
  if (!os)
    throw std::runtime_error("cannot open output file: " + c.out_path);
  os << format_csv(table);
  os.flush();
  if (!os.good())
    throw std::runtime_error("write failed for output file: " + c.out_path);
  for (const auto& w : table.warnings) std::cerr << "warning: " << w << "\n";
}

}  // namespace ptsym
