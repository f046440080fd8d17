// Command-line front end: bound-state solving, condition scans, critical
// couplings, and wavefunction export as deterministic CSV.

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "wronsk/wronsk.hpp"

namespace {

struct PotentialSpec {
  std::string builtin;
  std::vector<std::string> params;  // k=v strings
  std::string expr;

  std::map<std::string, double> parsed_params() const {
    std::map<std::string, double> out;
    for (const auto& kv : params) {
      const auto eq = kv.find('=');
      if (eq == std::string::npos)
        throw wronsk::ParameterError("--param expects name=value, got '" + kv + "'");
      out[kv.substr(0, eq)] = wronsk::csv_parse_number(kv.substr(eq + 1));
    }
    return out;
  }

  wronsk::Potential build() const {
    if (!builtin.empty() && !expr.empty())
      throw wronsk::ParameterError("give either --builtin or --expr, not both");
    if (!builtin.empty()) return wronsk::builtin_potential(builtin, parsed_params());
    if (!expr.empty()) return wronsk::parse_potential(expr);
    throw wronsk::ParameterError("a potential is required: --builtin NAME or --expr STR");
  }

  // family over the depth parameter, for coupling scans
  std::function<wronsk::Potential(double)> family() const {
    if (builtin.empty())
      throw wronsk::ParameterError("coupling scans need a --builtin family");
    const std::string name = builtin;
    const std::string key = name == "square_well" ? "depth" : "v0";
    auto base = parsed_params();
    return [name, key, base](double v0) {
      auto p = base;
      p[key] = v0;
      return wronsk::builtin_potential(name, p);
    };
  }

  std::string describe() const {
    if (!expr.empty()) return "expr " + expr;
    std::string out = "builtin " + builtin;
    for (const auto& kv : params) out += " " + kv;
    return out;
  }
};

struct CommonFlags {
  PotentialSpec pot;
  double h = 0.01;
  std::string x_eval = "auto";
  double tol = 1e-9;
  int n_scan = 400;
  int jobs = 1;
  bool brent = false;
  std::string output;  // empty = stdout
  std::string format;  // "", "csv", "table"
  bool no_header = false;

  wronsk::SolverOptions solver_options() const {
    wronsk::SolverOptions o;
    o.h = h;
    o.tol = tol;
    o.n_scan = n_scan;
    o.jobs = jobs;
    o.use_brent = brent;
    if (x_eval != "auto") o.x_eval = wronsk::csv_parse_number(x_eval);
    return o;
  }

  std::vector<std::string> base_metadata(const std::string& cmd) const {
    return {
        "wronsk " + cmd,
        "potential: " + pot.describe(),
        "h: " + wronsk::csv_number(h),
        "x_eval: " + x_eval,
        "tol: " + wronsk::csv_number(tol),
        "n_scan: " + std::to_string(n_scan),
    };
  }
};

void add_common(CLI::App* cmd, CommonFlags& f, bool with_potential = true) {
  cmd->set_help_flag("--help", "print help and exit");  // frees -h for --h
  if (with_potential) {
    cmd->add_option("--builtin", f.pot.builtin,
                    "built-in potential: poschl_teller | gaussian | square_well");
    cmd->add_option("--param", f.pot.params, "potential parameter name=value")
        ->take_all();
    cmd->add_option("--expr", f.pot.expr, "potential expression in x");
  }
  cmd->add_option("--h", f.h, "integration step (0, 0.1]")->default_val("0.01");
  cmd->add_option("--x-eval", f.x_eval, "Wronskian read point, number or 'auto'")
      ->default_val("auto");
  cmd->add_option("--tol", f.tol, "bisection tolerance")->default_val("1e-9");
  cmd->add_option("--n-scan", f.n_scan, "scan lattice points")->default_val("400");
  cmd->add_option("--jobs", f.jobs, "worker threads for scans")->default_val("1");
  cmd->add_flag("--brent", f.brent, "refine roots with Brent instead of bisection");
  cmd->add_option("--output", f.output, "write to file instead of stdout");
  cmd->add_option("--format", f.format, "csv | table");
  cmd->add_flag("--no-header", f.no_header, "omit the '#' metadata block");
}

void validate_numeric_flags(const CommonFlags& f) {
  if (!(f.h > 0.0) || f.h > 0.1)
    throw wronsk::ParameterError("--h must lie in (0, 0.1]");
  if (!(f.tol >= 1e-13))
    throw wronsk::ParameterError("--tol must be at least 1e-13");
  if (f.n_scan < 2) throw wronsk::ParameterError("--n-scan must be >= 2");
  if (f.jobs < 1) throw wronsk::ParameterError("--jobs must be >= 1");
}

// stdout or file, chosen by --output
class OutputSink {
public:
  explicit OutputSink(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_.open(path);
      if (!file_) throw wronsk::Error("cannot open output file: " + path);
    }
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

private:
  std::ofstream file_;
};

std::pair<double, double> parse_range(const std::string& text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos)
    throw wronsk::ParameterError("--range expects LO:HI, got '" + text + "'");
  return {wronsk::csv_parse_number(text.substr(0, colon)),
          wronsk::csv_parse_number(text.substr(colon + 1))};
}

void emit(const CommonFlags& f, const wronsk::CsvTable& table,
          const std::string& default_format) {
  OutputSink sink(f.output);
  const std::string format = f.format.empty() ? default_format : f.format;
  if (format == "csv") {
    wronsk::write_csv(sink.stream(), table, !f.no_header);
    return;
  }
  if (format != "table")
    throw wronsk::ParameterError("--format must be csv or table");
  // fixed-width text table
  std::vector<std::size_t> width(table.columns.size());
  for (std::size_t j = 0; j < table.columns.size(); ++j)
    width[j] = table.columns[j].size();
  for (const auto& row : table.rows)
    for (std::size_t j = 0; j < row.size(); ++j)
      width[j] = std::max(width[j], row[j].size());
  auto& os = sink.stream();
  if (!f.no_header)
    for (const auto& line : table.metadata) os << "# " << line << "\n";
  for (std::size_t j = 0; j < table.columns.size(); ++j) {
    os << (j ? "  " : "") << table.columns[j]
       << std::string(width[j] - table.columns[j].size(), ' ');
  }
  os << "\n";
  for (const auto& row : table.rows) {
    for (std::size_t j = 0; j < row.size(); ++j)
      os << (j ? "  " : "") << row[j] << std::string(width[j] - row[j].size(), ' ');
    os << "\n";
  }
  for (const auto& line : table.footer) os << "# " << line << "\n";
}

int cmd_solve(const CommonFlags& f, std::optional<double> emin,
              std::optional<double> emax) {
  validate_numeric_flags(f);
  const auto p = f.pot.build();
  auto opts = f.solver_options();
  opts.eps_min = emin;
  opts.eps_max = emax;
  const auto states = wronsk::find_bound_states(p, opts);

  wronsk::CsvTable table;
  table.metadata = f.base_metadata("solve");
  table.columns = {"n", "energy", "parity", "B_div", "residual",
                   "bracket_width", "low_confidence"};
  for (const auto& st : states) {
    table.rows.push_back({std::to_string(st.index), wronsk::csv_number(st.energy),
                          wronsk::to_string(st.parity),
                          wronsk::csv_number(st.residual_divergent),
                          wronsk::csv_number(st.wronskian_residual),
                          wronsk::csv_number(st.bracket_width),
                          st.low_confidence ? "1" : "0"});
  }
  table.footer = {"states: " + std::to_string(states.size())};
  emit(f, table, "table");
  return 0;
}

int cmd_scan(const CommonFlags& f, std::optional<double> emin,
             std::optional<double> emax, const std::string& range,
             std::optional<double> energy) {
  validate_numeric_flags(f);
  const auto opts = f.solver_options();
  wronsk::ScanTable scan;
  auto metadata = f.base_metadata("scan");

  if (energy) {
    // x mode: conditions as functions of the read point (plateau check);
    // --range narrows the x window
    if (emin || emax)
      throw wronsk::ParameterError("x-mode scans take --energy, not --emin/--emax");
    double lo = 0.0, hi = 5.0;
    if (!range.empty()) std::tie(lo, hi) = parse_range(range);
    const auto p = f.pot.build();
    scan = wronsk::scan_plateau(p, *energy, lo, hi, opts);
    metadata.push_back("mode: x");
    metadata.push_back("energy: " + wronsk::csv_number(*energy));
  } else if (emin || emax) {
    if (!emin || !emax)
      throw wronsk::ParameterError("energy scans need both --emin and --emax");
    if (!range.empty())
      throw wronsk::ParameterError("give either --emin/--emax or --range, not both");
    const auto p = f.pot.build();
    scan = wronsk::scan_energy(p, *emin, *emax, f.n_scan, opts);
    metadata.push_back("mode: energy");
  } else if (!range.empty()) {
    const auto [lo, hi] = parse_range(range);
    scan = wronsk::scan_coupling(f.pot.family(), lo, hi, f.n_scan, opts);
    metadata.push_back("mode: coupling");
  } else {
    throw wronsk::ParameterError(
        "scan needs --emin/--emax (energy), --range (coupling), or --energy (x)");
  }

  wronsk::CsvTable table;
  table.metadata = std::move(metadata);
  table.columns = scan.columns;
  int skipped = 0;
  for (const auto& row : scan.rows) {
    if (!row.ok) {
      ++skipped;
      continue;
    }
    std::vector<std::string> cells{wronsk::csv_number(row.abscissa),
                                   wronsk::csv_number(row.v1)};
    if (scan.has_two_values()) cells.push_back(wronsk::csv_number(row.v2));
    table.rows.push_back(std::move(cells));
  }
  if (skipped)
    table.footer.push_back("skipped_rows: " + std::to_string(skipped) +
                           " (integration overflow)");
  emit(f, table, "csv");
  return 0;
}

int cmd_critical(const CommonFlags& f, const std::string& range) {
  validate_numeric_flags(f);
  if (range.empty())
    throw wronsk::ParameterError("critical needs --range LO:HI for the coupling");
  const auto [lo, hi] = parse_range(range);
  const auto found =
      wronsk::critical_couplings(f.pot.family(), lo, hi, f.n_scan, f.tol,
                                 f.solver_options());

  wronsk::CsvTable table;
  table.metadata = f.base_metadata("critical");
  table.metadata.push_back("range: " + wronsk::csv_number(lo) + ":" +
                           wronsk::csv_number(hi));
  table.columns = {"n", "coupling", "parity", "bracket_width"};
  for (const auto& c : found)
    table.rows.push_back({std::to_string(c.index), wronsk::csv_number(c.coupling),
                          wronsk::to_string(c.parity),
                          wronsk::csv_number(c.bracket_width)});
  table.footer = {"critical_couplings: " + std::to_string(found.size())};
  emit(f, table, "table");
  return 0;
}

int cmd_wavefunction(const CommonFlags& f, std::optional<double> energy,
                     std::optional<int> state_index, std::optional<double> a2,
                     std::optional<double> b2) {
  validate_numeric_flags(f);
  const auto p = f.pot.build();
  const auto opts = f.solver_options();

  wronsk::Wavefunction wf;
  if (state_index) {
    const auto states = wronsk::find_bound_states(p, opts);
    if (*state_index < 0 || *state_index >= static_cast<int>(states.size())) {
      std::cerr << "wronsk: state " << *state_index << " out of range ("
                << states.size() << " bound states found)\n";
      return 1;
    }
    const auto& st = states[*state_index];
    wf = (a2 || b2)
             ? wronsk::wavefunction(p, st.energy, a2.value_or(0.0), b2.value_or(0.0), opts)
             : wronsk::wavefunction(p, st, opts);
  } else if (energy) {
    wf = wronsk::wavefunction(p, *energy, a2.value_or(1.0), b2.value_or(0.0), opts);
  } else {
    throw wronsk::ParameterError("wavefunction needs --energy E or --state N");
  }

  wronsk::CsvTable table;
  table.metadata = f.base_metadata("wavefunction");
  table.metadata.push_back("energy: " + wronsk::csv_number(wf.energy));
  table.metadata.push_back("mixture: a2=" + wronsk::csv_number(wf.a2) +
                           " b2=" + wronsk::csv_number(wf.b2));
  table.columns = {"x", "phi", "phi_prime"};
  for (std::size_t i = 0; i < wf.x.size(); ++i)
    table.rows.push_back({wronsk::csv_number(wf.x[i]), wronsk::csv_number(wf.phi[i]),
                          wronsk::csv_number(wf.phi_prime[i])});
  table.footer = {"truncation_x: " + wronsk::csv_number(wf.truncation_x),
                  "k: " + wronsk::csv_number(wf.k),
                  "B3: " + wronsk::csv_number(wf.b3)};
  emit(f, table, "csv");
  return 0;
}

int cmd_oracle(double v0) {
  for (const double e : wronsk::exact_poschl_teller(v0))
    std::cout << wronsk::csv_number(e) << "\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bound states of 1D potentials via Wronskian quantization"};
  app.set_help_flag("--help", "print help and exit");
  app.require_subcommand(1);

  CommonFlags flags;
  std::optional<double> emin, emax, energy;
  std::optional<int> state_index;
  std::optional<double> a2, b2;
  std::string range;
  double oracle_v0 = 0.0;

  auto* solve = app.add_subcommand("solve", "find all bound states");
  add_common(solve, flags);
  solve->add_option("--emin", emin, "scan floor (default: min sampled v)");
  solve->add_option("--emax", emax, "scan ceiling (default: threshold - 1e-6)");

  auto* scan = app.add_subcommand("scan", "tabulate quantization conditions");
  add_common(scan, flags);
  scan->add_option("--emin", emin, "energy scan: lower bound");
  scan->add_option("--emax", emax, "energy scan: upper bound");
  scan->add_option("--range", range, "coupling scan LO:HI, or x window in x mode");
  scan->add_option("--energy", energy, "x mode: fixed energy for the plateau scan");

  auto* critical = app.add_subcommand("critical", "critical coupling search");
  add_common(critical, flags);
  critical->add_option("--range", range, "coupling range LO:HI");

  auto* wavef = app.add_subcommand("wavefunction", "export phi = a2 C + b2 S");
  add_common(wavef, flags);
  wavef->add_option("--energy", energy, "explicit energy");
  wavef->add_option("--state", state_index, "solve first, then pick state n");
  wavef->add_option("--a2", a2, "mixture coefficient of C");
  wavef->add_option("--b2", b2, "mixture coefficient of S");

  auto* oracle = app.add_subcommand("oracle", "closed-form poschl_teller energies");
  oracle->set_help_flag("--help", "print help and exit");
  oracle->add_option("--v0", oracle_v0, "well depth")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  try {
    if (solve->parsed()) return cmd_solve(flags, emin, emax);
    if (scan->parsed()) return cmd_scan(flags, emin, emax, range, energy);
    if (critical->parsed()) return cmd_critical(flags, range);
    if (wavef->parsed())
      return cmd_wavefunction(flags, energy, state_index, a2, b2);
    if (oracle->parsed()) return cmd_oracle(oracle_v0);
  } catch (const wronsk::ParseError& e) {
    std::cerr << "wronsk: " << e.what() << "\n";
    return 2;
  } catch (const wronsk::CatalogError& e) {
    std::cerr << "wronsk: " << e.what() << "\n";
    return 2;
  } catch (const wronsk::ParameterError& e) {
    std::cerr << "wronsk: " << e.what() << "\n";
    return 2;
  } catch (const wronsk::IllPosedError& e) {
    std::cerr << "wronsk: " << e.what() << "\n";
    return 2;
  } catch (const wronsk::DegenerateInputError& e) {
    std::cerr << "wronsk: " << e.what() << "\n";
    return 2;
  } catch (const wronsk::Error& e) {
    std::cerr << "wronsk: numerical failure: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "wronsk: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
