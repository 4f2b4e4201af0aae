#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "casimir/run_config.hpp"

// Command implementations behind the `casimir` executable.  Each function
// performs one subcommand's work and throws on failure; the executable maps
// exception types to exit codes (2 config, 3 numerics, 4 I/O).

namespace casimir {

// Runs the sweep, writes the CSV (plus optional plot script).  If a sweep
// point fails, the rows finished before it are written with a trailing
// `# PARTIAL:` marker and NumericsError is thrown.
void cmd_sweep_temperature(const RunConfig& config, std::ostream& out);
void cmd_sweep_separation(const RunConfig& config, std::ostream& out);

// Extrapolates S(T->0), compares against the closed-form low-temperature
// entropy scale, prints a CONSISTENT/VIOLATION verdict, and optionally dumps
// the audited entropy points as CSV.  Returns true when consistent.
bool cmd_nernst_audit(const std::string& preset, double a_um,
                      const std::vector<double>& t_list_K, double rel_tol,
                      const std::string& csv_out, std::ostream& out);

// Compares the summation engine against the low-temperature expansion at the
// given temperatures; prints the table.  Returns true when every row meets
// the rel_diff < 1e-2 criterion.
bool cmd_validate_asymptotics(const std::string& preset, double a_um,
                              const std::vector<double>& t_list_K,
                              double rel_tol, std::ostream& out);

void cmd_emit_plot_script(const std::vector<std::string>& csv_paths,
                          const std::string& script_path, std::ostream& out);

}  // namespace casimir
