#pragma once

#include <string>
#include <vector>

// Gnuplot script emission from sweep CSVs.  The generator only reads CSV
// headers/rows and writes a text script; it never launches a plotting binary.

namespace casimir {

// Emits a script overlaying the given CSVs (first series solid, second
// dashed, further series dotted).  All CSVs must share the pinned sweep
// schema, one quantity, and one swept variable; violations throw
// std::invalid_argument naming the offender.  Unreadable/unwritable files
// throw IoError.
void emit_plot_script(const std::vector<std::string>& csv_paths,
                      const std::string& script_path);

}  // namespace casimir
