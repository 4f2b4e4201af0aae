#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/run_config.hpp"

// Sweep execution and CSV serialization.  Rows carry laboratory (SI) values;
// formatting is deterministic (12 significant digits, locale independent) so
// repeated runs produce byte-identical files.

namespace casimir {

struct SweepRow {
  double T_K = 0.0;
  double a_um = 0.0;
  double value_si = 0.0;
  double abs_err_si = 0.0;
  std::string model_tag;
};

// Raised when a sweep point fails: carries the rows that finished before the
// failing index so callers can persist a partial file.
class SweepError : public std::runtime_error {
 public:
  SweepError(const std::string& message, std::vector<SweepRow> completed)
      : std::runtime_error(message), completed_(std::move(completed)) {}
  const std::vector<SweepRow>& completed_rows() const { return completed_; }

 private:
  std::vector<SweepRow> completed_;
};

std::vector<SweepRow> run_temperature_sweep(const RunConfig& config);
std::vector<SweepRow> run_separation_sweep(const RunConfig& config);

// 12-significant-digit scientific notation via std::to_chars.
std::string format_csv_number(double value);

// Writes header plus one row per entry; when `partial_note` is nonempty a
// trailing `# PARTIAL: <note>` line marks an aborted sweep.  Throws IoError
// on any write failure.
void write_sweep_csv(const std::string& path, SweepQuantity quantity,
                     const std::vector<SweepRow>& rows,
                     const std::string& partial_note = "");

inline constexpr const char* kSweepCsvHeader =
    "T_K,a_um,quantity,value_SI,abs_err_SI,model";

}  // namespace casimir
