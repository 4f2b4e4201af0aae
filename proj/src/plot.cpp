#include "casimir/plot.hpp"

#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "casimir/errors.hpp"
#include "casimir/sweep.hpp"

namespace casimir {

namespace {

std::vector<std::string> split_csv_line(const std::string& line) {
  std::vector<std::string> fields;
  std::string field;
  std::istringstream in(line);
  while (std::getline(in, field, ',')) fields.push_back(field);
  return fields;
}

struct CsvSummary {
  std::string path;
  std::string quantity;
  std::string model_tag;
  bool sweeps_temperature = true;  // else sweeps separation
};

CsvSummary summarize_csv(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open CSV file '" + path + "'");

  std::string header;
  if (!std::getline(in, header)) {
    throw std::invalid_argument("plot: CSV file '" + path + "' is empty");
  }
  if (!header.empty() && header.back() == '\r') header.pop_back();
  const std::vector<std::string> expected = split_csv_line(kSweepCsvHeader);
  const std::vector<std::string> got = split_csv_line(header);
  for (std::size_t i = 0; i < expected.size(); ++i) {
    if (i >= got.size() || got[i] != expected[i]) {
      throw std::invalid_argument("plot: CSV file '" + path +
                                  "' header mismatch at column '" + expected[i] + "'");
    }
  }
  if (got.size() != expected.size()) {
    throw std::invalid_argument("plot: CSV file '" + path +
                                "' has extra header columns after '" +
                                expected.back() + "'");
  }

  CsvSummary summary;
  summary.path = path;
  std::string line;
  std::vector<std::vector<std::string>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line.front() == '#') continue;
    std::vector<std::string> fields = split_csv_line(line);
    if (fields.size() != expected.size()) {
      throw std::invalid_argument("plot: CSV file '" + path +
                                  "' row with wrong field count");
    }
    rows.push_back(std::move(fields));
  }
  if (rows.empty()) {
    throw std::invalid_argument("plot: CSV file '" + path + "' has no data rows");
  }
  summary.quantity = rows.front()[2];
  summary.model_tag = rows.front()[5];
  if (rows.size() > 1) {
    summary.sweeps_temperature = rows.front()[0] != rows[1][0];
  }
  return summary;
}

std::string y_axis_label(const std::string& quantity) {
  if (quantity == "free-energy") return "F (J m^{-2})";
  if (quantity == "pressure") return "|P| (Pa)";
  if (quantity == "entropy") return "S (J m^{-2} K^{-1})";
  throw std::invalid_argument("plot: unknown quantity '" + quantity + "' in CSV");
}

}  // namespace

void emit_plot_script(const std::vector<std::string>& csv_paths,
                      const std::string& script_path) {
  if (csv_paths.empty()) {
    throw std::invalid_argument("plot: need at least one CSV file");
  }

  std::vector<CsvSummary> series;
  series.reserve(csv_paths.size());
  for (const std::string& path : csv_paths) series.push_back(summarize_csv(path));
  for (const CsvSummary& s : series) {
    if (s.quantity != series.front().quantity) {
      throw std::invalid_argument("plot: CSV file '" + s.path + "' holds quantity '" +
                                  s.quantity + "' but '" + series.front().path +
                                  "' holds '" + series.front().quantity + "'");
    }
    if (s.sweeps_temperature != series.front().sweeps_temperature) {
      throw std::invalid_argument("plot: CSV file '" + s.path +
                                  "' sweeps a different variable than '" +
                                  series.front().path + "'");
    }
  }

  const bool vs_temperature = series.front().sweeps_temperature;
  const std::string& quantity = series.front().quantity;
  // Column indices are 1-based in gnuplot; pressure plots its magnitude.
  const int x_column = vs_temperature ? 1 : 2;
  const std::string y_expr =
      quantity == "pressure" ? "(abs($4))" : "(column(4))";

  std::ofstream out(script_path, std::ios::binary | std::ios::trunc);
  if (!out) throw IoError("cannot open script file '" + script_path + "'");

  out << "# gnuplot script generated from sweep CSV data\n";
  out << "set datafile separator comma\n";
  out << "set key autotitle columnhead\n";  // consumes the CSV header row
  out << "set key top left\n";
  out << "set xlabel '" << (vs_temperature ? "T (K)" : "a (um)") << "'\n";
  out << "set ylabel '" << y_axis_label(quantity) << "'\n";
  out << "set grid\n";
  if (quantity == "entropy") out << "set xzeroaxis\n";
  out << "set terminal pngcairo size 960,640\n";
  out << "set output '" << script_path << ".png'\n";
  out << "plot ";
  for (std::size_t i = 0; i < series.size(); ++i) {
    const int dash_type = i == 0 ? 1 : (i == 1 ? 2 : 3);
    if (i > 0) out << ", \\\n     ";
    out << "'" << series[i].path << "' using " << x_column << ":" << y_expr
        << " with lines lw 2 dt " << dash_type << " title '"
        << series[i].model_tag << "'";
  }
  out << '\n';
  out.flush();
  if (!out) throw IoError("failed writing script file '" + script_path + "'");
}

}  // namespace casimir
