#include <exception>
#include <iostream>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "casimir/cli.hpp"
#include "casimir/errors.hpp"
#include "casimir/run_config.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitConfig = 2;
constexpr int kExitNumerics = 3;
constexpr int kExitIo = 4;

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "casimir: thermal Casimir free energy, pressure and entropy between "
      "parallel semispaces (Lifshitz formula, interchangeable material models)"};
  app.require_subcommand(1);

  std::string config_path;
  CLI::App* sweep_t = app.add_subcommand(
      "sweep-t", "Temperature sweep at fixed separation (JSON config)");
  sweep_t->add_option("--config", config_path, "JSON config file")->required();

  CLI::App* sweep_a = app.add_subcommand(
      "sweep-a", "Separation sweep at fixed temperature (JSON config)");
  sweep_a->add_option("--config", config_path, "JSON config file")->required();

  std::string preset = "gold-paper-drude";
  double a_um = 1.0;
  std::vector<double> t_list;
  double rel_tol = 1e-9;
  std::string out_path;

  CLI::App* nernst = app.add_subcommand(
      "nernst", "Audit the Nernst heat theorem: extrapolate S(T->0)");
  nernst->add_option("--preset", preset, "material preset name")
      ->capture_default_str();
  nernst->add_option("--a-um", a_um, "plate separation in micrometers")
      ->required();
  nernst->add_option("--t-list", t_list,
                     "comma-separated temperatures in K, strictly decreasing")
      ->required()
      ->delimiter(',');
  nernst->add_option("--rel-tol", rel_tol, "relative tolerance")
      ->capture_default_str();
  nernst->add_option("--out", out_path, "optional CSV dump of audited points");

  CLI::App* validate = app.add_subcommand(
      "validate-asym",
      "Compare direct summation against the low-temperature expansion");
  validate->add_option("--preset", preset, "drude-type material preset")
      ->capture_default_str();
  validate->add_option("--a-um", a_um, "plate separation in micrometers")
      ->required();
  validate->add_option("--t-list", t_list, "comma-separated temperatures in K")
      ->required()
      ->delimiter(',');
  validate->add_option("--rel-tol", rel_tol, "relative tolerance")
      ->capture_default_str();

  std::vector<std::string> csv_paths;
  CLI::App* plot = app.add_subcommand(
      "plot", "Emit a gnuplot script overlaying sweep CSV files");
  plot->add_option("--csv", csv_paths, "comma-separated CSV files")
      ->required()
      ->delimiter(',');
  plot->add_option("--out", out_path, "script file to write")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitConfig;
  }

  try {
    if (sweep_t->parsed()) {
      const casimir::RunConfig config = casimir::load_run_config(
          config_path, casimir::SweepAxis::Temperature);
      casimir::cmd_sweep_temperature(config, std::cout);
      return kExitOk;
    }
    if (sweep_a->parsed()) {
      const casimir::RunConfig config = casimir::load_run_config(
          config_path, casimir::SweepAxis::Separation);
      casimir::cmd_sweep_separation(config, std::cout);
      return kExitOk;
    }
    if (nernst->parsed()) {
      casimir::cmd_nernst_audit(preset, a_um, t_list, rel_tol, out_path,
                                std::cout);
      return kExitOk;
    }
    if (validate->parsed()) {
      const bool ok = casimir::cmd_validate_asymptotics(preset, a_um, t_list,
                                                        rel_tol, std::cout);
      return ok ? kExitOk : kExitNumerics;
    }
    if (plot->parsed()) {
      casimir::cmd_emit_plot_script(csv_paths, out_path, std::cout);
      return kExitOk;
    }
    std::cerr << "error: no subcommand selected\n";
    return kExitConfig;
  } catch (const casimir::IoError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitIo;
  } catch (const casimir::NumericsError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitNumerics;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const std::exception& e) {
    std::cerr << "unexpected error: " << e.what() << "\n";
    return 1;
  }
}
