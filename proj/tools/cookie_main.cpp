// cookie: pressure, dimension and Lyapunov spectrum of cookie-cutter maps.

#include <CLI11.hpp>
#include <iostream>
#include <map>

#include "cookie/commands.hpp"

namespace {

using cookie::RunConfig;

void add_system(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("system", cfg.system_path, "System description (JSON)")->required();
}

void add_backend(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, cookie::BackendChoice> backends{{"auto", cookie::BackendChoice::Auto},
                                                              {"analytic", cookie::BackendChoice::Analytic},
                                                              {"collocation", cookie::BackendChoice::Collocation}};
  cmd->add_option("--backend", cfg.backend, "auto | analytic | collocation")
      ->transform(CLI::CheckedTransformer(backends, CLI::ignore_case));
  cmd->add_option("--nodes", cfg.nodes, "Chebyshev collocation nodes (>= 8)")->check(CLI::Range(8, 1 << 16));
}

void add_output(CLI::App* cmd, RunConfig& cfg) {
  const std::map<std::string, cookie::OutputFormat> formats{{"csv", cookie::OutputFormat::Csv},
                                                            {"pretty", cookie::OutputFormat::Pretty}};
  cmd->add_option("--output", cfg.output, "csv | pretty")->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
}

void add_t_grid(CLI::App* cmd, RunConfig& cfg) {
  cmd->add_option("--t-min", cfg.t_min, "Lower end of the t grid");
  cmd->add_option("--t-max", cfg.t_max, "Upper end of the t grid");
  cmd->add_option("--steps", cfg.steps, "Grid points");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Thermodynamic formalism for cookie-cutter maps"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto* validate = app.add_subcommand("validate", "Check a system description and print a summary");
  add_system(validate, cfg);

  auto* dimension = app.add_subcommand("dimension", "Hausdorff dimension of the repeller (root of the pressure)");
  add_system(dimension, cfg);
  add_backend(dimension, cfg);
  add_output(dimension, cfg);
  dimension->add_option("--t0", cfg.t0, "Newton starting point");
  dimension->add_option("--tol", cfg.newton_tol, "Newton stopping tolerance");
  dimension->add_flag("--trace", cfg.trace, "Print the Newton iterates");

  auto* pressure = app.add_subcommand("pressure", "Pressure curve as CSV (t,P,Pprime)");
  add_system(pressure, cfg);
  add_backend(pressure, cfg);
  add_output(pressure, cfg);
  add_t_grid(pressure, cfg);

  auto* spectrum = app.add_subcommand("spectrum", "Lyapunov spectrum as CSV (alpha,t_alpha,L,newton,entropy)");
  add_system(spectrum, cfg);
  add_backend(spectrum, cfg);
  add_output(spectrum, cfg);
  spectrum->add_option("--steps", cfg.steps, "Alpha grid points");
  spectrum->add_option("--margin", cfg.margin, "Relative distance kept from the alpha endpoints");
  spectrum->add_option("--tol", cfg.identity_tol, "Tolerance for the L/newton agreement warning");

  auto* verify = app.add_subcommand("verify", "Check L(-P'(t)) = N_P(t) on a t grid");
  add_system(verify, cfg);
  add_backend(verify, cfg);
  add_t_grid(verify, cfg);
  verify->add_option("--tol", cfg.identity_tol, "Residual tolerance (default 1e-10 analytic, 1e-6 collocation)");

  auto* sample = app.add_subcommand("sample", "Monte-Carlo Lyapunov exponents under the equilibrium weights at t");
  add_system(sample, cfg);
  add_output(sample, cfg);
  sample->add_option("--t", cfg.t, "Inverse temperature selecting the Bernoulli weights");
  sample->add_option("--paths", cfg.paths, "Number of paths")->check(CLI::PositiveNumber);
  sample->add_option("--path-length", cfg.path_length, "Symbols per path")->check(CLI::PositiveNumber);
  sample->add_option("--seed", cfg.seed, "Random seed");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : cookie::exit_code::parse;
  }

  if (*validate) return cookie::cmd_validate(cfg, std::cout, std::cerr);
  if (*dimension) return cookie::cmd_dimension(cfg, std::cout, std::cerr);
  if (*pressure) return cookie::cmd_pressure(cfg, std::cout, std::cerr);
  if (*spectrum) return cookie::cmd_spectrum(cfg, std::cout, std::cerr);
  if (*verify) return cookie::cmd_verify(cfg, std::cout, std::cerr);
  if (*sample) return cookie::cmd_sample(cfg, std::cout, std::cerr);
  return cookie::exit_code::parse;
}
