#pragma once

// Command layer behind the `cookie` CLI. Each command writes data to `out`,
// diagnostics to `err`, and returns a process exit code.

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>

namespace cookie {

/// Every default used by the CLI and the acceptance suite.
struct Defaults {
  static constexpr std::size_t nodes = 64;
  static constexpr double power_iter_tol = 1e-13;
  static constexpr std::size_t power_iter_max = 10000;
  static constexpr double newton_tol = 1e-13;
  static constexpr std::size_t newton_max_iter = 100;
  static constexpr double bisect_tol = 1e-12;
  static constexpr double identity_tol_analytic = 1e-10;
  static constexpr double identity_tol_collocation = 1e-6;
  static constexpr double margin = 1e-3;
  static constexpr double t_min = -2.0;
  static constexpr double t_max = 3.0;
  static constexpr std::size_t steps = 101;
  static constexpr double t0 = 1.0;
  static constexpr double sample_t = 1.0;
  static constexpr std::uint64_t seed = 42;
  static constexpr std::size_t paths = 100;
  static constexpr std::size_t path_length = 10000;
};

enum class BackendChoice { Auto, Analytic, Collocation };
enum class OutputFormat { Csv, Pretty };

namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse = 2;
inline constexpr int validation = 3;
inline constexpr int computation = 4;
inline constexpr int verification = 5;
}  // namespace exit_code

struct RunConfig {
  std::filesystem::path system_path;
  BackendChoice backend = BackendChoice::Auto;
  std::size_t nodes = Defaults::nodes;
  double newton_tol = Defaults::newton_tol;
  /// Unset: backend default (1e-10 analytic, 1e-6 collocation).
  std::optional<double> identity_tol;
  double bisect_tol = Defaults::bisect_tol;
  OutputFormat output = OutputFormat::Csv;
  std::uint64_t seed = Defaults::seed;

  double t0 = Defaults::t0;
  bool trace = false;
  double t_min = Defaults::t_min;
  double t_max = Defaults::t_max;
  std::size_t steps = Defaults::steps;
  double margin = Defaults::margin;
  double t = Defaults::sample_t;
  std::size_t paths = Defaults::paths;
  std::size_t path_length = Defaults::path_length;
};

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_dimension(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_pressure(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err);
int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err);

/// Shortest round-trip-safe text for a double: 17 significant digits.
std::string format_double(double v, int digits = 17);

}  // namespace cookie
