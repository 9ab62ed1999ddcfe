#include "cookie/commands.hpp"

#include <cmath>
#include <functional>
#include <iomanip>
#include <limits>
#include <ostream>
#include <sstream>
#include <vector>

#include "cookie/analysis.hpp"
#include "cookie/config.hpp"
#include "cookie/error.hpp"
#include "cookie/pressure.hpp"
#include "cookie/spectrum.hpp"

namespace cookie {

std::string format_double(double v, int digits) {
  if (std::isnan(v)) return "nan";
  std::ostringstream os;
  os << std::setprecision(digits) << v;
  return os.str();
}

namespace {

int exit_for(ErrorCode code) {
  if (code == ErrorCode::ParseError) return exit_code::parse;
  if (is_validation_error(code)) return exit_code::validation;
  return exit_code::computation;
}

int guarded(std::ostream& err, const std::function<int()>& body) {
  try {
    return body();
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_for(e.code());
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return exit_code::computation;
  }
}

PressureEvaluator make_evaluator(const RunConfig& config, CookieCutterSystem system) {
  const bool analytic = config.backend == BackendChoice::Analytic ||
                        (config.backend == BackendChoice::Auto && system.is_affine());
  if (analytic) return PressureEvaluator::analytic(std::move(system));
  CollocationOptions options;
  options.nodes = config.nodes;
  return PressureEvaluator::collocation(std::move(system), options);
}

TAlphaOptions t_alpha_options(const RunConfig& config) {
  TAlphaOptions o;
  o.bisect_tol = config.bisect_tol;
  return o;
}

double identity_tol(const RunConfig& config, Backend backend) {
  return config.identity_tol.value_or(default_identity_tolerance(backend));
}

/// Rows of numbers as CSV or as right-aligned columns.
class TableWriter {
 public:
  TableWriter(std::ostream& out, OutputFormat format, std::vector<std::string> header)
      : out_(out), format_(format) {
    emit(header);
  }

  void row(const std::vector<std::string>& cells) { emit(cells); }
  void comment(const std::string& text) { out_ << "# " << text << '\n'; }

 private:
  void emit(const std::vector<std::string>& cells) {
    for (std::size_t i = 0; i < cells.size(); ++i) {
      if (format_ == OutputFormat::Csv) {
        out_ << (i ? "," : "") << cells[i];
      } else {
        out_ << (i ? "  " : "") << std::setw(24) << cells[i];
      }
    }
    out_ << '\n';
  }

  std::ostream& out_;
  OutputFormat format_;
};

void check_positive(double v, const char* name) {
  if (!(v > 0.0)) throw Error(ErrorCode::InvalidArgument, std::string(name) + " must be positive");
}

}  // namespace

int cmd_validate(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto system = load_system(config.system_path);
    out << "branches: " << system.size() << '\n';
    for (std::size_t i = 0; i < system.size(); ++i) {
      const auto& b = system.branch(i);
      out << "  [" << i << "] " << (b.kind == BranchKind::Affine ? "affine" : "quadratic") << " ["
          << format_double(b.interval.lo) << ", " << format_double(b.interval.hi) << "]";
      if (b.kind == BranchKind::Affine)
        out << " slope " << format_double(b.slope());
      else
        out << " epsilon " << format_double(b.epsilon) << " sup_psi' " << format_double(b.sup_inverse_derivative());
      out << '\n';
    }
    out << "affine: " << (system.is_affine() ? "true" : "false") << '\n';
    out << "degenerate: " << (system.is_affine_degenerate() ? "true" : "false") << '\n';
    return exit_code::ok;
  });
}

int cmd_dimension(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    check_positive(config.newton_tol, "--tol");
    const auto ev = make_evaluator(config, load_system(config.system_path));
    const auto result = bowen_dimension(ev, config.t0, config.newton_tol, Defaults::newton_max_iter);
    out << format_double(result.dimension, 15) << '\n';
    if (config.trace) {
      TableWriter table(out, config.output, {"k", "t", "P"});
      for (std::size_t k = 0; k < result.trace.iterates.size(); ++k) {
        const auto& it = result.trace.iterates[k];
        table.row({std::to_string(k), format_double(it.t), format_double(it.value)});
      }
    }
    return exit_code::ok;
  });
}

int cmd_pressure(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (config.steps < 1) throw Error(ErrorCode::InvalidArgument, "--steps must be at least 1");
    const auto ev = make_evaluator(config, load_system(config.system_path));
    const auto grid = linear_grid(config.t_min, config.t_max, config.steps);
    struct Row {
      double p = 0.0;
      double dp = 0.0;
    };
    const auto rows = kernels::map_to<Row>(Exec::Parallel, grid.size(), [&](std::size_t k) {
      return Row{ev.pressure(grid[k]), ev.derivative(grid[k])};
    });
    TableWriter table(out, config.output, {"t", "P", "Pprime"});
    for (std::size_t k = 0; k < grid.size(); ++k)
      table.row({format_double(grid[k]), format_double(rows[k].p), format_double(rows[k].dp)});
    return exit_code::ok;
  });
}

int cmd_spectrum(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ev = make_evaluator(config, load_system(config.system_path));
    const auto curve = spectrum_curve(ev, config.steps, config.margin, t_alpha_options(config));
    const double tol = identity_tol(config, ev.backend());
    TableWriter table(out, config.output, {"alpha", "t_alpha", "L", "newton", "entropy"});
    if (curve.degenerate) table.comment("degenerate");
    std::size_t disagreements = 0;
    for (const auto& p : curve.points) {
      if (!(std::abs(p.L - p.newton_value) <= tol)) ++disagreements;
      table.row({format_double(p.alpha), format_double(p.t_alpha), format_double(p.L), format_double(p.newton_value),
                 format_double(p.entropy)});
    }
    if (disagreements)
      err << "warning: " << disagreements << " rows with |L - newton| > " << format_double(tol, 3) << '\n';
    return exit_code::ok;
  });
}

int cmd_verify(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto ev = make_evaluator(config, load_system(config.system_path));
    const double tol = identity_tol(config, ev.backend());
    check_positive(tol, "--tol");
    const auto report =
        verify_identity(ev, config.t_min, config.t_max, config.steps, tol, t_alpha_options(config));
    out << "backend: " << (ev.backend() == Backend::Analytic ? "analytic" : "collocation") << '\n';
    out << "grid: [" << format_double(config.t_min) << ", " << format_double(config.t_max) << "] x "
        << config.steps << '\n';
    out << "tolerance: " << format_double(tol, 3) << '\n';
    out << "max_residual: " << format_double(report.max_residual, 6) << '\n';
    out << (report.pass ? "PASS" : "FAIL") << '\n';
    return report.pass ? exit_code::ok : exit_code::verification;
  });
}

int cmd_sample(const RunConfig& config, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const auto system = load_system(config.system_path);
    if (!system.is_affine())
      throw Error(ErrorCode::NotAffine, "equilibrium weights are only available for affine systems");
    const auto ev = PressureEvaluator::analytic(system);
    const auto weights = equilibrium_weights(system, config.t);
    const auto lambdas = sample_lyapunov(system, weights.weights, config.path_length, config.paths, config.seed);

    double mean = 0.0;
    for (double l : lambdas) mean += l;
    mean /= static_cast<double>(lambdas.size());
    double ss = 0.0;
    for (double l : lambdas) ss += (l - mean) * (l - mean);
    const double n = static_cast<double>(lambdas.size());
    const double stderr_ = lambdas.size() > 1 ? std::sqrt(ss / (n - 1.0) / n) : 0.0;
    const double target = -ev.derivative(config.t);
    const double z = stderr_ > 0.0 ? (mean - target) / stderr_ : (mean == target ? 0.0 : std::numeric_limits<double>::infinity());

    TableWriter table(out, config.output, {"path", "lambda"});
    for (std::size_t p = 0; p < lambdas.size(); ++p) table.row({std::to_string(p), format_double(lambdas[p])});
    table.comment("mean=" + format_double(mean));
    table.comment("stderr=" + format_double(stderr_));
    table.comment("target=" + format_double(target));
    table.comment("z=" + format_double(z));
    return exit_code::ok;
  });
}

}  // namespace cookie
