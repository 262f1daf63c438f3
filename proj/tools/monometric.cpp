// monometric: command-line driver for the monotone-metric library.
//
//   monometric eval-f      --family gamma --gamma 0.5 --t 4
//   monometric eval-c      --bridge 0.5 --x 4 --y 9
//   monometric metric      --rho rho.json --a a.json --c-spec c.json
//   monometric bridge-table --gammas 0,0.5,1 --x-grid log:0.01:100:5 --y-grid 1
//   monometric verify      --suite all --trials 200 --seed 42
//
// Exit codes: 0 ok, 1 verification failure, 2 malformed input,
// 3 quadrature failure, 4 not a state.

#include <charconv>
#include <cstdio>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "monometric/chentsov.hpp"
#include "monometric/error.hpp"
#include "monometric/grid.hpp"
#include "monometric/io.hpp"
#include "monometric/metric.hpp"
#include "monometric/monotone.hpp"
#include "monometric/verify.hpp"

namespace {

using namespace monometric;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitMalformed = 2;
constexpr int kExitQuadrature = 3;
constexpr int kExitNotAState = 4;

[[noreturn]] void malformed(const std::string& what) { throw Error(ErrorKind::ParseError, what); }

double parse_double(std::string_view text) {
  double value = 0.0;
  const char* first = text.data();
  const char* last = first + text.size();
  if (!text.empty() && *first == '+') ++first;
  const auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last) malformed("not a number: \"" + std::string(text) + "\"");
  return value;
}

std::vector<std::string_view> split(std::string_view text, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

std::vector<double> parse_list(std::string_view text) {
  std::vector<double> out;
  for (auto item : split(text, ',')) out.push_back(parse_double(item));
  return out;
}

// "a,b,c" | "lin:LO:HI:N" | "log:LO:HI:N"
std::vector<double> parse_grid(std::string_view text) {
  if (text.starts_with("lin:") || text.starts_with("log:")) {
    const auto parts = split(text.substr(4), ':');
    if (parts.size() != 3) malformed("grid spec must be KIND:LO:HI:N");
    const double lo = parse_double(parts[0]);
    const double hi = parse_double(parts[1]);
    const double count = parse_double(parts[2]);
    if (!(count >= 1.0) || count != std::floor(count) || count > 1e6)
      malformed("grid point count must be a positive integer");
    const bool logarithmic = text.starts_with("log:");
    if (logarithmic && !(lo > 0.0 && hi > 0.0)) malformed("log grid bounds must be positive");
    if (!(lo <= hi)) malformed("grid bounds must satisfy LO <= HI");
    const auto n = static_cast<std::size_t>(count);
    return logarithmic ? log_grid(lo, hi, n) : linear_grid(lo, hi, n);
  }
  return parse_list(text);
}

std::vector<std::size_t> parse_dims(std::string_view text) {
  std::vector<std::size_t> out;
  for (double d : parse_list(text)) {
    if (d != std::floor(d) || d < 1.0) malformed("dimensions must be positive integers");
    out.push_back(static_cast<std::size_t>(d));
  }
  return out;
}

MonotoneFunction family_function(const std::string& family, std::optional<double> gamma) {
  if (family == "gamma") {
    if (!gamma) malformed("--family gamma needs --gamma");
    return MonotoneFunction::gamma(*gamma);
  }
  if (family == "min") return MonotoneFunction::min();
  if (family == "max") return MonotoneFunction::max();
  if (family == "sqrt") return MonotoneFunction::sqrt();
  if (family == "identity") return MonotoneFunction::identity();
  if (family == "one") return MonotoneFunction::constant_one();
  malformed("unknown family \"" + family + "\"");
}

// A monotone function given as a JSON file path or an inline JSON object.
MonotoneFunction monotone_argument(const std::string& spec, const QuadratureConfig& quad) {
  if (!spec.empty() && spec.front() == '{') {
    try {
      return io::monotone_from_json(io::json::parse(spec), quad);
    } catch (const io::json::exception& e) {
      malformed(e.what());
    }
  }
  return io::monotone_from_json(io::read_json_file(spec), quad);
}

void print_real(double value) { std::cout << io::format_real(value) << '\n'; }

int exit_code_for(const Error& e) {
  switch (e.kind()) {
    case ErrorKind::QuadratureFailure: return kExitQuadrature;
    case ErrorKind::NotAState: return kExitNotAState;
    default: return kExitMalformed;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Symmetric monotone metrics from Morozova-Chentsov functions"};
  app.require_subcommand(1);

  // eval-f
  auto* eval_f = app.add_subcommand("eval-f", "Evaluate an operator monotone function f(t)");
  std::string family;
  std::optional<double> gamma;
  std::string h_file;
  std::string beta = "auto";
  double t = 0.0;
  eval_f->add_option("--family", family, "gamma | min | max | sqrt | identity | one");
  eval_f->add_option("--gamma", gamma, "Exponent of the gamma family");
  eval_f->add_option("--h-file", h_file, "Weight function JSON for the canonical form");
  eval_f->add_option("--beta", beta, "auto | VALUE")->capture_default_str();
  eval_f->add_option("--t", t, "Argument t > 0")->required();

  // eval-c
  auto* eval_c = app.add_subcommand("eval-c", "Evaluate a Morozova-Chentsov function c(x,y)");
  std::optional<double> bridge;
  std::string c_h_file;
  std::string c0 = "auto";
  std::string from_f;
  double x = 0.0;
  double y = 0.0;
  eval_c->add_option("--bridge", bridge, "Bridge exponent gamma in [0,1]");
  eval_c->add_option("--h-file", c_h_file, "Weight function JSON for the canonical form");
  eval_c->add_option("--c0", c0, "auto | VALUE")->capture_default_str();
  eval_c->add_option("--from-f", from_f, "Monotone function (JSON file or inline JSON)");
  eval_c->add_option("--x", x, "x > 0")->required();
  eval_c->add_option("--y", y, "y > 0")->required();

  // metric
  auto* metric = app.add_subcommand("metric", "Evaluate K_rho(A, B)");
  std::string rho_file, a_file, b_file, c_spec_file;
  double big_c = 1.0;
  metric->add_option("--rho", rho_file, "Density matrix JSON")->required();
  metric->add_option("--a", a_file, "Tangent matrix A JSON")->required();
  metric->add_option("--b", b_file, "Tangent matrix B JSON (defaults to A)");
  metric->add_option("--c-spec", c_spec_file, "Morozova-Chentsov function JSON")->required();
  metric->add_option("--big-c", big_c, "Diagonal constant C")->capture_default_str();

  // bridge-table
  auto* table = app.add_subcommand("bridge-table", "CSV of bridge values c_gamma(x,y)");
  std::string gammas_text, x_grid_text, y_grid_text;
  table->add_option("--gammas", gammas_text, "Comma-separated exponents")->required();
  table->add_option("--x-grid", x_grid_text, "a,b,c | lin:LO:HI:N | log:LO:HI:N")->required();
  table->add_option("--y-grid", y_grid_text, "a,b,c | lin:LO:HI:N | log:LO:HI:N")->required();

  // verify
  auto* verify = app.add_subcommand("verify", "Run the property verification suites");
  VerifyOptions options;
  std::string dims_text = "2,3,4,5";
  bool timing = false;
  verify->add_option("--suite", options.suite, "monotone | chentsov | metric | channels | all")
      ->capture_default_str();
  verify->add_option("--trials", options.trials, "Random trials per property")->capture_default_str();
  verify->add_option("--seed", options.seed, "Master seed")->capture_default_str();
  verify->add_option("--dims", dims_text, "Comma-separated matrix dimensions")->capture_default_str();
  verify->add_option("--inject", options.injections, "Inject a known violation: square | bad-c");
  verify->add_flag("--timing", timing, "Include wall time in the JSON report");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : kExitMalformed;
  }

  try {
    const QuadratureConfig quad = QuadratureConfig::from_env();

    if (*eval_f) {
      const bool by_family = !family.empty();
      const bool by_weight = !h_file.empty();
      if (by_family == by_weight) malformed("give exactly one of --family or --h-file");
      if (by_family) {
        print_real(family_function(family, gamma)(t));
      } else {
        WeightFunction h = io::weight_from_json(io::read_json_file(h_file));
        const double b = beta == "auto" ? normalize_beta(h, quad) : parse_double(beta);
        print_real(eval_canonical_f(b, h, t, quad));
      }
      return 0;
    }

    if (*eval_c) {
      const int chosen = (bridge ? 1 : 0) + (c_h_file.empty() ? 0 : 1) + (from_f.empty() ? 0 : 1);
      if (chosen != 1) malformed("give exactly one of --bridge, --h-file or --from-f");
      if (bridge) {
        print_real(eval_bridge(*bridge, x, y));
      } else if (!c_h_file.empty()) {
        WeightFunction h = io::weight_from_json(io::read_json_file(c_h_file));
        const double value = c0 == "auto" ? normalize_C0(h, quad) : parse_double(c0);
        print_real(eval_canonical_c(value, h, x, y, quad));
      } else {
        print_real(c_from_f(monotone_argument(from_f, quad), x, y));
      }
      return 0;
    }

    if (*metric) {
      const MetricSpec spec{io::mc_from_json(io::read_json_file(c_spec_file), quad), big_c};
      if (!(big_c > 0.0)) malformed("--big-c must be positive");
      const DensityMatrix rho(io::matrix_from_json(io::read_json_file(rho_file)));
      const ComplexMatrix a = io::matrix_from_json(io::read_json_file(a_file));
      const ComplexMatrix b = b_file.empty() ? a : io::matrix_from_json(io::read_json_file(b_file));
      const Complex k = metric_form(spec, rho, a, b);
      std::cout << io::format_real(k.real()) << ' ' << io::format_real(k.imag()) << '\n';
      return 0;
    }

    if (*table) {
      const std::vector<double> gammas = parse_list(gammas_text);
      const std::vector<double> xs = parse_grid(x_grid_text);
      const std::vector<double> ys = parse_grid(y_grid_text);
      std::string out = "gamma,x,y,c\n";
      for (double g : gammas)
        for (double xv : xs)
          for (double yv : ys) {
            out += io::format_real(g) + ',' + io::format_real(xv) + ',' + io::format_real(yv) + ',' +
                   io::format_real(eval_bridge(g, xv, yv)) + '\n';
          }
      std::fwrite(out.data(), 1, out.size(), stdout);
      return 0;
    }

    if (*verify) {
      options.dims = parse_dims(dims_text);
      options.quad = quad;
      const VerificationReport report = run_verification(options);
      std::cout << report_to_json(report, timing).dump(2) << '\n';
      std::size_t failed = 0;
      for (const auto& p : report.properties) failed += p.passed ? 0 : 1;
      std::fprintf(stderr, "verify: %zu properties, %zu failed, %.2f s\n", report.properties.size(),
                   failed, report.wall_time_seconds);
      return report.passed() ? 0 : kExitVerifyFailed;
    }
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_code_for(e);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitMalformed;
  }
  return kExitMalformed;
}
