// Command-line front end. Talks to the library only through the C interface.

#include "sjk/sjk.h"

#include <CLI11.hpp>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <iterator>
#include <memory>
#include <sstream>
#include <string>

namespace {

struct ContextDeleter {
  void operator()(sjk_context* c) const { sjk_context_destroy(c); }
};
using Context = std::unique_ptr<sjk_context, ContextDeleter>;

constexpr int kUsage = 2;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// "-" or empty reads standard input; "@path" reads a file.
std::string read_input(const std::string& arg) {
  if (arg.empty() || arg == "-") {
    return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  }
  if (arg.front() == '@') {
    std::ifstream in(arg.substr(1));
    if (!in) throw UsageError("cannot read " + arg.substr(1));
    std::stringstream ss;
    ss << in.rdbuf();
    return ss.str();
  }
  return arg;
}

std::pair<double, double> parse_params(const std::string& text) {
  const auto comma = text.find(',');
  if (comma == std::string::npos) throw UsageError("--params expects A,B");
  try {
    std::size_t ia = 0;
    std::size_t ib = 0;
    const std::string sa = text.substr(0, comma);
    const std::string sb = text.substr(comma + 1);
    const double a = std::stod(sa, &ia);
    const double b = std::stod(sb, &ib);
    if (ia != sa.size() || ib != sb.size() || !(a > 0) || !(b > 0) || !std::isfinite(a) ||
        !std::isfinite(b)) {
      throw UsageError("--params expects two positive numbers A,B");
    }
    return {a, b};
  } catch (const std::logic_error&) {
    throw UsageError("--params expects two positive numbers A,B");
  }
}

// Prints the command output (if any) and maps the status to an exit code.
int finish(sjk_context* ctx, sjk_status st, char* out) {
  if (out) {
    std::cout << out << '\n';
    sjk_string_free(out);
  }
  if (st != SJK_OK && st != SJK_VERIFY_FAILED) {
    std::cerr << "error (" << sjk_status_name(st) << "): " << sjk_last_error(ctx) << '\n';
  }
  return sjk_exit_code(st);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Jacobi group, Siegel-Jacobi space and disk toolkit"};
  app.set_help_flag("--help", "Print this help message and exit");
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(sjk_version()));

  std::string input = "-";
  std::string element;
  std::string params = "1,1";
  double tol = 0.0;

  auto add_tol = [&](CLI::App* c) {
    c->add_option("--tol", tol, "Algebraic relative tolerance")->check(CLI::PositiveNumber);
  };

  auto* transform = app.add_subcommand("transform", "Apply an action or (partial) Cayley map");
  std::string map;
  transform->add_option("--map", map, "cayley | cayley-inv | partial-cayley | partial-cayley-inv | "
                                      "act-siegel | act-disk | act-jacobi | act-jacobi-disk")
      ->required();
  transform->add_option("--input", input, "Point JSON, @file, or - for stdin");
  transform->add_option("--element", element, "Group element JSON for act-* maps");
  add_tol(transform);

  auto* sample = app.add_subcommand("sample", "Emit a seeded random element or point");
  std::string kind;
  int g = 1;
  int h = 1;
  std::uint64_t seed = 42;
  double scale = 0.8;
  sample->add_option("--kind", kind, "sp | heisenberg | jacobi | gstar | gstarj | kstarj | "
                                     "siegel | disk | siegel-jacobi | disk-jacobi")
      ->required();
  sample->add_option("--g", g)->check(CLI::PositiveNumber);
  sample->add_option("--h", h)->check(CLI::PositiveNumber);
  sample->add_option("--seed", seed);
  sample->add_option("--scale", scale)->check(CLI::PositiveNumber);

  auto* metric = app.add_subcommand("metric", "Evaluate an invariant metric on a tangent vector");
  std::string space;
  metric->add_option("--space", space, "siegel | disk | siegel-jacobi | disk-jacobi")->required();
  metric->add_option("--input", input, "Point and tangent JSON, @file, or - for stdin");
  metric->add_option("--params", params, "Metric parameters A,B");
  add_tol(metric);

  auto* laplacian = app.add_subcommand("laplacian", "Evaluate an invariant Laplacian on a builtin field");
  std::string field;
  laplacian->add_option("--space", space, "siegel | disk | siegel-jacobi")->required();
  laplacian->add_option("--field", field, "sigma-re-omega | log-det-y | sigma-y-vtv | re-sigma-z | "
                                          "abs-sigma-z-sq | log-det-disk")
      ->required();
  laplacian->add_option("--input", input, "Point JSON, @file, or - for stdin");
  laplacian->add_option("--params", params, "Laplacian parameters A,B");
  add_tol(laplacian);

  auto* decompose = app.add_subcommand("decompose", "Harish-Chandra components and kappa_*");
  decompose->add_option("--element", element, "G_*^J element JSON")->required();
  decompose->add_option("--input", input, "Disk point JSON, @file, or - for stdin");
  add_tol(decompose);

  auto* jfactor = app.add_subcommand("jfactor", "Evaluate the canonical automorphic factor");
  std::string index_matrix;
  std::string rep = "det:1";
  jfactor->add_option("--index-matrix", index_matrix, "Real symmetric h x h JSON (default 0)");
  jfactor->add_option("--rep", rep, "det:k | std");
  jfactor->add_option("--element", element, "G_*^J element JSON")->required();
  jfactor->add_option("--input", input, "Disk point JSON, @file, or - for stdin");
  add_tol(jfactor);

  auto* verify = app.add_subcommand("verify", "Run a property-verification suite");
  std::string suite;
  int trials = 100;
  int threads = 1;
  verify->add_option("--suite", suite, "group-axioms | theta-hom | compat-29 | compat-37 | "
                                       "hc-reconstruct | metric-invariance | laplacian-invariance | "
                                       "cocycle | volume-invariance | all")
      ->required();
  verify->add_option("--g", g)->check(CLI::PositiveNumber);
  verify->add_option("--h", h)->check(CLI::PositiveNumber);
  verify->add_option("--trials", trials)->check(CLI::PositiveNumber);
  verify->add_option("--seed", seed);
  verify->add_option("--tol", tol, "Override every per-check tolerance")->check(CLI::PositiveNumber);
  verify->add_option("--threads", threads, "Worker threads (0 = all cores)")
      ->check(CLI::NonNegativeNumber);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  Context ctx(sjk_context_create());
  if (!ctx) {
    std::cerr << "error: cannot create context\n";
    return 1;
  }

  try {
    if (tol > 0 && !verify->parsed()) {
      const sjk_status st = sjk_context_set_tolerance(ctx.get(), tol, -1, -1, -1);
      if (st != SJK_OK) return finish(ctx.get(), st, nullptr);
    }
    char* out = nullptr;
    sjk_status st = SJK_OK;
    if (transform->parsed()) {
      const std::string in = read_input(input);
      st = sjk_cmd_transform(ctx.get(), map.c_str(), in.c_str(),
                             element.empty() ? nullptr : element.c_str(), &out);
    } else if (sample->parsed()) {
      st = sjk_cmd_sample(ctx.get(), kind.c_str(), g, h, seed, scale, &out);
    } else if (metric->parsed()) {
      const auto [a, b] = parse_params(params);
      const std::string in = read_input(input);
      st = sjk_cmd_metric(ctx.get(), space.c_str(), in.c_str(), a, b, &out);
    } else if (laplacian->parsed()) {
      const auto [a, b] = parse_params(params);
      const std::string in = read_input(input);
      st = sjk_cmd_laplacian(ctx.get(), space.c_str(), field.c_str(), in.c_str(), a, b, &out);
    } else if (decompose->parsed()) {
      const std::string in = read_input(input);
      st = sjk_cmd_decompose(ctx.get(), element.c_str(), in.c_str(), &out);
    } else if (jfactor->parsed()) {
      const std::string in = read_input(input);
      st = sjk_cmd_jfactor(ctx.get(), index_matrix.empty() ? nullptr : index_matrix.c_str(),
                           rep.c_str(), element.c_str(), in.c_str(), &out);
    } else if (verify->parsed()) {
      const sjk_verify_options o{suite.c_str(), g, h, trials, seed, tol, threads};
      st = sjk_cmd_verify(ctx.get(), &o, &out);
    }
    return finish(ctx.get(), st, out);
  } catch (const UsageError& e) {
    std::cerr << "error (usage): " << e.what() << '\n';
    return kUsage;
  }
}
