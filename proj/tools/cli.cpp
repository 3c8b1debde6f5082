#include "cli.hpp"

#include <CLI11.hpp>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "shapewalk/diffusivity.hpp"
#include "shapewalk/errors.hpp"
#include "shapewalk/hodge.hpp"
#include "shapewalk/io.hpp"
#include "shapewalk/potentials.hpp"
#include "shapewalk/verification.hpp"

namespace shapewalk::cli {
namespace {

struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

std::string format_name(Format f) {
  switch (f) {
    case Format::json: return "json";
    case Format::csv: return "csv";
    case Format::text: return "text";
  }
  return "json";
}

Json header(const CommandConfig& c, std::string_view command) {
  return Json{{"tool", "shapewalk"}, {"version", std::string(kVersion)}, {"command", command},
              {"k", c.k}};
}

void require_format(const CommandConfig& c, std::initializer_list<Format> allowed) {
  for (Format f : allowed) {
    if (c.format == f) return;
  }
  throw UsageError("format '" + format_name(c.format) + "' is not available for this command");
}

std::string run_graph(const CommandConfig& c) {
  require_format(c, {Format::json, Format::text});
  check_order(c.k, kDefaultMaxOrder);
  const ShapeGraph g = build_graph(c.k);
  if (c.format == Format::text) {
    std::ostringstream os;
    os << "k " << g.order() << "\nvertices " << g.vertex_count() << "\nd_k "
       << g.total_directed_edges() << "\ndelta_k " << g.crossing_count() << '\n';
    return os.str();
  }
  Json doc = header(c, "graph");
  doc.update(graph_to_json(g));
  return doc.dump(2) + "\n";
}

template <class T>
std::string hodge_document(const CommandConfig& c, const ShapeGraph& g,
                           const HodgeDecomposition<T>& h) {
  if (c.format == Format::text) {
    const auto a = field_A<T>(g);
    std::ostringstream os;
    os << "k " << g.order() << "\nmode " << mode_name(c.mode) << "\n<A,grad f> "
       << scalar_to_json(inner_product(a, h.gradient)).dump() << "\n||B||^2 "
       << scalar_to_json(inner_product(h.divergence_free, h.divergence_free)).dump()
       << "\nmax |div B| " << h.divergence_residual << '\n';
    return os.str();
  }
  Json doc = header(c, "hodge");
  doc.update(hodge_to_json(g, h));
  return doc.dump(2) + "\n";
}

std::string run_hodge(const CommandConfig& c) {
  check_order(c.k, kDefaultMaxOrder);
  const ShapeGraph g = build_graph(c.k);
  if (c.mode == Mode::exact) {
    const auto h = hodge_decompose(g, field_A<Rational>(g));
    if (c.format == Format::csv) return potential_table_csv(g, h.potential);
    return hodge_document(c, g, h);
  }
  if (c.format == Format::csv) throw UsageError("csv tables are exact-mode only");
  return hodge_document(c, g, hodge_decompose(g, field_A<double>(g)));
}

std::string run_sigma(const CommandConfig& c) {
  require_format(c, {Format::json, Format::text});
  const bool graph_feasible =
      c.mode == Mode::exact ? c.k <= kDefaultExactOrder : c.k <= kDefaultMaxOrder;
  const bool use_graph = c.method == SigmaMethod::graph ||
                         (c.method == SigmaMethod::automatic && graph_feasible);

  Json doc = header(c, "sigma");
  doc["mode"] = std::string(mode_name(c.mode));
  std::string exact_text;
  std::string decimal_text;
  if (!use_graph) {
    const Rational s = sigma_squared_closed_form(c.k);
    doc["method"] = "closed_form";
    exact_text = to_exact_string(s);
    decimal_text = to_decimal_string(s);
    doc["sigma2"] = exact_text;
    doc["decimal"] = decimal_text;
  } else if (c.mode == Mode::exact) {
    const DiffusivityReport r = sigma_squared_exact(c.k);
    doc["method"] = "graph";
    exact_text = to_exact_string(r.sigma2);
    decimal_text = to_decimal_string(r.sigma2);
    doc["sigma2"] = exact_text;
    doc["decimal"] = decimal_text;
    doc["a_dot_grad"] = to_exact_string(r.a_dot_grad);
    doc["b_norm2"] = to_exact_string(r.b_norm2);
  } else {
    check_order(c.k, kDefaultMaxOrder);
    const ShapeGraph g = build_graph(c.k);
    const auto a = field_A<double>(g);
    const auto h = hodge_decompose(g, a);
    const double a_dot_grad = inner_product(a, h.gradient);
    std::ostringstream os;
    os.precision(12);
    os << 1.0 - a_dot_grad;
    doc["method"] = "graph";
    decimal_text = os.str();
    doc["sigma2"] = 1.0 - a_dot_grad;
    doc["decimal"] = decimal_text;
    doc["a_dot_grad"] = a_dot_grad;
    doc["b_norm2"] = inner_product(h.divergence_free, h.divergence_free);
  }
  if (c.format == Format::text) {
    return (exact_text.empty() ? "" : exact_text + " ") + decimal_text + "\n";
  }
  return doc.dump(2) + "\n";
}

std::string run_simulate(const CommandConfig& c) {
  check_order(c.k, kDefaultMaxOrder);
  const ShapeGraph g = build_graph(c.k);
  if (c.trajectory) {
    require_format(c, {Format::csv, Format::json});
    const Trajectory t = simulate_trajectory(g, c.steps, c.seed, c.representation);
    if (c.format == Format::csv) return trajectory_to_csv(t);
    Json doc = header(c, "simulate");
    doc["seed"] = c.seed;
    doc["representation"] = std::string(representation_name(c.representation));
    Json points = Json::array();
    for (const TrajectoryPoint& p : t.points) {
      points.push_back(Json{{"step", p.step}, {"height", p.height}, {"shape", p.shape.to_string()}});
    }
    doc["trajectory"] = std::move(points);
    return doc.dump(2) + "\n";
  }
  require_format(c, {Format::json, Format::text});
  const SimEstimate e = estimate_sigma2(g, c.steps, c.trials, c.seed, c.threads);
  const double target = sigma_squared_closed_form(c.k).get_d();
  if (c.format == Format::text) {
    std::ostringstream os;
    os.precision(12);
    os << "k " << e.k << "\nseed " << e.seed << "\nestimate " << e.point_estimate << "\nstd_error "
       << e.std_error << "\ntarget " << target << '\n';
    return os.str();
  }
  Json doc = header(c, "simulate");
  doc.update(estimate_to_json(e, c.timing));
  doc["target"] = target;
  doc["z_score"] = (e.point_estimate - target) / e.std_error;
  return doc.dump(2) + "\n";
}

std::string run_verify(const CommandConfig& c, bool& all_passed) {
  require_format(c, {Format::json, Format::text});
  if (c.k_max < 1) throw UsageError("--k-max must be at least 1");
  const auto results = run_verification(VerifyOptions{c.k_max, c.seed});
  all_passed = true;
  for (const auto& r : results) all_passed = all_passed && r.passed;
  if (c.format == Format::text) {
    std::ostringstream os;
    for (const auto& r : results) {
      os << (r.passed ? "PASS " : "FAIL ") << r.name << "  " << r.detail << '\n';
    }
    os << (all_passed ? "all checks passed" : "some checks FAILED") << '\n';
    return os.str();
  }
  Json doc{{"tool", "shapewalk"}, {"version", std::string(kVersion)}, {"command", "verify"},
           {"k_max", c.k_max}, {"seed", c.seed}, {"passed", all_passed}};
  Json checks = Json::array();
  for (const auto& r : results) {
    checks.push_back(Json{{"name", r.name}, {"passed", r.passed}, {"detail", r.detail}});
  }
  doc["checks"] = std::move(checks);
  return doc.dump(2) + "\n";
}

std::filesystem::path resolve_output(const std::string& path) {
  std::filesystem::path p(path);
  if (p.is_relative()) {
    if (const char* dir = std::getenv(kOutputDirEnv); dir != nullptr && *dir != '\0') {
      p = std::filesystem::path(dir) / p;
    }
  }
  return p;
}

}  // namespace

std::optional<CommandConfig> parse(const std::vector<std::string>& args, std::ostream& out,
                                   std::ostream& err, int& exit_code) {
  CommandConfig c;
  CLI::App app{"Shape multigraph, Hodge decomposition and diffusivity of constrained walkers",
               "shapewalk"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(kVersion));

  const std::map<std::string, Format> formats{
      {"json", Format::json}, {"csv", Format::csv}, {"text", Format::text}};
  const std::map<std::string, Mode> modes{{"exact", Mode::exact}, {"float", Mode::floating}};

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--format", c.format, "Output format: json, csv or text")
        ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
    sub->add_option("-o,--output", c.output, "Write the document to this file");
  };
  auto add_k = [&](CLI::App* sub) {
    sub->add_option("-k,--k", c.k, "Graph order K (number of walkers minus one)")
        ->required()
        ->check(CLI::PositiveNumber);
  };

  auto* graph = app.add_subcommand("graph", "Dump the multigraph G_K");
  add_k(graph);
  add_common(graph);

  auto* hodge = app.add_subcommand("hodge", "Hodge decomposition of the step field A");
  add_k(hodge);
  add_common(hodge);
  hodge->add_option("--mode", c.mode, "exact or float")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));

  auto* sigma = app.add_subcommand("sigma", "Limit variance of the first walker");
  add_k(sigma);
  add_common(sigma);
  sigma->add_option("--mode", c.mode, "exact or float")
      ->transform(CLI::CheckedTransformer(modes, CLI::ignore_case));
  const std::map<std::string, SigmaMethod> methods{{"auto", SigmaMethod::automatic},
                                                   {"graph", SigmaMethod::graph},
                                                   {"closed-form", SigmaMethod::closed_form}};
  sigma->add_option("--method", c.method, "auto, graph or closed-form")
      ->transform(CLI::CheckedTransformer(methods, CLI::ignore_case));

  auto* simulate = app.add_subcommand("simulate", "Monte Carlo estimate of the limit variance");
  add_k(simulate);
  add_common(simulate);
  simulate->add_option("--steps", c.steps, "Steps per trial")->check(CLI::PositiveNumber);
  simulate->add_option("--trials", c.trials, "Independent trials")->check(CLI::Range(std::int64_t{2}, std::int64_t{1} << 40));
  simulate->add_option("--seed", c.seed, "Master seed");
  simulate->add_option("--threads", c.threads, "Worker threads (0 = all cores)");
  simulate->add_flag("--trajectory", c.trajectory, "Emit one trajectory instead of an estimate");
  simulate->add_flag("--timing", c.timing, "Include elapsed wall time in the estimate");
  const std::map<std::string, Representation> reps{{"graph", Representation::graph},
                                                   {"walker", Representation::walker}};
  simulate->add_option("--representation", c.representation, "graph or walker (trajectories)")
      ->transform(CLI::CheckedTransformer(reps, CLI::ignore_case));

  auto* verify = app.add_subcommand("verify", "Run the invariant suite");
  add_common(verify);
  verify->add_option("--k-max", c.k_max, "Largest K exercised")->check(CLI::PositiveNumber);
  verify->add_option("--seed", c.seed, "Seed for randomized checks");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    exit_code = app.exit(e, out, err);
    if (exit_code != 0) exit_code = kExitUsage;
    return std::nullopt;
  }

  if (graph->parsed()) c.subcommand = Subcommand::graph;
  if (hodge->parsed()) c.subcommand = Subcommand::hodge;
  if (sigma->parsed()) c.subcommand = Subcommand::sigma;
  if (simulate->parsed()) c.subcommand = Subcommand::simulate;
  if (verify->parsed()) {
    c.subcommand = Subcommand::verify;
    if (verify->count("--format") == 0) c.format = Format::text;
  }
  exit_code = kExitOk;
  return c;
}

int run(const CommandConfig& c, std::ostream& out, std::ostream& err) {
  std::string document;
  int status = kExitOk;
  try {
    switch (c.subcommand) {
      case Subcommand::graph: document = run_graph(c); break;
      case Subcommand::hodge: document = run_hodge(c); break;
      case Subcommand::sigma: document = run_sigma(c); break;
      case Subcommand::simulate: document = run_simulate(c); break;
      case Subcommand::verify: {
        bool passed = false;
        document = run_verify(c, passed);
        status = passed ? kExitOk : kExitFailure;
        break;
      }
    }
  } catch (const UsageError& e) {
    err << "shapewalk: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CapacityError& e) {
    err << "shapewalk: " << e.what() << '\n';
    return kExitCapacity;
  } catch (const std::exception& e) {
    err << "shapewalk: " << e.what() << '\n';
    return kExitFailure;
  }

  if (c.output) {
    const auto path = resolve_output(*c.output);
    std::ofstream file(path, std::ios::binary);
    if (!file) {
      err << "shapewalk: cannot open " << path << '\n';
      return kExitFailure;
    }
    file << document;
  } else {
    out << document;
  }
  return status;
}

int main(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  int exit_code = kExitOk;
  const auto config = parse(args, out, err, exit_code);
  if (!config) return exit_code;
  return run(*config, out, err);
}

}  // namespace shapewalk::cli
