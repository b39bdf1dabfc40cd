// Command-line harness: configuration generation, evaluation, sweeps,
// theorem audits, and annealing runs. JSON is the canonical interchange
// format; CSV is a lossy convenience view.

#include <cstdint>
#include <exception>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "heilbronn/anneal.hpp"
#include "heilbronn/audit.hpp"
#include "heilbronn/generators.hpp"
#include "heilbronn/min_area.hpp"
#include "heilbronn/serialize.hpp"

namespace {

using namespace heilbronn;

struct SweepRange {
  std::vector<int> values;
};

// lo:hi:*k (geometric) or lo:hi:+k (arithmetic); step defaults to *2.
SweepRange parse_range(const std::string& text) {
  SweepRange range;
  const auto c1 = text.find(':');
  if (c1 == std::string::npos) throw precondition_error("range must look like lo:hi[:*k|:+k]");
  const auto c2 = text.find(':', c1 + 1);
  const int lo = std::stoi(text.substr(0, c1));
  const int hi = std::stoi(text.substr(c1 + 1, c2 == std::string::npos ? std::string::npos
                                                                       : c2 - c1 - 1));
  std::string step = c2 == std::string::npos ? "*2" : text.substr(c2 + 1);
  if (lo < 3 || lo > hi) throw precondition_error("range bounds must satisfy 3 <= lo <= hi");
  if (step.size() < 2 || (step[0] != '*' && step[0] != '+'))
    throw precondition_error("range step must be *k or +k");
  const int k = std::stoi(step.substr(1));
  if (step[0] == '*') {
    if (k < 2) throw precondition_error("geometric step must be >= 2");
    for (long v = lo; v <= hi; v *= k) range.values.push_back(static_cast<int>(v));
  } else {
    if (k < 1) throw precondition_error("arithmetic step must be >= 1");
    for (long v = lo; v <= hi; v += k) range.values.push_back(static_cast<int>(v));
  }
  return range;
}

struct GeneratorArgs {
  std::string name = "paper";
  std::uint64_t seed = 1;
  double delta = 1e-6;
  double epsilon = 0.0;
  double r = 1.0;
  double m_override = 0.0;  // 0 keeps the derived scale
};

Configuration make_configuration(const GeneratorArgs& args, int s) {
  if (args.name == "paper") {
    int effective = s;
    if ((effective - 3) % 2 != 0) {
      ++effective;
      std::cerr << "note: paper construction needs s-3 even; using s=" << effective << "\n";
    }
    return construct_configuration(effective, args.epsilon, args.delta, args.m_override);
  }
  if (args.name == "random") return random_disc(s, args.seed);
  if (args.name == "grid") return grid_disc(s);
  if (args.name == "circle") return circle_equispaced(s, args.r);
  throw precondition_error("unknown generator: " + args.name +
                           " (expected paper|random|grid|circle)");
}

void emit(const std::string& content, const std::string& out_path) {
  if (out_path.empty()) {
    std::cout << content;
    if (!content.empty() && content.back() != '\n') std::cout << '\n';
  } else {
    atomic_write_file(out_path, content);
  }
}

int run_generate(const GeneratorArgs& gen, int s, const std::string& format,
                 const std::string& out_path) {
  const Configuration config = make_configuration(gen, s);
  if (format == "csv") {
    emit(to_csv(config), out_path);
  } else {
    emit(to_json(config).dump(2) + "\n", out_path);
  }
  return 0;
}

int run_evaluate(const std::string& in_path, const std::string& format,
                 const std::string& out_path) {
  const Configuration config = configuration_from_json(read_json_file(in_path));
  const EvaluationReport report = min_triangle_area(config);
  if (format == "csv") {
    emit(evaluation_csv_header() + "\n" + to_csv_row(report) + "\n", out_path);
  } else {
    emit(to_json(report).dump(2) + "\n", out_path);
  }
  return 0;
}

int run_sweep(const GeneratorArgs& gen, const std::string& range_text,
              const std::string& out_path) {
  const SweepRange range = parse_range(range_text);
  std::string csv = evaluation_csv_header() + ",min_center_tri,min_circle_only\n";
  std::vector<std::pair<double, double>> all_samples;
  std::vector<std::pair<double, double>> center_samples;
  std::vector<std::pair<double, double>> circle_samples;
  int last_s = -1;
  for (int s : range.values) {
    const Configuration config = make_configuration(gen, s);
    if (config.s() == last_s) continue;  // parity round-up collision
    last_s = config.s();
    const EvaluationReport report = min_triangle_area(config);
    all_samples.emplace_back(report.s, report.min_area);
    std::string extra = ",,";
    if (config.provenance.kind == Provenance::Kind::PaperConstruction) {
      // center is the last point by construction
      const double center_min = min_area_through_point(config, config.s() - 1);
      Configuration circle_only = config;
      circle_only.points.pop_back();
      const double circle_min = min_triangle_area(circle_only).min_area;
      center_samples.emplace_back(report.s, center_min);
      circle_samples.emplace_back(report.s, circle_min);
      extra = "," + detail::fmt_double(center_min) + "," + detail::fmt_double(circle_min);
    }
    csv += to_csv_row(report) + extra + "\n";
  }

  auto summarize = [&](const char* label, const std::vector<std::pair<double, double>>& data) {
    std::string line = std::string("# decay_exponent_") + label + "=";
    try {
      const DecayFit fit = decay_exponent(data);
      line += detail::fmt_double(fit.slope);
      if (!fit.excluded.empty()) {
        line += " excluded=";
        for (int idx : fit.excluded) line += std::to_string(idx) + ";";
      }
    } catch (const std::exception& e) {
      line += std::string("unavailable (") + e.what() + ")";
    }
    csv += line + "\n";
    std::cout << line << "\n";
  };
  summarize("min_area", all_samples);
  if (!center_samples.empty()) summarize("center_tri", center_samples);
  if (!circle_samples.empty()) summarize("circle_only", circle_samples);

  emit(csv, out_path);
  return 0;
}

int run_validate_claims(std::uint64_t samples, std::uint64_t trials, std::uint64_t inner_samples,
                        std::uint64_t points, std::uint64_t seed, const std::string& out_path) {
  json records = json::array();
  records.push_back(to_json(audit_decider_integer(samples, seed)));
  records.push_back(to_json(audit_decider_real(samples, seed + 1)));
  records.push_back(to_json(audit_nesting(trials, inner_samples, seed + 2)));
  records.push_back(to_json(audit_admissible(points, seed + 3)));
  emit(records.dump(2) + "\n", out_path);
  return 0;
}

int run_optimize(int s, const AnnealParams& params, const std::string& out_path,
                 const std::string& report_path, const std::string& trace_path) {
  const AnnealResult result = optimize(s, params);
  if (!out_path.empty()) atomic_write_file(out_path, to_json(result.config).dump(2) + "\n");
  if (!trace_path.empty()) {
    std::string csv = "iteration,current_area,best_area,temperature\n";
    for (const auto& t : result.trace)
      csv += std::to_string(t.iteration) + "," + detail::fmt_double(t.current_area) + "," +
             detail::fmt_double(t.best_area) + "," + detail::fmt_double(t.temperature) + "\n";
    atomic_write_file(trace_path, csv);
  }
  emit(to_json(result.report).dump(2) + "\n", report_path);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Heilbronn triangle lab: compression-based configurations, exact minimal-area "
               "evaluation, theorem audits, and a max-min annealing baseline"};
  app.require_subcommand(1);

  GeneratorArgs gen;
  int s = 9;
  std::string format = "json";
  std::string out_path;
  std::string in_path;
  std::string range_text;
  std::string report_path;
  std::string trace_path;
  std::uint64_t samples = 100000;
  std::uint64_t trials = 1000;
  std::uint64_t inner_samples = 200;
  std::uint64_t points = 1000;
  AnnealParams anneal;
  double initial_temp = 0.0;

  auto add_gen_flags = [&](CLI::App* cmd) {
    cmd->add_option("--generator", gen.name, "paper|random|grid|circle");
    cmd->add_option("--seed", gen.seed, "random generator seed");
    cmd->add_option("--delta", gen.delta, "coordinate-splitting offset (paper)");
    cmd->add_option("--epsilon", gen.epsilon, "informal epsilon (paper, recorded only)");
    cmd->add_option("--r", gen.r, "circle radius (circle generator)");
    cmd->add_option("--m", gen.m_override, "compression scale override (paper)");
  };

  auto* generate = app.add_subcommand("generate", "write a configuration file");
  add_gen_flags(generate);
  generate->add_option("--s", s, "number of points");
  generate->add_option("--format", format, "json|csv");
  generate->add_option("--out", out_path, "output path (stdout when omitted)");

  auto* evaluate = app.add_subcommand("evaluate", "evaluate a configuration file");
  evaluate->add_option("--in", in_path, "configuration JSON")->required();
  evaluate->add_option("--format", format, "json|csv");
  evaluate->add_option("--out", out_path, "output path (stdout when omitted)");

  auto* sweep = app.add_subcommand("sweep", "evaluate a generator over a range of s");
  add_gen_flags(sweep);
  sweep->add_option("--s", range_text, "range lo:hi:*k or lo:hi:+k")->required();
  sweep->add_option("--out", out_path, "CSV output path (stdout when omitted)");

  auto* validate = app.add_subcommand("validate-claims", "run the theorem audits");
  validate->add_option("--samples", samples, "decider sample count");
  validate->add_option("--trials", trials, "nesting trial count");
  validate->add_option("--inner-samples", inner_samples, "Monte Carlo samples per nesting trial");
  validate->add_option("--points", points, "admissible points to construct");
  validate->add_option("--seed", gen.seed, "audit seed");
  validate->add_option("--out", out_path, "JSON output path (stdout when omitted)");

  auto* opt = app.add_subcommand("optimize", "simulated annealing on the min triangle area");
  opt->add_option("--s", s, "number of points");
  opt->add_option("--seed", anneal.seed, "annealing seed");
  opt->add_option("--iterations", anneal.iterations, "iteration budget");
  opt->add_option("--cooling", anneal.cooling, "geometric cooling factor");
  opt->add_option("--step-scale", anneal.step_scale, "proposal step scale");
  opt->add_option("--initial-temp", initial_temp, "initial temperature (default 0.1/s^2)");
  opt->add_option("--restarts", anneal.restarts, "independent restarts");
  opt->add_option("--out", out_path, "best configuration JSON path");
  opt->add_option("--report", report_path, "evaluation report path (stdout when omitted)");
  opt->add_option("--trace", trace_path, "trace CSV path");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return e.get_exit_code() == 0 ? 0 : 1;
  }

  try {
    if (format != "json" && format != "csv")
      throw heilbronn::precondition_error("unknown format: " + format);
    if (generate->parsed()) return run_generate(gen, s, format, out_path);
    if (evaluate->parsed()) return run_evaluate(in_path, format, out_path);
    if (sweep->parsed()) return run_sweep(gen, range_text, out_path);
    if (validate->parsed())
      return run_validate_claims(samples, trials, inner_samples, points, gen.seed, out_path);
    if (opt->parsed()) {
      if (initial_temp > 0.0) anneal.initial_temp = initial_temp;
      return run_optimize(s, anneal, out_path, report_path, trace_path);
    }
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::runtime_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
