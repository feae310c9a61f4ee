#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "strictrank/confspace.hpp"
#include "strictrank/consistency.hpp"
#include "strictrank/error.hpp"
#include "strictrank/harness.hpp"
#include "strictrank/io.hpp"
#include "strictrank/phi.hpp"
#include "strictrank/projection.hpp"
#include "strictrank/ranking.hpp"

namespace strictrank::cli {

namespace {

using nlohmann::json;

struct GlobalOptions {
  std::string input = "-";
  std::string format = "json";
  std::string output = "text";
  std::string indicator = "smooth";
  double tol = 1e-9;
  double tie_tol = 0.0;
  double reciprocity_tol = 1e-9;
};

struct MinimizeOptions {
  int max_iters = 10000;
  double phi_tol = 1e-8;
  double grad_tol = 1e-10;
  double max_step = 0.05;
  std::string trace;
};

struct SimulateOptions {
  std::size_t n = 3;
  std::uint64_t trials = 10000;
  double spread = 2.0;
  std::uint64_t seed = 1;
  unsigned workers = 0;
};

struct ConfspaceOptions {
  std::vector<double> epsilons{1e-2, 1e-3, 1e-4};
  std::size_t samples = 10000;
};

// Usage problems discovered after parsing (unreadable input file etc.).
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

IndicatorKind indicator_of(const GlobalOptions& g) {
  // Validated by CLI11's IsMember check.
  return *parse_indicator(g.indicator);
}

PCMatrix load_matrix(const GlobalOptions& g, std::istream& in) {
  const auto format = g.format == "csv" ? io::MatrixFormat::Csv : io::MatrixFormat::Json;
  const RawMatrixOptions options{g.reciprocity_tol, 1e-9};
  if (g.input == "-") return io::read_matrix(in, format, options);
  std::ifstream file(g.input);
  if (!file) throw UsageError("cannot open input file '" + g.input + "'");
  return io::read_matrix(file, format, options);
}

void print_text(std::ostream& out, const json& doc, const std::string& prefix = "") {
  if (!doc.is_object()) {
    out << doc.dump() << '\n';
    return;
  }
  for (const auto& [key, value] : doc.items()) {
    if (value.is_object()) {
      print_text(out, value, prefix + key + ".");
    } else {
      out << prefix << key << ": " << value.dump() << '\n';
    }
  }
}

void emit(std::ostream& out, const GlobalOptions& g, const json& doc) {
  if (g.output == "json") {
    out << doc.dump(2) << '\n';
  } else {
    print_text(out, doc);
  }
}

json error_json(const Error& e) {
  json doc = {{"error", to_string(e.kind())}, {"message", e.what()}};
  if (e.row()) doc["row"] = *e.row();
  if (e.col()) doc["col"] = *e.col();
  if (e.value()) doc["value"] = *e.value();
  return doc;
}

int cmd_check(const GlobalOptions& g, std::istream& in, std::ostream& out) {
  const PCMatrix a = load_matrix(g, in);
  const double deviation = max_triad_deviation(a);
  json doc = {{"n", a.size()},
              {"consistent", deviation <= g.tol},
              {"max_triad_deviation", deviation},
              {"indicators", {{"koczkodaj", koczkodaj_index(a)}, {"smooth", smooth_index(a)}}},
              {"r_condition", satisfies_r_condition(a, g.tie_tol)},
              {"admissible", is_admissible_locus(a, g.tie_tol)}};
  emit(out, g, doc);
  return kOk;
}

int cmd_rank(const GlobalOptions& g, std::istream& in, std::ostream& out) {
  const PCMatrix a = load_matrix(g, in);
  const auto c = characteristic_matrix(a, g.tie_tol);
  std::optional<Ranking> ranking;
  std::optional<Error> failure;
  try {
    ranking = ranking_from_matrix(a, g.tol, g.tie_tol);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotAdmissible) throw;
    failure = e;
  }
  emit(out, g, ranking_json(ranking, c));
  if (failure) throw *failure;
  return kOk;
}

int cmd_consistencize(const GlobalOptions& g, bool with_report, std::istream& in,
                      std::ostream& out) {
  const PCMatrix a = load_matrix(g, in);
  const PCMatrix b = consistencize(a);
  if (!with_report) {
    if (g.output == "json") {
      out << io::matrix_to_json(b).dump(2) << '\n';
    } else {
      out << io::matrix_to_csv(b);
    }
    return kOk;
  }
  json doc = {{"matrix", io::matrix_to_json(b)},
              {"report", to_json(locus_change_report(a, b, g.tie_tol))}};
  emit(out, g, doc);
  return kOk;
}

int cmd_minimize(const GlobalOptions& g, const MinimizeOptions& m, std::istream& in,
                 std::ostream& out) {
  const PCMatrix a = load_matrix(g, in);
  PhiConfig cfg;
  cfg.indicator = indicator_of(g);
  cfg.max_iters = m.max_iters;
  cfg.phi_tol = m.phi_tol;
  cfg.grad_tol = m.grad_tol;
  cfg.max_step = m.max_step;
  cfg.consistency_tol = g.tol;
  cfg.record_iterates = !m.trace.empty();
  const PhiTrajectory trajectory = minimize_phi(a, cfg);
  if (!m.trace.empty()) {
    std::ofstream trace(m.trace);
    if (!trace) throw UsageError("cannot open trace file '" + m.trace + "'");
    write_trace(trace, trajectory);
  }
  json doc = {{"matrix", io::matrix_to_json(trajectory.final)},
              {"summary", summary_json(trajectory)},
              {"r_condition", satisfies_r_condition(trajectory.final, cfg.guard_eps)}};
  emit(out, g, doc);
  return kOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::istream& in, std::ostream& out,
        std::ostream& err) {
  GlobalOptions g;
  MinimizeOptions mopt;
  SimulateOptions sopt;
  ConfspaceOptions copt;
  std::size_t loci_n = 3;
  bool with_report = false;

  CLI::App app{"Strict ranking from pairwise comparisons matrices", "strictrank"};
  app.require_subcommand(1, 1);
  app.fallthrough();
  app.add_option("--input", g.input, "Matrix file, '-' for stdin")->capture_default_str();
  app.add_option("--format", g.format, "Input matrix format")
      ->check(CLI::IsMember({"json", "csv"}))
      ->capture_default_str();
  app.add_option("--output", g.output, "Output style")
      ->check(CLI::IsMember({"text", "json"}))
      ->capture_default_str();
  app.add_option("--indicator", g.indicator, "Inconsistency indicator")
      ->check(CLI::IsMember({"koczkodaj", "smooth"}))
      ->capture_default_str();
  app.add_option("--tol", g.tol, "Consistency tolerance on max triad deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--tie-tol", g.tie_tol, "R-condition tie tolerance on |ln a_ij|")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  app.add_option("--reciprocity-tol", g.reciprocity_tol,
                 "Accepted |a_ji * a_ij - 1| for dense input")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();

  auto* check = app.add_subcommand("check", "Consistency, indicators, R-condition, admissibility");
  auto* rank = app.add_subcommand("rank", "Strict ranking from an admissible locus");
  auto* cons = app.add_subcommand("consistencize", "Orthogonal projection in log space");
  cons->add_flag("--report", with_report, "Emit the locus change report");
  auto* mini = app.add_subcommand("minimize", "Gradient descent on the Phi functional");
  mini->add_option("--max-iters", mopt.max_iters)->check(CLI::PositiveNumber)->capture_default_str();
  mini->add_option("--phi-tol", mopt.phi_tol)->check(CLI::PositiveNumber)->capture_default_str();
  mini->add_option("--grad-tol", mopt.grad_tol)->check(CLI::PositiveNumber)->capture_default_str();
  mini->add_option("--max-step", mopt.max_step)->check(CLI::PositiveNumber)->capture_default_str();
  mini->add_option("--trace", mopt.trace, "Write the trajectory as JSON lines");
  auto* loci = app.add_subcommand("loci", "Count admissible sign patterns");
  loci->add_option("--n", loci_n)->capture_default_str();
  auto* sim = app.add_subcommand("simulate", "Monte-Carlo instability study");
  sim->add_option("--n", sopt.n)->capture_default_str();
  sim->add_option("--trials", sopt.trials)->capture_default_str();
  sim->add_option("--spread", sopt.spread)->check(CLI::NonNegativeNumber)->capture_default_str();
  sim->add_option("--seed", sopt.seed)->capture_default_str();
  sim->add_option("--workers", sopt.workers, "0 = hardware concurrency")->capture_default_str();
  auto* conf = app.add_subcommand("confspace-demo", "Collision path length table");
  conf->add_option("--epsilon", copt.epsilons, "Truncation distances (repeatable)")
      ->check(CLI::PositiveNumber);
  conf->add_option("--samples", copt.samples)->capture_default_str();

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  }

  try {
    if (check->parsed()) return cmd_check(g, in, out);
    if (rank->parsed()) return cmd_rank(g, in, out);
    if (cons->parsed()) return cmd_consistencize(g, with_report, in, out);
    if (mini->parsed()) return cmd_minimize(g, mopt, in, out);
    if (loci->parsed()) {
      emit(out, g, to_json(enumerate_loci(loci_n)));
      return kOk;
    }
    if (sim->parsed()) {
      const auto stats = harness::instability_experiment(sopt.n, sopt.trials, sopt.spread,
                                                         sopt.seed, sopt.workers);
      emit(out, g, harness::to_json(stats));
      return kOk;
    }
    if (conf->parsed()) {
      const auto table = confspace::collision_length_table(copt.epsilons, copt.samples);
      emit(out, g, confspace::to_json(table, copt.samples));
      return kOk;
    }
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kUsageError;
  } catch (const Error& e) {
    if (g.output == "json") {
      err << error_json(e).dump() << '\n';
    } else {
      err << "error (" << to_string(e.kind()) << "): " << e.what() << '\n';
    }
    return kDomainError;
  }
  return kUsageError;
}

int run(int argc, const char* const* argv, std::istream& in, std::ostream& out,
        std::ostream& err) {
  std::vector<std::string> args;
  for (int k = 1; k < argc; ++k) args.emplace_back(argv[k]);
  return run(args, in, out, err);
}

}  // namespace strictrank::cli
