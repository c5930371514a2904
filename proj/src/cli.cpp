#include "orchard/cli.hpp"

#include <CLI11.hpp>
#include <iomanip>

#include "orchard/errors.hpp"
#include "orchard/io.hpp"
#include "orchard/operators.hpp"
#include "orchard/relation.hpp"
#include "orchard/svg.hpp"
#include "orchard/verify.hpp"

namespace orchard {

namespace {

struct GlobalFlags {
  std::string format = "signfn";
  std::uint64_t seed = 1;
  int trials = 200;
  bool verbose = false;
  bool unsafe = false;
};

std::pair<int, int> parse_range(const std::string& text, const char* what) {
  const auto dots = text.find("..");
  try {
    std::size_t used = 0;
    if (dots == std::string::npos) {
      const int v = std::stoi(text, &used);
      if (used == text.size()) return {v, v};
    } else {
      const int lo = std::stoi(text.substr(0, dots), &used);
      if (used == dots) {
        const std::string rest = text.substr(dots + 2);
        const int hi = std::stoi(rest, &used);
        if (used == rest.size()) return {lo, hi};
      }
    }
  } catch (const std::logic_error&) {
  }
  throw input_error(std::string("bad ") + what + " '" + text + "' (expected A..B or A)");
}

void emit(const std::string& path, std::string_view contents, std::ostream& out) {
  if (path.empty() || path == "-")
    out << contents;
  else
    io::write_file(path, contents);
}

int cmd_classify(const GlobalFlags& g, const std::string& input, std::ostream& out) {
  const std::string text = io::read_file(input);
  SignFunction f = [&] {
    if (g.format == "signfn") return io::read_signfn(text, input);
    if (g.format == "tournament") return tournament_to_signfn(io::read_tournament(text, input));
    return points_to_signfn(io::read_points(text, input));
  }();
  const auto profile = separation_profile(f);
  const auto p = partition(f, profile);
  io::Json j = io::to_json(p);
  if (g.verbose) {
    j["arity"] = f.arity();
    j["kind"] = std::string(to_string(f.kind()));
    j["threshold_parity"] = threshold_parity(f);
    io::Json counts = io::Json::array();
    for (int a = 1; a <= f.n(); ++a)
      for (int b = a + 1; b <= f.n(); ++b) {
        io::Json c;
        c["pair"] = {a, b};
        c["count"] = profile.count(a, b);
        counts.push_back(std::move(c));
      }
    j["separation_counts"] = std::move(counts);
  }
  out << io::dump(j);
  return kExitPass;
}

int cmd_verify(const GlobalFlags& g, const std::string& prop, const std::string& n_range,
               const std::string& d_range, const std::string& output, std::ostream& out,
               std::ostream& err) {
  VerifyOptions o;
  o.proposition = parse_proposition(prop);
  std::tie(o.n_min, o.n_max) = parse_range(n_range, "n range");
  std::tie(o.d_min, o.d_max) = parse_range(d_range, "d range");
  o.trials = g.trials;
  o.seed = g.seed;
  o.unsafe = g.unsafe;
  const auto report = verify(o);
  emit(output, to_json(report).dump(2) + "\n", out);
  err << to_string(report.proposition) << ": " << (report.passed() ? "pass" : "FAIL") << " ("
      << report.configurations.size() << " configurations, " << std::fixed
      << std::setprecision(3) << report.elapsed.count() << " s)\n";
  return report.passed() ? kExitPass : kExitFalsified;
}

int cmd_transform(const std::string& input, const std::string& op,
                  const std::vector<int>& flipset, const std::string& with,
                  const std::string& output, std::ostream& out, std::ostream& err) {
  const auto f = io::read_signfn(io::read_file(input), input);
  SignFunction g = [&] {
    if (op == "flip") {
      if (flipset.empty()) throw input_error("flip needs --flipset");
      std::vector<int> sorted = flipset;
      std::sort(sorted.begin(), sorted.end());
      return flip(f, Subset(f.n(), sorted));
    }
    if (op == "reduce") return reduce(f);
    if (op == "augment") return augment(f);
    if (with.empty()) throw input_error("product needs --with");
    return product(f, io::read_signfn(io::read_file(with), with));
  }();
  const bool to_stdout = output.empty() || output == "-";
  emit(output, io::dump(io::to_json(g)), out);
  (to_stdout ? err : out) << "kind: " << to_string(g.kind()) << "\n";
  return kExitPass;
}

int cmd_plot(const std::string& input, const std::string& output, std::ostream& out) {
  const auto config = io::read_points(io::read_file(input), input);
  if (config.dim() != 2) throw input_error("plot supports dim=2 only, got dim=" +
                                           std::to_string(config.dim()));
  const auto p = partition(points_to_signfn(config));
  emit(output, plot_svg(config, p), out);
  return kExitPass;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orchard relation toolkit: classify, verify, transform and plot."};
  app.name(args.empty() ? "orchard" : args[0]);
  app.require_subcommand(1);

  GlobalFlags g;
  app.add_option("--format", g.format, "Input format for classify")
      ->check(CLI::IsMember({"signfn", "tournament", "points"}));
  app.add_option("--seed", g.seed, "Seed for verification sweeps");
  app.add_option("--trials", g.trials, "Trials per configuration");
  app.add_flag("--verbose", g.verbose, "Print separation counts with classify");
  app.add_flag("--unsafe", g.unsafe, "Lift the desk-scale guardrails");
  app.fallthrough();

  std::string input, output, op, with, prop, n_range = "4..8", d_range = "1..3";
  std::vector<int> flipset;

  auto* classify = app.add_subcommand("classify", "Print the orchard partition of an input file");
  classify->add_option("input", input, "Input file")->required();

  auto* verify_cmd = app.add_subcommand("verify", "Run a randomized verification sweep");
  verify_cmd->add_option("--prop", prop, "Proposition id")->required();
  verify_cmd->add_option("--n-range", n_range, "Ground-set sizes, A..B");
  verify_cmd->add_option("--d-range", d_range, "Values of d = arity - 1, A..B");
  verify_cmd->add_option("-o,--output", output, "Report path (default stdout)");

  auto* transform = app.add_subcommand("transform", "Apply flip, reduce, augment or product");
  transform->add_option("input", input, "Sign function file")->required();
  transform->add_option("--op", op, "Operation")
      ->required()
      ->check(CLI::IsMember({"flip", "reduce", "augment", "product"}));
  transform->add_option("--flipset", flipset, "Elements of the flipset")->delimiter(',');
  transform->add_option("--with", with, "Second sign function for product");
  transform->add_option("-o,--output", output, "Output path (default stdout)");

  auto* plot = app.add_subcommand("plot", "Write an SVG of a 2D point configuration");
  plot->add_option("input", input, "Points CSV")->required();
  plot->add_option("-o,--output", output, "SVG path (default stdout)");

  std::vector<std::string> rest(args.rbegin(), args.rend() - (args.empty() ? 0 : 1));
  try {
    app.parse(rest);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitPass;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitPass;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (classify->parsed()) return cmd_classify(g, input, out);
    if (verify_cmd->parsed()) return cmd_verify(g, prop, n_range, d_range, output, out, err);
    if (transform->parsed()) return cmd_transform(input, op, flipset, with, output, out, err);
    if (plot->parsed()) return cmd_plot(input, output, out);
  } catch (const degeneracy_error& e) {
    err << "error: degenerate configuration: " << e.what() << "\n";
    return kExitUsage;
  } catch (const unsupported_configuration& e) {
    err << "error: unsupported configuration: " << e.what() << "\n";
    return kExitUsage;
  } catch (const input_error& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace orchard
