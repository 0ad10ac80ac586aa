// Command-line front end: each subcommand loads an optional preset and/or
// config file, then writes CSV (and JSON) tables into the output directory.
#include <cstdio>
#include <exception>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "jctriangle/config.hpp"
#include "jctriangle/errors.hpp"
#include "jctriangle/params.hpp"
#include "jctriangle/presets.hpp"
#include "jctriangle/runner.hpp"
#include "jctriangle/version.hpp"

namespace {

struct SubArgs {
  std::string config_path;
  std::string out_dir;
  std::string preset;
  int threads = 0;  // 0 = not given
};

std::string json_escape(const std::string& s) {
  std::string out;
  out.reserve(s.size() + 8);
  for (char c : s) {
    switch (c) {
      case '"': out += "\\\""; break;
      case '\\': out += "\\\\"; break;
      case '\n': out += "\\n"; break;
      case '\t': out += "\\t"; break;
      case '\r': out += "\\r"; break;
      default: out += c;
    }
  }
  return out;
}

void print_error(const char* type, const std::string& message) {
  std::fprintf(stderr, "{\"error\":{\"type\":\"%s\",\"message\":\"%s\"}}\n", type,
               json_escape(message).c_str());
}

int run_subcommand(const std::string& name, const SubArgs& args) {
  jct::RunConfig cfg = jct::load_config(name, args.preset, args.config_path);
  if (!args.out_dir.empty()) cfg.out_dir = args.out_dir;
  if (args.threads > 0) cfg.threads = args.threads;

  for (const auto& warning : jct::validate(cfg.model))
    std::fprintf(stderr, "warning: %s\n", warning.c_str());

  const jct::RunResult result = jct::run(cfg);
  for (const auto& path : result.files_written) std::printf("%s\n", path.c_str());
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"spectra, degeneracies, and dynamics of a gain/loss photonic trimer"};
  app.set_version_flag("--version", std::string("jct ") + jct::kVersion);
  app.require_subcommand(1);

  const std::vector<std::string> names = {"spectrum", "slice",    "surface", "classify",
                                          "perturb",  "fidelity", "quench"};
  const std::vector<std::string> descriptions = {
      "eigenvalue sheets over a 2-d parameter grid",
      "eigenvalues along a 1-d parameter sweep",
      "critical phase/strength over coupling-ratio grids",
      "report regime and degeneracy residuals at one point",
      "response ladders and scaling fits near a degeneracy",
      "mode overlap response to a small strength step",
      "mode-resolved echo after a parameter quench"};

  std::vector<SubArgs> sub_args(names.size());
  for (std::size_t i = 0; i < names.size(); ++i) {
    CLI::App* sub = app.add_subcommand(names[i], descriptions[i]);
    sub->add_option("--config", sub_args[i].config_path, "key=value config file");
    sub->add_option("--out", sub_args[i].out_dir, "output directory");
    sub->add_option("--threads", sub_args[i].threads, "worker thread count")
        ->check(CLI::PositiveNumber);
    sub->add_option("--preset", sub_args[i].preset, "named starting configuration");
  }

  CLI11_PARSE(app, argc, argv);

  for (std::size_t i = 0; i < names.size(); ++i) {
    if (!app.get_subcommand(names[i])->parsed()) continue;
    try {
      return run_subcommand(names[i], sub_args[i]);
    } catch (const jct::ConfigError& e) {
      print_error("config", e.what());
      return 2;
    } catch (const std::invalid_argument& e) {
      print_error("config", e.what());
      return 2;
    } catch (const jct::OutOfReachError& e) {
      print_error("numeric", e.what());
      return 3;
    } catch (const jct::ConvergenceError& e) {
      print_error("numeric", e.what());
      return 3;
    } catch (const jct::DefectiveAtEpError& e) {
      print_error("numeric", e.what());
      return 3;
    } catch (const jct::DegenerateExpansionError& e) {
      print_error("numeric", e.what());
      return 3;
    } catch (const jct::BranchPairingError& e) {
      print_error("numeric", e.what());
      return 3;
    } catch (const std::exception& e) {
      print_error("internal", e.what());
      return 1;
    }
  }
  return 0;
}
