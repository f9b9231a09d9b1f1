#include "ricci/cli.hpp"

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <ostream>

#include "CLI11.hpp"
#include "ricci/errors.hpp"
#include "ricci/graph.hpp"
#include "ricci/report.hpp"
#include "ricci/verify.hpp"

namespace ricci {

namespace {

std::uint64_t seed_from_env(std::uint64_t fallback) {
  const char* env = std::getenv("RICCI_SEED");
  if (env == nullptr || *env == '\0') return fallback;
  const std::string_view text(env);
  std::uint64_t value = 0;
  const auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
  if (ec != std::errc() || ptr != text.data() + text.size())
    throw ValidationError("RICCI_SEED must be a non-negative integer, got '" + std::string(text) + "'");
  return value;
}

void emit(std::ostream& out, const report::Json& rep, const std::string& format) {
  if (format == "structured")
    out << rep.dump(2) << '\n';
  else
    out << report::table(rep);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Discrete Ricci curvature of graphs and Coxeter weak orders", "ricci"};
  app.require_subcommand(1);
  app.fallthrough();

  std::string format = "table";
  std::uint64_t seed = 1;
  app.add_option("--format", format, "Output format")->check(CLI::IsMember({"table", "structured"}));
  app.add_option("--seed", seed, "Sampling seed (RICCI_SEED overrides)");

  std::string path;
  std::string tag;
  std::string scope;
  bool oracle = false;

  auto* curvature = app.add_subcommand("curvature", "Local and global curvature of an edge-list graph");
  curvature->add_option("graph", path, "Edge-list file")->required();
  curvature->add_flag("--oracle", oracle, "Also run the definitional oracle");

  auto* bounds = app.add_subcommand("bounds", "Curvature bounds and Gershgorin intervals");
  bounds->add_option("graph", path, "Edge-list file")->required();

  auto* spectral = app.add_subcommand("spectral", "Laplacian spectrum, gap and isoperimetric check");
  spectral->add_option("graph", path, "Edge-list file")->required();

  auto* coxeter = app.add_subcommand("coxeter", "Weak-order curvature of a Coxeter type");
  coxeter->add_option("type", tag, "Type tag such as A3, I2:7, ~D4, A2xA3")->required();

  auto* verify = app.add_subcommand("verify", "Run an invariant suite");
  verify->add_option("scope", scope, "operators, bounds, coxeter, isoperimetry or all")
      ->required()
      ->check(CLI::IsMember({"operators", "bounds", "coxeter", "isoperimetry", "all"}));

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, out, err);
    return kExitParse;
  }

  try {
    seed = seed_from_env(seed);
    if (*curvature) {
      const auto rep = report::curvature(load_graph_file(path), oracle);
      emit(out, rep, format);
      if (oracle && !rep["oracle"]["agrees"].get<bool>()) {
        err << "error: oracle deviation exceeds 1e-6\n";
        return kExitNumeric;
      }
    } else if (*bounds) {
      emit(out, report::bounds(load_graph_file(path)), format);
    } else if (*spectral) {
      emit(out, report::spectral(load_graph_file(path), seed), format);
    } else if (*coxeter) {
      emit(out, report::coxeter(tag), format);
    } else if (*verify) {
      const auto suites = run_verify(scope, seed);
      emit(out, report::verify(suites), format);
      if (!std::all_of(suites.begin(), suites.end(), [](const SuiteResult& s) { return s.passed(); }))
        return kExitVerify;
    }
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitParse;
  } catch (const ValidationError& e) {
    err << "invalid graph: " << e.what() << '\n';
    return kExitValidation;
  } catch (const LookupError& e) {
    err << "lookup error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitValidation;
  } catch (const ResourceError& e) {
    err << "resource limit: " << e.what() << '\n';
    return kExitValidation;
  } catch (const NumericError& e) {
    err << "numeric error: " << e.what() << " (residual " << e.residual() << ")\n";
    return kExitNumeric;
  } catch (const ConsistencyError& e) {
    err << "consistency error: " << e.what() << '\n';
    return kExitNumeric;
  }
  return kExitOk;
}

}  // namespace ricci
