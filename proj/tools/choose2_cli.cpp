// choose2 verify <suite> [flags]
// choose2 sample config|gauss|ladder [flags]
//
// Exit codes: 0 all checks pass, 1 some check failed, 2 usage error.

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <map>

#include "choose2/samples.hpp"
#include "choose2/suites.hpp"

namespace {

using namespace choose2;

constexpr int kExitFail = 1;
constexpr int kExitUsage = 2;

struct Flags {
  SuiteParams p;
  std::string suite;
  std::string kind;
  std::string out;
  std::string mode = "auto";
  std::string domain = "cube";
  std::optional<double> min_sep;
  std::optional<std::string> flavor;
};

void write_output(const json& j, const std::string& path) {
  const std::string text = j.dump(2) + "\n";
  if (path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(path);
  if (!f) throw std::runtime_error("cannot open " + path);
  f << text;
}

void check_ranges(const SuiteParams& p) {
  if (p.m < 1) throw precondition_violation("--m must be >= 1");
  if (p.k < 0) throw precondition_violation("--k must be >= 0");
  if (p.n < 2) throw precondition_violation("--n must be >= 2");
  if (p.samples < 1) throw precondition_violation("--samples must be >= 1");
  if (p.level < 0) throw precondition_violation("--level must be >= 0");
  if (p.x_size < 1) throw precondition_violation("--x-size must be >= 1");
  if (p.max_arity && *p.max_arity < 0) throw precondition_violation("--max-arity must be >= 0");
  if (p.tol && !(*p.tol >= 0)) throw precondition_violation("--tol must be >= 0");
}

json sample_params(const Flags& f) {
  json j{{"kind", f.kind}, {"k", f.p.k}, {"n", f.p.n}, {"m", f.p.m},
         {"seed", f.p.seed}, {"level", f.p.level}, {"domain", f.domain}};
  j["minSep"] = f.min_sep.value_or(1e-3);
  if (f.kind == "ladder") j["flavor"] = f.flavor.value_or("config");
  return j;
}

json run_sample(const Flags& f) {
  const Domain domain = f.domain == "ball" ? Domain::ball : Domain::cube;
  const double min_sep = f.min_sep.value_or(1e-3);
  const auto& p = f.p;
  if (f.kind == "config") {
    const Configuration c = sample_configuration(p.k, p.n, domain, min_sep, p.seed);
    return sample_envelope("config", sample_params(f), to_json(c));
  }
  if (f.kind == "gauss") {
    const Configuration c = sample_configuration(p.k, p.n, domain, min_sep, p.seed);
    return sample_envelope("gauss", sample_params(f),
                           {{"configuration", to_json(c)}, {"map", to_json(gauss_map(c))}});
  }
  const std::string flavor = f.flavor.value_or("config");
  if (flavor == "config" || flavor == "sinha") {
    const BoundaryAnchors anchors = anchors_for(p);
    const auto L = make_config_ladder(p.m, p.level, anchors, 1, p.seed, flavor == "sinha");
    json payload = dump_ladder(L);
    payload["anchors"] = to_json(anchors);
    payload["u"] = to_json(anchors.u);
    return sample_envelope("ladder", sample_params(f), payload);
  }
  if (flavor == "numeric") {
    const auto L = make_numeric_ladder(p.m, p.level, p.n, 1, p.seed);
    return sample_envelope("ladder", sample_params(f), dump_ladder(L));
  }
  throw precondition_violation("sample ladder supports --flavor config, sinha or numeric");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Combinatorial and numeric checks for the divided-powers choose-two bimodules"};
  app.require_subcommand(1);
  Flags f;
  auto& p = f.p;

  const std::map<std::string, FourMode> modes{
      {"auto", FourMode::automatic}, {"tensor", FourMode::tensor}, {"probe", FourMode::probe}};

  auto* verify = app.add_subcommand("verify", "Run a verification suite and print a JSON report");
  verify->add_option("suite", f.suite, "Suite name")
      ->required()
      ->check(CLI::IsMember(suite_names()));
  verify->add_option("--m", p.m, "Divided-powers degree");
  verify->add_option("--max-arity", p.max_arity, "Largest total arity swept");
  verify->add_option("--k", p.k, "Arity of sampled maps");
  verify->add_option("--n", p.n, "Ambient dimension");
  verify->add_option("--samples", p.samples, "Samples per case");
  verify->add_option("--seed", p.seed, "Base seed");
  verify->add_option("--tol", p.tol, "Tolerance for the dependence and consistency tests");
  verify->add_option("--mode", f.mode, "Four-consistency mode")->check(CLI::IsMember({"auto", "tensor", "probe"}));
  verify->add_option("--u", p.u, "Unit vector u for the configuration model")->expected(1, -1);
  verify->add_option("--level", p.level, "Top cosimplicial level");
  verify->add_option("--x-size", p.x_size, "Size of the pointed set X (basepoint included)");
  verify->add_option("--max-zero-parts", p.max_zero_parts, "Zero parts allowed per composition, -1 for all");
  verify->add_option("--budget", p.budget, "Instance budget for exhaustive sweeps");
  verify->add_option("--flavor", f.flavor, "Ladder flavor: exact, numeric, realized or all")
      ->check(CLI::IsMember({"all", "exact", "numeric", "realized"}));
  verify->add_flag("--corrupt", p.corrupt, "Run the suite's negative control");
  verify->add_option("--out", f.out, "Write the report here instead of stdout");

  auto* sample = app.add_subcommand("sample", "Dump sampled objects as JSON");
  sample->add_option("kind", f.kind, "config, gauss or ladder")
      ->required()
      ->check(CLI::IsMember({"config", "gauss", "ladder"}));
  sample->add_option("--k", p.k, "Number of points");
  sample->add_option("--n", p.n, "Ambient dimension");
  sample->add_option("--m", p.m, "Strands for ladders");
  sample->add_option("--level", p.level, "Top ladder level");
  sample->add_option("--seed", p.seed, "Seed");
  sample->add_option("--u", p.u, "Unit vector u")->expected(1, -1);
  sample->add_option("--flavor", f.flavor, "Ladder flavor: config, sinha or numeric")
      ->check(CLI::IsMember({"config", "sinha", "numeric"}));
  sample->add_option("--min-sep", f.min_sep, "Minimum point separation");
  sample->add_option("--domain", f.domain, "cube or ball")->check(CLI::IsMember({"cube", "ball"}));
  sample->add_option("--out", f.out, "Write here instead of stdout");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    p.mode = modes.at(f.mode);
    if (f.flavor) p.flavor = *f.flavor;
    check_ranges(p);
    if (*sample) {
      write_output(run_sample(f), f.out);
      return 0;
    }
    const VerificationReport rep = run_suite(f.suite, p);
    write_output(rep.to_json(), f.out);
    return rep.passed() ? 0 : kExitFail;
  } catch (const std::logic_error& e) {
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
}
