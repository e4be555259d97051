#include <cstdlib>
#include <iostream>
#include <string>

#include <unistd.h>

#include <CLI11.hpp>

#include "noname/cli/commands.hpp"

namespace {

bool want_color() {
  const char* env = std::getenv("NONAME_COLOR");
  if (env && std::string(env) == "0") return false;
  return isatty(STDOUT_FILENO) != 0;
}

}  // namespace

int main(int argc, char** argv) {
  using namespace noname::cli;
  CLI::App app{"noname: explicit rational parametrizations of invariant fields"};
  app.require_subcommand(1);

  ParametrizeOptions para;
  std::uint64_t seed = 0;
  std::string construction;
  auto* p = app.add_subcommand("parametrize", "build and check invariant generators for a config");
  p->add_option("config", para.config_path, "problem description (JSON)")->required();
  p->add_option("--out", para.out_path, "write the JSON report here");
  p->add_option("--format", para.format, "stdout format")->check(CLI::IsMember({"text", "json"}));
  auto* seed_opt = p->add_option("--seed", seed, "seed for the normal-element search");
  p->add_flag("--find-alpha", para.find_alpha, "search for alpha even if the config gives one");
  auto* cons_opt = p->add_option("--construction", construction, "auto, permutation or signed")
                       ->check(CLI::IsMember({"auto", "permutation", "signed"}));
  p->add_flag("--timings", para.timings, "include stage timings");

  std::string report_path, config_path;
  auto* v = app.add_subcommand("verify", "re-check a report against its config");
  v->add_option("report", report_path, "report (JSON)")->required();
  v->add_option("config", config_path, "problem description (JSON)")->required();

  MooreOptions moore;
  auto* m = app.add_subcommand("moore", "Moore matrices over F_p[t]/(m), deg m = e");
  m->add_option("--p", moore.p, "prime")->required();
  m->add_option("--e", moore.e, "extension degree")->required();
  auto* tuple_opt = m->add_option("--tuple", moore.tuple, "comma separated elements, e.g. \"t,1\"");
  auto* random_opt = m->add_option("--random", moore.random, "number of random tuples");
  tuple_opt->excludes(random_opt);
  m->add_option("--seed", moore.seed, "seed for --random");
  m->add_option("--modulus", moore.modulus, "modulus in t, default the first irreducible");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error[stage=parse] usage: " << e.what() << "\n";
    return kInput;
  }

  if (p->parsed()) {
    if (seed_opt->count()) para.seed = seed;
    if (cons_opt->count()) para.construction = construction;
    para.color = want_color();
    return run_parametrize(para, std::cout, std::cerr);
  }
  if (v->parsed()) return run_verify(report_path, config_path, std::cout, std::cerr);
  return run_moore(moore, std::cout, std::cerr);
}
