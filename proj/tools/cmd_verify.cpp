#include <cstdlib>
#include <iostream>

#include "cli_common.hpp"
#include "pointfree/suites.hpp"

namespace pointfree::cli {

namespace {

struct VerifyArgs {
  std::string suite = "all";
  std::size_t max_poset_size = 5;
  std::uint64_t seed = 1;
  std::size_t samples = 1000;
  bool mutate = false;
};

int verify(VerifyArgs a, const Globals& g) {
  if (const char* env = std::getenv("WORKBENCH_SEED")) a.seed = std::stoull(env);
  SuiteOptions o;
  o.max_poset_size = a.max_poset_size;
  o.seed = a.seed;
  o.samples = a.samples;
  o.mutate = a.mutate;

  std::vector<std::string> names;
  if (a.suite == "all")
    names = suite_names();
  else
    names.push_back(a.suite);

  bool ok = true;
  auto reports = nlohmann::json::array();
  for (const auto& name : names) {
    auto r = run_suite(name, o);
    ok = ok && r.pass();
    if (g.json)
      reports.push_back(nlohmann::json::parse(r.json()));
    else
      std::cout << r.text() << std::flush;
  }
  if (g.json) std::cout << nlohmann::json{{"seed", a.seed}, {"pass", ok}, {"suites", reports}}.dump(2) << "\n";
  return ok ? 0 : 1;
}

}  // namespace

void add_verify_commands(CLI::App& app, const Globals& g, int& status) {
  auto* cmd = app.add_subcommand("verify", "Run verification suites; exits nonzero on any failed claim");
  auto a = std::make_shared<VerifyArgs>();
  std::vector<std::string> choices = suite_names();
  choices.push_back("all");
  cmd->add_option("--suite", a->suite, "Suite id or all")->capture_default_str()->check(CLI::IsMember(choices));
  cmd->add_option("--max-poset-size", a->max_poset_size, "Corpus bound")->capture_default_str()->check(CLI::Range(0, 6));
  cmd->add_option("--seed", a->seed, "Random seed (WORKBENCH_SEED overrides)")->capture_default_str();
  cmd->add_option("--samples", a->samples, "Randomized cases per claim")->capture_default_str();
  cmd->add_flag("--mutate", a->mutate, "Inject the suites' law-breaking mutations");
  cmd->callback([a, &g, &status] { status = verify(*a, g); });

  auto* list = app.add_subcommand("suites", "List suite ids");
  list->callback([] {
    for (const auto& n : suite_names()) std::cout << n << "\n";
  });
}

}  // namespace pointfree::cli
