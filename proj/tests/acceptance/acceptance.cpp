// Runs the verification suites behind each acceptance criterion and prints
// one PASS/FAIL line per criterion. Usage: acceptance [--criterion N]

#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include "pointfree/suites.hpp"

using namespace pointfree;

namespace {

struct MinCount {
  std::string claim;
  std::size_t at_least;
};

struct Criterion {
  int id;
  std::string title;
  std::string suite;
  std::vector<MinCount> counts;
  double max_seconds = 0;  // 0 means no limit
};

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {1, "finite lemmas on every frame of a poset with at most 5 points", "finite-lemmas", {}, 300},
      {2, "congruence lattice structure", "congruence-structure", {}},
      {3, "prenucleus iteration", "nucleus-engine", {}},
      {4, "completely below cross-validation", "completely-below", {}},
      {5,
       "factorisation system",
       "em-machinery",
       {{"factorization splits the source", 500}, {"factor lies in E", 500}, {"factored source lies in M", 500},
        {"diagonal exists", 200}, {"diagonal is unique", 200}}},
      {6,
       "interval carrier",
       "interval",
       {{"fill is inflationary", 1000},
        {"fill is idempotent", 1000},
        {"fill preserves meets", 1000},
        {"fill is monotone", 1000},
        {"heyting adjunction", 1000}}},
      {7,
       "point attachment",
       "attachment",
       {{"meets and joins stay in the frame", 1000},
        {"atomless witness", 1000},
        {"completely below witness", 1000},
        {"regular approximation", 1000}}},
      {8, "filter engine", "filters", {{"point filter answers regularity challenges", 200}}},
      {9, "mutation sensitivity", "mutation-sensitivity", {}},
  };
  return all;
}

bool run(const Criterion& c) {
  SuiteReport report;
  try {
    report = run_suite(c.suite);
  } catch (const std::exception& e) {
    std::cout << "criterion " << c.id << ": FAIL  " << c.title << "  (suite aborted: " << e.what() << ")\n";
    return false;
  }

  std::vector<std::string> problems;
  for (const auto& claim : report.claims)
    if (!claim.pass())
      problems.push_back("'" + claim.claim + "' failed " + std::to_string(claim.failed) + "/" +
                         std::to_string(claim.checked) + (claim.witness.empty() ? "" : " at " + claim.witness));
  for (const auto& m : c.counts) {
    const auto* claim = report.find(m.claim);
    if (!claim)
      problems.push_back("missing claim '" + m.claim + "'");
    else if (claim->checked < m.at_least)
      problems.push_back("'" + m.claim + "' checked " + std::to_string(claim->checked) + " < " +
                         std::to_string(m.at_least));
  }
  if (c.max_seconds > 0 && report.seconds > c.max_seconds)
    problems.push_back("took " + std::to_string(report.seconds) + "s");

  std::size_t checked = 0;
  for (const auto& claim : report.claims) checked += claim.checked;
  std::cout << "criterion " << c.id << ": " << (problems.empty() ? "PASS" : "FAIL") << "  " << c.title << "  ("
            << report.claims.size() << " claims, " << checked << " checks, " << report.seconds << "s)\n";
  for (const auto& p : problems) std::cout << "    " << p << "\n";
  return problems.empty();
}

}  // namespace

int main(int argc, char** argv) {
  int only = 0;
  for (int i = 1; i < argc; ++i) {
    std::string arg = argv[i];
    if (arg == "--criterion" && i + 1 < argc) {
      only = std::atoi(argv[++i]);
    } else {
      std::cerr << "usage: acceptance [--criterion N]\n";
      return 2;
    }
  }
  bool ok = true;
  bool ran = false;
  for (const auto& c : criteria()) {
    if (only != 0 && c.id != only) continue;
    ran = true;
    ok = run(c) && ok;
  }
  if (!ran) {
    std::cerr << "no criterion " << only << "\n";
    return 2;
  }
  return ok ? 0 : 1;
}
