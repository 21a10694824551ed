#include "pointfree/suites.hpp"

#include <algorithm>
#include <map>
#include <nlohmann/json.hpp>

#include "suite_support.hpp"

namespace pointfree {

namespace detail {

SuiteRun::SuiteRun(std::string suite, const SuiteOptions& options)
    : options_(options), rng_(options.seed), start_(std::chrono::steady_clock::now()) {
  report_.suite = std::move(suite);
}

const std::vector<CorpusEntry>& SuiteRun::corpus() {
  if (!loaded_) {
    corpus_ = generate_corpus({options_.max_poset_size, false});
    if (options_.mutate) {
      std::mt19937_64 mrng(options_.seed ^ 0x6d757461746521ULL);
      for (auto& e : corpus_) e.frame = corrupt_meet(e.frame, mrng);
    }
    loaded_ = true;
  }
  return corpus_;
}

std::vector<const CorpusEntry*> SuiteRun::frames_up_to(std::size_t max_elements) {
  std::vector<const CorpusEntry*> out;
  for (const auto& e : corpus())
    if (max_elements == 0 || e.frame->size() <= max_elements) out.push_back(&e);
  return out;
}

ClaimResult& SuiteRun::claim(const std::string& name) {
  for (auto& c : report_.claims)
    if (c.claim == name) return c;
  report_.claims.push_back(ClaimResult{name, 0, 0, 0, {}, {}});
  return report_.claims.back();
}

void SuiteRun::check(const std::string& name, bool ok, const std::function<std::string()>& witness) {
  auto& c = claim(name);
  ++c.checked;
  if (ok) return;
  if (c.failed++ == 0) c.witness = witness();
}

void SuiteRun::log(const std::string& name, bool ok, const std::function<std::string()>& witness) {
  if (ok) return;
  auto& c = claim(name);
  if (c.logged++ == 0) c.logged_example = witness();
}

void SuiteRun::guard(const std::string& name, const std::string& where, const std::function<void()>& body) {
  try {
    body();
  } catch (const std::exception& e) {
    check(name, false, [&] { return where + ": " + e.what(); });
  }
}

SuiteReport SuiteRun::finish() {
  report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  return std::move(report_);
}

FrameRef corrupt_meet(const FrameRef& f, std::mt19937_64& rng) {
  std::vector<std::pair<ElementId, ElementId>> pairs;
  for (ElementId a = 0; a < f->size(); ++a)
    for (ElementId b = a + 1; b < f->size(); ++b)
      if (!f->leq(a, b) && !f->leq(b, a)) pairs.emplace_back(a, b);
  if (pairs.empty()) return f;
  auto [a, b] = pairs[std::uniform_int_distribution<std::size_t>(0, pairs.size() - 1)(rng)];
  auto t = f->tables();
  t.meet[a * t.size + b] = a;
  t.meet[b * t.size + a] = a;
  return frame_unchecked(std::move(t), f->labels());
}

std::string show(const FiniteFrame& f, std::initializer_list<ElementId> xs) {
  std::string s;
  for (auto x : xs) s += (s.empty() ? "" : ", ") + f.label(x);
  return s;
}

namespace {

SuiteReport mutation_sensitivity(const SuiteOptions& o) {
  SuiteRun run("mutation-sensitivity", o);
  SuiteOptions m = o;
  m.mutate = true;
  m.samples = std::min<std::size_t>(o.samples, 200);
  m.max_poset_size = std::min<std::size_t>(o.max_poset_size, 4);
  for (const auto& name : suite_names()) {
    if (name == "mutation-sensitivity") continue;
    run.guard(name + " detects mutation", name, [&] {
      SuiteOptions clean = m;
      clean.mutate = false;
      auto base = run_suite(name, clean);
      auto r = run_suite(name, m);
      // Only claims that hold on the clean run count as detectors.
      std::string caught;
      for (const auto& c : r.claims) {
        const auto* b = base.find(c.claim);
        if (b && b->pass() && !c.pass()) caught = c.claim;
      }
      run.check(name + " detects mutation", !caught.empty(),
                [&] { return "no claim passing on the clean run of " + name + " failed under mutation"; });
    });
  }
  return run.finish();
}

using Runner = SuiteReport (*)(const SuiteOptions&);

const std::vector<std::pair<std::string, Runner>>& registry() {
  static const std::vector<std::pair<std::string, Runner>> r = {
      {"finite-lemmas", finite_lemmas},
      {"congruence-structure", congruence_structure},
      {"nucleus-engine", nucleus_engine},
      {"completely-below", completely_below},
      {"em-machinery", em_machinery},
      {"interval", interval_carrier},
      {"attachment", point_attachment},
      {"filters", filter_engine},
      {"mutation-sensitivity", mutation_sensitivity},
  };
  return r;
}

}  // namespace

}  // namespace detail

bool SuiteReport::pass() const {
  return std::all_of(claims.begin(), claims.end(), [](const ClaimResult& c) { return c.pass(); });
}

const ClaimResult* SuiteReport::find(std::string_view claim) const {
  for (const auto& c : claims)
    if (c.claim == claim) return &c;
  return nullptr;
}

std::string SuiteReport::text() const {
  std::string out;
  for (const auto& c : claims) {
    out += (c.pass() ? "[PASS] " : "[FAIL] ") + suite + " / " + c.claim + "  checked=" + std::to_string(c.checked);
    if (!c.pass()) out += " failed=" + std::to_string(c.failed);
    if (c.logged) out += " logged=" + std::to_string(c.logged);
    out += "\n";
    if (!c.pass()) out += "         witness: " + c.witness + "\n";
    if (c.logged) out += "         logged: " + c.logged_example + "\n";
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.2f", seconds);
  out += "suite " + suite + (pass() ? " passed" : " FAILED") + " in " + buf + "s\n";
  return out;
}

std::string SuiteReport::json() const {
  nlohmann::json j;
  j["suite"] = suite;
  j["pass"] = pass();
  j["seconds"] = seconds;
  j["claims"] = nlohmann::json::array();
  for (const auto& c : claims) {
    nlohmann::json k{{"claim", c.claim}, {"pass", c.pass()}, {"checked", c.checked}, {"failed", c.failed},
                     {"logged", c.logged}};
    if (!c.pass()) k["witness"] = c.witness;
    if (c.logged) k["logged_example"] = c.logged_example;
    j["claims"].push_back(std::move(k));
  }
  return j.dump(2);
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> out;
    for (const auto& [n, _] : detail::registry()) out.push_back(n);
    return out;
  }();
  return names;
}

SuiteReport run_suite(std::string_view name, const SuiteOptions& options) {
  for (const auto& [n, run] : detail::registry())
    if (n == name) return run(options);
  throw Error(ErrorCode::UnknownSuite, "no suite named '" + std::string(name) + "'");
}

}  // namespace pointfree
