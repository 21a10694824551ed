#pragma once

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "pointfree/corpus.hpp"
#include "pointfree/error.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/suites.hpp"

namespace pointfree::detail {

class SuiteRun {
 public:
  SuiteRun(std::string suite, const SuiteOptions& options);

  const SuiteOptions& options() const noexcept { return options_; }
  std::mt19937_64& rng() noexcept { return rng_; }
  /// Corpus frames with at most `max_elements` elements (0 = no limit).
  /// Under mutation every frame with an incomparable pair has one meet
  /// entry corrupted.
  const std::vector<CorpusEntry>& corpus();
  std::vector<const CorpusEntry*> frames_up_to(std::size_t max_elements);

  ClaimResult& claim(const std::string& name);
  /// Registers a claim that must appear in the report even when nothing
  /// was checked.
  void declare(const std::string& name) { claim(name); }

  void check(const std::string& name, bool ok, const std::function<std::string()>& witness);
  /// A divergence outside the claim's hypotheses: counted, not failed.
  void log(const std::string& name, bool ok, const std::function<std::string()>& witness);
  /// Runs `body`, turning any exception into a failure of `name`.
  void guard(const std::string& name, const std::string& where, const std::function<void()>& body);

  SuiteReport finish();

 private:
  SuiteReport report_;
  SuiteOptions options_;
  std::mt19937_64 rng_;
  std::vector<CorpusEntry> corpus_;
  bool loaded_ = false;
  std::chrono::steady_clock::time_point start_;
};

/// The frame with meet(a, b) = meet(b, a) overwritten by a for a random
/// incomparable pair, or the frame itself when there is none.
FrameRef corrupt_meet(const FrameRef& f, std::mt19937_64& rng);

/// Elements rendered by label.
std::string show(const FiniteFrame& f, std::initializer_list<ElementId> xs);

SuiteReport finite_lemmas(const SuiteOptions& o);
SuiteReport congruence_structure(const SuiteOptions& o);
SuiteReport nucleus_engine(const SuiteOptions& o);
SuiteReport completely_below(const SuiteOptions& o);
SuiteReport em_machinery(const SuiteOptions& o);
SuiteReport interval_carrier(const SuiteOptions& o);
SuiteReport point_attachment(const SuiteOptions& o);
SuiteReport filter_engine(const SuiteOptions& o);

}  // namespace pointfree::detail
