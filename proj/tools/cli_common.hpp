#pragma once

#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include "pointfree/congruence.hpp"
#include "pointfree/frame.hpp"

namespace pointfree::cli {

struct Globals {
  bool json = false;
};

/// `--frame file.json` or `--named C3`; exactly one is required.
struct FrameInput {
  std::string path;
  std::string named;
  void add_to(CLI::App& cmd);
  FrameRef load() const;
};

/// Element by label, falling back to a numeric id.
ElementId element(const FiniteFrame& f, std::string_view token);
ElementSet elements(const FiniteFrame& f, std::string_view comma_list);

std::string set_text(const FiniteFrame& f, const ElementSet& xs);
nlohmann::json set_json(const FiniteFrame& f, const ElementSet& xs);
/// Classes separated by `|`, singletons omitted unless everything is one.
std::string congruence_text(const Congruence& c);
nlohmann::json congruence_json(const Congruence& c);

void print(const Globals& g, const nlohmann::json& j, const std::string& text);

/// `point:<rational>` with regularity challenges and round-witness requests.
void point_filter_report(const std::string& address, const std::vector<std::string>& challenges,
                         const std::vector<std::string>& members, const Globals& g);

void add_finite_commands(CLI::App& app, const Globals& g, int& status);
void add_carrier_commands(CLI::App& app, const Globals& g, int& status);
void add_verify_commands(CLI::App& app, const Globals& g, int& status);

}  // namespace pointfree::cli
