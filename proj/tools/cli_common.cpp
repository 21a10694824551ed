#include "cli_common.hpp"

#include <algorithm>
#include <charconv>
#include <iostream>

#include "pointfree/corpus.hpp"
#include "pointfree/io.hpp"

namespace pointfree::cli {

void FrameInput::add_to(CLI::App& cmd) {
  auto* file = cmd.add_option("--frame", path, "Frame JSON file")->check(CLI::ExistingFile);
  auto* name = cmd.add_option("--named", named, "Built-in frame: 1, 2, Cn, Bn or a corpus name like P3.2");
  file->excludes(name);
  name->excludes(file);
}

FrameRef FrameInput::load() const {
  if (!path.empty()) return load_frame(path);
  if (!named.empty()) return named_frame(named);
  throw CLI::RequiredError("--frame or --named");
}

ElementId element(const FiniteFrame& f, std::string_view token) {
  for (ElementId a = 0; a < f.size(); ++a)
    if (f.label(a) == token) return a;
  ElementId id = 0;
  auto [end, ec] = std::from_chars(token.data(), token.data() + token.size(), id);
  if (ec != std::errc() || end != token.data() + token.size() || id >= f.size())
    throw Error(ErrorCode::ParseError, "no element '" + std::string(token) + "'");
  return id;
}

ElementSet elements(const FiniteFrame& f, std::string_view comma_list) {
  ElementSet out;
  while (!comma_list.empty()) {
    auto cut = comma_list.find(',');
    auto token = comma_list.substr(0, cut);
    if (!token.empty()) out.push_back(element(f, token));
    comma_list = cut == std::string_view::npos ? std::string_view() : comma_list.substr(cut + 1);
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::string set_text(const FiniteFrame& f, const ElementSet& xs) {
  std::string s = "[";
  for (std::size_t i = 0; i < xs.size(); ++i) s += (i ? " " : "") + f.label(xs[i]);
  return s + "]";
}

nlohmann::json set_json(const FiniteFrame& f, const ElementSet& xs) {
  auto j = nlohmann::json::array();
  for (auto a : xs) j.push_back(f.label(a));
  return j;
}

std::string congruence_text(const Congruence& c) {
  const auto& f = *c.frame();
  if (c.is_identity()) return "identity";
  std::string s;
  for (const auto& cls : c.classes()) {
    if (cls.size() == 1) continue;
    if (!s.empty()) s += " | ";
    for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? " " : "") + f.label(cls[i]);
  }
  return s;
}

nlohmann::json congruence_json(const Congruence& c) {
  auto j = nlohmann::json::array();
  for (const auto& cls : c.classes()) j.push_back(set_json(*c.frame(), cls));
  return j;
}

void print(const Globals& g, const nlohmann::json& j, const std::string& text) {
  if (g.json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

}  // namespace pointfree::cli
