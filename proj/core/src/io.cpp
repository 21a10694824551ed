#include "pointfree/io.hpp"

#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "pointfree/error.hpp"

namespace pointfree {

using nlohmann::json;

namespace {

json parse(std::string_view text) {
  try {
    return json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, e.what());
  }
}

std::string slurp(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorCode::ParseError, "cannot read " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

template <typename T>
T field(const json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) throw Error(ErrorCode::ParseError, std::string("missing field '") + key + "'");
  try {
    return j.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorCode::ParseError, std::string("field '") + key + "': " + e.what());
  }
}

std::string quoted(const std::string& s) { return json(s).dump(); }

std::vector<std::pair<ElementId, ElementId>> cover_pairs(const FiniteFrame& f) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId a = 0; a < f.size(); ++a)
    for (auto b : f.successors(a)) out.emplace_back(a, b);
  return out;
}

std::vector<std::size_t> ranks(const FiniteFrame& f) {
  std::vector<std::size_t> rank(f.size(), 0);
  // Ids are not guaranteed to be a linear extension, so relax until stable.
  bool changed = true;
  while (changed) {
    changed = false;
    for (auto [a, b] : cover_pairs(f))
      if (rank[b] < rank[a] + 1) {
        rank[b] = rank[a] + 1;
        changed = true;
      }
  }
  return rank;
}

void emit_ranks(std::ostringstream& out, const std::vector<std::size_t>& rank) {
  std::size_t top = 0;
  for (auto r : rank) top = std::max(top, r);
  for (std::size_t r = 0; r <= top; ++r) {
    out << "  { rank=same;";
    for (std::size_t a = 0; a < rank.size(); ++a)
      if (rank[a] == r) out << " n" << a << ";";
    out << " }\n";
  }
}

}  // namespace

FrameRef parse_frame_json(std::string_view text) {
  auto j = parse(text);
  PosetSpec spec;
  spec.size = field<std::size_t>(j, "size");
  for (const auto& c : field<json>(j, "covers")) {
    if (!c.is_array() || c.size() != 2) throw Error(ErrorCode::ParseError, "cover must be a pair");
    spec.covers.emplace_back(c[0].get<ElementId>(), c[1].get<ElementId>());
  }
  std::vector<std::string> labels;
  if (j.contains("labels")) {
    const auto& l = j["labels"];
    if (l.is_array()) {
      labels = l.get<std::vector<std::string>>();
      if (labels.size() != spec.size) throw Error(ErrorCode::ParseError, "label count differs from size");
    } else if (l.is_object()) {
      labels.resize(spec.size);
      for (std::size_t i = 0; i < spec.size; ++i) labels[i] = std::to_string(i);
      for (const auto& [k, v] : l.items()) {
        std::size_t i = 0;
        try {
          i = std::stoul(k);
        } catch (const std::exception&) {
          throw Error(ErrorCode::ParseError, "label key '" + k + "' is not an index");
        }
        if (i >= spec.size) throw Error(ErrorCode::ParseError, "label key " + k + " out of range");
        labels[i] = v.get<std::string>();
      }
    } else {
      throw Error(ErrorCode::ParseError, "labels must be an array or an object");
    }
  }
  return build_frame(spec, std::move(labels));
}

FrameRef load_frame(const std::filesystem::path& path) { return parse_frame_json(slurp(path)); }

std::string frame_to_json(const FiniteFrame& f) {
  json j;
  j["size"] = f.size();
  j["covers"] = json::array();
  for (auto [a, b] : cover_pairs(f)) j["covers"].push_back({a, b});
  j["labels"] = f.labels();
  return j.dump();
}

FrameHom parse_hom_json(std::string_view text, const std::filesystem::path& base) {
  auto j = parse(text);
  auto source = load_frame(base / field<std::string>(j, "source"));
  auto target = load_frame(base / field<std::string>(j, "target"));
  auto map = field<std::vector<ElementId>>(j, "map");
  if (map.size() != source->size()) throw Error(ErrorCode::InvalidHom, "map length differs from source size");
  for (auto b : map)
    if (b >= target->size()) throw Error(ErrorCode::InvalidHom, "map value out of range");
  return FrameHom(source, target, std::move(map));
}

FrameHom load_hom(const std::filesystem::path& path) { return parse_hom_json(slurp(path), path.parent_path()); }

std::string lw_to_json(const LWElement& e) {
  json j;
  j["flags"] = json::array();
  for (std::size_t i = 0; i < 64; ++i)
    if (e.flags >> i & 1U) j["flags"].push_back(i);
  j["body"] = to_string(e.body);
  return j.dump();
}

LWElement parse_lw_json(const AttachmentSpec& spec, std::string_view text) {
  auto j = parse(text);
  FlagSet flags = 0;
  for (auto i : field<std::vector<std::size_t>>(j, "flags")) {
    if (i >= spec.size()) throw Error(ErrorCode::ParseError, "flag index out of range");
    flags |= FlagSet{1} << i;
  }
  return make_lw(spec, flags, parse_interval_open(field<std::string>(j, "body")));
}

std::string frame_dot(const FiniteFrame& f, const RelationTable* overlay) {
  std::ostringstream out;
  out << "digraph frame {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (ElementId a = 0; a < f.size(); ++a) out << "  n" << a << " [label=" << quoted(f.label(a)) << "];\n";
  emit_ranks(out, ranks(f));
  for (auto [a, b] : cover_pairs(f)) out << "  n" << a << " -> n" << b << " [arrowhead=none];\n";
  if (overlay)
    for (ElementId a = 0; a < f.size(); ++a)
      for (ElementId b = 0; b < f.size(); ++b)
        if (a != b && (*overlay)(a, b)) out << "  n" << a << " -> n" << b << " [style=dashed, constraint=false];\n";
  out << "}\n";
  return out.str();
}

std::string congruence_dot(std::span<const Congruence> congs) {
  std::ostringstream out;
  out << "digraph congruences {\n  rankdir=BT;\n  node [shape=box];\n";
  auto label = [](const Congruence& c) {
    std::string s;
    for (const auto& cls : c.classes()) {
      s += "{";
      for (std::size_t i = 0; i < cls.size(); ++i) s += (i ? "," : "") + std::to_string(cls[i]);
      s += "}";
    }
    return s;
  };
  for (std::size_t i = 0; i < congs.size(); ++i) out << "  c" << i << " [label=" << quoted(label(congs[i])) << "];\n";
  for (std::size_t i = 0; i < congs.size(); ++i)
    for (std::size_t j = 0; j < congs.size(); ++j) {
      if (i == j || !congs[i].leq(congs[j]) || congs[i] == congs[j]) continue;
      bool cover = true;
      for (std::size_t k = 0; k < congs.size() && cover; ++k)
        if (k != i && k != j && congs[i].leq(congs[k]) && congs[k].leq(congs[j]) && !(congs[k] == congs[i]) &&
            !(congs[k] == congs[j]))
          cover = false;
      if (cover) out << "  c" << i << " -> c" << j << " [arrowhead=none];\n";
    }
  out << "}\n";
  return out.str();
}

std::string relation_dot(const FiniteFrame& f, const RelationTable& r) {
  std::ostringstream out;
  out << "digraph relation {\n";
  for (ElementId a = 0; a < f.size(); ++a) out << "  n" << a << " [label=" << quoted(f.label(a)) << "];\n";
  for (ElementId a = 0; a < f.size(); ++a)
    for (ElementId b = 0; b < f.size(); ++b)
      if (r(a, b)) out << "  n" << a << " -> n" << b << ";\n";
  out << "}\n";
  return out.str();
}

std::string relation_to_json(const FiniteFrame& f, const RelationTable& r) {
  json j;
  j["kind"] = r.kind == RelationKind::RatherBelow ? "rather_below" : "completely_below";
  j["pairs"] = json::object();
  for (ElementId a = 0; a < f.size(); ++a) {
    json row = json::array();
    for (ElementId b = 0; b < f.size(); ++b)
      if (r(a, b)) row.push_back(b);
    j["pairs"][std::to_string(a)] = row;
  }
  return j.dump();
}

}  // namespace pointfree
