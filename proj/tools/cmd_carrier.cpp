#include <sstream>

#include "cli_common.hpp"
#include "pointfree/attachment.hpp"
#include "pointfree/filters.hpp"
#include "pointfree/interval.hpp"
#include "pointfree/io.hpp"

namespace pointfree::cli {

namespace {

const char* yes_no(bool b) { return b ? "yes" : "no"; }

void rline(const std::string& op, const std::vector<std::string>& args, int depth, const Globals& g) {
  auto need = [&](std::size_t n) {
    if (args.size() != n)
      throw CLI::ValidationError("rline " + op, "expects " + std::to_string(n) + " argument(s)");
  };
  nlohmann::json j{{"op", op}};
  std::ostringstream s;
  if (op == "eval") {
    need(1);
    auto u = parse_interval_open(args[0]);
    auto info = io_is_punctured(u);
    j["value"] = to_string(u);
    j["punctured"] = info.punctured;
    j["abutments"] = nlohmann::json::array();
    for (const auto& q : info.abutments) j["abutments"].push_back(to_string(q));
    s << to_string(u) << "\npunctured " << yes_no(info.punctured) << "\n";
    for (const auto& q : info.abutments) s << "  missing point " << to_string(q) << "\n";
  } else if (op == "fill") {
    need(1);
    auto r = io_fill(parse_interval_open(args[0]));
    j["value"] = to_string(r);
    s << to_string(r) << "\n";
  } else if (op == "star") {
    need(1);
    auto r = io_pseudocomplement(parse_interval_open(args[0]));
    j["value"] = to_string(r);
    s << to_string(r) << "\n";
  } else if (op == "imp") {
    need(2);
    auto r = io_heyting(parse_interval_open(args[0]), parse_interval_open(args[1]));
    j["value"] = to_string(r);
    s << to_string(r) << "\n";
  } else if (op == "cb") {
    need(2);
    auto u = parse_interval_open(args[0]), v = parse_interval_open(args[1]);
    bool cb = io_completely_below(u, v);
    j["completely_below"] = cb;
    s << "completely below " << yes_no(cb) << "\n";
    if (cb) {
      auto w = io_interpolant(u, v);
      j["interpolant"] = to_string(w);
      s << "interpolant " << to_string(w) << "\n";
    }
  } else if (op == "prop16") {
    need(2);
    auto r = generator_relations(parse_rational(args[0]), parse_rational(args[1]), depth);
    j.update({{"join_is_top", r.join_is_top},
              {"meet_is_bottom", r.meet_is_bottom},
              {"join_relation", r.relation_one_holds()},
              {"meet_relation", r.relation_two_holds()},
              {"meet_characterised", r.meet_characterised()},
              {"approximations_monotone", r.approximations_monotone},
              {"approximations_bounded", r.approximations_bounded}});
    s << "join is top " << yes_no(r.join_is_top) << ", expected " << yes_no(r.join_expected) << "\n"
      << "meet is bottom " << yes_no(r.meet_is_bottom) << ", forced " << yes_no(r.meet_forced) << "\n"
      << "approximations monotone " << yes_no(r.approximations_monotone) << ", bounded "
      << yes_no(r.approximations_bounded) << "\n";
  } else {
    throw CLI::ValidationError("rline", "unknown operation " + op);
  }
  print(g, j, s.str());
}

FlagSet parse_flags(const AttachmentSpec& spec, const std::string& text) {
  FlagSet out = 0;
  std::stringstream in(text);
  for (std::string token; std::getline(in, token, ',');) {
    if (token.empty()) continue;
    auto i = std::stoul(token);
    if (i >= spec.size()) throw Error(ErrorCode::ParseError, "point index " + token + " out of range");
    out |= FlagSet{1} << i;
  }
  return out;
}

std::vector<std::string> split_bar(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, '|');) out.push_back(part);
  return out;
}

void attach(const std::string& points, const std::string& op, const std::string& args_text, const std::string& x,
            const Globals& g) {
  auto spec = parse_attachment_spec(points);
  auto args = split_bar(args_text);
  std::vector<LWElement> es;
  if (op != "max")
    for (const auto& a : args) es.push_back(parse_lw(spec, a));
  auto need = [&](std::size_t n) {
    if (es.size() != n) throw CLI::ValidationError("attach --op " + op, "expects " + std::to_string(n) + " element(s)");
  };
  nlohmann::json j{{"op", op}};
  std::ostringstream s;
  auto result = [&](const LWElement& e) {
    j["value"] = nlohmann::json::parse(lw_to_json(e));
    s << to_string(e) << "\n";
  };
  if (op == "meet") {
    need(2);
    result(lw_meet(spec, es[0], es[1]));
  } else if (op == "join") {
    if (es.empty()) throw CLI::ValidationError("attach --op join", "expects at least one element");
    result(lw_join(spec, es));
  } else if (op == "leq") {
    need(2);
    j["value"] = lw_leq(es[0], es[1]);
    s << yes_no(lw_leq(es[0], es[1])) << "\n";
  } else if (op == "max") {
    j["value"] = nlohmann::json::array();
    for (const auto& m : lw_max(spec)) {
      j["value"].push_back(nlohmann::json::parse(lw_to_json(m)));
      s << to_string(m) << "\n";
    }
  } else if (op == "pi") {
    need(1);
    result(lw_pi_project(spec, es[0]));
  } else if (op == "sigma") {
    need(1);
    result(lw_sigma_project(es[0]));
  } else if (op == "atomless") {
    need(1);
    result(lw_atomless_witness(spec, es[0]));
  } else if (op == "above") {
    need(1);
    auto r = lw_strictly_above(spec, es[0]);
    if (r)
      result(*r);
    else
      s << "nothing strictly between this element and top\n";
  } else if (op == "regular") {
    need(1);
    auto ev = lw_regularity_evidence(spec, es[0], 8);
    j.update({{"witnesses", ev.witnesses},
              {"witnesses_valid", ev.witnesses_valid},
              {"joins_monotone", ev.joins_monotone},
              {"joins_bounded", ev.joins_bounded},
              {"samples_covered", ev.samples_covered},
              {"last_join", to_string(ev.last_join)}});
    s << ev.witnesses << " witnesses, valid " << yes_no(ev.witnesses_valid) << ", monotone "
      << yes_no(ev.joins_monotone) << ", bounded " << yes_no(ev.joins_bounded) << ", covered "
      << yes_no(ev.samples_covered) << "\nlast join " << to_string(ev.last_join) << "\n";
  } else if (op == "kx") {
    need(1);
    auto k = kx_quotient(spec, parse_flags(spec, x));
    result(k(es[0]));
  } else {
    throw CLI::ValidationError("attach", "unknown operation " + op);
  }
  for (const auto& e : es)
    if (auto why = lw_violation(spec, e)) s << "note: argument " << to_string(e) << " is not in the frame: " << *why << "\n";
  print(g, j, s.str());
}

}  // namespace

void point_filter_report(const std::string& address, const std::vector<std::string>& challenges,
                         const std::vector<std::string>& members, const Globals& g) {
  if (address.rfind("point:", 0) != 0) throw CLI::ValidationError("--filter", "expected point:<rational>");
  auto x = parse_rational(std::string_view(address).substr(6));
  auto filter = point_filter(x);
  nlohmann::json j{{"filter", address}, {"challenges", nlohmann::json::array()}, {"members", nlohmann::json::array()}};
  std::ostringstream s;
  for (const auto& text : challenges) {
    auto v = parse_interval_open(text);
    std::optional<IntervalOpen> b;
    try {
      b = filter.regular_witness(v);
    } catch (const Error& e) {
      j["challenges"].push_back({{"challenge", to_string(v)}, {"refused", e.what()}});
      s << "challenge " << to_string(v) << " refused: " << e.what() << "\n";
      continue;
    }
    bool valid = b && filter.contains(*b) && !io_leq(io_pseudocomplement(*b), v);
    nlohmann::json c{{"challenge", to_string(v)}, {"valid", valid}};
    if (b) c["witness"] = to_string(*b);
    j["challenges"].push_back(c);
    s << "challenge " << to_string(v) << ": " << (b ? to_string(*b) : std::string("no answer")) << " ("
      << (valid ? "valid" : "invalid") << ")\n";
  }
  for (const auto& text : members) {
    auto a = parse_interval_open(text);
    nlohmann::json m{{"element", to_string(a)}, {"member", filter.contains(a)}};
    s << to_string(a) << ": " << (filter.contains(a) ? "member" : "not a member");
    if (filter.contains(a)) {
      auto b = filter.round_witness(a);
      m["round_witness"] = to_string(b);
      m["valid"] = filter.contains(b) && io_completely_below(b, a);
      s << ", round witness " << to_string(b);
    }
    j["members"].push_back(m);
    s << "\n";
  }
  print(g, j, s.str());
}

void add_carrier_commands(CLI::App& app, const Globals& g, int& /*status*/) {
  {
    auto* cmd = app.add_subcommand("rline", "Open sets of the rational line: eval, fill, star, imp, cb, prop16");
    auto op = std::make_shared<std::string>();
    auto args = std::make_shared<std::vector<std::string>>();
    auto depth = std::make_shared<int>(16);
    cmd->add_option("op", *op, "eval | fill | star | imp | cb | prop16")
        ->required()
        ->check(CLI::IsMember({"eval", "fill", "star", "imp", "cb", "prop16"}));
    cmd->add_option("args", *args, "Open sets like (0,1)u(3/2,inf), or p q for prop16");
    cmd->add_option("--depth", *depth, "Approximation depth for prop16")->capture_default_str();
    cmd->callback([=, &g] { rline(*op, *args, *depth, g); });
  }
  {
    auto* cmd = app.add_subcommand("attach", "Points attached to the pointless line");
    auto points = std::make_shared<std::string>();
    auto op = std::make_shared<std::string>("meet");
    auto args = std::make_shared<std::string>();
    auto x = std::make_shared<std::string>();
    cmd->add_option("--points", *points, "Comma separated rationals, e.g. 0,1,5/2")->required();
    cmd->add_option("--op", *op, "meet | join | leq | max | pi | sigma | atomless | above | regular | kx")
        ->capture_default_str();
    cmd->add_option("--args", *args, "Elements like {0,2}:(-1,1)u(3,4), separated by |");
    cmd->add_option("--x", *x, "Point indices kept by kx, comma separated");
    cmd->callback([=, &g] { attach(*points, *op, *args, *x, g); });
  }
}

}  // namespace pointfree::cli
