#include <iostream>
#include <sstream>

#include "cli_common.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/filters.hpp"
#include "pointfree/io.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/order.hpp"
#include "pointfree/reflection.hpp"

namespace pointfree::cli {

namespace {

nlohmann::json relation_json(const FiniteFrame& f, const RelationTable& r) {
  return nlohmann::json::parse(relation_to_json(f, r));
}

void analyze(const FrameRef& F, const Globals& g) {
  const auto& f = *F;
  ElementSet punctured;
  for (ElementId a = 0; a < f.size(); ++a)
    if (is_punctured(f, a).punctured) punctured.push_back(a);
  auto cb = completely_below(f);
  bool cr = is_completely_regular(f);
  nlohmann::json j{{"size", f.size()},
                   {"atoms", set_json(f, atoms(f))},
                   {"maxima", set_json(f, maxima(f))},
                   {"punctured", set_json(f, punctured)},
                   {"center", set_json(f, center(f))},
                   {"completely_regular", cr},
                   {"pointless", is_pointless(f)},
                   {"spatial", is_spatial(f)},
                   {"completely_below", relation_json(f, cb)}};
  std::ostringstream s;
  s << "size         " << f.size() << "\n"
    << "atoms        " << set_text(f, atoms(f)) << "\n"
    << "maxima       " << set_text(f, maxima(f)) << "\n"
    << "punctured    " << set_text(f, punctured) << "\n"
    << "center       " << set_text(f, center(f)) << "\n"
    << "completely regular " << (cr ? "yes" : "no") << "\n"
    << "pointless    " << (is_pointless(f) ? "yes" : "no") << "\n"
    << "spatial      " << (is_spatial(f) ? "yes" : "no") << "\n"
    << "completely below:\n";
  for (ElementId a = 0; a < f.size(); ++a) {
    ElementSet above;
    for (ElementId b = 0; b < f.size(); ++b)
      if (cb(a, b)) above.push_back(b);
    s << "  " << f.label(a) << " << " << set_text(f, above) << "\n";
  }
  print(g, j, s.str());
}

void show_nucleus(const Nucleus& n, std::optional<std::size_t> steps, const Globals& g) {
  const auto& f = *n.frame();
  nlohmann::json table = nlohmann::json::object();
  std::ostringstream s;
  for (ElementId a = 0; a < f.size(); ++a) {
    table[f.label(a)] = f.label(n(a));
    s << "  " << f.label(a) << " -> " << f.label(n(a)) << "\n";
  }
  nlohmann::json j{{"table", table}, {"kernel", set_json(f, n.kernel())}, {"fixed", set_json(f, n.fixed_points())}};
  if (steps) j["steps"] = *steps;
  s << "kernel " << set_text(f, n.kernel()) << "\n"
    << "fixed  " << set_text(f, n.fixed_points()) << "\n";
  if (steps) s << "converged after " << *steps << " steps\n";
  print(g, j, s.str());
}

void nucleus(const FrameRef& F, const std::string& kind, const Globals& g) {
  if (kind == "sigma") return show_nucleus(sigma_nucleus(F), std::nullopt, g);
  if (kind == "pi") {
    auto it = iterate_prenucleus(pi_prenucleus(F));
    return show_nucleus(it.nucleus, it.steps, g);
  }
  if (kind.rfind("filter:", 0) == 0) {
    auto gens = elements(*F, std::string_view(kind).substr(7));
    auto it = iterate_prenucleus(prenucleus_from_filter(F, filter_generated(*F, gens)));
    return show_nucleus(it.nucleus, it.steps, g);
  }
  throw CLI::ValidationError("--kind", "expected sigma, pi or filter:<elements>");
}

void assembly(const FrameRef& F, bool enumerate, const Globals& g) {
  const auto& f = *F;
  nlohmann::json j{{"open", nlohmann::json::object()}, {"closed", nlohmann::json::object()}};
  std::ostringstream s;
  for (ElementId a = 0; a < f.size(); ++a) {
    auto phi = open_cong(F, a), psi = closed_cong(F, a);
    j["open"][f.label(a)] = congruence_json(phi);
    j["closed"][f.label(a)] = congruence_json(psi);
    s << "open " << f.label(a) << ": " << congruence_text(phi) << "\n"
      << "closed " << f.label(a) << ": " << congruence_text(psi) << "\n";
  }
  auto dense = dense_cong(F);
  j["dense"] = congruence_json(dense);
  s << "dense: " << congruence_text(dense) << "\n";
  if (enumerate) {
    auto all = enumerate_congruences(F);
    j["count"] = all.size();
    j["maximal"] = nlohmann::json::array();
    j["atoms"] = nlohmann::json::array();
    s << all.size() << " congruences\n";
    for (const auto& c : max_congruences(F)) {
      j["maximal"].push_back(congruence_json(c));
      s << "maximal: " << congruence_text(c) << "\n";
    }
    for (const auto& c : atom_congruences(F)) {
      j["atoms"].push_back(congruence_json(c));
      s << "atom: " << congruence_text(c) << "\n";
    }
    j["dot"] = congruence_dot(all);
    s << congruence_dot(all);
  }
  print(g, j, s.str());
}

nlohmann::json hom_map_json(const FrameHom& m) {
  nlohmann::json j = nlohmann::json::object();
  for (ElementId a = 0; a < m.source()->size(); ++a) j[m.source()->label(a)] = m.target()->label(m(a));
  return j;
}

void reflect(const FrameRef& F, const std::vector<std::string>& homs, const Globals& g) {
  const auto& f = *F;
  auto sp = spatial_part(F);
  auto pl = pointless_part(F);
  auto fat = fat_reflection(F);
  nlohmann::json j{{"spatial_part", set_json(f, sp.tops)},
                   {"pointless_part", set_json(f, pl.tops)},
                   {"tau_lands", fat.lands},
                   {"tau_injective", fat.injective},
                   {"fat", fat.fat}};
  std::ostringstream s;
  s << "spatial part   " << set_text(f, sp.tops) << " (" << sp.quotient->size() << " elements)\n"
    << "pointless part " << set_text(f, pl.tops) << " (" << pl.quotient->size() << " elements)\n";
  if (fat.tau) {
    j["tau"] = hom_map_json(*fat.tau);
    s << "tau:\n";
    for (ElementId a = 0; a < f.size(); ++a)
      s << "  " << f.label(a) << " -> " << fat.tau->target()->label((*fat.tau)(a)) << "\n";
  } else {
    s << "tau does not land in the normal form\n";
  }
  s << "tau injective " << (fat.injective ? "yes" : "no") << "\nfat " << (fat.fat ? "yes" : "no") << "\n";
  j["homs"] = nlohmann::json::array();
  for (const auto& path : homs) {
    auto m = load_hom(path);
    auto sk = skinny_conditions(m);
    auto em = em_classify(m);
    j["homs"].push_back({{"file", path},
                         {"kernel_preserved", sk.kernel_preserved},
                         {"maxima_to_kernel", sk.maxima_to_kernel},
                         {"drops", sk.drops},
                         {"skinny", sk.agree() && sk.drops},
                         {"in_e", em.in_e},
                         {"in_m", em.in_m}});
    s << path << ": skinny " << (sk.agree() ? (sk.drops ? "yes" : "no") : "conditions disagree") << ", E "
      << (em.in_e ? "yes" : "no") << ", M " << (em.in_m ? "yes" : "no") << "\n";
  }
  print(g, j, s.str());
}

nlohmann::json filters_json(const FiniteFrame& f, const std::vector<FiniteFilter>& xs) {
  auto j = nlohmann::json::array();
  for (const auto& x : xs) j.push_back(set_json(f, x.members));
  return j;
}

void filters(const FrameRef& F, bool enumerate, const Globals& g) {
  const auto& f = *F;
  nlohmann::json j{{"maxima", nlohmann::json::array()}};
  std::ostringstream s;
  for (auto a : maxima(f)) {
    auto mf = filter_of_max(F, a);
    j["maxima"].push_back({{"element", f.label(a)},
                           {"x", set_json(f, mf.x.members)},
                           {"y", set_json(f, mf.y)},
                           {"maximal_round", mf.maximal_round},
                           {"star_join", f.label(mf.star_join)},
                           {"completely_prime", mf.completely_prime}});
    s << "maximal " << f.label(a) << ": x " << set_text(f, mf.x.members) << ", y " << set_text(f, mf.y)
      << ", maximal round " << (mf.maximal_round ? "yes" : "no") << ", star join " << f.label(mf.star_join)
      << ", completely prime " << (mf.completely_prime ? "yes" : "no") << "\n";
  }
  auto support = spatial_support(F);
  j["x_independent"] = support.x_independent;
  j["y_independent"] = support.y_independent;
  s << "x family independent " << (support.x_independent ? "yes" : "no") << "\n"
    << "y family independent " << (support.y_independent ? "yes" : "no") << "\n";
  if (enumerate) {
    auto rounds = round_filters(F);
    auto maxrounds = maximal_proper_round_filters(F);
    auto ultras = ultrafilters(F);
    j["round"] = filters_json(f, rounds);
    j["maximal_round"] = filters_json(f, maxrounds);
    j["ultrafilters"] = filters_json(f, ultras);
    for (const auto& x : rounds) s << "round " << set_text(f, x.members) << "\n";
    for (const auto& x : maxrounds) s << "maximal round " << set_text(f, x.members) << "\n";
    for (const auto& x : ultras) s << "ultrafilter " << set_text(f, x.members) << "\n";
  }
  print(g, j, s.str());
}

void dot(const FrameRef& F, const std::string& what) {
  const auto& f = *F;
  if (what == "hasse")
    std::cout << frame_dot(f);
  else if (what == "congruences")
    std::cout << congruence_dot(enumerate_congruences(F));
  else if (what == "cb") {
    auto r = completely_below(f);
    std::cout << frame_dot(f, &r);
  } else if (what == "rb") {
    auto r = rather_below(f);
    std::cout << frame_dot(f, &r);
  } else {
    throw CLI::ValidationError("--what", "expected hasse, congruences, cb or rb");
  }
}

void corpus(std::size_t bound, const Globals& g) {
  auto entries = generate_corpus({bound, false});
  auto j = nlohmann::json::array();
  std::ostringstream s;
  for (const auto& e : entries) {
    j.push_back({{"name", e.name}, {"points", e.poset.size}, {"size", e.frame->size()}});
    s << e.name << "  points=" << e.poset.size << "  size=" << e.frame->size() << "\n";
  }
  print(g, j, s.str());
}

}  // namespace

void add_finite_commands(CLI::App& app, const Globals& g, int& /*status*/) {
  {
    auto* cmd = app.add_subcommand("analyze", "Atoms, maxima, punctured set, center and regularity of a frame");
    auto in = std::make_shared<FrameInput>();
    in->add_to(*cmd);
    cmd->callback([in, &g] { analyze(in->load(), g); });
  }
  {
    auto* cmd = app.add_subcommand("nucleus", "Operator table, kernel and fixed set of a nucleus");
    auto in = std::make_shared<FrameInput>();
    auto kind = std::make_shared<std::string>();
    in->add_to(*cmd);
    cmd->add_option("--kind", *kind, "sigma, pi or filter:<comma separated generators>")->required();
    cmd->callback([in, kind, &g] { nucleus(in->load(), *kind, g); });
  }
  {
    auto* cmd = app.add_subcommand("assembly", "Open, closed and dense congruences");
    auto in = std::make_shared<FrameInput>();
    auto enumerate = std::make_shared<bool>(false);
    in->add_to(*cmd);
    cmd->add_flag("--enumerate", *enumerate, "Enumerate the whole congruence lattice");
    cmd->callback([in, enumerate, &g] { assembly(in->load(), *enumerate, g); });
  }
  {
    auto* cmd = app.add_subcommand("reflect", "Spatial and pointless parts, tau, and classification of homs");
    auto in = std::make_shared<FrameInput>();
    auto homs = std::make_shared<std::vector<std::string>>();
    in->add_to(*cmd);
    cmd->add_option("--hom", *homs, "Hom JSON files to classify")->check(CLI::ExistingFile);
    cmd->callback([in, homs, &g] { reflect(in->load(), *homs, g); });
  }
  {
    auto* cmd = app.add_subcommand("dot", "Graphviz output");
    auto in = std::make_shared<FrameInput>();
    auto what = std::make_shared<std::string>("hasse");
    in->add_to(*cmd);
    cmd->add_option("--what", *what, "hasse, congruences, cb or rb (relations drawn dashed)")->capture_default_str();
    cmd->callback([in, what] { dot(in->load(), *what); });
  }
  {
    auto* cmd = app.add_subcommand("corpus", "List the downset frames of small posets");
    auto bound = std::make_shared<std::size_t>(5);
    cmd->add_option("--max-poset-size", *bound, "Largest poset")->capture_default_str()->check(CLI::Range(0, 6));
    cmd->callback([bound, &g] { corpus(*bound, g); });
  }
  {
    auto* cmd = app.add_subcommand("filters", "Filters of maximal elements, round filters, interval point filters");
    auto in = std::make_shared<FrameInput>();
    auto enumerate = std::make_shared<bool>(false);
    in->add_to(*cmd);
    cmd->add_flag("--enumerate-round", *enumerate, "List round filters, maximal round filters and ultrafilters");
    auto point = std::make_shared<std::string>();
    auto challenges = std::make_shared<std::vector<std::string>>();
    auto members = std::make_shared<std::vector<std::string>>();
    cmd->add_option("--filter", *point, "Interval point filter, written point:<rational>");
    cmd->add_option("--challenge", *challenges, "Regularity challenge V for the point filter");
    cmd->add_option("--member", *members, "Member to ask a round witness for");
    cmd->callback([=, &g] {
      if (!point->empty())
        point_filter_report(*point, *challenges, *members, g);
      else
        filters(in->load(), *enumerate, g);
    });
  }
}

}  // namespace pointfree::cli
