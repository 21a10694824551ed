#include <algorithm>
#include <set>

#include "pointfree/filters.hpp"
#include "pointfree/interval.hpp"
#include "pointfree/order.hpp"
#include "suite_support.hpp"

namespace pointfree::detail {

namespace {

bool subset(const ElementSet& a, const ElementSet& b) { return std::includes(b.begin(), b.end(), a.begin(), a.end()); }

bool listed(const std::vector<FiniteFilter>& xs, const FiniteFilter& x) {
  return std::any_of(xs.begin(), xs.end(), [&](const FiniteFilter& y) { return y.members == x.members; });
}

std::string members_text(const FiniteFrame& f, const ElementSet& xs) {
  std::string s = "{";
  for (auto a : xs) s += (s.size() > 1 ? " " : "") + f.label(a);
  return s + "}";
}

}  // namespace

SuiteReport filter_engine(const SuiteOptions& o) {
  SuiteRun run("filters", o);
  for (const auto* c : {"round core is the largest round subfilter", "maximality criterion",
                        "maximal round filters are independent", "star join of a maximal round filter",
                        "maximal round filters are ultrafilter cores", "round primeness characterises maximality",
                        "round filters and round ideals correspond", "point filter answers regularity challenges"})
    run.declare(c);

  for (const auto* entry : run.frames_up_to(8)) {
    const auto& F = entry->frame;
    const auto& f = *F;
    auto where = "frame " + entry->name;
    std::vector<FiniteFilter> filters, rounds, maxrounds, ultras;
    run.guard("round core is the largest round subfilter", where, [&] {
      filters = all_filters(F);
      rounds = round_filters(F);
      maxrounds = maximal_proper_round_filters(F);
      ultras = ultrafilters(F);
    });
    auto at = [&](const FiniteFilter& x) { return where + ": filter " + members_text(f, x.members); };

    for (const auto& x : filters) {
      if (!x.proper()) continue;
      run.guard("round core is the largest round subfilter", where, [&] {
        auto core = round_core(x);
        bool ok = is_round(core) && subset(core.members, x.members);
        for (const auto& y : rounds)
          if (ok && subset(y.members, x.members)) ok = subset(y.members, core.members);
        run.check("round core is the largest round subfilter", ok, [&] { return at(x); });
      });
    }

    for (const auto& x : rounds) {
      if (!x.proper()) continue;
      bool maximal = listed(maxrounds, x);
      run.guard("maximality criterion", where, [&] {
        run.check("maximality criterion", is_maximal_round(x) == maximal, [&] { return at(x); });
      });
      run.guard("round primeness characterises maximality", where, [&] {
        run.check("round primeness characterises maximality", has_round_primeness(x) == maximal,
                  [&] { return at(x); });
      });
    }

    run.guard("maximal round filters are independent", where, [&] {
      run.check("maximal round filters are independent", is_independent(maxrounds), [&] { return where; });
    });

    for (const auto& x : maxrounds)
      run.guard("star join of a maximal round filter", where, [&] {
        auto s = star_join(x);
        bool prime = s == f.top() || is_prime(f, s);
        bool ok = prime && (s == f.top() || (contains(maxima(f), s) && filter_of_max(F, s).x.members == x.members));
        run.check("star join of a maximal round filter", ok,
                  [&] { return at(x) + " has star join " + f.label(s); });
      });

    run.guard("maximal round filters are ultrafilter cores", where, [&] {
      std::set<ElementSet> cores, maxes;
      for (const auto& y : ultras) cores.insert(round_core(y).members);
      for (const auto& x : maxrounds) maxes.insert(x.members);
      run.check("maximal round filters are ultrafilter cores", cores == maxes, [&] { return where; });
    });

    run.guard("round filters and round ideals correspond", where, [&] {
      for (const auto& x : rounds) {
        auto ideal = round_ideal_of(x);
        bool ok = is_round_ideal(f, ideal) && round_filter_of(F, ideal).members == x.members;
        for (const auto& y : rounds)
          if (ok && subset(x.members, y.members)) ok = subset(ideal, round_ideal_of(y));
        run.check("round filters and round ideals correspond", ok, [&] { return at(x); });
      }
      for (ElementId a = 0; a < f.size(); ++a) {
        auto ideal = f.down_set(a);
        if (!is_round_ideal(f, ideal)) continue;
        run.check("round filters and round ideals correspond", round_ideal_of(round_filter_of(F, ideal)) == ideal,
                  [&] { return where + ": ideal below " + f.label(a); });
      }
    });
  }

  auto& rng = run.rng();
  const std::size_t wanted = std::max<std::size_t>(200, o.samples / 4);
  std::set<std::string> seen;
  std::uniform_int_distribution<int> grid(-16, 16);
  for (std::size_t attempt = 0; seen.size() < wanted && attempt < wanted * 20; ++attempt) {
    auto v = random_unpunctured(rng);
    if (v.is_full() || !seen.insert(to_string(v)).second) continue;
    Rational x = Rational(grid(rng)) / 4;
    auto filter = point_filter(x);
    run.guard("point filter answers regularity challenges", "x=" + to_string(x) + " V=" + to_string(v), [&] {
      auto b = filter.regular_witness(v);
      if (o.mutate && b) b = io_join(*b, io_pseudocomplement(*b));
      bool ok = b && filter.contains(*b) && !io_leq(io_pseudocomplement(*b), v);
      run.check("point filter answers regularity challenges", ok,
                [&] { return "x=" + to_string(x) + " V=" + to_string(v); });
    });
  }
  run.check("point filter answers regularity challenges", seen.size() >= wanted,
            [&] { return "only " + std::to_string(seen.size()) + " distinct challenges"; });
  return run.finish();
}

}  // namespace pointfree::detail
