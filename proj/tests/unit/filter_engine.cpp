#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pointfree/congruence.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/filters.hpp"
#include "pointfree/order.hpp"

using namespace pointfree;

namespace {
constexpr ElementId bot = 0, m = 1, top3 = 2;
constexpr ElementId a = 1, b = 2, top4 = 3;

bool subset(const ElementSet& x, const ElementSet& y) { return std::includes(y.begin(), y.end(), x.begin(), x.end()); }

bool is_boolean(const FiniteFrame& f) { return center(f).size() == f.size(); }

std::vector<ElementSet> members_of(const std::vector<FiniteFilter>& xs) {
  std::vector<ElementSet> out;
  for (const auto& x : xs) out.push_back(x.members);
  std::sort(out.begin(), out.end());
  return out;
}
}  // namespace

TEST_CASE("filter construction") {
  auto b2 = named_frame("B2");
  CHECK(principal_filter(b2, a).members == ElementSet{a, top4});
  CHECK_THROWS_AS(make_filter(b2, {a, b}), Error);
  CHECK_THROWS_AS(make_filter(b2, {}), Error);
  CHECK(make_filter(b2, {a, b, top4, bot}).members.size() == 4);
  CHECK_FALSE(principal_filter(b2, bot).proper());
}

TEST_CASE("all filters and ultrafilters match subset enumeration") {
  for (const auto* e : oracle::frames_up_to(10)) {
    const auto& F = e->frame;
    auto expect = oracle::Lattice(*F).all_filters();
    std::set<ElementSet> got;
    for (const auto& x : all_filters(F)) got.insert(x.members);
    CHECK(got == expect);

    std::vector<ElementSet> maximal;
    for (const auto& x : expect) {
      if (contains(x, F->bottom())) continue;
      bool top = std::none_of(expect.begin(), expect.end(), [&](const ElementSet& y) {
        return y != x && !contains(y, F->bottom()) && subset(x, y);
      });
      if (top) maximal.push_back(x);
    }
    std::sort(maximal.begin(), maximal.end());
    CHECK(members_of(ultrafilters(F)) == maximal);
  }
}

TEST_CASE("roundness of finite filters") {
  auto c3 = named_frame("C3");
  auto fm = principal_filter(c3, m);
  CHECK_FALSE(is_round(fm));
  REQUIRE(roundness_failure(fm));
  CHECK(*roundness_failure(fm) == m);
  CHECK(round_core(fm).members == ElementSet{top3});

  for (const auto* e : oracle::frames_up_to(16)) {
    const auto& F = e->frame;
    oracle::Lattice lat(*F);
    for (ElementId x = 0; x < F->size(); ++x) {
      auto fx = principal_filter(F, x);
      CHECK(is_round(fx) == lat.complemented(x));
      ElementSet core;
      for (auto y : fx.members)
        for (auto z : fx.members)
          if (lat.completely_below(z, y)) {
            core.push_back(y);
            break;
          }
      CHECK(round_core(fx).members == core);
      CHECK(star_join(fx) == F->pseudocomplement(x));
      CHECK(is_regular(fx) == (is_round(fx) && F->pseudocomplement(x) == F->top()));
    }
  }
}

TEST_CASE("maximal round filters") {
  auto b2 = named_frame("B2");
  CHECK(is_maximal_round(principal_filter(b2, a)));
  CHECK_FALSE(is_maximal_round(principal_filter(b2, top4)));

  for (const auto* e : oracle::frames_up_to(16)) {
    const auto& F = e->frame;
    auto rounds = round_filters(F);
    for (const auto& x : rounds) CHECK(is_round(x));
    std::vector<ElementSet> expect;
    for (const auto& x : rounds) {
      if (!x.proper()) continue;
      bool top = std::none_of(rounds.begin(), rounds.end(), [&](const FiniteFilter& y) {
        return y.proper() && y.members != x.members && subset(x.members, y.members);
      });
      if (top) expect.push_back(x.members);
    }
    std::sort(expect.begin(), expect.end());
    CHECK(members_of(maximal_proper_round_filters(F)) == expect);
    if (is_boolean(*F))
      for (const auto& x : rounds)
        if (x.proper()) CHECK(is_maximal_round(x) == (std::find(expect.begin(), expect.end(), x.members) != expect.end()));
  }
}

TEST_CASE("filters of maximal elements") {
  auto b2 = named_frame("B2");
  auto fa = filter_of_max(b2, a);
  CHECK(fa.x.members == ElementSet{b, top4});
  CHECK(fa.y == ElementSet{top4});
  CHECK(fa.maximal_round);
  CHECK(fa.completely_prime);

  auto c3 = named_frame("C3");
  auto fm = filter_of_max(c3, m);
  CHECK(fm.x.members == ElementSet{top3});
  CHECK(fm.completely_prime);
  CHECK_THROWS_AS(filter_of_max(c3, bot), Error);

  for (const auto* e : oracle::frames_up_to(16))
    for (auto c : maxima(*e->frame)) {
      auto r = filter_of_max(e->frame, c);
      ElementSet expect;
      for (ElementId x = 0; x < e->frame->size(); ++x)
        if (!e->frame->leq(x, c)) expect.push_back(x);
      CHECK(r.x.members == expect);
      CHECK(r.completely_prime);
    }
}

TEST_CASE("spatial support") {
  for (const char* name : {"2", "B2", "B3"}) {
    auto s = spatial_support(named_frame(name));
    CHECK(s.x_independent);
  }
  for (const auto* e : oracle::frames_up_to(16)) {
    const auto& F = e->frame;
    auto s = spatial_support(F);
    CHECK(s.x_filters.size() == maxima(*F).size());
    bool expect = true;
    for (std::size_t i = 0; i < s.x_filters.size(); ++i)
      for (std::size_t j = i + 1; j < s.x_filters.size(); ++j) {
        bool found = false;
        for (auto p : s.x_filters[i].members)
          for (auto q : s.x_filters[j].members) found = found || F->meet(p, q) == F->bottom();
        expect = expect && found;
      }
    CHECK(s.x_independent == expect);
  }
}

TEST_CASE("image filters") {
  for (const auto* e : oracle::frames_up_to(8)) {
    const auto& F = e->frame;
    for (const auto& c : enumerate_congruences(F)) {
      auto q = quotient(c).map;
      for (const auto& x : all_filters(F)) {
        auto img = image_filter(q, x);
        CHECK(img.proper == img.proper_by_adjoint);
        for (auto y : x.members) CHECK(img.filter.contains(q(y)));
      }
    }
  }
  auto c3 = named_frame("C3");
  CHECK_THROWS_AS(image_filter(FrameHom(named_frame("2"), c3, {0, 2}), principal_filter(named_frame("2"), 1)), Error);
}

TEST_CASE("round ideals and filters") {
  for (const auto* e : oracle::frames_up_to(16)) {
    const auto& F = e->frame;
    for (const auto& x : round_filters(F)) {
      auto ideal = round_ideal_of(x);
      CHECK(is_ideal(*F, ideal));
      CHECK(is_round_ideal(*F, ideal));
      CHECK(round_filter_of(F, ideal) == x);
    }
  }
}

TEST_CASE("independence") {
  auto b2 = named_frame("B2");
  std::vector<FiniteFilter> fam{principal_filter(b2, a), principal_filter(b2, b)};
  CHECK(is_independent(fam));
  fam.push_back(principal_filter(b2, top4));
  CHECK_FALSE(is_independent(fam));
}
