#include <doctest.h>

#include "oracles.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/order.hpp"

using namespace pointfree;

namespace {
constexpr ElementId bot = 0, m = 1, top3 = 2;
constexpr ElementId a = 1, b = 2, top4 = 3;
}  // namespace

TEST_CASE("plus sets") {
  auto b2 = named_frame("B2");
  CHECK(plus_set(*b2, bot) == ElementSet{bot, a, b});
  auto c3 = named_frame("C3");
  CHECK(plus_set(*c3, m) == ElementSet{m, top3});
  for (const auto* e : oracle::frames_up_to(32)) CHECK(plus_set(*e->frame, e->frame->top()) == ElementSet{e->frame->top()});
}

TEST_CASE("every proper element of a finite frame is punctured") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    for (ElementId x = 0; x < f.size(); ++x) CHECK(is_punctured(f, x).punctured == (x != f.top()));
    CHECK(unpunctured(f) == ElementSet{f.top()});
  }
  auto b2 = named_frame("B2");
  auto r = is_punctured(*b2, bot);
  REQUIRE(r.witness);
  CHECK(b2->meet(r.witness->maximal, r.witness->above) == bot);
  CHECK(contains(maxima(*b2), r.witness->maximal));
}

TEST_CASE("first-order and maximal-element membership tests") {
  auto c3 = named_frame("C3");
  CHECK_FALSE(first_order_unpunctured(*c3, bot));
  // The two tests part ways once the frame is not Boolean.
  CHECK(maximal_heyting_unpunctured(*c3, bot));
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    CHECK(first_order_unpunctured(f, f.top()));
    if (center(f).size() != f.size()) continue;
    for (ElementId x = 0; x < f.size(); ++x) CHECK(first_order_unpunctured(f, x) == maximal_heyting_unpunctured(f, x));
  }
}

TEST_CASE("rather below") {
  auto c3 = named_frame("C3");
  auto rb = rather_below(*c3);
  CHECK_FALSE(rb(m, m));
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    auto r = rather_below(f);
    for (ElementId x = 0; x < f.size(); ++x) {
      CHECK(r(f.bottom(), x));
      CHECK(r(x, f.top()));
      if (f.is_complemented(x)) CHECK(r(x, x));
      for (ElementId y = 0; y < f.size(); ++y)
        CHECK(r(x, y) == (f.join(f.pseudocomplement(x), y) == f.top()));
    }
  }
}

TEST_CASE("completely below examples") {
  auto b2 = named_frame("B2");
  auto cb = completely_below(*b2);
  for (ElementId x = 0; x < 4; ++x)
    for (ElementId y = 0; y < 4; ++y) CHECK(cb(x, y) == b2->leq(x, y));

  auto c3 = named_frame("C3");
  auto t = completely_below(*c3);
  CHECK(t(bot, bot));
  CHECK(t(bot, top3));
  CHECK(t(top3, top3));
  CHECK(t(m, top3));
  CHECK(t(bot, m));
  CHECK_FALSE(t(m, m));
  CHECK(is_completely_below(*c3, m, top3));
  CHECK_FALSE(is_completely_below(*c3, m, m));
}

TEST_CASE("completely below matches the complemented-interposer scan") {
  for (const auto* e : oracle::frames_up_to(16)) {
    const auto& f = *e->frame;
    oracle::Lattice lat(f);
    auto cb = completely_below(f);
    for (ElementId x = 0; x < f.size(); ++x)
      for (ElementId y = 0; y < f.size(); ++y) CHECK(cb(x, y) == lat.completely_below(x, y));
  }
}

TEST_CASE("pointless and interpolative") {
  CHECK(is_pointless(*named_frame("1")));
  CHECK(is_interpolative(*named_frame("1")));
  for (const auto* e : oracle::frames_up_to(32)) {
    if (e->frame->size() < 2) continue;
    CHECK_FALSE(is_pointless(*e->frame));
    CHECK_FALSE(is_interpolative(*e->frame));
  }
}

TEST_CASE("centers") {
  CHECK(center(*named_frame("B2")) == ElementSet{bot, a, b, top4});
  CHECK(center(*named_frame("C3")) == ElementSet{bot, top3});
  CHECK(center(*named_frame("C4")) == ElementSet{0, 3});
  for (const auto* e : oracle::frames_up_to(16)) {
    oracle::Lattice lat(*e->frame);
    ElementSet expect;
    for (ElementId x = 0; x < e->frame->size(); ++x)
      if (lat.complemented(x)) expect.push_back(x);
    CHECK(center(*e->frame) == expect);
  }
}

TEST_CASE("complete regularity") {
  CHECK(is_completely_regular(*named_frame("B2")));
  CHECK_FALSE(is_completely_regular(*named_frame("C3")));
  CHECK(is_completely_regular(*named_frame("1")));
  // On a finite frame this is exactly Booleanness.
  for (const auto* e : oracle::frames_up_to(32))
    CHECK(is_completely_regular(*e->frame) == (center(*e->frame).size() == e->frame->size()));
}

TEST_CASE("atoms, maxima and primes") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    CHECK(atoms(f) == oracle::atoms(f));
    CHECK(maxima(f) == oracle::maxima(f));
    for (ElementId x = 0; x < f.size(); ++x) {
      bool prime = x != f.top();
      for (ElementId y = 0; y < f.size() && prime; ++y)
        for (ElementId z = 0; z < f.size() && prime; ++z)
          if (f.leq(f.meet(y, z), x) && !f.leq(y, x) && !f.leq(z, x)) prime = false;
      CHECK(is_prime(f, x) == prime);
    }
  }
}
