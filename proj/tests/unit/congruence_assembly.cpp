#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pointfree/congruence.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/order.hpp"
#include "pointfree/reflection.hpp"

using namespace pointfree;

namespace {
constexpr ElementId bot = 0, m = 1, top3 = 2;
constexpr ElementId a = 1, b = 2;

std::vector<ElementSet> classes_of(const Congruence& c) {
  auto cls = c.classes();
  std::sort(cls.begin(), cls.end());
  return cls;
}

std::vector<Congruence> sorted(std::vector<Congruence> xs) {
  std::sort(xs.begin(), xs.end());
  return xs;
}
}  // namespace

TEST_CASE("open and closed congruences at the ends") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& F = e->frame;
    CHECK(open_cong(F, F->top()).is_identity());
    CHECK(closed_cong(F, F->bottom()).is_identity());
    CHECK(open_cong(F, F->bottom()).is_total());
    CHECK(closed_cong(F, F->top()).is_total());
  }
}

TEST_CASE("open and closed congruences on C3") {
  auto c3 = named_frame("C3");
  CHECK(classes_of(open_cong(c3, m)) == std::vector<ElementSet>{{bot}, {m, top3}});
  CHECK(classes_of(closed_cong(c3, m)) == std::vector<ElementSet>{{bot, m}, {top3}});
  CHECK(cong_join(open_cong(c3, m), closed_cong(c3, m)).is_total());
  CHECK(cong_meet(open_cong(c3, m), closed_cong(c3, m)).is_identity());
}

TEST_CASE("dense congruence") {
  CHECK(dense_cong(named_frame("B3")).is_identity());
  auto c3 = named_frame("C3");
  auto d = dense_cong(c3);
  CHECK(classes_of(d) == std::vector<ElementSet>{{bot}, {m, top3}});
  CHECK(isomorphic(quotient(d).quotient, named_frame("2")));
  for (const auto* e : oracle::frames_up_to(32)) {
    auto q = quotient(dense_cong(e->frame));
    for (ElementId x = 0; x < e->frame->size(); ++x)
      CHECK((q.map(x) == q.quotient->bottom()) == (x == e->frame->bottom()));
  }
}

TEST_CASE("joins of congruences") {
  auto c3 = named_frame("C3");
  auto phi = open_cong(c3, m);
  CHECK(cong_join(phi, identity_congruence(c3)) == phi);
  CHECK_THROWS_AS(cong_join(phi, identity_congruence(named_frame("B2"))), Error);

  // x <= y are related exactly when the open/closed piece at (x, y) is contained.
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    for (const auto& xi : enumerate_congruences(F))
      for (ElementId x = 0; x < F->size(); ++x)
        for (ElementId y = 0; y < F->size(); ++y) {
          if (!F->leq(x, y)) continue;
          bool related = xi.related(x, y);
          bool contains_piece = cong_meet(open_cong(F, x), closed_cong(F, y)).leq(xi);
          CHECK(related == contains_piece);
        }
  }
}

TEST_CASE("generated congruences are least") {
  for (const auto* e : oracle::frames_up_to(8)) {
    const auto& F = e->frame;
    oracle::Lattice lat(*F);
    auto all = lat.all_congruences();
    for (ElementId x = 0; x < F->size(); ++x)
      for (ElementId y = x + 1; y < F->size(); ++y) {
        std::pair<ElementId, ElementId> p{x, y};
        auto g = generated_congruence(F, std::span(&p, 1));
        CHECK(g.related(x, y));
        for (const auto& cls : all)
          if (cls[x] == cls[y]) CHECK(g.leq(Congruence::unchecked(F, cls)));
      }
  }
}

TEST_CASE("kernel congruences of surjections") {
  auto c3 = named_frame("C3");
  CHECK(hom_cong(identity_hom(c3)).is_identity());
  auto sq = fix_quotient(sigma_nucleus(c3)).map;
  CHECK(classes_of(hom_cong(sq)) == std::vector<ElementSet>{{bot, m}, {top3}});
  CHECK_THROWS_AS(hom_cong(FrameHom(named_frame("2"), c3, {0, 2})), Error);

  // Lower bound from the top and bottom fibres.
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    for (const auto& c : enumerate_congruences(F)) {
      auto q = quotient(c).map;
      std::vector<Congruence> parts{identity_congruence(F)};
      for (ElementId x = 0; x < F->size(); ++x) {
        if (q(x) == q.target()->top()) parts.push_back(open_cong(F, x));
        if (q(x) == q.target()->bottom()) parts.push_back(closed_cong(F, x));
      }
      CHECK(cong_join(parts).leq(hom_cong(q)));
    }
  }
}

TEST_CASE("quotients") {
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    CHECK(isomorphic(quotient(identity_congruence(F)).quotient, F));
    for (ElementId x = 0; x < F->size(); ++x) {
      // By the closed congruence: the up-set of x.
      auto upset = F->up_set(x);
      auto qc = quotient(closed_cong(F, x));
      CHECK(qc.quotient->size() == upset.size());
      auto ctops = qc.tops;
      std::sort(ctops.begin(), ctops.end());
      CHECK(ctops == upset);
      // By the open congruence: the image of x -> (-).
      ElementSet image;
      for (ElementId y = 0; y < F->size(); ++y) image.push_back(F->heyting(x, y));
      std::sort(image.begin(), image.end());
      image.erase(std::unique(image.begin(), image.end()), image.end());
      auto qo = quotient(open_cong(F, x));
      auto otops = qo.tops;
      std::sort(otops.begin(), otops.end());
      CHECK(otops == image);
    }
  }
}

TEST_CASE("preimages") {
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    for (const auto& c : enumerate_congruences(F)) {
      auto q = quotient(c).map;
      CHECK(preimage_cong(q, identity_congruence(q.target())) == hom_cong(q));
      CHECK(preimage_cong(q, total_congruence(q.target())).is_total());
    }
  }
}

TEST_CASE("nucleus and congruence round trip") {
  for (const auto* e : oracle::frames_up_to(12))
    for (const auto& c : enumerate_congruences(e->frame)) CHECK(nucleus_congruence(congruence_nucleus(c)) == c);
}

TEST_CASE("enumeration matches exhaustive partition search") {
  for (const auto* e : oracle::frames_up_to(8)) {
    oracle::Lattice lat(*e->frame);
    std::set<std::vector<ElementId>> got;
    for (const auto& c : enumerate_congruences(e->frame)) {
      got.insert(oracle::canonical(c.class_of()));
      CHECK(lat.is_congruence(c.class_of()));
    }
    CHECK(got == lat.all_congruences());
  }
}

TEST_CASE("maximal congruences") {
  CHECK(max_congruences(named_frame("1")).empty());
  auto b2 = named_frame("B2");
  CHECK(sorted(max_congruences(b2)) == sorted({closed_cong(b2, a), closed_cong(b2, b)}));
  // Con C3 is a square: both nontrivial congruences are maximal (and atoms).
  auto c3 = named_frame("C3");
  CHECK(sorted(max_congruences(c3)) == sorted({open_cong(c3, m), closed_cong(c3, m)}));
  CHECK(sorted(atom_congruences(c3)) == sorted({open_cong(c3, m), closed_cong(c3, m)}));
  CHECK(enumerate_congruences(c3).size() == 4);
}

TEST_CASE("maximal and atomic congruences on Boolean frames") {
  for (const char* name : {"2", "B2", "B3", "B4"}) {
    auto F = named_frame(name);
    std::vector<Congruence> closed, open;
    for (auto x : maxima(*F)) {
      closed.push_back(closed_cong(F, x));
      open.push_back(open_cong(F, x));
    }
    CHECK(sorted(max_congruences(F)) == sorted(closed));
    CHECK(sorted(atom_congruences(F)) == sorted(open));
  }
}

TEST_CASE("congruence validation rejects broken partitions") {
  auto c3 = named_frame("C3");
  CHECK_THROWS_AS(Congruence(c3, {0, 1, 0}), Error);
  CHECK(congruence_violation(*c3, {0, 1, 0}).has_value());
  auto b2 = named_frame("B2");
  CHECK_THROWS_AS(Congruence(b2, {0, 0, 1, 2}), Error);
}
