// Invariants stated for every corpus frame whose usual proofs lean on
// complete regularity. They are checked here on the whole corpus exactly as
// stated; finite_properties.cpp checks the same statements on the Boolean
// frames, where the assumption holds.

#include <doctest.h>

#include <algorithm>

#include "oracles.hpp"
#include "pointfree/congruence.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/filters.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/order.hpp"
#include "pointfree/reflection.hpp"

using namespace pointfree;

namespace {

std::vector<FrameHom> surjections_of(const FrameRef& F) {
  std::vector<FrameHom> out;
  for (const auto& c : enumerate_congruences(F)) out.push_back(quotient(c).map);
  return out;
}

bool intervals_transfer(const FiniteFrame& f, ElementId a, ElementId x, ElementId y, ElementId top) {
  for (ElementId c = 0; c < f.size(); ++c) {
    if (f.leq(a, c) && f.leq(c, x)) {
      auto d = f.join(c, y);
      if (!f.leq(y, d) || !f.leq(d, top) || f.meet(d, x) != c) return false;
    }
    if (f.leq(y, c) && f.leq(c, top)) {
      auto d = f.meet(c, x);
      if (!f.leq(a, d) || !f.leq(d, x) || f.join(d, y) != c) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("sigma meet pi is the identity") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    auto s = sigma_nucleus(e->frame);
    auto p = pi_nucleus(e->frame);
    for (ElementId a = 0; a < f.size(); ++a) CHECK_MESSAGE(f.meet(s(a), p(a)) == a, e->name << " at " << f.label(a));
  }
}

TEST_CASE("intervals around sigma and pi are isomorphic") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    auto s = sigma_nucleus(e->frame);
    auto p = pi_nucleus(e->frame);
    for (ElementId a = 0; a < f.size(); ++a) {
      auto top = p(s(a));
      CHECK_MESSAGE((intervals_transfer(f, a, p(a), s(a), top) && intervals_transfer(f, a, s(a), p(a), top)),
                    e->name << " at " << f.label(a));
    }
  }
}

TEST_CASE("kernel of pi is the normal filter of the maxima") {
  for (const auto* e : oracle::frames_up_to(32))
    CHECK_MESSAGE(pi_nucleus(e->frame).kernel() == normal_filter_generated(e->frame, maxima(*e->frame)), e->name);
}

TEST_CASE("congruence of pi is the join of the open congruences at maxima") {
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    std::vector<Congruence> opens{identity_congruence(F)};
    for (auto c : maxima(*F)) opens.push_back(open_cong(F, c));
    CHECK_MESSAGE(nucleus_congruence(pi_nucleus(F)) == cong_join(opens), e->name);
  }
}

TEST_CASE("maximal congruences are closed and atoms are open at maxima") {
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    std::vector<Congruence> closed, open;
    for (auto c : maxima(*F)) {
      closed.push_back(closed_cong(F, c));
      open.push_back(open_cong(F, c));
    }
    auto mx = max_congruences(F);
    auto at = atom_congruences(F);
    std::sort(closed.begin(), closed.end());
    std::sort(open.begin(), open.end());
    std::sort(mx.begin(), mx.end());
    std::sort(at.begin(), at.end());
    CHECK_MESSAGE(mx == closed, e->name);
    CHECK_MESSAGE(at == open, e->name);
  }
}

TEST_CASE("pointless and spatial parts separate elements") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& F = e->frame;
    auto meet = cong_meet(nucleus_congruence(sigma_nucleus(F)), nucleus_congruence(pi_nucleus(F)));
    CHECK_MESSAGE(meet.is_identity(), e->name);
  }
}

TEST_CASE("pointless reflections are recognised") {
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    auto pi = nucleus_congruence(pi_nucleus(F));
    for (const auto& m : surjections_of(F)) {
      bool is_pi = hom_cong(m) == pi;
      CHECK_MESSAGE(is_pi == (in_e_class(m) && is_pointless(*m.target())), e->name);
    }
  }
}

TEST_CASE("decomposition diagram exists") {
  for (const auto* e : oracle::frames_up_to(32)) {
    auto d = decomposition_diagram(e->frame);
    CHECK_MESSAGE(d.atomless_to_pointless.has_value(), e->name);
    CHECK_MESSAGE(d.spatial_to_scattered.has_value(), e->name);
  }
}

TEST_CASE("tau is injective") {
  for (const auto* e : oracle::frames_up_to(32)) CHECK_MESSAGE(fat_reflection(e->frame).injective, e->name);
}

TEST_CASE("factored sources lie in M") {
  for (const auto* x : oracle::frames_up_to(8))
    for (const auto* y : oracle::frames_up_to(4))
      for (const auto& m : all_homs(x->frame, y->frame)) {
        if (!is_skinny(m)) continue;
        auto f = em_factorize(Source{x->frame, {m}});
        CHECK_MESSAGE(f.hat_in_m, x->name << " -> " << y->name);
      }
}

TEST_CASE("star joins of maximal round filters are maximal or top") {
  for (const auto* e : oracle::frames_up_to(8)) {
    const auto& F = e->frame;
    for (const auto& x : maximal_proper_round_filters(F)) {
      auto s = star_join(x);
      CHECK_MESSAGE((s == F->top() || contains(maxima(*F), s)), e->name);
    }
  }
}
