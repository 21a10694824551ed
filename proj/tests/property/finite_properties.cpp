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

bool is_boolean(const FiniteFrame& f) { return center(f).size() == f.size(); }

std::vector<const CorpusEntry*> boolean_frames() {
  std::vector<const CorpusEntry*> out;
  for (const auto* e : oracle::frames_up_to(32))
    if (is_boolean(*e->frame)) out.push_back(e);
  return out;
}

std::vector<FrameHom> surjections_of(const FrameRef& F) {
  std::vector<FrameHom> out;
  for (const auto& c : enumerate_congruences(F)) out.push_back(quotient(c).map);
  return out;
}

ElementSet fixed_set(const std::vector<ElementId>& op) {
  ElementSet out;
  for (ElementId x = 0; x < op.size(); ++x)
    if (op[x] == x) out.push_back(x);
  return out;
}

// Map c ↦ c ∨ y carries [a, x] onto [y, top] with inverse d ↦ d ∧ x.
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

TEST_CASE("heyting adjunction on every corpus frame") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    for (ElementId a = 0; a < f.size(); ++a)
      for (ElementId b = 0; b < f.size(); ++b)
        for (ElementId c = 0; c < f.size(); ++c) CHECK(f.leq(c, f.heyting(a, b)) == f.leq(f.meet(a, c), b));
  }
}

TEST_CASE("right adjoints of homs") {
  auto check = [](const FrameHom& m) {
    auto ra = right_adjoint(m);
    const auto& s = *m.source();
    const auto& t = *m.target();
    for (ElementId a = 0; a < s.size(); ++a)
      for (ElementId b = 0; b < t.size(); ++b) CHECK(t.leq(m(a), b) == s.leq(a, ra[b]));
  };
  for (const auto* x : oracle::frames_up_to(8))
    for (const auto* y : oracle::frames_up_to(5))
      for (const auto& m : all_homs(x->frame, y->frame)) check(m);
  for (const auto* x : oracle::frames_up_to(12))
    for (const auto& q : surjections_of(x->frame)) check(q);
}

TEST_CASE("downset lattices pass validation") {
  for (std::size_t n = 0; n <= 5; ++n)
    for (const auto& p : poset_classes(n)) {
      auto d = downset_lattice(p);
      PosetSpec covers{d->size(), {}};
      for (ElementId a = 0; a < d->size(); ++a)
        for (auto c : oracle::covers_of(*d, a)) covers.covers.emplace_back(a, c);
      FrameRef rebuilt;
      CHECK_NOTHROW(rebuilt = build_frame(covers));
      if (rebuilt) CHECK(isomorphic(rebuilt, d));
    }
}

TEST_CASE("isomorphism is an equivalence relation") {
  auto small = oracle::frames_up_to(8);
  // Include a relabelled copy of each frame so that the relation has work to do.
  std::vector<FrameRef> frames;
  for (const auto* e : small) {
    frames.push_back(e->frame);
    std::vector<std::pair<ElementId, ElementId>> flipped;
    const auto n = e->frame->size();
    for (ElementId a = 0; a < n; ++a)
      for (auto c : oracle::covers_of(*e->frame, a)) flipped.emplace_back(n - 1 - a, n - 1 - c);
    frames.push_back(build_frame({n, flipped}));
  }
  const auto k = frames.size();
  std::vector<char> iso(k * k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) iso[i * k + j] = isomorphic(frames[i], frames[j]);
  for (std::size_t i = 0; i < k; ++i) {
    CHECK(iso[i * k + i]);
    for (std::size_t j = 0; j < k; ++j) {
      CHECK(iso[i * k + j] == iso[j * k + i]);
      for (std::size_t l = 0; l < k; ++l)
        if (iso[i * k + j] && iso[j * k + l]) CHECK(iso[i * k + l]);
    }
  }
}

TEST_CASE("plus sets are stable under meets") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    for (ElementId a = 0; a < f.size(); ++a)
      for (ElementId b = 0; b < f.size(); ++b) {
        auto target = plus_set(f, f.meet(a, b));
        for (auto c : plus_set(f, b)) CHECK(contains(target, f.meet(a, c)));
      }
  }
}

TEST_CASE("maxima, atoms and covers on completely regular frames") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    // Maxima are the lower covers of top on any finite frame.
    ElementSet below_top;
    for (ElementId a = 0; a < f.size(); ++a)
      if (contains(oracle::covers_of(f, a), f.top())) below_top.push_back(a);
    CHECK(maxima(f) == below_top);
    if (!is_completely_regular(f)) continue;

    ElementSet primes;
    for (ElementId a = 0; a < f.size(); ++a)
      if (is_prime(f, a)) primes.push_back(a);
    CHECK(maxima(f) == primes);

    ElementSet complements;
    for (auto c : maxima(f)) complements.push_back(f.pseudocomplement(c));
    std::sort(complements.begin(), complements.end());
    CHECK(atoms(f) == complements);

    for (ElementId a = 0; a < f.size(); ++a)
      for (ElementId c = 0; c < f.size(); ++c) {
        bool covers = contains(oracle::covers_of(f, a), c);
        bool by_heyting = f.leq(a, c) && a != c && contains(maxima(f), f.heyting(c, a));
        CHECK(covers == by_heyting);
      }
  }
}

TEST_CASE("completely below interpolates and is monotone") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    auto cb = completely_below(f);
    for (ElementId a = 0; a < f.size(); ++a)
      for (ElementId b = 0; b < f.size(); ++b) {
        if (!cb(a, b)) continue;
        bool between = false;
        for (ElementId c = 0; c < f.size() && !between; ++c) between = cb(a, c) && cb(c, b);
        CHECK(between);
        for (ElementId a2 = 0; a2 < f.size(); ++a2)
          for (ElementId b2 = 0; b2 < f.size(); ++b2)
            if (f.leq(a2, a) && f.leq(b, b2)) CHECK(cb(a2, b2));
      }
  }
}

TEST_CASE("iterated prenuclei are nuclei with the same fixed set") {
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    oracle::Lattice lat(*F);
    std::vector<Prenucleus> ps{pi_prenucleus(F)};
    for (const auto& x : lat.all_filters()) ps.push_back(prenucleus_from_filter(F, x));
    for (const auto& p : ps) {
      auto it = iterate_prenucleus(p);
      CHECK(lat.is_nucleus(it.nucleus.table()));
      CHECK(fixed_set(it.nucleus.table()) == fixed_set(p.table()));
      CHECK(it.steps <= F->size());
    }
  }
}

TEST_CASE("kernels of sigma and pi") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& f = *e->frame;
    ElementSet expect;
    for (ElementId a = 0; a < f.size(); ++a) {
      auto mx = maxima(f);
      if (std::none_of(mx.begin(), mx.end(), [&](ElementId c) { return f.leq(a, c); })) expect.push_back(a);
    }
    CHECK(sigma_nucleus(e->frame).kernel() == expect);
    auto s = sigma_nucleus(e->frame);
    auto p = pi_nucleus(e->frame);
    for (ElementId a = 0; a < f.size(); ++a) CHECK(s(p(a)) == f.top());
  }
  for (const auto* e : boolean_frames()) {
    auto F = e->frame;
    CHECK(pi_nucleus(F).kernel() == normal_filter_generated(F, maxima(*F)));
  }
}

TEST_CASE("sigma and pi on Boolean frames") {
  for (const auto* e : boolean_frames()) {
    const auto& F = e->frame;
    const auto& f = *F;
    auto s = sigma_nucleus(F);
    auto p = pi_nucleus(F);
    for (ElementId a = 0; a < f.size(); ++a) {
      CHECK(f.meet(s(a), p(a)) == a);
      auto top = p(s(a));
      CHECK(intervals_transfer(f, a, p(a), s(a), top));
      CHECK(intervals_transfer(f, a, s(a), p(a), top));
    }
    if (f.size() <= 12) {
      std::vector<Congruence> opens;
      for (auto c : maxima(f)) opens.push_back(open_cong(F, c));
      CHECK(nucleus_congruence(p) == (opens.empty() ? identity_congruence(F) : cong_join(opens)));
    }
    CHECK(cong_meet(nucleus_congruence(s), nucleus_congruence(p)).is_identity());
  }
}

TEST_CASE("every congruence operation yields a congruence") {
  for (const auto* e : oracle::frames_up_to(16)) {
    const auto& F = e->frame;
    oracle::Lattice lat(*F);
    std::vector<Congruence> made{dense_cong(F), identity_congruence(F), total_congruence(F)};
    for (ElementId a = 0; a < F->size(); ++a) {
      made.push_back(open_cong(F, a));
      made.push_back(closed_cong(F, a));
      for (ElementId b = 0; b < F->size(); ++b) {
        made.push_back(cong_join(open_cong(F, a), closed_cong(F, b)));
        made.push_back(cong_meet(open_cong(F, a), closed_cong(F, b)));
        std::pair<ElementId, ElementId> pr{a, b};
        made.push_back(generated_congruence(F, std::span(&pr, 1)));
      }
    }
    for (const auto& c : made) CHECK(lat.is_congruence(c.class_of()));
  }
}

TEST_CASE("maximal and atomic congruences on Boolean frames") {
  for (const auto* e : boolean_frames()) {
    const auto& F = e->frame;
    if (F->size() > 12) continue;
    std::vector<Congruence> closed, open;
    for (auto c : maxima(*F)) {
      closed.push_back(closed_cong(F, c));
      open.push_back(open_cong(F, c));
    }
    auto sorted = [](std::vector<Congruence> xs) {
      std::sort(xs.begin(), xs.end());
      return xs;
    };
    CHECK(sorted(max_congruences(F)) == sorted(closed));
    CHECK(sorted(atom_congruences(F)) == sorted(open));
  }
}

TEST_CASE("preimage is an order isomorphism onto the upper set of the kernel") {
  for (const auto* e : oracle::frames_up_to(8)) {
    const auto& F = e->frame;
    auto all = enumerate_congruences(F);
    for (const auto& c : all) {
      auto q = quotient(c).map;
      auto target = enumerate_congruences(q.target());
      std::vector<Congruence> above;
      for (const auto& d : all)
        if (c.leq(d)) above.push_back(d);
      std::vector<Congruence> images;
      for (const auto& d : target) images.push_back(preimage_cong(q, d));
      for (const auto& im : images) CHECK(c.leq(im));
      auto si = images;
      std::sort(si.begin(), si.end());
      std::sort(above.begin(), above.end());
      CHECK(si == above);
      for (std::size_t i = 0; i < target.size(); ++i)
        for (std::size_t j = 0; j < target.size(); ++j) CHECK(target[i].leq(target[j]) == images[i].leq(images[j]));
    }
  }
}

TEST_CASE("scattered and atomless parts separate elements") {
  for (const auto* e : oracle::frames_up_to(32)) {
    const auto& F = e->frame;
    auto x = pi_nucleus(F)(F->bottom());
    auto phi = open_cong(F, x);
    auto psi = closed_cong(F, x);
    for (ElementId a = 0; a < F->size(); ++a)
      for (ElementId b = a + 1; b < F->size(); ++b) CHECK_FALSE((phi.related(a, b) && psi.related(a, b)));
    CHECK(scattered_atomless_parts(F).pairing_injective);
  }
}

TEST_CASE("spatial reflections are recognised") {
  for (const auto* e : oracle::frames_up_to(12)) {
    const auto& F = e->frame;
    auto sigma = nucleus_congruence(sigma_nucleus(F));
    for (const auto& n : surjections_of(F)) {
      bool is_sigma = hom_cong(n) == sigma;
      CHECK(is_sigma == (in_m_class(n) && is_spatial(*n.target())));
    }
  }
}

TEST_CASE("pointless reflections are recognised on Boolean frames") {
  for (const auto* e : boolean_frames()) {
    const auto& F = e->frame;
    if (F->size() > 12) continue;
    auto pi = nucleus_congruence(pi_nucleus(F));
    for (const auto& m : surjections_of(F)) {
      bool is_pi = hom_cong(m) == pi;
      CHECK(is_pi == (in_e_class(m) && is_pointless(*m.target())));
    }
  }
}

TEST_CASE("skinny conditions agree on every hom") {
  for (const auto* x : oracle::frames_up_to(8))
    for (const auto* y : oracle::frames_up_to(8))
      for (const auto& m : all_homs(x->frame, y->frame)) CHECK(skinny_conditions(m).agree());
}

TEST_CASE("decomposition diagram on Boolean frames") {
  for (const auto* e : boolean_frames()) {
    auto d = decomposition_diagram(e->frame);
    CHECK(d.atomless_to_pointless.has_value());
    CHECK(d.spatial_to_scattered.has_value());
    CHECK(d.pointless_spatial_injective);
    CHECK(d.scattered_atomless_injective);
    CHECK(fat_reflection(e->frame).injective);
  }
}

TEST_CASE("factorisations of skinny sources") {
  for (const auto* x : oracle::frames_up_to(8)) {
    std::vector<FrameHom> arms;
    for (const auto* y : oracle::frames_up_to(4))
      for (const auto& m : all_homs(x->frame, y->frame))
        if (is_skinny(m)) arms.push_back(m);
    for (std::size_t i = 0; i < arms.size(); ++i) {
      auto f = em_factorize(Source{x->frame, {arms[i]}});
      CHECK(f.e_in_e);
      CHECK(in_e_class(f.e));
      CHECK(compose(f.arms_hat[0], f.e) == arms[i]);
      if (is_boolean(*x->frame)) CHECK(f.hat_in_m);
    }
  }
}

TEST_CASE("round filters on small frames") {
  for (const auto* e : oracle::frames_up_to(8)) {
    const auto& F = e->frame;
    std::set<ElementSet> cores;
    for (const auto& u : ultrafilters(F)) cores.insert(round_core(u).members);
    std::set<ElementSet> maximal;
    for (const auto& x : maximal_proper_round_filters(F)) {
      maximal.insert(x.members);
      CHECK(has_round_primeness(x));
      if (is_boolean(*F)) {
        auto s = star_join(x);
        CHECK((s == F->top() || contains(maxima(*F), s)));
      }
    }
    CHECK(cores == maximal);

    // A proper regular filter never has a least element; on a finite frame
    // every filter has one, so none is proper and regular.
    for (const auto& x : all_filters(F))
      if (x.proper()) CHECK_FALSE(is_regular(x));
  }
}
