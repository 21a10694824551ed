#include <algorithm>

#include "pointfree/congruence.hpp"
#include "pointfree/order.hpp"
#include "pointfree/reflection.hpp"
#include "suite_support.hpp"

namespace pointfree::detail {

namespace {

template <typename T>
const T& pick(const std::vector<T>& xs, std::mt19937_64& rng) {
  return xs[std::uniform_int_distribution<std::size_t>(0, xs.size() - 1)(rng)];
}

}  // namespace

SuiteReport em_machinery(const SuiteOptions& o) {
  SuiteRun run("em-machinery", o);
  for (const auto* c : {"factorization splits the source", "factor lies in E", "factored source lies in M",
                        "diagonal exists", "diagonal is unique", "pointless reflection characterised",
                        "spatial reflection characterised"})
    run.declare(c);

  auto corpus = run.frames_up_to(0);
  std::vector<const CorpusEntry*> targets;
  for (auto* e : corpus)
    if (e->poset.size <= 3) targets.push_back(e);
  auto& rng = run.rng();

  const std::size_t sources = std::max<std::size_t>(500, o.samples / 2);
  for (std::size_t i = 0; i < sources; ++i) {
    const auto* entry = pick(corpus, rng);
    Source s{entry->frame, {}};
    std::string desc = entry->name;
    run.guard("factorization splits the source", "source over " + entry->name, [&] {
      auto arms = std::uniform_int_distribution<int>(1, 3)(rng);
      for (int k = 0; k < arms; ++k) {
        const auto* t = pick(targets, rng);
        auto homs = all_homs(entry->frame, t->frame);
        if (homs.empty()) continue;
        s.arms.push_back(pick(homs, rng));
        desc += " -> " + t->name;
      }
      if (s.arms.empty()) s.arms.push_back(all_homs(entry->frame, targets.front()->frame).front());
      auto fac = em_factorize(s);
      bool splits = fac.arms_hat.size() == s.arms.size();
      for (std::size_t k = 0; k < s.arms.size() && splits; ++k) splits = compose(fac.arms_hat[k], fac.e) == s.arms[k];
      run.check("factorization splits the source", splits, [&] { return "source " + desc; });
      run.check("factor lies in E", in_e_class(fac.e), [&] { return "source " + desc; });
      run.check("factored source lies in M", in_m_class(Source{fac.e.target(), fac.arms_hat}),
                [&] { return "source " + desc; });
    });
  }

  const std::size_t squares = std::max<std::size_t>(200, o.samples / 4);
  std::size_t built = 0;
  for (std::size_t attempt = 0; built < squares && attempt < squares * 50; ++attempt) {
    const auto* entry = pick(corpus, rng);
    run.guard("diagonal exists", "square over " + entry->name, [&] {
      const auto& L = entry->frame;
      auto mx = maxima(*L);
      ElementSet p;
      for (auto a : mx)
        if (rng() & 1U) p.push_back(a);
      auto e = quotient(open_join(L, p)).map;
      const auto* kt = pick(targets, rng);
      auto ds = all_homs(e.target(), kt->frame);
      if (ds.empty()) return;
      auto d = pick(ds, rng);
      std::vector<FrameHom> m_arms, n_arms;
      for (int tries = 0; tries < 8 && m_arms.empty(); ++tries) {
        std::vector<FrameHom> arms;
        auto count = std::uniform_int_distribution<int>(1, 2)(rng);
        for (int k = 0; k < count; ++k) {
          auto homs = all_homs(kt->frame, pick(targets, rng)->frame);
          if (!homs.empty()) arms.push_back(pick(homs, rng));
        }
        if (!arms.empty() && in_m_class(Source{kt->frame, arms})) m_arms = arms;
      }
      if (m_arms.empty()) return;
      for (const auto& m : m_arms) n_arms.push_back(compose(m, d));
      auto f = compose(d, e);
      if (o.mutate) {
        // Replace f by another map: the square stops commuting.
        for (const auto& g : all_homs(L, kt->frame))
          if (!(g == f)) {
            f = g;
            break;
          }
      }
      ++built;
      auto desc = [&] { return "square over " + entry->name + " -> " + kt->name; };
      run.guard("diagonal exists", desc(), [&] {
        auto diag = em_diagonalize(e, f, n_arms, m_arms);
        bool fits = compose(diag, e) == f;
        for (std::size_t k = 0; k < m_arms.size() && fits; ++k) fits = compose(m_arms[k], diag) == n_arms[k];
        run.check("diagonal exists", fits, desc);
        std::size_t count = 0;
        for (const auto& g : all_homs(e.target(), kt->frame)) {
          bool ok = compose(g, e) == f;
          for (std::size_t k = 0; k < m_arms.size() && ok; ++k) ok = compose(m_arms[k], g) == n_arms[k];
          count += ok;
        }
        run.check("diagonal is unique", count == 1, [&] { return desc() + ": " + std::to_string(count) + " diagonals"; });
      });
    });
  }
  run.check("diagonal exists", built >= squares,
            [&] { return "only " + std::to_string(built) + " commuting squares generated"; });

  for (const auto* entry : corpus) {
    const auto& L = entry->frame;
    run.guard("pointless reflection characterised", entry->name, [&] {
      auto pi = nucleus_congruence(pi_nucleus(L));
      auto sigma = nucleus_congruence(sigma_nucleus(L));
      for (const auto& c : enumerate_congruences(L)) {
        auto m = quotient(c).map;
        const auto& M = *m.target();
        bool is_pi = hom_cong(m) == pi;
        bool e_and_pointless = in_e_class(m) && is_pointless(M);
        run.check("pointless reflection characterised", is_pi == e_and_pointless, [&] {
          return "frame " + entry->name + ": quotient with " + std::to_string(M.size()) + " elements" +
                 (is_pi ? " is the pointless part" : " lies in E with pointless codomain");
        });
        bool is_sigma = hom_cong(m) == sigma;
        bool m_and_spatial = in_m_class(m) && is_spatial(M);
        run.check("spatial reflection characterised", is_sigma == m_and_spatial, [&] {
          return "frame " + entry->name + ": quotient with " + std::to_string(M.size()) + " elements" +
                 (is_sigma ? " is the spatial part" : " is an M-surjection onto a spatial frame");
        });
      }
    });
  }
  return run.finish();
}

}  // namespace pointfree::detail
