#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "pointfree/congruence.hpp"
#include "pointfree/filters.hpp"
#include "pointfree/nucleus.hpp"
#include "pointfree/order.hpp"
#include "pointfree/reflection.hpp"
#include "suite_support.hpp"

namespace pointfree::detail {

namespace {

// Meet-irreducible in the localic sense: b ∧ c ≤ a forces b ≤ a or c ≤ a.
// Top qualifies vacuously.
bool prime_or_top(const FiniteFrame& f, ElementId a) { return a == f.top() || is_prime(f, a); }

// Relabels classes in order of first appearance.
std::vector<ElementId> canonical_classes(const std::vector<ElementId>& class_of) {
  std::map<ElementId, ElementId> seen;
  std::vector<ElementId> out;
  for (auto c : class_of) out.push_back(seen.emplace(c, static_cast<ElementId>(seen.size())).first->second);
  return out;
}

// Every partition of the carrier compatible with binary meets and joins.
std::set<std::vector<ElementId>> exhaustive_congruences(const FiniteFrame& f) {
  std::set<std::vector<ElementId>> out;
  const auto n = f.size();
  std::vector<ElementId> cls(n, 0);
  auto compatible = [&] {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        if (cls[a] != cls[b]) continue;
        for (ElementId c = 0; c < n; ++c)
          if (cls[f.meet(a, c)] != cls[f.meet(b, c)] || cls[f.join(a, c)] != cls[f.join(b, c)]) return false;
      }
    return true;
  };
  std::function<void(ElementId, ElementId)> grow = [&](ElementId i, ElementId used) {
    if (i == n) {
      if (compatible()) out.insert(cls);
      return;
    }
    for (ElementId c = 0; c <= used && c < n; ++c) {
      cls[i] = c;
      grow(i + 1, std::max<ElementId>(used, c + 1));
    }
  };
  if (n > 0) grow(0, 0);
  return out;
}

bool coscattered(const FiniteFrame& f, ElementId a) {
  for (ElementId b = 0; b < f.size(); ++b)
    if (f.leq(a, b) && b != f.top() && f.successors(b).empty()) return false;
  return true;
}

std::vector<FrameHom> surjections(const FrameRef& f) {
  std::vector<FrameHom> out;
  for (const auto& c : enumerate_congruences(f)) out.push_back(quotient(c).map);
  return out;
}

std::vector<Nucleus> nuclei(const FrameRef& f, bool all) {
  std::vector<Nucleus> out;
  if (all) {
    for (const auto& c : enumerate_congruences(f)) out.push_back(congruence_nucleus(c));
    return out;
  }
  std::vector<ElementId> id(f->size());
  for (ElementId a = 0; a < f->size(); ++a) id[a] = a;
  out.push_back(Nucleus(f, id));
  out.push_back(sigma_nucleus(f));
  out.push_back(pi_nucleus(f));
  return out;
}

std::string where(const CorpusEntry& e) { return "frame " + e.name; }

std::string hom_text(const FrameHom& m) {
  std::string s = "[";
  for (ElementId a = 0; a < m.source()->size(); ++a)
    s += (a ? " " : "") + m.source()->label(a) + "->" + m.target()->label(m(a));
  return s + "]";
}

}  // namespace

SuiteReport finite_lemmas(const SuiteOptions& o) {
  SuiteRun run("finite-lemmas", o);
  const std::vector<std::string> claims = {
      "interval transfer",
      "meet with successor set",
      "maximal elements are the prime coatoms",
      "atoms complement maximal elements",
      "successor via heyting",
      "predecessor via maximal meet",
      "product successors",
      "complemented successor splits",
      "adjoint pulls back primes",
      "surjection adjoint keeps maxima",
      "surjection keeps primes",
      "pointless iff interpolative",
      "factor iff top condition",
      "hom congruence lower bound",
      "preimage of open congruence",
      "pair membership criterion",
      "sigma pi meet",
      "drop iff kernel preserved",
      "nucleus kernels are normal",
      "normal filter nucleus unique",
      "skinny conditions agree",
      "interval isomorphisms",
      "pi meet decomposition",
      "pi prenucleus fix set",
      "pi kernel is normal filter of maxima",
      "pi fix characterisations agree",
      "sigma pi subdirect",
      "scattered atomless subdirect",
      "pi congruence is open join of maxima",
  };
  for (const auto& c : claims) run.declare(c);

  auto corpus = run.frames_up_to(0);
  std::vector<const CorpusEntry*> targets;
  for (auto* e : corpus)
    if (e->poset.size <= 3) targets.push_back(e);

  for (const auto* entry : corpus) {
    const auto& F = entry->frame;
    const auto& f = *F;
    auto at = [&](std::initializer_list<ElementId> xs) { return where(*entry) + ": " + show(f, xs); };
    const bool cr = [&] {
      try {
        return is_completely_regular(f);
      } catch (const std::exception&) {
        return false;
      }
    }();

    run.guard("interval transfer", where(*entry), [&] {
      for (ElementId a = 0; a < f.size(); ++a)
        for (ElementId b = 0; b < f.size(); ++b) {
          bool ok = true;
          auto lo = f.meet(a, b), hi = f.join(a, b);
          for (ElementId c = 0; c < f.size() && ok; ++c) {
            if (f.leq(lo, c) && f.leq(c, a)) {
              auto d = f.join(c, b);
              ok = f.leq(b, d) && f.leq(d, hi) && f.meet(d, a) == c;
            }
            if (ok && f.leq(b, c) && f.leq(c, hi)) {
              auto d = f.meet(c, a);
              ok = f.leq(lo, d) && f.leq(d, a) && f.join(d, b) == c;
            }
          }
          run.check("interval transfer", ok, [&] { return at({a, b}); });
        }
    });

    run.guard("meet with successor set", where(*entry), [&] {
      for (ElementId a = 0; a < f.size(); ++a)
        for (ElementId b = 0; b < f.size(); ++b) {
          auto target = plus_set(f, f.meet(a, b));
          for (auto c : plus_set(f, b))
            run.check("meet with successor set", contains(target, f.meet(a, c)), [&] { return at({a, b, c}); });
        }
    });

    // Only asserted on completely regular frames; elsewhere recorded.
    auto gated = [&](const std::string& name, bool ok, const std::function<std::string()>& w) {
      if (cr)
        run.check(name, ok, w);
      else
        run.log(name, ok, w);
    };

    run.guard("maximal elements are the prime coatoms", where(*entry), [&] {
      auto mx = maxima(f);
      auto preds = f.predecessors(f.top());
      ElementSet primes;
      for (ElementId a = 0; a < f.size(); ++a)
        if (is_prime(f, a)) primes.push_back(a);
      gated("maximal elements are the prime coatoms", mx == preds && mx == primes,
            [&] { return where(*entry) + ": maxima " + std::to_string(mx.size()) + ", primes " +
                         std::to_string(primes.size()); });
    });

    run.guard("atoms complement maximal elements", where(*entry), [&] {
      ElementSet comps;
      for (auto c : maxima(f))
        if (f.is_complemented(c)) comps.push_back(f.pseudocomplement(c));
      std::sort(comps.begin(), comps.end());
      comps.erase(std::unique(comps.begin(), comps.end()), comps.end());
      gated("atoms complement maximal elements", comps == atoms(f), [&] { return where(*entry); });
    });

    run.guard("successor via heyting", where(*entry), [&] {
      auto mx = maxima(f);
      for (ElementId a = 0; a < f.size(); ++a)
        for (ElementId c = 0; c < f.size(); ++c) {
          bool lhs = contains(f.successors(a), c);
          bool rhs = f.lt(a, c) && contains(mx, f.heyting(c, a));
          gated("successor via heyting", lhs == rhs, [&] { return at({a, c}); });
        }
    });

    run.guard("predecessor via maximal meet", where(*entry), [&] {
      auto mx = maxima(f);
      for (ElementId a = 0; a < f.size(); ++a)
        for (ElementId b = 0; b < f.size(); ++b) {
          bool lhs = contains(f.predecessors(a), b);
          bool rhs = std::any_of(mx.begin(), mx.end(), [&](ElementId c) { return !f.leq(a, c) && f.meet(a, c) == b; });
          gated("predecessor via maximal meet", lhs == rhs, [&] { return at({a, b}); });
        }
    });

    run.guard("complemented successor splits", where(*entry), [&] {
      for (ElementId a = 0; a < f.size(); ++a)
        for (auto c : f.successors(a)) {
          if (!f.is_complemented(c)) continue;
          auto cs = f.pseudocomplement(c);
          bool ok = true;
          for (ElementId b = 0; b < f.size() && ok; ++b) ok = f.join(f.meet(b, c), f.meet(b, cs)) == b;
          for (ElementId x = 0; x < f.size() && ok; ++x)
            for (ElementId y = 0; y < f.size() && ok; ++y)
              if (f.leq(x, c) && f.leq(y, cs)) {
                auto b = f.join(x, y);
                ok = f.meet(b, c) == x && f.meet(b, cs) == y;
              }
          run.check("complemented successor splits", ok, [&] { return at({a, c}); });
        }
    });

    run.guard("pointless iff interpolative", where(*entry), [&] {
      run.check("pointless iff interpolative", is_pointless(f) == is_interpolative(f), [&] { return where(*entry); });
    });

    run.guard("sigma pi meet", where(*entry), [&] {
      auto s = sigma_nucleus(F);
      auto p = pi_nucleus(F);
      for (ElementId a = 0; a < f.size(); ++a)
        run.check("sigma pi meet", f.meet(s(a), p(a)) == a, [&] { return at({a}) + " sigma=" + f.label(s(a)) +
                                                                        " pi=" + f.label(p(a)); });
    });

    run.guard("interval isomorphisms", where(*entry), [&] {
      auto s = sigma_nucleus(F);
      auto p = pi_nucleus(F);
      for (ElementId a = 0; a < f.size(); ++a) {
        auto top = p(s(a));
        // c ↦ c ∨ y carries [a, x] onto [y, top] with inverse d ↦ d ∧ x.
        auto transfers = [&](ElementId x, ElementId y) {
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
        };
        run.check("interval isomorphisms", transfers(p(a), s(a)) && transfers(s(a), p(a)), [&] { return at({a}); });
      }
    });

    run.guard("pi meet decomposition", where(*entry), [&] {
      for (ElementId b = 0; b < f.size(); ++b) {
        auto d = pi_meet_decomposition(F, b);
        run.check("pi meet decomposition", f.meet(d.pi, f.meet_all(d.a_set)) == b, [&] { return at({b}); });
      }
    });

    run.guard("pi prenucleus fix set", where(*entry), [&] {
      run.check("pi prenucleus fix set", pi_prenucleus(F).fixed_points() == unpunctured(f),
                [&] { return where(*entry); });
    });

    run.guard("pi kernel is normal filter of maxima", where(*entry), [&] {
      auto ker = pi_nucleus(F).kernel();
      auto normal = normal_filter_generated(F, maxima(f));
      ElementSet first_order;
      for (ElementId a = 0; a < f.size(); ++a) {
        bool ok = true;
        for (ElementId b = 0; b < f.size() && ok; ++b)
          if (f.leq(a, b) && b != f.top() && f.successors(b).empty()) ok = false;
        if (ok) first_order.push_back(a);
      }
      run.check("pi kernel is normal filter of maxima", ker == normal && ker == first_order, [&] {
        return where(*entry) + ": kernel has " + std::to_string(ker.size()) + " elements, normal filter " +
               std::to_string(normal.size());
      });
    });

    run.guard("pi fix characterisations agree", where(*entry), [&] {
      auto fix = unpunctured(f);
      for (ElementId a = 0; a < f.size(); ++a) {
        bool u = contains(fix, a);
        run.check("pi fix characterisations agree",
                  u == maximal_heyting_unpunctured(f, a) && u == first_order_unpunctured(f, a),
                  [&] { return at({a}); });
      }
    });

    run.guard("sigma pi subdirect", where(*entry), [&] {
      auto s = sigma_nucleus(F);
      auto p = pi_nucleus(F);
      for (ElementId a = 0; a < f.size(); ++a)
        for (ElementId b = a + 1; b < f.size(); ++b)
          run.check("sigma pi subdirect", !(s(a) == s(b) && p(a) == p(b)), [&] { return at({a, b}); });
    });

    run.guard("scattered atomless subdirect", where(*entry), [&] {
      auto e = pi_nucleus(F)(f.bottom());
      for (ElementId a = 0; a < f.size(); ++a)
        for (ElementId b = a + 1; b < f.size(); ++b)
          run.check("scattered atomless subdirect", !(f.meet(a, e) == f.meet(b, e) && f.join(a, e) == f.join(b, e)),
                    [&] { return at({a, b}); });
    });

    run.guard("pi congruence is open join of maxima", where(*entry), [&] {
      run.check("pi congruence is open join of maxima",
                nucleus_congruence(pi_nucleus(F)) == open_join(F, maxima(f)), [&] { return where(*entry); });
    });

    const bool small = f.size() <= 12;
    std::vector<Congruence> congs;
    run.guard("pair membership criterion", where(*entry), [&] {
      congs = enumerate_congruences(F);
      for (const auto& xi : congs)
        for (ElementId a = 0; a < f.size(); ++a)
          for (ElementId b = 0; b < f.size(); ++b) {
            if (!f.leq(a, b)) continue;
            bool lhs = xi.related(a, b);
            bool rhs = cong_meet(open_cong(F, a), closed_cong(F, b)).leq(xi);
            run.check("pair membership criterion", lhs == rhs, [&] { return at({a, b}); });
          }
    });

    run.guard("nucleus kernels are normal", where(*entry), [&] {
      for (const auto& n : nuclei(F, true))
        run.check("nucleus kernels are normal", is_normal_filter(F, n.kernel()), [&] { return where(*entry); });
    });

    run.guard("normal filter nucleus unique", where(*entry), [&] {
      auto all = small ? nuclei(F, true) : nuclei(F, false);
      for (ElementId a = 0; a < f.size(); ++a) {
        auto filter = f.up_set(a);
        if (!is_normal_filter(F, filter)) continue;
        auto d = filter_nucleus(F, filter);
        bool ok = d.kernel() == filter;
        for (const auto& n : all)
          if (ok && n.kernel() == filter && !(n == d)) ok = false;
        run.check("normal filter nucleus unique", ok, [&] { return where(*entry) + ": filter above " + f.label(a); });
      }
    });

    std::vector<FrameHom> surj;
    run.guard("surjection adjoint keeps maxima", where(*entry), [&] { surj = surjections(F); });

    for (const auto& m : surj) {
      const auto& M = *m.target();
      auto adj = right_adjoint(m);
      auto mt = [&] { return where(*entry) + ": surjection " + hom_text(m); };

      run.guard("surjection adjoint keeps maxima", where(*entry), [&] {
        auto mxl = maxima(f);
        for (auto b : maxima(M))
          run.check("surjection adjoint keeps maxima", contains(mxl, adj[b]),
                    [&] { return mt() + " at " + M.label(b); });
      });

      run.guard("surjection keeps primes", where(*entry), [&] {
        for (ElementId a = 0; a < f.size(); ++a)
          if (is_prime(f, a))
            run.check("surjection keeps primes", prime_or_top(M, m(a)), [&] { return mt() + " at " + f.label(a); });
      });

      run.guard("hom congruence lower bound", where(*entry), [&] {
        std::vector<Congruence> parts{identity_congruence(F)};
        for (ElementId a = 0; a < f.size(); ++a) {
          if (m(a) == M.top()) parts.push_back(open_cong(F, a));
          if (m(a) == M.bottom()) parts.push_back(closed_cong(F, a));
        }
        run.check("hom congruence lower bound", cong_join(parts).leq(hom_cong(m)), mt);
      });

      run.guard("preimage of open congruence", where(*entry), [&] {
        auto theta = hom_cong(m);
        for (ElementId b = 0; b < M.size(); ++b)
          run.check("preimage of open congruence",
                    preimage_cong(m, open_cong(m.target(), b)) == cong_join(theta, open_cong(F, adj[b])),
                    [&] { return mt() + " at " + M.label(b); });
      });

      for (const auto* t : targets)
        run.guard("factor iff top condition", where(*entry), [&] {
          for (const auto& n : all_homs(F, t->frame)) {
            bool factors = !factor_obstruction(m, n).has_value();
            bool top = !top_condition_witness(m, n).has_value();
            run.check("factor iff top condition", factors == top,
                      [&] { return mt() + ", n = " + hom_text(n) + (factors ? " factors" : " top condition holds"); });
          }
        });
    }

    std::vector<Nucleus> lnuclei;
    run.guard("drop iff kernel preserved", where(*entry), [&] { lnuclei = nuclei(F, f.size() <= 8); });
    for (const auto* t : targets) {
      const auto& M = *t->frame;
      std::vector<FrameHom> homs;
      run.guard("adjoint pulls back primes", where(*entry), [&] { homs = all_homs(F, t->frame); });
      std::vector<Nucleus> mnuclei;
      run.guard("drop iff kernel preserved", where(*entry), [&] { mnuclei = nuclei(t->frame, M.size() <= 8); });
      for (const auto& m : homs) {
        auto mt = [&] { return where(*entry) + " -> " + t->name + ": " + hom_text(m); };
        run.guard("adjoint pulls back primes", where(*entry), [&] {
          auto adj = right_adjoint(m);
          for (ElementId b = 0; b < M.size(); ++b)
            if (prime_or_top(M, b))
              run.check("adjoint pulls back primes", prime_or_top(f, adj[b]), [&] { return mt() + " at " + M.label(b); });
        });
        run.guard("skinny conditions agree", where(*entry), [&] {
          auto r = skinny_conditions(m);
          bool cosc = true, unp = true;
          for (ElementId a = 0; a < f.size(); ++a) {
            if (coscattered(f, a) && !coscattered(M, m(a))) cosc = false;
            if (M.successors(m(a)).size() && f.successors(a).empty()) unp = false;
          }
          bool agree = r.agree() && cosc == r.kernel_preserved && unp == r.kernel_preserved;
          run.check("skinny conditions agree", agree, mt);
        });
        run.guard("drop iff kernel preserved", where(*entry), [&] {
          for (const auto& nl : lnuclei)
            for (const auto& nm : mnuclei) {
              bool drops = !drop_obstruction(m, nl, nm).has_value();
              bool kernel = !kernel_escape(m, nl, nm).has_value();
              run.check("drop iff kernel preserved", drops == kernel, [&] {
                return mt() + (kernel ? ": kernel preserved but no induced map" : ": induced map despite escape");
              });
            }
        });
      }
      run.guard("product successors", where(*entry), [&] {
        if (entry->poset.size > 3) return;
        auto p = product_frame(F, t->frame);
        const auto& P = *p.frame;
        for (auto a : maxima(f)) {
          auto hi = p.pair(f.top(), M.bottom());
          auto lo = p.pair(a, M.bottom());
          auto comp = p.pair(f.bottom(), M.top());
          bool ok = contains(P.successors(lo), hi) && P.meet(hi, comp) == P.bottom() && P.join(hi, comp) == P.top();
          for (ElementId b = 0; b < M.size() && ok; ++b) ok = contains(P.successors(p.pair(a, b)), p.pair(f.top(), b));
          run.check("product successors", ok, [&] { return where(*entry) + " x " + t->name + " at " + f.label(a); });
        }
      });
    }
  }
  return run.finish();
}

SuiteReport congruence_structure(const SuiteOptions& o) {
  SuiteRun run("congruence-structure", o);
  for (const auto* c : {"maximal congruences are closed at maxima", "atom congruences are open at maxima",
                        "preimage is an isomorphism onto the upper set", "generated congruences validate",
                        "congruences match exhaustive search"})
    run.declare(c);
  for (const auto* entry : run.frames_up_to(12)) {
    const auto& F = entry->frame;
    const auto& f = *F;
    std::vector<Congruence> congs;
    run.guard("generated congruences validate", where(*entry), [&] {
      congs = enumerate_congruences(F);
      if (o.mutate && congs.size() > 1)
        congs.erase(congs.begin() + std::uniform_int_distribution<std::size_t>(0, congs.size() - 1)(run.rng()));
      for (const auto& c : congs)
        run.check("generated congruences validate", !congruence_violation(f, c.class_of()).has_value(),
                  [&] { return where(*entry); });
    });
    auto same = [](std::vector<Congruence> a, std::vector<Congruence> b) {
      std::sort(a.begin(), a.end());
      std::sort(b.begin(), b.end());
      return a == b;
    };
    run.guard("maximal congruences are closed at maxima", where(*entry), [&] {
      std::vector<Congruence> expect;
      for (auto b : maxima(f)) expect.push_back(closed_cong(F, b));
      auto got = max_congruences(F);
      run.check("maximal congruences are closed at maxima", same(got, expect), [&] {
        return where(*entry) + ": " + std::to_string(got.size()) + " maximal congruences, " +
               std::to_string(expect.size()) + " maximal elements";
      });
    });
    run.guard("atom congruences are open at maxima", where(*entry), [&] {
      std::vector<Congruence> expect;
      for (auto b : maxima(f)) expect.push_back(open_cong(F, b));
      auto got = atom_congruences(F);
      run.check("atom congruences are open at maxima", same(got, expect), [&] {
        return where(*entry) + ": " + std::to_string(got.size()) + " atom congruences, " +
               std::to_string(expect.size()) + " maximal elements";
      });
    });
    if (f.size() > 8) continue;
    run.guard("congruences match exhaustive search", where(*entry), [&] {
      std::set<std::vector<ElementId>> got;
      for (const auto& c : congs) got.insert(canonical_classes(c.class_of()));
      auto expect = exhaustive_congruences(f);
      run.check("congruences match exhaustive search", got == expect, [&] {
        return where(*entry) + ": " + std::to_string(got.size()) + " enumerated, " + std::to_string(expect.size()) +
               " found by search";
      });
    });
    run.guard("preimage is an isomorphism onto the upper set", where(*entry), [&] {
      for (const auto& theta : congs) {
        auto m = quotient(theta).map;
        auto target = enumerate_congruences(m.target());
        std::vector<Congruence> images;
        for (const auto& d : target) images.push_back(preimage_cong(m, d));
        std::vector<Congruence> above;
        for (const auto& c : congs)
          if (theta.leq(c)) above.push_back(c);
        bool ok = same(images, above);
        for (std::size_t i = 0; i < target.size() && ok; ++i)
          for (std::size_t j = 0; j < target.size() && ok; ++j)
            ok = target[i].leq(target[j]) == images[i].leq(images[j]);
        run.check("preimage is an isomorphism onto the upper set", ok,
                  [&] { return where(*entry) + ": quotient with " + std::to_string(theta.class_count()) + " classes"; });
      }
    });
  }
  return run.finish();
}

SuiteReport nucleus_engine(const SuiteOptions& o) {
  SuiteRun run("nucleus-engine", o);
  for (const auto* c : {"converges within frame size", "iterate satisfies nucleus laws", "fix sets agree",
                        "sigma kernel has no maximal above", "sigma after pi is top"})
    run.declare(c);
  std::mt19937_64 mrng(o.seed ^ 0x70726e75636cULL);
  SuiteOptions clean = o;
  clean.mutate = false;
  SuiteRun source("nucleus-engine", clean);
  for (const auto& entry : source.corpus()) {
    const auto& F = entry.frame;
    const auto& f = *F;
    std::vector<Prenucleus> pres;
    run.guard("fix sets agree", where(entry), [&] {
      for (ElementId a = 0; a < f.size(); ++a) pres.push_back(prenucleus_from_filter(F, f.up_set(a)));
      pres.push_back(pi_prenucleus(F));
    });
    if (o.mutate && f.size() > 1) {
      // Drop one value below its argument: no longer inflationary.
      auto& victim = pres[std::uniform_int_distribution<std::size_t>(0, pres.size() - 1)(mrng)];
      auto table = victim.table();
      auto a = std::uniform_int_distribution<ElementId>(0, static_cast<ElementId>(f.size() - 1))(mrng);
      if (a == f.bottom()) a = f.top();
      table[a] = f.bottom();
      victim = Prenucleus::unchecked(F, table);
    }
    for (const auto& p : pres) {
      run.guard("iterate satisfies nucleus laws", where(entry), [&] {
        auto [n, steps] = iterate_prenucleus(p);
        run.check("converges within frame size", steps <= f.size(),
                  [&] { return where(entry) + ": " + std::to_string(steps) + " steps"; });
        auto v = nucleus_violation(f, n.table());
        run.check("iterate satisfies nucleus laws", !v, [&] { return where(entry) + ": " + v->law; });
        run.check("fix sets agree", n.fixed_points() == p.fixed_points(), [&] { return where(entry); });
      });
    }
    run.guard("sigma kernel has no maximal above", where(entry), [&] {
      auto mx = maxima(f);
      ElementSet expect;
      for (ElementId a = 0; a < f.size(); ++a)
        if (std::none_of(mx.begin(), mx.end(), [&](ElementId c) { return f.leq(a, c); })) expect.push_back(a);
      run.check("sigma kernel has no maximal above", sigma_nucleus(F).kernel() == expect, [&] { return where(entry); });
    });
    run.guard("sigma after pi is top", where(entry), [&] {
      auto s = sigma_nucleus(F);
      auto p = pi_nucleus(F);
      for (ElementId a = 0; a < f.size(); ++a)
        run.check("sigma after pi is top", s(p(a)) == f.top(), [&] { return where(entry) + ": " + show(f, {a}); });
    });
  }
  return run.finish();
}

SuiteReport completely_below(const SuiteOptions& o) {
  SuiteRun run("completely-below", o);
  for (const auto* c : {"pruned table matches interposer oracle", "relation interpolates", "monotone closure",
                        "coreflection is largest regular subframe"})
    run.declare(c);
  std::mt19937_64 mrng(o.seed ^ 0x636f6d62656cULL);
  SuiteOptions clean = o;
  clean.mutate = false;
  SuiteRun source("completely-below", clean);
  for (const auto& entry : source.corpus()) {
    const auto& F = entry.frame;
    const auto& f = *F;
    const std::size_t n = f.size();
    std::vector<char> table(n * n);
    run.guard("pruned table matches interposer oracle", where(entry), [&] {
      auto r = pointfree::completely_below(f);
      for (ElementId a = 0; a < n; ++a)
        for (ElementId b = 0; b < n; ++b) table[a * n + b] = r(a, b) ? 1 : 0;
    });
    if (o.mutate) {
      auto k = std::uniform_int_distribution<std::size_t>(0, n * n - 1)(mrng);
      table[k] ^= 1;
    }
    auto rel = [&](ElementId a, ElementId b) { return table[a * n + b] != 0; };
    ElementSet comps;
    for (ElementId c = 0; c < n; ++c)
      if (f.is_complemented(c)) comps.push_back(c);
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b) {
        bool oracle = std::any_of(comps.begin(), comps.end(), [&](ElementId c) { return f.leq(a, c) && f.leq(c, b); });
        run.check("pruned table matches interposer oracle", rel(a, b) == oracle,
                  [&] { return where(entry) + ": " + show(f, {a, b}); });
        if (rel(a, b)) {
          bool mid = false;
          for (ElementId c = 0; c < n && !mid; ++c) mid = rel(a, c) && rel(c, b);
          run.check("relation interpolates", mid, [&] { return where(entry) + ": " + show(f, {a, b}); });
          bool mono = true;
          for (ElementId x = 0; x < n && mono; ++x)
            for (ElementId y = 0; y < n && mono; ++y)
              if (f.leq(x, a) && f.leq(b, y)) mono = rel(x, y);
          run.check("monotone closure", mono, [&] { return where(entry) + ": " + show(f, {a, b}); });
        }
      }
    if (n > 8) continue;
    run.guard("coreflection is largest regular subframe", where(entry), [&] {
      // Every sublattice containing bottom and top that is completely
      // regular in its own right; the answer must contain all of them.
      ElementSet best;
      std::vector<ElementSet> regular;
      std::vector<ElementId> inner;
      for (ElementId a = 0; a < n; ++a)
        if (a != f.bottom() && a != f.top()) inner.push_back(a);
      for (std::uint32_t mask = 0; mask < (1U << inner.size()); ++mask) {
        ElementSet s{f.bottom(), f.top()};
        for (std::size_t i = 0; i < inner.size(); ++i)
          if (mask >> i & 1U) s.push_back(inner[i]);
        std::sort(s.begin(), s.end());
        s.erase(std::unique(s.begin(), s.end()), s.end());
        if (!is_sublattice(f, s)) continue;
        if (!is_completely_regular(*subframe(F, s).frame)) continue;
        if (s.size() > best.size()) best = s;
        regular.push_back(s);
      }
      auto got = cr_coreflection(F).embedding;
      ElementSet got_set(got.begin(), got.end());
      std::sort(got_set.begin(), got_set.end());
      bool contains_all = std::all_of(regular.begin(), regular.end(), [&](const ElementSet& s) {
        return std::includes(got_set.begin(), got_set.end(), s.begin(), s.end());
      });
      run.check("coreflection is largest regular subframe", got_set == best && contains_all, [&] {
        return where(entry) + ": coreflection has " + std::to_string(got_set.size()) + " elements, enumeration " +
               std::to_string(best.size());
      });
    });
  }
  return run.finish();
}

}  // namespace pointfree::detail
