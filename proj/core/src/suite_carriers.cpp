#include <algorithm>
#include <set>

#include "pointfree/attachment.hpp"
#include "pointfree/interval.hpp"
#include "suite_support.hpp"

namespace pointfree::detail {

namespace {

std::vector<Rational> small_rationals() {
  std::set<Rational> out;
  for (int d = 1; d <= 10; ++d)
    for (int n = -10; n <= 10; ++n) out.insert(Rational(n) / d);
  return {out.begin(), out.end()};
}

// Unpunctured opens whose endpoints lie on the grid 0..6: one per choice of
// the eight open cells, since a grid point between two chosen cells is kept.
// At most four intervals arise.
std::vector<IntervalOpen> grid_shapes() {
  std::vector<IntervalOpen> out;
  for (unsigned mask = 0; mask < 256; ++mask) {
    std::vector<Interval> pieces;
    for (int cell = 0; cell < 8; ++cell) {
      if (!(mask >> cell & 1U)) continue;
      QBound lo = cell == 0 ? QBound::neg_inf() : QBound(cell - 1);
      QBound hi = cell == 7 ? QBound::pos_inf() : QBound(cell);
      pieces.push_back({lo, hi});
    }
    out.push_back(io_fill(IntervalOpen(pieces)));
  }
  return out;
}

std::string pair_text(const IntervalOpen& u, const IntervalOpen& v) { return to_string(u) + " and " + to_string(v); }

}  // namespace

SuiteReport interval_carrier(const SuiteOptions& o) {
  SuiteRun run("interval", o);
  for (const auto* c : {"generator join relation", "generator meet relation", "fill is inflationary",
                        "fill is idempotent", "fill preserves meets", "fill is monotone", "fill output unpunctured",
                        "heyting adjunction", "pointless meet stays unpunctured"})
    run.declare(c);
  auto& rng = run.rng();

  auto qs = small_rationals();
  for (const auto& p : qs)
    for (const auto& q : qs) {
      auto r = generator_relations(p, q, 4);
      auto at = [&] { return "p=" + to_string(p) + " q=" + to_string(q); };
      run.check("generator join relation", r.relation_one_holds(), at);
      run.check("generator meet relation", r.relation_two_holds(), at);
    }

  auto heyting = [&](const IntervalOpen& u, const IntervalOpen& v) {
    auto h = io_heyting(u, v);
    return o.mutate ? io_join(h, u) : h;
  };

  for (std::size_t i = 0; i < o.samples; ++i) {
    auto u = random_interval_open(rng);
    auto v = random_interval_open(rng);
    auto fu = io_fill(u), fv = io_fill(v);
    run.check("fill is inflationary", io_leq(u, fu), [&] { return to_string(u); });
    run.check("fill is idempotent", io_fill(fu) == fu, [&] { return to_string(u); });
    run.check("fill preserves meets", io_fill(io_meet(u, v)) == io_meet(fu, fv), [&] { return pair_text(u, v); });
    run.check("fill is monotone", io_leq(fu, io_fill(io_join(u, v))), [&] { return pair_text(u, v); });
    run.check("fill output unpunctured", !io_is_punctured(fu).punctured, [&] { return to_string(u); });

    auto w = random_interval_open(rng);
    auto h = heyting(u, v);
    bool ok = io_leq(w, h) == io_leq(io_meet(u, w), v) && io_leq(io_meet(u, h), v);
    run.check("heyting adjunction", ok, [&] { return to_string(u) + ", " + to_string(v) + ", " + to_string(w); });
  }

  auto shapes = grid_shapes();
  for (const auto& u : shapes)
    for (const auto& v : shapes) {
      std::vector<IntervalOpen> two{u, v};
      auto m = pl_meet(two);
      run.check("pointless meet stays unpunctured", !io_is_punctured(m).punctured && m == io_meet(u, v),
                [&] { return pair_text(u, v); });
    }
  return run.finish();
}

namespace {

std::vector<AttachmentSpec> attachment_specs(std::mt19937_64& rng) {
  std::vector<AttachmentSpec> out;
  std::uniform_int_distribution<int> pick(-8, 8);
  for (std::size_t n = 1; n <= 4; ++n)
    for (int rep = 0; rep < 3; ++rep) {
      std::set<Rational> pts;
      while (pts.size() < n) pts.insert(Rational(pick(rng)) / 2);
      out.emplace_back(std::vector<Rational>(pts.begin(), pts.end()));
    }
  return out;
}

std::string flags_text(FlagSet f) {
  std::string s = "{";
  for (std::size_t i = 0; i < 64; ++i)
    if (f >> i & 1U) s += (s.size() > 1 ? "," : "") + std::to_string(i);
  return s + "}";
}

std::string spec_text(const AttachmentSpec& spec) {
  std::string s = "W=";
  for (std::size_t i = 0; i < spec.size(); ++i) s += (i ? "," : "") + to_string(spec.points()[i]);
  return s;
}

// Balls around the points of Y small enough to stay clear of every t(z),
// or a far interval when Y is empty.
std::pair<IntervalOpen, IntervalOpen> combel_pair(const AttachmentSpec& spec, FlagSet ys, std::mt19937_64& rng) {
  const auto& pts = spec.points();
  std::vector<Interval> lo, hi;
  Rational shrink = Rational(std::uniform_int_distribution<int>(2, 4)(rng)) / 4;
  if (ys == 0) {
    Rational far = pts.back() + 10;
    return {IntervalOpen({{far + Rational(1, 4), far + Rational(3, 4)}}), IntervalOpen({{far, far + 1}})};
  }
  for (std::size_t i = 0; i < spec.size(); ++i) {
    if (!(ys >> i & 1U)) continue;
    Rational r = 1;
    for (std::size_t j = 0; j < spec.size(); ++j)
      if (j != i) r = std::min<Rational>(r, abs(pts[i] - pts[j]) / 8);
    r *= shrink;
    hi.push_back({pts[i] - r, pts[i] + r});
    lo.push_back({pts[i] - r / 2, pts[i] + r / 2});
  }
  return {IntervalOpen(lo), IntervalOpen(hi)};
}

FlagSet reindex(FlagSet sub, FlagSet within) {
  FlagSet out = 0;
  std::size_t k = 0;
  for (std::size_t i = 0; i < 64; ++i)
    if (within >> i & 1U) {
      if (sub >> i & 1U) out |= FlagSet{1} << k;
      ++k;
    }
  return out;
}

}  // namespace

SuiteReport point_attachment(const SuiteOptions& o) {
  SuiteRun run("attachment", o);
  for (const auto* c : {"maximal elements", "meets and joins stay in the frame", "atomless witness",
                        "completely below witness", "regular approximation", "restriction coherence",
                        "k map reproduces"})
    run.declare(c);
  auto& rng = run.rng();
  auto specs = attachment_specs(rng);
  const std::size_t per = (o.samples + specs.size() - 1) / specs.size();

  auto meet = [&](const AttachmentSpec& s, const LWElement& a, const LWElement& b) {
    if (o.mutate) return LWElement{a.flags | b.flags, io_join(a.body, b.body)};
    return lw_meet(s, a, b);
  };

  for (const auto& spec : specs) {
    auto st = spec_text(spec);
    run.guard("maximal elements", st, [&] {
      auto mx = lw_max(spec);
      bool ok = mx.size() == spec.size();
      for (std::size_t w = 0; w < mx.size() && ok; ++w)
        ok = mx[w] == LWElement{spec.all() & ~(FlagSet{1} << w), IntervalOpen::full()} && lw_is_maximal(spec, mx[w]) &&
             !lw_strictly_above(spec, mx[w]);
      run.check("maximal elements", ok, [&] { return st; });
    });

    std::vector<LWElement> samples;
    for (std::size_t i = 0; i < per; ++i) samples.push_back(random_lw(spec, rng));

    for (std::size_t i = 0; i < per; ++i) {
      const auto& a = samples[i];
      const auto& b = samples[(i * 7 + 3) % per];
      run.guard("meets and joins stay in the frame", st, [&] {
        auto m = meet(spec, a, b);
        std::vector<LWElement> ab{a, b};
        auto j = lw_join(spec, ab);
        bool ok = !lw_violation(spec, m) && !lw_violation(spec, j) && lw_leq(m, a) && lw_leq(m, b) &&
                  lw_leq(a, j) && lw_leq(b, j);
        run.check("meets and joins stay in the frame", ok,
                  [&] { return st + ": " + to_string(a) + " and " + to_string(b); });
      });

      run.guard("atomless witness", st, [&] {
        auto e = a;
        while (e == lw_bottom()) e = random_lw(spec, rng);
        auto w = lw_atomless_witness(spec, e);
        bool ok = !lw_violation(spec, w) && !(w == lw_bottom()) && lw_leq(w, e) && !(w == e);
        run.check("atomless witness", ok, [&] { return st + ": " + to_string(e); });
      });

      run.guard("completely below witness", st, [&] {
        FlagSet ys = std::uniform_int_distribution<FlagSet>(0, spec.all())(rng);
        auto [c, hi] = combel_pair(spec, ys, rng);
        std::vector<IntervalOpen> t;
        auto halvings = std::uniform_int_distribution<int>(0, 3)(rng);
        for (std::size_t z = 0; z < spec.size(); ++z)
          if (!(ys >> z & 1U)) t.push_back(z_prime_member(spec, ys, z, halvings));
        auto w = lw_witness_combel(spec, ys, t, c, hi);
        run.check("completely below witness", w.ok(), [&] { return st + ": Y=" + flags_text(ys) + " a=" + to_string(hi); });
      });

      run.guard("regular approximation", st, [&] {
        auto ev = lw_regularity_evidence(spec, a, 8);
        bool ok = ev.witnesses_valid && ev.joins_monotone && ev.joins_bounded && ev.samples_covered;
        run.check("regular approximation", ok, [&] { return st + ": " + to_string(a); });
      });
    }

    run.guard("restriction coherence", st, [&] {
      for (FlagSet x = 1; x <= spec.all(); ++x)
        for (FlagSet xp = 1; xp <= spec.all(); ++xp) {
          if ((xp & ~x) != 0) continue;
          auto kx = kx_quotient(spec, x);
          auto kxp = kx_quotient(spec, xp);
          auto inner = kx_quotient(kx.target(), reindex(xp, x));
          for (std::size_t i = 0; i < std::min<std::size_t>(per, 24); ++i) {
            const auto& a = samples[i];
            const auto& b = samples[(i * 5 + 1) % per];
            std::vector<LWElement> ab{a, b};
            std::vector<LWElement> kab{kx(a), kx(b)};
            bool ok = inner(kx(a)) == kxp(a) && kx(lw_meet(spec, a, b)) == lw_meet(kx.target(), kx(a), kx(b)) &&
                      kx(lw_join(spec, ab)) == lw_join(kx.target(), kab);
            run.check("restriction coherence", ok, [&] {
              return st + ": X=" + flags_text(x) + " X'=" + flags_text(xp) + " at " + to_string(a);
            });
          }
        }
    });

    run.guard("k map reproduces", st, [&] {
      auto r = k_map_selfcheck(spec, samples);
      bool ok = r.reproduces && r.meets_preserved && r.injective && r.surjective_by_recipe;
      run.check("k map reproduces", ok,
                [&] { return st + (r.first_failure ? ": at " + to_string(*r.first_failure) : std::string()); });
    });
  }
  return run.finish();
}

}  // namespace pointfree::detail
