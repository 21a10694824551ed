#include "pointfree/reflection.hpp"

#include <algorithm>
#include <set>

#include "pointfree/order.hpp"

namespace pointfree {

namespace {

bool pairing_injective(const FrameHom& a, const FrameHom& b) {
  std::set<std::pair<ElementId, ElementId>> seen;
  for (ElementId x = 0; x < a.source()->size(); ++x)
    if (!seen.emplace(a(x), b(x)).second) return false;
  return true;
}

template <typename F>
std::optional<FrameHom> try_hom(F&& build) {
  try {
    return build();
  } catch (const Error&) {
    return std::nullopt;
  }
}

}  // namespace

bool is_spatial(const FiniteFrame& f) {
  const auto maxs = maxima(f);
  for (ElementId a = 0; a < f.size(); ++a) {
    ElementId acc = f.top();
    for (auto m : maxs)
      if (f.leq(a, m)) acc = f.meet(acc, m);
    if (acc != a) return false;
  }
  return true;
}

QuotientResult spatial_part(const FrameRef& f) { return quotient(nucleus_congruence(sigma_nucleus(f))); }

QuotientResult pointless_part(const FrameRef& f) { return quotient(nucleus_congruence(pi_nucleus(f))); }

SkinnyReport skinny_conditions(const FrameHom& m) {
  const auto pl = pi_nucleus(m.source());
  const auto pm = pi_nucleus(m.target());
  SkinnyReport r;
  r.kernel_preserved = !kernel_escape(m, pl, pm).has_value();
  const auto maxs = maxima(*m.source());
  r.maxima_to_kernel = std::all_of(maxs.begin(), maxs.end(),
                                   [&](ElementId a) { return pm(m(a)) == m.target()->top(); });
  r.drops = !drop_obstruction(m, pl, pm).has_value();
  return r;
}

bool is_skinny(const FrameHom& m) {
  auto r = skinny_conditions(m);
  if (!r.agree()) throw Error(ErrorCode::ConditionsDisagree, "skinniness conditions disagree");
  return r.kernel_preserved;
}

Congruence open_join(const FrameRef& f, const ElementSet& points) {
  std::vector<Congruence> parts{identity_congruence(f)};
  for (auto a : points) parts.push_back(open_cong(f, a));
  return cong_join(parts);
}

bool in_e_class(const FrameHom& e) {
  if (!e.is_surjective()) return false;
  ElementSet sent_top;
  for (auto a : maxima(*e.source()))
    if (e(a) == e.target()->top()) sent_top.push_back(a);
  return hom_cong(e).leq(open_join(e.source(), sent_top));
}

bool in_m_class(const Source& s) {
  for (auto a : maxima(*s.domain)) {
    bool kept = std::any_of(s.arms.begin(), s.arms.end(),
                            [&](const FrameHom& m) { return m(a) != m.target()->top(); });
    if (!kept) return false;
  }
  return true;
}

bool in_m_class(const FrameHom& m) { return in_m_class(Source{m.source(), {m}}); }

EMClass em_classify(const FrameHom& m) { return EMClass{in_e_class(m), in_m_class(m)}; }

EMFactorization em_factorize(const Source& s) {
  for (const auto& arm : s.arms) {
    if (arm.source() != s.domain) throw Error(ErrorCode::MixedFrames, "arm does not start at the source domain");
    if (!is_skinny(arm)) throw Error(ErrorCode::PreconditionFailed, "arm is not skinny");
  }
  ElementSet p;
  for (auto a : maxima(*s.domain))
    if (std::all_of(s.arms.begin(), s.arms.end(), [&](const FrameHom& m) { return m(a) == m.target()->top(); }))
      p.push_back(a);
  auto xi = open_join(s.domain, p);
  auto q = quotient(xi);
  std::vector<FrameHom> hats;
  for (const auto& arm : s.arms) hats.push_back(factor_through_surjection(q.map, arm));
  EMFactorization out{p, xi, q.map, std::move(hats)};
  out.e_in_e = in_e_class(out.e);
  out.hat_in_m = in_m_class(Source{q.quotient, out.arms_hat});
  return out;
}

FrameHom em_diagonalize(const FrameHom& e, const FrameHom& f, std::span<const FrameHom> n_arms,
                        std::span<const FrameHom> m_arms) {
  if (n_arms.size() != m_arms.size()) throw Error(ErrorCode::SquareDoesNotCommute, "arm counts differ");
  for (std::size_t i = 0; i < n_arms.size(); ++i)
    if (compose(m_arms[i], f).map() != compose(n_arms[i], e).map())
      throw Error(ErrorCode::SquareDoesNotCommute, "arm " + std::to_string(i) + " does not commute");
  if (!in_e_class(e)) throw Error(ErrorCode::ClassViolation, "top edge is not in the E class");
  if (!in_m_class(Source{f.target(), {m_arms.begin(), m_arms.end()}}))
    throw Error(ErrorCode::ClassViolation, "receiving source is not in the M class");
  auto d = factor_through_surjection(e, f);
  for (std::size_t i = 0; i < n_arms.size(); ++i)
    if (compose(m_arms[i], d).map() != n_arms[i].map())
      throw Error(ErrorCode::SquareDoesNotCommute, "diagonal misses arm " + std::to_string(i));
  return d;
}

bool is_quotient_by(const FrameHom& m, const Congruence& c) {
  return m.is_surjective() && m.source() == c.frame() && hom_cong(m) == c;
}

LigatureResult ligature(const FrameRef& f) {
  auto pi = pointless_part(f);
  auto sigma = spatial_part(f);
  auto pi_sigma = pointless_part(sigma.quotient);
  auto lambda = factor_through_surjection(pi.map, compose(pi_sigma.map, sigma.map));
  return LigatureResult{std::move(pi), std::move(sigma), std::move(pi_sigma), std::move(lambda)};
}

FatNormalForm fat_normal_form(const FrameRef& e, const FrameRef& m, const FrameHom& l) {
  if (!is_pointless(*e)) throw Error(ErrorCode::PreconditionFailed, "first factor is not pointless");
  if (!is_spatial(*m)) throw Error(ErrorCode::PreconditionFailed, "second factor is not spatial");
  if (l.source() != e) throw Error(ErrorCode::MixedFrames, "ligature does not start at the first factor");
  if (!l.is_surjective()) throw Error(ErrorCode::NotSurjective, "ligature is not surjective");
  auto pm = pointless_part(m);
  if (pm.quotient->size() != l.target()->size())
    throw Error(ErrorCode::MixedFrames, "ligature target is not the pointless part of the second factor");

  auto product = product_frame(e, m);
  ElementSet constrained;
  for (ElementId a = 0; a < e->size(); ++a)
    for (ElementId b = 0; b < m->size(); ++b)
      if (l(a) == pm.map(b)) constrained.push_back(product.pair(a, b));
  std::sort(constrained.begin(), constrained.end());
  auto naked = subframe(product.frame, constrained);
  ElementSet cr_members;
  for (auto local : center(*naked.frame)) cr_members.push_back(naked.embedding[local]);
  auto cr = subframe(product.frame, cr_members);

  std::vector<ElementId> to_e(cr.embedding.size()), to_m(cr.embedding.size());
  for (std::size_t i = 0; i < cr.embedding.size(); ++i) {
    to_e[i] = product.first(cr.embedding[i]);
    to_m[i] = product.second(cr.embedding[i]);
  }
  FatNormalForm out{product, constrained, cr, FrameHom::unchecked(cr.frame, e, std::move(to_e)),
                    FrameHom::unchecked(cr.frame, m, std::move(to_m))};
  out.projections_surjective = out.e_proj.is_surjective() && out.m_proj.is_surjective();
  if (out.projections_surjective) {
    ElementSet got;
    for (auto local : maxima(*cr.frame)) got.push_back(cr.embedding[local]);
    ElementSet expected;
    for (auto b : maxima(*m)) expected.push_back(product.pair(e->top(), b));
    std::sort(got.begin(), got.end());
    std::sort(expected.begin(), expected.end());
    out.maxima_are_top_pairs = got == expected;
    out.m_proj_in_m = in_m_class(out.m_proj);
    out.e_proj_in_e = in_e_class(out.e_proj);
    out.square_commutes = true;
    for (ElementId x = 0; x < cr.frame->size(); ++x)
      if (l(out.e_proj(x)) != pm.map(out.m_proj(x))) out.square_commutes = false;
  }
  return out;
}

FatReflection fat_reflection(const FrameRef& f) {
  auto parts = ligature(f);
  auto nf = fat_normal_form(parts.pi.quotient, parts.sigma.quotient, parts.lambda);
  std::vector<ElementId> pairing(f->size());
  for (ElementId a = 0; a < f->size(); ++a) pairing[a] = nf.product.pair(parts.pi.map(a), parts.sigma.map(a));

  FatReflection out{std::move(parts), std::move(nf), std::nullopt, pairing};
  const auto& emb = out.normal_form.coreflection.embedding;
  std::vector<ElementId> tau(f->size());
  out.lands = true;
  for (ElementId a = 0; a < f->size(); ++a) {
    auto it = std::lower_bound(emb.begin(), emb.end(), pairing[a]);
    if (it == emb.end() || *it != pairing[a]) {
      out.lands = false;
      break;
    }
    tau[a] = static_cast<ElementId>(it - emb.begin());
  }
  std::set<ElementId> distinct(pairing.begin(), pairing.end());
  out.injective = distinct.size() == pairing.size();
  if (out.lands) {
    out.tau = FrameHom::unchecked(f, out.normal_form.coreflection.frame, std::move(tau));
    out.fat = out.tau->is_surjective();
  }
  return out;
}

ScatteredAtomless scattered_atomless_parts(const FrameRef& f) {
  const auto e = pi_nucleus(f)(f->bottom());
  auto open = quotient(open_cong(f, e));
  auto closed = quotient(closed_cong(f, e));
  ScatteredAtomless out{e, open, closed};
  out.pairing_injective = pairing_injective(open.map, closed.map);
  out.pointless_parts_match = isomorphic(pointless_part(f).quotient, pointless_part(closed.quotient).quotient);
  return out;
}

Subframe cr_coreflection(const FrameRef& f) { return subframe(f, center(*f)); }

DecompositionDiagram decomposition_diagram(const FrameRef& f) {
  auto pi = pointless_part(f);
  auto sigma = spatial_part(f);
  auto parts = scattered_atomless_parts(f);
  DecompositionDiagram out;
  out.pointless_spatial_injective = pairing_injective(pi.map, sigma.map);
  out.scattered_atomless_injective = parts.pairing_injective;
  out.atomless_to_pointless = try_hom([&] { return factor_through_surjection(parts.closed.map, pi.map); });
  out.spatial_to_scattered = try_hom([&] { return factor_through_surjection(sigma.map, parts.open.map); });
  return out;
}

}  // namespace pointfree
