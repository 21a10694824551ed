#include "pointfree/attachment.hpp"

#include <algorithm>
#include <bit>

#include "pointfree/error.hpp"

namespace pointfree {

namespace {

FlagSet bit(std::size_t i) { return FlagSet{1} << i; }

std::vector<std::size_t> indices(FlagSet s) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; s; ++i, s >>= 1)
    if (s & 1) out.push_back(i);
  return out;
}

std::string flags_string(FlagSet s) {
  std::string out = "{";
  for (auto i : indices(s)) {
    if (out.size() > 1) out += ",";
    out += std::to_string(i);
  }
  return out + "}";
}

/// Ball whose closure lies in the open gap (lo, hi).
IntervalOpen ball_in_gap(const QBound& lo, const QBound& hi) {
  if (lo.finite() && hi.finite()) {
    Rational mid = (lo.value() + hi.value()) / 2;
    Rational r = (hi.value() - lo.value()) / 4;
    return IntervalOpen::interval(mid - r, mid + r);
  }
  if (hi.finite()) return IntervalOpen::interval(hi.value() - 2, hi.value() - 1);
  if (lo.finite()) return IntervalOpen::interval(lo.value() + 1, lo.value() + 2);
  return IntervalOpen::interval(0, 1);
}

/// First component of the complement of u, as open bounds.
std::pair<QBound, QBound> first_gap(const IntervalOpen& u) {
  const auto& ps = u.pieces();
  if (ps.empty()) return {QBound::neg_inf(), QBound::pos_inf()};
  if (ps.front().lo.finite()) return {QBound::neg_inf(), ps.front().lo};
  if (ps.size() > 1) return {ps[0].hi, ps[1].lo};
  return {ps[0].hi, QBound::pos_inf()};
}

/// Component shrunk by margin width / 2^(j+1) on each finite side.
Interval shrink(const Interval& c, int j) {
  const Rational scale(1, FlagSet{1} << (j + 1));
  if (c.lo.finite() && c.hi.finite()) {
    Rational m = (c.hi.value() - c.lo.value()) * scale;
    return {c.lo.value() + m, c.hi.value() - m};
  }
  const Rational far(FlagSet{1} << j);
  QBound lo = c.lo.finite() ? QBound(c.lo.value() + scale) : QBound(c.hi.finite() ? c.hi.value() - far : -far);
  QBound hi = c.hi.finite() ? QBound(c.hi.value() - scale) : QBound(c.lo.finite() ? c.lo.value() + far : far);
  return {lo, hi};
}

IntervalOpen shrink_all(const IntervalOpen& u, int j) {
  std::vector<Interval> out;
  for (const auto& c : u.pieces()) out.push_back(shrink(c, j));
  return IntervalOpen(std::move(out));
}

std::vector<IntervalOpen> choice(const AttachmentSpec& spec, FlagSet ys, int k) {
  std::vector<IntervalOpen> t;
  for (auto z : indices(spec.all() & ~ys)) t.push_back(z_prime_member(spec, ys, z, k));
  return t;
}

IntervalOpen meet_of_stars(std::span<const IntervalOpen> t) {
  std::vector<IntervalOpen> stars;
  for (const auto& b : t) stars.push_back(io_pseudocomplement(b));
  return pl_meet(stars);
}

/// Witnessed element (Y, c) below (Y, a) for choice depth k and shrink j.
std::optional<CombelWitness> try_witness(const AttachmentSpec& spec, FlagSet ys, const IntervalOpen& a, int k,
                                         int j) {
  auto t = choice(spec, ys, k);
  const IntervalOpen pair[] = {a, meet_of_stars(t)};
  auto target = pl_meet(pair);
  auto c = shrink_all(target, j);
  if ((spec.members(c) & ys) != ys) return std::nullopt;
  try {
    return lw_witness_combel(spec, ys, t, c, target);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::HypothesisViolated) throw;
    return std::nullopt;
  }
}

std::vector<Rational> body_samples(const IntervalOpen& u) {
  std::vector<Rational> out;
  for (const auto& c : u.pieces()) {
    if (c.lo.finite() && c.hi.finite()) {
      Rational w = c.hi.value() - c.lo.value();
      out.push_back(c.lo.value() + w / 3);
      out.push_back(c.lo.value() + 2 * w / 3);
    } else if (c.lo.finite()) {
      out.push_back(c.lo.value() + Rational(1, 3));
    } else if (c.hi.finite()) {
      out.push_back(c.hi.value() - Rational(1, 3));
    } else {
      out.push_back(Rational(1, 3));
    }
  }
  return out;
}

}  // namespace

AttachmentSpec::AttachmentSpec(std::vector<Rational> points) : points_(std::move(points)) {
  if (points_.empty()) throw Error(ErrorCode::InvalidSpec, "at least one point is required");
  if (points_.size() > 64) throw Error(ErrorCode::InvalidSpec, "at most 64 points are supported");
  for (std::size_t i = 0; i < points_.size(); ++i)
    for (std::size_t j = i + 1; j < points_.size(); ++j)
      if (points_[i] == points_[j]) throw Error(ErrorCode::InvalidSpec, "point " + to_string(points_[i]) + " repeats");
}

FlagSet AttachmentSpec::members(const IntervalOpen& body) const {
  if (io_is_punctured(body).punctured) return 0;
  FlagSet out = 0;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (body.contains(points_[i])) out |= bit(i);
  return out;
}

AttachmentSpec parse_attachment_spec(std::string_view text) {
  std::vector<Rational> pts;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto comma = text.find(',', pos);
    if (comma == std::string_view::npos) comma = text.size();
    auto item = text.substr(pos, comma - pos);
    while (!item.empty() && item.front() == ' ') item.remove_prefix(1);
    while (!item.empty() && item.back() == ' ') item.remove_suffix(1);
    if (!item.empty()) pts.push_back(parse_rational(item));
    pos = comma + 1;
  }
  return AttachmentSpec(std::move(pts));
}

std::optional<std::string> lw_violation(const AttachmentSpec& spec, const LWElement& e) {
  if (auto info = io_is_punctured(e.body); info.punctured)
    return "body " + to_string(e.body) + " is punctured at " + to_string(info.abutments.front());
  if (e.flags & ~spec.all()) return "flag outside the attached points";
  FlagSet stray = e.flags & ~spec.members(e.body);
  if (stray)
    return "point " + to_string(spec.points()[static_cast<std::size_t>(std::countr_zero(stray))]) +
           " is flagged but not in " + to_string(e.body);
  return std::nullopt;
}

LWElement make_lw(const AttachmentSpec& spec, FlagSet flags, IntervalOpen body) {
  LWElement e{flags, std::move(body)};
  if (auto why = lw_violation(spec, e)) {
    if (io_is_punctured(e.body).punctured) throw Error(ErrorCode::InputPunctured, *why);
    throw Error(ErrorCode::InvariantBroken, *why);
  }
  return e;
}

LWElement parse_lw(const AttachmentSpec& spec, std::string_view text) {
  auto colon = text.find(':');
  if (colon == std::string_view::npos || text.empty() || text.front() != '{' || text[colon - 1] != '}')
    throw Error(ErrorCode::ParseError, "expected {flags}:body in '" + std::string(text) + "'");
  auto inner = text.substr(1, colon - 2);
  FlagSet flags = 0;
  std::size_t pos = 0;
  while (pos < inner.size()) {
    auto comma = inner.find(',', pos);
    if (comma == std::string_view::npos) comma = inner.size();
    std::string item(inner.substr(pos, comma - pos));
    if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
      throw Error(ErrorCode::ParseError, "bad flag index '" + item + "'");
    auto i = std::stoul(item);
    if (i >= spec.size()) throw Error(ErrorCode::ParseError, "flag index " + item + " out of range");
    flags |= bit(i);
    pos = comma + 1;
  }
  return make_lw(spec, flags, parse_interval_open(text.substr(colon + 1)));
}

std::string to_string(const LWElement& e) { return flags_string(e.flags) + ":" + to_string(e.body); }

LWElement lw_bottom() { return {}; }

LWElement lw_top(const AttachmentSpec& spec) { return {spec.all(), IntervalOpen::full()}; }

bool lw_leq(const LWElement& a, const LWElement& b) { return (a.flags & ~b.flags) == 0 && io_leq(a.body, b.body); }

LWElement lw_meet(const AttachmentSpec& spec, const LWElement& a, const LWElement& b) {
  const IntervalOpen bodies[] = {a.body, b.body};
  return make_lw(spec, a.flags & b.flags, pl_meet(bodies));
}

LWElement lw_join(const AttachmentSpec& spec, std::span<const LWElement> parts) {
  FlagSet flags = 0;
  std::vector<IntervalOpen> bodies;
  for (const auto& p : parts) {
    flags |= p.flags;
    bodies.push_back(p.body);
  }
  return make_lw(spec, flags, pl_join(bodies));
}

std::vector<LWElement> lw_max(const AttachmentSpec& spec) {
  std::vector<LWElement> out;
  for (std::size_t w = 0; w < spec.size(); ++w) out.push_back(make_lw(spec, spec.all() & ~bit(w), IntervalOpen::full()));
  return out;
}

std::optional<LWElement> lw_strictly_above(const AttachmentSpec& spec, const LWElement& e) {
  if (!e.body.is_full()) {
    if (e.flags != spec.all()) return make_lw(spec, e.flags, IntervalOpen::full());
    auto [lo, hi] = first_gap(e.body);
    const IntervalOpen parts[] = {e.body, ball_in_gap(lo, hi)};
    return make_lw(spec, e.flags, pl_join(parts));
  }
  FlagSet missing = spec.all() & ~e.flags;
  if (std::popcount(missing) < 2) return std::nullopt;
  return make_lw(spec, e.flags | bit(static_cast<std::size_t>(std::countr_zero(missing))), e.body);
}

bool lw_is_maximal(const AttachmentSpec& spec, const LWElement& e) {
  return !(e == lw_top(spec)) && !lw_strictly_above(spec, e).has_value();
}

LWElement lw_pi_project(const AttachmentSpec& spec, const LWElement& e) {
  return make_lw(spec, spec.members(e.body), e.body);
}

LWElement lw_sigma_project(const LWElement& e) { return {e.flags, IntervalOpen::full()}; }

LWElement lw_atomless_witness(const AttachmentSpec& spec, const LWElement& e) {
  if (e.body.is_empty()) throw Error(ErrorCode::PreconditionFailed, "bottom has nothing below it");
  if (e.flags) return make_lw(spec, e.flags & (e.flags - 1), e.body);
  return make_lw(spec, 0, IntervalOpen({shrink(e.body.pieces().front(), 1)}));
}

IntervalOpen z_prime_member(const AttachmentSpec& spec, FlagSet ys, std::size_t z, int halvings) {
  if (z >= spec.size() || (ys & bit(z))) throw Error(ErrorCode::PreconditionFailed, "z must lie outside Y");
  const Rational& x = spec.points()[z];
  std::optional<Rational> r;
  for (auto y : indices(ys)) {
    Rational d = abs(spec.points()[y] - x) / 4;
    if (!r || d < *r) r = d;
  }
  Rational radius = r.value_or(Rational(1)) / Rational(FlagSet{1} << halvings);
  return IntervalOpen::interval(x - radius, x + radius);
}

CombelWitness lw_witness_combel(const AttachmentSpec& spec, FlagSet ys, std::span<const IntervalOpen> t,
                                const IntervalOpen& c, const IntervalOpen& a) {
  auto fail = [](const std::string& why) { return Error(ErrorCode::HypothesisViolated, why); };
  if (ys & ~spec.all()) throw fail("Y is not a subset of W");
  const auto zs = indices(spec.all() & ~ys);
  if (t.size() != zs.size()) throw fail("one choice is needed per point outside Y");
  for (std::size_t k = 0; k < zs.size(); ++k) {
    if (!(spec.members(t[k]) & bit(zs[k]))) throw fail("t(z) is not in the filter at z");
    if ((spec.members(io_pseudocomplement(t[k])) & ys) != ys) throw fail("t(z)* misses a filter of Y");
  }
  if ((spec.members(c) & ys) != ys || (spec.members(a) & ys) != ys) throw fail("c and a must lie in every filter of Y");
  if (!io_completely_below(c, a)) throw fail("c is not completely below a");
  if (!io_leq(a, meet_of_stars(t))) throw fail("a exceeds the meet of the t(z)*");

  std::vector<IntervalOpen> parts{io_pseudocomplement(c)};
  parts.insert(parts.end(), t.begin(), t.end());
  CombelWitness out{make_lw(spec, ys, c), make_lw(spec, ys, a), make_lw(spec, spec.all() & ~ys, pl_join(parts))};
  out.meet_is_bottom = lw_meet(spec, out.low, out.witness) == lw_bottom();
  const LWElement pair[] = {out.high, out.witness};
  out.join_is_top = lw_join(spec, pair) == lw_top(spec);
  return out;
}

RegularityEvidence lw_regularity_evidence(const AttachmentSpec& spec, const LWElement& e, int depth) {
  if (auto why = lw_violation(spec, e)) throw Error(ErrorCode::InvariantBroken, *why);
  RegularityEvidence out;
  const auto& pts = spec.points();
  std::vector<Rational> samples;
  for (const auto& x : body_samples(e.body)) {
    auto it = std::find(pts.begin(), pts.end(), x);
    if (it != pts.end() && !(e.flags & bit(static_cast<std::size_t>(it - pts.begin())))) continue;
    samples.push_back(x);
  }
  auto covered = [&](const LWElement& acc) {
    return acc.flags == e.flags &&
           std::all_of(samples.begin(), samples.end(), [&](const Rational& x) { return acc.body.contains(x); });
  };
  LWElement acc = lw_bottom();
  // Walk the (k, j) grid level by level and stop once every sample is reached.
  for (int level = 0; level <= depth && !out.samples_covered; ++level)
    for (int k = 0; k < depth; ++k)
      for (int j = 0; j <= depth; ++j) {
        if (std::max(k, j) != level) continue;
        auto w = try_witness(spec, e.flags, e.body, k, j);
        if (!w) continue;
        ++out.witnesses;
        if (!w->ok()) out.witnesses_valid = false;
        const LWElement pair[] = {acc, w->low};
        auto next = lw_join(spec, pair);
        if (!lw_leq(acc, next)) out.joins_monotone = false;
        if (!lw_leq(next, e)) out.joins_bounded = false;
        acc = next;
        out.samples_covered = covered(acc);
      }
  out.samples_covered = covered(acc);
  out.last_join = acc;
  return out;
}

KxQuotient::KxQuotient(const AttachmentSpec& spec, FlagSet x)
    : x_(x & spec.all()), index_(indices(x_)), target_([&] {
        if (!x_) throw Error(ErrorCode::EmptyX, "X must be a nonempty subset of W");
        std::vector<Rational> pts;
        for (auto i : indices(x_)) pts.push_back(spec.points()[i]);
        return AttachmentSpec(std::move(pts));
      }()) {}

LWElement KxQuotient::operator()(const LWElement& e) const {
  FlagSet out = 0;
  for (std::size_t j = 0; j < index_.size(); ++j)
    if (e.flags & bit(index_[j])) out |= bit(j);
  return {out, e.body};
}

LWElement KxQuotient::lift(const LWElement& e) const {
  FlagSet out = 0;
  for (std::size_t j = 0; j < index_.size(); ++j)
    if (e.flags & bit(j)) out |= bit(index_[j]);
  return {out, e.body};
}

KxQuotient kx_quotient(const AttachmentSpec& spec, FlagSet x) { return KxQuotient(spec, x); }

KMapReport k_map_selfcheck(const AttachmentSpec& spec, std::span<const LWElement> samples) {
  const auto maxs = lw_max(spec);
  auto k = [&](const LWElement& e) {
    FlagSet w = 0;
    for (std::size_t i = 0; i < maxs.size(); ++i)
      if (!lw_leq(e, maxs[i])) w |= bit(i);
    return LWElement{w, lw_pi_project(spec, e).body};
  };
  KMapReport r;
  auto fail = [&](bool& flag, const LWElement& e) {
    flag = false;
    if (!r.first_failure) r.first_failure = e;
  };
  for (std::size_t i = 0; i < samples.size(); ++i) {
    const auto& e = samples[i];
    ++r.checked;
    if (!(k(e) == e)) fail(r.reproduces, e);
    if (i + 1 < samples.size() && !(k(lw_meet(spec, e, samples[i + 1])) == lw_meet(spec, k(e), k(samples[i + 1]))))
      fail(r.meets_preserved, e);
    for (std::size_t j = i + 1; j < samples.size(); ++j)
      if (!(samples[j] == e) && k(samples[j]) == k(e)) fail(r.injective, e);

    LWElement b_prime = lw_pi_project(spec, e);
    for (auto a : indices(spec.members(e.body) & ~e.flags)) b_prime = lw_meet(spec, b_prime, maxs[a]);
    if (!(k(b_prime) == e)) fail(r.surjective_by_recipe, e);
  }
  return r;
}

MaxApproximation max_approximation(const AttachmentSpec& spec, std::size_t w, int depth) {
  if (w >= spec.size()) throw Error(ErrorCode::PreconditionFailed, "no such point");
  const auto max_w = lw_max(spec)[w];
  const Rational& x = spec.points()[w];
  MaxApproximation out{w, depth, true, true, false, false, {}};
  LWElement acc = lw_bottom();
  for (int n = 1; n <= depth; ++n) {
    auto star = io_pseudocomplement(IntervalOpen::interval(x - Rational(1, n), x + Rational(1, n)));
    const LWElement pair[] = {acc, make_lw(spec, spec.members(star), star)};
    auto next = lw_join(spec, pair);
    if (!lw_leq(acc, next)) out.monotone = false;
    if (!lw_leq(next, max_w)) out.below_max = false;
    acc = next;
    out.partial_joins.push_back(acc);
  }
  out.flags_reach_rest = acc.flags == (spec.all() & ~bit(w));
  out.single_below_top = !out.partial_joins.empty() && !(out.partial_joins.front() == lw_top(spec));
  return out;
}

SupportAgreement support_agreement(const AttachmentSpec& spec, std::span<const IntervalOpen> bodies) {
  SupportAgreement out;
  const auto maxs = lw_max(spec);
  for (std::size_t w = 0; w < spec.size(); ++w) {
    const auto filter = point_filter(spec.points()[w]);
    for (const auto& a : bodies) {
      if (io_is_punctured(a).punctured) continue;
      ++out.checked;
      const bool outside = !lw_leq(make_lw(spec, spec.members(a), a), maxs[w]);
      if (outside != filter.contains(a) && !out.mismatch) out.mismatch.emplace(w, a);
    }
  }
  return out;
}

MixedNormalForm mixed_normal_form_check(const AttachmentSpec& spec, std::span<const LWElement> pairs) {
  MixedNormalForm out;
  auto consider = [&](const LWElement& p) {
    if (io_is_punctured(p.body).punctured) return;
    ++out.checked;
    const bool in_lw = !lw_violation(spec, p).has_value();
    bool witnessed = p.body.is_empty() ? p.flags == 0 : false;
    for (int j = 1; j <= 8 && !witnessed; ++j) witnessed = try_witness(spec, p.flags, p.body, 0, j).has_value();
    if (witnessed != in_lw) out.recipe_matches_lw = false;

    // Complemented in E × 2^W when the body is ⊥ or ⊤, with complement
    // (W ∖ Y, body*); computed componentwise since it may leave L_W.
    if (!in_lw && !out.complemented_outside && (p.body.is_empty() || p.body.is_full())) {
      auto star = io_pseudocomplement(p.body);
      const IntervalOpen both[] = {p.body, star};
      if (pl_meet(both).is_empty() && pl_join(both).is_full()) out.complemented_outside = p;
    }
  };
  for (const auto& p : pairs) consider(p);
  consider(LWElement{spec.all(), IntervalOpen::empty()});
  return out;
}

LWElement random_lw(const AttachmentSpec& spec, std::mt19937_64& rng) {
  auto body = random_unpunctured(rng);
  std::uniform_int_distribution<FlagSet> pick(0, spec.all());
  return make_lw(spec, pick(rng) & spec.members(body), std::move(body));
}

LWElement random_pair(const AttachmentSpec& spec, std::mt19937_64& rng) {
  std::uniform_int_distribution<FlagSet> pick(0, spec.all());
  return {pick(rng), random_unpunctured(rng)};
}

}  // namespace pointfree
