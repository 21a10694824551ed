#include "pointfree/interval.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "pointfree/error.hpp"

namespace pointfree {

namespace {

Rational half(const Rational& a, const Rational& b) { return (a + b) / 2; }

bool inside(const Interval& i, const Rational& x) {
  QBound b(x);
  return i.lo < b && b < i.hi;
}

/// Open cells and points cut out by the breakpoints; `pred` is sampled on
/// each, the interior of the resulting set is returned as pieces.
std::vector<Interval> assemble(std::vector<Rational> breaks, const std::function<bool(const Rational&)>& pred) {
  std::sort(breaks.begin(), breaks.end());
  breaks.erase(std::unique(breaks.begin(), breaks.end()), breaks.end());
  const std::size_t k = breaks.size();
  if (k == 0) {
    if (pred(Rational(0))) return {{QBound::neg_inf(), QBound::pos_inf()}};
    return {};
  }
  std::vector<bool> cell(k + 1);
  cell[0] = pred(breaks[0] - 1);
  cell[k] = pred(breaks[k - 1] + 1);
  for (std::size_t i = 1; i < k; ++i) cell[i] = pred(half(breaks[i - 1], breaks[i]));

  std::vector<Interval> out;
  std::optional<QBound> open_lo;
  for (std::size_t i = 0; i <= k; ++i) {
    if (cell[i] && !open_lo) open_lo = i == 0 ? QBound::neg_inf() : QBound(breaks[i - 1]);
    if (i == k) break;
    const bool point = cell[i] && cell[i + 1] && pred(breaks[i]);
    if (open_lo && !point) {
      if (cell[i]) out.push_back({*open_lo, breaks[i]});
      open_lo.reset();
    }
  }
  if (open_lo) out.push_back({*open_lo, QBound::pos_inf()});
  return out;
}

std::vector<Rational> finite_ends(std::initializer_list<const IntervalOpen*> sets) {
  std::vector<Rational> out;
  for (const auto* s : sets)
    for (const auto& i : s->pieces()) {
      if (i.lo.finite()) out.push_back(i.lo.value());
      if (i.hi.finite()) out.push_back(i.hi.value());
    }
  return out;
}

IntervalOpen combine(const IntervalOpen& u, const IntervalOpen& v, const std::function<bool(bool, bool)>& op) {
  return IntervalOpen(
      assemble(finite_ends({&u, &v}), [&](const Rational& x) { return op(u.contains(x), v.contains(x)); }));
}

bool lo_inside(const QBound& inner, const QBound& outer) {
  return inner.kind() == QBound::Kind::NegInf ? outer.kind() == QBound::Kind::NegInf : outer < inner;
}

bool hi_inside(const QBound& inner, const QBound& outer) {
  return inner.kind() == QBound::Kind::PosInf ? outer.kind() == QBound::Kind::PosInf : inner < outer;
}

const Interval* enclosing(const Interval& piece, const IntervalOpen& v) {
  for (const auto& c : v.pieces())
    if (lo_inside(piece.lo, c.lo) && hi_inside(piece.hi, c.hi)) return &c;
  return nullptr;
}

void require_unpunctured(const IntervalOpen& u) {
  auto info = io_is_punctured(u);
  if (info.punctured)
    throw Error(ErrorCode::InputPunctured, to_string(u) + " is missing " + to_string(info.abutments.front()));
}

std::string trim(std::string_view s) {
  std::string out;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) out.push_back(c);
  return out;
}

QBound parse_bound(const std::string& s) {
  if (s == "inf" || s == "+inf") return QBound::pos_inf();
  if (s == "-inf") return QBound::neg_inf();
  return parse_rational(s);
}

/// Shrinks the component of u around x to one whose closure stays inside.
IntervalOpen shrink_around(const IntervalOpen& u, const Rational& x) {
  for (const auto& c : u.pieces()) {
    if (!inside(c, x)) continue;
    QBound lo = c.lo.finite() ? QBound(half(c.lo.value(), x)) : QBound(x - 1);
    QBound hi = c.hi.finite() ? QBound(half(x, c.hi.value())) : QBound(x + 1);
    return IntervalOpen::interval(lo, hi);
  }
  throw Error(ErrorCode::PreconditionFailed, to_string(x) + " is not in " + to_string(u));
}

/// A ball around x whose closure misses part of a nondegenerate gap of v.
std::optional<IntervalOpen> regular_ball(const IntervalOpen& v, const Rational& x) {
  if (v.is_full()) return std::nullopt;
  const auto& ps = v.pieces();
  std::optional<std::pair<Rational, Rational>> gap;
  if (ps.empty()) {
    gap.emplace(x, x + 1);
  } else if (ps.front().lo.finite()) {
    const auto& c = ps.front().lo.value();
    gap.emplace(c - 1, c);
  } else if (ps.back().hi.finite()) {
    const auto& c = ps.back().hi.value();
    gap.emplace(c, c + 1);
  }
  for (std::size_t i = 0; !gap && i + 1 < ps.size(); ++i)
    if (ps[i].hi < ps[i + 1].lo) gap.emplace(ps[i].hi.value(), ps[i + 1].lo.value());
  if (!gap) return std::nullopt;
  Rational eps = (gap->second - gap->first) / 16;
  return IntervalOpen::interval(x - eps, x + eps);
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string s(text);
  std::size_t i = 0;
  bool negative = false;
  if (i < s.size() && (s[i] == '-' || s[i] == '+')) negative = s[i++] == '-';
  auto digits = [&](std::size_t from) {
    std::size_t j = from;
    while (j < s.size() && std::isdigit(static_cast<unsigned char>(s[j]))) ++j;
    return j;
  };
  std::size_t j = digits(i);
  if (j == i) throw Error(ErrorCode::ParseError, "expected a number in '" + s + "'");
  Rational value(boost::multiprecision::cpp_int(s.substr(i, j - i)));
  if (j < s.size() && s[j] == '/') {
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size()) throw Error(ErrorCode::ParseError, "bad denominator in '" + s + "'");
    boost::multiprecision::cpp_int den(s.substr(j + 1, k - j - 1));
    if (den == 0) throw Error(ErrorCode::ParseError, "zero denominator in '" + s + "'");
    value /= Rational(den);
  } else if (j < s.size() && s[j] == '.') {
    std::size_t k = digits(j + 1);
    if (k == j + 1 || k != s.size()) throw Error(ErrorCode::ParseError, "bad decimal in '" + s + "'");
    boost::multiprecision::cpp_int frac(s.substr(j + 1, k - j - 1));
    boost::multiprecision::cpp_int scale = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                                                      static_cast<unsigned>(k - j - 1));
    value += Rational(frac, scale);
  } else if (j != s.size()) {
    throw Error(ErrorCode::ParseError, "trailing characters in '" + s + "'");
  }
  return negative ? Rational(-value) : value;
}

std::string to_string(const Rational& q) { return q.str(); }

std::strong_ordering operator<=>(const QBound& a, const QBound& b) {
  if (a.kind_ != b.kind_) return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
  if (a.kind_ != QBound::Kind::Finite) return std::strong_ordering::equal;
  if (a.value_ < b.value_) return std::strong_ordering::less;
  if (b.value_ < a.value_) return std::strong_ordering::greater;
  return std::strong_ordering::equal;
}

std::string to_string(const QBound& b) {
  switch (b.kind()) {
    case QBound::Kind::NegInf: return "-inf";
    case QBound::Kind::PosInf: return "inf";
    case QBound::Kind::Finite: break;
  }
  return to_string(b.value());
}

IntervalOpen::IntervalOpen(std::vector<Interval> pieces) {
  std::erase_if(pieces, [](const Interval& i) { return !(i.lo < i.hi); });
  std::vector<Rational> breaks;
  for (const auto& i : pieces) {
    if (i.lo.finite()) breaks.push_back(i.lo.value());
    if (i.hi.finite()) breaks.push_back(i.hi.value());
  }
  pieces_ = assemble(std::move(breaks), [&](const Rational& x) {
    return std::any_of(pieces.begin(), pieces.end(), [&](const Interval& i) { return inside(i, x); });
  });
}

IntervalOpen IntervalOpen::punctured_line(const Rational& x) {
  return IntervalOpen({{QBound::neg_inf(), x}, {x, QBound::pos_inf()}});
}

bool IntervalOpen::is_full() const {
  return pieces_.size() == 1 && !pieces_[0].lo.finite() && !pieces_[0].hi.finite();
}

bool IntervalOpen::contains(const Rational& x) const {
  return std::any_of(pieces_.begin(), pieces_.end(), [&](const Interval& i) { return inside(i, x); });
}

IntervalOpen parse_interval_open(std::string_view text) {
  const std::string s = trim(text);
  if (s.empty()) throw Error(ErrorCode::ParseError, "empty input");
  if (s == "empty") return IntervalOpen::empty();
  std::vector<Interval> pieces;
  std::size_t pos = 0;
  while (true) {
    if (pos >= s.size() || s[pos] != '(') throw Error(ErrorCode::ParseError, "expected '(' at offset " + std::to_string(pos));
    auto comma = s.find(',', pos);
    auto close = s.find(')', pos);
    if (comma == std::string::npos || close == std::string::npos || comma > close)
      throw Error(ErrorCode::ParseError, "malformed interval at offset " + std::to_string(pos));
    QBound lo = parse_bound(s.substr(pos + 1, comma - pos - 1));
    QBound hi = parse_bound(s.substr(comma + 1, close - comma - 1));
    if (!(lo < hi)) throw Error(ErrorCode::ParseError, "empty interval " + s.substr(pos, close - pos + 1));
    pieces.push_back({lo, hi});
    pos = close + 1;
    if (pos == s.size()) break;
    if (s[pos] != 'u' && s[pos] != 'U') throw Error(ErrorCode::ParseError, "expected 'u' at offset " + std::to_string(pos));
    ++pos;
  }
  return IntervalOpen(std::move(pieces));
}

std::string to_string(const IntervalOpen& u) {
  if (u.is_empty()) return "empty";
  std::string out;
  for (const auto& i : u.pieces()) {
    if (!out.empty()) out += "u";
    out += "(" + to_string(i.lo) + "," + to_string(i.hi) + ")";
  }
  return out;
}

IntervalOpen io_join(const IntervalOpen& u, const IntervalOpen& v) {
  return combine(u, v, [](bool a, bool b) { return a || b; });
}

IntervalOpen io_meet(const IntervalOpen& u, const IntervalOpen& v) {
  return combine(u, v, [](bool a, bool b) { return a && b; });
}

IntervalOpen io_heyting(const IntervalOpen& u, const IntervalOpen& v) {
  return combine(u, v, [](bool a, bool b) { return !a || b; });
}

IntervalOpen io_pseudocomplement(const IntervalOpen& u) { return io_heyting(u, IntervalOpen::empty()); }

bool io_leq(const IntervalOpen& u, const IntervalOpen& v) { return io_meet(u, v) == u; }

bool io_completely_below(const IntervalOpen& u, const IntervalOpen& v) {
  return std::all_of(u.pieces().begin(), u.pieces().end(),
                     [&](const Interval& piece) { return enclosing(piece, v) != nullptr; });
}

IntervalOpen io_interpolant(const IntervalOpen& u, const IntervalOpen& v) {
  std::vector<Interval> out;
  for (const auto& piece : u.pieces()) {
    const Interval* c = enclosing(piece, v);
    if (!c) throw Error(ErrorCode::PreconditionFailed, to_string(u) + " is not completely below " + to_string(v));
    QBound lo = !piece.lo.finite() ? QBound::neg_inf()
                : c->lo.finite()   ? QBound(half(c->lo.value(), piece.lo.value()))
                                   : QBound(piece.lo.value() - 1);
    QBound hi = !piece.hi.finite() ? QBound::pos_inf()
                : c->hi.finite()   ? QBound(half(piece.hi.value(), c->hi.value()))
                                   : QBound(piece.hi.value() + 1);
    out.push_back({lo, hi});
  }
  return IntervalOpen(std::move(out));
}

PunctureInfo io_is_punctured(const IntervalOpen& u) {
  PunctureInfo out;
  const auto& ps = u.pieces();
  for (std::size_t i = 0; i + 1 < ps.size(); ++i)
    if (ps[i].hi == ps[i + 1].lo) out.abutments.push_back(ps[i].hi.value());
  out.punctured = !out.abutments.empty();
  return out;
}

IntervalOpen io_fill(const IntervalOpen& u) {
  std::vector<Interval> out;
  for (const auto& piece : u.pieces()) {
    if (!out.empty() && out.back().hi == piece.lo)
      out.back().hi = piece.hi;
    else
      out.push_back(piece);
  }
  return IntervalOpen(std::move(out));
}

IntervalOpen pl_join(std::span<const IntervalOpen> parts) {
  IntervalOpen acc;
  for (const auto& p : parts) {
    require_unpunctured(p);
    acc = io_join(acc, p);
  }
  return io_fill(acc);
}

IntervalOpen pl_meet(std::span<const IntervalOpen> parts) {
  IntervalOpen acc = IntervalOpen::full();
  for (const auto& p : parts) {
    require_unpunctured(p);
    acc = io_meet(acc, p);
  }
  return acc;
}

GeneratorRelationReport generator_relations(const Rational& p, const Rational& q, int depth) {
  if (depth < 2) throw Error(ErrorCode::PreconditionFailed, "depth must be at least 2");
  auto right = [](const Rational& a) { return IntervalOpen::interval(a, QBound::pos_inf()); };
  auto left = [](const Rational& a) { return IntervalOpen::interval(QBound::neg_inf(), a); };

  GeneratorRelationReport r{p, q};
  const IntervalOpen pair[] = {right(p), left(q)};
  r.join_is_top = pl_join(pair).is_full();
  r.join_expected = p <= q;
  r.meet_is_bottom = pl_meet(pair).is_empty();
  r.meet_forced = p > q;
  r.meet_exact = p >= q;

  // Partial joins of (p + 1/k, ∞) and (−∞, q − 1/k), partial meets of
  // (k, ∞) and partial joins of (−∞, k), for k = 1..depth.
  std::vector<IntervalOpen> from_right, from_left, down, up;
  IntervalOpen jr, jl, md = IntervalOpen::full(), ju;
  for (int k = 1; k <= depth; ++k) {
    const IntervalOpen a[] = {jr, right(p + Rational(1, k))};
    const IntervalOpen b[] = {jl, left(q - Rational(1, k))};
    const IntervalOpen c[] = {md, right(Rational(k))};
    const IntervalOpen d[] = {ju, left(Rational(k))};
    jr = pl_join(a);
    jl = pl_join(b);
    md = pl_meet(c);
    ju = pl_join(d);
    from_right.push_back(jr);
    from_left.push_back(jl);
    down.push_back(md);
    up.push_back(ju);
  }
  r.approximations_monotone = true;
  for (int k = 1; k < depth; ++k) {
    auto strictly = [](const IntervalOpen& a, const IntervalOpen& b) { return io_leq(a, b) && !(a == b); };
    if (!strictly(from_right[k - 1], from_right[k]) || !strictly(from_left[k - 1], from_left[k]) ||
        !strictly(down[k], down[k - 1]) || !strictly(up[k - 1], up[k]))
      r.approximations_monotone = false;
  }
  r.approximations_bounded = true;
  for (int k = 0; k < depth; ++k) {
    if (!io_leq(from_right[k], right(p)) || !io_leq(from_left[k], left(q)) || down[k].is_empty() || up[k].is_full())
      r.approximations_bounded = false;
  }
  return r;
}

IntervalFilter point_filter(const Rational& x) {
  IntervalFilter f;
  f.name = "point filter at " + to_string(x);
  f.contains = [x](const IntervalOpen& u) { return !io_is_punctured(u).punctured && u.contains(x); };
  f.round_witness = [x](const IntervalOpen& u) { return shrink_around(u, x); };
  f.regular_witness = [x](const IntervalOpen& v) -> std::optional<IntervalOpen> {
    require_unpunctured(v);
    if (v.is_full()) throw Error(ErrorCode::PreconditionFailed, "challenge must be below top");
    auto b = regular_ball(v, x);
    if (!b) throw Error(ErrorCode::ChallengeUnanswerable, "no gap in " + to_string(v));
    return b;
  };
  return f;
}

IntervalFilter full_point_filter(const Rational& x) {
  IntervalFilter f;
  f.name = "open neighbourhoods of " + to_string(x);
  f.contains = [x](const IntervalOpen& u) { return u.contains(x); };
  f.round_witness = [x](const IntervalOpen& u) { return shrink_around(u, x); };
  f.regular_witness = [x](const IntervalOpen& v) { return regular_ball(v, x); };
  return f;
}

std::pair<IntervalOpen, IntervalOpen> separate_points(const Rational& x, const Rational& z) {
  if (x == z) throw Error(ErrorCode::PreconditionFailed, "points coincide");
  Rational r = abs(x - z) / 4;
  return {IntervalOpen::interval(x - r, x + r), IntervalOpen::interval(z - r, z + r)};
}

namespace {

std::vector<Rational> grid_points(std::mt19937_64& rng, int count, int span) {
  std::uniform_int_distribution<int> pick(-4 * span, 4 * span);
  std::vector<int> raw;
  while (static_cast<int>(raw.size()) < count) {
    int k = pick(rng);
    if (std::find(raw.begin(), raw.end(), k) == raw.end()) raw.push_back(k);
  }
  std::sort(raw.begin(), raw.end());
  std::vector<Rational> out;
  for (int k : raw) out.emplace_back(k, 4);
  return out;
}

IntervalOpen random_shape(std::mt19937_64& rng, int max_pieces, int span, bool abut) {
  std::uniform_int_distribution<int> count(0, std::max(max_pieces, 0));
  std::bernoulli_distribution ray(1.0 / 6), touch(1.0 / 3);
  const int n = count(rng);
  auto pts = grid_points(rng, 2 * n, span);
  std::vector<Interval> pieces;
  for (int i = 0; i < n; ++i) pieces.push_back({pts[2 * i], pts[2 * i + 1]});
  if (n > 0 && ray(rng)) pieces.front().lo = QBound::neg_inf();
  if (n > 0 && ray(rng)) pieces.back().hi = QBound::pos_inf();
  if (abut)
    for (int i = 0; i + 1 < n; ++i)
      if (touch(rng)) pieces[i + 1].lo = pieces[i].hi;
  return IntervalOpen(std::move(pieces));
}

}  // namespace

IntervalOpen random_unpunctured(std::mt19937_64& rng, int max_pieces, int span) {
  return random_shape(rng, max_pieces, span, false);
}

IntervalOpen random_interval_open(std::mt19937_64& rng, int max_pieces, int span) {
  return random_shape(rng, max_pieces, span, true);
}

}  // namespace pointfree
