#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace oracle {

using pointfree::IntervalOpen;
using pointfree::QBound;
using pointfree::Rational;

const std::vector<pointfree::CorpusEntry>& corpus() {
  static const auto entries = pointfree::generate_corpus({5, false});
  return entries;
}

std::vector<const pointfree::CorpusEntry*> frames_up_to(std::size_t max_elements) {
  std::vector<const pointfree::CorpusEntry*> out;
  for (const auto& e : corpus())
    if (e.frame->size() <= max_elements) out.push_back(&e);
  return out;
}

namespace {

template <typename Below>
ElementId greatest(const FiniteFrame& f, Below below) {
  std::optional<ElementId> best;
  for (ElementId c = 0; c < f.size(); ++c) {
    if (!below(c)) continue;
    bool top = true;
    for (ElementId d = 0; d < f.size() && top; ++d)
      if (below(d) && !f.leq(d, c)) top = false;
    if (top) best = c;
  }
  return best.value();
}

}  // namespace

ElementId meet(const FiniteFrame& f, ElementId a, ElementId b) {
  return greatest(f, [&](ElementId c) { return f.leq(c, a) && f.leq(c, b); });
}

ElementId join(const FiniteFrame& f, ElementId a, ElementId b) {
  std::optional<ElementId> best;
  for (ElementId c = 0; c < f.size(); ++c) {
    if (!f.leq(a, c) || !f.leq(b, c)) continue;
    bool least = true;
    for (ElementId d = 0; d < f.size() && least; ++d)
      if (f.leq(a, d) && f.leq(b, d) && !f.leq(c, d)) least = false;
    if (least) best = c;
  }
  return best.value();
}

Lattice::Lattice(const FiniteFrame& frame) : f(&frame), n(frame.size()), meets(n * n), joins(n * n) {
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a; b < n; ++b) {
      meets[a * n + b] = meets[b * n + a] = oracle::meet(*f, a, b);
      joins[a * n + b] = joins[b * n + a] = oracle::join(*f, a, b);
    }
}

ElementId Lattice::heyting(ElementId a, ElementId b) const {
  return greatest(*f, [&](ElementId c) { return f->leq(meet(a, c), b); });
}

bool Lattice::complemented(ElementId a) const {
  for (ElementId c = 0; c < n; ++c)
    if (meet(a, c) == f->bottom() && join(a, c) == f->top()) return true;
  return false;
}

bool Lattice::completely_below(ElementId a, ElementId b) const {
  for (ElementId c = 0; c < n; ++c)
    if (f->leq(a, c) && f->leq(c, b) && complemented(c)) return true;
  return false;
}

ElementSet covers_of(const FiniteFrame& f, ElementId a) {
  ElementSet out;
  for (ElementId c = 0; c < f.size(); ++c) {
    if (!f.lt(a, c)) continue;
    bool between = false;
    for (ElementId d = 0; d < f.size() && !between; ++d) between = f.lt(a, d) && f.lt(d, c);
    if (!between) out.push_back(c);
  }
  return out;
}

ElementSet maxima(const FiniteFrame& f) {
  ElementSet out;
  for (ElementId a = 0; a < f.size(); ++a) {
    auto up = covers_of(f, a);
    if (up.size() == 1 && up[0] == f.top()) out.push_back(a);
  }
  return out;
}

ElementSet atoms(const FiniteFrame& f) {
  ElementSet out;
  for (ElementId a = 0; a < f.size(); ++a) {
    if (a == f.bottom()) continue;
    auto up = covers_of(f, f.bottom());
    if (std::find(up.begin(), up.end(), a) != up.end()) out.push_back(a);
  }
  return out;
}

bool Lattice::is_congruence(const std::vector<ElementId>& cls) const {
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (cls[a] != cls[b]) continue;
      for (ElementId c = 0; c < n; ++c)
        if (cls[meet(a, c)] != cls[meet(b, c)] || cls[join(a, c)] != cls[join(b, c)]) return false;
    }
  return true;
}

std::vector<ElementId> canonical(const std::vector<ElementId>& class_of) {
  std::map<ElementId, ElementId> seen;
  std::vector<ElementId> out;
  for (auto c : class_of) out.push_back(seen.emplace(c, static_cast<ElementId>(seen.size())).first->second);
  return out;
}

std::set<std::vector<ElementId>> Lattice::all_congruences() const {
  std::set<std::vector<ElementId>> out;
  std::vector<ElementId> cls(n, 0);
  std::function<void(ElementId, ElementId)> grow = [&](ElementId i, ElementId used) {
    if (i == n) {
      if (is_congruence(cls)) out.insert(cls);
      return;
    }
    for (ElementId c = 0; c <= used; ++c) {
      cls[i] = c;
      grow(i + 1, std::max<ElementId>(used, c + 1));
    }
  };
  if (n > 0) grow(0, 0);
  return out;
}

std::set<ElementSet> Lattice::all_filters() const {
  std::set<ElementSet> out;
  for (std::uint64_t mask = 1; mask < (std::uint64_t{1} << n); ++mask) {
    auto in = [&](ElementId a) { return (mask >> a & 1U) != 0; };
    bool ok = true;
    for (ElementId a = 0; a < n && ok; ++a)
      for (ElementId b = 0; b < n && ok; ++b) {
        if (in(a) && f->leq(a, b) && !in(b)) ok = false;
        if (in(a) && in(b) && !in(meet(a, b))) ok = false;
      }
    if (!ok) continue;
    ElementSet members;
    for (ElementId a = 0; a < n; ++a)
      if (in(a)) members.push_back(a);
    out.insert(members);
  }
  return out;
}

bool Lattice::is_nucleus(const std::vector<ElementId>& op) const {
  for (ElementId a = 0; a < n; ++a) {
    if (!f->leq(a, op[a]) || op[op[a]] != op[a]) return false;
    for (ElementId b = 0; b < n; ++b) {
      if (f->leq(a, b) && !f->leq(op[a], op[b])) return false;
      if (op[meet(a, b)] != meet(op[a], op[b])) return false;
    }
  }
  return true;
}

bool member(const IntervalOpen& u, const Rational& x) {
  for (const auto& p : u.pieces()) {
    bool above_lo = p.lo.kind() == QBound::Kind::NegInf || (p.lo.finite() && p.lo.value() < x);
    bool below_hi = p.hi.kind() == QBound::Kind::PosInf || (p.hi.finite() && x < p.hi.value());
    if (above_lo && below_hi) return true;
  }
  return false;
}

namespace {

std::vector<Rational> endpoints(const IntervalOpen& u) {
  std::vector<Rational> out;
  for (const auto& p : u.pieces()) {
    if (p.lo.finite()) out.push_back(p.lo.value());
    if (p.hi.finite()) out.push_back(p.hi.value());
  }
  return out;
}

}  // namespace

std::vector<Rational> probe_points(const IntervalOpen& u, const IntervalOpen& v) {
  auto ends = endpoints(u);
  auto more = endpoints(v);
  ends.insert(ends.end(), more.begin(), more.end());
  std::sort(ends.begin(), ends.end());
  ends.erase(std::unique(ends.begin(), ends.end()), ends.end());
  if (ends.empty()) return {Rational(0)};
  std::vector<Rational> out{ends.front() - 1, ends.back() + 1};
  for (std::size_t i = 0; i < ends.size(); ++i) {
    out.push_back(ends[i]);
    if (i + 1 < ends.size()) out.push_back((ends[i] + ends[i + 1]) / 2);
  }
  return out;
}

bool interior_of_complement(const IntervalOpen& u, const Rational& x) {
  Rational eps = 1;
  for (const auto& e : endpoints(u))
    if (e != x) eps = std::min<Rational>(eps, abs(e - x) / 2);
  return !member(u, x - eps) && !member(u, x) && !member(u, x + eps);
}

}  // namespace oracle
