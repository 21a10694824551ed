#include "pointfree/nucleus.hpp"

#include <algorithm>
#include <random>

#include "pointfree/order.hpp"

namespace pointfree {

namespace {

constexpr std::size_t kExhaustiveLimit = 4096;
constexpr std::size_t kSampledPairs = 1U << 18;

template <typename Check>
std::optional<LawViolation> for_pairs(std::size_t n, Check&& check) {
  if (n <= kExhaustiveLimit) {
    for (ElementId a = 0; a < n; ++a)
      for (ElementId b = 0; b < n; ++b)
        if (auto v = check(a, b)) return v;
    return std::nullopt;
  }
  std::mt19937_64 rng(0x5eed);
  std::uniform_int_distribution<ElementId> pick(0, static_cast<ElementId>(n - 1));
  for (std::size_t i = 0; i < kSampledPairs; ++i)
    if (auto v = check(pick(rng), pick(rng))) return v;
  return std::nullopt;
}

std::optional<LawViolation> shape_violation(const FiniteFrame& f, const std::vector<ElementId>& op) {
  if (op.size() != f.size()) return LawViolation{"table length differs from frame size", {}};
  for (ElementId a = 0; a < op.size(); ++a) {
    if (op[a] >= f.size()) return LawViolation{"value out of range", {a}};
    if (!f.leq(a, op[a])) return LawViolation{"not inflationary", {a}};
  }
  return std::nullopt;
}

ElementSet fixed_of(const std::vector<ElementId>& op) {
  ElementSet out;
  for (ElementId a = 0; a < op.size(); ++a)
    if (op[a] == a) out.push_back(a);
  return out;
}

}  // namespace

std::optional<LawViolation> prenucleus_violation(const FiniteFrame& f, const std::vector<ElementId>& op) {
  if (auto v = shape_violation(f, op)) return v;
  return for_pairs(f.size(), [&](ElementId a, ElementId b) -> std::optional<LawViolation> {
    if (f.leq(a, b) && !f.leq(op[a], op[b])) return LawViolation{"not monotone", {a, b}};
    if (!f.leq(f.meet(a, op[b]), op[f.meet(a, b)])) return LawViolation{"op(a∧b) ≱ a∧op(b)", {a, b}};
    return std::nullopt;
  });
}

std::optional<LawViolation> nucleus_violation(const FiniteFrame& f, const std::vector<ElementId>& op) {
  if (auto v = shape_violation(f, op)) return v;
  for (ElementId a = 0; a < op.size(); ++a)
    if (op[op[a]] != op[a]) return LawViolation{"not idempotent", {a}};
  return for_pairs(f.size(), [&](ElementId a, ElementId b) -> std::optional<LawViolation> {
    if (f.leq(a, b) && !f.leq(op[a], op[b])) return LawViolation{"not monotone", {a, b}};
    if (op[f.meet(a, b)] != f.meet(op[a], op[b])) return LawViolation{"meets not preserved", {a, b}};
    return std::nullopt;
  });
}

Prenucleus::Prenucleus(FrameRef frame, std::vector<ElementId> op) : frame_(std::move(frame)), op_(std::move(op)) {
  if (auto v = prenucleus_violation(*frame_, op_)) throw Error(ErrorCode::NotAPrenucleus, v->law, v->witness);
}

Prenucleus::Prenucleus(FrameRef frame, std::vector<ElementId> op, bool)
    : frame_(std::move(frame)), op_(std::move(op)) {}

Prenucleus Prenucleus::unchecked(FrameRef frame, std::vector<ElementId> op) {
  return Prenucleus(std::move(frame), std::move(op), true);
}

ElementSet Prenucleus::fixed_points() const { return fixed_of(op_); }

Nucleus::Nucleus(FrameRef frame, std::vector<ElementId> op) : frame_(std::move(frame)), op_(std::move(op)) {
  if (auto v = nucleus_violation(*frame_, op_)) throw Error(ErrorCode::NotANucleus, v->law, v->witness);
}

Nucleus::Nucleus(FrameRef frame, std::vector<ElementId> op, bool) : frame_(std::move(frame)), op_(std::move(op)) {}

Nucleus Nucleus::unchecked(FrameRef frame, std::vector<ElementId> op) {
  return Nucleus(std::move(frame), std::move(op), true);
}

ElementSet Nucleus::fixed_points() const { return fixed_of(op_); }

ElementSet Nucleus::kernel() const {
  ElementSet out;
  for (ElementId a = 0; a < op_.size(); ++a)
    if (op_[a] == frame_->top()) out.push_back(a);
  return out;
}

Iteration iterate_prenucleus(const Prenucleus& p) {
  const auto n = p.frame()->size();
  std::vector<ElementId> out(n);
  std::size_t steps = 0;
  for (ElementId a = 0; a < n; ++a) {
    ElementId x = a;
    std::size_t k = 0;
    while (p(x) != x) {
      x = p(x);
      ++k;
      if (k > n) throw Error(ErrorCode::NotAPrenucleus, "orbit failed to stabilise", {a});
    }
    out[a] = x;
    steps = std::max(steps, k);
  }
  return Iteration{Nucleus(p.frame(), std::move(out)), steps};
}

bool is_filter(const FiniteFrame& f, const ElementSet& members) {
  if (members.empty()) return false;
  for (auto a : members) {
    for (ElementId b = 0; b < f.size(); ++b)
      if (f.leq(a, b) && !contains(members, b)) return false;
    for (auto b : members)
      if (!contains(members, f.meet(a, b))) return false;
  }
  return true;
}

ElementSet filter_generated(const FiniteFrame& f, const ElementSet& generators) {
  return f.up_set(f.meet_all(generators));
}

Prenucleus prenucleus_from_filter(const FrameRef& f, const ElementSet& filter) {
  if (!is_filter(*f, filter)) throw Error(ErrorCode::NotAFilter, "members do not form a filter");
  std::vector<ElementId> op(f->size());
  for (ElementId a = 0; a < f->size(); ++a) {
    ElementId acc = f->bottom();
    for (auto b : filter) acc = f->join(acc, f->heyting(b, a));
    op[a] = acc;
  }
  return Prenucleus(f, std::move(op));
}

Nucleus filter_nucleus(const FrameRef& f, const ElementSet& filter) {
  return iterate_prenucleus(prenucleus_from_filter(f, filter)).nucleus;
}

bool is_normal_filter(const FrameRef& f, const ElementSet& filter) {
  return filter_nucleus(f, filter).kernel() == filter;
}

ElementSet normal_filter_generated(const FrameRef& f, const ElementSet& generators) {
  auto current = filter_generated(*f, generators);
  while (true) {
    auto next = filter_nucleus(f, current).kernel();
    if (next == current) return current;
    current = std::move(next);
  }
}

Nucleus sigma_nucleus(const FrameRef& f) {
  const auto maxs = maxima(*f);
  std::vector<ElementId> op(f->size());
  for (ElementId a = 0; a < f->size(); ++a) {
    ElementId acc = f->top();
    for (auto m : maxs)
      if (f->leq(a, m)) acc = f->meet(acc, m);
    op[a] = acc;
  }
  return Nucleus(f, std::move(op));
}

Prenucleus pi_prenucleus(const FrameRef& f) {
  std::vector<ElementId> op(f->size());
  for (ElementId a = 0; a < f->size(); ++a) op[a] = f->join_all(plus_set(*f, a));
  return Prenucleus(f, std::move(op));
}

Nucleus pi_nucleus(const FrameRef& f) { return iterate_prenucleus(pi_prenucleus(f)).nucleus; }

NucleusQuotient fix_quotient(const Nucleus& nuc) {
  const auto& f = *nuc.frame();
  auto members = nuc.fixed_points();
  const auto n = members.size();
  std::vector<ElementId> local(f.size(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<ElementId>(i);
  FiniteFrame::Tables t;
  t.size = n;
  t.leq.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      auto a = members[i], b = members[j];
      t.leq[i * n + j] = f.leq(a, b);
      t.meet[i * n + j] = local[nuc(f.meet(a, b))];
      t.join[i * n + j] = local[nuc(f.join(a, b))];
    }
  t.bottom = local[nuc(f.bottom())];
  t.top = local[f.top()];
  std::vector<std::string> labels;
  for (auto m : members) labels.push_back(f.label(m));
  auto q = std::make_shared<const FiniteFrame>(std::move(t), std::move(labels));
  std::vector<ElementId> map(f.size());
  for (ElementId a = 0; a < f.size(); ++a) map[a] = local[nuc(a)];
  auto hom = FrameHom::unchecked(nuc.frame(), q, std::move(map));
  return NucleusQuotient{q, std::move(members), std::move(hom)};
}

std::optional<ElementId> kernel_escape(const FrameHom& m, const Nucleus& nL, const Nucleus& nM) {
  const auto top = nM.frame()->top();
  for (auto a : nL.kernel())
    if (nM(m(a)) != top) return a;
  return std::nullopt;
}

std::optional<std::pair<ElementId, ElementId>> drop_obstruction(const FrameHom& m, const Nucleus& nL,
                                                                const Nucleus& nM) {
  const auto n = m.source()->size();
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = a + 1; b < n; ++b)
      if (nL(a) == nL(b) && nM(m(a)) != nM(m(b))) return std::pair{a, b};
  return std::nullopt;
}

FrameHom drop_hom(const FrameHom& m, const Nucleus& nL, const Nucleus& nM) {
  if (nL.frame() != m.source() || nM.frame() != m.target())
    throw Error(ErrorCode::MixedFrames, "nuclei do not sit on the hom's source and target");
  if (auto a = kernel_escape(m, nL, nM))
    throw Error(ErrorCode::KernelNotPreserved, "kernel element leaves the target kernel", {*a});
  if (auto p = drop_obstruction(m, nL, nM))
    throw Error(ErrorCode::SquareDoesNotCommute, "identified pair separated after the drop", {p->first, p->second});
  auto ql = fix_quotient(nL);
  auto qm = fix_quotient(nM);
  std::vector<ElementId> map(ql.members.size());
  for (std::size_t i = 0; i < map.size(); ++i) map[i] = qm.map(m(ql.members[i]));
  return FrameHom::unchecked(ql.frame, qm.frame, std::move(map));
}

std::optional<ElementId> top_condition_witness(const FrameHom& m, const FrameHom& n) {
  for (ElementId a = 0; a < m.source()->size(); ++a)
    if (m(a) == m.target()->top() && n(a) != n.target()->top()) return a;
  return std::nullopt;
}

std::optional<std::pair<ElementId, ElementId>> factor_obstruction(const FrameHom& m, const FrameHom& n) {
  const auto size = m.source()->size();
  for (ElementId a = 0; a < size; ++a)
    for (ElementId b = a + 1; b < size; ++b)
      if (m(a) == m(b) && n(a) != n(b)) return std::pair{a, b};
  return std::nullopt;
}

FrameHom factor_through_surjection(const FrameHom& m, const FrameHom& n) {
  if (m.source() != n.source() && m.source()->size() != n.source()->size())
    throw Error(ErrorCode::MixedFrames, "homs do not share a domain");
  if (!m.is_surjective()) throw Error(ErrorCode::NotSurjective, "factoring needs a surjection");
  if (auto a = top_condition_witness(m, n))
    throw Error(ErrorCode::TopConditionFails, "m(a) = top but n(a) ≠ top", {*a});
  if (auto p = factor_obstruction(m, n))
    throw Error(ErrorCode::NotFactorable, "n separates a pair identified by m", {p->first, p->second});
  std::vector<ElementId> map(m.target()->size());
  for (ElementId a = 0; a < m.source()->size(); ++a) map[m(a)] = n(a);
  return FrameHom(m.target(), n.target(), std::move(map));
}

PiMeetDecomposition pi_meet_decomposition(const FrameRef& fr, ElementId b) {
  const auto& f = *fr;
  const auto prime = pi_prenucleus(fr);
  const auto maxs = maxima(f);
  auto step_set = [&](ElementId x) {
    ElementSet out;
    for (auto a : maxs)
      if (f.leq(x, a) && f.lt(x, f.heyting(a, x))) out.push_back(a);
    return out;
  };
  ElementSet acc{b};
  ElementId current = b;
  while (true) {
    for (auto a : step_set(current))
      if (!contains(acc, a)) acc.insert(std::lower_bound(acc.begin(), acc.end(), a), a);
    auto next = prime(current);
    if (next == current) break;
    current = next;
  }
  auto rhs = f.meet(current, f.meet_all(acc));
  return PiMeetDecomposition{current, std::move(acc), rhs == b};
}

}  // namespace pointfree
