#include "pointfree/congruence.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace pointfree {

namespace {

std::vector<ElementId> canonical(std::vector<ElementId> raw) {
  std::vector<ElementId> rename(raw.size() + 1, static_cast<ElementId>(-1));
  ElementId next = 0;
  for (auto& c : raw) {
    if (c >= rename.size()) rename.resize(c + 1, static_cast<ElementId>(-1));
    if (rename[c] == static_cast<ElementId>(-1)) rename[c] = next++;
    c = rename[c];
  }
  return raw;
}

struct UnionFind {
  std::vector<ElementId> parent;
  explicit UnionFind(std::size_t n) : parent(n) { std::iota(parent.begin(), parent.end(), ElementId{0}); }
  ElementId find(ElementId x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(ElementId a, ElementId b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    parent[std::max(a, b)] = std::min(a, b);
    return true;
  }
  std::vector<ElementId> labels() {
    std::vector<ElementId> out(parent.size());
    for (ElementId i = 0; i < out.size(); ++i) out[i] = find(i);
    return canonical(std::move(out));
  }
};

// Saturates a union-find partition until it is compatible with ∧ and ∨.
std::vector<ElementId> close_compatible(const FiniteFrame& f, UnionFind& uf) {
  const auto n = f.size();
  bool changed = true;
  while (changed) {
    changed = false;
    for (ElementId a = 0; a < n; ++a) {
      auto r = uf.find(a);
      if (r == a) continue;
      for (ElementId c = 0; c < n; ++c) {
        changed |= uf.unite(f.meet(a, c), f.meet(r, c));
        changed |= uf.unite(f.join(a, c), f.join(r, c));
      }
    }
  }
  return uf.labels();
}

}  // namespace

std::optional<LawViolation> congruence_violation(const FiniteFrame& f, const std::vector<ElementId>& cls) {
  const auto n = f.size();
  if (cls.size() != n) return LawViolation{"partition length differs from frame size", {}};
  std::vector<ElementId> rep(n, static_cast<ElementId>(-1));
  for (ElementId a = 0; a < n; ++a) {
    if (cls[a] >= n) return LawViolation{"class index out of range", {a}};
    if (rep[cls[a]] == static_cast<ElementId>(-1)) rep[cls[a]] = a;
  }
  for (ElementId a = 0; a < n; ++a) {
    auto r = rep[cls[a]];
    for (ElementId c = 0; c < n; ++c) {
      if (cls[f.meet(a, c)] != cls[f.meet(r, c)]) return LawViolation{"meet not compatible", {a, r, c}};
      if (cls[f.join(a, c)] != cls[f.join(r, c)]) return LawViolation{"join not compatible", {a, r, c}};
    }
  }
  return std::nullopt;
}

Congruence::Congruence(FrameRef frame, std::vector<ElementId> class_of)
    : frame_(std::move(frame)), class_of_(std::move(class_of)) {
  if (auto v = congruence_violation(*frame_, class_of_)) throw Error(ErrorCode::NotACongruence, v->law, v->witness);
  class_of_ = canonical(std::move(class_of_));
  index();
}

Congruence::Congruence(FrameRef frame, std::vector<ElementId> class_of, bool)
    : frame_(std::move(frame)), class_of_(canonical(std::move(class_of))) {
  index();
}

Congruence Congruence::unchecked(FrameRef frame, std::vector<ElementId> class_of) {
  return Congruence(std::move(frame), std::move(class_of), true);
}

void Congruence::index() {
  ElementId count = 0;
  for (auto c : class_of_) count = std::max(count, c + 1);
  tops_.assign(count, frame_->bottom());
  std::vector<char> seen(count, 0);
  for (ElementId a = 0; a < class_of_.size(); ++a) {
    auto c = class_of_[a];
    tops_[c] = seen[c] ? frame_->join(tops_[c], a) : a;
    seen[c] = 1;
  }
}

std::vector<ElementSet> Congruence::classes() const {
  std::vector<ElementSet> out(tops_.size());
  for (ElementId a = 0; a < class_of_.size(); ++a) out[class_of_[a]].push_back(a);
  return out;
}

bool Congruence::leq(const Congruence& other) const {
  std::vector<ElementId> rep(tops_.size(), static_cast<ElementId>(-1));
  for (ElementId a = 0; a < class_of_.size(); ++a) {
    auto& r = rep[class_of_[a]];
    if (r == static_cast<ElementId>(-1)) r = a;
    else if (!other.related(a, r)) return false;
  }
  return true;
}

Congruence identity_congruence(const FrameRef& f) {
  std::vector<ElementId> cls(f->size());
  std::iota(cls.begin(), cls.end(), ElementId{0});
  return Congruence::unchecked(f, std::move(cls));
}

Congruence total_congruence(const FrameRef& f) { return Congruence::unchecked(f, std::vector<ElementId>(f->size(), 0)); }

Congruence open_cong(const FrameRef& f, ElementId a) {
  std::vector<ElementId> cls(f->size());
  for (ElementId x = 0; x < f->size(); ++x) cls[x] = f->meet(a, x);
  return Congruence(f, std::move(cls));
}

Congruence closed_cong(const FrameRef& f, ElementId a) {
  std::vector<ElementId> cls(f->size());
  for (ElementId x = 0; x < f->size(); ++x) cls[x] = f->join(a, x);
  return Congruence(f, std::move(cls));
}

Congruence dense_cong(const FrameRef& f) {
  std::vector<ElementId> cls(f->size());
  for (ElementId x = 0; x < f->size(); ++x) cls[x] = f->pseudocomplement(x);
  return Congruence(f, std::move(cls));
}

Congruence generated_congruence(const FrameRef& f, std::span<const std::pair<ElementId, ElementId>> pairs) {
  UnionFind uf(f->size());
  for (auto [a, b] : pairs) uf.unite(a, b);
  return Congruence::unchecked(f, close_compatible(*f, uf));
}

Congruence cong_join(std::span<const Congruence> parts) {
  if (parts.empty()) throw Error(ErrorCode::PreconditionFailed, "join of no congruences has no frame");
  const auto& f = parts.front().frame();
  UnionFind uf(f->size());
  for (const auto& c : parts) {
    if (c.frame() != f) throw Error(ErrorCode::MixedFrames, "congruences live on different frames");
    std::vector<ElementId> rep(c.class_count(), static_cast<ElementId>(-1));
    for (ElementId a = 0; a < f->size(); ++a) {
      auto& r = rep[c.class_of()[a]];
      if (r == static_cast<ElementId>(-1)) r = a;
      else uf.unite(a, r);
    }
  }
  // The union of congruences is already compatible; only transitivity is missing,
  // but saturating keeps this correct for unchecked inputs too.
  return Congruence::unchecked(f, close_compatible(*f, uf));
}

Congruence cong_join(const Congruence& a, const Congruence& b) {
  const Congruence both[] = {a, b};
  return cong_join(both);
}

Congruence cong_meet(const Congruence& a, const Congruence& b) {
  if (a.frame() != b.frame()) throw Error(ErrorCode::MixedFrames, "congruences live on different frames");
  const auto n = a.frame()->size();
  std::vector<ElementId> cls(n);
  for (ElementId x = 0; x < n; ++x)
    cls[x] = static_cast<ElementId>(a.class_of()[x] * n + b.class_of()[x]);
  return Congruence::unchecked(a.frame(), std::move(cls));
}

Congruence hom_cong(const FrameHom& m) {
  if (!m.is_surjective()) throw Error(ErrorCode::NotSurjective, "kernel pair taken of a non-surjection");
  return Congruence::unchecked(m.source(), m.map());
}

QuotientResult quotient(const Congruence& c) {
  const auto& f = *c.frame();
  ElementSet tops;
  for (ElementId a = 0; a < f.size(); ++a)
    if (c.class_top(a) == a) tops.push_back(a);
  const auto n = tops.size();
  std::vector<ElementId> local(f.size());
  for (std::size_t i = 0; i < n; ++i) local[tops[i]] = static_cast<ElementId>(i);
  auto index_of = [&](ElementId a) { return local[c.class_top(a)]; };
  FiniteFrame::Tables t;
  t.size = n;
  t.leq.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.leq[i * n + j] = f.leq(tops[i], tops[j]);
      t.meet[i * n + j] = index_of(f.meet(tops[i], tops[j]));
      t.join[i * n + j] = index_of(f.join(tops[i], tops[j]));
    }
  t.bottom = index_of(f.bottom());
  t.top = index_of(f.top());
  std::vector<std::string> labels;
  for (auto a : tops) labels.push_back(f.label(a));
  auto q = std::make_shared<const FiniteFrame>(std::move(t), std::move(labels));
  std::vector<ElementId> map(f.size());
  for (ElementId a = 0; a < f.size(); ++a) map[a] = index_of(a);
  return QuotientResult{q, FrameHom::unchecked(c.frame(), q, std::move(map)), std::move(tops)};
}

Congruence preimage_cong(const FrameHom& m, const Congruence& d) {
  if (!m.is_surjective()) throw Error(ErrorCode::NotSurjective, "preimage along a non-surjection");
  if (d.frame() != m.target()) throw Error(ErrorCode::MixedFrames, "congruence is not on the hom's target");
  std::vector<ElementId> cls(m.source()->size());
  for (ElementId a = 0; a < cls.size(); ++a) cls[a] = d.class_of()[m(a)];
  return Congruence::unchecked(m.source(), std::move(cls));
}

Congruence nucleus_congruence(const Nucleus& n) { return Congruence::unchecked(n.frame(), n.table()); }

Nucleus congruence_nucleus(const Congruence& c) {
  std::vector<ElementId> op(c.frame()->size());
  for (ElementId a = 0; a < op.size(); ++a) op[a] = c.class_top(a);
  return Nucleus(c.frame(), std::move(op));
}

std::vector<Congruence> enumerate_congruences(const FrameRef& f) {
  std::vector<Congruence> principal;
  for (ElementId a = 0; a < f->size(); ++a)
    for (auto b : f->successors(a)) {
      const std::pair<ElementId, ElementId> p{a, b};
      principal.push_back(generated_congruence(f, std::span(&p, 1)));
    }
  std::set<std::vector<ElementId>> seen;
  std::vector<Congruence> out{identity_congruence(f)};
  seen.insert(out.front().class_of());
  for (std::size_t i = 0; i < out.size(); ++i) {
    for (const auto& p : principal) {
      auto j = cong_join(out[i], p);
      if (seen.insert(j.class_of()).second) out.push_back(std::move(j));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Congruence> max_congruences(const FrameRef& f) {
  auto all = enumerate_congruences(f);
  std::vector<Congruence> out;
  for (const auto& c : all) {
    if (c.is_total()) continue;
    bool maximal = std::none_of(all.begin(), all.end(), [&](const Congruence& d) {
      return !d.is_total() && d != c && c.leq(d);
    });
    if (maximal) out.push_back(c);
  }
  return out;
}

std::vector<Congruence> atom_congruences(const FrameRef& f) {
  auto all = enumerate_congruences(f);
  std::vector<Congruence> out;
  for (const auto& c : all) {
    if (c.is_identity()) continue;
    bool minimal = std::none_of(all.begin(), all.end(), [&](const Congruence& d) {
      return !d.is_identity() && d != c && d.leq(c);
    });
    if (minimal) out.push_back(c);
  }
  return out;
}

}  // namespace pointfree
