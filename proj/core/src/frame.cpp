#include "pointfree/frame.hpp"

#include <algorithm>
#include <bit>
#include <numeric>
#include <sstream>
#include <unordered_map>

#include "frame_cache.hpp"

namespace pointfree {

namespace {

constexpr std::size_t kHeytingTableLimit = 512;

std::vector<std::string> default_labels(std::size_t n) {
  std::vector<std::string> out(n);
  for (std::size_t i = 0; i < n; ++i) out[i] = std::to_string(i);
  return out;
}

std::string mask_label(std::uint64_t mask, std::size_t width) {
  std::string s = "{";
  bool first = true;
  for (std::size_t i = 0; i < width; ++i) {
    if (mask >> i & 1U) {
      if (!first) s += ',';
      s += std::to_string(i);
      first = false;
    }
  }
  return s + "}";
}

}  // namespace

bool contains(const ElementSet& set, ElementId a) {
  return std::binary_search(set.begin(), set.end(), a);
}

FiniteFrame::FiniteFrame(Tables tables, std::vector<std::string> labels)
    : t_(std::move(tables)), labels_(std::move(labels)), cache_(std::make_unique<detail::FrameCache>()) {
  if (labels_.size() != t_.size) labels_ = default_labels(t_.size);
}

FiniteFrame::~FiniteFrame() = default;

ElementId FiniteFrame::join_all(std::span<const ElementId> xs) const {
  ElementId acc = bottom();
  for (ElementId x : xs) acc = join(acc, x);
  return acc;
}

ElementId FiniteFrame::meet_all(std::span<const ElementId> xs) const {
  ElementId acc = top();
  for (ElementId x : xs) acc = meet(acc, x);
  return acc;
}

ElementId FiniteFrame::heyting(ElementId a, ElementId b) const {
  const auto n = size();
  auto scan = [&](ElementId x, ElementId y) {
    ElementId acc = bottom();
    for (ElementId c = 0; c < n; ++c)
      if (leq(meet(x, c), y)) acc = join(acc, c);
    return acc;
  };
  if (n > kHeytingTableLimit) return scan(a, b);
  auto& c = *cache_;
  std::call_once(c.heyting_once, [&] {
    c.heyting.resize(n * n);
    for (ElementId x = 0; x < n; ++x)
      for (ElementId y = 0; y < n; ++y) c.heyting[x * n + y] = scan(x, y);
  });
  return c.heyting[a * n + b];
}

bool FiniteFrame::is_complemented(ElementId a) const {
  return join(a, pseudocomplement(a)) == top();
}

const ElementSet& FiniteFrame::successors(ElementId a) const {
  auto& c = *cache_;
  std::call_once(c.covers_once, [&] {
    const auto n = size();
    c.successors.assign(n, {});
    c.predecessors.assign(n, {});
    for (ElementId x = 0; x < n; ++x) {
      for (ElementId y = 0; y < n; ++y) {
        if (!lt(x, y)) continue;
        bool cover = true;
        for (ElementId z = 0; z < n && cover; ++z)
          if (lt(x, z) && lt(z, y)) cover = false;
        if (cover) {
          c.successors[x].push_back(y);
          c.predecessors[y].push_back(x);
        }
      }
    }
  });
  return c.successors[a];
}

const ElementSet& FiniteFrame::predecessors(ElementId a) const {
  (void)successors(a);
  return cache_->predecessors[a];
}

ElementSet FiniteFrame::up_set(ElementId a) const {
  ElementSet out;
  for (ElementId x = 0; x < size(); ++x)
    if (leq(a, x)) out.push_back(x);
  return out;
}

ElementSet FiniteFrame::down_set(ElementId a) const {
  ElementSet out;
  for (ElementId x = 0; x < size(); ++x)
    if (leq(x, a)) out.push_back(x);
  return out;
}

ElementSet FiniteFrame::all() const {
  ElementSet out(size());
  std::iota(out.begin(), out.end(), ElementId{0});
  return out;
}

std::vector<char> order_closure(const PosetSpec& poset) {
  const auto n = poset.size;
  std::vector<char> leq(n * n, 0);
  for (std::size_t i = 0; i < n; ++i) leq[i * n + i] = 1;
  for (auto [lo, hi] : poset.covers) {
    if (lo >= n || hi >= n)
      throw Error(ErrorCode::InvalidPoset, "cover index out of range", {lo, hi});
    if (lo == hi) throw Error(ErrorCode::InvalidPoset, "reflexive cover pair", {lo, hi});
    leq[lo * n + hi] = 1;
  }
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < n; ++i)
      if (leq[i * n + k])
        for (std::size_t j = 0; j < n; ++j)
          if (leq[k * n + j]) leq[i * n + j] = 1;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (leq[i * n + j] && leq[j * n + i])
        throw Error(ErrorCode::InvalidPoset, "cover relation has a cycle",
                    {static_cast<ElementId>(i), static_cast<ElementId>(j)});
  return leq;
}

FrameRef frame_from_order(std::size_t n, std::vector<char> leq, std::vector<std::string> labels) {
  if (n == 0) throw Error(ErrorCode::NotALattice, "a lattice needs at least one element");
  auto le = [&](std::size_t a, std::size_t b) { return leq[a * n + b] != 0; };
  for (std::size_t a = 0; a < n; ++a) {
    if (!le(a, a)) throw Error(ErrorCode::InvalidPoset, "order is not reflexive", {ElementId(a)});
    for (std::size_t b = 0; b < n; ++b) {
      if (a != b && le(a, b) && le(b, a))
        throw Error(ErrorCode::InvalidPoset, "order is not antisymmetric", {ElementId(a), ElementId(b)});
      if (!le(a, b)) continue;
      for (std::size_t c = 0; c < n; ++c)
        if (le(b, c) && !le(a, c))
          throw Error(ErrorCode::InvalidPoset, "order is not transitive",
                      {ElementId(a), ElementId(b), ElementId(c)});
    }
  }

  FiniteFrame::Tables t;
  t.size = n;
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a; b < n; ++b) {
      std::optional<std::size_t> glb, lub;
      for (std::size_t c = 0; c < n; ++c) {
        if (le(c, a) && le(c, b) && (!glb || le(*glb, c))) glb = c;
        if (le(a, c) && le(b, c) && (!lub || le(c, *lub))) lub = c;
      }
      bool ok = glb && lub;
      // The running max/min is only a bound if every common bound sits below/above it.
      for (std::size_t c = 0; ok && c < n; ++c) {
        if (le(c, a) && le(c, b) && !le(c, *glb)) ok = false;
        if (le(a, c) && le(b, c) && !le(*lub, c)) ok = false;
      }
      if (!ok)
        throw Error(ErrorCode::NotALattice, "pair lacks a meet or a join", {ElementId(a), ElementId(b)});
      t.meet[a * n + b] = t.meet[b * n + a] = static_cast<ElementId>(*glb);
      t.join[a * n + b] = t.join[b * n + a] = static_cast<ElementId>(*lub);
    }
  }
  for (std::size_t a = 0; a < n; ++a) {
    bool is_bottom = true, is_top = true;
    for (std::size_t b = 0; b < n; ++b) {
      is_bottom = is_bottom && le(a, b);
      is_top = is_top && le(b, a);
    }
    if (is_bottom) t.bottom = static_cast<ElementId>(a);
    if (is_top) t.top = static_cast<ElementId>(a);
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t c = 0; c < n; ++c) {
        auto lhs = t.meet[a * n + t.join[b * n + c]];
        auto rhs = t.join[t.meet[a * n + b] * n + t.meet[a * n + c]];
        if (lhs != rhs)
          throw Error(ErrorCode::NotDistributive, "a∧(b∨c) ≠ (a∧b)∨(a∧c)",
                      {ElementId(a), ElementId(b), ElementId(c)});
      }
  t.leq = std::move(leq);
  return std::make_shared<const FiniteFrame>(std::move(t), std::move(labels));
}

FrameRef frame_unchecked(FiniteFrame::Tables tables, std::vector<std::string> labels) {
  return std::make_shared<const FiniteFrame>(std::move(tables), std::move(labels));
}

FrameRef build_frame(const PosetSpec& covers, std::vector<std::string> labels) {
  return frame_from_order(covers.size, order_closure(covers), std::move(labels));
}

FrameRef downset_lattice(const PosetSpec& poset) {
  const auto n = poset.size;
  if (n > 20) throw Error(ErrorCode::InvalidPoset, "downset enumeration limited to 20 points");
  auto leq = order_closure(poset);
  std::vector<std::uint64_t> below(n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (leq[j * n + i]) below[i] |= std::uint64_t{1} << j;

  std::vector<std::uint64_t> downsets;
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << n); ++mask) {
    bool closed = true;
    for (std::size_t i = 0; i < n && closed; ++i)
      if ((mask >> i & 1U) && (below[i] & ~mask) != 0) closed = false;
    if (closed) downsets.push_back(mask);
  }
  std::stable_sort(downsets.begin(), downsets.end(), [](auto a, auto b) {
    auto pa = std::popcount(a), pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::unordered_map<std::uint64_t, ElementId> index;
  for (std::size_t i = 0; i < downsets.size(); ++i) index[downsets[i]] = static_cast<ElementId>(i);

  const auto m = downsets.size();
  FiniteFrame::Tables t;
  t.size = m;
  t.leq.assign(m * m, 0);
  t.meet.assign(m * m, 0);
  t.join.assign(m * m, 0);
  for (std::size_t a = 0; a < m; ++a)
    for (std::size_t b = 0; b < m; ++b) {
      auto da = downsets[a], db = downsets[b];
      t.leq[a * m + b] = (da & ~db) == 0;
      t.meet[a * m + b] = index.at(da & db);
      t.join[a * m + b] = index.at(da | db);
    }
  t.bottom = 0;
  t.top = static_cast<ElementId>(m - 1);
  std::vector<std::string> labels;
  labels.reserve(m);
  for (auto d : downsets) labels.push_back(mask_label(d, n));
  return std::make_shared<const FiniteFrame>(std::move(t), std::move(labels));
}

FrameRef chain_frame(std::size_t length) {
  PosetSpec spec{length, {}};
  for (std::size_t i = 0; i + 1 < length; ++i)
    spec.covers.emplace_back(static_cast<ElementId>(i), static_cast<ElementId>(i + 1));
  return build_frame(spec);
}

FrameRef boolean_frame(std::size_t atoms) { return downset_lattice(PosetSpec{atoms, {}}); }

// ---------------------------------------------------------------------------
// Homomorphisms

std::optional<std::string> hom_violation(const FiniteFrame& s, const FiniteFrame& t,
                                         const std::vector<ElementId>& map) {
  if (map.size() != s.size()) return "map length differs from source size";
  for (auto x : map)
    if (x >= t.size()) return "image index out of range";
  if (map[s.bottom()] != t.bottom()) return "bottom not preserved";
  if (map[s.top()] != t.top()) return "top not preserved";
  for (ElementId a = 0; a < s.size(); ++a)
    for (ElementId b = a + 1; b < s.size(); ++b) {
      if (map[s.meet(a, b)] != t.meet(map[a], map[b]))
        return "meet of " + s.label(a) + " and " + s.label(b) + " not preserved";
      if (map[s.join(a, b)] != t.join(map[a], map[b]))
        return "join of " + s.label(a) + " and " + s.label(b) + " not preserved";
    }
  return std::nullopt;
}

FrameHom::FrameHom(FrameRef source, FrameRef target, std::vector<ElementId> map)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {
  if (auto why = hom_violation(*source_, *target_, map_)) throw Error(ErrorCode::InvalidHom, *why);
}

FrameHom::FrameHom(FrameRef source, FrameRef target, std::vector<ElementId> map, bool)
    : source_(std::move(source)), target_(std::move(target)), map_(std::move(map)) {}

FrameHom FrameHom::unchecked(FrameRef source, FrameRef target, std::vector<ElementId> map) {
  return FrameHom(std::move(source), std::move(target), std::move(map), true);
}

bool FrameHom::is_surjective() const {
  std::vector<char> hit(target_->size(), 0);
  for (auto x : map_) hit[x] = 1;
  return std::all_of(hit.begin(), hit.end(), [](char c) { return c != 0; });
}

bool FrameHom::is_injective() const {
  std::vector<char> hit(target_->size(), 0);
  for (auto x : map_) {
    if (hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

ElementSet FrameHom::top_fiber() const {
  ElementSet out;
  for (ElementId a = 0; a < map_.size(); ++a)
    if (map_[a] == target_->top()) out.push_back(a);
  return out;
}

FrameHom identity_hom(const FrameRef& f) { return FrameHom::unchecked(f, f, f->all()); }

FrameHom compose(const FrameHom& second, const FrameHom& first) {
  if (first.target() != second.source() && first.target()->size() != second.source()->size())
    throw Error(ErrorCode::MixedFrames, "composition of non-adjacent homs");
  std::vector<ElementId> map(first.source()->size());
  for (ElementId a = 0; a < map.size(); ++a) map[a] = second(first(a));
  return FrameHom::unchecked(first.source(), second.target(), std::move(map));
}

std::vector<ElementId> right_adjoint(const FrameHom& m) {
  const auto& s = *m.source();
  const auto& t = *m.target();
  std::vector<ElementId> out(t.size());
  for (ElementId b = 0; b < t.size(); ++b) {
    ElementId acc = s.bottom();
    for (ElementId a = 0; a < s.size(); ++a)
      if (t.leq(m(a), b)) acc = s.join(acc, a);
    out[b] = acc;
  }
  return out;
}

// ---------------------------------------------------------------------------
// Constructions

ProductFrame product_frame(const FrameRef& left, const FrameRef& right) {
  const auto nl = left->size(), nr = right->size(), n = nl * nr;
  FiniteFrame::Tables t;
  t.size = n;
  t.leq.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  auto id = [nr](std::size_t a, std::size_t b) { return static_cast<ElementId>(a * nr + b); };
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) {
      auto xa = static_cast<ElementId>(x / nr), xb = static_cast<ElementId>(x % nr);
      auto ya = static_cast<ElementId>(y / nr), yb = static_cast<ElementId>(y % nr);
      t.leq[x * n + y] = left->leq(xa, ya) && right->leq(xb, yb);
      t.meet[x * n + y] = id(left->meet(xa, ya), right->meet(xb, yb));
      t.join[x * n + y] = id(left->join(xa, ya), right->join(xb, yb));
    }
  t.bottom = id(left->bottom(), right->bottom());
  t.top = id(left->top(), right->top());
  std::vector<std::string> labels;
  for (std::size_t x = 0; x < n; ++x)
    labels.push_back("(" + left->label(static_cast<ElementId>(x / nr)) + "," +
                     right->label(static_cast<ElementId>(x % nr)) + ")");
  auto frame = std::make_shared<const FiniteFrame>(std::move(t), std::move(labels));
  std::vector<ElementId> p1(n), p2(n);
  for (std::size_t x = 0; x < n; ++x) {
    p1[x] = static_cast<ElementId>(x / nr);
    p2[x] = static_cast<ElementId>(x % nr);
  }
  return ProductFrame{frame, left, right, FrameHom::unchecked(frame, left, std::move(p1)),
                      FrameHom::unchecked(frame, right, std::move(p2))};
}

FrameHom ProductFrame::pairing(const FrameHom& f, const FrameHom& g) const {
  if (f.source() != g.source()) throw Error(ErrorCode::MixedFrames, "pairing needs a common source");
  std::vector<ElementId> map(f.source()->size());
  for (ElementId a = 0; a < map.size(); ++a) map[a] = pair(f(a), g(a));
  return FrameHom::unchecked(f.source(), frame, std::move(map));
}

bool is_sublattice(const FiniteFrame& f, const ElementSet& members) {
  if (!contains(members, f.bottom()) || !contains(members, f.top())) return false;
  for (auto a : members)
    for (auto b : members)
      if (!contains(members, f.meet(a, b)) || !contains(members, f.join(a, b))) return false;
  return true;
}

Subframe subframe(const FrameRef& f, const ElementSet& members) {
  if (!is_sublattice(*f, members))
    throw Error(ErrorCode::PreconditionFailed, "subset is not closed under the frame operations");
  const auto n = members.size();
  std::vector<ElementId> local(f->size(), 0);
  for (std::size_t i = 0; i < n; ++i) local[members[i]] = static_cast<ElementId>(i);
  FiniteFrame::Tables t;
  t.size = n;
  t.leq.assign(n * n, 0);
  t.meet.assign(n * n, 0);
  t.join.assign(n * n, 0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      t.leq[i * n + j] = f->leq(members[i], members[j]);
      t.meet[i * n + j] = local[f->meet(members[i], members[j])];
      t.join[i * n + j] = local[f->join(members[i], members[j])];
    }
  t.bottom = local[f->bottom()];
  t.top = local[f->top()];
  std::vector<std::string> labels;
  for (auto m : members) labels.push_back(f->label(m));
  return Subframe{std::make_shared<const FiniteFrame>(std::move(t), std::move(labels)), members};
}

ElementSet join_irreducibles(const FiniteFrame& f) {
  ElementSet out;
  for (ElementId a = 0; a < f.size(); ++a)
    if (f.predecessors(a).size() == 1) out.push_back(a);
  return out;
}

namespace {

struct IsoSearch {
  const FiniteFrame& a;
  const FiniteFrame& b;
  ElementSet ja, jb;
  std::vector<int> assigned;  // index into jb
  std::vector<char> used;
  std::optional<std::vector<ElementId>> result;

  bool compatible(std::size_t i, std::size_t cand) const {
    for (std::size_t k = 0; k < i; ++k) {
      auto x = jb[static_cast<std::size_t>(assigned[k])];
      if (a.leq(ja[k], ja[i]) != b.leq(x, jb[cand])) return false;
      if (a.leq(ja[i], ja[k]) != b.leq(jb[cand], x)) return false;
    }
    return true;
  }

  std::optional<std::vector<ElementId>> extend() const {
    std::vector<ElementId> map(a.size());
    std::vector<char> hit(b.size(), 0);
    for (ElementId x = 0; x < a.size(); ++x) {
      ElementId acc = b.bottom();
      for (std::size_t k = 0; k < ja.size(); ++k)
        if (a.leq(ja[k], x)) acc = b.join(acc, jb[static_cast<std::size_t>(assigned[k])]);
      if (hit[acc]) return std::nullopt;
      hit[acc] = 1;
      map[x] = acc;
    }
    for (ElementId x = 0; x < a.size(); ++x)
      for (ElementId y = 0; y < a.size(); ++y)
        if (a.leq(x, y) != b.leq(map[x], map[y])) return std::nullopt;
    return map;
  }

  bool search(std::size_t i) {
    if (i == ja.size()) {
      result = extend();
      return result.has_value();
    }
    for (std::size_t c = 0; c < jb.size(); ++c) {
      if (used[c] || !compatible(i, c)) continue;
      used[c] = 1;
      assigned[i] = static_cast<int>(c);
      if (search(i + 1)) return true;
      used[c] = 0;
    }
    return false;
  }
};

}  // namespace

std::optional<FrameHom> find_isomorphism(const FrameRef& from, const FrameRef& to) {
  if (from->size() != to->size()) return std::nullopt;
  IsoSearch s{*from, *to, join_irreducibles(*from), join_irreducibles(*to), {}, {}, {}};
  if (s.ja.size() != s.jb.size()) return std::nullopt;
  s.assigned.assign(s.ja.size(), -1);
  s.used.assign(s.jb.size(), 0);
  if (!s.search(0)) return std::nullopt;
  return FrameHom::unchecked(from, to, std::move(*s.result));
}

bool isomorphic(const FrameRef& a, const FrameRef& b) { return find_isomorphism(a, b).has_value(); }

}  // namespace pointfree

namespace pointfree {

std::vector<FrameHom> all_homs(const FrameRef& from, const FrameRef& to) {
  const auto jf = join_irreducibles(*from);
  const auto jt = join_irreducibles(*to);
  std::vector<FrameHom> out;
  if (jf.empty()) {
    // `from` is the one-element frame; only the one-element target receives a hom.
    if (to->size() == 1) out.push_back(FrameHom::unchecked(from, to, {to->bottom()}));
    return out;
  }
  std::vector<std::size_t> choice(jt.size(), 0);
  auto monotone = [&](std::size_t upto) {
    for (std::size_t i = 0; i < upto; ++i)
      if (to->leq(jt[i], jt[upto]) && !from->leq(jf[choice[i]], jf[choice[upto]])) return false;
      else if (to->leq(jt[upto], jt[i]) && !from->leq(jf[choice[upto]], jf[choice[i]])) return false;
    return true;
  };
  auto emit = [&] {
    std::vector<ElementId> map(from->size());
    for (ElementId a = 0; a < from->size(); ++a) {
      ElementId acc = to->bottom();
      for (std::size_t i = 0; i < jt.size(); ++i)
        if (from->leq(jf[choice[i]], a)) acc = to->join(acc, jt[i]);
      map[a] = acc;
    }
    if (!hom_violation(*from, *to, map)) out.push_back(FrameHom::unchecked(from, to, std::move(map)));
  };
  std::size_t depth = 0;
  if (jt.empty()) {
    emit();
    return out;
  }
  // Iterative backtracking over choice[0..jt.size()).
  choice[0] = 0;
  while (true) {
    if (monotone(depth)) {
      if (depth + 1 == jt.size()) {
        emit();
      } else {
        ++depth;
        choice[depth] = 0;
        continue;
      }
    }
    while (++choice[depth] == jf.size()) {
      if (depth == 0) return out;
      --depth;
    }
  }
}

}  // namespace pointfree
