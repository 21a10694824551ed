#include "pointfree/order.hpp"

#include <algorithm>

#include "frame_cache.hpp"

namespace pointfree {

ElementSet atoms(const FiniteFrame& f) {
  if (f.size() < 2) return {};
  return f.successors(f.bottom());
}

ElementSet maxima(const FiniteFrame& f) {
  if (f.size() < 2) return {};
  return f.predecessors(f.top());
}

ElementSet plus_set(const FiniteFrame& f, ElementId a) {
  ElementSet out = f.successors(a);
  out.insert(std::lower_bound(out.begin(), out.end(), a), a);
  return out;
}

PunctureReport is_punctured(const FiniteFrame& f, ElementId a) {
  PunctureReport r;
  r.punctured = !f.successors(a).empty();
  if (!r.punctured) return r;
  for (ElementId c : maxima(f))
    for (ElementId b = 0; b < f.size(); ++b)
      if (f.lt(a, b) && f.meet(c, b) == a) {
        r.witness = PunctureWitness{c, b};
        return r;
      }
  return r;
}

ElementSet unpunctured(const FiniteFrame& f) {
  ElementSet out;
  for (ElementId a = 0; a < f.size(); ++a)
    if (f.successors(a).empty()) out.push_back(a);
  return out;
}

bool first_order_unpunctured(const FiniteFrame& f, ElementId a) {
  const auto n = f.size();
  for (ElementId b = 0; b < n; ++b) {
    if (!f.lt(a, b)) continue;
    bool found = false;
    for (ElementId c1 = 0; c1 < n && !found; ++c1) {
      auto bc1 = f.meet(b, c1);
      if (f.leq(bc1, a)) continue;
      for (ElementId c2 = 0; c2 < n && !found; ++c2) {
        auto bc2 = f.meet(b, c2);
        if (!f.leq(bc2, a) && f.leq(f.meet(bc1, c2), a)) found = true;
      }
    }
    if (!found) return false;
  }
  return true;
}

bool maximal_heyting_unpunctured(const FiniteFrame& f, ElementId a) {
  for (ElementId c : maxima(f))
    if (f.leq(a, c) && f.heyting(c, a) != a) return false;
  return true;
}

bool is_prime(const FiniteFrame& f, ElementId a) {
  if (a == f.top()) return false;
  for (ElementId b = 0; b < f.size(); ++b) {
    if (f.leq(b, a)) continue;
    for (ElementId c = 0; c < f.size(); ++c)
      if (!f.leq(c, a) && f.leq(f.meet(b, c), a)) return false;
  }
  return true;
}

namespace {

const std::vector<char>& rather_below_table(const FiniteFrame& f) {
  auto& c = f.cache();
  std::call_once(c.rather_below_once, [&] {
    const auto n = f.size();
    c.rather_below.assign(n * n, 0);
    for (ElementId a = 0; a < n; ++a) {
      auto star = f.pseudocomplement(a);
      for (ElementId b = 0; b < n; ++b) c.rather_below[a * n + b] = f.join(star, b) == f.top();
    }
  });
  return c.rather_below;
}

const std::vector<char>& completely_below_table(const FiniteFrame& f) {
  auto& c = f.cache();
  std::call_once(c.completely_below_once, [&] {
    const auto n = f.size();
    auto rel = rather_below_table(f);
    bool changed = true;
    while (changed) {
      changed = false;
      for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
          if (!rel[a * n + b]) continue;
          bool interpolates = false;
          for (std::size_t m = 0; m < n && !interpolates; ++m)
            interpolates = rel[a * n + m] && rel[m * n + b];
          if (!interpolates) {
            rel[a * n + b] = 0;
            changed = true;
          }
        }
    }
    c.completely_below = std::move(rel);
  });
  return c.completely_below;
}

}  // namespace

RelationTable rather_below(const FiniteFrame& f) {
  return RelationTable{RelationKind::RatherBelow, f.size(), rather_below_table(f)};
}

RelationTable completely_below(const FiniteFrame& f) {
  return RelationTable{RelationKind::CompletelyBelow, f.size(), completely_below_table(f)};
}

bool is_rather_below(const FiniteFrame& f, ElementId a, ElementId b) {
  return rather_below_table(f)[a * f.size() + b] != 0;
}

bool is_completely_below(const FiniteFrame& f, ElementId a, ElementId b) {
  return completely_below_table(f)[a * f.size() + b] != 0;
}

bool is_pointless(const FiniteFrame& f) { return maxima(f).empty(); }

bool is_interpolative(const FiniteFrame& f) {
  for (ElementId a = 0; a < f.size(); ++a)
    if (!f.successors(a).empty()) return false;
  return true;
}

ElementSet center(const FiniteFrame& f) {
  ElementSet out;
  for (ElementId a = 0; a < f.size(); ++a)
    if (f.is_complemented(a)) out.push_back(a);
  return out;
}

bool is_completely_regular(const FiniteFrame& f) {
  for (ElementId b = 0; b < f.size(); ++b) {
    ElementId acc = f.bottom();
    for (ElementId a = 0; a < f.size(); ++a)
      if (is_completely_below(f, a, b)) acc = f.join(acc, a);
    if (acc != b) return false;
  }
  return true;
}

}  // namespace pointfree
