#include "pointfree/filters.hpp"

#include <algorithm>

#include "pointfree/nucleus.hpp"
#include "pointfree/order.hpp"

namespace pointfree {

FiniteFilter make_filter(const FrameRef& f, ElementSet members) {
  std::sort(members.begin(), members.end());
  members.erase(std::unique(members.begin(), members.end()), members.end());
  if (!is_filter(*f, members)) throw Error(ErrorCode::NotAFilter, "members do not form a filter");
  return FiniteFilter{f, std::move(members)};
}

FiniteFilter principal_filter(const FrameRef& f, ElementId a) { return FiniteFilter{f, f->up_set(a)}; }

std::optional<ElementId> roundness_failure(const FiniteFilter& x) {
  const auto& f = *x.frame;
  for (auto a : x.members) {
    bool ok = std::any_of(x.members.begin(), x.members.end(),
                          [&](ElementId b) { return is_completely_below(f, b, a); });
    if (!ok) return a;
  }
  return std::nullopt;
}

bool is_round(const FiniteFilter& x) { return !roundness_failure(x).has_value(); }

ElementId star_join(const FiniteFilter& x) {
  ElementId acc = x.frame->bottom();
  for (auto b : x.members) acc = x.frame->join(acc, x.frame->pseudocomplement(b));
  return acc;
}

bool is_regular(const FiniteFilter& x) { return is_round(x) && star_join(x) == x.frame->top(); }

FiniteFilter round_core(const FiniteFilter& x) {
  const auto& f = *x.frame;
  ElementSet out;
  for (auto a : x.members)
    if (std::any_of(x.members.begin(), x.members.end(), [&](ElementId b) { return is_completely_below(f, b, a); }))
      out.push_back(a);
  return FiniteFilter{x.frame, std::move(out)};
}

bool is_maximal_round(const FiniteFilter& x) {
  const auto& f = *x.frame;
  for (ElementId a = 0; a < f.size(); ++a) {
    if (x.contains(a)) continue;
    for (ElementId b = 0; b < f.size(); ++b) {
      if (!is_completely_below(f, b, a)) continue;
      bool separated = std::any_of(x.members.begin(), x.members.end(),
                                   [&](ElementId c) { return f.meet(b, c) == f.bottom(); });
      if (!separated) return false;
    }
  }
  return true;
}

bool has_round_primeness(const FiniteFilter& x) {
  const auto& f = *x.frame;
  const auto n = f.size();
  for (ElementId a1 = 0; a1 < n; ++a1)
    for (ElementId a2 = 0; a2 < n; ++a2) {
      if (!x.contains(f.join(a1, a2))) continue;
      for (ElementId b1 = 0; b1 < n; ++b1) {
        if (!is_completely_below(f, a1, b1) || x.contains(b1)) continue;
        for (ElementId b2 = 0; b2 < n; ++b2)
          if (is_completely_below(f, a2, b2) && !x.contains(b2)) return false;
      }
    }
  return true;
}

MaxFilters filter_of_max(const FrameRef& f, ElementId a) {
  if (!contains(maxima(*f), a)) throw Error(ErrorCode::NotMaximal, "element is not maximal", {a});
  ElementSet xs;
  for (ElementId b = 0; b < f->size(); ++b)
    if (!f->leq(b, a)) xs.push_back(b);
  FiniteFilter x{f, xs};
  const auto pi = pi_nucleus(f);
  ElementSet y;
  for (auto b : xs)
    if (pi(b) == b) y.push_back(b);
  MaxFilters out{x, std::move(y)};
  out.maximal_round = x.proper() && is_round(x) && is_maximal_round(x);
  out.star_join = star_join(x);
  out.completely_prime = x.proper();
  for (ElementId b = 0; b < f->size() && out.completely_prime; ++b)
    for (ElementId c = 0; c < f->size(); ++c)
      if (x.contains(f->join(b, c)) && !x.contains(b) && !x.contains(c)) {
        out.completely_prime = false;
        break;
      }
  return out;
}

ImageFilter image_filter(const FrameHom& m, const FiniteFilter& x) {
  if (!m.is_surjective()) throw Error(ErrorCode::NotSurjective, "image filter along a non-surjection");
  const auto& t = *m.target();
  ElementId g = t.top();
  for (auto a : x.members) g = t.meet(g, m(a));
  ImageFilter out{FiniteFilter{m.target(), t.up_set(g)}};
  out.proper = out.filter.proper();
  out.proper_by_adjoint = !x.contains(right_adjoint(m)[t.bottom()]);
  return out;
}

namespace {

bool disjoint_members(const FiniteFrame& f, const ElementSet& a, const ElementSet& b) {
  for (auto x : a)
    for (auto y : b)
      if (f.meet(x, y) == f.bottom()) return true;
  return false;
}

}  // namespace

bool is_independent(std::span<const FiniteFilter> family) {
  for (std::size_t i = 0; i < family.size(); ++i)
    for (std::size_t j = i + 1; j < family.size(); ++j)
      if (family[i].members != family[j].members &&
          !disjoint_members(*family[i].frame, family[i].members, family[j].members))
        return false;
  return true;
}

SupportFamily spatial_support(const FrameRef& f) {
  SupportFamily out;
  for (auto a : maxima(*f)) {
    auto mf = filter_of_max(f, a);
    out.x_filters.push_back(mf.x);
    out.y_sets.push_back(mf.y);
  }
  out.x_independent = is_independent(out.x_filters);
  out.y_independent = true;
  for (std::size_t i = 0; i < out.y_sets.size(); ++i)
    for (std::size_t j = i + 1; j < out.y_sets.size(); ++j)
      if (!disjoint_members(*f, out.y_sets[i], out.y_sets[j])) out.y_independent = false;
  return out;
}

ElementSet round_ideal_of(const FiniteFilter& x) {
  ElementId g = star_join(x);
  return x.frame->down_set(g);
}

FiniteFilter round_filter_of(const FrameRef& f, const ElementSet& ideal) {
  ElementId g = f->top();
  for (auto b : ideal) g = f->meet(g, f->pseudocomplement(b));
  return FiniteFilter{f, f->up_set(g)};
}

bool is_ideal(const FiniteFrame& f, const ElementSet& members) {
  if (members.empty()) return false;
  for (auto a : members) {
    for (ElementId b = 0; b < f.size(); ++b)
      if (f.leq(b, a) && !contains(members, b)) return false;
    for (auto b : members)
      if (!contains(members, f.join(a, b))) return false;
  }
  return true;
}

bool is_round_ideal(const FiniteFrame& f, const ElementSet& members) {
  if (!is_ideal(f, members)) return false;
  for (auto a : members)
    if (std::none_of(members.begin(), members.end(), [&](ElementId b) { return is_completely_below(f, a, b); }))
      return false;
  return true;
}

std::vector<FiniteFilter> all_filters(const FrameRef& f) {
  std::vector<FiniteFilter> out;
  for (ElementId a = 0; a < f->size(); ++a) out.push_back(principal_filter(f, a));
  return out;
}

std::vector<FiniteFilter> ultrafilters(const FrameRef& f) {
  std::vector<FiniteFilter> out;
  for (auto a : atoms(*f)) out.push_back(principal_filter(f, a));
  return out;
}

std::vector<FiniteFilter> round_filters(const FrameRef& f) {
  std::vector<FiniteFilter> out;
  for (auto& x : all_filters(f))
    if (is_round(x)) out.push_back(std::move(x));
  return out;
}

std::vector<FiniteFilter> maximal_proper_round_filters(const FrameRef& f) {
  std::vector<FiniteFilter> proper;
  for (auto& x : round_filters(f))
    if (x.proper()) proper.push_back(std::move(x));
  std::vector<FiniteFilter> out;
  for (const auto& x : proper) {
    bool maximal = std::none_of(proper.begin(), proper.end(), [&](const FiniteFilter& y) {
      return y.members != x.members && std::includes(y.members.begin(), y.members.end(), x.members.begin(),
                                                     x.members.end());
    });
    if (maximal) out.push_back(x);
  }
  return out;
}

}  // namespace pointfree
