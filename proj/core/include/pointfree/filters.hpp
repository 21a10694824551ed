#pragma once

#include <functional>
#include <optional>
#include <span>
#include <string>

#include "pointfree/frame.hpp"

namespace pointfree {

/// A filter on a finite frame, given by its members.
struct FiniteFilter {
  FrameRef frame;
  ElementSet members;

  bool contains(ElementId a) const { return pointfree::contains(members, a); }
  bool proper() const { return !contains(frame->bottom()); }
  friend bool operator==(const FiniteFilter& a, const FiniteFilter& b) {
    return a.frame == b.frame && a.members == b.members;
  }
};

/// Throws NotAFilter unless `members` is a nonempty meet-closed upset.
FiniteFilter make_filter(const FrameRef& f, ElementSet members);
FiniteFilter principal_filter(const FrameRef& f, ElementId a);

/// Member with no member completely below it, if any.
std::optional<ElementId> roundness_failure(const FiniteFilter& x);
bool is_round(const FiniteFilter& x);
/// ⋁_{b ∈ x} b*.
ElementId star_join(const FiniteFilter& x);
bool is_regular(const FiniteFilter& x);

/// Members having a member completely below them.
FiniteFilter round_core(const FiniteFilter& x);

/// For every a ∉ x and b ≪ a some c ∈ x has b ∧ c = ⊥. Meaningful for
/// proper round x.
bool is_maximal_round(const FiniteFilter& x);

/// a_i ≪ b_i and a1 ∨ a2 ∈ x imply b1 ∈ x or b2 ∈ x.
bool has_round_primeness(const FiniteFilter& x);

struct MaxFilters {
  FiniteFilter x;     // {b : b ≰ a}
  ElementSet y;       // members of x fixed by π
  bool maximal_round = false;
  ElementId star_join = 0;
  bool completely_prime = false;
};
/// Throws NotMaximal unless `a` is a maximal element.
MaxFilters filter_of_max(const FrameRef& f, ElementId a);

struct ImageFilter {
  FiniteFilter filter;
  bool proper = false;
  bool proper_by_adjoint = false;  // m_*(⊥) ∉ x
};
/// Filter generated by m(x) for a surjection m. Throws NotSurjective.
ImageFilter image_filter(const FrameHom& m, const FiniteFilter& x);

/// Any two distinct filters of the family contain disjoint members.
bool is_independent(std::span<const FiniteFilter> family);

struct SupportFamily {
  std::vector<FiniteFilter> x_filters;  // x_a on the frame itself
  std::vector<ElementSet> y_sets;       // y_a: x_a cut down to the pointless part
  bool x_independent = false;
  bool y_independent = false;
};
SupportFamily spatial_support(const FrameRef& f);

/// Ideal generated by {a* : a ∈ x}.
ElementSet round_ideal_of(const FiniteFilter& x);
/// Filter generated by {b* : b ∈ I}.
FiniteFilter round_filter_of(const FrameRef& f, const ElementSet& ideal);
bool is_ideal(const FiniteFrame& f, const ElementSet& members);
bool is_round_ideal(const FiniteFrame& f, const ElementSet& members);

std::vector<FiniteFilter> all_filters(const FrameRef& f);
std::vector<FiniteFilter> ultrafilters(const FrameRef& f);
std::vector<FiniteFilter> round_filters(const FrameRef& f);
/// Maximal members of the proper round filters, by inclusion.
std::vector<FiniteFilter> maximal_proper_round_filters(const FrameRef& f);

/// A filter on an infinite carrier given by a decision procedure and two
/// witness functions. Every witness is checked by the caller before use.
template <typename Element>
struct OracleFilter {
  std::string name;
  std::function<bool(const Element&)> contains;
  /// For a member a: some member b with b ≪ a.
  std::function<Element(const Element&)> round_witness;
  /// For a challenge V < ⊤: a member b with b* ≰ V, or nothing.
  std::function<std::optional<Element>(const Element&)> regular_witness;
};

struct WitnessCheck {
  std::size_t checked = 0;
  std::optional<std::size_t> first_failure;  // index into the sample
  bool ok() const { return !first_failure.has_value(); }
};

/// Validates round witnesses on the members among `samples`.
template <typename Element, typename CompletelyBelow>
WitnessCheck check_round(const OracleFilter<Element>& x, std::span<const Element> samples, CompletelyBelow&& cb) {
  WitnessCheck r;
  for (std::size_t i = 0; i < samples.size(); ++i) {
    if (!x.contains(samples[i])) continue;
    ++r.checked;
    auto b = x.round_witness(samples[i]);
    if (!x.contains(b) || !cb(b, samples[i])) {
      r.first_failure = i;
      return r;
    }
  }
  return r;
}

/// Answers each challenge V and validates b ∈ x and b* ≰ V.
template <typename Element, typename Star, typename Leq>
WitnessCheck check_regular(const OracleFilter<Element>& x, std::span<const Element> challenges, Star&& star,
                           Leq&& leq) {
  WitnessCheck r;
  for (std::size_t i = 0; i < challenges.size(); ++i) {
    ++r.checked;
    auto b = x.regular_witness(challenges[i]);
    if (!b || !x.contains(*b) || leq(star(*b), challenges[i])) {
      r.first_failure = i;
      return r;
    }
  }
  return r;
}

}  // namespace pointfree
