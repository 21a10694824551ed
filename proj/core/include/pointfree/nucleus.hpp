#pragma once

#include <optional>
#include <string>

#include "pointfree/frame.hpp"

namespace pointfree {

/// Inflationary monotone operator with op(a ∧ b) ≥ a ∧ op(b).
class Prenucleus {
 public:
  /// Validates the laws; throws NotAPrenucleus with the offending elements.
  Prenucleus(FrameRef frame, std::vector<ElementId> op);
  static Prenucleus unchecked(FrameRef frame, std::vector<ElementId> op);

  ElementId operator()(ElementId a) const { return op_[a]; }
  const FrameRef& frame() const noexcept { return frame_; }
  const std::vector<ElementId>& table() const noexcept { return op_; }
  ElementSet fixed_points() const;

 private:
  Prenucleus(FrameRef frame, std::vector<ElementId> op, bool);
  FrameRef frame_;
  std::vector<ElementId> op_;
};

/// Inflationary, monotone, idempotent and meet-preserving operator.
class Nucleus {
 public:
  /// Validates the laws; throws NotANucleus with the offending elements.
  /// Frames above 4096 elements are checked on sampled triples only.
  Nucleus(FrameRef frame, std::vector<ElementId> op);
  static Nucleus unchecked(FrameRef frame, std::vector<ElementId> op);

  ElementId operator()(ElementId a) const { return op_[a]; }
  const FrameRef& frame() const noexcept { return frame_; }
  const std::vector<ElementId>& table() const noexcept { return op_; }
  ElementSet fixed_points() const;
  /// Elements sent to top.
  ElementSet kernel() const;

  friend bool operator==(const Nucleus& a, const Nucleus& b) {
    return a.frame_ == b.frame_ && a.op_ == b.op_;
  }

 private:
  Nucleus(FrameRef frame, std::vector<ElementId> op, bool);
  FrameRef frame_;
  std::vector<ElementId> op_;
};

struct LawViolation {
  std::string law;
  std::vector<ElementId> witness;
};

std::optional<LawViolation> prenucleus_violation(const FiniteFrame& f, const std::vector<ElementId>& op);
std::optional<LawViolation> nucleus_violation(const FiniteFrame& f, const std::vector<ElementId>& op);

struct Iteration {
  Nucleus nucleus;
  /// Largest number of applications any element needed before it stopped moving.
  std::size_t steps;
};

/// Iterates the prenucleus pointwise until every orbit is stationary.
Iteration iterate_prenucleus(const Prenucleus& p);

bool is_filter(const FiniteFrame& f, const ElementSet& members);
/// Filter generated by `generators`; on a finite frame this is ↑(⋀ generators).
ElementSet filter_generated(const FiniteFrame& f, const ElementSet& generators);

/// a ↦ ⋁_{b ∈ F} (b → a). Throws NotAFilter.
Prenucleus prenucleus_from_filter(const FrameRef& f, const ElementSet& filter);
/// Nucleus obtained by iterating `prenucleus_from_filter`.
Nucleus filter_nucleus(const FrameRef& f, const ElementSet& filter);
/// F is the kernel of its own filter nucleus. Throws NotAFilter.
bool is_normal_filter(const FrameRef& f, const ElementSet& filter);
/// Least normal filter containing `generators`.
ElementSet normal_filter_generated(const FrameRef& f, const ElementSet& generators);

/// a ↦ ⋀ of the maximal elements above a (empty meet = top).
Nucleus sigma_nucleus(const FrameRef& f);
/// a ↦ ⋁ a⁺.
Prenucleus pi_prenucleus(const FrameRef& f);
Nucleus pi_nucleus(const FrameRef& f);

/// The fixed-point set of a nucleus as a frame, with the surjection onto it.
struct NucleusQuotient {
  FrameRef frame;
  ElementSet members;  // quotient element -> ambient element
  FrameHom map;        // a ↦ δ(a)
};
NucleusQuotient fix_quotient(const Nucleus& n);

/// Element of ker nL whose image escapes ker nM, if any.
std::optional<ElementId> kernel_escape(const FrameHom& m, const Nucleus& nL, const Nucleus& nM);
/// Pair identified by nL whose images nM ∘ m separates, if any. Absent
/// exactly when some map m̄ with nM ∘ m = m̄ ∘ nL exists.
std::optional<std::pair<ElementId, ElementId>> drop_obstruction(const FrameHom& m, const Nucleus& nL,
                                                                const Nucleus& nM);

/// The induced map fix nL → fix nM. Throws KernelNotPreserved when the kernel
/// condition fails and SquareDoesNotCommute when it holds but no map exists.
FrameHom drop_hom(const FrameHom& m, const Nucleus& nL, const Nucleus& nM);

/// a with m(a) = ⊤ but n(a) ≠ ⊤, if any.
std::optional<ElementId> top_condition_witness(const FrameHom& m, const FrameHom& n);
/// Pair with m(a) = m(b) but n(a) ≠ n(b), if any.
std::optional<std::pair<ElementId, ElementId>> factor_obstruction(const FrameHom& m, const FrameHom& n);

/// h with n = h ∘ m for surjective m. Throws NotSurjective, MixedFrames,
/// TopConditionFails (witness a) or NotFactorable (witness pair).
FrameHom factor_through_surjection(const FrameHom& m, const FrameHom& n);

struct PiMeetDecomposition {
  ElementId pi;        // π(b)
  ElementSet a_set;    // accumulated along the full π-orbit of b
  bool holds;          // b = π(b) ∧ ⋀ a_set
};

/// Collects, along the π-orbit b, π′(b), π′π′(b), ..., the maximal a with
/// a ≥ current and a → current > current, starting from {b}.
PiMeetDecomposition pi_meet_decomposition(const FrameRef& f, ElementId b);

}  // namespace pointfree
