#pragma once

#include <optional>
#include <span>

#include "pointfree/congruence.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/nucleus.hpp"

namespace pointfree {

/// Every element is the meet of the maximal elements above it.
bool is_spatial(const FiniteFrame& f);

/// Quotient by the congruence of the σ nucleus.
QuotientResult spatial_part(const FrameRef& f);
/// Quotient by the congruence of the π nucleus.
QuotientResult pointless_part(const FrameRef& f);

/// The three independently evaluated forms of skinniness.
struct SkinnyReport {
  bool kernel_preserved = false;  // m(ker π_L) ⊆ ker π_M
  bool maxima_to_kernel = false;  // π_M(m(a)) = ⊤ for maximal a
  bool drops = false;             // some m̄ with π_M ∘ m = m̄ ∘ π_L
  bool agree() const { return kernel_preserved == maxima_to_kernel && maxima_to_kernel == drops; }
};
SkinnyReport skinny_conditions(const FrameHom& m);
/// Throws ConditionsDisagree when the three forms differ.
bool is_skinny(const FrameHom& m);

struct Source {
  FrameRef domain;
  std::vector<FrameHom> arms;
};

/// ⋁_{a ∈ points} Φ_a; the identity congruence for an empty set.
Congruence open_join(const FrameRef& f, const ElementSet& points);

/// Surjective with Θ_e ≤ ⋁{Φ_a : a maximal, e(a) = ⊤}.
bool in_e_class(const FrameHom& e);
/// Every maximal element of the domain stays below top under some arm.
bool in_m_class(const Source& s);
bool in_m_class(const FrameHom& m);

struct EMClass {
  bool in_e = false;
  bool in_m = false;
};
EMClass em_classify(const FrameHom& m);

struct EMFactorization {
  ElementSet p;  // maximal elements every arm sends to top
  Congruence xi;
  FrameHom e;
  std::vector<FrameHom> arms_hat;
  bool e_in_e = false;
  bool hat_in_m = false;
};
/// Factors a source of skinny arms as arms_hat ∘ e. Throws
/// PreconditionFailed when an arm is not skinny.
EMFactorization em_factorize(const Source& s);

/// Diagonal d : N → K with d ∘ e = f and m_i ∘ d = n_i, for the square
/// m_i ∘ f = n_i ∘ e. Throws SquareDoesNotCommute, ClassViolation, or
/// NotFactorable when no diagonal exists.
FrameHom em_diagonalize(const FrameHom& e, const FrameHom& f, std::span<const FrameHom> n_arms,
                        std::span<const FrameHom> m_arms);

/// m is surjective and its kernel pair is exactly `c`.
bool is_quotient_by(const FrameHom& m, const Congruence& c);

struct LigatureResult {
  QuotientResult pi;        // L → πL
  QuotientResult sigma;     // L → σL
  QuotientResult pi_sigma;  // σL → πσL
  FrameHom lambda;          // πL → πσL
};
/// λ with λ ∘ π_L = π_{σL} ∘ σ_L.
LigatureResult ligature(const FrameRef& f);

struct FatNormalForm {
  ProductFrame product;     // E × M
  ElementSet constrained;   // {(a,b) : l(a) = π_M(b)} as product elements
  Subframe coreflection;    // its complemented part
  FrameHom e_proj;          // coreflection → E
  FrameHom m_proj;          // coreflection → M
  bool projections_surjective = false;
  // Checked only when both projections are surjective.
  bool maxima_are_top_pairs = false;
  bool m_proj_in_m = false;
  bool e_proj_in_e = false;
  bool square_commutes = false;
};
/// E must be pointless, M spatial and l : E → πM surjective, where πM is
/// the fixed-point frame of π on M.
FatNormalForm fat_normal_form(const FrameRef& e, const FrameRef& m, const FrameHom& l);

struct FatReflection {
  LigatureResult parts;
  FatNormalForm normal_form;
  /// τ(a) = (π(a), σ(a)) as product elements; present when every image
  /// lands in the normal form.
  std::optional<FrameHom> tau;
  std::vector<ElementId> pairing;  // L → product elements, always defined
  bool lands = false;
  bool injective = false;
  bool fat = false;
};
FatReflection fat_reflection(const FrameRef& f);

struct ScatteredAtomless {
  ElementId e;  // π(⊥)
  QuotientResult open;    // by Φ_e
  QuotientResult closed;  // by Ψ_e
  bool pairing_injective = false;
  bool pointless_parts_match = false;  // πL ≅ πC_e
};
ScatteredAtomless scattered_atomless_parts(const FrameRef& f);

/// Complemented elements as a subframe.
Subframe cr_coreflection(const FrameRef& f);

/// Arrows of the square-and-product diagram joining the two subdirect
/// decompositions. Each optional is absent when the arrow does not exist.
struct DecompositionDiagram {
  bool pointless_spatial_injective = false;
  bool scattered_atomless_injective = false;
  std::optional<FrameHom> atomless_to_pointless;  // C_e → πL, with π_L = it ∘ c_e
  std::optional<FrameHom> spatial_to_scattered;   // σL → O_e, with o_e = it ∘ σ_L
};
DecompositionDiagram decomposition_diagram(const FrameRef& f);

}  // namespace pointfree
