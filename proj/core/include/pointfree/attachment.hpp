#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "pointfree/interval.hpp"

namespace pointfree {

/// Subset of the attached points, bit i for points[i].
using FlagSet = std::uint64_t;

/// Points x_0..x_{n-1} whose point filters are attached to the pointless
/// fragment E of the real line.
class AttachmentSpec {
 public:
  /// Throws InvalidSpec for an empty, oversized or repeated point list.
  explicit AttachmentSpec(std::vector<Rational> points);

  const std::vector<Rational>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }
  FlagSet all() const noexcept { return size() == 64 ? ~FlagSet{0} : (FlagSet{1} << size()) - 1; }
  /// Points whose filter contains `body`; empty for punctured bodies.
  FlagSet members(const IntervalOpen& body) const;

 private:
  std::vector<Rational> points_;
};

/// Comma-separated rationals, e.g. `0,1,5/2`.
AttachmentSpec parse_attachment_spec(std::string_view text);

struct LWElement {
  FlagSet flags = 0;
  IntervalOpen body;
  friend bool operator==(const LWElement&, const LWElement&) = default;
};

/// Why `e` is not in L_W, if it is not.
std::optional<std::string> lw_violation(const AttachmentSpec& spec, const LWElement& e);
/// Throws InputPunctured or InvariantBroken.
LWElement make_lw(const AttachmentSpec& spec, FlagSet flags, IntervalOpen body);
/// `{0,2}:(-1,1)u(3,4)`; indices refer to the attached points.
LWElement parse_lw(const AttachmentSpec& spec, std::string_view text);
std::string to_string(const LWElement& e);

LWElement lw_bottom();
LWElement lw_top(const AttachmentSpec& spec);
bool lw_leq(const LWElement& a, const LWElement& b);
LWElement lw_meet(const AttachmentSpec& spec, const LWElement& a, const LWElement& b);
LWElement lw_join(const AttachmentSpec& spec, std::span<const LWElement> parts);

/// (W ∖ {w}, ⊤) for each w.
std::vector<LWElement> lw_max(const AttachmentSpec& spec);
/// An element strictly between `e` and top, or nothing when `e` is top or
/// maximal.
std::optional<LWElement> lw_strictly_above(const AttachmentSpec& spec, const LWElement& e);
bool lw_is_maximal(const AttachmentSpec& spec, const LWElement& e);

/// (W_a, a).
LWElement lw_pi_project(const AttachmentSpec& spec, const LWElement& e);
/// (Y, ⊤).
LWElement lw_sigma_project(const LWElement& e);

/// A nonbottom element strictly below e. Throws PreconditionFailed on ⊥.
LWElement lw_atomless_witness(const AttachmentSpec& spec, const LWElement& e);

/// A member b of the filter at point z with b* in every filter of `ys`.
IntervalOpen z_prime_member(const AttachmentSpec& spec, FlagSet ys, std::size_t z, int halvings = 0);

struct CombelWitness {
  LWElement low;      // (Y, c)
  LWElement high;     // (Y, a)
  LWElement witness;  // (Z, c* ∨ ⋁ t(z))
  bool meet_is_bottom = false;
  bool join_is_top = false;
  bool ok() const { return meet_is_bottom && join_is_top; }
};
/// `t[k]` is the choice for the k-th point outside `ys`. Throws
/// HypothesisViolated unless t(z) lies in z', c and a lie in every filter
/// of Y, c ≪ a and a ≤ ⋀ t(z)*.
CombelWitness lw_witness_combel(const AttachmentSpec& spec, FlagSet ys, std::span<const IntervalOpen> t,
                                const IntervalOpen& c, const IntervalOpen& a);

struct RegularityEvidence {
  std::size_t witnesses = 0;
  bool witnesses_valid = true;
  bool joins_monotone = true;
  bool joins_bounded = true;      // every partial join stays below the target
  bool samples_covered = false;   // chosen points of the body are reached
  LWElement last_join;
};
/// Approximates e from below by elements carrying a completely-below
/// witness, shrinking the choices level by level up to `depth` and stopping
/// once the sampled points of the body are reached. Finite evidence only.
RegularityEvidence lw_regularity_evidence(const AttachmentSpec& spec, const LWElement& e, int depth = 6);

/// (Y, a) ↦ (Y ∩ X, a), with X re-indexed in increasing order.
class KxQuotient {
 public:
  KxQuotient(const AttachmentSpec& spec, FlagSet x);
  const AttachmentSpec& target() const noexcept { return target_; }
  FlagSet x() const noexcept { return x_; }
  LWElement operator()(const LWElement& e) const;
  /// Some preimage of an L_X element.
  LWElement lift(const LWElement& e) const;

 private:
  FlagSet x_;
  std::vector<std::size_t> index_;
  AttachmentSpec target_;
};
/// Throws EmptyX for an empty X.
KxQuotient kx_quotient(const AttachmentSpec& spec, FlagSet x);

struct KMapReport {
  std::size_t checked = 0;
  bool reproduces = true;         // k(e) = e
  bool meets_preserved = true;
  bool injective = true;
  bool surjective_by_recipe = true;
  std::optional<LWElement> first_failure;
};
/// k(e) = (W_e, π(e)) on samples of L_W, with W_e read off the maximal
/// elements; surjectivity by b' = (W_b, b) ∧ ⋀_A max.
KMapReport k_map_selfcheck(const AttachmentSpec& spec, std::span<const LWElement> samples);

struct MaxApproximation {
  std::size_t w = 0;
  int depth = 0;
  bool monotone = true;
  bool below_max = true;
  bool flags_reach_rest = false;  // final flags are W ∖ {w}
  bool single_below_top = false;
  std::vector<LWElement> partial_joins;
};
/// Partial joins of (W_{b*}, b*) for b = (x_w - 1/n, x_w + 1/n). The limit
/// (W ∖ {w}, ⊤) is not asserted.
MaxApproximation max_approximation(const AttachmentSpec& spec, std::size_t w, int depth = 16);

struct SupportAgreement {
  std::size_t checked = 0;
  std::optional<std::pair<std::size_t, IntervalOpen>> mismatch;
};
/// For each maximal (W ∖ {w}, ⊤) and sampled body a: (W_a, a) is not below
/// it exactly when the point filter at w contains a.
SupportAgreement support_agreement(const AttachmentSpec& spec, std::span<const IntervalOpen> bodies);

struct MixedNormalForm {
  std::size_t checked = 0;
  bool recipe_matches_lw = true;  // witnessed pairs are exactly the L_W pairs
  /// A complemented pair of E × 2^W outside L_W, when one was sampled.
  std::optional<LWElement> complemented_outside;
};
/// Compares L_W with the pairs of E × 2^W for which the completely-below
/// witness construction goes through.
MixedNormalForm mixed_normal_form_check(const AttachmentSpec& spec, std::span<const LWElement> pairs);

LWElement random_lw(const AttachmentSpec& spec, std::mt19937_64& rng);
/// Arbitrary pair of E × 2^W, not necessarily in L_W.
LWElement random_pair(const AttachmentSpec& spec, std::mt19937_64& rng);

}  // namespace pointfree
