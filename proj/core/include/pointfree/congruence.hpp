#pragma once

#include <optional>
#include <span>
#include <utility>

#include "pointfree/frame.hpp"
#include "pointfree/nucleus.hpp"

namespace pointfree {

/// A frame congruence stored as a partition: `class_of[a]` is the index of
/// a's class, numbered by first appearance so equal partitions compare equal.
class Congruence {
 public:
  /// Validates compatibility with ∧ and ∨; throws NotACongruence.
  Congruence(FrameRef frame, std::vector<ElementId> class_of);
  static Congruence unchecked(FrameRef frame, std::vector<ElementId> class_of);

  const FrameRef& frame() const noexcept { return frame_; }
  const std::vector<ElementId>& class_of() const noexcept { return class_of_; }
  bool related(ElementId a, ElementId b) const { return class_of_[a] == class_of_[b]; }
  std::size_t class_count() const noexcept { return tops_.size(); }
  std::vector<ElementSet> classes() const;
  /// Greatest element of a's class.
  ElementId class_top(ElementId a) const { return tops_[class_of_[a]]; }

  /// Containment of relations.
  bool leq(const Congruence& other) const;
  bool is_identity() const noexcept { return tops_.size() == class_of_.size(); }
  bool is_total() const noexcept { return tops_.size() == 1; }

  friend bool operator==(const Congruence& a, const Congruence& b) {
    return a.frame_ == b.frame_ && a.class_of_ == b.class_of_;
  }
  friend bool operator<(const Congruence& a, const Congruence& b) { return a.class_of_ < b.class_of_; }

 private:
  Congruence(FrameRef frame, std::vector<ElementId> class_of, bool);
  void index();
  FrameRef frame_;
  std::vector<ElementId> class_of_;
  std::vector<ElementId> tops_;
};

std::optional<LawViolation> congruence_violation(const FiniteFrame& f, const std::vector<ElementId>& class_of);

Congruence identity_congruence(const FrameRef& f);
Congruence total_congruence(const FrameRef& f);

/// (x, y) with a ∧ x = a ∧ y.
Congruence open_cong(const FrameRef& f, ElementId a);
/// (x, y) with a ∨ x = a ∨ y.
Congruence closed_cong(const FrameRef& f, ElementId a);
/// (x, y) with x* = y*.
Congruence dense_cong(const FrameRef& f);

/// Least congruence relating every listed pair.
Congruence generated_congruence(const FrameRef& f, std::span<const std::pair<ElementId, ElementId>> pairs);
/// Least congruence containing all inputs; throws MixedFrames.
Congruence cong_join(std::span<const Congruence> parts);
Congruence cong_join(const Congruence& a, const Congruence& b);
Congruence cong_meet(const Congruence& a, const Congruence& b);

/// Kernel pair of a surjection; throws NotSurjective.
Congruence hom_cong(const FrameHom& m);

struct QuotientResult {
  FrameRef quotient;
  FrameHom map;
  ElementSet tops;  // quotient element -> ambient class top
};
/// Quotient on the class tops.
QuotientResult quotient(const Congruence& c);

/// Pairs whose images are related by `d`; throws NotSurjective.
Congruence preimage_cong(const FrameHom& m, const Congruence& d);

Congruence nucleus_congruence(const Nucleus& n);
/// a ↦ top of a's class.
Nucleus congruence_nucleus(const Congruence& c);

/// Every congruence of `f`, obtained as joins of the principal congruences
/// of covering pairs. Sorted.
std::vector<Congruence> enumerate_congruences(const FrameRef& f);
std::vector<Congruence> max_congruences(const FrameRef& f);
std::vector<Congruence> atom_congruences(const FrameRef& f);

}  // namespace pointfree
