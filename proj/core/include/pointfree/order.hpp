#pragma once

#include <optional>

#include "pointfree/frame.hpp"

namespace pointfree {

ElementSet atoms(const FiniteFrame& f);
/// Predecessors of top.
ElementSet maxima(const FiniteFrame& f);

/// `a` together with its successors.
ElementSet plus_set(const FiniteFrame& f, ElementId a);

/// a = maximal ∧ above with above > a.
struct PunctureWitness {
  ElementId maximal;
  ElementId above;
};

struct PunctureReport {
  bool punctured = false;
  /// Present when some maximal c and b > a give a = c ∧ b. A punctured
  /// element need not have one when the frame is not regular.
  std::optional<PunctureWitness> witness;
};

PunctureReport is_punctured(const FiniteFrame& f, ElementId a);
/// Elements without a successor.
ElementSet unpunctured(const FiniteFrame& f);

/// First-order membership test for the pointless part: for every b > a
/// there are c1, c2 with b∧c1∧c2 ≤ a while b∧c1 ≰ a and b∧c2 ≰ a.
bool first_order_unpunctured(const FiniteFrame& f, ElementId a);

/// Membership test phrased with maximal elements: c → a = a for every
/// maximal c ≥ a.
bool maximal_heyting_unpunctured(const FiniteFrame& f, ElementId a);

/// a < ⊤ and b ∧ c ≤ a implies b ≤ a or c ≤ a.
bool is_prime(const FiniteFrame& f, ElementId a);

enum class RelationKind { RatherBelow, CompletelyBelow };

struct RelationTable {
  RelationKind kind;
  std::size_t size = 0;
  std::vector<char> pairs;  // row-major

  bool operator()(ElementId a, ElementId b) const { return pairs[a * size + b] != 0; }
  friend bool operator==(const RelationTable&, const RelationTable&) = default;
};

/// a ≺ b iff a* ∨ b = ⊤.
RelationTable rather_below(const FiniteFrame& f);
/// Greatest interpolative relation contained in ≺, obtained by pruning
/// pairs that admit no interpolant until nothing changes.
RelationTable completely_below(const FiniteFrame& f);

/// Cached single-pair queries.
bool is_rather_below(const FiniteFrame& f, ElementId a, ElementId b);
bool is_completely_below(const FiniteFrame& f, ElementId a, ElementId b);

bool is_pointless(const FiniteFrame& f);
/// Every pair a < c has an element strictly between.
bool is_interpolative(const FiniteFrame& f);

/// Complemented elements.
ElementSet center(const FiniteFrame& f);

/// Every element is the join of the elements completely below it.
bool is_completely_regular(const FiniteFrame& f);

}  // namespace pointfree
