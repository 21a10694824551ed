#pragma once

// Brute-force reference computations used to cross-check the library.
// Everything here works from the order relation or from sample points and
// deliberately avoids the library's derived tables and caches.

#include <optional>
#include <random>
#include <set>
#include <vector>

#include "pointfree/attachment.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/frame.hpp"
#include "pointfree/interval.hpp"

namespace oracle {

using pointfree::ElementId;
using pointfree::ElementSet;
using pointfree::FiniteFrame;
using pointfree::FrameRef;

/// Corpus frames (cached, bound 5) with at most `max_elements` elements.
const std::vector<pointfree::CorpusEntry>& corpus();
std::vector<const pointfree::CorpusEntry*> frames_up_to(std::size_t max_elements);

ElementId meet(const FiniteFrame& f, ElementId a, ElementId b);
ElementId join(const FiniteFrame& f, ElementId a, ElementId b);

/// Lattice operations rebuilt from the order relation alone, with the
/// derived scans on top of them.
struct Lattice {
  explicit Lattice(const FiniteFrame& f);
  const FiniteFrame* f;
  std::size_t n;
  std::vector<ElementId> meets, joins;
  ElementId meet(ElementId a, ElementId b) const { return meets[a * n + b]; }
  ElementId join(ElementId a, ElementId b) const { return joins[a * n + b]; }
  /// Largest c with a ∧ c ≤ b, by scanning every c.
  ElementId heyting(ElementId a, ElementId b) const;
  bool complemented(ElementId a) const;
  /// a ≪ b on a finite frame: some complemented c has a ≤ c ≤ b.
  bool completely_below(ElementId a, ElementId b) const;
  /// Partition compatible with binary meets and joins.
  bool is_congruence(const std::vector<ElementId>& class_of) const;
  /// All congruences as first-appearance class labellings.
  std::set<std::vector<ElementId>> all_congruences() const;
  /// Nonempty meet-closed up-sets, by subset enumeration.
  std::set<ElementSet> all_filters() const;
  bool is_nucleus(const std::vector<ElementId>& op) const;
};

/// Elements covering a.
ElementSet covers_of(const FiniteFrame& f, ElementId a);
ElementSet maxima(const FiniteFrame& f);
ElementSet atoms(const FiniteFrame& f);
std::vector<ElementId> canonical(const std::vector<ElementId>& class_of);

/// Membership of x in u computed directly from the pieces.
bool member(const pointfree::IntervalOpen& u, const pointfree::Rational& x);
/// Endpoints of both sets plus midpoints and points just outside, the
/// places where two finite unions of intervals can differ.
std::vector<pointfree::Rational> probe_points(const pointfree::IntervalOpen& u, const pointfree::IntervalOpen& v);
/// x lies in the interior of the complement of u: a small ball around x
/// misses u. Checked at x ± eps where eps is below the gap to every endpoint.
bool interior_of_complement(const pointfree::IntervalOpen& u, const pointfree::Rational& x);

}  // namespace oracle
