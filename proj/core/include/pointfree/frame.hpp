#pragma once

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pointfree/error.hpp"

namespace pointfree {

/// Sorted, duplicate-free list of element ids of one frame.
using ElementSet = std::vector<ElementId>;

bool contains(const ElementSet& set, ElementId a);

/// A finite poset given by (not necessarily minimal) order pairs `lo < hi`.
struct PosetSpec {
  std::size_t size = 0;
  std::vector<std::pair<ElementId, ElementId>> covers;
};

namespace detail {
struct FrameCache;
}

/// An explicit finite distributive lattice. Every finite distributive
/// lattice is a frame (finite joins are all the joins there are), which is
/// the carrier for all finite-frame machinery in this library.
///
/// Instances are immutable and always handled through `FrameRef`; derived
/// tables (covers, Heyting table, relation tables) are computed lazily and
/// cached in a thread-safe way.
class FiniteFrame {
 public:
  struct Tables {
    std::size_t size = 0;
    std::vector<char> leq;  // row-major size x size
    std::vector<ElementId> meet;
    std::vector<ElementId> join;
    ElementId bottom = 0;
    ElementId top = 0;
  };

  FiniteFrame(Tables tables, std::vector<std::string> labels);
  ~FiniteFrame();
  FiniteFrame(const FiniteFrame&) = delete;
  FiniteFrame& operator=(const FiniteFrame&) = delete;

  std::size_t size() const noexcept { return t_.size; }
  ElementId bottom() const noexcept { return t_.bottom; }
  ElementId top() const noexcept { return t_.top; }

  bool leq(ElementId a, ElementId b) const { return t_.leq[a * t_.size + b] != 0; }
  bool lt(ElementId a, ElementId b) const { return a != b && leq(a, b); }
  ElementId meet(ElementId a, ElementId b) const { return t_.meet[a * t_.size + b]; }
  ElementId join(ElementId a, ElementId b) const { return t_.join[a * t_.size + b]; }

  /// Fold of the join table; the empty join is bottom.
  ElementId join_all(std::span<const ElementId> xs) const;
  /// Fold of the meet table; the empty meet is top.
  ElementId meet_all(std::span<const ElementId> xs) const;

  /// Relative pseudocomplement: the largest c with a ∧ c ≤ b.
  ElementId heyting(ElementId a, ElementId b) const;
  ElementId pseudocomplement(ElementId a) const { return heyting(a, bottom()); }
  bool is_complemented(ElementId a) const;

  /// Upper covers of `a` (elements c > a with nothing strictly between).
  const ElementSet& successors(ElementId a) const;
  const ElementSet& predecessors(ElementId a) const;

  ElementSet up_set(ElementId a) const;
  ElementSet down_set(ElementId a) const;
  ElementSet all() const;

  const std::string& label(ElementId a) const { return labels_[a]; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const Tables& tables() const noexcept { return t_; }

  detail::FrameCache& cache() const { return *cache_; }

 private:
  Tables t_;
  std::vector<std::string> labels_;
  std::unique_ptr<detail::FrameCache> cache_;
};

using FrameRef = std::shared_ptr<const FiniteFrame>;

/// Builds a frame from an order relation, checking lattice and
/// distributivity laws. `leq` must be reflexive/transitive/antisymmetric.
FrameRef frame_from_order(std::size_t size, std::vector<char> leq,
                          std::vector<std::string> labels = {});

/// Builds a frame from raw tables without any validation. Only used to
/// inject law-breaking mutations into the verification suites.
FrameRef frame_unchecked(FiniteFrame::Tables tables, std::vector<std::string> labels = {});

/// Validates a cover list describing a lattice and returns the frame.
/// Throws NotALattice (pair lacking a meet or join) or NotDistributive
/// (witness triple a, b, c with a∧(b∨c) ≠ (a∧b)∨(a∧c)).
FrameRef build_frame(const PosetSpec& covers, std::vector<std::string> labels = {});

/// Lattice of down-sets of a poset under inclusion. Elements are ordered by
/// (cardinality, bitmask), so bottom is 0 and top is size()-1.
FrameRef downset_lattice(const PosetSpec& poset);

/// Reflexive-transitive closure of a poset spec; throws InvalidPoset on a
/// cycle or an out-of-range index.
std::vector<char> order_closure(const PosetSpec& poset);

FrameRef chain_frame(std::size_t length);
FrameRef boolean_frame(std::size_t atoms);

/// A homomorphism between finite frames. Construction validates that the
/// map preserves bottom, top and binary meets and joins; on finite carriers
/// binary joins are all that arbitrary-join preservation requires.
class FrameHom {
 public:
  FrameHom(FrameRef source, FrameRef target, std::vector<ElementId> map);
  static FrameHom unchecked(FrameRef source, FrameRef target, std::vector<ElementId> map);

  ElementId operator()(ElementId a) const { return map_[a]; }
  const FrameRef& source() const noexcept { return source_; }
  const FrameRef& target() const noexcept { return target_; }
  const std::vector<ElementId>& map() const noexcept { return map_; }

  bool is_surjective() const;
  bool is_injective() const;
  /// Elements sent to top.
  ElementSet top_fiber() const;

  friend bool operator==(const FrameHom& a, const FrameHom& b) {
    return a.source_ == b.source_ && a.target_ == b.target_ && a.map_ == b.map_;
  }

 private:
  FrameHom(FrameRef source, FrameRef target, std::vector<ElementId> map, bool);
  FrameRef source_;
  FrameRef target_;
  std::vector<ElementId> map_;
};

/// First element (if any) at which `map` fails to be a frame homomorphism.
std::optional<std::string> hom_violation(const FiniteFrame& source, const FiniteFrame& target,
                                         const std::vector<ElementId>& map);

FrameHom identity_hom(const FrameRef& f);
/// `second ∘ first`.
FrameHom compose(const FrameHom& second, const FrameHom& first);

/// m_*(b) = ⋁{a : m(a) ≤ b}, indexed by target element.
std::vector<ElementId> right_adjoint(const FrameHom& m);

struct ProductFrame {
  FrameRef frame;
  FrameRef left;
  FrameRef right;
  FrameHom first;
  FrameHom second;

  ElementId pair(ElementId a, ElementId b) const { return a * static_cast<ElementId>(right->size()) + b; }
  /// Pairing ⟨f, g⟩ : L → left × right of two homs with a common source.
  FrameHom pairing(const FrameHom& f, const FrameHom& g) const;
};

ProductFrame product_frame(const FrameRef& left, const FrameRef& right);

/// Sublattice of `f` on `members` (must contain bottom and top and be closed
/// under meets and joins), with its inclusion map.
struct Subframe {
  FrameRef frame;
  std::vector<ElementId> embedding;  // subframe element -> ambient element
};
Subframe subframe(const FrameRef& f, const ElementSet& members);
bool is_sublattice(const FiniteFrame& f, const ElementSet& members);

/// An order isomorphism g → f if one exists (hence a frame isomorphism).
/// Found by matching the posets of join-irreducibles.
std::optional<FrameHom> find_isomorphism(const FrameRef& from, const FrameRef& to);
bool isomorphic(const FrameRef& a, const FrameRef& b);

/// Elements with exactly one lower cover.
ElementSet join_irreducibles(const FiniteFrame& f);

/// Every frame homomorphism from -> to. Homs between finite distributive
/// lattices correspond to order-preserving maps J(to) -> J(from), which is
/// what gets enumerated.
std::vector<FrameHom> all_homs(const FrameRef& from, const FrameRef& to);

}  // namespace pointfree
