#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "pointfree/frame.hpp"

namespace pointfree {

struct CorpusSpec {
  std::size_t max_poset_size = 5;
  bool include_nondistributive_rejects = false;
};

struct CorpusEntry {
  std::string name;  // "P<n>.<k>": k-th poset class on n points
  PosetSpec poset;
  FrameRef frame;
};

/// Downset frames of every poset class on 0..max_poset_size points, one per
/// isomorphism class, in a fixed order.
std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec = {});

/// Canonical representatives of the poset classes on exactly n points
/// (n ≤ 6). Relations are lists of strict pairs lo < hi with lo < hi as ids.
std::vector<PosetSpec> poset_classes(std::size_t n);

/// Lattice covers that build_frame must reject, with their names.
struct Reject {
  std::string name;
  PosetSpec covers;
};
std::vector<Reject> nondistributive_rejects();

/// "1", "2", "C<n>", "B<n>", "M3", "N5" (the last two throw NotDistributive)
/// or a corpus name such as "P3.2".
FrameRef named_frame(std::string_view name);

}  // namespace pointfree
