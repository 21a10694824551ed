#pragma once

#include <mutex>
#include <vector>

#include "pointfree/frame.hpp"

namespace pointfree::detail {

// Lazily populated per-frame tables. Every slot is filled under its own
// once_flag so concurrent first access is safe.
struct FrameCache {
  std::once_flag covers_once;
  std::vector<ElementSet> successors;
  std::vector<ElementSet> predecessors;

  std::once_flag heyting_once;
  std::vector<ElementId> heyting;

  std::once_flag rather_below_once;
  std::vector<char> rather_below;

  std::once_flag completely_below_once;
  std::vector<char> completely_below;
};

}  // namespace pointfree::detail
