#include "pointfree/corpus.hpp"

#include <algorithm>
#include <numeric>

#include "pointfree/error.hpp"

namespace pointfree {

namespace {

using Bits = std::uint32_t;

// Strict pairs (i, j) with i < j, in a fixed order; bit k of a relation is pair k.
std::vector<std::pair<ElementId, ElementId>> slots(std::size_t n) {
  std::vector<std::pair<ElementId, ElementId>> out;
  for (ElementId i = 0; i < n; ++i)
    for (ElementId j = i + 1; j < n; ++j) out.emplace_back(i, j);
  return out;
}

bool transitive(std::size_t n, const std::vector<char>& lt) {
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b)
      if (lt[a * n + b])
        for (std::size_t c = 0; c < n; ++c)
          if (lt[b * n + c] && !lt[a * n + c]) return false;
  return true;
}

// Smallest adjacency word over all relabellings.
std::vector<char> canonical(std::size_t n, const std::vector<char>& lt) {
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<char> best;
  do {
    std::vector<char> word(n * n);
    for (std::size_t a = 0; a < n; ++a)
      for (std::size_t b = 0; b < n; ++b) word[perm[a] * n + perm[b]] = lt[a * n + b];
    if (best.empty() || word < best) best = std::move(word);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

PosetSpec covers_of(std::size_t n, const std::vector<char>& lt) {
  PosetSpec p{n, {}};
  for (ElementId a = 0; a < n; ++a)
    for (ElementId b = 0; b < n; ++b) {
      if (!lt[a * n + b]) continue;
      bool cover = true;
      for (std::size_t c = 0; c < n && cover; ++c)
        if (lt[a * n + c] && lt[c * n + b]) cover = false;
      if (cover) p.covers.emplace_back(a, b);
    }
  return p;
}

}  // namespace

std::vector<PosetSpec> poset_classes(std::size_t n) {
  if (n > 6) throw Error(ErrorCode::PreconditionFailed, "poset enumeration is limited to 6 points");
  auto pairs = slots(n);
  std::vector<std::vector<char>> seen;
  for (Bits mask = 0; mask < (Bits{1} << pairs.size()); ++mask) {
    std::vector<char> lt(n * n, 0);
    for (std::size_t k = 0; k < pairs.size(); ++k)
      if (mask >> k & 1U) lt[pairs[k].first * n + pairs[k].second] = 1;
    if (!transitive(n, lt)) continue;
    seen.push_back(canonical(n, lt));
  }
  std::sort(seen.begin(), seen.end());
  seen.erase(std::unique(seen.begin(), seen.end()), seen.end());
  std::vector<PosetSpec> out;
  for (const auto& lt : seen) out.push_back(covers_of(n, lt));
  return out;
}

std::vector<CorpusEntry> generate_corpus(const CorpusSpec& spec) {
  std::vector<CorpusEntry> out;
  for (std::size_t n = 0; n <= spec.max_poset_size; ++n) {
    auto classes = poset_classes(n);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      auto frame = downset_lattice(classes[k]);
      for (const auto& e : out)
        if (e.frame->size() == frame->size() && isomorphic(e.frame, frame))
          throw Error(ErrorCode::InvariantBroken, "duplicate frame class in corpus: " + e.name);
      out.push_back({"P" + std::to_string(n) + "." + std::to_string(k + 1), classes[k], std::move(frame)});
    }
  }
  return out;
}

std::vector<Reject> nondistributive_rejects() {
  return {
      {"N5", PosetSpec{5, {{0, 1}, {1, 2}, {2, 4}, {0, 3}, {3, 4}}}},
      {"M3", PosetSpec{5, {{0, 1}, {0, 2}, {0, 3}, {1, 4}, {2, 4}, {3, 4}}}},
      {"two-tops", PosetSpec{3, {{0, 1}, {0, 2}}}},
  };
}

FrameRef named_frame(std::string_view name) {
  auto number = [&](std::size_t from) -> std::size_t {
    std::size_t v = 0;
    if (from >= name.size()) throw Error(ErrorCode::ParseError, "bad frame name " + std::string(name));
    for (auto ch : name.substr(from)) {
      if (ch < '0' || ch > '9') throw Error(ErrorCode::ParseError, "bad frame name " + std::string(name));
      v = v * 10 + static_cast<std::size_t>(ch - '0');
    }
    return v;
  };
  if (name == "1") return chain_frame(1);
  if (name == "2") return chain_frame(2);
  for (const auto& r : nondistributive_rejects())
    if (name == r.name) return build_frame(r.covers);
  if (name.starts_with('C')) return chain_frame(number(1));
  if (name.starts_with('B')) return boolean_frame(number(1));
  if (name.starts_with('P')) {
    auto dot = name.find('.');
    if (dot == std::string_view::npos) throw Error(ErrorCode::ParseError, "bad frame name " + std::string(name));
    std::size_t points = 0;
    for (auto ch : name.substr(1, dot - 1)) {
      if (ch < '0' || ch > '9') throw Error(ErrorCode::ParseError, "bad frame name " + std::string(name));
      points = points * 10 + static_cast<std::size_t>(ch - '0');
    }
    auto k = number(dot + 1);
    auto classes = poset_classes(points);
    if (k == 0 || k > classes.size()) throw Error(ErrorCode::ParseError, "no corpus frame " + std::string(name));
    return downset_lattice(classes[k - 1]);
  }
  throw Error(ErrorCode::ParseError, "unknown frame name " + std::string(name));
}

}  // namespace pointfree
