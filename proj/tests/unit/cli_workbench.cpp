#include <doctest.h>

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <functional>

#include <nlohmann/json.hpp>

#include "oracles.hpp"
#include "pointfree/attachment.hpp"
#include "pointfree/congruence.hpp"
#include "pointfree/corpus.hpp"
#include "pointfree/io.hpp"
#include "pointfree/order.hpp"
#include "pointfree/suites.hpp"

using namespace pointfree;

namespace {

std::size_t count_edges(const std::string& dot, std::string_view style) {
  std::size_t n = 0;
  for (std::size_t pos = 0; (pos = dot.find(style, pos)) != std::string::npos; ++pos) ++n;
  return n;
}

// Unlabelled posets on n points: enumerate every transitive antisymmetric
// relation and keep one per isomorphism class.
std::size_t brute_poset_classes(std::size_t n) {
  std::vector<std::pair<std::size_t, std::size_t>> slots;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (i != j) slots.emplace_back(i, j);
  std::set<std::vector<bool>> seen;
  std::size_t classes = 0;
  std::vector<std::size_t> perm(n);
  for (std::uint32_t mask = 0; mask < (1U << slots.size()); ++mask) {
    std::vector<bool> r(n * n, false);
    for (std::size_t s = 0; s < slots.size(); ++s)
      if (mask >> s & 1U) r[slots[s].first * n + slots[s].second] = true;
    bool ok = true;
    for (std::size_t i = 0; i < n && ok; ++i)
      for (std::size_t j = 0; j < n && ok; ++j) {
        if (r[i * n + j] && r[j * n + i]) ok = false;
        for (std::size_t k = 0; k < n && ok; ++k)
          if (r[i * n + j] && r[j * n + k] && !r[i * n + k]) ok = false;
      }
    if (!ok || seen.count(r)) continue;
    ++classes;
    for (std::size_t i = 0; i < n; ++i) perm[i] = i;
    do {
      std::vector<bool> img(n * n, false);
      for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) img[perm[i] * n + perm[j]] = r[i * n + j];
      seen.insert(img);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return classes;
}

}  // namespace

TEST_CASE("poset classes") {
  const std::vector<std::size_t> expect{1, 1, 2, 5, 16, 63};
  for (std::size_t n = 0; n < expect.size(); ++n) CHECK(poset_classes(n).size() == expect[n]);
  for (std::size_t n = 0; n <= 4; ++n) CHECK(poset_classes(n).size() == brute_poset_classes(n));
}

TEST_CASE("corpus generation") {
  auto one = generate_corpus({1});
  REQUIRE(one.size() == 2);
  CHECK(one[0].frame->size() == 1);
  CHECK(one[1].frame->size() == 2);

  auto two = generate_corpus({2});
  bool has_b2 = false, has_c3 = false;
  for (const auto& e : two) {
    has_b2 = has_b2 || isomorphic(e.frame, named_frame("B2"));
    has_c3 = has_c3 || isomorphic(e.frame, named_frame("C3"));
  }
  CHECK(has_b2);
  CHECK(has_c3);

  // Bound 3 covers every poset on up to three points: five of them on exactly three.
  auto three = generate_corpus({3});
  CHECK(three.size() == 9);
  CHECK(std::count_if(three.begin(), three.end(), [](const CorpusEntry& e) { return e.poset.size == 3; }) == 5);

  // Deterministic, and no two entries are isomorphic.
  auto again = generate_corpus({4});
  auto first = generate_corpus({4});
  REQUIRE(again.size() == first.size());
  for (std::size_t i = 0; i < first.size(); ++i) {
    CHECK(again[i].name == first[i].name);
    CHECK(frame_to_json(*again[i].frame) == frame_to_json(*first[i].frame));
    for (std::size_t j = 0; j < i; ++j) CHECK_FALSE(isomorphic(first[i].frame, first[j].frame));
  }

  auto with_rejects = generate_corpus({2, true});
  CHECK(with_rejects.size() == generate_corpus({2}).size());
  CHECK_FALSE(nondistributive_rejects().empty());
}

TEST_CASE("named frames") {
  CHECK(named_frame("1")->size() == 1);
  CHECK(named_frame("C4")->size() == 4);
  CHECK(named_frame("B3")->size() == 8);
  CHECK(named_frame("P3.2")->size() > 0);
  CHECK_THROWS_AS(named_frame("M3"), Error);
  CHECK_THROWS_AS(named_frame("N5"), Error);
  CHECK_THROWS_AS(named_frame("nonsense"), Error);
}

TEST_CASE("suite runner") {
  CHECK(suite_names().size() >= 9);
  try {
    run_suite("no-such-suite");
    FAIL("unknown suite accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownSuite);
  }

  SuiteOptions tiny;
  tiny.max_poset_size = 0;
  tiny.samples = 10;
  auto r = run_suite("congruence-structure", tiny);
  CHECK(r.pass());
  CHECK_FALSE(r.claims.empty());

  SuiteOptions mutated;
  mutated.max_poset_size = 3;
  mutated.samples = 50;
  mutated.mutate = true;
  auto bad = run_suite("completely-below", mutated);
  CHECK_FALSE(bad.pass());
  bool witnessed = std::any_of(bad.claims.begin(), bad.claims.end(),
                               [](const ClaimResult& c) { return !c.pass() && !c.witness.empty(); });
  CHECK(witnessed);
  CHECK(bad.text().find("FAIL") != std::string::npos);
  CHECK(nlohmann::json::parse(bad.json()).is_object());

  mutated.mutate = false;
  auto a = run_suite("completely-below", mutated);
  auto b = run_suite("completely-below", mutated);
  CHECK(a.pass());
  REQUIRE(a.claims.size() == b.claims.size());
  for (std::size_t i = 0; i < a.claims.size(); ++i) CHECK(a.claims[i].checked == b.claims[i].checked);
}

TEST_CASE("graphviz output") {
  auto c3 = frame_dot(*named_frame("C3"));
  CHECK(c3.rfind("digraph", 0) == 0);
  CHECK(count_edges(c3, "arrowhead=none") == 2);
  CHECK(count_edges(c3, "[label=") == 3);

  auto b2 = named_frame("B2");
  CHECK(count_edges(frame_dot(*b2), "arrowhead=none") == 4);
  auto cb = completely_below(*b2);
  CHECK(count_edges(frame_dot(*b2, &cb), "style=dashed") == 5);

  auto congs = enumerate_congruences(named_frame("C3"));
  auto cd = congruence_dot(congs);
  CHECK(count_edges(cd, "[label=") == 4);
  CHECK(count_edges(cd, "->") == 4);

  auto rel = relation_to_json(*b2, cb);
  CHECK(nlohmann::json::parse(rel).contains("pairs"));
}

TEST_CASE("frame and hom files") {
  for (const auto* e : oracle::frames_up_to(16)) {
    auto back = parse_frame_json(frame_to_json(*e->frame));
    CHECK(isomorphic(back, e->frame));
    CHECK(frame_to_json(*back) == frame_to_json(*e->frame));
  }
  auto labelled = parse_frame_json(R"({"size": 3, "covers": [[0,1],[1,2]], "labels": ["bot","m","top"]})");
  CHECK(labelled->label(1) == "m");
  CHECK_THROWS_AS(parse_frame_json("{"), Error);
  CHECK_THROWS_AS(parse_frame_json(R"({"covers": []})"), Error);
  CHECK_THROWS_AS(parse_frame_json(R"({"size": 5, "covers": [[0,1],[1,2],[2,4],[0,3],[3,4]]})"), Error);

  auto dir = std::filesystem::temp_directory_path() / "pointfree_io_test";
  std::filesystem::create_directories(dir);
  std::ofstream(dir / "c3.json") << frame_to_json(*named_frame("C3"));
  std::ofstream(dir / "two.json") << frame_to_json(*named_frame("2"));
  std::ofstream(dir / "hom.json") << R"({"source": "c3.json", "target": "two.json", "map": [0, 1, 1]})";
  std::ofstream(dir / "bad.json") << R"({"source": "c3.json", "target": "two.json", "map": [0, 0, 0]})";
  auto h = load_hom(dir / "hom.json");
  CHECK(h.map() == std::vector<ElementId>{0, 1, 1});
  try {
    load_hom(dir / "bad.json");
    FAIL("bad hom accepted");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::InvalidHom);
  }
  std::filesystem::remove_all(dir);
}

TEST_CASE("attachment elements as json") {
  auto w = parse_attachment_spec("0,2");
  auto e = parse_lw(w, "{0,1}:(-1,1)u(3/2,3)");
  CHECK(parse_lw_json(w, lw_to_json(e)) == e);
  CHECK_THROWS_AS(parse_lw_json(w, R"j({"flags": [0], "body": "(1,2)"})j"), Error);
}
