#include "popstack/forbidden.hpp"

#include <algorithm>
#include <set>

#include "doctest.h"
#include "popstack/errors.hpp"

using namespace popstack;

namespace {

// All segments of the given order and width, bounded ones only.
template <typename F>
void for_all_bounded_segments(int k, int width, F&& fn) {
  Segment seg{k, std::vector<Symbol>(width, 0)};
  uint64_t alpha = uint64_t(1) << k;
  uint64_t total = 1;
  for (int i = 0; i < width; ++i) total *= alpha;
  for (uint64_t word = 0; word < total; ++word) {
    uint64_t rest = word;
    for (int j = width - 1; j >= 0; --j) {
      seg.symbols[j] = static_cast<Symbol>(rest % alpha);
      rest /= alpha;
    }
    if (is_bounded(seg)) fn(seg);
  }
}

// Reference listing: scan every bounded segment up to the width limit.
std::vector<Segment> scan_bounded_forbidden(int k, int max_width) {
  std::vector<Segment> out;
  for (int w = 2; w <= max_width; ++w)
    for_all_bounded_segments(k, w, [&](const Segment& seg) {
      if (is_forbidden_segment(seg)) out.push_back(seg);
    });
  std::sort(out.begin(), out.end(),
            [](const Segment& a, const Segment& b) { return a.symbols < b.symbols; });
  return out;
}

}  // namespace

TEST_CASE("forbidden segment spot checks") {
  CHECK(is_forbidden_segment(Segment{5, {26, 21, 10, 5, 20, 18}}));
  CHECK(is_forbidden_segment(Segment{2, {0, 1, 0}}));
  CHECK(is_forbidden_segment(Segment{2, {0, 3, 0}}));
  CHECK_FALSE(is_forbidden_segment(Segment{2, {2, 1, 2}}));
  CHECK_FALSE(is_forbidden_segment(Segment{2, {0, 2, 0}}));
  CHECK_THROWS_AS(is_forbidden_segment(Segment{1, {0, 1, 0}}), std::invalid_argument);
}

TEST_CASE("pair-anchored check can differ from the any-pair check") {
  // The width-4 segment with one size-3 block in row 2 certifies a violation
  // for the two values meeting in row 1, but not for the outer pair.
  Segment seg{2, {0, 3, 3, 0}};
  CHECK(is_forbidden_segment(seg));
  CHECK(is_forbidden_segment(seg, 1, 2));
  CHECK(is_forbidden_segment(seg, 2, 3));
  CHECK_FALSE(is_forbidden_segment(seg, 1, 3));
}

TEST_CASE("bounded forbidden segments of order 2") {
  auto segs = enumerate_bounded_forbidden(2);
  std::set<std::vector<Symbol>> set;
  for (const auto& s : segs) {
    CHECK(s.width() <= 4);
    CHECK(is_bounded(s));
    set.insert(s.symbols);
  }
  CHECK(set.size() == segs.size());
  CHECK(set.count({0, 1, 0}));
  CHECK(set.count({0, 3, 0}));
  CHECK_FALSE(set.count({0, 2, 0}));
  CHECK(enumerate_bounded_forbidden(1).empty());
  CHECK(enumerate_bounded_forbidden(0).empty());
}

TEST_CASE("enumeration matches the exhaustive scan") {
  auto scan2 = scan_bounded_forbidden(2, 4);
  auto enum2 = enumerate_bounded_forbidden(2);
  REQUIRE(enum2.size() == scan2.size());
  for (size_t i = 0; i < enum2.size(); ++i) REQUIRE(enum2[i] == scan2[i]);

  // Order 3 compared on a width prefix of the full range.
  auto scan3 = scan_bounded_forbidden(3, 6);
  auto enum3 = enumerate_bounded_forbidden(3);
  std::vector<Segment> enum3_narrow;
  for (const auto& s : enum3)
    if (s.width() <= 6) enum3_narrow.push_back(s);
  REQUIRE(enum3_narrow.size() == scan3.size());
  for (size_t i = 0; i < enum3_narrow.size(); ++i)
    REQUIRE(enum3_narrow[i] == scan3[i]);
}

TEST_CASE("enumeration is deterministic") {
  CHECK(enumerate_bounded_forbidden(2) == enumerate_bounded_forbidden(2));
  CHECK(enumerate_bounded_forbidden(3) == enumerate_bounded_forbidden(3));
}

TEST_CASE("no member contains another member as a factor") {
  for (int k = 2; k <= 3; ++k) {
    auto segs = enumerate_bounded_forbidden(k);
    std::set<std::vector<Symbol>> set;
    for (const auto& s : segs) set.insert(s.symbols);
    for (const auto& s : segs) {
      for (int w = 2; w < s.width(); ++w)
        for (int off = 0; off + w <= s.width(); ++off) {
          std::vector<Symbol> window(s.symbols.begin() + off,
                                     s.symbols.begin() + off + w);
          REQUIRE_FALSE(set.count(window));
        }
    }
  }
}

TEST_CASE("listing cap") {
  CHECK_THROWS_AS(enumerate_bounded_forbidden(3, 100), ResourceLimitError);
}

TEST_CASE("the plan characterization by factors and block sizes") {
  // Sorting plans are exactly the encodings avoiding every bounded forbidden
  // factor whose rows 2..k have blocks of size <= 3.
  for (int k = 2; k <= 3; ++k) {
    auto segs = enumerate_bounded_forbidden(k);
    std::set<std::vector<Symbol>> forbidden;
    for (const auto& s : segs) forbidden.insert(s.symbols);
    int max_len = k == 2 ? 7 : 6;  // word length n+1
    Encoding enc;
    enc.order = k;
    for (int n = 0; n + 1 <= max_len; ++n) {
      enc.symbols.assign(n + 1, 0);
      uint64_t alpha = uint64_t(1) << k;
      uint64_t total = 1;
      for (int i = 0; i + 1 < n; ++i) total *= alpha;
      for (uint64_t word = 0; word < total; ++word) {
        uint64_t rest = word;
        for (int j = n - 1; j >= 1; --j) {
          enc.symbols[j] = static_cast<Symbol>(rest % alpha);
          rest /= alpha;
        }
        bool has_factor = false;
        for (int w = 2; w <= 4 * k - 4 && !has_factor; ++w)
          for (int off = 0; off + w <= n + 1 && !has_factor; ++off)
            has_factor = forbidden.count(std::vector<Symbol>(
                             enc.symbols.begin() + off, enc.symbols.begin() + off + w)) > 0;
        bool bounded_rows = is_bounded(Segment{k, enc.symbols});
        REQUIRE(is_sorting_plan(decode(enc, k)) == (!has_factor && bounded_rows));
      }
    }
  }
}

TEST_CASE("forbidden segments match violating pairs on their own semitrace") {
  for (int k = 2; k <= 3; ++k) {
    int n = k == 2 ? 6 : 5;
    uint64_t alpha = uint64_t(1) << k;
    uint64_t total = 1;
    for (int i = 0; i + 1 < n; ++i) total *= alpha;
    Encoding enc;
    enc.order = k;
    enc.symbols.assign(n + 1, 0);
    for (uint64_t word = 0; word < total; ++word) {
      uint64_t rest = word;
      for (int j = n - 1; j >= 1; --j) {
        enc.symbols[j] = static_cast<Symbol>(rest % alpha);
        rest /= alpha;
      }
      Semitrace st = semitrace_from_array(decode(enc, k));
      auto pairs = violating_pairs(st);
      for (int a = 1; a <= n; ++a)
        for (int b = a + 1; b <= n; ++b) {
          int first_cell = 0;
          Segment seg = segment_of(st, a, b, &first_cell);
          if (!is_bounded(seg)) continue;
          bool forbidden = is_forbidden_segment(seg, a - first_cell + 1,
                                                b - first_cell + 1);
          REQUIRE(forbidden == (pairs.count({a, b}) > 0));
        }
    }
  }
}

TEST_CASE("wildcard grouping merges single-bit differences") {
  std::vector<Segment> two{{2, {0, 1, 0}}, {2, {2, 1, 0}}};
  auto grouped = group_with_wildcards(two);
  REQUIRE(grouped.size() == 1);
  CHECK(grouped[0].to_string() == "*0,01,00");
  auto expanded = expand_pattern(grouped[0]);
  std::set<std::vector<Symbol>> set;
  for (const auto& s : expanded) set.insert(s.symbols);
  CHECK(set == std::set<std::vector<Symbol>>{{0, 1, 0}, {2, 1, 0}});
}

TEST_CASE("wildcard grouping of a singleton is the singleton") {
  std::vector<Segment> one{{2, {0, 3, 2}}};
  auto grouped = group_with_wildcards(one);
  REQUIRE(grouped.size() == 1);
  CHECK(expand_pattern(grouped[0]).size() == 1);
}

TEST_CASE("wildcard grouping round-trips the order-3 listing") {
  auto segs = enumerate_bounded_forbidden(3);
  auto grouped = group_with_wildcards(segs);
  CHECK(grouped.size() < segs.size());
  std::set<std::vector<Symbol>> expanded;
  size_t expansions = 0;
  for (const auto& pat : grouped) {
    for (const auto& s : expand_pattern(pat)) {
      expanded.insert(s.symbols);
      ++expansions;
    }
  }
  CHECK(expansions == expanded.size());  // patterns are disjoint
  std::set<std::vector<Symbol>> original;
  for (const auto& s : segs) original.insert(s.symbols);
  CHECK(expanded == original);
}
