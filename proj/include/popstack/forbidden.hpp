#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "popstack/plans.hpp"

namespace popstack {

// A segment with some cells left open: per column, `mask` marks the row bits
// that are pinned and `bits` holds their values. An open cell matches both a
// bar and a gap.
struct PatternColumn {
  uint8_t mask = 0;
  uint8_t bits = 0;

  auto operator<=>(const PatternColumn&) const = default;
};

struct SegmentPattern {
  int order = 0;
  std::vector<PatternColumn> cols;

  int width() const { return static_cast<int>(cols.size()); }
  bool matches(Symbol s, int col) const {
    return (s & cols[col].mask) == cols[col].bits;
  }
  // All symbols admissible at the given column.
  std::vector<Symbol> column_symbols(int col) const;

  static SegmentPattern from_segment(const Segment& seg);

  // Per-column row bits, '*' for open cells, columns joined by commas.
  std::string to_string() const;

  auto operator<=>(const SegmentPattern&) const = default;
};

// Every completion of the pattern.
std::vector<Segment> expand_pattern(const SegmentPattern& pat);
// Completions whose rows 2..k avoid three consecutive d's.
std::vector<Segment> expand_pattern_bounded(const SegmentPattern& pat);

// Whether some placement of a value pair (positions in the identity row,
// propagated upward through rows k..2) certifies a Property-1 violation from
// the segment's bars alone. The placement must keep every touched block of
// rows 2..k inside the segment, share a block on some row, and its blocks
// must reach both ends of the segment. Throws for order < 2.
bool is_forbidden_segment(const Segment& seg);

// Same check anchored to a fixed pair: cell_a and cell_b are the 1-based
// bottom-row cells of the smaller and larger value. No minimality demanded;
// this is the per-pair reading used to match violating pairs of a semitrace.
bool is_forbidden_segment(const Segment& seg, int cell_a, int cell_b);

// Compact generator: all bounded forbidden segments of order k as patterns,
// produced directly from pair placements (pinned cells = the blocks walked by
// the pair plus the row-1 bars a case consults; everything else open).
// Deterministic, deduplicated, same-width subsumption removed. The optional
// deadline aborts long runs with a ResourceLimitError.
std::vector<SegmentPattern> forbidden_segment_patterns(
    int k,
    std::optional<std::chrono::steady_clock::time_point> deadline = std::nullopt);

// The set of all bounded forbidden segments of order k with at most 4k-5
// cells, sorted lexicographically by encoding. Empty for k < 2. The full list
// grows violently with k; max_segments guards against runaway output.
std::vector<Segment> enumerate_bounded_forbidden(
    int k, uint64_t max_segments = uint64_t(8) << 20);

// Exact regrouping of a segment set into wildcard patterns: the expansions of
// the result partition the input. Input segments must share one order.
std::vector<SegmentPattern> group_with_wildcards(const std::vector<Segment>& segs);

}  // namespace popstack
