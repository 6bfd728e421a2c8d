#include "popstack/forbidden.hpp"

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <unordered_set>

#include "popstack/errors.hpp"

namespace popstack {

std::vector<Symbol> SegmentPattern::column_symbols(int col) const {
  std::vector<Symbol> out;
  for (Symbol s = 0; s < (1u << order); ++s)
    if (matches(s, col)) out.push_back(s);
  return out;
}

SegmentPattern SegmentPattern::from_segment(const Segment& seg) {
  SegmentPattern pat;
  pat.order = seg.order;
  pat.cols.resize(seg.width());
  uint8_t full = static_cast<uint8_t>((1u << seg.order) - 1);
  for (int j = 0; j < seg.width(); ++j)
    pat.cols[j] = {full, static_cast<uint8_t>(seg.symbols[j])};
  return pat;
}

std::string SegmentPattern::to_string() const {
  std::string s;
  for (int j = 0; j < width(); ++j) {
    if (j) s.push_back(',');
    for (int i = 1; i <= order; ++i) {
      uint8_t bit = 1u << (order - i);
      if (!(cols[j].mask & bit))
        s.push_back('*');
      else
        s.push_back(cols[j].bits & bit ? '1' : '0');
    }
  }
  return s;
}

namespace {

// DFS over columns; run[] tracks consecutive d's per row 2..k.
template <typename Visit>
void expand_rec(const SegmentPattern& pat, bool bounded, int col,
                std::vector<Symbol>& prefix, std::array<int, 8>& run,
                const Visit& visit) {
  if (col == pat.width()) {
    visit(prefix);
    return;
  }
  int k = pat.order;
  for (Symbol s = 0; s < (1u << k); ++s) {
    if (!pat.matches(s, col)) continue;
    std::array<int, 8> next = run;
    bool ok = true;
    if (bounded) {
      for (int i = 2; i <= k; ++i) {
        if ((s >> (k - i)) & 1u) {
          if (++next[i] == 3) {
            ok = false;
            break;
          }
        } else {
          next[i] = 0;
        }
      }
    }
    if (!ok) continue;
    prefix.push_back(s);
    expand_rec(pat, bounded, col + 1, prefix, next, visit);
    prefix.pop_back();
  }
}

template <typename Visit>
void for_each_expansion(const SegmentPattern& pat, bool bounded, const Visit& visit) {
  std::vector<Symbol> prefix;
  std::array<int, 8> run{};
  expand_rec(pat, bounded, 0, prefix, run, visit);
}

std::vector<Segment> expand(const SegmentPattern& pat, bool bounded) {
  std::vector<Segment> out;
  for_each_expansion(pat, bounded, [&](const std::vector<Symbol>& symbols) {
    out.push_back(Segment{pat.order, symbols});
  });
  return out;
}

// Block of row i containing cell y, or nothing if it leaks out of the segment.
std::optional<std::pair<int, int>> block_within(const Segment& seg, int i, int y) {
  int m = seg.cells();
  int t = y - 1;
  while (t >= 0 && seg.is_d(i, t)) --t;
  if (t < 0) return std::nullopt;
  int l = t + 1;
  t = y;
  while (t <= m && seg.is_d(i, t)) ++t;
  if (t > m) return std::nullopt;
  return std::make_pair(l, t);
}

struct PairTrack {
  std::array<std::pair<int, int>, 8> pos;  // positions of (a, b) in row i
  bool same_seen = false;
  int minl = 0, maxr = 0;
};

bool propagate(const Segment& seg, int pa, int pb, PairTrack& tr) {
  int k = seg.order, m = seg.cells();
  int ya = pa, yb = pb;
  tr.minl = m + 1;
  tr.maxr = 0;
  tr.same_seen = false;
  for (int i = k; i >= 2; --i) {
    auto ba = block_within(seg, i, ya);
    auto bb = block_within(seg, i, yb);
    if (!ba || !bb) return false;
    auto [la, ra] = *ba;
    auto [lb, rb] = *bb;
    ya = la + ra - ya;
    yb = lb + rb - yb;
    tr.same_seen |= la == lb;
    tr.minl = std::min({tr.minl, la, lb});
    tr.maxr = std::max({tr.maxr, ra, rb});
    tr.pos[i] = {ya, yb};
  }
  return true;
}

// Property-1 violation on rows 2..k, or one of the two row-1 cases.
bool pair_conditions(const Segment& seg, const PairTrack& tr) {
  int k = seg.order;
  for (int i = 2; i <= k; ++i) {
    auto [xa, xb] = tr.pos[i];
    if (std::abs(xa - xb) == 1) {
      bool bar = !seg.is_d(i, std::min(xa, xb));
      bool ascent = xa < xb;
      if (ascent != bar) return true;
    }
  }
  auto [a2, b2] = tr.pos[2];
  if (b2 + 1 == a2 && seg.is_d(1, b2)) return true;
  if (b2 < a2 && !seg.is_d(1, b2 - 1) && !seg.is_d(1, a2)) {
    int bars = 0;
    for (int t = b2; t < a2; ++t) bars += seg.is_d(1, t) ? 0 : 1;
    if (bars == 1) return true;
  }
  return false;
}

}  // namespace

std::vector<Segment> expand_pattern(const SegmentPattern& pat) {
  return expand(pat, false);
}

std::vector<Segment> expand_pattern_bounded(const SegmentPattern& pat) {
  return expand(pat, true);
}

bool is_forbidden_segment(const Segment& seg) {
  if (seg.order < 2)
    throw std::invalid_argument("forbidden segments need order >= 2");
  int m = seg.cells();
  PairTrack tr;
  for (int pa = 1; pa < m; ++pa)
    for (int pb = pa + 1; pb <= m; ++pb) {
      if (!propagate(seg, pa, pb, tr)) continue;
      if (!tr.same_seen || tr.minl != 1 || tr.maxr != m) continue;
      if (pair_conditions(seg, tr)) return true;
    }
  return false;
}

bool is_forbidden_segment(const Segment& seg, int cell_a, int cell_b) {
  if (seg.order < 2)
    throw std::invalid_argument("forbidden segments need order >= 2");
  if (cell_a < 1 || cell_b < 1 || cell_a >= cell_b || cell_b > seg.cells())
    throw std::invalid_argument("need bottom cells 1 <= a < b <= cells");
  PairTrack tr;
  if (!propagate(seg, cell_a, cell_b, tr)) return false;
  return pair_conditions(seg, tr);
}

namespace {

constexpr int kMaxColumns = 24;  // 4k-4 <= 20 for k <= 6

// Fixed-size pin grid; cheap to copy along the search.
struct PinGrid {
  int order = 0;
  int width = 0;
  std::array<uint8_t, kMaxColumns> mask{};
  std::array<uint8_t, kMaxColumns> bits{};

  bool pin(int row, int boundary, bool d) {
    uint8_t bit = 1u << (order - row);
    uint8_t want = d ? bit : 0;
    if (mask[boundary] & bit) return (bits[boundary] & bit) == want;
    mask[boundary] |= bit;
    bits[boundary] |= want;
    return true;
  }

  bool pin_block(int row, int l, int r) {
    if (!pin(row, l - 1, false) || !pin(row, r, false)) return false;
    for (int t = l; t < r; ++t)
      if (!pin(row, t, true)) return false;
    return true;
  }
};

struct GridHash {
  size_t operator()(const PinGrid& g) const {
    size_t h = 1469598103934665603ull ^ g.width;
    for (int j = 0; j < g.width; ++j) {
      h ^= static_cast<size_t>(g.mask[j]) << 8 | g.bits[j];
      h *= 1099511628211ull;
    }
    return h;
  }
};

struct GridEq {
  bool operator()(const PinGrid& a, const PinGrid& b) const {
    if (a.width != b.width) return false;
    for (int j = 0; j < a.width; ++j)
      if (a.mask[j] != b.mask[j] || a.bits[j] != b.bits[j]) return false;
    return true;
  }
};

struct PlacementGen {
  int k, m;
  std::unordered_set<PinGrid, GridHash, GridEq>* out;
  std::optional<std::chrono::steady_clock::time_point> deadline;
  uint64_t ticks = 0;
  std::array<std::pair<int, int>, 8> pos;  // row-i positions of the pair
  std::array<bool, 8> same;                // pair shares the row-i block

  void tick() {
    if (deadline && (++ticks & 0xfffff) == 0 &&
        std::chrono::steady_clock::now() > *deadline)
      throw ResourceLimitError("forbidden segment generation deadline exceeded");
  }

  void leaf(const PinGrid& pg, bool same_seen, int minl, int maxr) {
    if (!same_seen || minl != 1 || maxr != m) return;
    for (int i = 2; i <= k; ++i) {
      auto [xa, xb] = pos[i];
      if (std::abs(xa - xb) != 1) continue;
      bool bar = !same[i];
      if ((xa < xb) != bar) {
        out->insert(pg);
        break;
      }
    }
    auto [a2, b2] = pos[2];
    if (b2 + 1 == a2) {
      PinGrid copy = pg;
      if (copy.pin(1, b2, true)) out->insert(copy);
    }
    if (b2 < a2) {
      for (int t = b2; t < a2; ++t) {
        PinGrid copy = pg;
        bool ok = copy.pin(1, b2 - 1, false) && copy.pin(1, a2, false);
        for (int u = b2; ok && u < a2; ++u) ok = copy.pin(1, u, u != t);
        if (ok) out->insert(copy);
      }
    }
  }

  // Choose the row-i blocks for both tracked positions, pin them, recurse.
  void descend(int i, int ya, int yb, const PinGrid& pg, bool same_seen,
               int minl, int maxr) {
    if (i == 1) {
      leaf(pg, same_seen, minl, maxr);
      return;
    }
    tick();
    int rem = i - 2;  // rows left below this one
    auto step = [&](int la, int ra, int lb, int rb, bool sm) {
      PinGrid copy = pg;
      if (!copy.pin_block(i, la, ra)) return;
      if (!sm && !copy.pin_block(i, lb, rb)) return;
      int nya = la + ra - ya;
      int nyb = lb + rb - yb;
      int nminl = std::min({minl, la, lb});
      int nmaxr = std::max({maxr, ra, rb});
      int lo = std::min(nya, nyb), hi = std::max(nya, nyb);
      // Remaining rows can widen the reach by at most 2 cells per row.
      if (std::min(nminl, lo - 2 * rem) > 1) return;
      if (std::max(nmaxr, hi + 2 * rem) < m) return;
      bool nsame = same_seen || sm;
      if (!nsame && hi - lo > 2 + 4 * rem) return;
      pos[i] = {nya, nyb};
      same[i] = sm;
      descend(i - 1, nya, nyb, copy, nsame, nminl, nmaxr);
    };
    int lo = std::min(ya, yb), hi = std::max(ya, yb);
    if (hi - lo <= 2) {
      for (int l = std::max(1, hi - 2); l <= lo; ++l)
        for (int r = hi; r <= std::min(m, l + 2); ++r)
          step(l, r, l, r, true);
    }
    for (int la = std::max(1, ya - 2); la <= ya; ++la)
      for (int ra = ya; ra <= std::min(m, la + 2); ++ra)
        for (int lb = std::max(1, yb - 2); lb <= yb; ++lb)
          for (int rb = yb; rb <= std::min(m, lb + 2); ++rb)
            if (ra < lb || rb < la) step(la, ra, lb, rb, false);
  }
};

}  // namespace

std::vector<SegmentPattern> forbidden_segment_patterns(
    int k, std::optional<std::chrono::steady_clock::time_point> deadline) {
  if (k < 2) return {};
  std::unordered_set<PinGrid, GridHash, GridEq> grids;
  for (int m = 2; m <= 4 * k - 5; ++m) {
    PlacementGen gen{k, m, &grids, deadline, 0, {}, {}};
    PinGrid pg0;
    pg0.order = k;
    pg0.width = m + 1;
    for (int pa = 1; pa < m; ++pa)
      for (int pb = pa + 1; pb <= m; ++pb)
        gen.descend(k, pa, pb, pg0, false, m + 1, 0);
  }
  std::vector<SegmentPattern> out;
  out.reserve(grids.size());
  for (const PinGrid& g : grids) {
    SegmentPattern pat;
    pat.order = k;
    pat.cols.resize(g.width);
    for (int j = 0; j < g.width; ++j) pat.cols[j] = {g.mask[j], g.bits[j]};
    out.push_back(std::move(pat));
  }
  std::sort(out.begin(), out.end(), [](const SegmentPattern& a, const SegmentPattern& b) {
    if (a.width() != b.width()) return a.width() < b.width();
    return a.cols < b.cols;
  });

  // Drop patterns whose completions are all matched by a looser same-width
  // pattern; quadratic, so only applied to buckets of moderate size.
  constexpr size_t kSubsumeLimit = 4096;
  std::vector<char> dead(out.size(), 0);
  for (size_t lo = 0; lo < out.size();) {
    size_t hi = lo;
    while (hi < out.size() && out[hi].width() == out[lo].width()) ++hi;
    if (hi - lo <= kSubsumeLimit) {
      for (size_t i = lo; i < hi; ++i) {
        for (size_t j = lo; j < hi; ++j) {
          if (i == j || dead[j] || dead[i]) continue;
          bool looser = true;  // j looser than i
          for (int c = 0; looser && c < out[i].width(); ++c) {
            const auto& ci = out[i].cols[c];
            const auto& cj = out[j].cols[c];
            looser = (cj.mask & ~ci.mask) == 0 && (ci.bits & cj.mask) == cj.bits;
          }
          if (looser && out[i] != out[j]) dead[i] = 1;
        }
      }
    }
    lo = hi;
  }
  std::vector<SegmentPattern> kept;
  for (size_t i = 0; i < out.size(); ++i)
    if (!dead[i]) kept.push_back(std::move(out[i]));
  return kept;
}

std::vector<Segment> enumerate_bounded_forbidden(int k, uint64_t max_segments) {
  if (k < 2) return {};
  auto patterns = forbidden_segment_patterns(k);
  // Bucket by width; pack symbols big-endian so numeric order is lexicographic.
  std::map<int, std::vector<unsigned __int128>> buckets;
  uint64_t pending = 0;
  auto compact = [&] {
    pending = 0;
    for (auto& [w, bucket] : buckets) {
      std::sort(bucket.begin(), bucket.end());
      bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
      pending += bucket.size();
    }
  };
  for (const auto& pat : patterns) {
    int w = pat.width();
    for_each_expansion(pat, true, [&](const std::vector<Symbol>& symbols) {
      if (++pending > max_segments) {
        compact();
        if (pending >= max_segments)
          throw ResourceLimitError(
              "bounded forbidden segment listing exceeds the cap of " +
              std::to_string(max_segments) + " entries");
      }
      unsigned __int128 key = 0;
      for (Symbol s : symbols) key = (key << k) | s;
      buckets[w].push_back(key);
    });
  }
  std::vector<Segment> result;
  for (auto& [w, bucket] : buckets) {
    std::sort(bucket.begin(), bucket.end());
    bucket.erase(std::unique(bucket.begin(), bucket.end()), bucket.end());
    for (unsigned __int128 key : bucket) {
      Segment seg{k, std::vector<Symbol>(w)};
      for (int j = w - 1; j >= 0; --j) {
        seg.symbols[j] = static_cast<Symbol>(key & ((1u << k) - 1));
        key >>= k;
      }
      result.push_back(std::move(seg));
    }
  }
  std::sort(result.begin(), result.end(),
            [](const Segment& a, const Segment& b) { return a.symbols < b.symbols; });
  return result;
}

std::vector<SegmentPattern> group_with_wildcards(const std::vector<Segment>& segs) {
  if (segs.empty()) return {};
  int k = segs.front().order;
  for (const auto& s : segs)
    if (s.order != k) throw std::invalid_argument("segments must share one order");

  std::map<int, std::set<SegmentPattern>> buckets;
  for (const auto& s : segs) buckets[s.width()].insert(SegmentPattern::from_segment(s));

  std::vector<SegmentPattern> result;
  for (auto& [w, cur] : buckets) {
    bool changed = true;
    while (changed) {
      changed = false;
      for (int beta = 0; beta < w * k; ++beta) {
        int col = beta / k;
        uint8_t bit = 1u << (beta % k);
        std::vector<std::pair<SegmentPattern, SegmentPattern>> merges;
        for (const auto& p : cur) {
          if (!(p.cols[col].mask & bit) || (p.cols[col].bits & bit)) continue;
          SegmentPattern partner = p;
          partner.cols[col].bits |= bit;
          if (cur.count(partner)) merges.emplace_back(p, partner);
        }
        for (auto& [p, partner] : merges) {
          if (!cur.count(p) || !cur.count(partner)) continue;
          cur.erase(p);
          cur.erase(partner);
          SegmentPattern merged = p;
          merged.cols[col].mask &= ~bit;
          merged.cols[col].bits &= ~bit;
          cur.insert(merged);
          changed = true;
        }
      }
    }
    result.insert(result.end(), cur.begin(), cur.end());
  }
  std::sort(result.begin(), result.end());
  return result;
}

}  // namespace popstack
