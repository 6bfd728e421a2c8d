#include "popstack/plans.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

#include "popstack/errors.hpp"

namespace popstack {

OperationArray::OperationArray(std::vector<OperationSequence> rows)
    : rows_(std::move(rows)) {
  if (rows_.empty()) throw std::invalid_argument("operation array needs k >= 1 rows");
  for (const auto& r : rows_)
    if (r.length() != rows_.front().length())
      throw std::invalid_argument("operation array rows must have equal length");
}

OperationArray OperationArray::all_a(int order, int cells) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  return OperationArray(
      std::vector<OperationSequence>(order, OperationSequence::all_a(cells)));
}

static std::string symbols_to_csv(const std::vector<Symbol>& symbols) {
  std::string s;
  for (size_t i = 0; i < symbols.size(); ++i) {
    if (i) s.push_back(',');
    s += std::to_string(symbols[i]);
  }
  return s;
}

std::string Encoding::to_csv() const { return symbols_to_csv(symbols); }
std::string Segment::to_csv() const { return symbols_to_csv(symbols); }

Encoding encode(const OperationArray& array) {
  int k = array.order();
  Encoding enc;
  enc.order = k;
  enc.symbols.resize(array.columns());
  for (int j = 0; j < array.columns(); ++j) {
    Symbol s = 0;
    for (int i = 1; i <= k; ++i)
      if (array.row(i).is_d(j)) s |= 1u << (k - i);
    enc.symbols[j] = s;
  }
  return enc;
}

OperationArray decode(const Encoding& enc, int order) {
  if (order < 1) throw std::invalid_argument("order must be >= 1");
  if (enc.symbols.empty())
    throw std::invalid_argument("encoding must have at least one symbol");
  if (enc.symbols.front() != 0 || enc.symbols.back() != 0)
    throw std::invalid_argument("encoding must begin and end with 0");
  for (Symbol s : enc.symbols)
    if (s >= (1u << order)) throw std::invalid_argument("symbol out of range for order");
  std::vector<OperationSequence> rows;
  rows.reserve(order);
  for (int i = 1; i <= order; ++i) {
    std::vector<uint8_t> letters(enc.symbols.size());
    for (size_t j = 0; j < enc.symbols.size(); ++j)
      letters[j] = (enc.symbols[j] >> (order - i)) & 1u;
    rows.emplace_back(std::move(letters));
  }
  return OperationArray(std::move(rows));
}

Encoding parse_encoding_csv(const std::string& csv, int order) {
  Encoding enc;
  enc.order = order;
  std::stringstream ss(csv);
  std::string item;
  while (std::getline(ss, item, ','))
    enc.symbols.push_back(static_cast<Symbol>(std::stoul(item)));
  decode(enc, order);  // validate
  return enc;
}

Semitrace semitrace_from_array(const OperationArray& array) {
  int k = array.order();
  std::vector<Permutation> perms(k + 1);
  perms[k] = Permutation::identity(array.cells());
  for (int i = k; i >= 1; --i)
    perms[i - 1] = blockwise_reverse(perms[i], array.row(i));
  return Semitrace{array, std::move(perms)};
}

std::set<std::pair<int, int>> violating_pairs(const Semitrace& st) {
  std::set<std::pair<int, int>> pairs;
  int n = st.length();
  for (int i = 1; i <= st.order(); ++i) {
    const Permutation& alpha = st.perm(i);
    const OperationSequence& mu = st.array.row(i);
    for (int x = 0; x + 1 < n; ++x) {
      int u = alpha[x], v = alpha[x + 1];
      bool ascent = u < v;
      bool bar = mu.is_a(x + 1);
      if (ascent != bar) pairs.emplace(std::min(u, v), std::max(u, v));
    }
  }
  return pairs;
}

bool is_sorting_plan(const OperationArray& array) {
  return violating_pairs(semitrace_from_array(array)).empty();
}

Semitrace trace_of(const Permutation& pi, int k) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  int needed = passes_to_sort(pi);
  if (needed > k)
    throw SortabilityError(k, needed,
                           "permutation " + pi.to_string() + " is not " +
                               std::to_string(k) + "-sortable; " +
                               std::to_string(needed) + " passes are needed");
  std::vector<OperationSequence> rows;
  std::vector<Permutation> perms;
  rows.reserve(k);
  perms.reserve(k + 1);
  perms.push_back(pi);
  for (int i = 0; i < k; ++i) {
    rows.push_back(operation_word(perms.back()));
    perms.push_back(pop_pass(perms.back()));
  }
  return Semitrace{OperationArray(std::move(rows)), std::move(perms)};
}

// Block of mu containing the 1-based cell y, as a cell range [lo, hi].
static std::pair<int, int> block_of(const OperationSequence& mu, int y) {
  int lo = y, hi = y;
  while (mu.is_d(lo - 1)) --lo;
  while (mu.is_d(hi)) ++hi;
  return {lo, hi};
}

Segment segment_of(const Semitrace& st, int a, int b, int* first_cell) {
  int n = st.length();
  if (a == b || a < 1 || b < 1 || a > n || b > n)
    throw std::invalid_argument("need two distinct values in [n]");
  int k = st.order();
  Segment seg;
  seg.order = k;
  if (k < 2) {
    if (first_cell) *first_cell = 0;
    return seg;  // no blocks outside row 1; empty segment
  }
  int lo = n + 1, hi = 0;
  for (int i = 2; i <= k; ++i) {
    const Permutation& alpha = st.perm(i);
    for (int pos = 0; pos < n; ++pos) {
      if (alpha[pos] == a || alpha[pos] == b) {
        auto [l, h] = block_of(st.array.row(i), pos + 1);
        lo = std::min(lo, l);
        hi = std::max(hi, h);
      }
    }
  }
  Encoding enc = encode(st.array);
  seg.symbols.assign(enc.symbols.begin() + (lo - 1), enc.symbols.begin() + hi + 1);
  if (first_cell) *first_cell = lo;
  return seg;
}

bool is_bounded(const Segment& seg) {
  for (int i = 2; i <= seg.order; ++i) {
    int run = 0;
    for (int j = 0; j < seg.width(); ++j) {
      run = seg.is_d(i, j) ? run + 1 : 0;
      if (run == 3) return false;
    }
  }
  return true;
}

}  // namespace popstack
