#pragma once

#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "popstack/permutation.hpp"

namespace popstack {

using Symbol = uint32_t;

// k operation sequences of equal length; rows are numbered 1..k top to bottom.
class OperationArray {
 public:
  explicit OperationArray(std::vector<OperationSequence> rows);

  static OperationArray all_a(int order, int cells);

  int order() const { return static_cast<int>(rows_.size()); }
  int cells() const { return rows_.front().cells(); }
  int columns() const { return cells() + 1; }
  const OperationSequence& row(int i) const { return rows_[i - 1]; }  // 1-based
  const std::vector<OperationSequence>& rows() const { return rows_; }

  bool operator==(const OperationArray&) const = default;

 private:
  std::vector<OperationSequence> rows_;
};

// Column encoding of an operation array: each column read as a k-bit number
// with a = 0 and d = 1, row 1 the most significant bit. The first and last
// symbols of a whole operation array are always 0.
struct Encoding {
  int order = 0;
  std::vector<Symbol> symbols;

  bool operator==(const Encoding&) const = default;
  bool operator<(const Encoding& o) const { return symbols < o.symbols; }
  std::string to_csv() const;
};

// A contiguous run of encoded columns cut from some operation array; unlike
// an Encoding it need not begin or end with 0.
struct Segment {
  int order = 0;
  std::vector<Symbol> symbols;

  int width() const { return static_cast<int>(symbols.size()); }
  int cells() const { return width() - 1; }
  // Row bit of column col for row i in 1..order.
  bool is_d(int row, int col) const {
    return (symbols[col] >> (order - row)) & 1u;
  }
  bool operator==(const Segment&) const = default;
  bool operator<(const Segment& o) const { return symbols < o.symbols; }
  std::string to_csv() const;
};

// An operation array together with the permutation stack it induces from the
// identity; perms[i] is alpha_{i+1}, so perms.front() is the top row and
// perms.back() the identity.
struct Semitrace {
  OperationArray array;
  std::vector<Permutation> perms;

  int order() const { return array.order(); }
  int length() const { return array.cells(); }
  const Permutation& perm(int i) const { return perms[i - 1]; }  // alpha_i, 1-based
};

Encoding encode(const OperationArray& array);
OperationArray decode(const Encoding& enc, int order);

Encoding parse_encoding_csv(const std::string& csv, int order);

// Builds the permutations bottom-up from the identity by blockwise reversal.
Semitrace semitrace_from_array(const OperationArray& array);

// All unordered value pairs that sit adjacent in some row and either form a
// descent across a bar or an ascent inside a block.
std::set<std::pair<int, int>> violating_pairs(const Semitrace& st);

// An operation array is a sorting plan iff its semitrace has no violating pair.
bool is_sorting_plan(const OperationArray& array);

// The trace obtained by running the pop-stack operator k times on pi.
// Throws SortabilityError if pi is not k-sortable.
Semitrace trace_of(const Permutation& pi, int k);

// The smallest segment covering every block of rows 2..k that contains the
// value a or b, with all k rows of bars. When first_cell is non-null it
// receives the 1-based index of the leftmost covered cell.
Segment segment_of(const Semitrace& st, int a, int b, int* first_cell = nullptr);

// True iff rows 2..k of the segment contain no run of three consecutive d's.
bool is_bounded(const Segment& seg);

}  // namespace popstack
