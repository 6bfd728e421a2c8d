#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace popstack {

// A word over {a, d} of length n+1 that begins and ends with the letter a.
// Letter a marks a pop (a "bar" in the pictures), d a push without pop.
// For n = 0 the sequence is the single letter a.
class OperationSequence {
 public:
  OperationSequence() : letters_(1, 0) {}
  explicit OperationSequence(std::vector<uint8_t> letters);

  static OperationSequence all_a(int cells);
  static OperationSequence from_string(const std::string& word);

  int length() const { return static_cast<int>(letters_.size()); }
  int cells() const { return length() - 1; }

  // Letters are indexed 0..n; index i is the boundary left of cell i+1.
  bool is_a(int i) const { return letters_[i] == 0; }
  bool is_d(int i) const { return letters_[i] != 0; }

  std::string to_string() const;

  bool operator==(const OperationSequence&) const = default;

 private:
  std::vector<uint8_t> letters_;  // 0 = a, 1 = d
};

// A permutation of [n] stored as its value sequence; n = 0 is legal.
class Permutation {
 public:
  Permutation() = default;
  explicit Permutation(std::vector<int> values);

  static Permutation identity(int n);

  int size() const { return static_cast<int>(values_.size()); }
  // 0-based position, 1-based value.
  int operator[](int pos) const { return values_[pos]; }
  const std::vector<int>& values() const { return values_; }

  bool is_identity() const;
  std::string to_string() const;

  bool operator==(const Permutation&) const = default;
  bool operator<(const Permutation& o) const { return values_ < o.values_; }

 private:
  std::vector<int> values_;
};

// One pass through the pop-stack: reverses every maximal descending run.
Permutation pop_pass(const Permutation& pi);

// The ascent/descent word of -inf pi +inf; letter i+1 is a iff i is an ascent.
OperationSequence operation_word(const Permutation& pi);

// Splits pi into blocks at the a-positions of mu and reverses each block.
// Requires mu.length() == pi.size() + 1.
Permutation blockwise_reverse(const Permutation& pi, const OperationSequence& mu);

// Number of pop-stack passes needed to sort pi (0 for the identity).
int passes_to_sort(const Permutation& pi);

// True iff k passes of the pop-stack sort pi. Monotone in k.
bool is_k_sortable(const Permutation& pi, int k);

// True iff pi is a direct sum of decreasing permutations.
bool is_layered(const Permutation& pi);

}  // namespace popstack
