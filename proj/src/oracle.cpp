#include "popstack/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "popstack/errors.hpp"
#include "popstack/permutation.hpp"

namespace popstack {

namespace {

// In-place pop-stack pass on a raw value buffer.
void pop_pass_inplace(std::vector<int>& v) {
  size_t n = v.size();
  size_t start = 0;
  while (start < n) {
    size_t end = start + 1;
    while (end < n && v[end] < v[end - 1]) ++end;
    std::reverse(v.begin() + start, v.begin() + end);
    start = end;
  }
}

bool sorts_within(std::vector<int> v, int k) {
  for (int pass = 0;; ++pass) {
    bool sorted = true;
    for (size_t i = 0; i < v.size(); ++i)
      if (v[i] != static_cast<int>(i) + 1) {
        sorted = false;
        break;
      }
    if (sorted) return true;
    if (pass == k) return false;
    pop_pass_inplace(v);
  }
}

}  // namespace

BigInt count_sortable_bruteforce(int k, int n, int cap) {
  if (k < 0 || n < 0) throw std::invalid_argument("k and n must be >= 0");
  if (n > cap)
    throw ResourceLimitError("brute-force cap is " + std::to_string(cap) +
                             " but n = " + std::to_string(n) +
                             "; raise the cap to enumerate " +
                             std::to_string(n) + "! permutations");
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 1);
  BigInt count = 0;
  do {
    if (sorts_within(v, k)) ++count;
  } while (std::next_permutation(v.begin(), v.end()));
  return count;
}

std::vector<Encoding> plans_bruteforce(int k, int n, uint64_t cap) {
  if (k < 1) throw std::invalid_argument("order must be >= 1");
  if (n < 0) throw std::invalid_argument("length must be >= 0");
  uint64_t alpha = uint64_t(1) << k;
  uint64_t candidates = 1;
  for (int i = 0; i + 1 < n; ++i) {
    candidates *= alpha;
    if (candidates > cap)
      throw ResourceLimitError("plan search space (2^k)^(n-1) exceeds cap " +
                               std::to_string(cap));
  }
  std::vector<Encoding> plans;
  Encoding enc;
  enc.order = k;
  enc.symbols.assign(n + 1, 0);
  for (uint64_t word = 0; word < candidates; ++word) {
    uint64_t rest = word;
    for (int j = n - 1; j >= 1; --j) {
      enc.symbols[j] = static_cast<Symbol>(rest % alpha);
      rest /= alpha;
    }
    if (is_sorting_plan(decode(enc, k))) plans.push_back(enc);
  }
  return plans;
}

}  // namespace popstack
