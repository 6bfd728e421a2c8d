#include "popstack/permutation.hpp"

#include <algorithm>
#include <stdexcept>

namespace popstack {

OperationSequence::OperationSequence(std::vector<uint8_t> letters)
    : letters_(std::move(letters)) {
  if (letters_.empty())
    throw std::invalid_argument("operation sequence must have length >= 1");
  if (letters_.front() != 0 || letters_.back() != 0)
    throw std::invalid_argument("operation sequence must begin and end with a");
  for (uint8_t c : letters_)
    if (c > 1) throw std::invalid_argument("operation sequence letters must be a or d");
}

OperationSequence OperationSequence::all_a(int cells) {
  if (cells < 0) throw std::invalid_argument("negative length");
  return OperationSequence(std::vector<uint8_t>(cells + 1, 0));
}

OperationSequence OperationSequence::from_string(const std::string& word) {
  std::vector<uint8_t> letters;
  letters.reserve(word.size());
  for (char c : word) {
    if (c == ' ') continue;
    if (c == 'a')
      letters.push_back(0);
    else if (c == 'd')
      letters.push_back(1);
    else
      throw std::invalid_argument("operation sequence letters must be a or d");
  }
  return OperationSequence(std::move(letters));
}

std::string OperationSequence::to_string() const {
  std::string s;
  s.reserve(letters_.size());
  for (uint8_t c : letters_) s.push_back(c == 0 ? 'a' : 'd');
  return s;
}

Permutation::Permutation(std::vector<int> values) : values_(std::move(values)) {
  std::vector<char> seen(values_.size(), 0);
  for (int v : values_) {
    if (v < 1 || v > static_cast<int>(values_.size()) || seen[v - 1])
      throw std::invalid_argument("not a permutation of [n]");
    seen[v - 1] = 1;
  }
}

Permutation Permutation::identity(int n) {
  if (n < 0) throw std::invalid_argument("negative length");
  std::vector<int> v(n);
  for (int i = 0; i < n; ++i) v[i] = i + 1;
  return Permutation(std::move(v));
}

bool Permutation::is_identity() const {
  for (int i = 0; i < size(); ++i)
    if (values_[i] != i + 1) return false;
  return true;
}

std::string Permutation::to_string() const {
  if (size() == 0) return "()";
  bool compact = size() <= 9;
  std::string s;
  for (int i = 0; i < size(); ++i) {
    if (i > 0 && !compact) s.push_back(',');
    s += std::to_string(values_[i]);
  }
  return s;
}

Permutation pop_pass(const Permutation& pi) {
  std::vector<int> out(pi.values());
  int n = pi.size();
  int start = 0;
  while (start < n) {
    int end = start + 1;
    while (end < n && out[end] < out[end - 1]) ++end;
    std::reverse(out.begin() + start, out.begin() + end);
    start = end;
  }
  return Permutation(std::move(out));
}

OperationSequence operation_word(const Permutation& pi) {
  int n = pi.size();
  std::vector<uint8_t> letters(n + 1, 0);
  for (int i = 1; i < n; ++i)
    letters[i] = pi[i - 1] < pi[i] ? 0 : 1;
  return OperationSequence(std::move(letters));
}

Permutation blockwise_reverse(const Permutation& pi, const OperationSequence& mu) {
  if (mu.length() != pi.size() + 1)
    throw std::invalid_argument("operation sequence length must be permutation length + 1");
  std::vector<int> out(pi.values());
  int start = 0;
  for (int i = 1; i <= pi.size(); ++i) {
    if (mu.is_a(i)) {
      std::reverse(out.begin() + start, out.begin() + i);
      start = i;
    }
  }
  return Permutation(std::move(out));
}

int passes_to_sort(const Permutation& pi) {
  Permutation cur = pi;
  int passes = 0;
  while (!cur.is_identity()) {
    cur = pop_pass(cur);
    ++passes;
  }
  return passes;
}

bool is_k_sortable(const Permutation& pi, int k) {
  if (k < 0) throw std::invalid_argument("pass count must be >= 0");
  Permutation cur = pi;
  for (int i = 0; i < k; ++i) {
    if (cur.is_identity()) return true;
    cur = pop_pass(cur);
  }
  return cur.is_identity();
}

bool is_layered(const Permutation& pi) {
  int n = pi.size();
  int p = 0;
  while (p < n) {
    int v = pi[p];               // layer p+1..v, values v down to p+1
    int len = v - (p + 1) + 1;
    if (len < 1) return false;
    for (int t = 0; t < len; ++t)
      if (pi[p + t] != v - t) return false;
    p += len;
  }
  return true;
}

}  // namespace popstack
