#pragma once

#include <stdexcept>
#include <string>

namespace popstack {

// A permutation that cannot be sorted within the requested number of passes.
// Carries the smallest number of passes that would have worked.
class SortabilityError : public std::runtime_error {
 public:
  SortabilityError(int requested, int needed, const std::string& what)
      : std::runtime_error(what), requested_(requested), needed_(needed) {}
  int requested_passes() const { return requested_; }
  int needed_passes() const { return needed_; }

 private:
  int requested_;
  int needed_;
};

// Raised when a computation would exceed a configured resource cap
// (state budgets of the automaton pipeline, brute-force size caps).
class ResourceLimitError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace popstack
