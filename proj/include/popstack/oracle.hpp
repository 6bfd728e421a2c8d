#pragma once

#include <cstdint>
#include <vector>

#include "popstack/bigint.hpp"
#include "popstack/plans.hpp"

namespace popstack {

inline constexpr int kDefaultPermutationCap = 9;
inline constexpr uint64_t kDefaultPlanCap = uint64_t(1) << 22;

// Number of permutations of [n] sortable by k pop-stack passes, by direct
// enumeration in lexicographic order. Rejects n above the cap.
BigInt count_sortable_bruteforce(int k, int n, int cap = kDefaultPermutationCap);

// All sorting-plan encodings of order k and length n, in lexicographic order.
// The (2^k)^(n-1) candidate encodings must stay within cap.
std::vector<Encoding> plans_bruteforce(int k, int n,
                                       uint64_t cap = kDefaultPlanCap);

}  // namespace popstack
