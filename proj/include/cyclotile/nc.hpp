#pragma once

#include <vector>

#include "cyclotile/poset.hpp"

namespace cyclotile {

struct PartitionA {
  std::vector<std::vector<int>> blocks;  // partition of {1..n}, blocks sorted
};

// No two blocks interleave in the linear order on {1..n}.
bool non_crossing_a(const PartitionA& p);

// Number of non-crossing k-block partitions of {1..n}, by enumeration.
long long count_nc_a(int n, int k);

// Partition of {1..n, -1..-n} with the bar involution x -> -x: the zero
// block (possibly empty) is the only block fixed by the involution; the
// remaining blocks come in k pairs {B, -B}.
struct SignedPartition {
  std::vector<int> zero_block;
  std::vector<std::vector<int>> paired_blocks;  // one representative per pair
};

// Non-crossing with respect to the cyclic order 1..n, -1..-n on a circle.
bool non_crossing_b(const SignedPartition& p);

// Number of non-crossing signed partitions of {1..n, -1..-n} with k block
// pairs, by enumeration.
long long count_nc_b(int n, int k);

// count_nc_a(n, n-k) == h_k(assoc(n+1)) for all k.
bool verify_identity_a(int n);

// count_nc_b(n, n-k) == h_k(cyclo(n+1)) for all k.
bool verify_identity_b(int n);

}  // namespace cyclotile
