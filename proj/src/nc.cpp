#include "cyclotile/nc.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace cyclotile {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

// True iff all elements of `ys` fall in one gap of `xs` (cyclically when
// cycle_len > 0, linearly otherwise).  Both inputs sorted.  Two disjoint
// sets are non-crossing iff this holds in at least one direction (nested
// blocks satisfy only one).
bool in_one_gap(const std::vector<int>& xs, const std::vector<int>& ys, int cycle_len) {
  if (xs.size() < 2 || ys.empty()) return true;
  auto gap_of = [&](int y) {
    size_t g = std::upper_bound(xs.begin(), xs.end(), y) - xs.begin();
    if (cycle_len > 0) g %= xs.size();  // past the last element wraps to the first gap
    return g;
  };
  size_t g0 = gap_of(ys[0]);
  for (int y : ys)
    if (gap_of(y) != g0) return false;
  return true;
}

bool blocks_noncrossing(const std::vector<int>& a, const std::vector<int>& b, int cycle_len) {
  return in_one_gap(a, b, cycle_len) || in_one_gap(b, a, cycle_len);
}

// Visit every set partition of {0..n-1} as a block-assignment vector
// (restricted growth strings).
template <typename Visitor>
void for_each_partition(int n, Visitor&& visit) {
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int i, int max_block) -> void {
    if (i == n) {
      visit(assign, max_block + 1);
      return;
    }
    for (int b = 0; b <= max_block + 1; ++b) {
      assign[i] = b;
      self(self, i + 1, std::max(max_block, b));
    }
  };
  if (n == 0) {
    visit(assign, 0);
    return;
  }
  rec(rec, 1, 0);
}

std::vector<std::vector<int>> blocks_of(const std::vector<int>& assign, int nblocks) {
  std::vector<std::vector<int>> blocks(nblocks);
  for (size_t i = 0; i < assign.size(); ++i) blocks[assign[i]].push_back(static_cast<int>(i));
  return blocks;
}

// position on the circle 1, 2, ..., n, -1, -2, ..., -n
int cyclic_position(int value, int n) {
  return value > 0 ? value - 1 : n - value - 1;
}

}  // namespace

bool non_crossing_a(const PartitionA& p) {
  std::set<int> seen;
  for (const auto& b : p.blocks) {
    require(!b.empty(), "blocks must be nonempty");
    for (int x : b) require(seen.insert(x).second, "blocks must be disjoint");
  }
  std::vector<std::vector<int>> blocks = p.blocks;
  for (auto& b : blocks) std::sort(b.begin(), b.end());
  for (size_t i = 0; i < blocks.size(); ++i)
    for (size_t j = i + 1; j < blocks.size(); ++j)
      if (!blocks_noncrossing(blocks[i], blocks[j], 0)) return false;
  return true;
}

long long count_nc_a(int n, int k) {
  require(n >= 1 && k >= 1 && k <= n, "count_nc_a: 1 <= k <= n required");
  long long count = 0;
  for_each_partition(n, [&](const std::vector<int>& assign, int nblocks) {
    if (nblocks != k) return;
    PartitionA p{blocks_of(assign, nblocks)};
    for (auto& b : p.blocks)
      for (int& x : b) ++x;  // 1-based
    if (non_crossing_a(p)) ++count;
  });
  return count;
}

bool non_crossing_b(const SignedPartition& p) {
  // reassemble all blocks: zero block, B_i and -B_i (a self-barred entry
  // is kept once so degenerate inputs can still be tested for crossings)
  std::vector<std::vector<int>> blocks;
  if (!p.zero_block.empty()) blocks.push_back(p.zero_block);
  for (const auto& b : p.paired_blocks) {
    std::vector<int> sorted_b = b;
    std::sort(sorted_b.begin(), sorted_b.end());
    std::vector<int> barred;
    for (int x : b) barred.push_back(-x);
    std::sort(barred.begin(), barred.end());
    blocks.push_back(b);
    if (barred != sorted_b) blocks.push_back(std::move(barred));
  }
  int n = 0;
  for (const auto& b : blocks)
    for (int x : b) n = std::max(n, std::abs(x));
  std::set<int> seen;
  for (const auto& b : blocks) {
    require(!b.empty(), "blocks must be nonempty");
    for (int x : b) {
      require(x != 0 && std::abs(x) <= n, "element out of range");
      require(seen.insert(x).second, "blocks must be disjoint");
    }
  }
  require(static_cast<int>(seen.size()) == 2 * n, "blocks must cover {1..n, -1..-n}");

  std::vector<std::vector<int>> positions;
  for (const auto& b : blocks) {
    std::vector<int> pos;
    for (int x : b) pos.push_back(cyclic_position(x, n));
    std::sort(pos.begin(), pos.end());
    positions.push_back(std::move(pos));
  }
  for (size_t i = 0; i < positions.size(); ++i)
    for (size_t j = i + 1; j < positions.size(); ++j)
      if (!blocks_noncrossing(positions[i], positions[j], 2 * n)) return false;
  return true;
}

long long count_nc_b(int n, int k) {
  require(n >= 1 && k >= 0 && k <= n, "count_nc_b: 0 <= k <= n required");
  const int total = 2 * n;
  // position p < n carries value p+1, position p >= n carries -(p-n+1)
  auto bar_position = [&](int p) { return (p + n) % total; };

  long long count = 0;
  for_each_partition(total, [&](const std::vector<int>& assign, int nblocks) {
    // the bar involution must permute blocks, fixing at most one
    int fixed = 0;
    for (int b = 0; b < nblocks; ++b) {
      int image = -1;
      bool consistent = true;
      bool self_fixed = true;
      for (int p = 0; p < total; ++p) {
        if (assign[p] != b) continue;
        int q = assign[bar_position(p)];
        if (image == -1) image = q;
        if (q != image) {
          consistent = false;
          break;
        }
        if (q != b) self_fixed = false;
      }
      if (!consistent) return;
      if (self_fixed) ++fixed;
    }
    if (fixed > 1) return;
    int pairs = (nblocks - fixed) / 2;
    if (pairs != k) return;

    // cyclic non-crossing over all blocks
    std::vector<std::vector<int>> positions(nblocks);
    for (int p = 0; p < total; ++p) positions[assign[p]].push_back(p);
    for (int i = 0; i < nblocks; ++i)
      for (int j = i + 1; j < nblocks; ++j)
        if (!blocks_noncrossing(positions[i], positions[j], total)) return;
    ++count;
  });
  return count;
}

bool verify_identity_a(int n) {
  require(n >= 2, "verify_identity_a needs n >= 2");
  HVector h = h_vector(f_vector(associahedron(n + 1)));
  for (int k = 0; k <= n - 1; ++k)
    if (count_nc_a(n, n - k) != h.coeffs[k]) return false;
  return true;
}

bool verify_identity_b(int n) {
  require(n >= 1, "verify_identity_b needs n >= 1");
  HVector h = h_vector(f_vector(cyclohedron(n + 1)));
  for (int k = 0; k <= n; ++k)
    if (count_nc_b(n, n - k) != h.coeffs[k]) return false;
  return true;
}

}  // namespace cyclotile
