#include <algorithm>
#include <functional>
#include <set>
#include <vector>

#include "doctest.h"

#include "cyclotile/nc.hpp"

using namespace cyclotile;

namespace {

long long catalan(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int i = 1; i <= n; ++i)
    for (int j = 0; j < i; ++j) c[i] += c[j] * c[i - 1 - j];
  return c[n];
}

long long binomial(int n, int k) {
  long long b = 1;
  for (int i = 0; i < k; ++i) b = b * (n - i) / (i + 1);
  return b;
}

// Alternation oracle for linear non-crossing: a crossing is a quadruple
// x1 < y1 < x2 < y2 with x's and y's in different blocks.
bool noncrossing_oracle(const std::vector<int>& assign) {
  int n = static_cast<int>(assign.size());
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      for (int c = b + 1; c < n; ++c)
        for (int d = c + 1; d < n; ++d)
          if (assign[a] == assign[c] && assign[b] == assign[d] &&
              assign[a] != assign[b])
            return false;
  return true;
}

void for_each_assignment(int n, const std::function<void(const std::vector<int>&, int)>& f) {
  std::vector<int> assign(n, 0);
  auto rec = [&](auto&& self, int i, int mx) -> void {
    if (i == n) {
      f(assign, mx + 1);
      return;
    }
    for (int b = 0; b <= mx + 1; ++b) {
      assign[i] = b;
      self(self, i + 1, std::max(mx, b));
    }
  };
  rec(rec, 1, 0);
}

PartitionA from_assignment(const std::vector<int>& assign, int nblocks) {
  PartitionA p;
  p.blocks.resize(nblocks);
  for (size_t i = 0; i < assign.size(); ++i)
    p.blocks[assign[i]].push_back(static_cast<int>(i) + 1);
  return p;
}

}  // namespace

TEST_CASE("type A non-crossing predicate") {
  CHECK_FALSE(non_crossing_a(PartitionA{{{1, 2, 4}, {3, 5}}}));
  CHECK(non_crossing_a(PartitionA{{{1, 2}, {3, 4}}}));
  CHECK_FALSE(non_crossing_a(PartitionA{{{1, 3}, {2, 4}}}));
  CHECK(non_crossing_a(PartitionA{{{1, 4}, {2, 3}}}));  // nesting is fine
  CHECK_THROWS_AS(non_crossing_a(PartitionA{{{1, 2}, {2, 3}}}), std::invalid_argument);

  // full agreement with the alternation oracle
  for (int n = 1; n <= 7; ++n)
    for_each_assignment(n, [&](const std::vector<int>& assign, int nblocks) {
      CHECK(non_crossing_a(from_assignment(assign, nblocks)) ==
            noncrossing_oracle(assign));
    });
}

TEST_CASE("type A counts") {
  CHECK(count_nc_a(3, 2) == 3);
  CHECK(count_nc_a(3, 1) == 1);
  long long total4 = 0;
  for (int k = 1; k <= 4; ++k) total4 += count_nc_a(4, k);
  CHECK(total4 == 14);
  // Narayana closed form as a cross-check
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k)
      CHECK(count_nc_a(n, k) == binomial(n, k) * binomial(n, k - 1) / n);
  for (int n = 1; n <= 8; ++n) {
    long long total = 0;
    for (int k = 1; k <= n; ++k) total += count_nc_a(n, k);
    CHECK(total == catalan(n));
  }
  CHECK_THROWS_AS(count_nc_a(3, 0), std::invalid_argument);
}

TEST_CASE("type A rank symmetry") {
  for (int n = 1; n <= 7; ++n)
    for (int k = 1; k <= n; ++k) CHECK(count_nc_a(n, k) == count_nc_a(n, n + 1 - k));
}

TEST_CASE("type B non-crossing predicate") {
  // everything in the zero block
  CHECK(non_crossing_b(SignedPartition{{1, 2, -1, -2}, {}}));
  // {1,-2}{-1,2} do not cross on the circle 1,2,-1,-2
  CHECK(non_crossing_b(SignedPartition{{}, {{1, -2}}}));
  // {1,-1}{2,-2} cross
  CHECK_FALSE(non_crossing_b(SignedPartition{{}, {{1, -1}, {2, -2}}}));
  CHECK_THROWS_AS(non_crossing_b(SignedPartition{{1, -1}, {{1, 2}}}),
                  std::invalid_argument);
}

TEST_CASE("type B counts") {
  CHECK(count_nc_b(2, 1) == 4);
  CHECK(count_nc_b(2, 2) == 1);
  CHECK(count_nc_b(2, 0) == 1);
  // known closed form and total
  for (int n = 1; n <= 5; ++n) {
    long long total = 0;
    for (int k = 0; k <= n; ++k) {
      CHECK(count_nc_b(n, k) == binomial(n, k) * binomial(n, k));
      total += count_nc_b(n, k);
    }
    CHECK(total == binomial(2 * n, n));
  }
  CHECK_THROWS_AS(count_nc_b(3, 4), std::invalid_argument);
}

TEST_CASE("type B rank symmetry") {
  for (int n = 1; n <= 5; ++n)
    for (int k = 0; k <= n; ++k) CHECK(count_nc_b(n, k) == count_nc_b(n, n - k));
}

TEST_CASE("signed predicate agrees with the alternation oracle") {
  // Enumerate every bar-closed partition of the cyclic positions for small
  // n, rebuild it as a SignedPartition, and compare non_crossing_b against
  // quadruple alternation on the raw positions (two blocks cross on a
  // circle exactly when four of their points alternate).
  for (int n = 2; n <= 3; ++n) {
    int len = 2 * n;
    auto value_of = [&](int p) { return p < n ? p + 1 : -(p - n + 1); };
    auto bar = [&](int p) { return (p + n) % len; };
    for_each_assignment(len, [&](const std::vector<int>& assign, int nblocks) {
      // bar-closure with at most one self-barred block
      int fixed = 0;
      for (int b = 0; b < nblocks; ++b) {
        int image = -1;
        bool self_fixed = true;
        for (int p = 0; p < len; ++p) {
          if (assign[p] != b) continue;
          if (image == -1) image = assign[bar(p)];
          if (assign[bar(p)] != image) return;
          if (assign[bar(p)] != b) self_fixed = false;
        }
        if (self_fixed) ++fixed;
      }
      if (fixed > 1) return;
      SignedPartition sp;
      std::vector<char> used(nblocks, 0);
      for (int b = 0; b < nblocks; ++b) {
        if (used[b]) continue;
        std::vector<int> values;
        int image = -1;
        for (int p = 0; p < len; ++p)
          if (assign[p] == b) {
            values.push_back(value_of(p));
            image = assign[bar(p)];
          }
        used[b] = 1;
        if (image == b) {
          sp.zero_block = values;
        } else {
          used[image] = 1;
          sp.paired_blocks.push_back(values);
        }
      }
      CHECK(non_crossing_b(sp) == noncrossing_oracle(assign));
    });
  }
}

TEST_CASE("h-vector identities") {
  for (int n = 2; n <= 7; ++n) CHECK(verify_identity_a(n));
  for (int n = 1; n <= 5; ++n) CHECK(verify_identity_b(n));
}
