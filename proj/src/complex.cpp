#include "cyclotile/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <stdexcept>

namespace cyclotile {

namespace {

// Union-find with parity relative to the root.
struct ParityForest {
  std::vector<int> parent;
  std::vector<int> parity;
  explicit ParityForest(size_t n) : parent(n), parity(n, 0) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  std::pair<int, int> find(int x) {
    if (parent[x] == x) return {x, 0};
    auto [root, p] = find(parent[x]);
    parent[x] = root;
    parity[x] ^= p;
    return {root, parity[x]};
  }
  // returns false on contradiction
  bool merge(int a, int b, int rel) {
    auto [ra, pa] = find(a);
    auto [rb, pb] = find(b);
    if (ra == rb) return (pa ^ pb) == rel;
    parent[ra] = rb;
    parity[ra] = pa ^ pb ^ rel;
    return true;
  }
};

}  // namespace

std::vector<long long> cell_counts(const CellComplex& c) {
  std::vector<long long> out;
  out.reserve(c.cells.size());
  for (const auto& layer : c.cells) out.push_back(static_cast<long long>(layer.size()));
  return out;
}

long long euler(const CellComplex& c) {
  long long chi = 0;
  for (size_t d = 0; d < c.cells.size(); ++d) {
    long long sign = (d % 2 == 0) ? 1 : -1;
    chi += sign * static_cast<long long>(c.cells[d].size());
  }
  return chi;
}

bool connected(const CellComplex& c) {
  // tiles and cells joined through incidences
  size_t ntiles = c.tile_polys.size();
  std::vector<size_t> cell_offset(c.cells.size() + 1, ntiles);
  for (size_t d = 0; d < c.cells.size(); ++d)
    cell_offset[d + 1] = cell_offset[d] + c.cells[d].size();
  size_t total = cell_offset.back();
  if (total == 0) return true;
  ParityForest forest(total);
  for (const Incidence& inc : c.incidences)
    forest.merge(inc.tile, static_cast<int>(cell_offset[inc.dim] + inc.cell), 0);
  int root = forest.find(0).first;
  for (size_t i = 1; i < total; ++i)
    if (forest.find(static_cast<int>(i)).first != root) return false;
  return true;
}

bool pseudomanifold(const CellComplex& c) {
  if (c.top_dim == 0) return true;
  int d = c.top_dim - 1;
  if (d >= static_cast<int>(c.cells.size())) return false;
  std::vector<int> slots(c.cells[d].size(), 0);
  for (const Incidence& inc : c.incidences)
    if (inc.dim == d) slots[inc.cell] += inc.mult;
  return std::all_of(slots.begin(), slots.end(), [](int s) { return s == 2; });
}

bool codim_incidence(const CellComplex& c, int k) {
  if (k < 0 || k > c.top_dim) throw std::invalid_argument("codim out of range");
  int d = c.top_dim - k;
  std::vector<long long> slots(c.cells[d].size(), 0);
  for (const Incidence& inc : c.incidences)
    if (inc.dim == d) slots[inc.cell] += inc.mult;
  long long want = 1LL << k;
  return std::all_of(slots.begin(), slots.end(),
                     [&](long long s) { return s == want; });
}

SurfaceType classify_surface(const CellComplex& c) {
  if (c.top_dim != 2)
    throw std::invalid_argument("classify_surface precondition failed: topDim == 2");
  if (!connected(c))
    throw std::invalid_argument("classify_surface precondition failed: connected");
  if (!pseudomanifold(c))
    throw std::invalid_argument("classify_surface precondition failed: pseudomanifold");
  if (c.boundary.size() != c.tile_polys.size())
    throw std::invalid_argument(
        "classify_surface precondition failed: boundary traversals present");

  // Collect the two directed traversals of every edge cell and look for a
  // consistent assignment of tile orientations.
  std::map<int, std::vector<std::pair<int, int>>> edge_uses;  // edge -> (tile, dir)
  for (size_t t = 0; t < c.boundary.size(); ++t)
    for (const auto& step : c.boundary[t])
      edge_uses[step.edge_cell].push_back({static_cast<int>(t), step.direction});

  ParityForest forest(c.tile_polys.size());
  bool orientable = true;
  for (const auto& [edge, uses] : edge_uses) {
    if (uses.size() != 2)
      throw std::invalid_argument(
          "classify_surface precondition failed: pseudomanifold");
    auto [t1, d1] = uses[0];
    auto [t2, d2] = uses[1];
    // opposite traversal directions are orientation-compatible
    int rel = (d1 == d2) ? 1 : 0;
    if (!forest.merge(t1, t2, rel)) orientable = false;
  }

  long long chi = euler(c);
  SurfaceType out;
  out.orientable = orientable;
  out.parameter = orientable ? static_cast<int>((2 - chi) / 2)
                             : static_cast<int>(2 - chi);
  return out;
}

}  // namespace cyclotile
