#include "cyclotile/nested.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

namespace cyclotile {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void check_diagram(const Diagram& d) {
  if (d.kind == DiagramKind::Path)
    require(d.nodes >= 1, "path diagram needs at least one node");
  else
    require(d.nodes >= 3, "cycle diagram needs at least three nodes");
}

bool adjacent(int u, int v, const Diagram& d) {
  int diff = std::abs(u - v);
  if (diff == 1) return true;
  return d.kind == DiagramKind::Cycle && diff == d.nodes - 1;
}

FaceKey tubing_key(const Tubing& t) {
  std::vector<int> masks;
  for (const Tube& tube : t) {
    int mask = 0;
    for (int v : tube.nodes) mask |= 1 << v;
    masks.push_back(mask);
  }
  std::sort(masks.begin(), masks.end());
  return masks;
}

}  // namespace

std::vector<Tube> tubes(const Diagram& d) {
  check_diagram(d);
  std::set<Tube> out;
  if (d.kind == DiagramKind::Path) {
    for (int a = 0; a < d.nodes; ++a)
      for (int b = a; b < d.nodes; ++b) {
        if (b - a + 1 == d.nodes) continue;  // proper subsets only
        Tube t;
        for (int v = a; v <= b; ++v) t.nodes.push_back(v);
        out.insert(std::move(t));
      }
  } else {
    for (int start = 0; start < d.nodes; ++start)
      for (int len = 1; len < d.nodes; ++len) {
        Tube t;
        for (int o = 0; o < len; ++o) t.nodes.push_back((start + o) % d.nodes);
        std::sort(t.nodes.begin(), t.nodes.end());
        out.insert(std::move(t));
      }
  }
  return {out.begin(), out.end()};
}

bool tubes_compatible(const Tube& a, const Tube& b, const Diagram& d) {
  if (a == b) return false;
  auto subset = [](const Tube& x, const Tube& y) {
    return std::includes(y.nodes.begin(), y.nodes.end(), x.nodes.begin(), x.nodes.end());
  };
  if (subset(a, b) || subset(b, a)) return true;
  std::vector<int> inter;
  std::set_intersection(a.nodes.begin(), a.nodes.end(), b.nodes.begin(), b.nodes.end(),
                        std::back_inserter(inter));
  if (!inter.empty()) return false;  // partial overlap
  for (int u : a.nodes)
    for (int v : b.nodes)
      if (adjacent(u, v, d)) return false;
  return true;
}

FacePoset tubing_poset(const Diagram& d) {
  check_diagram(d);
  std::vector<Tube> pool = tubes(d);
  size_t np = pool.size();
  std::vector<std::vector<char>> compat(np, std::vector<char>(np, 0));
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j)
      compat[i][j] = compat[j][i] = tubes_compatible(pool[i], pool[j], d);

  std::vector<std::vector<Tubing>> by_size(1, {Tubing{}});
  std::vector<size_t> chosen;
  auto rec = [&](auto&& self, size_t from) -> void {
    for (size_t i = from; i < np; ++i) {
      bool ok = true;
      for (size_t prev : chosen)
        if (!compat[prev][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      Tubing t;
      for (size_t idx : chosen) t.push_back(pool[idx]);
      if (by_size.size() <= chosen.size()) by_size.resize(chosen.size() + 1);
      by_size[chosen.size()].push_back(std::move(t));
      self(self, i + 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0);

  int dim = static_cast<int>(by_size.size()) - 1;
  std::vector<std::vector<FaceKey>> ranks(dim + 1);
  std::vector<std::vector<std::vector<FaceKey>>> parents(dim + 1);
  for (int k = 0; k <= dim; ++k) {
    std::sort(by_size[k].begin(), by_size[k].end());
    parents[k].resize(by_size[k].size());
    for (size_t i = 0; i < by_size[k].size(); ++i) {
      ranks[k].push_back(tubing_key(by_size[k][i]));
      if (k == 0) continue;
      for (size_t drop = 0; drop < by_size[k][i].size(); ++drop) {
        Tubing parent = by_size[k][i];
        parent.erase(parent.begin() + drop);
        parents[k][i].push_back(tubing_key(parent));
      }
    }
  }
  return build_graded_poset(dim, std::move(ranks), parents);
}

namespace {

struct PosetGraph {
  // faces flattened across ranks; up[i] = neighbors one rank up (toward
  // codim 0), down[i] = neighbors one rank down
  std::vector<int> rank_of;
  std::vector<std::vector<int>> up, down;
  std::vector<int> rank_offset;

  explicit PosetGraph(const FacePoset& p) {
    rank_offset.resize(p.ranks.size() + 1, 0);
    for (size_t k = 0; k < p.ranks.size(); ++k)
      rank_offset[k + 1] = rank_offset[k] + static_cast<int>(p.ranks[k].size());
    int total = rank_offset.back();
    rank_of.resize(total);
    up.resize(total);
    down.resize(total);
    for (size_t k = 0; k < p.ranks.size(); ++k)
      for (size_t i = 0; i < p.ranks[k].size(); ++i)
        rank_of[rank_offset[k] + i] = static_cast<int>(k);
    for (size_t k = 1; k < p.ranks.size(); ++k)
      for (auto [sub, super] : p.covers[k]) {
        int a = rank_offset[k] + sub;
        int b = rank_offset[k - 1] + super;
        up[a].push_back(b);
        down[b].push_back(a);
      }
    for (auto& v : up) std::sort(v.begin(), v.end());
    for (auto& v : down) std::sort(v.begin(), v.end());
  }
};

std::vector<long long> refine_colors(const PosetGraph& g) {
  int total = static_cast<int>(g.rank_of.size());
  std::vector<long long> color(total);
  for (int i = 0; i < total; ++i)
    color[i] = (static_cast<long long>(g.rank_of[i]) << 32) |
               (static_cast<long long>(g.up[i].size()) << 16) | g.down[i].size();
  for (int round = 0; round < total; ++round) {
    // signature: own color plus sorted neighbor colors
    std::vector<std::vector<long long>> sig(total);
    for (int i = 0; i < total; ++i) {
      sig[i].push_back(color[i]);
      std::vector<long long> ns;
      for (int j : g.up[i]) ns.push_back(color[j]);
      std::sort(ns.begin(), ns.end());
      sig[i].push_back(-1);
      sig[i].insert(sig[i].end(), ns.begin(), ns.end());
      ns.clear();
      for (int j : g.down[i]) ns.push_back(color[j]);
      std::sort(ns.begin(), ns.end());
      sig[i].push_back(-2);
      sig[i].insert(sig[i].end(), ns.begin(), ns.end());
    }
    std::map<std::vector<long long>, long long> relabel;
    for (int i = 0; i < total; ++i) relabel.emplace(sig[i], 0);
    long long next = 0;
    for (auto& [s, id] : relabel) id = next++;
    std::vector<long long> fresh(total);
    for (int i = 0; i < total; ++i) fresh[i] = relabel[sig[i]];
    if (fresh == color) break;
    color = std::move(fresh);
  }
  return color;
}

}  // namespace

bool poset_iso(const FacePoset& a, const FacePoset& b) {
  if (a.dim != b.dim) return false;
  if (a.ranks.size() != b.ranks.size()) return false;
  for (size_t k = 0; k < a.ranks.size(); ++k) {
    if (a.ranks[k].size() != b.ranks[k].size()) return false;
    if (k > 0 && a.covers[k].size() != b.covers[k].size()) return false;
  }
  PosetGraph ga(a), gb(b);
  std::vector<long long> ca = refine_colors(ga), cb = refine_colors(gb);
  {
    std::map<long long, int> ha, hb;
    for (long long c : ca) ++ha[c];
    for (long long c : cb) ++hb[c];
    if (ha != hb) return false;
  }

  int total = static_cast<int>(ca.size());
  std::map<long long, std::vector<int>> by_color_b;
  for (int i = 0; i < total; ++i) by_color_b[cb[i]].push_back(i);

  // order: smallest color classes first, then by adjacency to mapped faces
  std::vector<int> order(total);
  std::iota(order.begin(), order.end(), 0);
  std::map<long long, int> class_size;
  for (long long c : ca) ++class_size[c];
  std::sort(order.begin(), order.end(), [&](int x, int y) {
    return std::tuple(class_size[ca[x]], ca[x], x) <
           std::tuple(class_size[ca[y]], ca[y], y);
  });

  std::vector<int> map_ab(total, -1), map_ba(total, -1);
  long long nodes_budget = 10'000'000;

  auto consistent = [&](int x, int y) {
    if (ca[x] != cb[y]) return false;
    // covers against already mapped faces must match exactly both ways
    for (int nx : ga.up[x]) {
      if (map_ab[nx] == -1) continue;
      if (!std::binary_search(gb.up[y].begin(), gb.up[y].end(), map_ab[nx])) return false;
    }
    for (int nx : ga.down[x]) {
      if (map_ab[nx] == -1) continue;
      if (!std::binary_search(gb.down[y].begin(), gb.down[y].end(), map_ab[nx]))
        return false;
    }
    for (int ny : gb.up[y]) {
      if (map_ba[ny] == -1) continue;
      if (!std::binary_search(ga.up[x].begin(), ga.up[x].end(), map_ba[ny])) return false;
    }
    for (int ny : gb.down[y]) {
      if (map_ba[ny] == -1) continue;
      if (!std::binary_search(ga.down[x].begin(), ga.down[x].end(), map_ba[ny]))
        return false;
    }
    return true;
  };

  auto search = [&](auto&& self, size_t pos) -> bool {
    if (pos == order.size()) return true;
    if (--nodes_budget <= 0) throw ResourceError("poset isomorphism search budget exceeded");
    int x = order[pos];
    for (int y : by_color_b[ca[x]]) {
      if (map_ba[y] != -1) continue;
      if (!consistent(x, y)) continue;
      map_ab[x] = y;
      map_ba[y] = x;
      if (self(self, pos + 1)) return true;
      map_ab[x] = -1;
      map_ba[y] = -1;
    }
    return false;
  };
  return search(search, 0);
}

long long building_set_count(const ArrangementDescriptor& a, int k) {
  require(a.n >= 2, "arrangement needs n >= 2");
  if (a.kind == ArrangementKind::Linear) {
    require(k >= 1 && k <= a.n - 1, "linear building set codim out of range");
    // Enumerate intersection subspaces of the braid arrangement on
    // {1..n+1} as set partitions; a codim-k subspace is minimal exactly
    // when C(k+1,2) hyperplanes pass through it.
    int points = a.n + 1;
    long long want_planes = static_cast<long long>(k + 1) * k / 2;
    long long count = 0;
    std::vector<int> assign(points, 0);
    auto rec = [&](auto&& self, int i, int max_block) -> void {
      if (i == points) {
        std::map<int, int> size;
        for (int x : assign) ++size[x];
        long long codim = 0, planes = 0;
        for (auto [blk, s] : size) {
          codim += s - 1;
          planes += static_cast<long long>(s) * (s - 1) / 2;
        }
        if (codim == k && planes == want_planes) ++count;
        return;
      }
      for (int b = 0; b <= max_block + 1; ++b) {
        assign[i] = b;
        self(self, i + 1, std::max(max_block, b));
      }
    };
    assign[0] = 0;
    rec(rec, 1, 0);
    return count;
  }
  require(k >= 1 && k <= a.n - 1, "affine building set codim out of range");
  // Minimal cells of the affine arrangement on the torus correspond to
  // (k+1)-subsets of {1..n}; enumerate them and check the hyperplane count.
  long long want_planes = static_cast<long long>(k + 1) * k / 2;
  long long count = 0;
  std::vector<int> subset;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == k + 1) {
      long long planes = 0;
      for (size_t i = 0; i < subset.size(); ++i)
        for (size_t j = i + 1; j < subset.size(); ++j) ++planes;
      if (planes == want_planes) ++count;
      return;
    }
    for (int x = from; x <= a.n; ++x) {
      subset.push_back(x);
      self(self, x + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);
  return count;
}

long long chamber_count(const ArrangementDescriptor& a) {
  require(a.n >= 2, "arrangement needs n >= 2");
  if (a.kind == ArrangementKind::Linear) {
    // coordinate orderings up to global reversal (antipodal map)
    int points = a.n + 1;
    std::vector<int> perm(points);
    std::iota(perm.begin(), perm.end(), 1);
    std::set<std::vector<int>> chambers;
    do {
      std::vector<int> rev(perm.rbegin(), perm.rend());
      chambers.insert(std::min(perm, rev));
    } while (std::next_permutation(perm.begin(), perm.end()));
    return static_cast<long long>(chambers.size());
  }
  // cyclic orderings of the n coordinates on the torus
  std::vector<int> perm(a.n);
  std::iota(perm.begin(), perm.end(), 1);
  std::set<std::vector<int>> chambers;
  do {
    std::vector<int> best = perm;
    std::vector<int> rot = perm;
    for (int r = 1; r < a.n; ++r) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      best = std::min(best, rot);
    }
    chambers.insert(best);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return static_cast<long long>(chambers.size());
}

}  // namespace cyclotile
