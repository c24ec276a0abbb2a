#include "cyclotile/moduli.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <random>
#include <set>
#include <sstream>

namespace cyclotile {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

void apply_group_inplace(LabeledPolygon& poly, std::vector<ChordClass>& classes,
                         const GroupElement& g) {
  const int m = poly.sides;
  std::vector<Label> old = poly.labels;
  for (int i = 0; i < m; ++i) poly.labels[g.apply_slot(i, m)] = old[i];
  for (auto& cc : classes) {
    for (auto& c : cc.members) {
      int u = g.apply_vertex(c.a, m);
      int v = g.apply_vertex(c.b, m);
      c = Chord{std::min(u, v), std::max(u, v)};
    }
    std::sort(cc.members.begin(), cc.members.end());
  }
}

void reflect_arc_inplace(LabeledPolygon& poly, std::vector<ChordClass>& classes,
                         int start, int len) {
  const int m = poly.sides;
  std::vector<Label> old = poly.labels;
  for (int o = 0; o < len; ++o)
    poly.labels[mod(start + len - 1 - o, m)] = old[mod(start + o, m)];
  for (auto& cc : classes) {
    for (auto& c : cc.members) {
      int oa = mod(c.a - start, m);
      int ob = mod(c.b - start, m);
      if (oa <= len && ob <= len) {
        int u = mod(start + len - oa, m);
        int v = mod(start + len - ob, m);
        c = Chord{std::min(u, v), std::max(u, v)};
      }
    }
    std::sort(cc.members.begin(), cc.members.end());
  }
}

// The index maps of one twist, so that a dissection and any marker chords
// can be transported through the same reflection.
struct TwistGeometry {
  bool whole = false;
  GroupElement reflection;                // when whole
  std::vector<std::pair<int, int>> arcs;  // (start, len) otherwise
};

TwistGeometry twist_geometry(const LabeledPolygon& p, const ChordClass& cc) {
  TwistGeometry geo;
  const int m = p.sides;
  if (p.mode == LabelMode::Plain) {
    const Chord c = cc.members.at(0);
    geo.arcs.push_back({c.a, c.b - c.a});
    return geo;
  }
  const int n = p.half();
  if (cc.members.size() == 1) {
    geo.whole = true;
    geo.reflection = GroupElement{mod(2 * cc.members[0].a, m), true};
    return geo;
  }
  for (const Chord& c : cc.members) {
    int span = c.b - c.a;
    if (span < n)
      geo.arcs.push_back({c.a, span});
    else
      geo.arcs.push_back({c.b, m - span});
  }
  return geo;
}

void apply_geometry(LabeledPolygon& poly, std::vector<ChordClass>& classes,
                    const TwistGeometry& geo) {
  if (geo.whole) {
    apply_group_inplace(poly, classes, geo.reflection);
  } else {
    for (auto [start, len] : geo.arcs) reflect_arc_inplace(poly, classes, start, len);
  }
  std::sort(classes.begin(), classes.end());
}

DissectedPolygon twisted(const DissectedPolygon& dp, const ChordClass& cc) {
  LabeledPolygon poly = dp.poly;
  std::vector<ChordClass> classes = dp.diss.classes;
  apply_geometry(poly, classes, twist_geometry(dp.poly, cc));
  return DissectedPolygon{std::move(poly), Dissection{std::move(classes)}};
}

long long orbit_cap(const SymmetryGroup& g, int codim) {
  return static_cast<long long>(g.order()) * (1LL << codim) * 8;
}

// Closure of (p, d) under the symmetry group and twists along chord
// classes of the evolving dissection.  Keys are canonical encodings; the
// map is ordered, so begin() is the orbit minimum.
std::map<std::vector<int>, DissectedPolygon> twist_closure(const DissectedPolygon& start,
                                                           const SymmetryGroup& g) {
  std::map<std::vector<int>, DissectedPolygon> seen;
  const long long cap = orbit_cap(g, start.diss.codim());
  DissectedPolygon first = canonicalize(start, g);
  std::queue<DissectedPolygon> queue;
  seen[encode(first)] = first;
  queue.push(std::move(first));
  while (!queue.empty()) {
    DissectedPolygon cur = std::move(queue.front());
    queue.pop();
    for (const ChordClass& cc : cur.diss.classes) {
      DissectedPolygon next = canonicalize(twisted(cur, cc), g);
      std::vector<int> key = encode(next);
      if (seen.count(key)) continue;
      if (static_cast<long long>(seen.size()) >= cap)
        throw ResourceError("twist closure exceeded its orbit cap");
      seen[std::move(key)] = next;
      queue.push(std::move(next));
    }
  }
  return seen;
}

void check_space_pair(Space s, const LabeledPolygon& p, const Dissection& d) {
  if (s == Space::M)
    require(p.mode == LabelMode::Plain, "M-space expects a plain polygon");
  else
    require(p.mode != LabelMode::Plain, "Z-space expects a symmetric polygon");
  validate_pair(p, d);
}

}  // namespace

SymmetryGroup space_group(Space s, int n) {
  if (s == Space::M) return SymmetryGroup{GroupKind::Dihedral, n};
  return SymmetryGroup{GroupKind::RotationsOnly, 2 * n};
}

std::vector<LabeledPolygon> tiles(Space s, int n) {
  std::set<LabeledPolygon> out;
  if (s == Space::M) {
    require(n >= 3, "M-space needs n >= 3");
    SymmetryGroup g = space_group(s, n);
    std::vector<Label> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      DissectedPolygon dp{LabeledPolygon::plain(perm), Dissection{}};
      out.insert(canonicalize(dp, g).poly);
    } while (std::next_permutation(perm.begin(), perm.end()));
  } else {
    require(n >= 1, "Z-space needs n >= 1");
    SymmetryGroup g = space_group(s, n);
    std::vector<Label> perm(n);
    std::iota(perm.begin(), perm.end(), 1);
    do {
      std::vector<Label> labels = perm;
      labels.insert(labels.end(), perm.begin(), perm.end());
      DissectedPolygon dp{LabeledPolygon::symmetric(labels), Dissection{}};
      out.insert(canonicalize(dp, g).poly);
    } while (std::next_permutation(perm.begin(), perm.end()));
  }
  return {out.begin(), out.end()};
}

std::vector<LabeledPolygon> cover_tiles(int n) {
  require(n >= 1, "cover needs n >= 1");
  SymmetryGroup g{GroupKind::RotationsOnly, 2 * n};
  std::set<LabeledPolygon> out;
  std::vector<Label> perm(n);
  std::iota(perm.begin(), perm.end(), 1);
  do {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      std::vector<Label> labels(2 * n);
      for (int i = 0; i < n; ++i) {
        labels[i] = (mask >> i & 1u) ? -perm[i] : perm[i];
        labels[i + n] = -labels[i];
      }
      DissectedPolygon dp{LabeledPolygon::cover(labels), Dissection{}};
      out.insert(canonicalize(dp, g).poly);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return {out.begin(), out.end()};
}

std::pair<LabeledPolygon, Dissection> twist_plain(const LabeledPolygon& p,
                                                  const Dissection& d, Chord c) {
  require(p.mode == LabelMode::Plain, "twist_plain expects a plain polygon");
  validate_pair(p, d);
  ChordClass cc{{c}};
  require(d.contains(cc), "chord is not part of the dissection");
  DissectedPolygon out =
      canonicalize(twisted(DissectedPolygon{p, d}, cc), SymmetryGroup{GroupKind::Dihedral, p.sides});
  return {out.poly, out.diss};
}

std::pair<LabeledPolygon, Dissection> twist_sym(const LabeledPolygon& p,
                                                const Dissection& d,
                                                const ChordClass& cc) {
  require(p.mode != LabelMode::Plain, "twist_sym expects a symmetric polygon");
  validate_pair(p, d);
  require(d.contains(cc), "chord class is not part of the dissection");
  DissectedPolygon out = canonicalize(twisted(DissectedPolygon{p, d}, cc),
                                      SymmetryGroup{GroupKind::RotationsOnly, p.sides});
  return {out.poly, out.diss};
}

DissectedPolygon cell_class_of(const LabeledPolygon& p, const Dissection& d, Space s) {
  check_space_pair(s, p, d);
  SymmetryGroup g = s == Space::M ? SymmetryGroup{GroupKind::Dihedral, p.sides}
                                  : SymmetryGroup{GroupKind::RotationsOnly, p.sides};
  auto orbit = twist_closure(DissectedPolygon{p, d}, g);
  return orbit.begin()->second;
}

namespace detail {

DissectedPolygon raw_twist(const DissectedPolygon& dp, const ChordClass& cc) {
  validate_pair(dp.poly, dp.diss);
  require(dp.diss.contains(cc), "chord class is not part of the dissection");
  return twisted(dp, cc);
}

}  // namespace detail

namespace {

// ---- augmented orbits: an edge dissection plus one marked endpoint class,
// used to give each boundary slot a direction on its edge cell.

struct AugState {
  LabeledPolygon poly;
  Dissection edge;
  ChordClass marker;
};

std::vector<int> encode_aug(const AugState& s) {
  std::vector<int> key = encode(DissectedPolygon{s.poly, s.edge});
  key.push_back(-1);
  for (const Chord& c : s.marker.members) {
    key.push_back(c.a);
    key.push_back(c.b);
  }
  return key;
}

AugState apply_group_aug(const GroupElement& g, const AugState& s) {
  AugState out = s;
  std::vector<ChordClass> edge_classes = s.edge.classes;
  apply_group_inplace(out.poly, edge_classes, g);
  std::sort(edge_classes.begin(), edge_classes.end());
  out.edge = Dissection{std::move(edge_classes)};
  std::vector<ChordClass> marker{s.marker};
  LabeledPolygon scratch = s.poly;
  apply_group_inplace(scratch, marker, g);
  out.marker = marker[0];
  return out;
}

AugState canonical_aug(const AugState& s, const SymmetryGroup& g) {
  AugState best = s;
  std::vector<int> best_key = encode_aug(s);
  for (const GroupElement& e : elements(g)) {
    AugState cand = apply_group_aug(e, s);
    std::vector<int> key = encode_aug(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

AugState twisted_aug(const AugState& s, const ChordClass& cc) {
  TwistGeometry geo = twist_geometry(s.poly, cc);
  AugState out = s;
  std::vector<ChordClass> edge_classes = s.edge.classes;
  apply_geometry(out.poly, edge_classes, geo);
  out.edge = Dissection{std::move(edge_classes)};
  std::vector<ChordClass> marker{s.marker};
  LabeledPolygon scratch = s.poly;
  apply_geometry(scratch, marker, geo);
  out.marker = marker[0];
  return out;
}

std::set<std::vector<int>> aug_orbit(const AugState& start, const SymmetryGroup& g) {
  std::set<std::vector<int>> seen;
  const long long cap = orbit_cap(g, start.edge.codim() + 1);
  AugState first = canonical_aug(start, g);
  std::queue<AugState> queue;
  seen.insert(encode_aug(first));
  queue.push(std::move(first));
  while (!queue.empty()) {
    AugState cur = std::move(queue.front());
    queue.pop();
    for (const ChordClass& cc : cur.edge.classes) {
      AugState next = canonical_aug(twisted_aug(cur, cc), g);
      std::vector<int> key = encode_aug(next);
      if (seen.count(key)) continue;
      if (static_cast<long long>(seen.size()) >= cap)
        throw ResourceError("augmented twist closure exceeded its orbit cap");
      seen.insert(std::move(key));
      queue.push(std::move(next));
    }
  }
  return seen;
}

ChordClass extra_class(const Dissection& finer, const Dissection& coarser) {
  for (const ChordClass& cc : finer.classes)
    if (!coarser.contains(cc)) return cc;
  throw std::logic_error("refinement does not extend its base");
}

CellComplex assemble(std::vector<LabeledPolygon> tile_polys,
                     std::vector<Dissection> tile_bases, const SymmetryGroup& group,
                     int top_dim, std::optional<std::uint64_t> seed) {
  CellComplex cx;
  cx.top_dim = top_dim;
  cx.tile_polys = std::move(tile_polys);
  cx.tile_bases = std::move(tile_bases);
  const size_t ntiles = cx.tile_polys.size();

  // every (tile, slot) pair, slot = base extended by 0..top_dim classes
  std::vector<std::pair<int, Dissection>> work;
  for (size_t t = 0; t < ntiles; ++t) {
    const LabeledPolygon& poly = cx.tile_polys[t];
    for (int extra = 0; extra <= top_dim; ++extra)
      for (Dissection& d : enum_extensions(poly.sides, poly.mode, cx.tile_bases[t], extra))
        work.push_back({static_cast<int>(t), std::move(d)});
  }
  if (seed) {
    std::mt19937_64 rng(*seed);
    std::shuffle(work.begin(), work.end(), rng);
  }

  struct OrbitInfo {
    DissectedPolygon rep;
    int rel_codim = 0;
  };
  std::map<std::vector<int>, int> state_to_orbit;
  std::vector<OrbitInfo> orbits;
  std::vector<std::pair<int, int>> slot_orbit;  // parallel to work
  slot_orbit.reserve(work.size());

  const int base_codim = ntiles ? cx.tile_bases[0].codim() : 0;
  for (const auto& [t, slot] : work) {
    DissectedPolygon state = canonicalize(DissectedPolygon{cx.tile_polys[t], slot}, group);
    std::vector<int> key = encode(state);
    auto it = state_to_orbit.find(key);
    int orbit_id;
    if (it != state_to_orbit.end()) {
      orbit_id = it->second;
    } else {
      orbit_id = static_cast<int>(orbits.size());
      auto closure = twist_closure(state, group);
      orbits.push_back({closure.begin()->second, slot.codim() - base_codim});
      for (auto& [k, st] : closure) state_to_orbit[k] = orbit_id;
    }
    slot_orbit.push_back({t, orbit_id});
  }

  // fix cell indices: per dimension, sorted by representative encoding
  cx.cells.assign(top_dim + 1, {});
  std::vector<std::pair<std::vector<int>, int>> order;  // (rep key, orbit id)
  for (size_t i = 0; i < orbits.size(); ++i)
    order.push_back({encode(orbits[i].rep), static_cast<int>(i)});
  std::sort(order.begin(), order.end());
  std::vector<std::pair<int, int>> orbit_cell(orbits.size());  // (dim, index)
  for (const auto& [key, id] : order) {
    int dim = top_dim - orbits[id].rel_codim;
    orbit_cell[id] = {dim, static_cast<int>(cx.cells[dim].size())};
    cx.cells[dim].push_back({orbits[id].rep, orbits[id].rel_codim});
  }

  for (size_t w = 0; w < work.size(); ++w) {
    auto [t, orbit_id] = slot_orbit[w];
    auto [dim, idx] = orbit_cell[orbit_id];
    cx.incidences.push_back({dim, idx, t, work[w].second, 1});
  }
  std::sort(cx.incidences.begin(), cx.incidences.end(),
            [](const Incidence& a, const Incidence& b) {
              return std::tie(a.dim, a.cell, a.tile, a.slot) <
                     std::tie(b.dim, b.cell, b.tile, b.slot);
            });

  if (top_dim != 2) return cx;

  // Directed boundary traversals for orientability analysis.  Each edge
  // cell gets a reference endpoint (the lesser of its two refinements on
  // the representative); a slot's direction says whether its traversal
  // enters through the image of that endpoint.
  auto edge_cell_of = [&](const std::vector<int>& state_key) {
    auto [dim, idx] = orbit_cell[state_to_orbit.at(state_key)];
    if (dim != 1) throw std::logic_error("boundary slot is not an edge cell");
    return idx;
  };

  struct EdgeGerm {
    std::set<std::vector<int>> orbit_p;  // augmented orbit of the reference endpoint
  };
  std::vector<EdgeGerm> germs(cx.cells[1].size());
  for (size_t i = 0; i < cx.cells[1].size(); ++i) {
    const DissectedPolygon& rep = cx.cells[1][i].rep;
    std::vector<Dissection> ends =
        enum_extensions(rep.poly.sides, rep.poly.mode, rep.diss, 1);
    if (ends.size() != 2)
      throw std::logic_error("edge cell does not have exactly two endpoints");
    ChordClass p_marker = extra_class(ends[0], rep.diss);
    ChordClass q_marker = extra_class(ends[1], rep.diss);
    germs[i].orbit_p = aug_orbit(AugState{rep.poly, rep.diss, p_marker}, group);
    AugState q_state = canonical_aug(AugState{rep.poly, rep.diss, q_marker}, group);
    if (germs[i].orbit_p.count(encode_aug(q_state)))
      throw std::runtime_error(
          "edge cell is identified with itself endpoint-swapped; not a surface gluing");
  }

  cx.boundary.resize(ntiles);
  for (size_t t = 0; t < ntiles; ++t) {
    const LabeledPolygon& poly = cx.tile_polys[t];
    const Dissection& base = cx.tile_bases[t];
    std::vector<Dissection> edges = enum_extensions(poly.sides, poly.mode, base, 1);
    std::vector<Dissection> verts = enum_extensions(poly.sides, poly.mode, base, 2);
    auto contains_edge = [&](const Dissection& v, const Dissection& e) {
      for (const ChordClass& cc : e.classes)
        if (!v.contains(cc)) return false;
      return true;
    };
    std::vector<std::vector<int>> edge_verts(edges.size());
    std::vector<std::vector<int>> vert_edges(verts.size());
    for (size_t e = 0; e < edges.size(); ++e)
      for (size_t v = 0; v < verts.size(); ++v)
        if (contains_edge(verts[v], edges[e])) {
          edge_verts[e].push_back(static_cast<int>(v));
          vert_edges[v].push_back(static_cast<int>(e));
        }
    for (const auto& vs : edge_verts)
      if (vs.size() != 2) throw std::logic_error("tile edge without two endpoints");
    for (const auto& es : vert_edges)
      if (es.size() != 2) throw std::logic_error("tile vertex without two edges");

    // walk the boundary cycle
    std::vector<CellComplex::BoundaryStep> word;
    int e = 0;
    int from_v = edge_verts[0][0];
    for (size_t step = 0; step < edges.size(); ++step) {
      int to_v = edge_verts[e][0] == from_v ? edge_verts[e][1] : edge_verts[e][0];
      // direction of this traversal on the edge cell
      const Dissection& ed = edges[e];
      ChordClass marker_from = extra_class(verts[from_v], ed);
      int cell = edge_cell_of(encode(canonicalize(DissectedPolygon{poly, ed}, group)));
      AugState from_state = canonical_aug(AugState{poly, ed, marker_from}, group);
      int dir;
      if (germs[cell].orbit_p.count(encode_aug(from_state))) {
        dir = +1;
      } else {
        ChordClass marker_to = extra_class(verts[to_v], ed);
        AugState to_state = canonical_aug(AugState{poly, ed, marker_to}, group);
        if (!germs[cell].orbit_p.count(encode_aug(to_state)))
          throw std::logic_error("boundary slot does not land on its edge cell");
        dir = -1;
      }
      word.push_back({cell, dir});
      from_v = to_v;
      e = vert_edges[to_v][0] == e ? vert_edges[to_v][1] : vert_edges[to_v][0];
    }
    cx.boundary[t] = std::move(word);
  }
  return cx;
}

}  // namespace

CellComplex build_complex(Space s, int n, const BuildOptions& opts) {
  if (s == Space::M) {
    require(n >= 3, "M-space needs n >= 3");
    if (n > opts.limits.m_max)
      throw ResourceError("M-space n=" + std::to_string(n) + " exceeds cap " +
                          std::to_string(opts.limits.m_max) +
                          " (raise with --cap-m or CYCLOTILE_CAP_M)");
    std::vector<LabeledPolygon> ts = tiles(s, n);
    size_t count = ts.size();
    return assemble(std::move(ts), std::vector<Dissection>(count), space_group(s, n),
                    n - 3, opts.shuffle_seed);
  }
  require(n >= 1, "Z-space needs n >= 1");
  if (n > opts.limits.z_max)
    throw ResourceError("Z-space n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(opts.limits.z_max) +
                        " (raise with --cap-z or CYCLOTILE_CAP_Z)");
  std::vector<LabeledPolygon> ts = tiles(s, n);
  size_t count = ts.size();
  return assemble(std::move(ts), std::vector<Dissection>(count), space_group(s, n),
                  n - 1, opts.shuffle_seed);
}

CellComplex build_cover_complex(int n, const BuildOptions& opts) {
  require(n >= 1, "cover needs n >= 1");
  if (n > opts.limits.cover_max)
    throw ResourceError("cover n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(opts.limits.cover_max) +
                        " (raise with --cap-cover or CYCLOTILE_CAP_COVER)");
  std::vector<LabeledPolygon> ts = cover_tiles(n);
  size_t count = ts.size();
  return assemble(std::move(ts), std::vector<Dissection>(count),
                  SymmetryGroup{GroupKind::RotationsOnly, 2 * n}, n - 1,
                  opts.shuffle_seed);
}

std::vector<int> separated_labels(const LabeledPolygon& p, const ChordClass& cc) {
  require(p.mode != LabelMode::Plain, "separated_labels needs a symmetric polygon");
  const int m = p.sides;
  const int n = p.half();
  const Chord c = cc.members.at(0);
  int span = c.b - c.a;
  int start, len;
  if (span == n) {
    start = c.a;
    len = n;
  } else if (span < n) {
    start = c.a;
    len = span;
  } else {
    start = c.b;
    len = m - span;
  }
  std::set<int> labels;
  for (int o = 0; o < len; ++o) labels.insert(std::abs(p.labels[mod(start + o, m)]));
  return {labels.begin(), labels.end()};
}

CellComplex build_stratum(int n, const std::vector<int>& label_set,
                          const BuildOptions& opts) {
  require(n >= 2, "stratum needs n >= 2");
  if (n > opts.limits.z_max)
    throw ResourceError("Z-space n=" + std::to_string(n) + " exceeds cap " +
                        std::to_string(opts.limits.z_max) +
                        " (raise with --cap-z or CYCLOTILE_CAP_Z)");
  std::vector<int> want = label_set;
  std::sort(want.begin(), want.end());
  require(want.size() >= 2 && want.size() <= static_cast<size_t>(n),
          "stratum label set must pick between 2 and n labels");
  for (int x : want) require(x >= 1 && x <= n, "stratum label out of range");

  SymmetryGroup group = space_group(Space::Z, n);
  std::map<std::vector<int>, DissectedPolygon> top_cells;
  for (const LabeledPolygon& tile : tiles(Space::Z, n)) {
    for (const ChordClass& cc : chord_classes(2 * n, LabelMode::Symmetric)) {
      if (separated_labels(tile, cc) != want) continue;
      DissectedPolygon rep = cell_class_of(tile, Dissection{{cc}}, Space::Z);
      top_cells[encode(rep)] = rep;
    }
  }
  std::vector<LabeledPolygon> polys;
  std::vector<Dissection> bases;
  for (auto& [key, rep] : top_cells) {
    polys.push_back(rep.poly);
    bases.push_back(rep.diss);
  }
  return assemble(std::move(polys), std::move(bases), group, n - 2, opts.shuffle_seed);
}

std::vector<Stratum> strata_census(int n, int k, const BuildOptions& opts) {
  require(k >= 1 && k <= n - 1, "stratum codim out of range");
  std::vector<Stratum> out;
  std::vector<int> subset;
  auto rec = [&](auto&& self, int from) -> void {
    if (static_cast<int>(subset.size()) == k + 1) {
      out.push_back({subset, build_stratum(n, subset, opts)});
      return;
    }
    for (int x = from; x <= n; ++x) {
      subset.push_back(x);
      self(self, x + 1);
      subset.pop_back();
    }
  };
  rec(rec, 1);
  return out;
}

}  // namespace cyclotile
