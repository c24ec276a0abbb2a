#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "cyclotile/dissect.hpp"

namespace cyclotile {

// M: n labeled points on the projective line; tiles are plain n-gons up
//    to rotation and reflection.
// Z: n labeled points on the circle; tiles are symmetric 2n-gons up to
//    rotation.
enum class Space { M, Z };

SymmetryGroup space_group(Space s, int n);

// Canonical labeled polygons tiling the space: (n-1)!/2 for M, (n-1)! for Z.
std::vector<LabeledPolygon> tiles(Space s, int n);

// Tiles of the barred-label cover of the Z space: antipodal sides carry
// i and -i, canonical under rotation.
std::vector<LabeledPolygon> cover_tiles(int n);

// Reflects the piece of the polygon on one side of c (the arc from c.a
// counterclockwise to c.b); the other side gives the same dihedral class.
// Result is canonicalized under the dihedral group.
std::pair<LabeledPolygon, Dissection> twist_plain(const LabeledPolygon& p,
                                                  const Dissection& d, Chord c);

// Twist along a chord class of a symmetric polygon: an antipodal pair
// reflects its two outer pieces in place; a diameter reflects the whole
// polygon across its axis.  Result is canonicalized under rotations.
std::pair<LabeledPolygon, Dissection> twist_sym(const LabeledPolygon& p,
                                                const Dissection& d,
                                                const ChordClass& cc);

// Orbit minimum of (p, d) under the space symmetry group together with
// twists along chord classes present in the (evolving) dissection.
DissectedPolygon cell_class_of(const LabeledPolygon& p, const Dissection& d, Space s);

namespace detail {
// Uncanonicalized twist along cc (an involution); the public twist
// operations are this composed with canonicalization.
DissectedPolygon raw_twist(const DissectedPolygon& dp, const ChordClass& cc);
}  // namespace detail

struct CellClass {
  DissectedPolygon rep;
  int codim = 0;
};

struct Incidence {
  int dim = 0;        // dimension of the cell
  int cell = 0;       // index into cells[dim]
  int tile = 0;       // index into tile list
  Dissection slot;    // the face of that tile mapping onto the cell
  int mult = 1;
};

struct CellComplex {
  int top_dim = 0;
  std::vector<LabeledPolygon> tile_polys;
  std::vector<Dissection> tile_bases;  // base dissection per tile (empty for full spaces)
  std::vector<std::vector<CellClass>> cells;  // cells[d], d = 0..top_dim
  std::vector<Incidence> incidences;

  // Directed boundary traversals, populated when top_dim == 2: per tile,
  // the cyclic sequence of its boundary edge cells with a direction sign
  // relative to each edge cell's canonical endpoint order.
  struct BoundaryStep {
    int edge_cell = 0;  // index into cells[1]
    int direction = 0;  // +1 or -1
  };
  std::vector<std::vector<BoundaryStep>> boundary;
};

struct BuildLimits {
  int m_max = 6;
  int z_max = 5;
  int cover_max = 4;
};

struct BuildOptions {
  BuildLimits limits;
  // Shuffles internal processing order; the result must not depend on it.
  std::optional<std::uint64_t> shuffle_seed;
};

CellComplex build_complex(Space s, int n, const BuildOptions& opts = {});
CellComplex build_cover_complex(int n, const BuildOptions& opts = {});

// The subcomplex of cells whose dissection contains a class separating
// exactly the sides labeled by `label_set` (a diameter when all labels).
CellComplex build_stratum(int n, const std::vector<int>& label_set,
                          const BuildOptions& opts = {});

struct Stratum {
  std::vector<int> label_set;
  CellComplex complex;
};

// One stratum per (k+1)-subset of {1..n}.
std::vector<Stratum> strata_census(int n, int k, const BuildOptions& opts = {});

// Label set cut off by a chord class of a symmetric/cover 2n-gon (the
// labels on an outer arc; all n labels for a diameter).
std::vector<int> separated_labels(const LabeledPolygon& p, const ChordClass& cc);

}  // namespace cyclotile
