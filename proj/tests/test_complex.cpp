#include <algorithm>
#include <numeric>
#include <random>

#include "doctest.h"

#include "cyclotile/complex.hpp"

using namespace cyclotile;

namespace {

// Permute tiles and cells consistently; analytics must not care.
CellComplex permuted(const CellComplex& c, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  CellComplex out;
  out.top_dim = c.top_dim;
  std::vector<int> tile_perm(c.tile_polys.size());
  std::iota(tile_perm.begin(), tile_perm.end(), 0);
  std::shuffle(tile_perm.begin(), tile_perm.end(), rng);  // new index per old
  out.tile_polys.resize(c.tile_polys.size());
  out.tile_bases.resize(c.tile_bases.size());
  for (size_t t = 0; t < c.tile_polys.size(); ++t) {
    out.tile_polys[tile_perm[t]] = c.tile_polys[t];
    out.tile_bases[tile_perm[t]] = c.tile_bases[t];
  }
  std::vector<std::vector<int>> cell_perm(c.cells.size());
  out.cells.resize(c.cells.size());
  for (size_t d = 0; d < c.cells.size(); ++d) {
    cell_perm[d].resize(c.cells[d].size());
    std::iota(cell_perm[d].begin(), cell_perm[d].end(), 0);
    std::shuffle(cell_perm[d].begin(), cell_perm[d].end(), rng);
    out.cells[d].resize(c.cells[d].size());
    for (size_t i = 0; i < c.cells[d].size(); ++i)
      out.cells[d][cell_perm[d][i]] = c.cells[d][i];
  }
  for (Incidence inc : c.incidences) {
    inc.cell = cell_perm[inc.dim][inc.cell];
    inc.tile = tile_perm[inc.tile];
    out.incidences.push_back(inc);
  }
  if (!c.boundary.empty()) {
    out.boundary.resize(c.boundary.size());
    for (size_t t = 0; t < c.boundary.size(); ++t) {
      auto word = c.boundary[t];
      for (auto& step : word) step.edge_cell = cell_perm[1][step.edge_cell];
      out.boundary[tile_perm[t]] = word;
    }
  }
  return out;
}

// Disjoint union with shifted indices.
CellComplex disjoint_union(const CellComplex& a, const CellComplex& b) {
  REQUIRE(a.top_dim == b.top_dim);
  CellComplex out = a;
  int tile_shift = static_cast<int>(a.tile_polys.size());
  std::vector<int> cell_shift(a.cells.size());
  for (size_t d = 0; d < a.cells.size(); ++d)
    cell_shift[d] = static_cast<int>(a.cells[d].size());
  out.tile_polys.insert(out.tile_polys.end(), b.tile_polys.begin(), b.tile_polys.end());
  out.tile_bases.insert(out.tile_bases.end(), b.tile_bases.begin(), b.tile_bases.end());
  for (size_t d = 0; d < b.cells.size(); ++d)
    out.cells[d].insert(out.cells[d].end(), b.cells[d].begin(), b.cells[d].end());
  for (Incidence inc : b.incidences) {
    inc.cell += cell_shift[inc.dim];
    inc.tile += tile_shift;
    out.incidences.push_back(inc);
  }
  for (size_t t = 0; t < b.boundary.size(); ++t) {
    auto word = b.boundary[t];
    for (auto& step : word) step.edge_cell += cell_shift[1];
    out.boundary.push_back(word);
  }
  return out;
}

}  // namespace

TEST_CASE("euler characteristics of the built complexes") {
  CHECK(euler(build_complex(Space::Z, 2)) == 0);
  CHECK(euler(build_complex(Space::Z, 3)) == -1);
  CHECK(euler(build_complex(Space::Z, 4)) == 0);
  CHECK(euler(build_complex(Space::M, 4)) == 0);
  CHECK(euler(build_complex(Space::M, 5)) == -3);
}

TEST_CASE("odd-dimensional complexes have zero euler characteristic") {
  CHECK(euler(build_complex(Space::Z, 4)) == 0);   // dim 3
  CHECK(euler(build_complex(Space::M, 6)) == 0);   // dim 3
  CHECK(euler(build_complex(Space::Z, 2)) == 0);   // dim 1
}

TEST_CASE("pseudomanifold checks") {
  CHECK(pseudomanifold(build_complex(Space::Z, 2)));
  CHECK(pseudomanifold(build_complex(Space::Z, 3)));
  CHECK(pseudomanifold(build_complex(Space::M, 5)));
  CHECK(pseudomanifold(build_cover_complex(3)));

  // constructed negative case: one segment with a dangling endpoint
  CellComplex dangling;
  dangling.top_dim = 1;
  dangling.tile_polys = {LabeledPolygon::plain({1, 2, 3, 4})};
  dangling.tile_bases = {Dissection{}};
  dangling.cells.resize(2);
  DissectedPolygon rep{dangling.tile_polys[0], Dissection{}};
  dangling.cells[1] = {CellClass{rep, 0}};
  dangling.cells[0] = {CellClass{rep, 1}};
  dangling.incidences = {Incidence{0, 0, 0, Dissection{}, 1}};
  CHECK_FALSE(pseudomanifold(dangling));
}

TEST_CASE("codim incidence counts are powers of two") {
  CellComplex m5 = build_complex(Space::M, 5);
  CHECK(codim_incidence(m5, 1));
  CHECK(codim_incidence(m5, 2));
  CellComplex m4 = build_complex(Space::M, 4);
  CHECK(codim_incidence(m4, 1));
  CellComplex z3 = build_complex(Space::Z, 3);
  CHECK(codim_incidence(z3, 1));
  CHECK(codim_incidence(z3, 2));
  CHECK_THROWS_AS(codim_incidence(z3, 5), std::invalid_argument);
}

TEST_CASE("surface classification of the glued spaces") {
  SurfaceType z3 = classify_surface(build_complex(Space::Z, 3));
  CHECK_FALSE(z3.orientable);
  CHECK(z3.parameter == 3);

  SurfaceType m5 = classify_surface(build_complex(Space::M, 5));
  CHECK_FALSE(m5.orientable);
  CHECK(m5.parameter == 5);

  for (const Stratum& s : strata_census(4, 2)) {
    SurfaceType t = classify_surface(s.complex);
    CHECK(t.orientable);
    CHECK(t.parameter == 1);
  }
}

TEST_CASE("surface classification preconditions throw by name") {
  CHECK_THROWS_WITH_AS(classify_surface(build_complex(Space::Z, 2)),
                       doctest::Contains("topDim"), std::invalid_argument);
  CellComplex two = disjoint_union(build_complex(Space::Z, 3), build_complex(Space::Z, 3));
  CHECK_THROWS_WITH_AS(classify_surface(two), doctest::Contains("connected"),
                       std::invalid_argument);
}

TEST_CASE("classification is invariant under relabeling") {
  CellComplex z3 = build_complex(Space::Z, 3);
  CellComplex m5 = build_complex(Space::M, 5);
  for (std::uint64_t seed : {2ull, 31ull, 444ull}) {
    CHECK(classify_surface(permuted(z3, seed)) == classify_surface(z3));
    CHECK(classify_surface(permuted(m5, seed)) == classify_surface(m5));
  }
}

TEST_CASE("euler characteristic adds over components") {
  CellComplex z3 = build_complex(Space::Z, 3);
  CellComplex two = disjoint_union(z3, z3);
  CHECK(euler(two) == 2 * euler(z3));
  CHECK(connected(z3));
  CHECK_FALSE(connected(two));
}

TEST_CASE("built complexes are connected") {
  for (int n = 1; n <= 5; ++n) CHECK(connected(build_complex(Space::Z, n)));
  for (int n = 3; n <= 6; ++n) CHECK(connected(build_complex(Space::M, n)));
  CHECK(connected(build_cover_complex(3)));
}

TEST_CASE("2^k slot multiplicity holds across every built complex") {
  auto check_all = [](const CellComplex& c) {
    for (int k = 0; k <= c.top_dim; ++k) CHECK(codim_incidence(c, k));
  };
  for (int n = 1; n <= 5; ++n) check_all(build_complex(Space::Z, n));
  for (int n = 3; n <= 6; ++n) check_all(build_complex(Space::M, n));
  check_all(build_cover_complex(3));
}

TEST_CASE("top-range cell counts match the slot-count arithmetic") {
  // slots at codim k total (tile count) * f_k(tile polytope); dividing by
  // the 2^k multiplicity predicts the cell census
  CellComplex m6 = build_complex(Space::M, 6);
  CHECK(cell_counts(m6) == std::vector<long long>{105, 315, 270, 60});
  CHECK(euler(m6) == 0);
  CellComplex z5 = build_complex(Space::Z, 5);
  CHECK(cell_counts(z5) == std::vector<long long>{105, 420, 540, 240, 24});
  CHECK(euler(z5) == 9);
  // the arithmetic itself: 24 tiles of W5 with f = (70,140,90,20)
  CHECK(24 * 70 / 16 == 105);
  CHECK(24 * 140 / 8 == 420);
  CHECK(24 * 90 / 4 == 540);
  CHECK(24 * 20 / 2 == 240);
}
