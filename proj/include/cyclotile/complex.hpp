#pragma once

#include <vector>

#include "cyclotile/moduli.hpp"

namespace cyclotile {

// Closed-surface classification: chi = 2 - 2*genus when orientable,
// chi = 2 - crosscaps otherwise.
struct SurfaceType {
  bool orientable = false;
  int parameter = 0;  // genus or crosscap count
  friend bool operator==(const SurfaceType&, const SurfaceType&) = default;
};

std::vector<long long> cell_counts(const CellComplex& c);  // per dimension

long long euler(const CellComplex& c);

bool connected(const CellComplex& c);

// Every codim-1 cell carries exactly two top-cell slots.
bool pseudomanifold(const CellComplex& c);

// Every codim-k cell carries exactly 2^k (tile, slot) incidences.
bool codim_incidence(const CellComplex& c, int k);

// Requires top_dim == 2, connected, pseudomanifold; throws naming the
// violated precondition otherwise.
SurfaceType classify_surface(const CellComplex& c);

}  // namespace cyclotile
