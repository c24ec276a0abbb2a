#pragma once

#include <vector>

#include "cyclotile/poset.hpp"

namespace cyclotile {

enum class DiagramKind { Path, Cycle };

struct Diagram {
  DiagramKind kind = DiagramKind::Path;
  int nodes = 0;
};

// A nonempty proper node subset inducing a connected subdiagram.
struct Tube {
  std::vector<int> nodes;  // sorted
  friend auto operator<=>(const Tube&, const Tube&) = default;
};

using Tubing = std::vector<Tube>;

std::vector<Tube> tubes(const Diagram& d);

bool tubes_compatible(const Tube& a, const Tube& b, const Diagram& d);

// Faces are tubings graded by tube count; the empty tubing is the top face.
FacePoset tubing_poset(const Diagram& d);

// Rank- and cover-preserving bijection test (backtracking with iterated
// degree refinement).  Throws ResourceError past the search budget.
bool poset_iso(const FacePoset& a, const FacePoset& b);

enum class ArrangementKind { Linear, Affine };

struct ArrangementDescriptor {
  ArrangementKind kind = ArrangementKind::Linear;
  int n = 0;
};

// Number of codim-k minimal building set elements, found by enumerating
// the arrangement's intersection data rather than a closed form.
long long building_set_count(const ArrangementDescriptor& a, int k);

// Chambers: orderings up to reversal (linear, projectivized) or up to
// cyclic rotation (affine, on the torus), counted by enumeration.
long long chamber_count(const ArrangementDescriptor& a);

}  // namespace cyclotile
