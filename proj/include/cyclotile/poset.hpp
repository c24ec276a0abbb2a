#pragma once

#include <cstdint>
#include <vector>

#include "cyclotile/dissect.hpp"

namespace cyclotile {

// Canonical integer encoding of a face (chord list, tube masks, ...).
using FaceKey = std::vector<int>;

// Graded face lattice.  ranks[k] holds the codim-k faces in sorted order;
// covers[k] links each codim-k face to the codim-(k-1) faces obtained by
// deleting one class (the faces that contain it).
struct FacePoset {
  int dim = 0;
  std::vector<std::vector<FaceKey>> ranks;
  std::vector<std::vector<std::pair<int, int>>> covers;  // covers[k]: (idx@k, idx@k-1)

  long long face_count() const;
};

// Builds the Hasse data from per-rank keys and a one-step deletion map.
FacePoset build_graded_poset(int dim, std::vector<std::vector<FaceKey>> ranks,
                             const std::vector<std::vector<std::vector<FaceKey>>>& parents);

FacePoset associahedron(int n);  // n >= 2, faces of K_n, dim n-2
FacePoset cyclohedron(int n);    // n >= 1, faces of W_n, dim n-1

struct FVector {
  std::vector<long long> counts;  // counts[i] = number of i-dimensional faces
  friend bool operator==(const FVector&, const FVector&) = default;
};

struct HVector {
  std::vector<long long> coeffs;  // h_0..h_dim, h_k the coefficient of t^(dim-k)
  friend bool operator==(const HVector&, const HVector&) = default;
};

FVector f_vector(const FacePoset& p);

// h(t) = sum_i f_i (t-1)^i, valid for simple polytopes.
HVector h_vector(const FVector& f);

// Product decomposition of a face of W_n: cutting the 2n-gon along all
// chords of the dissection leaves one centrally symmetric piece (W_central,
// degenerate when a diameter is present) and antipodal pairs of outer
// pieces, each pair with s sides contributing a K_{s-1} factor.
struct FaceFactorization {
  int central = 0;
  std::vector<int> outer;  // sorted multiset of associahedron indices
  friend bool operator==(const FaceFactorization&, const FaceFactorization&) = default;
};

FaceFactorization face_factor(int n, const Dissection& d);

FaceKey face_key(const Dissection& d);

}  // namespace cyclotile
