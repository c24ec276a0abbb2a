#include "cyclotile/poset.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace cyclotile {

namespace {

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

long long FacePoset::face_count() const {
  long long total = 0;
  for (const auto& r : ranks) total += static_cast<long long>(r.size());
  return total;
}

FaceKey face_key(const Dissection& d) {
  FaceKey key;
  for (const Chord& c : d.chords()) {
    key.push_back(c.a);
    key.push_back(c.b);
  }
  return key;
}

FacePoset build_graded_poset(int dim, std::vector<std::vector<FaceKey>> ranks,
                             const std::vector<std::vector<std::vector<FaceKey>>>& parents) {
  FacePoset poset;
  poset.dim = dim;
  poset.ranks = std::move(ranks);
  poset.covers.resize(poset.ranks.size());
  for (size_t k = 1; k < poset.ranks.size(); ++k) {
    std::map<FaceKey, int> index_above;
    for (size_t i = 0; i < poset.ranks[k - 1].size(); ++i)
      index_above[poset.ranks[k - 1][i]] = static_cast<int>(i);
    for (size_t i = 0; i < poset.ranks[k].size(); ++i) {
      for (const FaceKey& parent : parents[k][i]) {
        auto it = index_above.find(parent);
        require(it != index_above.end(), "cover target missing from rank above");
        poset.covers[k].push_back({static_cast<int>(i), it->second});
      }
    }
    std::sort(poset.covers[k].begin(), poset.covers[k].end());
  }
  return poset;
}

namespace {

FacePoset poset_from_dissections(int dim, const std::vector<std::vector<Dissection>>& by_codim) {
  std::vector<std::vector<FaceKey>> ranks(by_codim.size());
  std::vector<std::vector<std::vector<FaceKey>>> parents(by_codim.size());
  for (size_t k = 0; k < by_codim.size(); ++k) {
    ranks[k].reserve(by_codim[k].size());
    parents[k].resize(by_codim[k].size());
    for (size_t i = 0; i < by_codim[k].size(); ++i) {
      const Dissection& d = by_codim[k][i];
      ranks[k].push_back(face_key(d));
      if (k == 0) continue;
      for (size_t drop = 0; drop < d.classes.size(); ++drop) {
        Dissection parent = d;
        parent.classes.erase(parent.classes.begin() + drop);
        parents[k][i].push_back(face_key(parent));
      }
    }
  }
  return build_graded_poset(dim, std::move(ranks), parents);
}

}  // namespace

FacePoset associahedron(int n) {
  require(n >= 2, "associahedron index must be at least 2");
  int dim = n - 2;
  std::vector<std::vector<Dissection>> by_codim(dim + 1);
  for (int k = 0; k <= dim; ++k) by_codim[k] = enum_dissections(n + 1, k);
  return poset_from_dissections(dim, by_codim);
}

FacePoset cyclohedron(int n) {
  require(n >= 1, "cyclohedron index must be at least 1");
  int dim = n - 1;
  std::vector<std::vector<Dissection>> by_codim(dim + 1);
  for (int k = 0; k <= dim; ++k) by_codim[k] = enum_sym_dissections(n, k);
  return poset_from_dissections(dim, by_codim);
}

FVector f_vector(const FacePoset& p) {
  FVector f;
  f.counts.resize(p.dim + 1);
  for (int i = 0; i <= p.dim; ++i)
    f.counts[i] = static_cast<long long>(p.ranks[p.dim - i].size());
  return f;
}

HVector h_vector(const FVector& f) {
  int dim = static_cast<int>(f.counts.size()) - 1;
  std::vector<long long> poly(dim + 1, 0);  // poly[j] = coefficient of t^j
  for (int i = 0; i <= dim; ++i) {
    // add f_i * (t-1)^i
    long long binom = 1;
    for (int j = i; j >= 0; --j) {
      long long sign = ((i - j) % 2 == 0) ? 1 : -1;
      poly[j] += f.counts[i] * sign * binom;
      binom = binom * j / (i - j + 1);
    }
  }
  HVector h;
  h.coeffs.resize(dim + 1);
  for (int k = 0; k <= dim; ++k) h.coeffs[k] = poly[dim - k];
  return h;
}

FaceFactorization face_factor(int n, const Dissection& d) {
  require(n >= 1, "cyclohedron index must be at least 1");
  const int m = 2 * n;
  for (const auto& cc : d.classes)
    require(cc == antipodal_class(cc.members[0], n),
            "face_factor needs an antipodally closed dissection");
  // split the polygon along every chord; pieces stay in cyclic vertex order
  std::vector<std::vector<int>> pieces;
  {
    std::vector<int> whole(m);
    for (int i = 0; i < m; ++i) whole[i] = i;
    pieces.push_back(std::move(whole));
  }
  for (const Chord& c : d.chords()) {
    for (size_t pi = 0; pi < pieces.size(); ++pi) {
      auto& piece = pieces[pi];
      auto ia = std::find(piece.begin(), piece.end(), c.a);
      auto ib = std::find(piece.begin(), piece.end(), c.b);
      if (ia == piece.end() || ib == piece.end()) continue;
      size_t pa = ia - piece.begin(), pb = ib - piece.begin();
      if (pa > pb) std::swap(pa, pb);
      std::vector<int> inner(piece.begin() + pa, piece.begin() + pb + 1);
      std::vector<int> rest;
      rest.insert(rest.end(), piece.begin(), piece.begin() + pa + 1);
      rest.insert(rest.end(), piece.begin() + pb, piece.end());
      pieces[pi] = std::move(rest);
      pieces.push_back(std::move(inner));
      break;
    }
  }

  auto antipodal_set = [&](const std::vector<int>& piece) {
    std::vector<int> img;
    img.reserve(piece.size());
    for (int v : piece) img.push_back((v + n) % m);
    std::sort(img.begin(), img.end());
    return img;
  };
  std::vector<std::vector<int>> sorted_pieces;
  for (auto& piece : pieces) {
    std::vector<int> s = piece;
    std::sort(s.begin(), s.end());
    sorted_pieces.push_back(std::move(s));
  }

  FaceFactorization out;
  out.central = 1;  // degenerate central 2-gon unless a symmetric piece exists
  std::vector<char> used(pieces.size(), 0);
  for (size_t i = 0; i < pieces.size(); ++i) {
    if (used[i]) continue;
    std::vector<int> img = antipodal_set(pieces[i]);
    if (img == sorted_pieces[i]) {
      used[i] = 1;
      out.central = static_cast<int>(pieces[i].size()) / 2;
      continue;
    }
    bool matched = false;
    for (size_t j = i + 1; j < pieces.size(); ++j) {
      if (used[j]) continue;
      if (sorted_pieces[j] == img) {
        used[i] = used[j] = 1;
        out.outer.push_back(static_cast<int>(pieces[i].size()) - 1);
        matched = true;
        break;
      }
    }
    require(matched, "face_factor: pieces do not pair antipodally");
  }
  std::sort(out.outer.begin(), out.outer.end());
  return out;
}

}  // namespace cyclotile
