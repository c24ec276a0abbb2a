#include "cyclotile/dissect.hpp"

#include <algorithm>
#include <set>
#include <sstream>
#include <unordered_set>

namespace cyclotile {

namespace {

int mod(int x, int m) {
  int r = x % m;
  return r < 0 ? r + m : r;
}

void require(bool cond, const std::string& msg) {
  if (!cond) throw std::invalid_argument(msg);
}

}  // namespace

bool chord_valid(Chord c, int sides) {
  if (sides < 3) return false;
  if (c.a < 0 || c.b >= sides || c.a >= c.b) return false;
  if (c.b - c.a < 2) return false;
  if (c.a == 0 && c.b == sides - 1) return false;
  return true;
}

Chord make_chord(int u, int v, int sides) {
  Chord c{std::min(u, v), std::max(u, v)};
  require(chord_valid(c, sides),
          "invalid chord (" + std::to_string(u) + "," + std::to_string(v) +
              ") for " + std::to_string(sides) + "-gon");
  return c;
}

bool is_diameter(Chord c, int sides) {
  return sides % 2 == 0 && c.b - c.a == sides / 2;
}

bool crosses(Chord c1, Chord c2, int sides) {
  require(chord_valid(c1, sides) && chord_valid(c2, sides),
          "crosses: invalid chord for " + std::to_string(sides) + "-gon");
  if (c1.a == c2.a || c1.a == c2.b || c1.b == c2.a || c1.b == c2.b) return false;
  auto inside = [&](int x) { return c1.a < x && x < c1.b; };
  return inside(c2.a) != inside(c2.b);
}

LabeledPolygon LabeledPolygon::plain(std::vector<Label> labels) {
  int m = static_cast<int>(labels.size());
  require(m >= 3, "plain polygon needs at least 3 sides");
  std::set<Label> distinct(labels.begin(), labels.end());
  require(static_cast<int>(distinct.size()) == m, "plain labels must be distinct");
  return LabeledPolygon{m, std::move(labels), LabelMode::Plain};
}

LabeledPolygon LabeledPolygon::symmetric(std::vector<Label> labels) {
  int m = static_cast<int>(labels.size());
  require(m >= 2 && m % 2 == 0, "symmetric polygon needs an even side count");
  int n = m / 2;
  for (int i = 0; i < n; ++i)
    require(labels[i] == labels[i + n], "antipodal sides must share a label");
  std::set<Label> distinct(labels.begin(), labels.begin() + n);
  require(static_cast<int>(distinct.size()) == n,
          "symmetric labels must be distinct within a half");
  return LabeledPolygon{m, std::move(labels), LabelMode::Symmetric};
}

LabeledPolygon LabeledPolygon::cover(std::vector<Label> labels) {
  int m = static_cast<int>(labels.size());
  require(m >= 2 && m % 2 == 0, "cover polygon needs an even side count");
  int n = m / 2;
  std::set<Label> magnitudes;
  for (int i = 0; i < n; ++i) {
    require(labels[i] != 0, "cover labels must be nonzero");
    require(labels[i + n] == -labels[i],
            "antipodal sides must carry a label and its negation");
    magnitudes.insert(std::abs(labels[i]));
  }
  require(static_cast<int>(magnitudes.size()) == n,
          "cover label magnitudes must be distinct");
  return LabeledPolygon{m, std::move(labels), LabelMode::Cover};
}

ChordClass plain_class(Chord c, int sides) {
  require(chord_valid(c, sides), "invalid chord");
  return ChordClass{{c}};
}

ChordClass antipodal_class(Chord c, int half) {
  int m = 2 * half;
  require(chord_valid(c, m), "invalid chord for 2n-gon");
  if (is_diameter(c, m)) return ChordClass{{c}};
  int u = mod(c.a + half, m);
  int v = mod(c.b + half, m);
  Chord anti{std::min(u, v), std::max(u, v)};
  std::vector<Chord> members{c, anti};
  std::sort(members.begin(), members.end());
  return ChordClass{std::move(members)};
}

bool Dissection::contains(const ChordClass& cc) const {
  return std::binary_search(classes.begin(), classes.end(), cc);
}

std::vector<Chord> Dissection::chords() const {
  std::vector<Chord> out;
  for (const auto& cc : classes)
    out.insert(out.end(), cc.members.begin(), cc.members.end());
  std::sort(out.begin(), out.end());
  return out;
}

Dissection make_dissection(std::vector<ChordClass> classes, int sides) {
  std::sort(classes.begin(), classes.end());
  for (size_t i = 0; i + 1 < classes.size(); ++i)
    require(classes[i] != classes[i + 1], "duplicate chord class");
  std::vector<Chord> all;
  for (const auto& cc : classes) {
    for (const Chord& c : cc.members) {
      require(chord_valid(c, sides), "invalid chord in dissection");
      all.push_back(c);
    }
  }
  std::sort(all.begin(), all.end());
  for (size_t i = 0; i + 1 < all.size(); ++i)
    require(all[i] != all[i + 1], "repeated chord in dissection");
  for (size_t i = 0; i < all.size(); ++i)
    for (size_t j = i + 1; j < all.size(); ++j)
      require(!crosses(all[i], all[j], sides), "crossing chords in dissection");
  return Dissection{std::move(classes)};
}

std::vector<ChordClass> chord_classes(int sides, LabelMode mode) {
  std::vector<ChordClass> out;
  if (mode == LabelMode::Plain) {
    for (int a = 0; a < sides; ++a)
      for (int b = a + 2; b < sides; ++b)
        if (chord_valid({a, b}, sides)) out.push_back(ChordClass{{Chord{a, b}}});
  } else {
    int n = sides / 2;
    std::set<ChordClass> seen;
    for (int a = 0; a < sides; ++a)
      for (int b = a + 2; b < sides; ++b)
        if (chord_valid({a, b}, sides)) seen.insert(antipodal_class({a, b}, n));
    out.assign(seen.begin(), seen.end());
  }
  std::sort(out.begin(), out.end());
  return out;
}

namespace {

bool classes_compatible(const ChordClass& x, const ChordClass& y, int sides) {
  for (const Chord& c : x.members)
    for (const Chord& d : y.members) {
      if (c == d) return false;
      if (crosses(c, d, sides)) return false;
    }
  return true;
}

std::vector<Dissection> enum_by_classes(int sides, const std::vector<ChordClass>& pool,
                                        const Dissection& base, int extra) {
  std::vector<Dissection> out;
  if (extra < 0) return out;
  // Pairwise compatibility over pool entries and against the base.
  size_t np = pool.size();
  std::vector<char> base_ok(np, 1);
  for (size_t i = 0; i < np; ++i) {
    if (base.contains(pool[i])) {
      base_ok[i] = 0;
      continue;
    }
    for (const auto& cc : base.classes)
      if (!classes_compatible(pool[i], cc, sides)) {
        base_ok[i] = 0;
        break;
      }
  }
  std::vector<std::vector<char>> compat(np, std::vector<char>(np, 0));
  for (size_t i = 0; i < np; ++i)
    for (size_t j = i + 1; j < np; ++j)
      compat[i][j] = compat[j][i] = classes_compatible(pool[i], pool[j], sides);

  std::vector<size_t> chosen;
  auto emit = [&]() {
    std::vector<ChordClass> classes = base.classes;
    for (size_t idx : chosen) classes.push_back(pool[idx]);
    std::sort(classes.begin(), classes.end());
    out.push_back(Dissection{std::move(classes)});
  };
  auto rec = [&](auto&& self, size_t from, int need) -> void {
    if (need == 0) {
      emit();
      return;
    }
    for (size_t i = from; i + need <= np; ++i) {
      if (!base_ok[i]) continue;
      bool ok = true;
      for (size_t idx : chosen)
        if (!compat[idx][i]) {
          ok = false;
          break;
        }
      if (!ok) continue;
      chosen.push_back(i);
      self(self, i + 1, need - 1);
      chosen.pop_back();
    }
  };
  rec(rec, 0, extra);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Dissection> enum_dissections(int sides, int k) {
  require(sides >= 3, "polygon needs at least 3 sides");
  if (k < 0 || k > sides - 3) return {};
  return enum_by_classes(sides, chord_classes(sides, LabelMode::Plain), Dissection{}, k);
}

std::vector<Dissection> enum_sym_dissections(int half, int k) {
  require(half >= 1, "half side count must be positive");
  if (k < 0 || k > half - 1) return {};
  if (k == 0) return {Dissection{}};
  return enum_by_classes(2 * half, chord_classes(2 * half, LabelMode::Symmetric),
                         Dissection{}, k);
}

std::vector<Dissection> enum_extensions(int sides, LabelMode mode,
                                        const Dissection& base, int extra) {
  return enum_by_classes(sides, chord_classes(sides, mode), base, extra);
}

int GroupElement::apply_vertex(int v, int sides) const {
  return reflect ? mod(shift - v, sides) : mod(v + shift, sides);
}

int GroupElement::apply_slot(int slot, int sides) const {
  // Edge (i, i+1) maps to (shift-i, shift-i-1) under reflection.
  return reflect ? mod(shift - 1 - slot, sides) : mod(slot + shift, sides);
}

std::vector<GroupElement> elements(const SymmetryGroup& g) {
  std::vector<GroupElement> out;
  for (int r = 0; r < g.sides; ++r) out.push_back({r, false});
  if (g.kind == GroupKind::Dihedral)
    for (int r = 0; r < g.sides; ++r) out.push_back({r, true});
  return out;
}

void validate_pair(const LabeledPolygon& p, const Dissection& d) {
  require(static_cast<int>(p.labels.size()) == p.sides, "label count mismatch");
  for (const auto& cc : d.classes) {
    if (p.mode == LabelMode::Plain) {
      require(cc.members.size() == 1, "plain dissection must use single chords");
      require(chord_valid(cc.members[0], p.sides), "invalid chord");
    } else {
      require(cc == antipodal_class(cc.members[0], p.half()),
              "chord class is not antipodally closed");
    }
  }
}

DissectedPolygon apply(const GroupElement& g, const DissectedPolygon& dp) {
  const int m = dp.poly.sides;
  LabeledPolygon poly = dp.poly;
  for (int i = 0; i < m; ++i) poly.labels[g.apply_slot(i, m)] = dp.poly.labels[i];
  std::vector<ChordClass> classes;
  classes.reserve(dp.diss.classes.size());
  for (const auto& cc : dp.diss.classes) {
    std::vector<Chord> members;
    members.reserve(cc.members.size());
    for (const Chord& c : cc.members) {
      int u = g.apply_vertex(c.a, m);
      int v = g.apply_vertex(c.b, m);
      members.push_back({std::min(u, v), std::max(u, v)});
    }
    std::sort(members.begin(), members.end());
    classes.push_back(ChordClass{std::move(members)});
  }
  std::sort(classes.begin(), classes.end());
  return {std::move(poly), Dissection{std::move(classes)}};
}

std::vector<int> encode(const DissectedPolygon& dp) {
  std::vector<int> out;
  out.reserve(dp.poly.labels.size() + 4 * dp.diss.classes.size());
  out.insert(out.end(), dp.poly.labels.begin(), dp.poly.labels.end());
  std::vector<Chord> cs = dp.diss.chords();
  for (const Chord& c : cs) {
    out.push_back(c.a);
    out.push_back(c.b);
  }
  return out;
}

DissectedPolygon canonicalize(const DissectedPolygon& dp, const SymmetryGroup& g) {
  require(g.sides == dp.poly.sides, "group order parameter must match side count");
  validate_pair(dp.poly, dp.diss);
  DissectedPolygon best = dp;
  std::vector<int> best_key = encode(dp);
  for (const GroupElement& e : elements(g)) {
    DissectedPolygon cand = apply(e, dp);
    std::vector<int> key = encode(cand);
    if (key < best_key) {
      best_key = std::move(key);
      best = std::move(cand);
    }
  }
  return best;
}

std::string to_string(const DissectedPolygon& dp) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < dp.poly.labels.size(); ++i) {
    if (i) os << ",";
    os << dp.poly.labels[i];
  }
  os << ")";
  for (const auto& cc : dp.diss.classes) {
    os << " {";
    for (size_t i = 0; i < cc.members.size(); ++i) {
      if (i) os << ",";
      os << "(" << cc.members[i].a << "," << cc.members[i].b << ")";
    }
    os << "}";
  }
  return os.str();
}

}  // namespace cyclotile
