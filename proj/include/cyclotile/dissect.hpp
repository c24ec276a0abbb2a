#pragma once

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace cyclotile {

// Thrown when an operation would exceed a configured desk-scale budget.
struct ResourceError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Label = int;

// Vertices of an m-gon are numbered 0..m-1 counterclockwise; edge slot i
// joins vertices i and i+1 (mod m).  A chord is a genuine diagonal,
// stored with a < b; (0, m-1) is the wrap-around edge, not a chord.
struct Chord {
  int a = 0;
  int b = 0;
  friend auto operator<=>(const Chord&, const Chord&) = default;
};

bool chord_valid(Chord c, int sides);
Chord make_chord(int u, int v, int sides);
bool is_diameter(Chord c, int sides);

// True iff the chords cross in the open interior of the polygon.
// Sharing an endpoint never counts as a crossing.
bool crosses(Chord c1, Chord c2, int sides);

// Plain: all side labels distinct.
// Symmetric: 2n sides, antipodal sides share a label.
// Cover: 2n sides, antipodal sides carry a label and its negation.
enum class LabelMode { Plain, Symmetric, Cover };

struct LabeledPolygon {
  int sides = 0;
  std::vector<Label> labels;
  LabelMode mode = LabelMode::Plain;

  int half() const { return sides / 2; }

  friend auto operator<=>(const LabeledPolygon&, const LabeledPolygon&) = default;

  static LabeledPolygon plain(std::vector<Label> labels);
  static LabeledPolygon symmetric(std::vector<Label> labels);
  static LabeledPolygon cover(std::vector<Label> labels);
};

// A single chord in plain mode; a diameter or an antipodal pair in
// symmetric/cover mode.  Members are kept sorted.
struct ChordClass {
  std::vector<Chord> members;
  friend auto operator<=>(const ChordClass&, const ChordClass&) = default;
};

ChordClass plain_class(Chord c, int sides);
ChordClass antipodal_class(Chord c, int half);

// A set of pairwise non-crossing chord classes, kept sorted.  The codim
// of the polytope face it names is the number of classes.
struct Dissection {
  std::vector<ChordClass> classes;

  int codim() const { return static_cast<int>(classes.size()); }
  bool contains(const ChordClass& cc) const;
  std::vector<Chord> chords() const;  // all member chords, sorted

  friend auto operator<=>(const Dissection&, const Dissection&) = default;
};

Dissection make_dissection(std::vector<ChordClass> classes, int sides);

// All codim-1 classes of an m-gon in the given mode, sorted.
std::vector<ChordClass> chord_classes(int sides, LabelMode mode);

// All non-crossing k-chord dissections of a plain m-gon, sorted.
// k outside 0..m-3 yields an empty list.
std::vector<Dissection> enum_dissections(int sides, int k);

// All antipodally closed dissections of a 2n-gon with exactly k chord
// classes, sorted.  k outside 0..n-1 yields an empty list.
std::vector<Dissection> enum_sym_dissections(int half, int k);

// Dissections extending `base` by exactly `extra` further classes.
std::vector<Dissection> enum_extensions(int sides, LabelMode mode,
                                        const Dissection& base, int extra);

enum class GroupKind { RotationsOnly, Dihedral };

struct SymmetryGroup {
  GroupKind kind = GroupKind::RotationsOnly;
  int sides = 0;
  int order() const { return kind == GroupKind::Dihedral ? 2 * sides : sides; }
};

// v -> v + shift, or v -> shift - v when reflected (all mod m).
struct GroupElement {
  int shift = 0;
  bool reflect = false;

  int apply_vertex(int v, int sides) const;
  int apply_slot(int slot, int sides) const;
};

std::vector<GroupElement> elements(const SymmetryGroup& g);

struct DissectedPolygon {
  LabeledPolygon poly;
  Dissection diss;
  friend auto operator<=>(const DissectedPolygon&, const DissectedPolygon&) = default;
};

void validate_pair(const LabeledPolygon& p, const Dissection& d);

DissectedPolygon apply(const GroupElement& g, const DissectedPolygon& dp);

// Serialization as an integer sequence: labels first, then the sorted
// chord list.  Lexicographic order on encodings is the canonical order.
std::vector<int> encode(const DissectedPolygon& dp);

DissectedPolygon canonicalize(const DissectedPolygon& dp, const SymmetryGroup& g);

inline std::pair<LabeledPolygon, Dissection> canonicalize(const LabeledPolygon& p,
                                                          const Dissection& d,
                                                          const SymmetryGroup& g) {
  DissectedPolygon out = canonicalize(DissectedPolygon{p, d}, g);
  return {out.poly, out.diss};
}

std::string to_string(const DissectedPolygon& dp);

}  // namespace cyclotile
