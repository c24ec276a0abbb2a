#include "cyclotile/export.hpp"

#include <map>
#include <sstream>

#include "json.hpp"

namespace cyclotile {

namespace {

using nlohmann::json;

json key_json(const std::vector<int>& key) { return json(key); }

json slot_json(const Dissection& d) {
  std::vector<int> flat;
  for (const Chord& c : d.chords()) {
    flat.push_back(c.a);
    flat.push_back(c.b);
  }
  return json(flat);
}

json cell_json(const CellClass& cell) { return json(encode(cell.rep)); }

}  // namespace

std::string poset_to_json(const FacePoset& p) {
  json out;
  out["dim"] = p.dim;
  json ranks = json::array();
  for (const auto& rank : p.ranks) {
    json layer = json::array();
    for (const FaceKey& key : rank) layer.push_back(key_json(key));
    ranks.push_back(std::move(layer));
  }
  out["ranks"] = std::move(ranks);
  std::vector<int> offset(p.ranks.size() + 1, 0);
  for (size_t k = 0; k < p.ranks.size(); ++k)
    offset[k + 1] = offset[k] + static_cast<int>(p.ranks[k].size());
  json covers = json::array();
  for (size_t k = 1; k < p.ranks.size(); ++k)
    for (auto [sub, super] : p.covers[k])
      covers.push_back(json::array({offset[k] + sub, offset[k - 1] + super}));
  out["covers"] = std::move(covers);
  return out.dump();
}

std::string poset_to_dot(const FacePoset& p) {
  std::vector<int> offset(p.ranks.size() + 1, 0);
  for (size_t k = 0; k < p.ranks.size(); ++k)
    offset[k + 1] = offset[k] + static_cast<int>(p.ranks[k].size());
  std::ostringstream os;
  os << "digraph hasse {\n  rankdir=BT;\n";
  for (size_t k = 0; k < p.ranks.size(); ++k)
    for (size_t i = 0; i < p.ranks[k].size(); ++i) {
      os << "  f" << offset[k] + static_cast<int>(i) << " [label=\"";
      const FaceKey& key = p.ranks[k][i];
      for (size_t j = 0; j < key.size(); ++j) os << (j ? " " : "") << key[j];
      os << "\" rank=" << k << "];\n";
    }
  for (size_t k = 1; k < p.ranks.size(); ++k)
    for (auto [sub, super] : p.covers[k])
      os << "  f" << offset[k] + sub << " -> f" << offset[k - 1] + super << ";\n";
  os << "}\n";
  return os.str();
}

std::string complex_to_json(const CellComplex& c) {
  json out;
  out["topDim"] = c.top_dim;
  json tiles = json::array();
  for (size_t t = 0; t < c.tile_polys.size(); ++t)
    tiles.push_back(cell_json(CellClass{{c.tile_polys[t], c.tile_bases[t]}, 0}));
  out["tiles"] = std::move(tiles);
  json cells = json::array();
  for (const auto& layer : c.cells) {
    json dim_cells = json::array();
    for (const CellClass& cell : layer) dim_cells.push_back(cell_json(cell));
    cells.push_back(std::move(dim_cells));
  }
  out["cells"] = std::move(cells);
  json incidences = json::array();
  for (const Incidence& inc : c.incidences) {
    json entry;
    entry["dim"] = inc.dim;
    entry["cell"] = inc.cell;
    entry["tile"] = inc.tile;
    entry["slot"] = slot_json(inc.slot);
    entry["mult"] = inc.mult;
    incidences.push_back(std::move(entry));
  }
  out["incidences"] = std::move(incidences);
  return out.dump();
}

std::string complex_to_dot(const CellComplex& c) {
  std::ostringstream os;
  os << "graph tiles {\n";
  for (size_t t = 0; t < c.tile_polys.size(); ++t) os << "  t" << t << ";\n";
  if (c.top_dim >= 1) {
    // group codim-1 incidences per cell
    std::map<int, std::vector<int>> sides;
    for (const Incidence& inc : c.incidences)
      if (inc.dim == c.top_dim - 1) sides[inc.cell].push_back(inc.tile);
    for (const auto& [cell, ts] : sides) {
      for (size_t i = 0; i + 1 < ts.size(); i += 2)
        os << "  t" << ts[i] << " -- t" << ts[i + 1] << " [label=\"c" << cell
           << "\"];\n";
      if (ts.size() % 2 == 1)
        os << "  t" << ts.back() << " -- t" << ts.back() << " [label=\"c" << cell
           << "\"];\n";
    }
  }
  os << "}\n";
  return os.str();
}

}  // namespace cyclotile
