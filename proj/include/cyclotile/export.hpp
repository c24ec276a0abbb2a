#pragma once

#include <string>

#include "cyclotile/moduli.hpp"
#include "cyclotile/poset.hpp"

namespace cyclotile {

// Poset schema: {"dim": d, "ranks": [[faceEncoding...] per codim],
//                "covers": [[subIdx, superIdx]...]} with global face
// indices counted codim 0 first.
std::string poset_to_json(const FacePoset& p);

// Hasse diagram; edges run from each face to the faces it covers.
std::string poset_to_dot(const FacePoset& p);

// Complex schema: {"topDim": d, "cells": [[cellEncoding...] per dim],
//                  "incidences": [{"dim","cell","tile","slot","mult"}...],
//                  "tiles": [tileEncoding...]}
std::string complex_to_json(const CellComplex& c);

// Dual tile-adjacency multigraph over codim-1 cells (self-loops allowed).
std::string complex_to_dot(const CellComplex& c);

}  // namespace cyclotile
