// Copyright 2026 The rtile Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef RTILE_LAYOUT_HPP_
#define RTILE_LAYOUT_HPP_

#include <array>
#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/formula.hpp"
#include "rtile/gadgetry.hpp"
#include "rtile/geometry.hpp"

namespace rtile::layout {

struct GridPoint {
  int x = 0;
  int y = 0;

  friend auto operator<=>(const GridPoint&, const GridPoint&) = default;
};

// Straight-line drawing of a graph with integer vertex coordinates.
struct GridEmbedding {
  std::vector<GridPoint> coords;  // indexed by vertex
  int width = 0;                  // every x lies in [0, width]
  int height = 0;                 // every y lies in [0, height]
};

// True when closed segments pq and rs share a point.
bool segments_intersect(GridPoint p, GridPoint q, GridPoint r, GridPoint s);

// Distinct coordinates, and no two edges meeting anywhere except at a
// shared endpoint.
ValidationReport validate_embedding(const formula::SimpleGraph& g,
                                    const GridEmbedding& e);

// Crossing-free drawing on a (2m-4) x (m-2) grid for m >= 3 vertices.
// Throws kNotPlanar for non-planar input.
GridEmbedding embed_grid(const formula::SimpleGraph& g);

// Where a clause gadget meets one of its loops: the gadget's port cell and
// the two loop cells that complete a straight 3-cell rectangle with it.
struct Port {
  int variable = 0;
  int clause = 0;
  gadgetry::Side side = gadgetry::Side::kWest;
  bool negated = false;
  Cell gadget_cell;
  Cell a;  // loop cell next to the gadget
  Cell b;  // loop cell beyond a
};

struct GadgetPlacement {
  int clause = 0;
  Cell anchor;                       // grid cell of pattern cell (0, 0)
  std::vector<Cell> footprint;       // row-major grid cells
  std::array<int, 3> port_variables{};  // indexed by Side
};

struct Layout {
  int grid_side = 1;
  gadgetry::GadgetPattern gadget;
  std::vector<GadgetPlacement> gadgets;    // indexed by clause
  std::map<int, std::vector<Cell>> loops;  // variable -> clockwise cells
  std::vector<Port> ports;                 // sorted by (variable, clause)
  std::vector<int> degenerate_variables;   // no occurrences, no loop

  const Port& port(int variable, int clause) const;
};

// Accepts or rejects a candidate layout; routing moves on to the next
// attempt on rejection.
using LayoutFilter = std::function<bool(const Layout&)>;

// Routes one loop per occurring variable through the ports of its clauses,
// guided by the drawing. Throws kRoutingFailed when every attempt fails.
Layout route_layout(const formula::Cnf& f, const GridEmbedding& e,
                    const gadgetry::GadgetPattern& gadget,
                    const LayoutFilter& accept = {});

// Lists every violated geometric invariant. With a formula, also checks
// that ports match clause literals.
ValidationReport validate_layout(const Layout& l,
                                 const formula::Cnf* f = nullptr);

// Line-oriented text: one gadget, loop or port per line.
std::string dump_layout(const Layout& l);

}  // namespace rtile::layout

#endif  // RTILE_LAYOUT_HPP_
