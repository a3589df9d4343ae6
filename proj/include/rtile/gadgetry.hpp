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

#ifndef RTILE_GADGETRY_HPP_
#define RTILE_GADGETRY_HPP_

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rtile/geometry.hpp"
#include "rtile/instance.hpp"

namespace rtile::gadgetry {

// Direction in which a gadget port reaches out to its loop.
enum class Side { kWest = 0, kEast = 1, kSouth = 2 };

inline constexpr std::array<Side, 3> kSides = {Side::kWest, Side::kEast,
                                               Side::kSouth};

std::string_view side_name(Side side);
Cell side_step(Side side);

// Clause gadget: a small pattern of weights with three 1-valued ports. The
// loop cells a and b of port s sit at port + step and port + 2 * step.
struct GadgetPattern {
  int rows = 0;
  int cols = 0;
  std::vector<int> values;  // row-major; 0 marks a cell outside the gadget
  std::array<Cell, 3> ports;  // indexed by Side

  friend bool operator==(const GadgetPattern&, const GadgetPattern&) = default;

  bool has(const Cell& c) const {
    return c.row >= 0 && c.col >= 0 && c.row < rows && c.col < cols &&
           values[c.row * cols + c.col] != 0;
  }
  int value(const Cell& c) const { return values[c.row * cols + c.col]; }
  const Cell& port(Side side) const {
    return ports[static_cast<int>(side)];
  }
  std::vector<Cell> footprint() const;  // row-major
  bool is_port(const Cell& c) const;
};

// Loop cells that may appear next to a port: a box holding a, b and the
// cells the loop turns through after a. Relative to the pattern origin.
struct DockingArm {
  Cell a;
  Cell b;
  std::vector<Cell> cells;
};

DockingArm docking_arm(const GadgetPattern& g, Side side);

// True when all three arms fit without touching the rest of the gadget or
// each other.
bool dockable(const GadgetPattern& g);

GadgetPattern builtin_gadget();

inline constexpr int kCertifyMaxFootprint = 16;
inline constexpr int kSynthMaxFootprint = 12;

struct SubsetMinimum {
  unsigned joined = 0;  // bit s set when port s is covered from outside
  int min_tiles = 0;
  Tiling witness;       // pattern coordinates
};

struct CertReport {
  std::vector<std::string> problems;    // structural defects
  std::vector<SubsetMinimum> minima;    // one per port subset, by mask
  bool dockable = false;
  bool passed = false;  // 3 tiles unjoined, 2 with any port joined

  std::string to_text(const GadgetPattern& g) const;
};

// Exhaustive minimum tile counts (weight <= 3) for every subset of joined
// ports. Throws kFootprintTooLarge above kCertifyMaxFootprint cells.
CertReport certify_gadget(const GadgetPattern& g);

// Smallest certified, dockable pattern in a fixed search order, or nullopt.
// Throws kInvalidArgument when max_footprint exceeds kSynthMaxFootprint.
std::optional<GadgetPattern> synth_gadget(int max_footprint);

// A port as seen from its loop: loop index of the first of the two "11"
// cells in cyclic order, and the sign of the literal.
struct LoopPort {
  int first = 0;
  bool negated = false;
};

// Stretch of loop cells strictly between two consecutive port blocks.
struct SegmentPlan {
  int from_port = 0;  // index into the sorted port list
  int to_port = 0;
  int start = 0;   // loop index of the first segment cell
  int length = 0;  // number of segment cells
  bool from_negated = false;
  bool to_negated = false;
  bool place_changer = false;
};

struct SegmentSummary {
  std::vector<LoopPort> ports;  // sorted by position along the loop
  std::vector<SegmentPlan> segments;
  int odd = 0;   // segments of odd length
  int diff = 0;  // segments whose end literals differ in sign
  int x = 0;     // even segments whose end literals differ in sign
  int changers() const { return odd - diff + 2 * x; }
};

// Throws kNoPorts for an empty port list and kParityUnresolvable when port
// blocks overlap.
SegmentSummary plan_segments(int loop_length, std::vector<LoopPort> ports);

struct LoopFill {
  std::vector<Cell> cells;        // clockwise loop
  std::vector<int> values;        // aligned with cells, each 1 or 2
  std::vector<int> port_blocks;   // start index of each 2112 port block
  std::vector<int> filler_blocks; // start index of each 2112 filler block
  std::vector<int> phase_changers;  // start index of each 211112 block

  int length() const { return static_cast<int>(cells.size()); }
  int changer_count() const { return static_cast<int>(phase_changers.size()); }
};

// Writes the 2112 port blocks, the planned 211112 changers and alternating
// 1,2 runs in between. Throws kStraightRunUnavailable or
// kParityUnresolvable when the loop geometry cannot host the plan.
LoopFill fill_loop(const std::vector<Cell>& loop, const SegmentSummary& plan);

// Checks the fill invariants: values in {1,2}, no adjacent 2s, "11" only
// inside blocks, even changer count, straight changers.
ValidationReport validate_fill(const LoopFill& fill);

// Run of consecutive loop cells covered by one tile.
struct LoopRun {
  int start = 0;
  int length = 0;

  friend auto operator<=>(const LoopRun&, const LoopRun&) = default;
};

struct LoopTilingStats {
  int a1 = 0;
  int a2 = 0;
  int a3 = 0;
};

struct LoopTilings {
  int min_tiles = 0;
  std::vector<std::vector<LoopRun>> tilings;  // sorted, runs sorted
  std::vector<LoopTilingStats> stats;         // aligned with tilings
};

inline constexpr int kEnumerateMaxLoop = 40;

// Every tiling of the loop cells alone by weight <= 3 rectangles that uses
// the fewest tiles. Throws kTooLong above kEnumerateMaxLoop cells and
// kInvalidFill for fills with adjacent 2s or values outside {1,2}.
LoopTilings enumerate_min_loop_tilings(const LoopFill& fill);

}  // namespace rtile::gadgetry

#endif  // RTILE_GADGETRY_HPP_
