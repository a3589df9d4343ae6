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
#ifndef RTILE_RENDER_HPP_
#define RTILE_RENDER_HPP_

#include <string>

#include "rtile/instance.hpp"

namespace rtile::render {

// Without tiles: one row per line, values separated by spaces. With tiles:
// values inside box-drawing outlines of every tile. Throws kOutOfBounds when
// a tile leaves the grid.
std::string ascii(const WeightGrid& grid, const Tiling* tiles = nullptr);

// One rect per cell coloured by value, then one stroked group per tile.
std::string svg(const WeightGrid& grid, const Tiling* tiles = nullptr);

}  // namespace rtile::render

#endif  // RTILE_RENDER_HPP_
