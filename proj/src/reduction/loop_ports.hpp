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
#ifndef RTILE_SRC_REDUCTION_LOOP_PORTS_HPP_
#define RTILE_SRC_REDUCTION_LOOP_PORTS_HPP_

#include <vector>

#include "rtile/gadgetry.hpp"
#include "rtile/layout.hpp"

namespace rtile::reduction {

// The ports of one variable's loop as loop indices, in layout port order.
std::vector<gadgetry::LoopPort> loop_ports(const layout::Layout& l, int var);

// Loop index of the first "11" cell of a port.
int port_first(const layout::Layout& l, const layout::Port& p);

}  // namespace rtile::reduction

#endif  // RTILE_SRC_REDUCTION_LOOP_PORTS_HPP_
