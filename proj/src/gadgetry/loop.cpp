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

#include <algorithm>
#include <functional>
#include <set>
#include <string>
#include <vector>

#include "rtile/error.hpp"
#include "rtile/gadgetry.hpp"

namespace rtile::gadgetry {
namespace {

int wrap(int i, int n) { return ((i % n) + n) % n; }

bool differ(const SegmentPlan& s) { return s.from_negated != s.to_negated; }

}  // namespace

SegmentSummary plan_segments(int loop_length, std::vector<LoopPort> ports) {
  if (ports.empty()) {
    throw Error(ErrorCode::kNoPorts, "loop has no ports");
  }
  for (const LoopPort& p : ports) {
    if (p.first < 0 || p.first >= loop_length) {
      throw Error(ErrorCode::kInvalidArgument, "port index outside the loop");
    }
  }
  std::sort(ports.begin(), ports.end(),
            [](const LoopPort& a, const LoopPort& b) { return a.first < b.first; });
  SegmentSummary summary;
  const int m = static_cast<int>(ports.size());
  for (int i = 0; i < m; ++i) {
    const LoopPort& from = ports[i];
    const LoopPort& to = ports[(i + 1) % m];
    int distance = wrap(to.first - from.first, loop_length);
    if (distance == 0) distance = loop_length;
    SegmentPlan seg;
    seg.from_port = i;
    seg.to_port = (i + 1) % m;
    seg.start = wrap(from.first + 3, loop_length);
    seg.length = distance - 4;
    seg.from_negated = from.negated;
    seg.to_negated = to.negated;
    if (seg.length < 0) {
      throw Error(ErrorCode::kParityUnresolvable,
                  "port blocks at loop indices " + std::to_string(from.first) +
                      " and " + std::to_string(to.first) + " overlap");
    }
    const bool odd = seg.length % 2 == 1;
    seg.place_changer = odd != differ(seg);
    summary.odd += odd;
    summary.diff += differ(seg);
    summary.x += !odd && differ(seg);
    summary.segments.push_back(seg);
  }
  summary.ports = std::move(ports);
  return summary;
}

namespace {

class Filler {
 public:
  explicit Filler(const std::vector<Cell>& loop)
      : fill_{loop, std::vector<int>(loop.size(), 0), {}, {}, {}},
        n_(static_cast<int>(loop.size())) {}

  void put(int index, int value) {
    int& slot = fill_.values[wrap(index, n_)];
    if (slot != 0 && slot != value) {
      throw Error(ErrorCode::kParityUnresolvable,
                  "conflicting values at loop index " +
                      std::to_string(wrap(index, n_)));
    }
    slot = value;
  }

  void port_block(int first) {
    put(first - 1, 2);
    put(first, 1);
    put(first + 1, 1);
    put(first + 2, 2);
    fill_.port_blocks.push_back(wrap(first - 1, n_));
  }

  // Free run of `length` cells between two 2s: 1,2,...,1 for odd lengths;
  // even lengths end in 1,1, forming a 2112 filler with the following 2.
  void run(int start, int length) {
    if (length == 0) {
      throw Error(ErrorCode::kParityUnresolvable,
                  "two blocks meet at loop index " +
                      std::to_string(wrap(start, n_)));
    }
    for (int i = 0; i < length; ++i) {
      put(start + i, i % 2 == 0 || i == length - 1 ? 1 : 2);
    }
    if (length % 2 == 0) {
      fill_.filler_blocks.push_back(wrap(start + length - 3, n_));
    }
  }

  bool straight_four(int first) const {
    const auto& c = fill_.cells;
    return straight_triple(c[wrap(first, n_)], c[wrap(first + 1, n_)],
                           c[wrap(first + 2, n_)]) &&
           straight_triple(c[wrap(first + 1, n_)], c[wrap(first + 2, n_)],
                           c[wrap(first + 3, n_)]);
  }

  void segment(const SegmentPlan& seg) {
    if (!seg.place_changer) {
      run(seg.start, seg.length);
      return;
    }
    // The changer 211112 needs a free cell on both sides.
    for (int j = 1; j + 7 <= seg.length; ++j) {
      if (!straight_four(seg.start + j + 1)) continue;
      run(seg.start, j);
      put(seg.start + j, 2);
      for (int i = 1; i <= 4; ++i) put(seg.start + j + i, 1);
      put(seg.start + j + 5, 2);
      fill_.phase_changers.push_back(wrap(seg.start + j, n_));
      run(seg.start + j + 6, seg.length - j - 6);
      return;
    }
    throw Error(ErrorCode::kStraightRunUnavailable,
                "segment at loop index " + std::to_string(seg.start) +
                    " of length " + std::to_string(seg.length) +
                    " has no straight room for a phase changer");
  }

  LoopFill take() {
    std::sort(fill_.port_blocks.begin(), fill_.port_blocks.end());
    std::sort(fill_.filler_blocks.begin(), fill_.filler_blocks.end());
    std::sort(fill_.phase_changers.begin(), fill_.phase_changers.end());
    return std::move(fill_);
  }

 private:
  LoopFill fill_;
  int n_;
};

}  // namespace

LoopFill fill_loop(const std::vector<Cell>& loop, const SegmentSummary& plan) {
  Filler filler(loop);
  for (const LoopPort& p : plan.ports) filler.port_block(p.first);
  for (const SegmentPlan& seg : plan.segments) filler.segment(seg);
  return filler.take();
}

ValidationReport validate_fill(const LoopFill& fill) {
  ValidationReport report;
  const int n = fill.length();
  if (static_cast<int>(fill.values.size()) != n) {
    report.add("fill has " + std::to_string(fill.values.size()) +
               " values for " + std::to_string(n) + " cells");
    return report;
  }
  std::set<int> paired;  // i such that cells i and i+1 may both hold 1
  auto expect = [&](int start, const std::vector<int>& pattern,
                    const std::string& what) {
    for (std::size_t k = 0; k < pattern.size(); ++k) {
      if (fill.values[wrap(start + static_cast<int>(k), n)] != pattern[k]) {
        report.add(what + " at loop index " + std::to_string(start) +
                   " does not read " +
                   (pattern.size() == 4 ? "2112" : "211112"));
        return;
      }
    }
  };
  for (int b : fill.port_blocks) {
    expect(b, {2, 1, 1, 2}, "port block");
    paired.insert(wrap(b + 1, n));
  }
  for (int b : fill.filler_blocks) {
    expect(b, {2, 1, 1, 2}, "filler block");
    paired.insert(wrap(b + 1, n));
  }
  for (int b : fill.phase_changers) {
    expect(b, {2, 1, 1, 1, 1, 2}, "phase changer");
    for (int k = 1; k <= 3; ++k) paired.insert(wrap(b + k, n));
    const auto& c = fill.cells;
    if (!straight_triple(c[wrap(b + 1, n)], c[wrap(b + 2, n)],
                         c[wrap(b + 3, n)]) ||
        !straight_triple(c[wrap(b + 2, n)], c[wrap(b + 3, n)],
                         c[wrap(b + 4, n)])) {
      report.add("phase changer at loop index " + std::to_string(b) +
                 " is not straight");
    }
  }
  for (int i = 0; i < n; ++i) {
    const int v = fill.values[i];
    const int next = fill.values[wrap(i + 1, n)];
    if (v != 1 && v != 2) {
      report.add("value " + std::to_string(v) + " at loop index " +
                 std::to_string(i));
    }
    if (v == 2 && next == 2) {
      report.add("two consecutive 2s at loop index " + std::to_string(i));
    }
    if (v == 1 && next == 1 && !paired.count(i)) {
      report.add("stray 1,1 at loop index " + std::to_string(i));
    }
  }
  if (fill.changer_count() % 2 != 0) {
    report.add("odd phase changer count " +
               std::to_string(fill.changer_count()));
  }
  return report;
}

LoopTilings enumerate_min_loop_tilings(const LoopFill& fill) {
  const int n = fill.length();
  if (n > kEnumerateMaxLoop) {
    throw Error(ErrorCode::kTooLong,
                "loop of length " + std::to_string(n) + " exceeds " +
                    std::to_string(kEnumerateMaxLoop));
  }
  if (n < 4 || static_cast<int>(fill.values.size()) != n) {
    throw Error(ErrorCode::kInvalidFill, "loop too short or values missing");
  }
  for (int i = 0; i < n; ++i) {
    const int v = fill.values[i];
    if (v != 1 && v != 2) {
      throw Error(ErrorCode::kInvalidFill,
                  "value " + std::to_string(v) + " at loop index " +
                      std::to_string(i));
    }
    if (v == 2 && fill.values[wrap(i + 1, n)] == 2) {
      throw Error(ErrorCode::kInvalidFill,
                  "two consecutive 2s at loop index " + std::to_string(i));
    }
  }

  // A tile over loop cells only is a run of 1-3 consecutive cells with
  // weight <= 3; three cells must be collinear.
  auto fits = [&](int start, int length) {
    int weight = 0;
    for (int k = 0; k < length; ++k) weight += fill.values[wrap(start + k, n)];
    if (weight > 3) return false;
    if (length == 3) {
      return straight_triple(fill.cells[wrap(start, n)],
                             fill.cells[wrap(start + 1, n)],
                             fill.cells[wrap(start + 2, n)]);
    }
    return true;
  };

  LoopTilings result;
  result.min_tiles = n + 1;
  std::vector<std::vector<LoopRun>> found;

  // Fix the run covering index 0, then tile the remaining path exactly.
  for (int back = 0; back <= 2; ++back) {
    for (int length = back + 1; length <= 3; ++length) {
      const int start = wrap(-back, n);
      if (!fits(start, length)) continue;
      const int path_start = start + length;  // unwrapped
      const int path_length = n - length;
      // best[i]: fewest runs covering path positions i..path_length-1.
      std::vector<int> best(path_length + 1, n + 1);
      best[path_length] = 0;
      for (int i = path_length - 1; i >= 0; --i)
        for (int l = 1; l <= 3 && i + l <= path_length; ++l)
          if (fits(path_start + i, l) && best[i + l] <= n)
            best[i] = std::min(best[i], 1 + best[i + l]);
      if (best[0] > n) continue;
      const int total = 1 + best[0];
      if (total > result.min_tiles) continue;
      if (total < result.min_tiles) {
        result.min_tiles = total;
        found.clear();
      }
      std::vector<LoopRun> runs = {{start, length}};
      std::function<void(int)> expand = [&](int i) {
        if (i == path_length) {
          auto sorted = runs;
          std::sort(sorted.begin(), sorted.end());
          found.push_back(std::move(sorted));
          return;
        }
        for (int l = 1; l <= 3 && i + l <= path_length; ++l) {
          if (fits(path_start + i, l) && best[i + l] == best[i] - 1) {
            runs.push_back({wrap(path_start + i, n), l});
            expand(i + l);
            runs.pop_back();
          }
        }
      };
      expand(0);
    }
  }
  std::sort(found.begin(), found.end());
  result.tilings = std::move(found);
  for (const auto& tiling : result.tilings) {
    LoopTilingStats s;
    for (const LoopRun& run : tiling) {
      (run.length == 1 ? s.a1 : run.length == 2 ? s.a2 : s.a3) += 1;
    }
    result.stats.push_back(s);
  }
  return result;
}

}  // namespace rtile::gadgetry
