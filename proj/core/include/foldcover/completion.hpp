#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "foldcover/graph.hpp"

namespace foldcover {

// Attach a path of `length` same-labeled edges at a vertex where that label
// is missing as an outgoing edge.  Keeps the graph folded, the input
// embedded (vertex ids are stable), and creates no new power loops.
struct TailInfo {
  int vertex = 0;
  int gen = 0;
  int length = 0;
};
TailInfo add_missing_label_tail(LabeledGraph& g, int length);

struct CompletionOptions {
  std::uint64_t seed = 0;
  // Required parity of the final vertex count (0 = even, 1 = odd).
  std::optional<int> degree_parity;
  // Linking orders tried per size before growing; <0 means 10 * m^2.
  long long attempts_per_size = -1;
  int max_growth = 4096;
};

struct CompletionResult {
  LabeledGraph graph;   // regular; input embedded with stable vertex ids
  int added_vertices = 0;
};

// Grow a folded connected graph with no peripheral power loops into a
// regular graph in which every peripheral word acts as a single m-cycle.
// Single-letter peripherals are handled exactly by chain linking; composite
// peripherals by seeded search over linking orders, growing the graph by one
// tail vertex when a size is infeasible or the budget runs out.
CompletionResult regular_complete(const LabeledGraph& g, const std::vector<Word>& peripherals,
                                  const CompletionOptions& opts = {});

}  // namespace foldcover
