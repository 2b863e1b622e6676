#pragma once

// Straightforward reference versions of the classify kernels. They are slow
// and exist so tests and benchmarks can compare against them.

#include "zcx/classify.hpp"
#include "zcx/polyomino.hpp"

namespace zcx::reference {

/// Deque-based 0/1 shortest path over (cell, heading) states, run from every
/// source cell, for NE and NW directly (no mirroring).
DegreePair degree_pair_bfs(const Polyomino& p);

/// Tries every rectangle [i..j] x [a..b] cell by cell: fully inside p and
/// the four corner regions around it empty.
bool is_four_stack_scan(const Polyomino& p);

}  // namespace zcx::reference
