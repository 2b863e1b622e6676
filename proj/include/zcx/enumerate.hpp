#pragma once

/**
 * @file enumerate.hpp
 * @brief Exhaustive generation of convex polyominoes of a fixed size.
 *
 * A shape with r rows and c columns is convex iff its left endpoints are
 * non-increasing then non-decreasing (bottom to top), its right endpoints
 * are non-decreasing then non-increasing, consecutive rows overlap, and the
 * bounding box is exactly c wide. Shapes are grown row by row under those
 * constraints and every emitted shape is re-validated by
 * Polyomino::from_rows.
 *
 * Output order: blocks by row count (ascending); inside a block, shapes
 * appear in lexicographic order of their canonical encodings. The work is
 * split into partitions keyed by (row count, first row), listed in that
 * same order, so a concatenation of partitions is the canonical stream.
 */

#include <cstdint>
#include <functional>
#include <vector>

#include <gmpxx.h>

#include "zcx/polyomino.hpp"

namespace zcx {

struct Partition {
    int rows = 0;
    int cols = 0;
    RowSpan first;
};

using ShapeVisitor = std::function<void(const Polyomino&)>;

/// All partitions of size n (n >= 2) in canonical stream order.
std::vector<Partition> partitions(int n);

/// Visits every convex polyomino of the partition in canonical order.
void for_each_in_partition(const Partition& part, const ShapeVisitor& visit);

/// Counts a partition without building Polyomino values.
std::uint64_t count_in_partition(const Partition& part);

/// Streams every convex polyomino of size n exactly once, canonical order.
void for_each_convex(int n, const ShapeVisitor& visit);

std::vector<Polyomino> all_convex(int n);

/// Same sequence as all_convex; partitions are generated concurrently.
std::vector<Polyomino> all_convex_parallel(int n, int threads = 0);

mpz_class count_convex(int n);
mpz_class count_convex_parallel(int n, int threads = 0);

}  // namespace zcx
