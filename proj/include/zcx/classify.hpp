#pragma once

/**
 * @file classify.hpp
 * @brief Convexity degrees, class predicates and the per-size census.
 *
 * D_NE(P) is the largest, over ordered cell pairs (a, b) joined by an
 * internal path of North and East steps, of the fewest direction changes
 * such a path needs. D_NW uses North and West steps. Pairs with no such
 * path are ignored and a cell paired with itself counts 0.
 */

#include <map>
#include <string>
#include <utility>

#include <gmpxx.h>

#include "zcx/polyomino.hpp"

namespace zcx {

struct DegreePair {
    int ne = 0;
    int nw = 0;

    int global() const { return ne > nw ? ne : nw; }
    bool operator==(const DegreePair&) const = default;
    auto operator<=>(const DegreePair&) const = default;
};

/// Fewest-turn NE distances via dynamic programming over the (cell, heading)
/// DAG; NW is the NE degree of the mirror image.
DegreePair degree_pair(const Polyomino& p);
int ne_degree(const Polyomino& p);

bool is_centered(const Polyomino& p);
bool is_four_stack(const Polyomino& p);
bool is_ascending(const Polyomino& p);
bool is_descending(const Polyomino& p);
bool is_directed_convex(const Polyomino& p);
/// Topmost cell of the last column is at the top row.
bool is_rectangular(const Polyomino& p);

struct CensusRow {
    int size = 0;
    mpz_class total_convex;
    std::map<std::pair<int, int>, mpz_class> by_degree_pair;  // (ne, nw) -> count

    mpz_class l_convex;
    mpz_class z_convex;
    mpz_class centered;
    mpz_class four_stack;
    mpz_class ascending;
    mpz_class descending;
    mpz_class ascending_and_descending;
    mpz_class c22;
    mpz_class c21;  // ne = 2, nw <= 1
    mpz_class c12;  // nw = 2, ne <= 1
    mpz_class directed_convex;

    /// Adds one polyomino with precomputed degrees.
    void add(const Polyomino& p, DegreePair d);
    /// Associative, commutative merge of two partial rows of the same size.
    void merge(const CensusRow& other);

    bool operator==(const CensusRow& o) const;
};

/// OpenMP kernel: partitions of the enumeration are classified concurrently
/// and merged. threads <= 0 selects the default worker count.
CensusRow census(int n, int threads = 0);

/// Single-threaded reference over the canonical stream.
CensusRow census_serial(int n);

}  // namespace zcx
