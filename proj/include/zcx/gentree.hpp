#pragma once

/**
 * @file gentree.hpp
 * @brief Generating tree for ascending polyominoes.
 *
 * Two views of the same tree:
 *  - constructive: actual polyominoes grown by six local operations, with
 *    the inverse map parent();
 *  - symbolic: labels (family, b, w, r, rect) rewritten by succ() and
 *    counted level by level.
 *
 * For a centered ascending polyomino the base is the block of rows that
 * span the full width; b is its height. w is the left offset of the row
 * just above the base, or the width when nothing lies above the base
 * (a flipped stack). r counts last-column cells strictly above the base.
 * A non-centered polyomino carries only r, the length of its last column.
 */

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "zcx/polyomino.hpp"

namespace zcx {

enum class Family { C0, C, C1, L0, L, R, S0, S, NC };

std::string_view to_string(Family f);

struct TreeLabel {
    Family family = Family::L0;
    int b = 1;
    int w = 0;
    int r = 0;
    bool rect = false;

    auto operator<=>(const TreeLabel&) const = default;
    bool operator==(const TreeLabel&) const = default;

    /// "(1,1,0)'_L0", "(3)_NC"
    std::string to_string() const;
};

enum class GentreeError {
    NotAscending,
    InvalidLabel,
};

class GentreeException : public std::runtime_error {
public:
    GentreeException(GentreeError code, const std::string& what) : std::runtime_error(what), code_(code) {}
    GentreeError code() const noexcept { return code_; }

private:
    GentreeError code_;
};

/// Throws GentreeException(InvalidLabel) when the label breaks a family rule.
void validate(const TreeLabel& l);

/// The root label, carried by the single cell.
TreeLabel root_label();

/// Throws GentreeException(NotAscending).
TreeLabel label_of(const Polyomino& p);

enum class Operation { LeftCell, RightCell, Row, Shift, Nc, NcStar };

std::string_view to_string(Operation op);

struct Child {
    Operation op;
    Polyomino polyomino;
};

/// Every polyomino one size larger produced from p, in a fixed order:
/// Left Cell (bottom to top), Right Cell, Row, Shift, Nc / Nc*.
std::vector<Child> children(const Polyomino& p);

/// The operation and polyomino that produce p; nullopt for the single cell.
std::optional<Child> parent(const Polyomino& p);

/// succ(l) as (label, multiplicity) pairs sorted by label.
using Production = std::vector<std::pair<TreeLabel, std::uint64_t>>;
Production succ(const TreeLabel& l);

/// Labels of the geometric children, grouped like succ().
Production child_labels(const Polyomino& p);

struct LabelLevel {
    int level = 0;
    std::map<TreeLabel, mpz_class> counts;

    mpz_class total() const;
    mpz_class centered() const;
    mpz_class non_centered() const;
    mpz_class rectangular() const;
};

/// Levels 2..max_size of the label tree. Level expansion is split over
/// label keys across OpenMP workers and merged.
std::vector<LabelLevel> count_levels(int max_size, int threads = 0);
std::vector<LabelLevel> count_levels_serial(int max_size);

/// Polyominoes of sizes 2..max_size reached from the single cell, each level
/// listed in parent order then child order. Parents are expanded concurrently.
std::vector<std::vector<Polyomino>> construct_levels(int max_size, int threads = 0);

/// One "family,b,w,r,rect,count" line per label, sorted as strings.
std::vector<std::string> dump_lines(const LabelLevel& level);

}  // namespace zcx
