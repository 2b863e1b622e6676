#pragma once

/**
 * @file polyomino.hpp
 * @brief Convex polyominoes stored as one column interval per row.
 *
 * Rows are kept bottom to top. Row i occupies columns [left, right]
 * (inclusive). The shape is translated so that the smallest left
 * endpoint is column 0; no reflection or rotation is applied.
 *
 *   "1-2;0-1"   ->   ##.      (top row, columns 0..1)
 *                    .##      (bottom row, columns 1..2)
 */

#include <compare>
#include <cstddef>
#include <initializer_list>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace zcx {

struct RowSpan {
    int left = 0;
    int right = 0;

    int length() const { return right - left + 1; }
    bool operator==(const RowSpan&) const = default;
    auto operator<=>(const RowSpan&) const = default;
};

struct Cell {
    int col = 0;
    int row = 0;

    bool operator==(const Cell&) const = default;
    auto operator<=>(const Cell&) const = default;
};

/// Inclusive vertical extent of one column.
struct ColumnSpan {
    int bottom = 0;
    int top = -1;

    int length() const { return top - bottom + 1; }
    bool empty() const { return top < bottom; }
};

enum class ShapeError {
    Empty,         // no rows at all
    EmptyRow,      // a row with left > right
    NotConvex,     // some column's rows are not contiguous
    Disconnected,  // two consecutive rows do not overlap
    Malformed,     // text encoding could not be parsed
};

const char* to_string(ShapeError e);

class ShapeException : public std::runtime_error {
public:
    ShapeException(ShapeError code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ShapeError code() const noexcept { return code_; }

private:
    ShapeError code_;
};

class Polyomino {
public:
    /// Validates and normalizes. Throws ShapeException on failure.
    static Polyomino from_rows(std::vector<RowSpan> rows);
    static Polyomino from_rows(std::initializer_list<std::pair<int, int>> rows);

    /// Parses the canonical "L-R;L-R;..." encoding (bottom row first).
    static Polyomino decode(std::string_view text);

    /// Single cell.
    static Polyomino unit() { return from_rows({{0, 0}}); }

    std::span<const RowSpan> rows() const { return rows_; }
    const RowSpan& row(int i) const { return rows_[static_cast<std::size_t>(i)]; }

    int height() const { return static_cast<int>(rows_.size()); }
    int width() const { return width_; }
    int area() const;

    /// Semi-perimeter: rows plus columns of the bounding box.
    int size() const { return height() + width(); }

    bool contains(int col, int row) const;
    bool contains(Cell c) const { return contains(c.col, c.row); }

    ColumnSpan column(int col) const;
    int column_length(int col) const { return column(col).length(); }

    /// Reflection through a vertical axis.
    Polyomino mirror() const;

    std::string encode() const;
    /// Rows top to bottom, '#' for cells and '.' for holes of the bounding box.
    std::string render_ascii() const;

    bool operator==(const Polyomino& o) const { return rows_ == o.rows_; }

private:
    explicit Polyomino(std::vector<RowSpan> rows);

    std::vector<RowSpan> rows_;
    int width_ = 0;
};

/// Strict weak order agreeing with lexicographic comparison of encodings.
bool encoding_less(const Polyomino& a, const Polyomino& b);

}  // namespace zcx
