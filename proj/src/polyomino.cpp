#include "zcx/polyomino.hpp"

#include <algorithm>
#include <charconv>
#include <limits>

namespace zcx {

const char* to_string(ShapeError e)
{
    switch (e) {
    case ShapeError::Empty: return "Empty";
    case ShapeError::EmptyRow: return "EmptyRow";
    case ShapeError::NotConvex: return "NotConvex";
    case ShapeError::Disconnected: return "Disconnected";
    case ShapeError::Malformed: return "Malformed";
    }
    return "Unknown";
}

Polyomino::Polyomino(std::vector<RowSpan> rows) : rows_(std::move(rows))
{
    for (const auto& r : rows_) width_ = std::max(width_, r.right + 1);
}

Polyomino Polyomino::from_rows(std::vector<RowSpan> rows)
{
    if (rows.empty()) throw ShapeException(ShapeError::Empty, "polyomino has no rows");

    int min_left = std::numeric_limits<int>::max();
    for (std::size_t i = 0; i < rows.size(); ++i) {
        if (rows[i].left > rows[i].right)
            throw ShapeException(ShapeError::EmptyRow, "row " + std::to_string(i) + " has left > right");
        min_left = std::min(min_left, rows[i].left);
    }
    for (auto& r : rows) {
        r.left -= min_left;
        r.right -= min_left;
    }

    for (std::size_t i = 1; i < rows.size(); ++i) {
        const auto& lo = rows[i - 1];
        const auto& hi = rows[i];
        if (hi.left > lo.right || lo.left > hi.right)
            throw ShapeException(ShapeError::Disconnected,
                                 "rows " + std::to_string(i - 1) + " and " + std::to_string(i) + " do not overlap");
    }

    // A column is contiguous iff, once it has been entered and left, it is never entered again.
    int width = 0;
    for (const auto& r : rows) width = std::max(width, r.right + 1);
    std::vector<char> state(static_cast<std::size_t>(width), 0);  // 0 unseen, 1 open, 2 closed
    for (const auto& r : rows) {
        for (int c = 0; c < width; ++c) {
            const bool in = c >= r.left && c <= r.right;
            char& s = state[static_cast<std::size_t>(c)];
            if (in) {
                if (s == 2)
                    throw ShapeException(ShapeError::NotConvex, "column " + std::to_string(c) + " is not contiguous");
                s = 1;
            } else if (s == 1) {
                s = 2;
            }
        }
    }
    return Polyomino(std::move(rows));
}

Polyomino Polyomino::from_rows(std::initializer_list<std::pair<int, int>> rows)
{
    std::vector<RowSpan> spans;
    spans.reserve(rows.size());
    for (const auto& [l, r] : rows) spans.push_back({l, r});
    return from_rows(std::move(spans));
}

int Polyomino::area() const
{
    int a = 0;
    for (const auto& r : rows_) a += r.length();
    return a;
}

bool Polyomino::contains(int col, int row) const
{
    if (row < 0 || row >= height()) return false;
    const auto& r = rows_[static_cast<std::size_t>(row)];
    return col >= r.left && col <= r.right;
}

ColumnSpan Polyomino::column(int col) const
{
    ColumnSpan span{0, -1};
    bool seen = false;
    for (int i = 0; i < height(); ++i) {
        if (contains(col, i)) {
            if (!seen) span.bottom = i;
            span.top = i;
            seen = true;
        }
    }
    return span;
}

Polyomino Polyomino::mirror() const
{
    std::vector<RowSpan> out;
    out.reserve(rows_.size());
    const int last = width_ - 1;
    for (const auto& r : rows_) out.push_back({last - r.right, last - r.left});
    return Polyomino(std::move(out));
}

std::string Polyomino::encode() const
{
    std::string s;
    s.reserve(rows_.size() * 5);
    for (std::size_t i = 0; i < rows_.size(); ++i) {
        if (i) s += ';';
        s += std::to_string(rows_[i].left);
        s += '-';
        s += std::to_string(rows_[i].right);
    }
    return s;
}

namespace {

int parse_int(std::string_view token, std::string_view whole)
{
    int v = 0;
    const auto* first = token.data();
    const auto* last = token.data() + token.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (token.empty() || ec != std::errc{} || ptr != last || v < 0)
        throw ShapeException(ShapeError::Malformed, "bad integer in encoding '" + std::string(whole) + "'");
    return v;
}

}  // namespace

Polyomino Polyomino::decode(std::string_view text)
{
    if (text.empty()) throw ShapeException(ShapeError::Malformed, "empty encoding");
    std::vector<RowSpan> rows;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        const std::size_t end = std::min(text.find(';', pos), text.size());
        const std::string_view tok = text.substr(pos, end - pos);
        const std::size_t dash = tok.find('-');
        if (dash == std::string_view::npos)
            throw ShapeException(ShapeError::Malformed, "row token '" + std::string(tok) + "' lacks '-'");
        rows.push_back({parse_int(tok.substr(0, dash), text), parse_int(tok.substr(dash + 1), text)});
        pos = end + 1;
    }
    return from_rows(std::move(rows));
}

std::string Polyomino::render_ascii() const
{
    std::string s;
    for (int i = height() - 1; i >= 0; --i) {
        const auto& r = rows_[static_cast<std::size_t>(i)];
        for (int c = 0; c < width_; ++c) s += (c >= r.left && c <= r.right) ? '#' : '.';
        s += '\n';
    }
    return s;
}

bool encoding_less(const Polyomino& a, const Polyomino& b)
{
    return a.encode() < b.encode();
}

}  // namespace zcx
