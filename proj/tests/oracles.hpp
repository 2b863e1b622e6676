#pragma once

// Slow, definition-level models used to check the fast kernels. Shapes are
// plain cell sets; nothing here uses the row-span algorithms of the library.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <queue>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "zcx/polyomino.hpp"

namespace oracle {

using CellSet = std::set<std::pair<int, int>>;  // (col, row)

inline CellSet cells_of(const zcx::Polyomino& p)
{
    CellSet s;
    for (int y = 0; y < p.height(); ++y)
        for (int x = p.row(y).left; x <= p.row(y).right; ++x) s.insert({x, y});
    return s;
}

inline bool connected(const CellSet& s)
{
    if (s.empty()) return false;
    CellSet seen{*s.begin()};
    std::queue<std::pair<int, int>> q;
    q.push(*s.begin());
    while (!q.empty()) {
        auto [x, y] = q.front();
        q.pop();
        const std::pair<int, int> next[] = {{x + 1, y}, {x - 1, y}, {x, y + 1}, {x, y - 1}};
        for (const auto& c : next)
            if (s.count(c) && seen.insert(c).second) q.push(c);
    }
    return seen.size() == s.size();
}

// Every row and every column meets the set in one interval, and the set is connected.
inline bool convex(const CellSet& s)
{
    if (!connected(s)) return false;
    std::map<int, std::vector<int>> rows, cols;
    for (auto [x, y] : s) {
        rows[y].push_back(x);
        cols[x].push_back(y);
    }
    auto intervals = [](std::map<int, std::vector<int>>& lines) {
        for (auto& [k, v] : lines) {
            std::sort(v.begin(), v.end());
            if (v.back() - v.front() + 1 != static_cast<int>(v.size())) return false;
        }
        return true;
    };
    return intervals(rows) && intervals(cols);
}

inline std::string encode(const CellSet& s)
{
    std::map<int, std::pair<int, int>> rows;
    for (auto [x, y] : s) {
        auto it = rows.find(y);
        if (it == rows.end())
            rows[y] = {x, x};
        else
            it->second = {std::min(it->second.first, x), std::max(it->second.second, x)};
    }
    std::string out;
    for (const auto& [y, lr] : rows) {
        if (!out.empty()) out += ';';
        out += std::to_string(lr.first) + '-' + std::to_string(lr.second);
    }
    return out;
}

// Every convex polyomino of semi-perimeter n, as sorted encodings. Each row of
// an h x (n-h) box takes every interval; survivors are filtered by convex()
// and by touching all four sides of the box.
inline std::vector<std::string> brute_convex(int n)
{
    std::vector<std::string> out;
    for (int h = 1; h < n; ++h) {
        const int w = n - h;
        std::vector<std::pair<int, int>> spans;
        for (int l = 0; l < w; ++l)
            for (int r = l; r < w; ++r) spans.push_back({l, r});
        std::vector<std::size_t> pick(static_cast<std::size_t>(h), 0);
        while (true) {
            CellSet s;
            int lo = w, hi = -1;
            for (int y = 0; y < h; ++y) {
                auto [l, r] = spans[pick[static_cast<std::size_t>(y)]];
                lo = std::min(lo, l);
                hi = std::max(hi, r);
                for (int x = l; x <= r; ++x) s.insert({x, y});
            }
            if (lo == 0 && hi == w - 1 && convex(s)) out.push_back(encode(s));
            std::size_t i = 0;
            while (i < pick.size() && ++pick[i] == spans.size()) pick[i++] = 0;
            if (i == pick.size()) break;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Fewest direction changes over every internal path from a to b that steps
// north or horizontally by dx; -1 when no such path exists. Exhaustive DFS.
inline int min_turns(const CellSet& s, std::pair<int, int> a, std::pair<int, int> b, int dx)
{
    int best = -1;
    std::function<void(std::pair<int, int>, int, int)> walk = [&](std::pair<int, int> c, int heading, int turns) {
        if (c == b) {
            if (best < 0 || turns < best) best = turns;
            return;
        }
        const std::pair<int, int> steps[2] = {{c.first, c.second + 1}, {c.first + dx, c.second}};
        for (int k = 0; k < 2; ++k) {
            if (!s.count(steps[k])) continue;
            walk(steps[k], k, turns + (heading >= 0 && heading != k ? 1 : 0));
        }
    };
    walk(a, -1, 0);
    return best;
}

struct Degrees {
    int ne = 0;
    int nw = 0;
};

inline Degrees degrees(const CellSet& s)
{
    Degrees d;
    for (const auto& a : s)
        for (const auto& b : s) {
            if (b.second < a.second) continue;
            if (b.first >= a.first) d.ne = std::max(d.ne, min_turns(s, a, b, +1));
            if (b.first <= a.first) d.nw = std::max(d.nw, min_turns(s, a, b, -1));
        }
    return d;
}

struct Label {
    bool centered = false;
    int b = 1;
    int w = 0;
    int r = 0;
    bool rect = false;
};

// Label statistics straight from the cell set of an ascending polyomino.
inline Label label(const CellSet& s)
{
    int w = 0, h = 0;
    for (auto [x, y] : s) {
        w = std::max(w, x + 1);
        h = std::max(h, y + 1);
    }
    auto row_full = [&](int y) {
        for (int x = 0; x < w; ++x)
            if (!s.count({x, y})) return false;
        return true;
    };
    int top_last = -1;
    for (int y = 0; y < h; ++y)
        if (s.count({w - 1, y})) top_last = y;
    Label l;
    l.rect = top_last == h - 1;
    int lo = -1, hi = -1;
    for (int y = 0; y < h; ++y)
        if (row_full(y)) {
            if (lo < 0) lo = y;
            hi = y;
        }
    if (lo < 0) {
        for (int y = 0; y < h; ++y) l.r += s.count({w - 1, y}) ? 1 : 0;
        return l;
    }
    l.centered = true;
    l.b = hi - lo + 1;
    l.w = w;
    if (hi < h - 1)
        for (int x = w - 1; x >= 0; --x)
            if (s.count({x, hi + 1})) l.w = x;
    for (int y = hi + 1; y < h; ++y) l.r += s.count({w - 1, y}) ? 1 : 0;
    return l;
}

}  // namespace oracle
