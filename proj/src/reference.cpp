#include "zcx/reference.hpp"

#include <algorithm>
#include <deque>
#include <limits>
#include <vector>

namespace zcx::reference {

namespace {

// dx is +1 for NE paths and -1 for NW paths.
int directional_degree(const Polyomino& p, int dx)
{
    const int w = p.width();
    const int h = p.height();
    constexpr int kInf = std::numeric_limits<int>::max();
    // State index: ((row * w) + col) * 2 + heading, heading 0 = vertical, 1 = horizontal.
    const auto states = static_cast<std::size_t>(w * h * 2);
    std::vector<int> dist(states);
    int best = 0;
    auto index = [w](int col, int row, int heading) {
        return static_cast<std::size_t>(((row * w) + col) * 2 + heading);
    };

    for (int sy = 0; sy < h; ++sy) {
        for (int sx = p.row(sy).left; sx <= p.row(sy).right; ++sx) {
            std::fill(dist.begin(), dist.end(), kInf);
            std::deque<std::size_t> queue;
            for (int heading = 0; heading < 2; ++heading) {
                dist[index(sx, sy, heading)] = 0;
                queue.push_back(index(sx, sy, heading));
            }
            while (!queue.empty()) {
                const std::size_t s = queue.front();
                queue.pop_front();
                const int heading = static_cast<int>(s % 2);
                const int cell = static_cast<int>(s / 2);
                const int col = cell % w;
                const int row = cell / w;
                const int d = dist[s];
                const int steps[2][2] = {{col, row + 1}, {col + dx, row}};
                for (int next = 0; next < 2; ++next) {
                    const int nc = steps[next][0];
                    const int nr = steps[next][1];
                    if (!p.contains(nc, nr)) continue;
                    const int cost = (next == heading) ? 0 : 1;
                    const std::size_t t = index(nc, nr, next);
                    if (d + cost < dist[t]) {
                        dist[t] = d + cost;
                        if (cost == 0)
                            queue.push_front(t);
                        else
                            queue.push_back(t);
                    }
                }
            }
            for (int row = 0; row < h; ++row)
                for (int col = 0; col < w; ++col) {
                    const int d = std::min(dist[index(col, row, 0)], dist[index(col, row, 1)]);
                    if (d != kInf) best = std::max(best, d);
                }
        }
    }
    return best;
}

}  // namespace

DegreePair degree_pair_bfs(const Polyomino& p)
{
    return {directional_degree(p, +1), directional_degree(p, -1)};
}

bool is_four_stack_scan(const Polyomino& p)
{
    const int w = p.width();
    const int h = p.height();
    for (int i = 0; i < h; ++i)
        for (int j = i; j < h; ++j)
            for (int a = 0; a < w; ++a)
                for (int b = a; b < w; ++b) {
                    bool ok = true;
                    for (int row = 0; row < h && ok; ++row)
                        for (int col = 0; col < w && ok; ++col) {
                            const bool in_rows = row >= i && row <= j;
                            const bool in_cols = col >= a && col <= b;
                            const bool present = p.contains(col, row);
                            if (in_rows && in_cols && !present) ok = false;
                            if (!in_rows && !in_cols && present) ok = false;
                        }
                    if (ok) return true;
                }
    return false;
}

}  // namespace zcx::reference
