#include "zcx/classify.hpp"

#include <algorithm>
#include <limits>
#include <vector>

#include <omp.h>

#include "zcx/enumerate.hpp"
#include "zcx/parallel.hpp"

namespace zcx {

namespace {

constexpr int kUnreached = std::numeric_limits<int>::max() / 4;

/// Largest fewest-turn NE distance from one source cell.
int ne_eccentricity(const Polyomino& p, int x0, int y0, std::vector<int>& north, std::vector<int>& east,
                    std::vector<int>& prev_north, std::vector<int>& prev_east)
{
    int best = 0;
    std::fill(prev_north.begin(), prev_north.end(), kUnreached);
    std::fill(prev_east.begin(), prev_east.end(), kUnreached);
    for (int y = y0; y < p.height(); ++y) {
        std::fill(north.begin(), north.end(), kUnreached);
        std::fill(east.begin(), east.end(), kUnreached);
        const RowSpan row = p.row(y);
        bool any = false;
        for (int x = std::max(x0, row.left); x <= row.right; ++x) {
            int n = kUnreached;
            int e = kUnreached;
            if (y == y0 && x == x0) {
                n = e = 0;
            } else {
                if (y > y0) n = std::min(prev_north[static_cast<std::size_t>(x)], prev_east[static_cast<std::size_t>(x)] + 1);
                if (x > std::max(x0, row.left))
                    e = std::min(east[static_cast<std::size_t>(x - 1)], north[static_cast<std::size_t>(x - 1)] + 1);
            }
            n = std::min(n, kUnreached);
            e = std::min(e, kUnreached);
            north[static_cast<std::size_t>(x)] = n;
            east[static_cast<std::size_t>(x)] = e;
            const int d = std::min(n, e);
            if (d < kUnreached) {
                any = true;
                best = std::max(best, d);
            }
        }
        if (!any) break;
        std::swap(north, prev_north);
        std::swap(east, prev_east);
    }
    return best;
}

}  // namespace

int ne_degree(const Polyomino& p)
{
    const auto w = static_cast<std::size_t>(p.width());
    std::vector<int> north(w), east(w), prev_north(w), prev_east(w);
    int best = 0;
    for (int y = 0; y < p.height(); ++y) {
        const RowSpan row = p.row(y);
        for (int x = row.left; x <= row.right; ++x)
            best = std::max(best, ne_eccentricity(p, x, y, north, east, prev_north, prev_east));
    }
    return best;
}

DegreePair degree_pair(const Polyomino& p)
{
    return {ne_degree(p), ne_degree(p.mirror())};
}

bool is_centered(const Polyomino& p)
{
    const int last = p.width() - 1;
    for (const auto& r : p.rows())
        if (r.left == 0 && r.right == last) return true;
    return false;
}

bool is_ascending(const Polyomino& p)
{
    const auto rows = p.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j].left < rows[i].left && rows[j].right < rows[i].right) return false;
    return true;
}

bool is_descending(const Polyomino& p)
{
    const auto rows = p.rows();
    for (std::size_t i = 0; i < rows.size(); ++i)
        for (std::size_t j = i + 1; j < rows.size(); ++j)
            if (rows[j].left > rows[i].left && rows[j].right > rows[i].right) return false;
    return true;
}

bool is_directed_convex(const Polyomino& p)
{
    if (!p.contains(0, 0)) return false;
    const auto w = static_cast<std::size_t>(p.width());
    std::vector<char> below(w, 0), here(w, 0);
    int reached = 0;
    for (int y = 0; y < p.height(); ++y) {
        std::fill(here.begin(), here.end(), 0);
        const RowSpan row = p.row(y);
        for (int x = row.left; x <= row.right; ++x) {
            const auto ux = static_cast<std::size_t>(x);
            const bool origin = (x == 0 && y == 0);
            const bool from_left = x > row.left && here[ux - 1];
            if (origin || below[ux] || from_left) {
                here[ux] = 1;
                ++reached;
            }
        }
        std::swap(below, here);
    }
    return reached == p.area();
}

bool is_rectangular(const Polyomino& p)
{
    return p.rows().back().right == p.width() - 1;
}

bool is_four_stack(const Polyomino& p)
{
    // Rows [i..j] hold the supporting rectangle; the tightest column range is
    // [max left, min right] over those rows, and every other row must fit in it.
    const auto rows = p.rows();
    const std::size_t h = rows.size();
    constexpr int kBig = std::numeric_limits<int>::max();
    std::vector<int> pre_min_l(h + 1, kBig), pre_max_r(h + 1, -1);
    std::vector<int> suf_min_l(h + 1, kBig), suf_max_r(h + 1, -1);
    for (std::size_t i = 0; i < h; ++i) {
        pre_min_l[i + 1] = std::min(pre_min_l[i], rows[i].left);
        pre_max_r[i + 1] = std::max(pre_max_r[i], rows[i].right);
    }
    for (std::size_t i = h; i-- > 0;) {
        suf_min_l[i] = std::min(suf_min_l[i + 1], rows[i].left);
        suf_max_r[i] = std::max(suf_max_r[i + 1], rows[i].right);
    }
    for (std::size_t i = 0; i < h; ++i) {
        int max_l = -1;
        int min_r = kBig;
        for (std::size_t j = i; j < h; ++j) {
            max_l = std::max(max_l, rows[j].left);
            min_r = std::min(min_r, rows[j].right);
            if (max_l > min_r) break;
            const int out_min_l = std::min(pre_min_l[i], suf_min_l[j + 1]);
            const int out_max_r = std::max(pre_max_r[i], suf_max_r[j + 1]);
            if (max_l <= out_min_l && out_max_r <= min_r) return true;
        }
    }
    return false;
}

void CensusRow::add(const Polyomino& p, DegreePair d)
{
    total_convex += 1;
    by_degree_pair[{d.ne, d.nw}] += 1;
    const int g = d.global();
    if (g <= 1) l_convex += 1;
    if (g <= 2) z_convex += 1;
    if (d.ne == 2 && d.nw == 2) c22 += 1;
    if (d.ne == 2 && d.nw <= 1) c21 += 1;
    if (d.nw == 2 && d.ne <= 1) c12 += 1;
    if (is_centered(p)) centered += 1;
    if (is_four_stack(p)) four_stack += 1;
    const bool asc = is_ascending(p);
    const bool desc = is_descending(p);
    if (asc) ascending += 1;
    if (desc) descending += 1;
    if (asc && desc) ascending_and_descending += 1;
    if (is_directed_convex(p)) directed_convex += 1;
}

void CensusRow::merge(const CensusRow& o)
{
    total_convex += o.total_convex;
    for (const auto& [k, v] : o.by_degree_pair) by_degree_pair[k] += v;
    l_convex += o.l_convex;
    z_convex += o.z_convex;
    centered += o.centered;
    four_stack += o.four_stack;
    ascending += o.ascending;
    descending += o.descending;
    ascending_and_descending += o.ascending_and_descending;
    c22 += o.c22;
    c21 += o.c21;
    c12 += o.c12;
    directed_convex += o.directed_convex;
}

bool CensusRow::operator==(const CensusRow& o) const
{
    return size == o.size && total_convex == o.total_convex && by_degree_pair == o.by_degree_pair &&
           l_convex == o.l_convex && z_convex == o.z_convex && centered == o.centered &&
           four_stack == o.four_stack && ascending == o.ascending && descending == o.descending &&
           ascending_and_descending == o.ascending_and_descending && c22 == o.c22 && c21 == o.c21 &&
           c12 == o.c12 && directed_convex == o.directed_convex;
}

CensusRow census_serial(int n)
{
    CensusRow row;
    row.size = n;
    for_each_convex(n, [&](const Polyomino& p) { row.add(p, degree_pair(p)); });
    return row;
}

CensusRow census(int n, int threads)
{
    const auto parts = partitions(n);
    std::vector<CensusRow> partial(parts.size());
    const long count = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
    for (long i = 0; i < count; ++i) {
        auto& acc = partial[static_cast<std::size_t>(i)];
        for_each_in_partition(parts[static_cast<std::size_t>(i)], [&](const Polyomino& p) { acc.add(p, degree_pair(p)); });
    }
    CensusRow row;
    row.size = n;
    for (const auto& part : partial) row.merge(part);
    return row;
}

}  // namespace zcx
