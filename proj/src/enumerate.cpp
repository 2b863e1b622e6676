#include "zcx/enumerate.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

#include <omp.h>

#include "zcx/parallel.hpp"

namespace zcx {

namespace {

std::string token_key(RowSpan s, bool more_rows_follow)
{
    std::string k = std::to_string(s.left) + "-" + std::to_string(s.right);
    if (more_rows_follow) k += ';';
    return k;
}

/// All intervals inside [0, cols-1], sorted so that depth-first search
/// yields encodings in lexicographic order.
std::vector<RowSpan> sorted_intervals(int cols, bool more_rows_follow)
{
    std::vector<RowSpan> out;
    for (int l = 0; l < cols; ++l)
        for (int r = l; r < cols; ++r) out.push_back({l, r});
    std::sort(out.begin(), out.end(), [&](RowSpan a, RowSpan b) {
        return token_key(a, more_rows_follow) < token_key(b, more_rows_follow);
    });
    return out;
}

template <typename Emit>
class RowGrower {
public:
    RowGrower(const Partition& part, Emit& emit)
        : rows_(part.rows), cols_(part.cols), mid_(sorted_intervals(part.cols, true)),
          last_(sorted_intervals(part.cols, false)), emit_(emit)
    {
        path_.reserve(static_cast<std::size_t>(rows_));
        path_.push_back(part.first);
    }

    void run()
    {
        const RowSpan f = path_.front();
        grow(f, false, false, f.left, f.right);
    }

private:
    // lrise: left endpoints already went up (may not go down again).
    // rfall: right endpoints already went down (may not go up again).
    void grow(RowSpan prev, bool lrise, bool rfall, int min_left, int max_right)
    {
        const int depth = static_cast<int>(path_.size());
        if (depth == rows_) {
            if (min_left == 0 && max_right == cols_ - 1) emit_(path_);
            return;
        }
        const auto& candidates = (depth == rows_ - 1) ? last_ : mid_;
        for (const RowSpan s : candidates) {
            if (s.left > prev.right || prev.left > s.right) continue;
            if (lrise && s.left < prev.left) continue;
            if (rfall && s.right > prev.right) continue;
            const bool nl = lrise || s.left > prev.left;
            const bool nr = rfall || s.right < prev.right;
            const int mn = std::min(min_left, s.left);
            const int mx = std::max(max_right, s.right);
            if (nl && mn > 0) continue;
            if (nr && mx < cols_ - 1) continue;
            path_.push_back(s);
            grow(s, nl, nr, mn, mx);
            path_.pop_back();
        }
    }

    int rows_;
    int cols_;
    std::vector<RowSpan> mid_;
    std::vector<RowSpan> last_;
    std::vector<RowSpan> path_;
    Emit& emit_;
};

void check_size(int n)
{
    if (n < 2) throw std::invalid_argument("polyomino size must be at least 2, got " + std::to_string(n));
}

}  // namespace

std::vector<Partition> partitions(int n)
{
    check_size(n);
    std::vector<Partition> out;
    for (int r = 1; r < n; ++r) {
        const int c = n - r;
        for (const RowSpan first : sorted_intervals(c, r > 1)) out.push_back({r, c, first});
    }
    return out;
}

void for_each_in_partition(const Partition& part, const ShapeVisitor& visit)
{
    auto emit = [&](const std::vector<RowSpan>& rows) { visit(Polyomino::from_rows(rows)); };
    RowGrower<decltype(emit)> grower(part, emit);
    grower.run();
}

std::uint64_t count_in_partition(const Partition& part)
{
    std::uint64_t count = 0;
    auto emit = [&](const std::vector<RowSpan>&) { ++count; };
    RowGrower<decltype(emit)> grower(part, emit);
    grower.run();
    return count;
}

void for_each_convex(int n, const ShapeVisitor& visit)
{
    for (const auto& part : partitions(n)) for_each_in_partition(part, visit);
}

std::vector<Polyomino> all_convex(int n)
{
    std::vector<Polyomino> out;
    for_each_convex(n, [&](const Polyomino& p) { out.push_back(p); });
    return out;
}

std::vector<Polyomino> all_convex_parallel(int n, int threads)
{
    const auto parts = partitions(n);
    std::vector<std::vector<Polyomino>> chunks(parts.size());
    const long count = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
    for (long i = 0; i < count; ++i) {
        auto& chunk = chunks[static_cast<std::size_t>(i)];
        for_each_in_partition(parts[static_cast<std::size_t>(i)], [&](const Polyomino& p) { chunk.push_back(p); });
    }
    std::vector<Polyomino> out;
    for (auto& chunk : chunks)
        for (auto& p : chunk) out.push_back(std::move(p));
    return out;
}

mpz_class count_convex(int n)
{
    std::uint64_t total = 0;
    for (const auto& part : partitions(n)) total += count_in_partition(part);
    return mpz_class(static_cast<unsigned long>(total));
}

mpz_class count_convex_parallel(int n, int threads)
{
    const auto parts = partitions(n);
    std::uint64_t total = 0;
    const long count = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic) reduction(+ : total) num_threads(resolve_threads(threads))
    for (long i = 0; i < count; ++i) total += count_in_partition(parts[static_cast<std::size_t>(i)]);
    return mpz_class(static_cast<unsigned long>(total));
}

}  // namespace zcx
