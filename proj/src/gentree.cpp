#include "zcx/gentree.hpp"

#include <algorithm>
#include <unordered_map>

#include <omp.h>

#include "zcx/classify.hpp"
#include "zcx/parallel.hpp"

namespace zcx {

namespace {

using Rows = std::vector<RowSpan>;

Rows rows_of(const Polyomino& p)
{
    return Rows(p.rows().begin(), p.rows().end());
}

// Full-width rows of a centered polyomino, as the index range [lo, hi].
struct Base {
    int lo = -1;
    int hi = -1;

    bool found() const { return lo >= 0; }
    int height() const { return hi - lo + 1; }
};

Base full_width_rows(const Polyomino& p)
{
    Base base;
    const int last = p.width() - 1;
    for (int i = 0; i < p.height(); ++i) {
        const RowSpan& row = p.row(i);
        if (row.left != 0 || row.right != last) continue;
        if (!base.found()) base.lo = i;
        base.hi = i;
    }
    return base;
}

void require_ascending(const Polyomino& p)
{
    if (!is_ascending(p))
        throw GentreeException(GentreeError::NotAscending, "not an ascending polyomino: " + p.encode());
}

// Last-column cells above row hi. The last column is an interval, so these
// are exactly rows hi+1 .. hi+r.
int last_column_above(const Polyomino& p, int hi)
{
    const int last = p.width() - 1;
    int r = 0;
    for (int i = hi + 1; i < p.height(); ++i)
        if (p.row(i).right == last) ++r;
    return r;
}

void push(std::vector<Child>& out, Operation op, Rows rows)
{
    out.push_back({op, Polyomino::from_rows(std::move(rows))});
}

// A new column right of the last one, covering rows [y0, y0 + len) for every
// placement inside rows [first, first + span).
void attach_columns(std::vector<Child>& out, Operation op, const Polyomino& p, int first, int span)
{
    const int c = p.width();
    for (int len = 1; len <= span; ++len)
        for (int y0 = first; y0 + len <= first + span; ++y0) {
            Rows rows = rows_of(p);
            for (int y = y0; y < y0 + len; ++y) rows[static_cast<std::size_t>(y)].right = c;
            push(out, op, std::move(rows));
        }
}

void add(Production& out, Family f, int b, int w, int r, bool rect, std::uint64_t times = 1)
{
    if (times) out.push_back({TreeLabel{f, b, w, r, rect}, times});
}

// Non-centered children of a source whose last column offers r cells.
void nc_part(Production& out, int r, bool rect)
{
    if (rect) {
        for (int k = 1; k < r; ++k) {
            add(out, Family::NC, 1, 0, k, true);
            add(out, Family::NC, 1, 0, k, false, static_cast<std::uint64_t>(r - k));
        }
        if (r > 0) add(out, Family::NC, 1, 0, r, true);
    } else {
        for (int k = 1; k <= r; ++k) add(out, Family::NC, 1, 0, k, false, static_cast<std::uint64_t>(r - k + 1));
    }
}

Production grouped(Production items)
{
    std::sort(items.begin(), items.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    Production out;
    for (const auto& [label, times] : items) {
        if (!out.empty() && out.back().first == label)
            out.back().second += times;
        else
            out.emplace_back(label, times);
    }
    return out;
}

std::uint64_t pack(const TreeLabel& l)
{
    return (static_cast<std::uint64_t>(l.family) << 49) | (static_cast<std::uint64_t>(l.rect) << 48) |
           (static_cast<std::uint64_t>(l.b) << 32) | (static_cast<std::uint64_t>(l.w) << 16) |
           static_cast<std::uint64_t>(l.r);
}

TreeLabel unpack(std::uint64_t k)
{
    TreeLabel l;
    l.family = static_cast<Family>(k >> 49);
    l.rect = ((k >> 48) & 1U) != 0;
    l.b = static_cast<int>((k >> 32) & 0xFFFFU);
    l.w = static_cast<int>((k >> 16) & 0xFFFFU);
    l.r = static_cast<int>(k & 0xFFFFU);
    return l;
}

using Accumulator = std::unordered_map<std::uint64_t, mpz_class>;

void expand_into(Accumulator& acc, const TreeLabel& label, const mpz_class& count)
{
    for (const auto& [child, times] : succ(label)) {
        mpz_class& slot = acc[pack(child)];
        mpz_addmul_ui(slot.get_mpz_t(), count.get_mpz_t(), static_cast<unsigned long>(times));
    }
}

LabelLevel to_level(int level, const Accumulator& acc)
{
    LabelLevel out;
    out.level = level;
    for (const auto& [key, count] : acc) out.counts.emplace(unpack(key), count);
    return out;
}

LabelLevel root_level()
{
    LabelLevel root;
    root.level = 2;
    root.counts.emplace(root_label(), 1);
    return root;
}

}  // namespace

std::string_view to_string(Family f)
{
    switch (f) {
    case Family::C0: return "C0";
    case Family::C: return "C";
    case Family::C1: return "C1";
    case Family::L0: return "L0";
    case Family::L: return "L";
    case Family::R: return "R";
    case Family::S0: return "S0";
    case Family::S: return "S";
    case Family::NC: return "NC";
    }
    return "?";
}

std::string_view to_string(Operation op)
{
    switch (op) {
    case Operation::LeftCell: return "LeftCell";
    case Operation::RightCell: return "RightCell";
    case Operation::Row: return "Row";
    case Operation::Shift: return "Shift";
    case Operation::Nc: return "Nc";
    case Operation::NcStar: return "Nc*";
    }
    return "?";
}

std::string TreeLabel::to_string() const
{
    const std::string mark = rect ? "'" : "";
    if (family == Family::NC) return "(" + std::to_string(r) + ")" + mark + "_NC";
    return "(" + std::to_string(b) + "," + std::to_string(w) + "," + std::to_string(r) + ")" + mark + "_" +
           std::string(zcx::to_string(family));
}

void validate(const TreeLabel& l)
{
    auto fail = [&](const char* why) {
        throw GentreeException(GentreeError::InvalidLabel, l.to_string() + ": " + why);
    };
    if (l.b < 1 || l.w < 0 || l.r < 0) fail("b must be >= 1 and w, r >= 0");
    switch (l.family) {
    case Family::C0:
    case Family::L0:
    case Family::S0:
        if (!l.rect || l.r != 0) fail("flipped stacks are rectangular with r = 0");
        if (l.w < 1) fail("flipped stacks have w = width >= 1");
        break;
    case Family::C1:
        if (l.w != 0 || l.r != 0 || l.rect) fail("C1 needs w = r = 0, non-rectangular");
        break;
    case Family::R:
        if (l.w != 0 || l.r != 0 || l.rect) fail("R is (1,0,0), non-rectangular");
        break;
    case Family::C:
    case Family::L:
    case Family::S:
        if (l.w < 1) fail("needs w > 0");
        if (l.family == Family::S && l.rect && l.r == 0) fail("rectangular S needs r > 0");
        break;
    case Family::NC:
        if (l.b != 1 || l.w != 0 || l.r < 1) fail("NC labels are (r) with r >= 1");
        break;
    }
    const bool tall = l.family == Family::C || l.family == Family::C0 || l.family == Family::C1;
    if (tall && l.b < 2) fail("C families need b > 1");
    if (!tall && l.b != 1) fail("b must be 1");
}

TreeLabel root_label()
{
    return {Family::L0, 1, 1, 0, true};
}

TreeLabel label_of(const Polyomino& p)
{
    require_ascending(p);
    const int c = p.width();
    const bool rect = p.row(p.height() - 1).right == c - 1;
    const Base base = full_width_rows(p);
    if (!base.found()) return {Family::NC, 1, 0, p.column_length(c - 1), rect};

    const int b = base.height();
    const bool flipped = base.hi == p.height() - 1;
    const int w = flipped ? c : p.row(base.hi + 1).left;
    const int r = last_column_above(p, base.hi);

    Family f;
    if (b > 1)
        f = flipped ? Family::C0 : (w > 0 ? Family::C : Family::C1);
    else if (p.column_length(0) == 1)
        f = flipped ? Family::L0 : Family::L;
    else if (w == 0)
        f = Family::R;
    else
        f = flipped ? Family::S0 : Family::S;
    return {f, b, w, r, rect};
}

std::vector<Child> children(const Polyomino& p)
{
    require_ascending(p);
    std::vector<Child> out;
    const int c = p.width();
    const int h = p.height();
    const Base base = full_width_rows(p);

    if (!base.found()) {
        const ColumnSpan last = p.column(c - 1);
        attach_columns(out, Operation::NcStar, p, last.bottom, last.length());
        if (p.row(h - 1).right == c - 1) {
            Rows rows = rows_of(p);
            rows.push_back({c - 1, c - 1});
            push(out, Operation::NcStar, std::move(rows));
        }
        return out;
    }

    const int b = base.height();
    const bool flipped = base.hi == h - 1;
    const int w = flipped ? c : p.row(base.hi + 1).left;
    const int first_column = p.column_length(0);

    for (int k = base.lo; k <= base.hi; ++k) {
        Rows rows = rows_of(p);
        for (auto& row : rows) {
            ++row.left;
            ++row.right;
        }
        rows[static_cast<std::size_t>(k)].left = 0;
        push(out, Operation::LeftCell, std::move(rows));
    }

    if (first_column != 1)
        for (int k = base.lo; k <= base.hi; ++k) {
            Rows rows = rows_of(p);
            rows[static_cast<std::size_t>(k)].right = c;
            push(out, Operation::RightCell, std::move(rows));
        }

    {
        Rows rows = rows_of(p);
        rows.insert(rows.begin() + base.hi + 1, RowSpan{0, c - 1});
        push(out, Operation::Row, std::move(rows));
    }

    if (w > 0 && b == 1 && first_column > 1) {
        if (flipped) {
            for (int len = 1; len < c; ++len) {
                Rows rows = rows_of(p);
                rows.push_back({c - len, c - 1});
                push(out, Operation::Shift, std::move(rows));
            }
        } else {
            for (int left = 1; left <= w; ++left) {
                Rows rows = rows_of(p);
                rows.insert(rows.begin() + base.hi + 1, RowSpan{left, c - 1});
                push(out, Operation::Shift, std::move(rows));
            }
        }
    }

    attach_columns(out, Operation::Nc, p, base.hi + 1, last_column_above(p, base.hi));
    return out;
}

std::optional<Child> parent(const Polyomino& p)
{
    require_ascending(p);
    if (p.size() == 2) return std::nullopt;
    const int c = p.width();
    const int h = p.height();
    Rows rows = rows_of(p);
    const Base base = full_width_rows(p);

    if (!base.found()) {
        const RowSpan top = p.row(h - 1);
        if (top.left == c - 1 && top.right == c - 1) {
            rows.pop_back();
            return Child{Operation::NcStar, Polyomino::from_rows(std::move(rows))};
        }
        for (auto& row : rows)
            if (row.right == c - 1) --row.right;
        Polyomino up = Polyomino::from_rows(std::move(rows));
        const Operation op = full_width_rows(up).found() ? Operation::Nc : Operation::NcStar;
        return Child{op, std::move(up)};
    }

    if (base.height() > 1) {
        rows.erase(rows.begin() + base.hi);
        return Child{Operation::Row, Polyomino::from_rows(std::move(rows))};
    }
    if (p.column_length(0) == 1) {
        rows[static_cast<std::size_t>(base.hi)].left = 1;
        return Child{Operation::LeftCell, Polyomino::from_rows(std::move(rows))};
    }
    if (p.column_length(c - 1) == 1) {
        rows[static_cast<std::size_t>(base.hi)].right = c - 2;
        return Child{Operation::RightCell, Polyomino::from_rows(std::move(rows))};
    }
    rows.erase(rows.begin() + base.hi + 1);
    return Child{Operation::Shift, Polyomino::from_rows(std::move(rows))};
}

Production succ(const TreeLabel& l)
{
    validate(l);
    Production out;
    const int b = l.b;
    const int w = l.w;
    const int r = l.r;
    const bool rect = l.rect;
    switch (l.family) {
    case Family::C:
        add(out, Family::L, 1, w + 1, r, rect);
        for (int j = 1; j < b; ++j) add(out, Family::L, 1, 1, r + j, rect);
        add(out, Family::S, 1, w, 0, false);
        add(out, Family::R, 1, 0, 0, false, static_cast<std::uint64_t>(b - 1));
        add(out, Family::C, b + 1, w, r, rect);
        nc_part(out, r, rect);
        break;
    case Family::C0:
        add(out, Family::L0, 1, w + 1, 0, true);
        for (int j = 1; j < b; ++j) add(out, Family::L, 1, 1, j, true);
        add(out, Family::S0, 1, w + 1, 0, true);
        add(out, Family::R, 1, 0, 0, false, static_cast<std::uint64_t>(b - 1));
        add(out, Family::C0, b + 1, w, 0, true);
        break;
    case Family::C1:
        for (int j = 0; j < b; ++j) add(out, Family::L, 1, 1, j, false);
        add(out, Family::R, 1, 0, 0, false, static_cast<std::uint64_t>(b));
        add(out, Family::C1, b + 1, 0, 0, false);
        break;
    case Family::L0:
        add(out, Family::L0, 1, w + 1, 0, true);
        add(out, Family::C0, 2, w, 0, true);
        break;
    case Family::L:
        add(out, Family::L, 1, w + 1, r, rect);
        add(out, Family::C, 2, w, r, rect);
        nc_part(out, r, rect);
        break;
    case Family::R:
        add(out, Family::L, 1, 1, 0, false);
        add(out, Family::R, 1, 0, 0, false);
        add(out, Family::C1, 2, 0, 0, false);
        break;
    case Family::S0:
        add(out, Family::L0, 1, w + 1, 0, true);
        add(out, Family::S0, 1, w + 1, 0, true);
        add(out, Family::C0, 2, w, 0, true);
        for (int j = 1; j < w; ++j) add(out, Family::S, 1, j, 1, true);
        break;
    case Family::S:
        add(out, Family::L, 1, w + 1, r, rect);
        add(out, Family::S, 1, w, 0, false);
        add(out, Family::C, 2, w, r, rect);
        for (int j = 1; j <= w; ++j) add(out, Family::S, 1, j, r + 1, rect);
        nc_part(out, r, rect);
        break;
    case Family::NC:
        if (rect) {
            for (int k = 1; k <= r + 1; ++k) add(out, Family::NC, 1, 0, k, true);
            for (int k = 1; k < r; ++k) add(out, Family::NC, 1, 0, k, false, static_cast<std::uint64_t>(r - k));
        } else {
            nc_part(out, r, false);
        }
        break;
    }
    return grouped(std::move(out));
}

Production child_labels(const Polyomino& p)
{
    Production items;
    for (const auto& child : children(p)) items.emplace_back(label_of(child.polyomino), 1);
    return grouped(std::move(items));
}

mpz_class LabelLevel::total() const
{
    mpz_class sum;
    for (const auto& kv : counts) sum += kv.second;
    return sum;
}

mpz_class LabelLevel::centered() const
{
    mpz_class sum;
    for (const auto& [label, count] : counts)
        if (label.family != Family::NC) sum += count;
    return sum;
}

mpz_class LabelLevel::non_centered() const
{
    return total() - centered();
}

mpz_class LabelLevel::rectangular() const
{
    mpz_class sum;
    for (const auto& [label, count] : counts)
        if (label.rect) sum += count;
    return sum;
}

std::vector<LabelLevel> count_levels_serial(int max_size)
{
    if (max_size < 2) throw std::invalid_argument("count_levels needs max_size >= 2");
    std::vector<LabelLevel> levels{root_level()};
    for (int n = 3; n <= max_size; ++n) {
        Accumulator acc;
        for (const auto& [label, count] : levels.back().counts) expand_into(acc, label, count);
        levels.push_back(to_level(n, acc));
    }
    return levels;
}

std::vector<LabelLevel> count_levels(int max_size, int threads)
{
    if (max_size < 2) throw std::invalid_argument("count_levels needs max_size >= 2");
    const int workers = resolve_threads(threads);
    std::vector<LabelLevel> levels{root_level()};
    for (int n = 3; n <= max_size; ++n) {
        const std::vector<std::pair<TreeLabel, mpz_class>> source(levels.back().counts.begin(),
                                                                  levels.back().counts.end());
        std::vector<Accumulator> partial(static_cast<std::size_t>(workers));
        const long count = static_cast<long>(source.size());
#pragma omp parallel num_threads(workers)
        {
            Accumulator& acc = partial[static_cast<std::size_t>(omp_get_thread_num())];
#pragma omp for schedule(dynamic, 64)
            for (long i = 0; i < count; ++i) {
                const auto& [label, mult] = source[static_cast<std::size_t>(i)];
                expand_into(acc, label, mult);
            }
        }
        Accumulator merged = std::move(partial.front());
        for (std::size_t t = 1; t < partial.size(); ++t)
            for (auto& [key, value] : partial[t]) merged[key] += value;
        levels.push_back(to_level(n, merged));
    }
    return levels;
}

std::vector<std::vector<Polyomino>> construct_levels(int max_size, int threads)
{
    if (max_size < 2) throw std::invalid_argument("construct_levels needs max_size >= 2");
    std::vector<std::vector<Polyomino>> levels{{Polyomino::unit()}};
    for (int n = 3; n <= max_size; ++n) {
        const auto& source = levels.back();
        std::vector<std::vector<Polyomino>> grown(source.size());
        const long count = static_cast<long>(source.size());
#pragma omp parallel for schedule(dynamic, 256) num_threads(resolve_threads(threads))
        for (long i = 0; i < count; ++i) {
            auto& out = grown[static_cast<std::size_t>(i)];
            for (auto& child : children(source[static_cast<std::size_t>(i)])) out.push_back(std::move(child.polyomino));
        }
        std::vector<Polyomino> next;
        for (auto& chunk : grown)
            for (auto& q : chunk) next.push_back(std::move(q));
        levels.push_back(std::move(next));
    }
    return levels;
}

std::vector<std::string> dump_lines(const LabelLevel& level)
{
    std::vector<std::string> lines;
    lines.reserve(level.counts.size());
    for (const auto& [label, count] : level.counts)
        lines.push_back(std::string(to_string(label.family)) + "," + std::to_string(label.b) + "," +
                        std::to_string(label.w) + "," + std::to_string(label.r) + "," + (label.rect ? "1" : "0") +
                        "," + count.get_str());
    std::sort(lines.begin(), lines.end());
    return lines;
}

}  // namespace zcx
