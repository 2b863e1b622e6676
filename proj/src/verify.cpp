#include "zcx/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <fstream>
#include <functional>
#include <iterator>
#include <iomanip>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "zcx/catalog.hpp"
#include "zcx/classify.hpp"
#include "zcx/enumerate.hpp"
#include "zcx/gentree.hpp"
#include "zcx/parallel.hpp"
#include "zcx/reference.hpp"

namespace zcx {

namespace {

using Clock = std::chrono::steady_clock;

class Recorder {
public:
    explicit Recorder(std::string suite) : start_(Clock::now()) { report_.suite = std::move(suite); }

    void check(std::string description, bool ok, std::string witness = {})
    {
        if (!ok && witness.empty()) witness = "(no witness recorded)";
        report_.checks.push_back({std::move(description), ok ? CheckStatus::Pass : CheckStatus::Fail,
                                  std::move(witness)});
    }

    void info(std::string description, std::string witness)
    {
        report_.checks.push_back({std::move(description), CheckStatus::Info, std::move(witness)});
    }

    SuiteReport finish()
    {
        report_.elapsed_seconds = std::chrono::duration<double>(Clock::now() - start_).count();
        return std::move(report_);
    }

private:
    SuiteReport report_;
    Clock::time_point start_;
};

template <typename A, typename B>
std::string triple(long n, const A& expected, const B& got)
{
    std::ostringstream os;
    os << "n=" << n << " expected=" << expected << " got=" << got;
    return os.str();
}

// First n in [lo, hi] with expected(n) != got(n), as a witness; empty if none.
template <typename F, typename G>
std::string first_mismatch(long lo, long hi, F expected, G got)
{
    for (long n = lo; n <= hi; ++n) {
        const auto e = expected(n);
        const auto g = got(n);
        if (e != g) return triple(n, e, g);
    }
    return {};
}

Rational power(const Rational& base, int k)
{
    Rational out = 1;
    for (int i = 0; i < k; ++i) out *= base;
    return out;
}

mpz_class as_integer(const Rational& q)
{
    return q.get_num();
}

std::string fixed(double v)
{
    std::ostringstream os;
    os << std::fixed << std::setprecision(6) << v;
    return os.str();
}

std::vector<std::string> sorted_encodings(const std::vector<Polyomino>& shapes)
{
    std::vector<std::string> out;
    out.reserve(shapes.size());
    for (const auto& p : shapes) out.push_back(p.encode());
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Polyomino> ascending_of_size(int n, int threads)
{
    std::vector<Polyomino> out;
    for (auto& p : all_convex_parallel(n, threads))
        if (is_ascending(p)) out.push_back(std::move(p));
    return out;
}

// ---- structure tallies ----

enum Property {
    MirrorSwap,
    Prop1,
    Prop2,
    Prop4,
    AscDescIsL,
    FastMatchesReference,
    PropertyCount,
};

struct StructureTally {
    std::array<std::optional<std::string>, PropertyCount> witness;
    mpz_class four_stack, ascending, descending, rect_ascending, directed, l_convex, z_convex, c12, c21, c22;

    void flag(Property p, const Polyomino& shape)
    {
        if (!witness[p]) witness[p] = shape.encode();
    }

    void merge(const StructureTally& o)
    {
        for (std::size_t i = 0; i < witness.size(); ++i)
            if (!witness[i] && o.witness[i]) witness[i] = o.witness[i];
        four_stack += o.four_stack;
        ascending += o.ascending;
        descending += o.descending;
        rect_ascending += o.rect_ascending;
        directed += o.directed;
        l_convex += o.l_convex;
        z_convex += o.z_convex;
        c12 += o.c12;
        c21 += o.c21;
        c22 += o.c22;
    }
};

void tally_shape(StructureTally& t, const Polyomino& p, int n)
{
    const DegreePair d = degree_pair(p);
    const bool asc = is_ascending(p);
    const bool desc = is_descending(p);
    const bool four = is_four_stack(p);

    if (n <= 10) {
        const DegreePair m = degree_pair(p.mirror());
        if (m.ne != d.nw || m.nw != d.ne) t.flag(MirrorSwap, p);
    }
    if (n <= 9) {
        if (reference::degree_pair_bfs(p) != d || reference::is_four_stack_scan(p) != four)
            t.flag(FastMatchesReference, p);
    }
    if (d.nw < d.ne && d.ne > 2 && d.nw > 1) t.flag(Prop1, p);
    if (d.ne == 2 && d.nw == 2 && !four) t.flag(Prop2, p);
    if (n <= 11 && asc != (d.nw <= 1)) t.flag(Prop4, p);
    if ((asc && desc) != (d.global() <= 1)) t.flag(AscDescIsL, p);

    if (four) t.four_stack += 1;
    if (asc) t.ascending += 1;
    if (desc) t.descending += 1;
    if (asc && is_rectangular(p)) t.rect_ascending += 1;
    if (is_directed_convex(p)) t.directed += 1;
    if (d.global() <= 1) t.l_convex += 1;
    if (d.global() <= 2) t.z_convex += 1;
    if (d.nw == 2 && d.ne <= 1) t.c12 += 1;
    if (d.ne == 2 && d.nw <= 1) t.c21 += 1;
    if (d.ne == 2 && d.nw == 2) t.c22 += 1;
}

StructureTally structure_tally(int n, int threads)
{
    const auto parts = partitions(n);
    std::vector<StructureTally> partial(parts.size());
    const long count = static_cast<long>(parts.size());
#pragma omp parallel for schedule(dynamic) num_threads(resolve_threads(threads))
    for (long i = 0; i < count; ++i) {
        auto& t = partial[static_cast<std::size_t>(i)];
        for_each_in_partition(parts[static_cast<std::size_t>(i)], [&](const Polyomino& p) { tally_shape(t, p, n); });
    }
    StructureTally out;
    for (const auto& t : partial) out.merge(t);
    return out;
}

// ---- refined statistics ----


std::string rect_class_name(const TreeLabel& l)
{
    switch (l.family) {
    case Family::C0: return "C0p";
    case Family::L0: return "L0p";
    case Family::S0: return "S0p";
    case Family::S: return l.rect ? "Sp" : "S111";
    case Family::C: return l.rect ? "Cp" : "C111";
    case Family::L: return l.rect ? "Lp" : "L111";
    case Family::NC: return l.rect ? "Np" : "N1";
    case Family::R: return "R1";
    case Family::C1: return "C1at1";
    }
    return "?";
}

}  // namespace

bool SuiteReport::passed() const
{
    return failures() == 0;
}

std::size_t SuiteReport::failures() const
{
    return static_cast<std::size_t>(
        std::count_if(checks.begin(), checks.end(), [](const CheckResult& c) { return c.status == CheckStatus::Fail; }));
}

SuiteReport suite_identities(int max_n, int threads)
{
    Recorder rec("identities");
    const int top = std::min(max_n, 12);
    constexpr std::size_t kOrder = 301;

    const Series C = gf(GfName::C, kOrder);
    const Series A = gf(GfName::A, kOrder);
    const Series L = gf(GfName::L, kOrder);
    const Series Z = gf(GfName::Z, kOrder);
    const Series E = gf(GfName::E, kOrder);
    const Series S4 = gf(GfName::S4, kOrder);
    const Series C22 = gf(GfName::C22, kOrder);
    const Series C21 = gf(GfName::C21, kOrder);

    std::vector<CensusRow> rows;
    for (int n = 2; n <= top; ++n) rows.push_back(census(n, threads));
    auto row = [&](long n) -> const CensusRow& { return rows[static_cast<std::size_t>(n - 2)]; };
    auto coeff = [](const Series& s) { return [&s](long n) { return as_integer(s[static_cast<std::size_t>(n)]); }; };
    auto pair_count = [](const CensusRow& r, int ne, int nw) {
        const auto it = r.by_degree_pair.find({ne, nw});
        return it == r.by_degree_pair.end() ? mpz_class(0) : it->second;
    };

    const std::string span = ", 2 <= n <= " + std::to_string(top);
    auto versus = [&](const std::string& what, auto field, const Series& s) {
        const std::string w = first_mismatch(2, top, coeff(s), [&](long n) { return field(row(n)); });
        rec.check(what + span, w.empty(), w);
    };

    {
        const std::string w = first_mismatch(
            2, top, [&](long n) { return row(n).total_convex; },
            [&](long n) { return mpz_class(2 * row(n).ascending + row(n).c22 - row(n).l_convex); });
        rec.check("c(n) = 2a(n) + k(n) - l(n) on the census" + span, w.empty(), w);
    }

    {
        std::string w;
        for (long n = 2; n <= top && w.empty(); ++n) {
            const auto& r = row(n);
            mpz_class sum, low, mid;
            for (const auto& [pair, count] : r.by_degree_pair) {
                sum += count;
                const int g = std::max(pair.first, pair.second);
                if (g <= 1) low += count;
                if (g <= 2) mid += count;
            }
            if (sum != r.total_convex) w = triple(n, r.total_convex, sum) + " (histogram sum)";
            else if (low != r.l_convex) w = triple(n, r.l_convex, low) + " (max degree <= 1)";
            else if (mid != r.z_convex) w = triple(n, r.z_convex, mid) + " (max degree <= 2)";
            else if (pair_count(r, 2, 2) != r.c22) w = triple(n, r.c22, pair_count(r, 2, 2)) + " (pair (2,2))";
        }
        rec.check("census buckets agree with the degree histogram" + span, w.empty(), w);
    }

    // Partition claims, read literally. Degree pairs with a zero component
    // beside a 2 or more make the literal claims fall short; those are
    // reported as findings while the bucket definitions stay the standard.
    {
        std::string w;
        for (long n = 2; n <= top && w.empty(); ++n) {
            const auto& r = row(n);
            const mpz_class parts = pair_count(r, 0, 0) + pair_count(r, 0, 1) + pair_count(r, 1, 0) + pair_count(r, 1, 1);
            if (parts != r.l_convex) w = triple(n, r.l_convex, parts);
        }
        rec.check("L-convex = C(1,1) u C(1,0) u C(0,1) u C(0,0)" + span, w.empty(), w);
    }
    {
        std::string w;
        for (long n = 2; n <= top && w.empty(); ++n) {
            const auto& r = row(n);
            const mpz_class parts = pair_count(r, 1, 2) + pair_count(r, 2, 1) + pair_count(r, 2, 2);
            const mpz_class expected = r.z_convex - r.l_convex;
            if (parts != expected) {
                w = triple(n, expected, parts) + "; pairs (0,2)=" + pair_count(r, 0, 2).get_str() +
                    " (2,0)=" + pair_count(r, 2, 0).get_str();
            }
        }
        const std::string what = "Z-convex minus L-convex = C(1,2) u C(2,1) u C(2,2), literal" + span;
        if (w.empty())
            rec.check(what, true);
        else
            rec.info(what, w);
    }
    {
        std::string hard, literal;
        for (long n = 2; n <= top; ++n)
            for (const auto& [pair, count] : row(n).by_degree_pair) {
                const int lo = std::min(pair.first, pair.second);
                const int hi = std::max(pair.first, pair.second);
                if (hi <= 2) continue;
                const std::string where = "n=" + std::to_string(n) + " pair (" + std::to_string(pair.first) + "," +
                                          std::to_string(pair.second) + ") count=" + count.get_str();
                if (lo > 1 && hard.empty()) hard = where;
                if (lo == 0 && literal.empty()) literal = where;
            }
        rec.check("degree k > 2 occurs only with the other degree <= 1" + span, hard.empty(), hard);
        if (!literal.empty()) rec.info("degree k > 2 pairs with a zero component, beside C(1,k) u C(k,1)", literal);
    }

    versus("convex count = [t^n] C(t)", [](const CensusRow& r) { return r.total_convex; }, C);
    versus("L-convex count = [t^n] L(t)", [](const CensusRow& r) { return r.l_convex; }, L);
    versus("Z-convex count = [t^n] Z(t)", [](const CensusRow& r) { return r.z_convex; }, Z);
    versus("centered count = [t^n] E(t)", [](const CensusRow& r) { return r.centered; }, E);
    versus("4-stack count = [t^n] S4(t)", [](const CensusRow& r) { return r.four_stack; }, S4);
    versus("ascending count = [t^n] A(t)", [](const CensusRow& r) { return r.ascending; }, A);
    versus("descending count = [t^n] A(t)", [](const CensusRow& r) { return r.descending; }, A);
    versus("ascending and descending count = [t^n] L(t)",
           [](const CensusRow& r) { return r.ascending_and_descending; }, L);
    versus("c22 count = [t^n] C22(t)", [](const CensusRow& r) { return r.c22; }, C22);
    versus("c21 count = [t^n] C21(t)", [](const CensusRow& r) { return r.c21; }, C21);
    versus("c12 count = [t^n] C21(t)", [](const CensusRow& r) { return r.c12; }, C21);

    {
        const Series rhs = Rational(2) * A + C22 - L;
        const long at = first_difference(C, rhs);
        rec.check("C(t) = 2A(t) + C22(t) - L(t) to order 300", at < 0,
                  at < 0 ? "" : triple(at, C[static_cast<std::size_t>(at)], rhs[static_cast<std::size_t>(at)]));
    }
    {
        const Series rhs = Rational(2) * C21 + C22 + L;
        const long at = first_difference(Z, rhs);
        rec.check("Z(t) = 2C21(t) + C22(t) + L(t) to order 300", at < 0,
                  at < 0 ? "" : triple(at, Z[static_cast<std::size_t>(at)], rhs[static_cast<std::size_t>(at)]));
    }

    {
        std::string w;
        for (const GfName g : all_gf_names()) {
            if (!required_params(g).empty()) continue;
            const Series s = gf(g, kOrder);
            for (std::size_t n = 0; n < s.order() && w.empty(); ++n)
                if (s[n].get_den() != 1 || sgn(s[n]) < 0)
                    w = std::string(name_of(g)) + " n=" + std::to_string(n) + " coefficient=" + to_string(s[n]);
        }
        rec.check("counting series have nonnegative integer coefficients to order 300", w.empty(), w);
    }

    // Printed prefixes.
    struct Printed {
        GfName g;
        long offset;
        std::vector<long> values;
    };
    const std::vector<Printed> printed{
        {GfName::A, 2, {1, 2, 7, 26, 101, 404, 1649, 6824, 28498}},
        {GfName::H, 2, {1, 2, 7, 25, 91, 336, 1254, 4719, 17875}},
        {GfName::Rect, 2, {1, 2, 6, 20, 70, 252, 924, 3432, 12870}},
        {GfName::C22, 8, {2, 32, 308, 2320, 15094, 89104, 491012}},
        {GfName::C21, 5, {2, 17, 102, 532, 2576, 11919, 53504, 235115, 1017218}},
    };
    for (const auto& p : printed) {
        const Series s = gf(p.g, static_cast<std::size_t>(p.offset) + p.values.size());
        const std::string w = first_mismatch(
            p.offset, p.offset + static_cast<long>(p.values.size()) - 1,
            [&](long n) { return mpz_class(p.values[static_cast<std::size_t>(n - p.offset)]); },
            [&](long n) { return as_integer(s[static_cast<std::size_t>(n)]); });
        rec.check(std::string("printed prefix of ") + std::string(name_of(p.g)), w.empty(), w);
    }
    {
        const std::vector<long> l_prefix{1, 2, 7, 24, 82, 280, 956, 3264};
        const std::string w = first_mismatch(
            2, 9, [&](long n) { return mpz_class(l_prefix[static_cast<std::size_t>(n - 2)]); },
            [&](long n) { return as_integer(L[static_cast<std::size_t>(n)]); });
        rec.check("L(t) expansion 1, 2, 7, 24, 82, 280, 956, 3264 at n = 2..9", w.empty(), w);
    }

    {
        const Series H = gf(GfName::H, 501);
        const Series R = gf(GfName::Rect, 501);
        const std::string wh = first_mismatch(2, 500, coeff(H), [](long n) { return h_formula(static_cast<int>(n)); });
        rec.check("h(n) = ((3n-5)/(n-1)) binom(2n-5, n-2) = [t^n] H(t), 2 <= n <= 500", wh.empty(), wh);
        const std::string wr = first_mismatch(2, 500, coeff(R), [](long n) { return rect_formula(static_cast<int>(n)); });
        rec.check("binom(2n-4, n-2) = [t^n] Rect(t), 2 <= n <= 500", wr.empty(), wr);
    }
    return rec.finish();
}

SuiteReport suite_gentree(int max_construct, int max_labels, int threads)
{
    Recorder rec("gentree");
    const int top = std::max(2, max_construct);
    const auto levels = construct_levels(top, threads);
    const std::string span = ", n <= " + std::to_string(top);

    std::string bijection, repeats, uniqueness, consistency, flipped, nc_law;
    for (int n = 2; n <= top; ++n) {
        const auto& level = levels[static_cast<std::size_t>(n - 2)];
        const auto built = sorted_encodings(level);
        const auto brute = sorted_encodings(ascending_of_size(n, threads));
        if (bijection.empty() && built != brute) {
            std::vector<std::string> diff;
            std::set_symmetric_difference(built.begin(), built.end(), brute.begin(), brute.end(),
                                          std::back_inserter(diff));
            bijection = triple(n, brute.size(), built.size()) + (diff.empty() ? "" : " first difference " + diff.front());
        }
        if (repeats.empty()) {
            const auto dup = std::adjacent_find(built.begin(), built.end());
            if (dup != built.end()) repeats = *dup;
        }
        for (const auto& p : level) {
            if (n >= 3 && uniqueness.empty()) {
                const auto up = parent(p);
                long hits = 0;
                if (up)
                    for (const auto& c : children(up->polyomino)) hits += c.polyomino == p ? 1 : 0;
                if (!up || hits != 1) uniqueness = p.encode() + " produced " + std::to_string(hits) + " times";
            }
            const TreeLabel label = label_of(p);
            if (n <= 10 && consistency.empty() && child_labels(p) != succ(label))
                consistency = p.encode() + " label " + label.to_string();
            const bool is_flipped = label.family == Family::C0 || label.family == Family::L0 || label.family == Family::S0;
            if (is_flipped && flipped.empty() && (!label.rect || label.r != 0)) flipped = p.encode();
            if (nc_law.empty() && label.r > 0) {
                long nc = 0;
                for (const auto& c : children(p))
                    nc += (c.op == Operation::Nc || c.op == Operation::NcStar) ? 1 : 0;
                long expected = static_cast<long>(label.r) * (label.r + 1) / 2;
                if (label.family == Family::NC && label.rect) ++expected;
                if (nc != expected) nc_law = p.encode() + " expected=" + std::to_string(expected) + " got=" + std::to_string(nc);
            }
        }
    }
    rec.check("constructive levels equal the brute-force ascending sets" + span, bijection.empty(), bijection);
    rec.check("no polyomino is produced twice" + span, repeats.empty(), repeats);
    rec.check("parent(p) is unique and its children contain p exactly once, 3 <= n <= " + std::to_string(top),
              uniqueness.empty(), uniqueness);
    rec.check("labels of geometric children = succ(label), n <= " + std::to_string(std::min(top, 10)),
              consistency.empty(), consistency);
    rec.check("every flipped stack is rectangular with r = 0" + span, flipped.empty(), flipped);
    rec.check("Nc children: binom(r+1,2), plus one for rectangular non-centered" + span, nc_law.empty(), nc_law);

    {
        const std::vector<long> printed{1, 2, 7, 26, 101};
        std::string w;
        for (int n = 2; n <= std::min(top, 6) && w.empty(); ++n) {
            const auto got = levels[static_cast<std::size_t>(n - 2)].size();
            if (static_cast<long>(got) != printed[static_cast<std::size_t>(n - 2)])
                w = triple(n, printed[static_cast<std::size_t>(n - 2)], got);
        }
        rec.check("constructive level sizes 2..6 = 1, 2, 7, 26, 101", w.empty(), w);
    }

    const int label_top = std::max({2, max_labels, top});
    const auto dp = count_levels(label_top, threads);
    {
        const auto serial = count_levels_serial(label_top);
        std::string w;
        for (std::size_t i = 0; i < dp.size() && w.empty(); ++i)
            if (dp[i].counts != serial[i].counts) w = "level " + std::to_string(dp[i].level);
        rec.check("parallel label expansion equals the serial one, n <= " + std::to_string(label_top), w.empty(), w);
    }
    {
        std::string w;
        for (int n = 2; n <= top && w.empty(); ++n) {
            const auto& level = levels[static_cast<std::size_t>(n - 2)];
            const auto& labels = dp[static_cast<std::size_t>(n - 2)];
            mpz_class centered, rect;
            for (const auto& p : level) {
                if (is_centered(p)) centered += 1;
                if (is_rectangular(p)) rect += 1;
            }
            if (labels.total() != level.size()) w = triple(n, level.size(), labels.total()) + " (total)";
            else if (labels.centered() != centered) w = triple(n, centered, labels.centered()) + " (centered)";
            else if (labels.rectangular() != rect) w = triple(n, rect, labels.rectangular()) + " (rectangular)";
        }
        rec.check("label totals equal constructive totals (all, centered, rectangular)" + span, w.empty(), w);
    }
    {
        const auto order = static_cast<std::size_t>(label_top + 1);
        const Series A = gf(GfName::A, order);
        const Series H = gf(GfName::H, order);
        const Series R = gf(GfName::Rect, order);
        auto at = [&](long n) -> const LabelLevel& { return dp[static_cast<std::size_t>(n - 2)]; };
        auto c = [](const Series& s) { return [&s](long n) { return as_integer(s[static_cast<std::size_t>(n)]); }; };
        const std::string to = ", n <= " + std::to_string(label_top);
        std::string w = first_mismatch(2, label_top, c(A), [&](long n) { return at(n).total(); });
        rec.check("label totals = [t^n] A(t)" + to, w.empty(), w);
        w = first_mismatch(2, label_top, c(H), [&](long n) { return at(n).centered(); });
        rec.check("centered label totals = [t^n] H(t)" + to, w.empty(), w);
        w = first_mismatch(
            2, label_top, [&](long n) { return mpz_class(as_integer(A[static_cast<std::size_t>(n)]) - as_integer(H[static_cast<std::size_t>(n)])); },
            [&](long n) { return at(n).non_centered(); });
        rec.check("non-centered label totals = [t^n] (A(t) - H(t))" + to, w.empty(), w);
        w = first_mismatch(2, label_top, c(R), [&](long n) { return at(n).rectangular(); });
        rec.check("rectangular label totals = [t^n] Rect(t)" + to, w.empty(), w);
    }
    return rec.finish();
}

SuiteReport suite_refined(int max_n, const RefinedParams& params)
{
    Recorder rec("refined");
    const int top = std::max(2, max_n);
    const auto order = static_cast<std::size_t>(top + 1);
    const Rational &x = params.x, &y = params.y, &z = params.z;
    const Rational zn = Rational(2, 3);
    const Rational x2 = Rational(1, 2), y2 = Rational(1, 3);

    std::map<std::string, std::vector<Rational>> stat;
    std::vector<Rational> n_at_zn(order), l0_second(order);
    for (int n = 2; n <= top; ++n)
        for_each_convex(n, [&](const Polyomino& p) {
            if (!is_ascending(p)) return;
            const TreeLabel l = label_of(p);
            auto& slot = stat[rect_class_name(l)];
            slot.resize(order);
            const auto k = static_cast<std::size_t>(n);
            if (l.family == Family::NC) {
                if (l.rect) {
                    slot[k] += power(z, l.r);
                    n_at_zn[k] += power(zn, l.r);
                } else {
                    slot[k] += 1;
                }
            } else if (l.rect) {
                slot[k] += power(x, l.b) * power(y, l.w) * power(z, l.r);
                if (l.family == Family::L0) l0_second[k] += power(x2, l.b) * power(y2, l.w);
            } else {
                slot[k] += 1;
            }
        });

    const std::string span = ", n <= " + std::to_string(top);
    const std::string at = " at (" + to_string(x) + ", " + to_string(y) + ", " + to_string(z) + ")";
    auto compare = [&](const std::string& what, const std::vector<Rational>& got, const Series& s) {
        std::vector<Rational> padded = got;
        padded.resize(order);
        const std::string w = first_mismatch(
            2, top, [&](long n) { return s[static_cast<std::size_t>(n)]; },
            [&](long n) { return padded[static_cast<std::size_t>(n)]; });
        rec.check(what + span, w.empty(), w);
    };

    const GfParams xyz{x, y, z};
    const std::vector<std::pair<GfName, std::string>> rectangular{
        {GfName::C0p, "C0p"}, {GfName::L0p, "L0p"}, {GfName::S0p, "S0p"}, {GfName::Sp, "Sp"},
        {GfName::Cp, "Cp"},   {GfName::Lp, "Lp"},   {GfName::Np, "Np"},
    };
    for (const auto& [g, name] : rectangular)
        compare("sum x^b y^w z^r over rectangular class " + name + " = " + name + at, stat[name], gf(g, order, xyz));
    compare("L0 statistic = L0p at (1/2, 1/3)", l0_second, gf(GfName::L0p, order, {x2, y2, std::nullopt}));
    compare("rectangular non-centered statistic = Np at z = 2/3", n_at_zn, gf(GfName::Np, order, {{}, {}, zn}));

    for (const GfName g : {GfName::S111, GfName::R1, GfName::C1at1, GfName::C111, GfName::L111, GfName::N1}) {
        const std::string name(name_of(g));
        compare("non-rectangular class total = printed " + name, stat[name], scalar_gf(g, order));
    }

    {
        constexpr std::size_t kOrder = 201;
        const GfParams ones{1, 1, 1};
        Series centered = gf(GfName::C0p, kOrder, ones) + gf(GfName::L0p, kOrder, ones) +
                          gf(GfName::S0p, kOrder, ones) + gf(GfName::Sp, kOrder, ones) +
                          gf(GfName::Cp, kOrder, ones) + gf(GfName::Lp, kOrder, ones);
        for (const GfName g : {GfName::S111, GfName::R1, GfName::C1at1, GfName::C111, GfName::L111})
            centered += scalar_gf(g, kOrder);
        const Series H = gf(GfName::H, kOrder);
        long d = first_difference(H, centered);
        rec.check("H(t) = sum of the eleven centered class series at 1, to order 200", d < 0,
                  d < 0 ? "" : triple(d, H[static_cast<std::size_t>(d)], centered[static_cast<std::size_t>(d)]));
        const Series all = H + scalar_gf(GfName::N1, kOrder) + gf(GfName::Np, kOrder, ones);
        const Series A = gf(GfName::A, kOrder);
        d = first_difference(A, all);
        rec.check("A(t) = H(t) + N(1) + N'(1), to order 200", d < 0,
                  d < 0 ? "" : triple(d, A[static_cast<std::size_t>(d)], all[static_cast<std::size_t>(d)]));
    }
    return rec.finish();
}

SuiteReport suite_structure(int max_n, int threads)
{
    Recorder rec("structure");
    const int top = std::min(std::max(2, max_n), 12);
    const auto order = static_cast<std::size_t>(top + 1);
    const Series S4 = gf(GfName::S4, order);
    const Series Z = gf(GfName::Z, order);

    std::vector<StructureTally> tallies;
    for (int n = 2; n <= top; ++n) tallies.push_back(structure_tally(n, threads));
    auto tally = [&](long n) -> const StructureTally& { return tallies[static_cast<std::size_t>(n - 2)]; };

    auto property = [&](Property p, const std::string& what, int limit) {
        std::string w;
        for (long n = 2; n <= std::min(top, limit) && w.empty(); ++n)
            if (tally(n).witness[p]) w = *tally(n).witness[p];
        rec.check(what + ", n <= " + std::to_string(std::min(top, limit)), w.empty(), w);
    };
    property(MirrorSwap, "mirroring swaps (ne, nw)", 10);
    property(FastMatchesReference, "degree and 4-stack kernels agree with the reference scans", 9);
    property(Prop1, "ne > 2 and nw < ne imply nw <= 1", 12);
    property(Prop2, "degree pair (2,2) implies 4-stack", 12);
    property(Prop4, "row characterization of ascending <=> nw <= 1", 11);
    property(AscDescIsL, "ascending and descending <=> max degree <= 1", 12);

    const std::string span = ", n <= " + std::to_string(top);
    auto coeff = [](const Series& s) { return [&s](long n) { return as_integer(s[static_cast<std::size_t>(n)]); }; };
    std::string w = first_mismatch(2, top, coeff(S4), [&](long n) { return tally(n).four_stack; });
    rec.check("4-stack count = [t^n] S4(t)" + span, w.empty(), w);
    w = first_mismatch(2, top, [&](long n) { return tally(n).ascending; }, [&](long n) { return tally(n).descending; });
    rec.check("ascending count = descending count" + span, w.empty(), w);
    w = first_mismatch(
        2, top, [&](long n) { return tally(n).z_convex; },
        [&](long n) { return mpz_class(tally(n).l_convex + tally(n).c12 + tally(n).c21 + tally(n).c22); });
    rec.check("z(n) = l(n) + c12(n) + c21(n) + c22(n)" + span, w.empty(), w);
    w = first_mismatch(2, top, coeff(Z), [&](long n) { return tally(n).z_convex; });
    rec.check("Z-convex count = [t^n] Z(t)" + span, w.empty(), w);
    w = first_mismatch(2, top, [&](long n) { return tally(n).rect_ascending; }, [&](long n) { return tally(n).directed; });
    rec.check("rectangular ascending count = directed-convex count" + span, w.empty(), w);
    w = first_mismatch(2, top, [](long n) { return rect_formula(static_cast<int>(n)); },
                       [&](long n) { return tally(n).directed; });
    rec.check("directed-convex count = binom(2n-4, n-2)" + span, w.empty(), w);
    return rec.finish();
}

SuiteReport suite_kernels(std::size_t terms, std::size_t equation_terms)
{
    Recorder rec("kernels");
    auto witness = [](const IdentityCheck& c) {
        return c.holds ? std::string() : "first mismatch at order " + std::to_string(c.first_failure);
    };
    for (const auto& c : kernel_checks(terms))
        rec.check(c.name + " (order " + std::to_string(terms) + ")", c.holds, witness(c));

    const std::vector<std::array<Rational, 3>> points{
        {Rational(2, 3), Rational(3, 5), Rational(5, 7)},
        {Rational(1, 2), Rational(1, 3), Rational(2, 5)},
    };
    for (const auto& pt : points) {
        const std::string where = " at (" + to_string(pt[0]) + ", " + to_string(pt[1]) + ", " + to_string(pt[2]) +
                                  "), order " + std::to_string(equation_terms);
        for (const auto& c : functional_equation_checks(pt[0], pt[1], pt[2], equation_terms))
            rec.check(c.name + where, c.holds, witness(c));
    }
    return rec.finish();
}

SuiteReport suite_asymptotics(int n)
{
    Recorder rec("asymptotics");
    for (const auto& c : asymptotic_checks(n)) {
        const std::string detail = "rho(" + std::to_string(n) + ")=" + fixed(c.ratio_n) + " rho(" +
                                   std::to_string(2 * n) + ")=" + fixed(c.ratio_2n) + " naive=" + fixed(c.naive) +
                                   " extrapolated=" + fixed(c.extrapolated) + " tolerance=" + fixed(c.tolerance);
        rec.check(c.name + ": coefficient ~ " + c.law, c.passed, detail);
    }
    return rec.finish();
}

SuiteReport suite_fixtures(const std::string& path)
{
    Recorder rec("fixtures");
    std::ifstream in(path);
    if (!in) {
        rec.check("fixture file is readable", false, path);
        return rec.finish();
    }
    nlohmann::json doc;
    try {
        in >> doc;
    } catch (const nlohmann::json::exception& e) {
        rec.check("fixture file is valid JSON", false, e.what());
        return rec.finish();
    }
    if (!doc.contains("sequences") || !doc["sequences"].is_array()) {
        rec.check("fixture file has a \"sequences\" array", false, path);
        return rec.finish();
    }

    auto parse_rational = [](const nlohmann::json& v) -> std::optional<Rational> {
        try {
            Rational q;
            if (v.is_number_integer())
                q = Rational(mpz_class(std::to_string(v.get<long long>())));
            else if (v.is_string())
                q.set_str(v.get<std::string>(), 10);
            else
                return std::nullopt;
            q.canonicalize();
            return q;
        } catch (const std::invalid_argument&) {
            return std::nullopt;
        }
    };

    std::size_t index = 0;
    for (const auto& seq : doc["sequences"]) {
        const std::string label = "fixture #" + std::to_string(index++);
        const auto name = seq.contains("gf") && seq["gf"].is_string() ? parse_gf_name(seq["gf"].get<std::string>())
                                                                       : std::nullopt;
        if (!name) {
            rec.check(label + ": known gf name", false, seq.dump());
            continue;
        }
        const long offset = seq.value("offset", 0L);
        GfParams params;
        bool ok = true;
        if (seq.contains("params")) {
            for (const char* key : {"x", "y", "z"}) {
                if (!seq["params"].contains(key)) continue;
                const auto q = parse_rational(seq["params"][key]);
                if (!q) ok = false;
                (key[0] == 'x' ? params.x : key[0] == 'y' ? params.y : params.z) = q;
            }
        }
        std::vector<mpz_class> values;
        for (const auto& v : seq.value("values", nlohmann::json::array())) {
            const auto q = parse_rational(v);
            if (!q || q->get_den() != 1) {
                ok = false;
                break;
            }
            values.push_back(q->get_num());
        }
        const std::string what = label + ": " + std::string(name_of(*name)) + " prefix of " +
                                 std::to_string(values.size()) + " values from n=" + std::to_string(offset);
        if (!ok || offset < 0) {
            rec.check(what, false, "unparseable params, values or offset");
            continue;
        }
        try {
            const Series s = gf(*name, static_cast<std::size_t>(offset) + values.size(), params);
            const std::string w = first_mismatch(
                offset, offset + static_cast<long>(values.size()) - 1,
                [&](long n) { return Rational(values[static_cast<std::size_t>(n - offset)]); },
                [&](long n) { return s[static_cast<std::size_t>(n)]; });
            rec.check(what, w.empty(), w);
        } catch (const std::exception& e) {
            rec.check(what, false, e.what());
        }
    }
    return rec.finish();
}

const std::vector<std::string>& suite_names()
{
    static const std::vector<std::string> names{"identities", "gentree", "refined", "structure", "kernels", "asymptotics"};
    return names;
}

std::vector<SuiteReport> run_suites(const VerifyOptions& o)
{
    const auto& names = suite_names();
    if (o.suite != "all" && std::find(names.begin(), names.end(), o.suite) == names.end())
        throw std::invalid_argument("unknown suite: " + o.suite);
    auto size_or = [&](int fallback) { return o.max_size > 0 ? o.max_size : fallback; };
    std::vector<SuiteReport> out;
    for (const auto& name : names) {
        if (o.suite != "all" && o.suite != name) continue;
        if (name == "identities") out.push_back(suite_identities(size_or(12), o.threads));
        if (name == "gentree") out.push_back(suite_gentree(size_or(11), 60, o.threads));
        if (name == "refined") out.push_back(suite_refined(size_or(10)));
        if (name == "structure") out.push_back(suite_structure(size_or(12), o.threads));
        if (name == "kernels") out.push_back(suite_kernels());
        if (name == "asymptotics") out.push_back(suite_asymptotics());
    }
    if (o.fixtures) out.push_back(suite_fixtures(*o.fixtures));
    return out;
}

std::string render_text(const std::vector<SuiteReport>& reports, bool timings)
{
    std::ostringstream os;
    bool all = true;
    for (const auto& r : reports) {
        all = all && r.passed();
        os << "== " << r.suite << ": " << (r.passed() ? "PASS" : "FAIL") << " (" << r.checks.size() << " checks, "
           << r.failures() << " failed)";
        if (timings) os << " in " << std::fixed << std::setprecision(3) << r.elapsed_seconds << " s";
        os << '\n';
        for (const auto& c : r.checks) {
            const char* tag = c.status == CheckStatus::Pass ? "[pass]" : c.status == CheckStatus::Fail ? "[FAIL]" : "[info]";
            os << "  " << tag << ' ' << c.description;
            if (!c.witness.empty()) os << " :: " << c.witness;
            os << '\n';
        }
    }
    os << "overall: " << (all ? "PASS" : "FAIL") << '\n';
    return os.str();
}

std::string render_json(const std::vector<SuiteReport>& reports, bool timings)
{
    nlohmann::ordered_json doc;
    bool all = true;
    doc["suites"] = nlohmann::ordered_json::array();
    for (const auto& r : reports) {
        all = all && r.passed();
        nlohmann::ordered_json s;
        s["suite"] = r.suite;
        s["passed"] = r.passed();
        if (timings) s["elapsed_seconds"] = r.elapsed_seconds;
        s["checks"] = nlohmann::ordered_json::array();
        for (const auto& c : r.checks) {
            nlohmann::ordered_json j;
            j["description"] = c.description;
            j["status"] = c.status == CheckStatus::Pass ? "pass" : c.status == CheckStatus::Fail ? "fail" : "info";
            if (!c.witness.empty()) j["witness"] = c.witness;
            s["checks"].push_back(std::move(j));
        }
        doc["suites"].push_back(std::move(s));
    }
    doc["passed"] = all;
    return doc.dump(2) + "\n";
}

}  // namespace zcx
