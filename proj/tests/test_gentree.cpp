#include <doctest.h>

#include <algorithm>
#include <map>
#include <set>
#include <string>

#include "oracles.hpp"
#include "zcx/catalog.hpp"
#include "zcx/classify.hpp"
#include "zcx/enumerate.hpp"
#include "zcx/gentree.hpp"

using namespace zcx;

namespace {

std::vector<Polyomino> ascending(int n)
{
    std::vector<Polyomino> out;
    for_each_convex(n, [&](const Polyomino& p) {
        if (is_ascending(p)) out.push_back(p);
    });
    return out;
}

std::set<std::string> encodings(const std::vector<Polyomino>& shapes)
{
    std::set<std::string> out;
    for (const auto& p : shapes) out.insert(p.encode());
    return out;
}

}  // namespace

TEST_SUITE("gentree") {

TEST_CASE("root")
{
    CHECK(label_of(Polyomino::unit()) == root_label());
    CHECK(root_label().to_string() == "(1,1,0)'_L0");
    CHECK_FALSE(parent(Polyomino::unit()));
}

TEST_CASE("labels match the cell model, n <= 9")
{
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : ascending(n)) {
            const auto l = label_of(p);
            const auto o = oracle::label(oracle::cells_of(p));
            INFO(p.encode());
            CHECK((l.family != Family::NC) == o.centered);
            CHECK(l.b == o.b);
            CHECK(l.w == o.w);
            CHECK(l.r == o.r);
            CHECK(l.rect == o.rect);
            CHECK_NOTHROW(validate(l));
        }
}

TEST_CASE("non-ascending input is rejected")
{
    const auto p = Polyomino::from_rows({{1, 2}, {0, 1}});
    try {
        label_of(p);
        FAIL("accepted");
    } catch (const GentreeException& e) {
        CHECK(e.code() == GentreeError::NotAscending);
    }
    CHECK_THROWS_AS(children(p), GentreeException);
}

TEST_CASE("invalid labels are rejected")
{
    auto code = [](TreeLabel l) {
        try {
            validate(l);
        } catch (const GentreeException& e) {
            return e.code() == GentreeError::InvalidLabel;
        }
        return false;
    };
    CHECK(code({Family::C0, 1, 3, 0, true}));
    CHECK(code({Family::L, 1, 2, -1, false}));
    CHECK(code({Family::NC, 1, 0, 0, true}));
    CHECK_THROWS_AS(succ({Family::S, 0, 1, 0, false}), GentreeException);
}

TEST_CASE("children are ascending, one size larger, and point back")
{
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : ascending(n))
            for (const auto& c : children(p)) {
                INFO(p.encode() << " -> " << c.polyomino.encode());
                CHECK(c.polyomino.size() == n + 1);
                CHECK(is_ascending(c.polyomino));
                const auto back = parent(c.polyomino);
                REQUIRE(back);
                CHECK(back->polyomino == p);
                CHECK(back->op == c.op);
            }
}

TEST_CASE("constructive levels are the ascending sets")
{
    const auto levels = construct_levels(10, 2);
    REQUIRE(levels.size() == 9);
    for (int n = 2; n <= 10; ++n) {
        const auto& level = levels[static_cast<std::size_t>(n - 2)];
        const auto set = encodings(level);
        CHECK(set.size() == level.size());
        CHECK(set == encodings(ascending(n)));
    }
    CHECK(construct_levels(9, 1) == construct_levels(9, 4));
}

TEST_CASE("succession rule matches the geometric children, n <= 9")
{
    for (int n = 2; n <= 9; ++n)
        for (const auto& p : ascending(n)) CHECK_MESSAGE(succ(label_of(p)) == child_labels(p), p.encode());
}

TEST_CASE("label counts")
{
    const auto levels = count_levels(40, 2);
    REQUIRE(levels.size() == 39);
    const auto a = gf(GfName::A, 41);
    const auto h = gf(GfName::H, 41);
    const auto rect = gf(GfName::Rect, 41);
    for (const auto& level : levels) {
        const auto n = static_cast<std::size_t>(level.level);
        CHECK(Rational(level.total()) == a[n]);
        CHECK(Rational(level.centered()) == h[n]);
        CHECK(Rational(level.rectangular()) == rect[n]);
        CHECK(level.non_centered() + level.centered() == level.total());
    }
    const auto serial = count_levels_serial(40);
    for (std::size_t i = 0; i < serial.size(); ++i) CHECK(serial[i].counts == levels[i].counts);
}

TEST_CASE("distinct labels per level, frozen")
{
    const auto levels = count_levels(60);
    CHECK(levels.back().level == 60);
    CHECK(levels.back().counts.size() == 68438);
}

TEST_CASE("dump lines are sorted and complete")
{
    const auto levels = count_levels(8);
    const auto lines = dump_lines(levels.back());
    CHECK(lines.size() == levels.back().counts.size());
    CHECK(std::is_sorted(lines.begin(), lines.end()));
    mpz_class sum;
    for (const auto& line : lines) sum += mpz_class(line.substr(line.rfind(',') + 1));
    CHECK(sum == 1649);
}

}
