#include <doctest.h>

#include <map>
#include <utility>

#include "oracles.hpp"
#include "zcx/classify.hpp"
#include "zcx/enumerate.hpp"
#include "zcx/reference.hpp"

using namespace zcx;

TEST_SUITE("classify") {

TEST_CASE("degree pair of a two-row staircase")
{
    const auto p = Polyomino::from_rows({{1, 2}, {0, 1}});
    CHECK(degree_pair(p) == DegreePair{0, 2});
    CHECK(degree_pair(p.mirror()) == DegreePair{2, 0});
    CHECK(degree_pair(Polyomino::unit()) == DegreePair{0, 0});
    CHECK(degree_pair(Polyomino::decode("0-2;0-2")) == DegreePair{1, 1});
    CHECK(degree_pair(Polyomino::decode("0-2")) == DegreePair{0, 0});
}

TEST_CASE("degree pairs match exhaustive path enumeration, n <= 7")
{
    for (int n = 2; n <= 7; ++n)
        for_each_convex(n, [&](const Polyomino& p) {
            const auto d = oracle::degrees(oracle::cells_of(p));
            const auto got = degree_pair(p);
            CHECK_MESSAGE(got.ne == d.ne, p.encode());
            CHECK_MESSAGE(got.nw == d.nw, p.encode());
        });
}

TEST_CASE("fast kernels agree with the reference scans, n <= 9")
{
    for (int n = 2; n <= 9; ++n)
        for_each_convex(n, [&](const Polyomino& p) {
            CHECK_MESSAGE(degree_pair(p) == reference::degree_pair_bfs(p), p.encode());
            CHECK_MESSAGE(is_four_stack(p) == reference::is_four_stack_scan(p), p.encode());
        });
}

TEST_CASE("ascending and descending by degrees, n <= 7")
{
    for (int n = 2; n <= 7; ++n)
        for_each_convex(n, [&](const Polyomino& p) {
            const auto d = oracle::degrees(oracle::cells_of(p));
            CHECK_MESSAGE(is_ascending(p) == (d.nw <= 1), p.encode());
            CHECK_MESSAGE(is_descending(p) == (d.ne <= 1), p.encode());
        });
}

TEST_CASE("shape predicates on small examples")
{
    const auto plus = Polyomino::decode("1-1;0-2;1-1");
    CHECK(is_centered(plus));
    CHECK(is_four_stack(plus));
    CHECK_FALSE(is_directed_convex(plus));
    const auto stair = Polyomino::decode("0-1;1-2");
    CHECK_FALSE(is_centered(stair));
    CHECK(is_ascending(stair));
    CHECK_FALSE(is_descending(stair));
    CHECK(is_rectangular(stair));
    CHECK(is_directed_convex(stair));
    const auto hook = Polyomino::decode("0-2;0-0");
    CHECK(is_ascending(hook));
    CHECK(is_descending(hook));
    CHECK_FALSE(is_rectangular(hook));
}

TEST_CASE("census histogram equals the oracle histogram, n <= 7")
{
    for (int n = 2; n <= 7; ++n) {
        std::map<std::pair<int, int>, mpz_class> expected;
        for (const auto& e : oracle::brute_convex(n)) {
            const auto d = oracle::degrees(oracle::cells_of(Polyomino::decode(e)));
            expected[{d.ne, d.nw}] += 1;
        }
        CHECK(census(n).by_degree_pair == expected);
    }
}

TEST_CASE("frozen census row, n = 9")
{
    const auto row = census(9);
    CHECK(row.total_convex == 10416);
    CHECK(row.l_convex == 3264);
    CHECK(row.centered == 6176);
    CHECK(row.four_stack == 8392);
    CHECK(row.z_convex == 8448);
    CHECK(row.ascending == 6824);
    CHECK(row.descending == 6824);
    CHECK(row.c21 == 2576);
    CHECK(row.c12 == 2576);
    CHECK(row.c22 == 32);
    CHECK(row.directed_convex == 3432);
    CHECK(row.ascending_and_descending == row.l_convex);
}

TEST_CASE("parallel census equals the serial census")
{
    for (int threads : {1, 3})
        for (int n = 2; n <= 10; ++n) CHECK(census(n, threads) == census_serial(n));
}

}
