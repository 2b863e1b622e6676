#include <doctest.h>

#include <cmath>
#include <vector>

#include "zcx/catalog.hpp"

using namespace zcx;

namespace {

void check_prefix(GfName g, std::size_t offset, const std::vector<long>& values)
{
    const auto s = gf(g, offset + values.size());
    for (std::size_t i = 0; i < values.size(); ++i)
        CHECK_MESSAGE(s[offset + i] == values[i], name_of(g) << " n=" << offset + i);
}

Series one_minus_4t(std::size_t order)
{
    return Series::polynomial(order, {1, -4});
}

}  // namespace

TEST_SUITE("catalog") {

TEST_CASE("printed prefixes")
{
    check_prefix(GfName::A, 2, {1, 2, 7, 26, 101, 404, 1649, 6824, 28498});
    check_prefix(GfName::H, 2, {1, 2, 7, 25, 91, 336, 1254, 4719, 17875});
    check_prefix(GfName::Rect, 2, {1, 2, 6, 20, 70, 252, 924, 3432, 12870});
    check_prefix(GfName::C22, 8, {2, 32, 308, 2320, 15094, 89104, 491012});
    check_prefix(GfName::C21, 5, {2, 17, 102, 532, 2576, 11919, 53504, 235115, 1017218});
    check_prefix(GfName::C, 2, {1, 2, 7, 28, 120, 528, 2344, 10416, 46160});
    check_prefix(GfName::L, 2, {1, 2, 7, 24, 82, 280, 956, 3264});
}

TEST_CASE("closed forms rebuilt with Newton square roots")
{
    const std::size_t N = 60;
    const auto t = Series::monomial(N, 1);
    const auto one = Series::constant(N, 1);
    const auto root = sqrt(one_minus_4t(N));
    const auto tt = t * (one - t);
    const auto h = div(tt, root * Rational(2)) - tt / Rational(2);
    CHECK(first_difference(h, gf(GfName::H, N)) == -1);

    const auto p = Series::polynomial(N, {1, -5, 6, -1});
    const auto one_2t = Series::polynomial(N, {1, -2});
    const auto s111 = div(t * p, one_2t * root * Rational(2)) -
                      div(t * Series::polynomial(N, {1, -8, 23, -28, 14, -4, 1}), one_2t * p * Rational(2));
    CHECK(first_difference(s111, gf(GfName::S111, N)) == -1);

    const auto r3 = root * one_minus_4t(N);
    const auto n1 = div(t * Series::polynomial(N, {1, -10, 31, -16, -68, 90, -27, 4}),
                        one_minus_4t(N) * one_minus_4t(N) * p * Rational(2)) -
                    div(t * Series::polynomial(N, {1, -5, 2, 13, -8}), one_2t * r3 * Rational(2));
    CHECK(first_difference(n1, gf(GfName::N1, N)) == -1);
}

TEST_CASE("closed coefficient formulas")
{
    const auto h = gf(GfName::H, 201);
    const auto rect = gf(GfName::Rect, 201);
    for (int n = 2; n <= 200; ++n) {
        CHECK(h[static_cast<std::size_t>(n)] == Rational(h_formula(n)));
        CHECK(rect[static_cast<std::size_t>(n)] == Rational(rect_formula(n)));
    }
    CHECK(h_formula(10) == 17875);
    CHECK(rect_formula(10) == 12870);
}

TEST_CASE("names round trip")
{
    for (auto g : all_gf_names()) {
        const auto parsed = parse_gf_name(name_of(g));
        REQUIRE(parsed);
        CHECK(*parsed == g);
    }
    CHECK_FALSE(parse_gf_name("nope"));
    CHECK(all_gf_names().size() == 24);
}

TEST_CASE("parameters")
{
    CHECK(required_params(GfName::C0p) == "xy");
    CHECK(required_params(GfName::Sp) == "xyz");
    CHECK(required_params(GfName::Np) == "z");
    CHECK(required_params(GfName::A).empty());
    try {
        gf(GfName::Cp, 5, {Rational(1, 2), Rational(1, 3), std::nullopt});
        FAIL("missing z accepted");
    } catch (const CatalogException& e) {
        CHECK(e.code() == CatalogError::MissingParam);
    }
    try {
        scalar_gf(GfName::A, 5);
        FAIL("A accepted as scalar");
    } catch (const CatalogException& e) {
        CHECK(e.code() == CatalogError::NotScalar);
    }
    try {
        functional_equation_checks(Rational(1, 2), Rational(1), Rational(1, 3), 10);
        FAIL("y = 1 accepted");
    } catch (const CatalogException& e) {
        CHECK(e.code() == CatalogError::DegenerateParam);
    }
    CHECK(is_scalar(GfName::R1));
    CHECK_FALSE(is_scalar(GfName::Lp));
}

TEST_CASE("kernel identities and functional equations")
{
    for (const auto& k : kernel_checks(60)) CHECK_MESSAGE(k.holds, k.name);
    for (const auto& e : functional_equation_checks(Rational(3, 4), Rational(2, 7), Rational(1, 6), 30))
        CHECK_MESSAGE(e.holds, e.name);
}

TEST_CASE("asymptotic ratios")
{
    for (const auto& a : asymptotic_checks(256)) {
        CHECK_MESSAGE(a.ratio_n > 0, a.name);
        CHECK_MESSAGE(std::abs(a.extrapolated - 1) < std::abs(a.ratio_n - 1) + 1e-12, a.name);
    }
}

}
