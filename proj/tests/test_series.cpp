#include <doctest.h>

#include "zcx/series.hpp"

using namespace zcx;

namespace {

SeriesError code_of(auto&& f)
{
    try {
        f();
    } catch (const SeriesException& e) {
        return e.code();
    }
    FAIL("no exception");
    return SeriesError::OutOfRange;
}

}  // namespace

TEST_SUITE("series") {

TEST_CASE("inverse of a quadratic")
{
    const auto q = Series::polynomial(8, {1, -4, 2});
    const auto inv = inverse(q);
    const long expected[] = {1, 4, 14, 48, 164, 560, 1912, 6528};
    for (std::size_t n = 0; n < 8; ++n) CHECK(inv[n] == expected[n]);
    CHECK(q * inv == Series::constant(8, 1));
}

TEST_CASE("sqrt by Newton equals the binomial expansion")
{
    const auto a = Series::polynomial(120, {1, -4});
    CHECK(sqrt(a) == Series::binomial(120, -4, Rational(1, 2)));
    const auto catalan = Series::binomial(12, -4, Rational(1, 2));
    // (1 - sqrt(1-4t)) / 2 = t + t^2 + 2t^3 + 5t^4 + ...
    const long c[] = {1, 1, 2, 5, 14, 42, 132, 429, 1430, 4862};
    for (std::size_t n = 1; n <= 10; ++n) CHECK(-catalan[n] / 2 == c[n - 1]);
}

TEST_CASE("sqrt squares back")
{
    const auto a = Series::polynomial(40, {1, Rational(2, 3), -5, 7});
    const auto s = sqrt(a);
    CHECK(s * s == a);
}

TEST_CASE("binomial with integer exponent is a polynomial")
{
    const auto s = Series::binomial(6, 2, 3);
    const long expected[] = {1, 6, 12, 8, 0, 0};
    for (std::size_t n = 0; n < 6; ++n) CHECK(s[n] == expected[n]);
    CHECK(s.support_end() == 4);
}

TEST_CASE("shifts, valuation and truncation")
{
    const auto t2 = Series::monomial(6, 2, Rational(3, 4));
    CHECK(t2.valuation() == 2);
    CHECK(t2.shift_down(2)[0] == Rational(3, 4));
    CHECK(t2.shift_down(2).order() == 4);
    CHECK(t2.shift(3).valuation() == 5);
    CHECK(t2.shift(4).is_zero());
    CHECK(t2.truncated(2).is_zero());
    CHECK(code_of([&] { t2.shift_down(3); }) == SeriesError::NotDivisible);
}

TEST_CASE("division cancelling a common power of t")
{
    const auto a = Series::polynomial(6, {0, 0, 1, 1});
    const auto b = Series::polynomial(6, {0, 1, -1});
    const auto q = div_cancel(a, b);
    CHECK(q.order() == 5);
    CHECK(q * b.shift_down(1).truncated(5) == a.shift_down(1).truncated(5));
}

TEST_CASE("comparison reports the first differing index")
{
    const auto a = Series::polynomial(5, {1, 2, 3});
    auto b = Series::polynomial(5, {1, 2, 4});
    CHECK(first_difference(a, a) == -1);
    CHECK(first_difference(a, b) == 2);
}

TEST_CASE("errors")
{
    const auto a = Series::polynomial(4, {0, 1});
    CHECK(code_of([&] { inverse(a); }) == SeriesError::NonUnitDivisor);
    CHECK(code_of([&] { Series::constant(4, 1) / a; }) == SeriesError::NonUnitDivisor);
    CHECK(code_of([&] { sqrt(Series::constant(4, 2)); }) == SeriesError::BadConstantTerm);
    CHECK(code_of([&] { a.coefficient(4); }) == SeriesError::OutOfRange);
    CHECK(code_of([&] { a / Rational(0); }) == SeriesError::NonUnitDivisor);
}

TEST_CASE("rational formatting")
{
    Rational q(-6, 4);
    q.canonicalize();
    CHECK(to_string(q) == "-3/2");
    CHECK(to_string(Rational(5)) == "5");
}

}
