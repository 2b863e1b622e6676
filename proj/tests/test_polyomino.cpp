#include <doctest.h>

#include "oracles.hpp"
#include "zcx/polyomino.hpp"

using namespace zcx;

TEST_SUITE("polyomino") {

TEST_CASE("encoding round trip")
{
    const auto p = Polyomino::decode("0-1;1-2");
    CHECK(p.height() == 2);
    CHECK(p.width() == 3);
    CHECK(p.size() == 5);
    CHECK(p.area() == 4);
    CHECK(p.encode() == "0-1;1-2");
    CHECK(Polyomino::decode(p.encode()) == p);
}

TEST_CASE("rows are shifted to column 0")
{
    const auto p = Polyomino::from_rows({{2, 3}, {3, 4}});
    CHECK(p.encode() == "0-1;1-2");
}

TEST_CASE("ascii rendering lists rows top to bottom")
{
    CHECK(Polyomino::decode("0-1;1-2").render_ascii() == ".##\n##.\n");
    CHECK(Polyomino::unit().render_ascii() == "#\n");
}

TEST_CASE("columns")
{
    const auto p = Polyomino::decode("0-0;0-2;2-2");
    CHECK(p.column(0).bottom == 0);
    CHECK(p.column(0).top == 1);
    CHECK(p.column_length(1) == 1);
    CHECK(p.column(2).bottom == 1);
    CHECK(p.column(2).top == 2);
    CHECK(p.contains(1, 1));
    CHECK_FALSE(p.contains(1, 0));
    CHECK_FALSE(p.contains(5, 5));
}

TEST_CASE("mirror")
{
    const auto p = Polyomino::decode("0-1;1-2");
    CHECK(p.mirror().encode() == "1-2;0-1");
    CHECK(p.mirror().mirror() == p);
}

TEST_CASE("invalid shapes carry their error code")
{
    auto code = [](auto&& f) {
        try {
            f();
        } catch (const ShapeException& e) {
            return e.code();
        }
        FAIL("no exception");
        return ShapeError::Malformed;
    };
    CHECK(code([] { Polyomino::from_rows(std::vector<RowSpan>{}); }) == ShapeError::Empty);
    CHECK(code([] { Polyomino::from_rows({{2, 1}}); }) == ShapeError::EmptyRow);
    CHECK(code([] { Polyomino::from_rows({{0, 0}, {1, 1}}); }) == ShapeError::Disconnected);
    CHECK(code([] { Polyomino::from_rows({{0, 2}, {0, 0}, {0, 2}}); }) == ShapeError::NotConvex);
    CHECK(code([] { Polyomino::decode("0-1;x"); }) == ShapeError::Malformed);
    CHECK(code([] { Polyomino::decode(""); }) == ShapeError::Malformed);
    CHECK(code([] { Polyomino::decode("01"); }) == ShapeError::Malformed);
}

TEST_CASE("encoding order matches string order")
{
    const auto a = Polyomino::decode("0-0;0-1");
    const auto b = Polyomino::decode("0-1;0-0");
    CHECK(encoding_less(a, b) == (a.encode() < b.encode()));
    CHECK_FALSE(encoding_less(a, a));
}

TEST_CASE("cell model agrees with the row model")
{
    const auto p = Polyomino::decode("1-2;0-3;0-1");
    const auto cells = oracle::cells_of(p);
    CHECK(static_cast<int>(cells.size()) == p.area());
    CHECK(oracle::convex(cells));
    CHECK(oracle::encode(cells) == p.encode());
}

}
