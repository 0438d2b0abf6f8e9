#include <doctest.h>

#include "kloc/errors.hpp"
#include "kloc/gaussq.hpp"
#include "test_support.hpp"

using namespace kloc;
using test::gq;

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4) == Rational(1, 2));
    CHECK(Rational(-2, -4) == Rational(1, 2));
    CHECK(Rational(2, -4) == Rational(-1, 2));
    CHECK(Rational(0, 7) == Rational(0));
    CHECK(Rational(0).denominator() == 1);
    CHECK(Rational(3, -6).denominator() == 2);
    CHECK(Rational(3, -6).numerator() == -1);
    CHECK_THROWS_AS(Rational(1, 0), DivisionByZero);
}

TEST_CASE("gaussian addition and multiplication") {
    CHECK(GaussianRational(Rational(1, 2)) + GaussianRational(Rational(1, 2)) ==
          GaussianRational(1));
    const GaussianRational z = gq("3/2-1/4i");
    CHECK(z + GaussianRational(0) == z);
    CHECK(gq("1+i") + gq("1-i") == gq("2"));

    CHECK(gq("i") * gq("i") == gq("-1"));
    CHECK(z * GaussianRational(1) == z);
    CHECK(gq("1+i") * gq("1-i") == gq("2"));
}

TEST_CASE("gaussian inverse") {
    CHECK(inverse(gq("2")) == gq("1/2"));
    CHECK(inverse(gq("i")) == gq("-i"));

    // 1+i: verify by multiplying back, then pin the value.
    const GaussianRational inv = inverse(gq("1+i"));
    CHECK(inv * gq("1+i") == GaussianRational(1));
    CHECK(inv == gq("1/2-1/2i"));

    CHECK_THROWS_AS(inverse(GaussianRational(0)), DivisionByZero);
}

TEST_CASE("norm") {
    CHECK(norm(gq("2+i")) == Rational(5));
    CHECK(norm(GaussianRational(0)) == Rational(0));
    CHECK(norm(gq("1/2")) == Rational(1, 4));
}

TEST_CASE("parse examples") {
    CHECK(gq("3/2-1/4i") == GaussianRational(Rational(3, 2), Rational(-1, 4)));
    CHECK(gq("i") == GaussianRational(0, 1));
    CHECK(gq("-2") == GaussianRational(-2, 0));
    CHECK(gq("0") == GaussianRational(0));
    CHECK(gq("-1/4i") == GaussianRational(Rational(0), Rational(-1, 4)));
    CHECK(gq("2i") == GaussianRational(0, 2));
    CHECK(gq("-i") == GaussianRational(0, -1));
    CHECK(gq("1+i") == GaussianRational(1, 1));
    CHECK(gq("12/34") == GaussianRational(Rational(6, 17)));
}

TEST_CASE("parse errors carry a position") {
    auto position_of = [](const std::string& text) -> std::size_t {
        try {
            parse_scalar(text);
        } catch (const ParseError& e) {
            return e.position();
        }
        FAIL("expected ParseError for \"", text, "\"");
        return SIZE_MAX;
    };
    CHECK(position_of("") == 0);
    CHECK(position_of(" 1") == 0);   // whitespace is malformed
    CHECK(position_of("1 ") == 1);
    CHECK(position_of("x") == 0);
    CHECK(position_of("1/0") == 2);  // zero denominator
    CHECK(position_of("1+") == 2);
    CHECK(position_of("1+2") == 3);  // missing trailing i
    CHECK(position_of("3i4") == 2);
    CHECK(position_of("1.5") == 1);
    CHECK(position_of("2/") == 2);
}

TEST_CASE("format round-trips") {
    CHECK(format_scalar(GaussianRational(0)) == "0");
    CHECK(format_scalar(gq("-i")) == "-i");
    CHECK(format_scalar(gq("i")) == "i");
    CHECK(format_scalar(GaussianRational(Rational(3, 2), Rational(-1, 4))) == "3/2-1/4i");
    CHECK(format_scalar(GaussianRational(-1, 1)) == "-1+i");
    CHECK(format_scalar(GaussianRational(0, 2)) == "2i");

    test::SplitMix64 rng(41);
    for (int i = 0; i < 500; ++i) {
        const GaussianRational z = test::random_scalar(rng);
        CAPTURE(format_scalar(z));
        CHECK(parse_scalar(format_scalar(z)) == z);
    }
}

TEST_CASE("field axioms on randomized inputs") {
    test::SplitMix64 rng(7);
    for (int i = 0; i < 300; ++i) {
        const GaussianRational a = test::random_scalar(rng);
        const GaussianRational b = test::random_scalar(rng);
        const GaussianRational c = test::random_scalar(rng);
        CHECK((a + b) + c == a + (b + c));
        CHECK(a + b == b + a);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * b == b * a);
        CHECK(a * (b + c) == a * b + a * c);
        if (!a.is_zero()) CHECK(a * inverse(a) == GaussianRational(1));
    }
}

TEST_CASE("norm is multiplicative") {
    test::SplitMix64 rng(13);
    for (int i = 0; i < 300; ++i) {
        const GaussianRational a = test::random_scalar(rng);
        const GaussianRational b = test::random_scalar(rng);
        CHECK(norm(a * b) == norm(a) * norm(b));
    }
}

TEST_CASE("scalar order is a strict total order") {
    test::SplitMix64 rng(19);
    for (int i = 0; i < 200; ++i) {
        const GaussianRational a = test::random_scalar(rng);
        const GaussianRational b = test::random_scalar(rng);
        const GaussianRational c = test::random_scalar(rng);
        CHECK((scalar_compare(a, b) == 0) == (a == b));
        CHECK(scalar_compare(a, b) == -scalar_compare(b, a));
        if (scalar_compare(a, b) < 0 && scalar_compare(b, c) < 0) {
            CHECK(scalar_compare(a, c) < 0);
        }
    }
}
