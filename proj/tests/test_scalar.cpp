#include <doctest.h>

#include "gptb/scalar.hpp"

using namespace gptb;

TEST_CASE("exact scalars stay in lowest terms with positive denominator") {
    Scalar a = Scalar::exact(6, -8);
    CHECK(a.str() == "-3/4");
    CHECK(Scalar::exact(4, 2).str() == "2");
    CHECK((Scalar::exact(1, 3) + Scalar::exact(1, 6)).str() == "1/2");
}

TEST_CASE("mixed-mode arithmetic is rejected, never coerced") {
    Scalar e = Scalar::exact(1, 2);
    Scalar f = Scalar::real(0.5);
    CHECK_THROWS_AS(e + f, ScalarModeError);
    CHECK_THROWS_AS(e * f, ScalarModeError);
    CHECK_THROWS_AS((void)(e < f), ScalarModeError);
    CHECK_THROWS_AS(eq_within(e, f, 1e-9), ScalarModeError);
}

TEST_CASE("parsing accepts fractions, integers and terminating decimals") {
    CHECK(Scalar::parse("3/4", Scalar::Mode::exact) == Scalar::exact(3, 4));
    CHECK(Scalar::parse("0.55", Scalar::Mode::exact) == Scalar::exact(11, 20));
    CHECK(Scalar::parse("-2", Scalar::Mode::exact) == Scalar::exact(-2));
    CHECK(Scalar::parse("-0.5", Scalar::Mode::exact) == Scalar::exact(-1, 2));
    CHECK(Scalar::parse("0.25", Scalar::Mode::real).dbl() == doctest::Approx(0.25));
    CHECK_THROWS_AS(Scalar::parse("1/0", Scalar::Mode::exact), DomainError);
    CHECK_THROWS_AS(Scalar::parse("abc", Scalar::Mode::exact), ParseError);
}

TEST_CASE("float serialization round-trips through the shortest decimal") {
    for (double x : {0.1, 1.0 / 3.0, 1e-9, -2.5}) {
        Scalar s = Scalar::real(x);
        CHECK(Scalar::parse(s.str(), Scalar::Mode::real).dbl() == x);
    }
}

TEST_CASE("division by zero throws") {
    CHECK_THROWS_AS(Scalar::exact(1) / Scalar::exact(0), DomainError);
    CHECK_THROWS_AS(Scalar::exact(1, 0), DomainError);
}

TEST_CASE("integer literals adopt the scalar mode") {
    Scalar e = Scalar::exact(3, 4);
    CHECK(2 * e - 1 == Scalar::exact(1, 2));
    Scalar f = Scalar::real(0.75);
    CHECK((2 * f - 1).dbl() == doctest::Approx(0.5));
}
