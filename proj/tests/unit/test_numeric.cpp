#include <doctest.h>

#include "corelat/numeric.hpp"
#include "corelat/parallel.hpp"

#include <cstdlib>

using namespace corelat;

TEST_SUITE("numeric") {
  TEST_CASE("rational parsing and printing") {
    CHECK(parse_rational("3/6") == Rational(1, 2));
    CHECK(parse_rational("-4") == Rational(-4));
    CHECK(to_string(Rational(-2, 3)) == "-2/3");
    CHECK(to_string(Rational(5)) == "5");
    CHECK_THROWS(parse_rational("x"));
  }

  TEST_CASE("integer helpers") {
    CHECK(isqrt(0LL) == 0);
    CHECK(isqrt(24LL) == 4);
    CHECK(isqrt(25LL) == 5);
    CHECK(is_square(49));
    CHECK_FALSE(is_square(50));
    CHECK_FALSE(is_square(-4));
    CHECK(floor_of(Rational(-1, 2)) == -1);
    CHECK(ceil_of(Rational(-1, 2)) == 0);
    CHECK(is_integer(Rational(4, 2)));
    CHECK_THROWS_AS(to_ll(Rational(1, 3)), Error);
  }

  TEST_CASE("linear algebra") {
    RMatrix a{{Rational(2), Rational(1)}, {Rational(1), Rational(3)}};
    auto x = solve_linear(a, {Rational(3), Rational(5)});
    REQUIRE(x);
    CHECK((*x)[0] == Rational(4, 5));
    CHECK((*x)[1] == Rational(7, 5));
    CHECK(mat_mul(a, inverse(a)) == identity_matrix(2));
    RMatrix singular{{Rational(1), Rational(2)}, {Rational(2), Rational(4)}};
    CHECK_FALSE(solve_linear(singular, {Rational(1), Rational(1)}));
  }

  TEST_CASE("tuple formatting") {
    CHECK(format_tuple(IVec{-10, 15}) == "(-10,15)");
    CHECK(format_tuple(Vec{Rational(1, 2), Rational(-1)}) == "(1/2,-1)");
  }

  TEST_CASE("worker count honours the environment cap") {
    setenv("CORELAT_THREADS", "1", 1);
    CHECK(worker_count() == 1);
    unsetenv("CORELAT_THREADS");
    CHECK(worker_count() >= 1);
  }
}
