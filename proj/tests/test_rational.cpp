#include <doctest.h>

#include <gmpxx.h>

#include "psr/rational.hpp"
#include "psr/sampling.hpp"

using psr::Rational;

TEST_CASE("basic arithmetic stays canonical") {
  Rational half(1, 2);
  Rational third(1, 3);
  CHECK((half + third).str() == "5/6");
  CHECK((half - third).str() == "1/6");
  CHECK((half * third).str() == "1/6");
  CHECK((half / third).str() == "3/2");
  CHECK((Rational(2, 4)).str() == "1/2");
  CHECK((Rational(-2, 4)).str() == "-1/2");
  CHECK((Rational(2, -4)).str() == "-1/2");
  CHECK(Rational(0, 5) == Rational(0));
  CHECK(Rational(7).is_integer());
  CHECK(!half.is_integer());
}

TEST_CASE("comparisons are exact") {
  CHECK(Rational(1, 3) < Rational(34, 100));
  CHECK(Rational(2, 3) > Rational(66, 100));
  CHECK(Rational(10, 5) == Rational(2));
  CHECK(Rational(-1, 2) < Rational(0));
  CHECK(Rational(1, 1000000007) > Rational(0));
}

TEST_CASE("parsing integers, fractions and decimals") {
  CHECK(Rational::from_string("42") == Rational(42));
  CHECK(Rational::from_string("-7/3").str() == "-7/3");
  CHECK(Rational::from_string("2.5").str() == "5/2");
  CHECK(Rational::from_string("0.125") == Rational(1, 8));
  CHECK(Rational::from_string("10/4") == Rational(5, 2));
  CHECK_THROWS(Rational::from_string("abc"));
  CHECK_THROWS(Rational::from_string(""));
  CHECK_THROWS(Rational::from_string("1/0"));
}

TEST_CASE("doubles convert to their exact binary value") {
  CHECK(Rational::from_double(0.5) == Rational(1, 2));
  CHECK(Rational::from_double(0.1).str() == "3602879701896397/36028797018963968");
  CHECK(Rational::from_double(-3.0) == Rational(-3));
  CHECK_THROWS(Rational::from_double(1.0 / 0.0));
}

TEST_CASE("overflow spills into the big representation and back") {
  Rational big(0x3fffffffffffffffLL, 3);
  Rational big2(0x3ffffffffffffffdLL, 5);
  Rational sum = big + big2;  // numerator exceeds 63 bits
  mpq_class ref = big.to_mpq() + big2.to_mpq();
  CHECK(sum.to_mpq() == ref);
  // multiplying back down must demote: (big * 3) / big == 3
  Rational r = big * Rational(3);
  CHECK(r / big == Rational(3));
  CHECK((sum - big2) == big);
}

TEST_CASE("randomized agreement with gmp reference") {
  psr::CounterRng rng(20240605);
  for (int i = 0; i < 3000; ++i) {
    long long an = rng.uniform_int(-1000000, 1000000);
    long long ad = rng.uniform_int(1, 1000000);
    long long bn = rng.uniform_int(-1000000, 1000000);
    long long bd = rng.uniform_int(1, 1000000);
    Rational a(an, ad), b(bn, bd);
    mpq_class qa = a.to_mpq(), qb = b.to_mpq();
    CHECK((a + b).to_mpq() == qa + qb);
    CHECK((a - b).to_mpq() == qa - qb);
    CHECK((a * b).to_mpq() == qa * qb);
    if (bn != 0) CHECK((a / b).to_mpq() == qa / qb);
    CHECK((a < b) == (qa < qb));
    CHECK((a == b) == (qa == qb));
  }
}

TEST_CASE("division by zero throws") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}
