#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "angle_persist/field.hpp"

using namespace angp;

TEST_CASE("field spec parsing") {
    CHECK(parse_field("q").is_rational());
    CHECK(parse_field("fp:2").p == 2);
    CHECK(parse_field("fp:97").p == 97);
    CHECK_THROWS(parse_field("fp:4"));
    CHECK_THROWS(parse_field("fp:1"));
    CHECK_THROWS(parse_field("r"));
}

TEST_CASE("primality") {
    CHECK(is_prime(2));
    CHECK(is_prime(3));
    CHECK(is_prime(97));
    CHECK_FALSE(is_prime(1));
    CHECK_FALSE(is_prime(91));
}

TEST_CASE("rational arithmetic stays exact") {
    FieldDesc q;
    Scalar a(q, Rational(1, 3));
    Scalar b(q, Rational(1, 6));
    CHECK((a + b).value() == Rational(1, 2));
    CHECK((a * b).value() == Rational(1, 18));
    CHECK((a / b).value() == 2);
    CHECK((-a).value() == Rational(-1, 3));
    CHECK(a.inverse().value() == 3);
}

TEST_CASE("prime field arithmetic") {
    FieldDesc f5{5};
    Scalar a(f5, 3), b(f5, 4);
    CHECK((a + b).value() == 2);
    CHECK((a * b).value() == 2);
    CHECK((a - b).value() == 4);
    CHECK(a.inverse().value() == 2);  // 3 * 2 = 6 = 1 mod 5
    CHECK((a * a.inverse()) == Scalar::one(f5));
    CHECK_THROWS(Scalar::zero(f5).inverse());
}

TEST_CASE("field mismatch is rejected") {
    Scalar a(FieldDesc{2}, 1), b(FieldDesc{3}, 1);
    CHECK_THROWS_AS(a + b, FieldMismatchError);
}

TEST_CASE("frac_part and floor_long") {
    CHECK(frac_part(Rational(7, 3)) == Rational(1, 3));
    CHECK(frac_part(Rational(-1, 4)) == Rational(3, 4));
    CHECK(frac_part(Rational(2)) == 0);
    CHECK(floor_long(Rational(7, 3)) == 2);
    CHECK(floor_long(Rational(-1, 4)) == -1);
    CHECK(floor_long(Rational(-3)) == -3);
}
