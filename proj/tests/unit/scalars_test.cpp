#include <stdexcept>

#include "doctest.h"
#include "pdres/scalars.hpp"

using pdres::Field;
using pdres::Rational;
using pdres::Scalar;

TEST_CASE("field construction and parsing") {
    CHECK(Field::rationals().is_rational());
    CHECK(Field::rationals().characteristic() == 0);
    CHECK(Field::prime(5).characteristic() == 5);
    CHECK(Field::parse("rational") == Field::rationals());
    CHECK(Field::parse("p7") == Field::prime(7));
    CHECK(Field::parse("p5").name() == "p5");
    CHECK(Field::rationals().name() == "rational");

    CHECK_THROWS_AS(Field::parse("gf5"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("p"), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse(""), std::invalid_argument);
}

TEST_CASE("characteristic two and composite moduli are rejected") {
    CHECK_THROWS_AS(Field::prime(2), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(9), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(15), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(0), std::invalid_argument);
    CHECK_THROWS_AS(Field::prime(1), std::invalid_argument);
    CHECK_THROWS_AS(Field::parse("p2"), std::invalid_argument);
}

TEST_CASE("rational arithmetic is exact") {
    const Field q = Field::rationals();
    const Scalar third = Scalar::parse(q, "1/3");
    const Scalar sixth = Scalar::parse(q, "1/6");
    CHECK(third + sixth == Scalar::parse(q, "1/2"));
    CHECK(third - sixth == sixth);
    CHECK(third * Scalar::from_int(q, 3) == Scalar::one(q));
    CHECK((third / sixth) == Scalar::from_int(q, 2));
    CHECK((-third).rational_value() == Rational(-1, 3));
    CHECK(Scalar::parse(q, "-7/21") == -third);
}

TEST_CASE("prime field arithmetic") {
    const Field g5 = Field::prime(5);
    const Scalar two = Scalar::from_int(g5, 2);
    const Scalar three = Scalar::from_int(g5, 3);
    CHECK((two + three).is_zero());
    CHECK((two * three).residue() == 1);
    CHECK(two.inverse() == three);
    CHECK(Scalar::from_int(g5, -1).residue() == 4);
    CHECK(Scalar::from_int(g5, 12).residue() == 2);

    // 1/3 = 3^{-1} = 2 mod 5.
    CHECK(Scalar::from_rational(g5, Rational(1, 3)).residue() == 2);
    CHECK(Scalar::parse(g5, "1/3").residue() == 2);
}

TEST_CASE("division by zero throws") {
    const Field g5 = Field::prime(5);
    CHECK_THROWS_AS(Scalar::one(g5) / Scalar::zero(g5), std::domain_error);
    CHECK_THROWS_AS(Scalar::zero(g5).inverse(), std::domain_error);
    CHECK_THROWS_AS(Scalar::zero(Field::rationals()).inverse(), std::domain_error);
    // 1/5 has no image in GF(5).
    CHECK_THROWS_AS(Scalar::from_rational(g5, Rational(1, 5)), std::domain_error);
}

TEST_CASE("mixed-field arithmetic throws") {
    const Scalar a = Scalar::one(Field::prime(5));
    const Scalar b = Scalar::one(Field::prime(7));
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    CHECK_THROWS_AS(a * Scalar::one(Field::rationals()), std::invalid_argument);
}

TEST_CASE("scalar accessors match the field") {
    const Scalar r = Scalar::parse(Field::rationals(), "-1/2");
    CHECK(r.str() == "-1/2");
    CHECK_THROWS_AS(r.residue(), std::invalid_argument);

    const Scalar m = Scalar::from_int(Field::prime(7), 10);
    CHECK(m.str() == "3");
    CHECK_THROWS_AS(m.rational_value(), std::invalid_argument);
}
