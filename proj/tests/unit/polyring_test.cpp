#include <stdexcept>
#include <vector>

#include "doctest.h"
#include "pdres/polyring.hpp"
#include "pdres/scalars.hpp"

using pdres::Field;
using pdres::Polynomial;
using pdres::Scalar;

namespace {
const Field kQ = Field::rationals();

Polynomial p(const std::string& text, std::size_t nvars = 3) {
    return Polynomial::parse(kQ, nvars, text);
}
}  // namespace

TEST_CASE("parse and canonical printing") {
    CHECK(p("x1^2*x3-2*x2+1/2").str() == "x1^2*x3 - 2*x2 + 1/2");
    CHECK(p("x2 + x1").str() == "x1 + x2");
    CHECK(p("0").is_zero());
    CHECK(p("0").str() == "0");
    CHECK(p("-x1").str() == "-x1");
    CHECK(p(" x1 * x2 ").str() == "x1*x2");
    // round trip
    const Polynomial f = p("3*x1*x2^2 - x3^3 + 7");
    CHECK(Polynomial::parse(kQ, 3, f.str()) == f);

    CHECK_THROWS_AS(p("x4"), std::invalid_argument);   // out of range variable
    CHECK_THROWS_AS(p("x0"), std::invalid_argument);   // variables are 1-based
    CHECK_THROWS_AS(p("y1"), std::invalid_argument);
}

TEST_CASE("graded lex descending term order") {
    // Higher total degree first, then lexicographic with x1 largest.
    const Polynomial f = p("x3 + x1 + x2^2");
    CHECK(f.str() == "x2^2 + x1 + x3");
}

TEST_CASE("ring arithmetic") {
    const Polynomial a = p("x1 + x2");
    const Polynomial b = p("x1 - x2");
    CHECK(a * b == p("x1^2 - x2^2"));
    CHECK(a + b == p("2*x1"));
    CHECK(a - a == Polynomial::zero(kQ, 3));
    CHECK((a * b) * a == a * (b * a));
    CHECK(a * (b + b) == a * b + a * b);
    CHECK(-a == Polynomial::zero(kQ, 3) - a);
    CHECK(a * Scalar::from_int(kQ, 2) == p("2*x1+2*x2"));
}

TEST_CASE("degree and homogeneity") {
    CHECK(p("x1^2*x3 + x2").degree() == 3);
    CHECK(p("0").degree() == -1);
    CHECK(p("x1*x2 + x3^2").is_homogeneous());
    CHECK_FALSE(p("x1*x2 + x3").is_homogeneous());
    CHECK(p("0").is_homogeneous());
    CHECK(p("5").is_constant());
}

TEST_CASE("evaluation") {
    const Polynomial f = p("x1^2*x3 - 2*x2 + 1/2");
    const auto at = [&](long long a, long long b, long long c) {
        return f.eval({Scalar::from_int(kQ, a), Scalar::from_int(kQ, b),
                       Scalar::from_int(kQ, c)});
    };
    CHECK(at(2, 1, 3) == Scalar::parse(kQ, "21/2"));
    CHECK(at(0, 0, 0) == Scalar::parse(kQ, "1/2"));

    const Field g5 = Field::prime(5);
    const Polynomial g = Polynomial::parse(g5, 2, "x1*x2 + 3");
    CHECK(g.eval({Scalar::from_int(g5, 2), Scalar::from_int(g5, 4)}).residue() == 1);
    CHECK_THROWS_AS(g.eval({Scalar::from_int(g5, 1)}), std::invalid_argument);
}

TEST_CASE("exact division") {
    const Polynomial f = p("x1^2 - x2^2");
    CHECK(f.divide_exact(p("x1 - x2")) == p("x1 + x2"));
    CHECK(f.divide_exact(f) == Polynomial::one(kQ, 3));
    CHECK_THROWS_AS(f.divide_exact(p("x3")), std::domain_error);
    CHECK_THROWS_AS(f.divide_exact(p("0")), std::domain_error);
    CHECK(p("0").divide_exact(p("x1")).is_zero());

    // Exactness over GF(5): (x1 + 2)(x1 + 3) = x1^2 + 1 mod 5.
    const Field g5 = Field::prime(5);
    const Polynomial h = Polynomial::parse(g5, 1, "x1^2 + 1");
    CHECK(h.divide_exact(Polynomial::parse(g5, 1, "x1 + 2")) ==
          Polynomial::parse(g5, 1, "x1 + 3"));
}

TEST_CASE("deterministic polynomial order") {
    std::vector<Polynomial> gens = {p("x1*x2"), p("x3"), p("x1")};
    std::sort(gens.begin(), gens.end());
    CHECK(gens[0].degree() <= gens[1].degree());
    CHECK(gens[1].degree() <= gens[2].degree());
}

TEST_CASE("mismatched rings throw") {
    const Polynomial a = p("x1");
    const Polynomial b = Polynomial::parse(kQ, 2, "x1");
    CHECK_THROWS_AS(a + b, std::invalid_argument);
    const Polynomial c = Polynomial::parse(Field::prime(5), 3, "x1");
    CHECK_THROWS_AS(a * c, std::invalid_argument);
}
