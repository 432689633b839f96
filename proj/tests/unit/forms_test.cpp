#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pdres/forms.hpp"

using pdres::Field;
using pdres::Polynomial;
using pdres::Scalar;
using pdres::ScalarMatrix;
using pdres::Trivector;

namespace {
const Field kQ = Field::rationals();

std::vector<Scalar> unit_vector(const Field& f, std::size_t n, std::size_t at) {
    std::vector<Scalar> v(n, Scalar::zero(f));
    v[at] = Scalar::one(f);
    return v;
}

ScalarMatrix random_invertible(std::mt19937& rng, const Field& f, std::size_t n) {
    std::uniform_int_distribution<int> digit(0, static_cast<int>(f.characteristic()) - 1);
    while (true) {
        ScalarMatrix g(f, n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                g.at(i, j) = Scalar::from_int(f, digit(rng));
        if (g.rank() == n) return g;
    }
}
}  // namespace

TEST_CASE("trivector parsing") {
    const Trivector mu = Trivector::parse(kQ, 5, "125+345");
    CHECK(mu.coeff(0, 1, 4).is_one());
    CHECK(mu.coeff(2, 3, 4).is_one());
    CHECK(mu.coeff(0, 2, 4).is_zero());
    // antisymmetry
    CHECK(mu.coeff(1, 0, 4) == -Scalar::one(kQ));
    CHECK(mu.coeff(0, 0, 4).is_zero());

    const Trivector with_coeffs = Trivector::parse(kQ, 6, "2*125 - 346");
    CHECK(with_coeffs.coeff(0, 1, 4) == Scalar::from_int(kQ, 2));
    CHECK(with_coeffs.coeff(2, 3, 5) == Scalar::from_int(kQ, -1));

    const Trivector brackets = Trivector::parse(kQ, 10, "[1,2,10] + [3,4,5]");
    CHECK(brackets.coeff(0, 1, 9).is_one());

    CHECK(Trivector::parse(kQ, 4, "").is_zero());
    CHECK(Trivector::parse(kQ, 4, "0").is_zero());
    CHECK(Trivector::parse(kQ, 5, "125+345") == mu);

    CHECK_THROWS_AS(Trivector::parse(kQ, 5, "126+345x"), std::invalid_argument);
    CHECK_THROWS_AS(Trivector::parse(kQ, 5, "116"), std::invalid_argument);  // repeated
    CHECK_THROWS_AS(Trivector::parse(kQ, 5, "127"), std::invalid_argument);  // out of range
}

TEST_CASE("canonical text round trip") {
    for (const char* expr : {"125+345", "123+456", "2*125 - 346", "0"}) {
        const Trivector mu = Trivector::parse(kQ, 6, expr);
        CHECK(Trivector::parse(kQ, 6, mu.str()) == mu);
    }
}

TEST_CASE("contraction matrices") {
    const Trivector mu = Trivector::parse(kQ, 5, "125+345");
    // contraction(e5)[j][k] = mu(e5, e_j, e_k): pairs (1,2) and (3,4).
    const ScalarMatrix c5 = mu.contraction(unit_vector(kQ, 5, 4));
    CHECK(c5.at(0, 1) == Scalar::from_int(kQ, 1));
    CHECK(c5.at(1, 0) == Scalar::from_int(kQ, -1));
    CHECK(c5.at(2, 3) == Scalar::from_int(kQ, 1));
    CHECK(c5.rank() == 4);
    // contraction(e1) only sees the pair (2,5).
    CHECK(mu.contraction(unit_vector(kQ, 5, 0)).rank() == 2);

    const auto theta = mu.generic_contraction();
    CHECK(theta.is_alternating());
    CHECK(theta.at(0, 1) == Polynomial::parse(kQ, 5, "x5"));
    CHECK(theta.at(1, 4) == Polynomial::parse(kQ, 5, "x1"));
    CHECK(theta.at(4, 1) == Polynomial::parse(kQ, 5, "-x1"));
}

TEST_CASE("group action composes") {
    std::mt19937 rng(31337);
    const Field g5 = Field::prime(5);
    const Trivector mu = Trivector::parse(g5, 5, "125+345");
    for (int trial = 0; trial < 20; ++trial) {
        const ScalarMatrix g = random_invertible(rng, g5, 5);
        const ScalarMatrix h = random_invertible(rng, g5, 5);
        CHECK(mu.transformed(g * h) == mu.transformed(h).transformed(g));
    }
    CHECK(mu.transformed(ScalarMatrix::identity(g5, 5)) == mu);
    CHECK_THROWS_AS(mu.transformed(ScalarMatrix(g5, 5, 5)), std::domain_error);
}

TEST_CASE("form rank and radical split") {
    CHECK(Trivector::parse(kQ, 5, "123").form_rank() ==
          std::pair<std::size_t, std::size_t>{3, 2});
    CHECK(Trivector::parse(kQ, 5, "125+345").form_rank() ==
          std::pair<std::size_t, std::size_t>{5, 0});
    CHECK(Trivector::parse(kQ, 4, "").form_rank() ==
          std::pair<std::size_t, std::size_t>{0, 4});

    const auto split = pdres::split_by_rank(Trivector::parse(kQ, 7, "125+345"));
    CHECK(split.rank == 5);
    CHECK(split.corank == 2);
    CHECK(split.reduced.n() == 5);
    CHECK(split.reduced.form_rank().first == 5);

    // The irreducible case keeps the identity change of basis.
    const auto id_split = pdres::split_by_rank(Trivector::parse(kQ, 5, "125+345"));
    CHECK(id_split.g == ScalarMatrix::identity(kQ, 5));
}

TEST_CASE("nullity search on small forms") {
    const Field g3 = Field::prime(3);
    const auto r1 = pdres::nullity(Trivector::parse(g3, 3, "123"), 3);
    CHECK(r1.nu == 1);
    CHECK(r1.exact);
    REQUIRE(r1.witness.size() == 1);
    CHECK(pdres::is_two_singular(Trivector::parse(g3, 3, "123"), r1.witness));

    const auto r2 = pdres::nullity(Trivector::parse(g3, 5, "125+345"), 5);
    CHECK(r2.nu == 2);
    CHECK(pdres::is_two_singular(Trivector::parse(g3, 5, "125+345"), r2.witness));

    // Tiny budgets surface as inexact lower bounds, not exceptions.
    const auto r3 = pdres::nullity(Trivector::parse(g3, 5, "125+345"), 5, 2);
    CHECK_FALSE(r3.exact);
    CHECK(r3.nu <= 2);
}

TEST_CASE("pfaffian of a form") {
    const Polynomial pf = pdres::form_pfaffian(Trivector::parse(kQ, 5, "125+345"));
    CHECK(pf == Polynomial::parse(kQ, 5, "x5"));
    CHECK_THROWS_AS(pdres::form_pfaffian(Trivector::parse(kQ, 4, "123")),
                    std::invalid_argument);  // even n
}

TEST_CASE("pfaffian genericity") {
    const auto generic = pdres::is_bp_generic(Trivector::parse(kQ, 5, "125+345"));
    CHECK(generic.generic);
    CHECK(generic.pf == Polynomial::parse(kQ, 5, "x5"));
    REQUIRE(generic.witness.has_value());

    // "123" in five variables has a two-dimensional radical: no contraction
    // reaches rank 4.
    const auto degenerate = pdres::is_bp_generic(Trivector::parse(kQ, 5, "123"));
    CHECK_FALSE(degenerate.generic);
    CHECK(degenerate.pf.is_zero());

    CHECK_THROWS_AS(pdres::is_bp_generic(Trivector::parse(kQ, 4, "123")),
                    std::invalid_argument);
}

TEST_CASE("contraction-rank genericity sweep") {
    const Field g3 = Field::prime(3);
    // Every nonzero contraction of "123" has rank 2 < 4.
    const auto low = pdres::is_dfmr_generic(Trivector::parse(g3, 3, "123"), g3);
    CHECK_FALSE(low.generic);
    REQUIRE(low.counterexample.has_value());

    // "125+345": contraction(e1) has rank 2.
    const auto mixed = pdres::is_dfmr_generic(Trivector::parse(g3, 5, "125+345"), g3);
    CHECK_FALSE(mixed.generic);

    CHECK_THROWS_AS(
        pdres::is_dfmr_generic(Trivector::parse(kQ, 5, "125+345"), kQ),
        std::invalid_argument);
}
