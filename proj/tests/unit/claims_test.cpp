#include <algorithm>
#include <stdexcept>
#include <utility>
#include <vector>

#include "doctest.h"
#include "pdres/algebra.hpp"
#include "pdres/budget.hpp"
#include "pdres/claims.hpp"

using pdres::Field;
using pdres::GradedAlgebra;
using pdres::Trivector;

namespace {
const Field kG3 = Field::prime(3);

GradedAlgebra form_algebra(const Field& f, std::size_t n, const std::string& expr) {
    return pdres::pd3_from_trivector(Trivector::parse(f, n, expr));
}
}  // namespace

TEST_CASE("claim name registry") {
    const auto& names = pdres::claim_names();
    CHECK(names.size() == 13);
    CHECK(names.front() == "duality");
    CHECK(std::find(names.begin(), names.end(), "functoriality") != names.end());
    CHECK(std::find(names.begin(), names.end(), "isotropic_union") != names.end());
}

TEST_CASE("duality and degree table claims") {
    const GradedAlgebra A = form_algebra(kG3, 5, "125+345");
    auto rep = pdres::claim_duality(A);
    CHECK(rep.pass);
    CHECK(rep.claim == "duality");
    CHECK(rep.counterexample == std::nullopt);

    rep = pdres::claim_degree_table(A);
    CHECK(rep.pass);

    // The depth-table identity only makes sense in top degree three.
    CHECK_THROWS_AS(pdres::claim_degree_table(pdres::surface_algebra(kG3, 1)),
                    std::invalid_argument);
}

TEST_CASE("parity and vanishing claims") {
    const std::vector<std::pair<std::size_t, const char*>> cases = {
        {3, "123"}, {5, "125+345"}, {6, "123+456"}};
    for (const auto& [n, expr] : cases) {
        const Trivector mu = Trivector::parse(kG3, n, expr);
        const auto parity = pdres::claim_parity(mu);
        CHECK(parity.pass);
        const auto vanish = pdres::claim_vanish(mu);
        CHECK(vanish.pass);
    }
}

TEST_CASE("dichotomy for the depth-one locus") {
    // n = 3: only the origin.
    CHECK(pdres::claim_top(Trivector::parse(kG3, 3, "123")).pass);
    // Nonzero pfaffian: the locus is its hypersurface.
    CHECK(pdres::claim_top(Trivector::parse(kG3, 5, "125+345")).pass);
    // Zero pfaffian: the locus is everything.
    CHECK(pdres::claim_top(Trivector::parse(kG3, 5, "123")).pass);
}

TEST_CASE("corank forces full loci") {
    CHECK(pdres::claim_corank_full(Trivector::parse(kG3, 5, "123")).pass);
    CHECK(pdres::claim_corank_full(Trivector::parse(kG3, 7, "125+345")).pass);
    // Irreducible forms assert an empty statement.
    CHECK(pdres::claim_corank_full(Trivector::parse(kG3, 5, "125+345")).pass);
}

TEST_CASE("radical split reduces loci") {
    CHECK(pdres::claim_decomp(Trivector::parse(kG3, 4, "123")).pass);
    CHECK(pdres::claim_decomp(Trivector::parse(kG3, 5, "123")).pass);
    CHECK(pdres::claim_decomp(Trivector::parse(kG3, 7, "125+345")).pass);
    CHECK(pdres::claim_decomp(Trivector::parse(kG3, 5, "125+345")).pass);
}

TEST_CASE("connected sum additivity") {
    const GradedAlgebra A = form_algebra(kG3, 3, "123");
    CHECK(pdres::claim_connsum(A, A).pass);
    const GradedAlgebra T = pdres::surface_algebra(kG3, 1);
    CHECK(pdres::claim_connsum(T, T).pass);
    CHECK(pdres::claim_connsum(A, form_algebra(kG3, 5, "125+345")).pass);
}

TEST_CASE("tensor product convolution") {
    const GradedAlgebra E1 = pdres::sphere_algebra(kG3, 1);
    CHECK(pdres::claim_tensor(E1, E1).pass);
    CHECK(pdres::claim_tensor(form_algebra(kG3, 3, "123"), E1).pass);
}

TEST_CASE("wedge sum additivity") {
    const GradedAlgebra T = pdres::surface_algebra(kG3, 1);
    CHECK(pdres::claim_wedge(T, T).pass);
    CHECK(pdres::claim_wedge(pdres::sphere_algebra(kG3, 2), T).pass);
}

TEST_CASE("nullity bound and isotropic union claims") {
    const std::vector<std::pair<std::size_t, const char*>> cases = {{3, "123"},
                                                                   {5, "125+345"}};
    for (const auto& [n, expr] : cases) {
        const Trivector mu = Trivector::parse(kG3, n, expr);
        CHECK(pdres::claim_nullity_bound(mu).pass);
        CHECK(pdres::claim_isotropic_union(form_algebra(kG3, n, expr)).pass);
    }
}

TEST_CASE("inclusion into a connected sum is comparable") {
    const GradedAlgebra A = form_algebra(kG3, 3, "123");
    const auto rep = pdres::claim_functoriality(pdres::connected_sum_inclusion(A, A));
    CHECK(rep.pass);
    CHECK(rep.claim == "functoriality");
}

TEST_CASE("claim dispatch by name") {
    const GradedAlgebra A = form_algebra(kG3, 5, "125+345");
    CHECK(pdres::claim_by_name("duality", A).pass);
    CHECK(pdres::claim_by_name("parity", A).pass);
    CHECK(pdres::claim_by_name("decomp", A).pass);

    CHECK_THROWS_AS(pdres::claim_by_name("nope", A), std::invalid_argument);
    CHECK_THROWS_AS(pdres::claim_by_name("connsum", A), std::invalid_argument);
    CHECK_THROWS_AS(pdres::claim_by_name("functoriality", A), std::invalid_argument);
    CHECK_THROWS_AS(
        pdres::claim_by_name("parity", form_algebra(Field::rationals(), 3, "123")),
        std::invalid_argument);
}

TEST_CASE("claims respect the sweep budget") {
    CHECK_THROWS_AS(pdres::claim_duality(form_algebra(kG3, 5, "125+345"), 10),
                    pdres::BudgetExceeded);
}
