#include <random>
#include <stdexcept>

#include "doctest.h"
#include "pdres/algebra.hpp"
#include "pdres/budget.hpp"
#include "pdres/resonance.hpp"

using pdres::Field;
using pdres::GradedAlgebra;
using pdres::PointLocus;
using pdres::Polynomial;
using pdres::Scalar;
using pdres::ScalarMatrix;
using pdres::Trivector;

namespace {
const Field kQ = Field::rationals();

GradedAlgebra form_algebra(const Field& f, std::size_t n, const std::string& expr) {
    return pdres::pd3_from_trivector(Trivector::parse(f, n, expr));
}

std::vector<Scalar> to_scalars(const Field& f, const std::vector<std::uint32_t>& digits) {
    std::vector<Scalar> out;
    for (std::uint32_t d : digits) out.push_back(Scalar::from_int(f, d));
    return out;
}
}  // namespace

TEST_CASE("point locus indexing") {
    const Field g3 = Field::prime(3);
    PointLocus L(g3, 3);
    CHECK(L.space_size() == 27);
    CHECK(L.point_count() == 0);
    // x1 is the most significant digit.
    CHECK(L.index_of({0, 0, 1}) == 1);
    CHECK(L.index_of({1, 0, 0}) == 9);
    CHECK(L.point_at(11) == std::vector<std::uint32_t>{1, 0, 2});
    CHECK(L.index_of(L.point_at(22)) == 22);

    L.set(L.index_of({1, 2, 0}));
    CHECK(L.test(15));
    CHECK(L.sample_points(5) == std::vector<std::vector<std::uint32_t>>{{1, 2, 0}});

    CHECK_THROWS_AS(L.index_of({1, 2}), std::invalid_argument);
    CHECK_THROWS_AS(L.index_of({1, 2, 3}), std::invalid_argument);
}

TEST_CASE("point locus set algebra") {
    const Field g3 = Field::prime(3);
    PointLocus a(g3, 2), b(g3, 2);
    a.set(0);
    a.set(4);
    b.set(4);
    b.set(7);
    CHECK(a.unioned(b).point_count() == 3);
    CHECK(a.intersected(b).point_count() == 1);
    CHECK(b.is_subset_of(a.unioned(b)));
    CHECK_FALSE(a.is_subset_of(b));
    CHECK(a.first_difference(b).value() == 0);
    CHECK(a.first_difference(a) == std::nullopt);
    CHECK(PointLocus::full(g3, 2).point_count() == 9);

    const PointLocus prod = PointLocus::product(a, b);
    CHECK(prod.n() == 4);
    CHECK(prod.point_count() == 4);
    CHECK(prod.test(prod.index_of({0, 0, 1, 1})));  // (0,0) x (1,1)

    PointLocus c(Field::prime(5), 2);
    CHECK_THROWS_AS(a.unioned(c), std::invalid_argument);

    // {0, e2, 2 e2} is closed under scaling; adding (1,0) alone breaks it.
    PointLocus h(g3, 2);
    h.set(0);
    h.set(1);
    h.set(2);
    CHECK(h.is_homogeneous_set());
    h.set(3);
    CHECK_FALSE(h.is_homogeneous_set());
}

TEST_CASE("twisted betti numbers at points") {
    const Field g5 = Field::prime(5);
    const GradedAlgebra A = form_algebra(g5, 3, "123");
    // At the origin the complex has zero differentials.
    CHECK(pdres::twisted_betti(A, to_scalars(g5, {0, 0, 0})) ==
          std::vector<std::uint32_t>{1, 3, 3, 1});
    // At e1 the full contraction has rank 2 and delta0 rank 1.
    CHECK(pdres::twisted_betti(A, to_scalars(g5, {1, 0, 0})) ==
          std::vector<std::uint32_t>{0, 0, 0, 0});
    CHECK_THROWS_AS(pdres::twisted_betti(A, to_scalars(g5, {1, 0})),
                    std::invalid_argument);
}

TEST_CASE("linear-form complex structure") {
    const GradedAlgebra A = form_algebra(kQ, 5, "125+345");
    const auto C = pdres::build_bgg(A);
    REQUIRE(C.delta.size() == 3);
    CHECK(C.delta[0].rows() == 1);
    CHECK(C.delta[0].cols() == 5);
    CHECK(C.delta[0].at(0, 2) == Polynomial::variable(kQ, 5, 3));
    CHECK(C.delta[1].is_alternating());
    // The last differential is the transpose of the first.
    for (std::size_t u = 0; u < 5; ++u)
        CHECK(C.delta[2].at(u, 0) == C.delta[0].at(0, u));
    CHECK((C.delta[0] * C.delta[1]).is_zero());
    CHECK((C.delta[1] * C.delta[2]).is_zero());

    CHECK_THROWS_AS(pdres::build_bgg(pdres::sphere_algebra(kQ, 2)),
                    std::invalid_argument);  // no degree-one part
}

TEST_CASE("symbolic and table-driven betti numbers agree") {
    std::mt19937 rng(424242);
    const Field g5 = Field::prime(5);
    const GradedAlgebra A = form_algebra(g5, 5, "125+345");
    const auto C = pdres::build_bgg(A);
    std::uniform_int_distribution<int> digit(0, 4);
    for (int trial = 0; trial < 50; ++trial) {
        std::vector<Scalar> pt;
        for (int s = 0; s < 5; ++s) pt.push_back(Scalar::from_int(g5, digit(rng)));
        CHECK(C.betti_at(pt) == pdres::twisted_betti(A, pt));
    }
}

TEST_CASE("resonance sweep basics") {
    const Field g3 = Field::prime(3);
    const auto P = pdres::resonance_points(form_algebra(g3, 3, "123"));
    CHECK(P.n == 3);
    CHECK(P.dims == std::vector<std::uint32_t>{1, 3, 3, 1});
    // R^1_k = {0} for every depth.
    for (int k = 1; k <= 3; ++k) {
        CHECK(P.locus(1, k).point_count() == 1);
        CHECK(P.locus(1, k).test(0));
    }
    // Depth conventions.
    CHECK(P.locus(1, 0) == PointLocus::full(g3, 3));
    CHECK(P.locus(1, -2) == PointLocus::full(g3, 3));
    CHECK(P.locus(1, 4).point_count() == 0);
    CHECK(P.locus(0, 1).point_count() == 1);  // R^0_1 = {0}
    CHECK_THROWS_AS(P.locus_ref(1, 4), std::out_of_range);

    // Every locus is closed under scaling.
    for (std::uint32_t i = 0; i <= 3; ++i)
        for (std::uint32_t k = 1; k <= P.dims[i]; ++k)
            CHECK(P.locus_ref(i, k).is_homogeneous_set());
}

TEST_CASE("resonance sweep with workers matches single-threaded") {
    const Field g5 = Field::prime(5);
    const GradedAlgebra A = form_algebra(g5, 5, "125+345");
    const auto P1 = pdres::resonance_points(A, pdres::kDefaultBudget, 1);
    const auto P4 = pdres::resonance_points(A, pdres::kDefaultBudget, 4);
    for (std::uint32_t i = 0; i <= 3; ++i)
        for (std::uint32_t k = 1; k <= P1.dims[i]; ++k)
            CHECK(P1.locus_ref(i, k) == P4.locus_ref(i, k));
}

TEST_CASE("resonance sweep budget") {
    const Field g5 = Field::prime(5);
    CHECK_THROWS_AS(pdres::resonance_points(form_algebra(g5, 5, "125+345"), 100),
                    pdres::BudgetExceeded);
}

TEST_CASE("rational sweeps are rejected") {
    CHECK_THROWS_AS(pdres::resonance_points(form_algebra(kQ, 3, "123")),
                    std::invalid_argument);
}

TEST_CASE("locus of an ideal by direct evaluation") {
    const Field g3 = Field::prime(3);
    const auto poly = [&](const std::string& s) { return Polynomial::parse(g3, 3, s); };

    // Homogeneous: the representative fast path must agree with brute force.
    const PointLocus hom =
        pdres::locus_of_ideal({poly("x1^2 - x2*x3"), poly("x1*x3")}, g3, 3);
    PointLocus brute(g3, 3);
    for (std::uint64_t idx = 0; idx < 27; ++idx) {
        const auto digits = brute.point_at(idx);
        const auto pt = to_scalars(g3, digits);
        if (poly("x1^2 - x2*x3").eval(pt).is_zero() && poly("x1*x3").eval(pt).is_zero())
            brute.set(idx);
    }
    CHECK(hom == brute);

    // Non-homogeneous generators take the plain path.
    const PointLocus affine = pdres::locus_of_ideal({poly("x1 + 1")}, g3, 3);
    CHECK(affine.point_count() == 9);
    CHECK_FALSE(affine.test(0));

    CHECK(pdres::locus_of_ideal({}, g3, 3) == PointLocus::full(g3, 3));
    CHECK(pdres::locus_of_ideal({poly("1")}, g3, 3).point_count() == 0);
    CHECK(pdres::locus_of_ideal({poly("0")}, g3, 3) == PointLocus::full(g3, 3));

    CHECK_THROWS_AS(
        pdres::locus_of_ideal({Polynomial::parse(Field::prime(5), 3, "x1")}, g3, 3),
        std::invalid_argument);
    CHECK_THROWS_AS(pdres::locus_of_ideal({poly("x1")}, g3, 3, 10),
                    pdres::BudgetExceeded);
}

TEST_CASE("determinantal ideals cut out the swept loci") {
    const Field g3 = Field::prime(3);
    const GradedAlgebra A = form_algebra(g3, 5, "125+345");
    const auto P = pdres::resonance_points(A);
    // Degree-one loci via the alternating-matrix minors.
    for (int k = 1; k <= 3; ++k) {
        const auto gens = pdres::resonance_ideal(A, 1, k);
        CHECK(pdres::locus_of_ideal(gens, g3, 5) == P.locus(1, k));
    }
    // A middle degree through the general product-of-ideals route.
    const auto gens2 = pdres::resonance_ideal(A, 2, 1);
    CHECK(pdres::locus_of_ideal(gens2, g3, 5) == P.locus(2, 1));

    // Depth conventions.
    const auto unit = pdres::resonance_ideal(A, 1, 99);
    REQUIRE(unit.size() == 1);
    CHECK(unit[0] == Polynomial::one(g3, 5));
    CHECK(pdres::resonance_ideal(A, 1, -1).empty());
}

TEST_CASE("pfaffian loci by depth") {
    const Trivector mu = Trivector::parse(kQ, 5, "125+345");
    // Odd n, depth 0: the zero ideal (full space).
    CHECK(pdres::pfaffian_loci(mu, 0).empty());
    // Depths 1 and 2 share the size-4 pfaffians.
    const auto d1 = pdres::pfaffian_loci(mu, 1);
    const auto d2 = pdres::pfaffian_loci(mu, 2);
    CHECK(d1 == d2);
    CHECK_FALSE(d1.empty());
    // Top depth: the entries themselves.
    const auto d4 = pdres::pfaffian_loci(mu, 4);
    CHECK(d4.size() == 5);  // entries are +-x1..+-x5, five distinct up to sign
    CHECK_THROWS_AS(pdres::pfaffian_loci(mu, 5), std::invalid_argument);
    CHECK_THROWS_AS(pdres::pfaffian_loci(mu, -1), std::invalid_argument);

    const Trivector even = Trivector::parse(kQ, 6, "123+456");
    // The full-size pfaffian of a contraction matrix vanishes identically
    // (the point itself is always in the kernel), so depth 0 is the zero ideal.
    CHECK(pdres::pfaffian_loci(even, 0).empty());
    const auto top = pdres::pfaffian_loci(even, 5);
    CHECK_FALSE(top.empty());
}

TEST_CASE("reduced determinant and pfaffian") {
    const auto r3 = pdres::turaev_det_pf(Trivector::parse(kQ, 3, "123"));
    CHECK(r3.det == Polynomial::one(kQ, 3));
    REQUIRE(r3.pf.has_value());
    CHECK(*r3.pf == Polynomial::one(kQ, 3));

    const auto r5 = pdres::turaev_det_pf(Trivector::parse(kQ, 5, "125+345"));
    REQUIRE(r5.pf.has_value());
    CHECK(*r5.pf == Polynomial::parse(kQ, 5, "x5"));
    CHECK(r5.det == Polynomial::parse(kQ, 5, "x5^2"));
    CHECK(r5.pf->degree() == 1);  // (n-3)/2

    // Even n: all codimension-one minors vanish.
    const auto r6 = pdres::turaev_det_pf(Trivector::parse(kQ, 6, "123+456"));
    CHECK(r6.det.is_zero());
    CHECK_FALSE(r6.pf.has_value());

    CHECK_THROWS_AS(pdres::turaev_det_pf(Trivector::parse(kQ, 2, "")),
                    std::invalid_argument);
}

TEST_CASE("union of singular planes") {
    const Field g3 = Field::prime(3);
    // "123" in three variables admits no singular plane: only the origin.
    const GradedAlgebra A = form_algebra(g3, 3, "123");
    const PointLocus planes = pdres::union_singular_planes(A);
    CHECK(planes.point_count() == 1);
    CHECK(planes == pdres::resonance_points(A).locus(1, 1));

    // "125+345": the planes recover the depth-one locus V(x5).
    const GradedAlgebra B = form_algebra(g3, 5, "125+345");
    const PointLocus pb = pdres::union_singular_planes(B);
    CHECK(pb == pdres::resonance_points(B).locus(1, 1));
    CHECK(pb.point_count() == 81);

    CHECK_THROWS_AS(pdres::union_singular_planes(B, 3), pdres::BudgetExceeded);
    CHECK_THROWS_AS(pdres::union_singular_planes(form_algebra(kQ, 3, "123")),
                    std::invalid_argument);
}

TEST_CASE("chain map along the identity commutes") {
    const Field g5 = Field::prime(5);
    const GradedAlgebra A = form_algebra(g5, 3, "123");
    const auto rep =
        pdres::bgg_chain_map(pdres::identity_morphism(A), ScalarMatrix::identity(g5, 3));
    CHECK(rep.all_commute);
    for (bool ok : rep.square_commutes) CHECK(ok);
    for (const auto& res : rep.residuals) CHECK(res.is_zero());
}

TEST_CASE("chain map along a connected-sum inclusion") {
    const Field g5 = Field::prime(5);
    const GradedAlgebra A = form_algebra(g5, 3, "123");
    const GradedAlgebra E = pdres::connected_sum(A, A);
    const auto phi = pdres::connected_sum_inclusion(A, A);

    // psi1 projects the sum coordinates back onto the first summand.
    ScalarMatrix psi1(g5, 6, 3);
    for (std::size_t i = 0; i < 3; ++i) psi1.at(i, i) = Scalar::one(g5);

    const auto rep = pdres::bgg_chain_map(phi, psi1);
    REQUIRE(rep.square_commutes.size() == 3);
    // The unit square fails: the complement directions of the sum survive.
    CHECK_FALSE(rep.square_commutes[0]);
    CHECK_FALSE(rep.residuals[0].is_zero());
    // Higher squares commute because cross products vanish in the sum.
    CHECK(rep.square_commutes[1]);
    CHECK(rep.square_commutes[2]);
    CHECK_FALSE(rep.all_commute);

    // A psi1 that is not a right inverse is rejected.
    CHECK_THROWS_AS(pdres::bgg_chain_map(phi, ScalarMatrix(g5, 6, 3)),
                    std::invalid_argument);
}
