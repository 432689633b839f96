#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "doctest.h"
#include "golden/frozen.hpp"
#include "pdres/catalog.hpp"

using pdres::CatalogEntry;
using pdres::ExpectationKind;
using pdres::Field;
using pdres::PointLocus;

namespace {
const std::vector<std::uint64_t>& golden_counts(const std::string& id, std::uint32_t p) {
    for (const auto& row : golden::sweep_rows())
        if (id == row.id && p == row.p) return row.counts;
    throw std::out_of_range("no golden row for " + id);
}

void check_against_golden(const std::string& id, std::uint32_t p) {
    const auto rep = pdres::verify_entry(pdres::catalog_entry(id), Field::prime(p));
    CHECK(rep.pass);
    CHECK(rep.detail == "all tabulated depths match the table");
    const auto& counts = golden_counts(id, p);
    REQUIRE(rep.depths.size() == counts.size());
    for (std::size_t j = 0; j < counts.size(); ++j) {
        CHECK(rep.depths[j].k == static_cast<int>(j) + 1);
        CHECK(rep.depths[j].sweep_count == counts[j]);
        if (rep.depths[j].closed_form) CHECK(rep.depths[j].expected_count == counts[j]);
    }
}
}  // namespace

TEST_CASE("catalog loads and is indexed by id") {
    const auto& entries = pdres::load_catalog();
    REQUIRE(entries.size() == 27);
    CHECK(entries.front().id == "I");
    CHECK(entries.back().id == "XXIII");

    std::size_t n8 = 0;
    for (const auto& e : entries)
        if (e.n == 8) ++n8;
    CHECK(n8 == 13);

    const CatalogEntry& three = pdres::catalog_entry("III");
    CHECK(three.n == 5);
    CHECK(three.expr == "125+345");
    CHECK(pdres::catalog_entry("V_a").n == 6);

    CHECK_THROWS_AS(pdres::catalog_entry("nope"), std::out_of_range);
}

TEST_CASE("tabulated expectations by depth") {
    const CatalogEntry& three = pdres::catalog_entry("III");
    REQUIRE(three.expectation_at(1) != nullptr);
    CHECK(three.expectation_at(1)->kind == ExpectationKind::Equations);
    CHECK(three.expectation_at(2) == three.expectation_at(1));
    REQUIRE(three.expectation_at(3) != nullptr);
    CHECK(three.expectation_at(3)->kind == ExpectationKind::ZeroPoint);
    CHECK(three.expectation_at(0) == nullptr);
    CHECK(three.expectation_at(4) == nullptr);

    CHECK(pdres::catalog_entry("XXII").expectation_at(2)->kind ==
          ExpectationKind::Codim3Cubics);
}

TEST_CASE("expected point sets and depth conventions") {
    const Field g3 = Field::prime(3);
    const CatalogEntry& three = pdres::catalog_entry("III");
    CHECK(pdres::expected_points(three, 1, g3).point_count() == 81);  // V(x5)
    CHECK(pdres::expected_points(three, 0, g3) == PointLocus::full(g3, 5));
    CHECK(pdres::expected_points(three, -1, g3) == PointLocus::full(g3, 5));
    CHECK(pdres::expected_points(three, 3, g3).point_count() == 1);
    // Untabulated depth 4 falls back on its partner depth 3.
    CHECK(pdres::expected_points(three, 4, g3) == pdres::expected_points(three, 3, g3));
    CHECK(pdres::expected_points(three, 5, g3).point_count() == 1);  // depth n
    CHECK(pdres::expected_points(three, 6, g3).point_count() == 0);  // beyond n

    // Even ambient rank pairs the other way around.
    const CatalogEntry& four = pdres::catalog_entry("IV");
    CHECK(pdres::expected_points(four, 5, g3) == pdres::expected_points(four, 4, g3));
    CHECK(pdres::expected_points(four, 6, g3).point_count() == 1);

    CHECK_THROWS_AS(pdres::expected_points(pdres::catalog_entry("XXII"), 2, g3),
                    std::domain_error);
    CHECK_THROWS_AS(pdres::expected_points(three, 1, Field::rationals()),
                    std::invalid_argument);
}

TEST_CASE("small entries match their frozen sweeps over gf(3)") {
    for (const char* id : {"II", "III", "IV", "V_a", "V_b"}) check_against_golden(id, 3);
}

TEST_CASE("small entries match their frozen sweeps over gf(5)") {
    for (const char* id : {"I", "II", "III", "IV", "V_a", "V_b", "VII"})
        check_against_golden(id, 5);
}

TEST_CASE("codimension-three rows use the property check") {
    const auto rep = pdres::verify_entry(pdres::catalog_entry("XXII"), Field::prime(5));
    CHECK(rep.pass);
    CHECK(rep.depth2_count == 3225);
    REQUIRE(rep.depths.size() == 6);
    for (const auto& d : rep.depths) {
        if (d.k == 2 || d.k == 3) {
            CHECK_FALSE(d.closed_form);
            CHECK(d.sweep_count == 3225);
            CHECK(d.expected_count == 0);
        } else {
            CHECK(d.closed_form);
        }
        CHECK(d.match);
    }
}

TEST_CASE("entry verification requires a finite field") {
    CHECK_THROWS_AS(pdres::verify_entry(pdres::catalog_entry("II"), Field::rationals()),
                    std::invalid_argument);
}
