#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdres/budget.hpp"
#include "pdres/forms.hpp"
#include "pdres/resonance.hpp"
#include "pdres/scalars.hpp"

namespace pdres {

/// What the reference table asserts a depth locus to be.
enum class ExpectationKind {
    Full,          ///< all of GF(q)^n
    ZeroPoint,     ///< exactly the origin
    Equations,     ///< union of the components' vanishing sets
    Codim3Cubics,  ///< cut out by unprinted cubics; property-checked only
    Empty          ///< no points at all (rank-0 entry)
};

struct Expectation {
    std::vector<int> depths;
    ExpectationKind kind = ExpectationKind::Empty;
    /// For Equations: one polynomial list per irreducible component; the
    /// expected locus is the union of their common vanishing sets.
    std::vector<std::vector<std::string>> components;
};

struct CatalogEntry {
    std::string id;
    std::size_t n = 0;
    std::string expr;
    std::vector<Expectation> expected;

    /// The entry's trivector over the given field.
    Trivector form(const Field& f) const;

    /// The tabulated expectation covering depth k, or nullptr.
    const Expectation* expectation_at(int k) const;
};

/// The embedded reference table (parsed and validated once per process:
/// 27 entries, every form irreducible of the stated rank, every equation
/// parseable).  Throws std::runtime_error on corrupt data.
const std::vector<CatalogEntry>& load_catalog();

/// Lookup by id ("III", "V_a", ...); throws std::out_of_range when unknown.
const CatalogEntry& catalog_entry(const std::string& id);

/// Evaluates the tabulated expectation for depth k over GF(q)^n.  Depth
/// k <= 0 is the full space and k >= n collapses to the origin (empty beyond
/// n); untabulated intermediate depths fall back to their parity partner.
/// Throws std::domain_error("no closed-form expectation") for
/// codimension-3 rows.
PointLocus expected_points(const CatalogEntry& entry, int k, const Field& gf,
                           std::uint64_t budget = kDefaultBudget);

/// Outcome of one tabulated depth inside verify_entry.
struct DepthResult {
    int k = 0;
    /// False for codimension-3 rows, where `match` reports the property
    /// check ({0} proper subset, not full) instead of a set equality.
    bool closed_form = true;
    bool match = false;
    std::uint64_t sweep_count = 0;
    std::uint64_t expected_count = 0;  ///< 0 when closed_form is false
};

struct EntryReport {
    std::string id;
    Field field = Field::rationals();
    bool pass = false;
    std::vector<DepthResult> depths;
    /// First point where a set equality failed.
    std::optional<std::vector<std::uint32_t>> counterexample;
    std::string detail;
    /// |R^1_2|: input for the cross-prime growth-exponent check on
    /// codimension-3 rows.
    std::uint64_t depth2_count = 0;
};

/// Sweeps the entry's form over GF(q) and compares every tabulated depth
/// against the table.
EntryReport verify_entry(const CatalogEntry& entry, const Field& gf,
                         std::uint64_t budget = kDefaultBudget, unsigned workers = 1);

/// The embedded text of data/catalog.json.
extern const char* const kCatalogJsonText;

}  // namespace pdres
