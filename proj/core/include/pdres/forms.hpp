#pragma once

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pdres/budget.hpp"
#include "pdres/matlin.hpp"
#include "pdres/polyring.hpp"
#include "pdres/scalars.hpp"

namespace pdres {

/// Alternating 3-form (trivector) on an n-dimensional space.
///
/// Coefficients are stored on strictly increasing 0-based triples (i,j,k);
/// the full antisymmetric extension mu_{s(i)s(j)s(k)} = sign(s) mu_{ijk} is
/// implied.  Zero coefficients are never stored.
class Trivector {
public:
    using Triple = std::array<std::uint32_t, 3>;

    Trivector(const Field& f, std::size_t n);

    /// Parses "125+345", "2*125-346", or bracket triples "[1,2,10]" (needed
    /// when n > 9).  The empty string is the zero form.
    static Trivector parse(const Field& f, std::size_t n, const std::string& expr);

    const Field& field() const { return field_; }
    std::size_t n() const { return n_; }
    const std::map<Triple, Scalar>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }

    /// Adds c * e^i ^ e^j ^ e^k (1-based indices, any order, sign-normalized).
    /// Throws on repeated or out-of-range indices.
    void add_term(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& c);

    /// mu(e_{i+1}, e_{j+1}, e_{k+1}) for 0-based indices in any order.
    Scalar coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const;

    bool operator==(const Trivector& rhs) const;
    bool operator!=(const Trivector& rhs) const { return !(*this == rhs); }

    /// Canonical text in the parse grammar; "0" for the zero form.
    std::string str() const;

    /// The action (g.mu)(a, b, c) = mu(g^-1 a, g^-1 b, g^-1 c); satisfies
    /// (gh).mu = g.(h.mu).  Throws std::domain_error for singular g.
    Trivector transformed(const ScalarMatrix& g) const;

    /// The skew matrix of the contraction 2-form:
    /// contraction(v)[j][k] = mu(v, e_j, e_k).
    ScalarMatrix contraction(const std::vector<Scalar>& v) const;

    /// The same contraction with a generic vector x = (x1..xn): the n x n
    /// matrix of linear forms theta with theta[j][k] = sum_i mu_{ijk} x_i.
    PolyMatrix generic_contraction() const;

    /// Matrix of v -> contraction(v) as a linear map into 2-forms: rows are
    /// pairs (j,k), j < k, in lexicographic order; its kernel is the radical
    /// {v : contraction(v) = 0}.
    ScalarMatrix contraction_map() const;

    /// (rank, corank): rank is n minus the dimension of the radical.
    std::pair<std::size_t, std::size_t> form_rank() const;

private:
    Field field_;
    std::size_t n_;
    std::map<Triple, Scalar> coeffs_;
};

/// Result of splitting off the radical of a form.
struct RankSplit {
    std::size_t rank = 0;
    std::size_t corank = 0;
    /// Basis change with transformed(g) supported on the first `rank`
    /// coordinates (identity when the form is already irreducible).
    ScalarMatrix g;
    /// The restricted irreducible form on `rank` coordinates.
    Trivector reduced;
};

/// Splits mu along its radical: returns g and the irreducible part.  The
/// basis completion is deterministic (standard vectors completing the radical,
/// in ascending order) so results are reproducible.
RankSplit split_by_rank(const Trivector& mu);

/// Result of the exhaustive 2-singular subspace search.
struct NullityResult {
    /// Largest dimension found; equal to the nullity when exact is true,
    /// otherwise a lower bound.
    std::size_t nu = 0;
    /// Basis of one maximal 2-singular subspace found (row-echelon rows).
    std::vector<std::vector<Scalar>> witness;
    /// False when the node budget was exhausted before completing the search.
    bool exact = true;
    std::uint64_t nodes_visited = 0;
};

/// Nullity of mu over a finite field: the maximal dimension <= dim_cap of a
/// subspace U with mu(a, b, c) = 0 for all a, b in U and all c.  Exhaustive
/// subspace search (each subspace visited once via canonical echelon bases);
/// each candidate extension vector costs one budget node.
NullityResult nullity(const Trivector& mu, std::size_t dim_cap,
                      std::uint64_t budget = kDefaultBudget);

/// Checks that the rows of `basis` really span a 2-singular subspace.
bool is_two_singular(const Trivector& mu, const std::vector<std::vector<Scalar>>& basis);

/// The Pfaffian polynomial Pf(mu) of a form of odd rank n, homogeneous of
/// degree (n-3)/2, defined by pf(theta(i;i)) = (-1)^{i+1} x_i Pf(mu) where
/// theta(i;i) deletes row and column i.  Cross-checked on two indices.
/// Throws std::invalid_argument for even n or n < 3.
Polynomial form_pfaffian(const Trivector& mu);

struct BpGenericity {
    bool generic = false;
    /// Pf(mu); the decision is Pf != 0 (symbolic, field-independent).
    Polynomial pf;
    /// A vector with contraction rank n-1 if the finite-field cross-check
    /// found one (absence does not refute genericity for small fields).
    std::optional<std::vector<Scalar>> witness;
};

/// Whether some contraction of mu (n odd) reaches the maximal even rank n-1.
/// Decided symbolically via Pf(mu) != 0; a sweep over the given finite field
/// (the form's own field when finite) is run as a cross-check witness search.
/// Throws std::invalid_argument for even n.
BpGenericity is_bp_generic(const Trivector& mu, std::uint32_t witness_prime = 5);

struct DfmrResult {
    bool generic = false;
    /// A nonzero vector with contraction rank < 4 when not generic.
    std::optional<std::vector<Scalar>> counterexample;
};

/// Whether every nonzero v in GF(q)^n has rank(contraction(v)) >= 4,
/// by exhaustive sweep over projective representatives.
DfmrResult is_dfmr_generic(const Trivector& mu, const Field& gf,
                           std::uint64_t budget = kDefaultBudget);

}  // namespace pdres
