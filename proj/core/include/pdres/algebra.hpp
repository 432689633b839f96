#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "pdres/forms.hpp"
#include "pdres/matlin.hpp"
#include "pdres/scalars.hpp"

namespace pdres {

/// Finite-dimensional connected graded-commutative algebra, stored as
/// multiplication tables on fixed bases.
///
/// Degrees run 0..m with dim(0) == 1 and the basis of degree 0 fixed as the
/// unit.  Structure constants are kept for degree pairs (i, j) with
/// i, j >= 1 and i + j <= m; products with a degree-0 factor are scalar
/// multiplication and products landing above the top degree are zero.
/// Table entry (i, j)[u][v][w] is the coefficient of the w-th basis element
/// of degree i+j in e^i_u * e^j_v (all indices 0-based internally).
class GradedAlgebra {
public:
    GradedAlgebra(const Field& f, std::vector<std::uint32_t> dims);

    const Field& field() const { return field_; }
    std::uint32_t top_degree() const { return m_; }
    /// dim(i) is 0 outside 0..m.
    std::size_t dim(std::uint32_t i) const;
    const std::vector<std::uint32_t>& dims() const { return dims_; }

    void set_product(std::uint32_t i, std::size_t u, std::uint32_t j, std::size_t v,
                     std::size_t w, const Scalar& c);
    Scalar product_coeff(std::uint32_t i, std::size_t u, std::uint32_t j, std::size_t v,
                         std::size_t w) const;

    /// Degree-(i+j) component of a * b for a in degree i, b in degree j.
    std::vector<Scalar> multiply(std::uint32_t i, const std::vector<Scalar>& a,
                                 std::uint32_t j, const std::vector<Scalar>& b) const;

    /// Left multiplication by the degree-one element a as a map A^i -> A^{i+1}
    /// in the row-domain convention: M[u][w] = coefficient of w in a * e^i_u.
    ScalarMatrix mult_by_degree_one(const std::vector<Scalar>& a, std::uint32_t i) const;

    void set_orientation(std::vector<Scalar> eps);
    bool has_orientation() const { return !orientation_.empty(); }
    const std::vector<Scalar>& orientation() const;
    /// The orientation functional applied to a top-degree coordinate vector.
    Scalar top_value(const std::vector<Scalar>& top) const;

    /// Pairing matrix P[u][v] = eps(e^i_u * e^{m-i}_v).
    ScalarMatrix pairing_matrix(std::uint32_t i) const;

    /// Enforces the type invariants: connectedness, graded commutativity on
    /// all stored pairs, associativity on all basis triples, a nonzero
    /// orientation when present.  Throws std::invalid_argument on violation.
    void validate() const;

    bool operator==(const GradedAlgebra& rhs) const;

private:
    const std::vector<Scalar>* table(std::uint32_t i, std::uint32_t j) const;
    std::vector<Scalar>& table_mut(std::uint32_t i, std::uint32_t j);

    Field field_;
    std::uint32_t m_;
    std::vector<std::uint32_t> dims_;
    std::map<std::pair<std::uint32_t, std::uint32_t>, std::vector<Scalar>> tables_;
    std::vector<Scalar> orientation_;
};

/// Outcome of the duality check: the first degree whose pairing
/// A^i x A^{m-i} -> k is not a nonsingular square pairing, if any.
struct PdReport {
    bool pass = false;
    /// Valid only when pass is false; degrees are scanned in increasing order.
    std::uint32_t failed_degree = 0;
    std::string reason;
};

/// Checks that every pairing matrix eps(a * b) is square and nonsingular.
/// Requires an orientation on A.
PdReport verify_pd(const GradedAlgebra& A);

/// Basis {f_w} of A^{m-i} with eps(e^i_u * f_w) = delta_{uw}, as coordinate
/// vectors.  Throws std::domain_error("singular pairing") when duality fails
/// in this degree.
std::vector<std::vector<Scalar>> dual_basis(const GradedAlgebra& A, std::uint32_t i);

/// The three-dimensional duality algebra of a trivector: degree-1 basis e_k,
/// degree-2 basis the duals e_k-dual, products e_i e_j = sum_k mu_ijk e_k-dual
/// and e_i e_j-dual = delta_ij omega, with eps(omega) = 1.
GradedAlgebra pd3_from_trivector(const Trivector& mu);

/// Extracts mu_ijk = eps(e_i e_j e_k) from an oriented algebra with m = 3.
/// Inverse of pd3_from_trivector on its image.
Trivector trivector_of(const GradedAlgebra& A);

/// Cohomology algebra of the d-sphere: dims 1, 0, ..., 0, 1 with top degree d
/// (d = 0 gives the ground field), oriented.
GradedAlgebra sphere_algebra(const Field& f, std::uint32_t d);

/// Cohomology algebra of the closed orientable genus-g surface: basis
/// a_1..a_g, b_1..b_g in degree 1 with a_i b_i = omega, oriented.
GradedAlgebra surface_algebra(const Field& f, std::uint32_t g);

/// Connected sum of two oriented duality algebras of the same top degree:
/// middle degrees direct-sum, both top classes identified with the new omega,
/// cross products of positive-degree classes vanish below the top.
GradedAlgebra connected_sum(const GradedAlgebra& A, const GradedAlgebra& B);

/// Graded tensor product with the Koszul sign rule
/// (b (x) c)(b' (x) c') = (-1)^{|c||b'|} bb' (x) cc'.  Oriented by the
/// product orientation when both factors are oriented.
GradedAlgebra tensor_product(const GradedAlgebra& B, const GradedAlgebra& C);

/// Wedge sum: positive degrees direct-sum, cross products vanish.  The result
/// carries no orientation.
GradedAlgebra wedge_sum(const GradedAlgebra& B, const GradedAlgebra& C);

/// Degree-preserving algebra morphism A -> B with per-degree matrices in the
/// column convention: maps[i] is dim_B(i) x dim_A(i) and acts by v -> F v.
struct AlgebraMorphism {
    GradedAlgebra domain;
    GradedAlgebra codomain;
    std::vector<ScalarMatrix> maps;

    std::vector<Scalar> apply(std::uint32_t i, const std::vector<Scalar>& v) const;
};

/// Validates shapes, unitality and multiplicativity on all basis pairs;
/// throws std::invalid_argument if phi is not a morphism.
AlgebraMorphism make_morphism(const GradedAlgebra& A, const GradedAlgebra& B,
                              std::vector<ScalarMatrix> maps);

AlgebraMorphism identity_morphism(const GradedAlgebra& A);

/// The inclusion of the first (second = true: the second) summand into
/// connected_sum(A, B).
AlgebraMorphism connected_sum_inclusion(const GradedAlgebra& A, const GradedAlgebra& B,
                                        bool second = false);

struct MorphismReport {
    /// Per-degree injectivity (full column rank), degrees 0..m.
    std::vector<bool> injective;
    bool all_injective = false;
    /// eps_B(phi(omega_A)) when both sides are oriented with one-dimensional
    /// top degree; the morphism has "nonzero degree" when this is nonzero.
    std::optional<Scalar> degree;
    /// Whether (all degrees injective) <=> (degree nonzero) on this instance;
    /// only set when degree is available.
    std::optional<bool> equivalence_holds;
};

MorphismReport morphism_check(const AlgebraMorphism& phi);

/// The degree-wise isomorphism (id, g, dual of g^{-1}, top identification)
/// between two oriented m = 3 duality algebras whose trivectors satisfy
/// mu_B = g . mu_A.  Throws std::invalid_argument("not equivalent under g")
/// when the trivector condition fails.
AlgebraMorphism iso_from_form_map(const GradedAlgebra& A, const GradedAlgebra& B,
                                  const ScalarMatrix& g);

/// The same multiplication tables over another field.  The source must be
/// rational (coefficients are reduced, throwing when a denominator vanishes)
/// unless the fields already match.
GradedAlgebra change_field(const GradedAlgebra& A, const Field& f);

/// Reads an algebra from its JSON description: top degree, dims, field,
/// sparse product tuples [i, u, j, v, w, c] with 1-based basis indices, and
/// an optional orientation covector.  Missing transposed tables are filled by
/// graded commutativity; the result is validated.
GradedAlgebra algebra_from_json_text(const std::string& text);

/// Serializes in the format accepted by algebra_from_json_text.
std::string algebra_to_json_text(const GradedAlgebra& A);

}  // namespace pdres
