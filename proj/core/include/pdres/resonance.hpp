#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdres/algebra.hpp"
#include "pdres/budget.hpp"
#include "pdres/forms.hpp"
#include "pdres/matlin.hpp"
#include "pdres/polyring.hpp"
#include "pdres/scalars.hpp"

namespace pdres {

/// A subset of GF(q)^n stored as a bitset over the lexicographic point index
/// (x1 is the most significant digit; index 0 is the origin).
class PointLocus {
public:
    PointLocus(const Field& gf, std::size_t n);
    static PointLocus full(const Field& gf, std::size_t n);

    const Field& field() const { return gf_; }
    std::size_t n() const { return n_; }
    /// q^n.
    std::uint64_t space_size() const { return bits_.size(); }

    bool test(std::uint64_t index) const { return bits_[index]; }
    void set(std::uint64_t index) { bits_[index] = true; }

    std::uint64_t point_count() const;
    bool operator==(const PointLocus& rhs) const;
    bool operator!=(const PointLocus& rhs) const { return !(*this == rhs); }
    bool is_subset_of(const PointLocus& rhs) const;
    /// Smallest index where the two sets differ.
    std::optional<std::uint64_t> first_difference(const PointLocus& rhs) const;

    PointLocus unioned(const PointLocus& rhs) const;
    PointLocus intersected(const PointLocus& rhs) const;
    /// Cartesian product under coordinate concatenation (left block first).
    static PointLocus product(const PointLocus& left, const PointLocus& right);

    /// Closure under nonzero scalar multiples (the defining invariant of a
    /// resonance locus).
    bool is_homogeneous_set() const;

    std::uint64_t index_of(const std::vector<std::uint32_t>& digits) const;
    std::vector<std::uint32_t> point_at(std::uint64_t index) const;
    /// The first `limit` member points in index order, as residue digits.
    std::vector<std::vector<std::uint32_t>> sample_points(std::size_t limit) const;

private:
    Field gf_;
    std::size_t n_;
    std::vector<bool> bits_;
};

/// Pointwise resonance data of an algebra over a finite field: one locus per
/// (degree i, depth 1 <= k <= b_i).
struct ResonanceProfile {
    Field gf;
    /// Ordinary Betti numbers b_0..b_m (the dims of the algebra).
    std::vector<std::uint32_t> dims;
    /// Ambient rank: n = b_1.
    std::size_t n = 0;
    /// loci[i][k-1] = R^i_k for k = 1..dims[i].
    std::vector<std::vector<PointLocus>> loci;

    /// R^i_k with the depth conventions: k <= 0 gives the full space and
    /// k > b_i the empty set.
    PointLocus locus(std::uint32_t i, int k) const;
    const PointLocus& locus_ref(std::uint32_t i, std::uint32_t k) const;
};

/// The multiplication-by-a Betti numbers b_i(A, a) for all degrees, computed
/// from the algebra's structure constants (exact, any field).
std::vector<std::uint32_t> twisted_betti(const GradedAlgebra& A,
                                         const std::vector<Scalar>& a);

/// Exhaustive sweep of GF(q)^{b_1}: twisted Betti numbers at every point.
/// Throws BudgetExceeded when q^{b_1} > budget; workers > 1 partitions the
/// sweep across threads.
ResonanceProfile resonance_points(const GradedAlgebra& A,
                                  std::uint64_t budget = kDefaultBudget,
                                  unsigned workers = 1);

/// The linear-form complex of an algebra: differentials
/// delta[i] : A^i (x) S -> A^{i+1} (x) S with
/// delta[i][u][w] = sum_j c^{(1,i)}(j, u)[w] x_j (rows indexed by the domain
/// basis).  Composition delta[i+1] after delta[i] vanishes; this is checked
/// at construction.
struct BGGComplex {
    Field field;
    std::size_t n = 0;
    std::vector<std::uint32_t> dims;
    std::vector<PolyMatrix> delta;  // delta[i] is dims[i] x dims[i+1], i = 0..m-1

    /// Twisted Betti numbers via evaluation of the symbolic differentials --
    /// an independent code path from twisted_betti.
    std::vector<std::uint32_t> betti_at(const std::vector<Scalar>& point) const;
};

/// Builds the complex from the multiplication tables.  Requires b_1 >= 1.
/// For an algebra in the trivector bases (m = 3, identity pairings) the
/// middle differential is the alternating contraction matrix; this is
/// asserted.
BGGComplex build_bgg(const GradedAlgebra& A);

/// Generators of the depth-(i,k) determinantal ideal:
///   - degree i = 1, 0 <= k < n: the (n-k)-minors of the alternating matrix;
///   - otherwise: all products I_s(delta^{i-1}) * I_t(delta^i) with
///     s + t = b_i - k + 1.
/// Depth k < 0 (and every case whose generators are identically zero) yields
/// the empty list = the zero ideal, cutting out the full space; k > b_i
/// yields the unit ideal {1}.
std::vector<Polynomial> resonance_ideal(const GradedAlgebra& A, std::uint32_t i, int k);

/// Common vanishing locus of a list of polynomials over GF(q)^n by direct
/// evaluation (early exit per point; projective representatives when every
/// generator is homogeneous).  The generators' field must equal gf.
PointLocus locus_of_ideal(const std::vector<Polynomial>& gens, const Field& gf,
                          std::size_t n, std::uint64_t budget = kDefaultBudget);

/// Principal-Pfaffian generators of the depth-d locus of a trivector's
/// contraction matrix, with the size chosen by the parity of n:
/// size = n - 2*floor(d/2) for even n, size = n - 2*ceil(d/2) + 1 for odd n.
/// Valid for 0 <= d <= n-1.
std::vector<Polynomial> pfaffian_loci(const Trivector& mu, int depth);

struct TuraevResult {
    /// The common quotient det(theta(i;j)) / ((-1)^{i+j} x_i x_j); zero when
    /// n is even.
    Polynomial det;
    /// For odd n: the common quotient pf(theta(i;i)) / ((-1)^{i+1} x_i), of
    /// degree (n-3)/2, with det = pf^2.
    std::optional<Polynomial> pf;
};

/// Extracts the reduced determinant and Pfaffian of the contraction matrix
/// and asserts consistency across every row/column pair; an inconsistency
/// throws std::logic_error (it would contradict the structure of the
/// contraction matrix).  Requires n >= 3.
TuraevResult turaev_det_pf(const Trivector& mu);

/// Union of all planes U = <a, b> in GF(q)^{b_1} whose elements multiply to
/// zero in A^2, plus the origin when b_1 >= 1.  Enumerates planes via their
/// canonical echelon bases; each plane costs one budget unit.
PointLocus union_singular_planes(const GradedAlgebra& A,
                                 std::uint64_t budget = kDefaultBudget);

/// The induced map of linear-form complexes along an injective morphism, with
/// an honest commutation report: square_commutes[i] records whether
/// substitute(delta_A[i]) . phi_{i+1} equals phi_i . delta_B[i] over the
/// codomain ring.  The squares commute in every degree where the products of
/// complement directions against the image vanish; the report lists the
/// residual matrices of any failing squares.
struct ChainMapReport {
    /// Variable substitution x_j -> sum_t psi1[t][j] y_t applied to domain
    /// polynomials.
    ScalarMatrix psi1;
    std::vector<bool> square_commutes;
    /// residuals[i] = substitute(delta_A[i]) * phi_{i+1}^T - phi_i^T * delta_B[i].
    std::vector<PolyMatrix> residuals;
    bool all_commute = false;
};

/// Requires every phi^i injective and psi1 a right inverse of the transpose
/// of phi^1 (throws std::invalid_argument otherwise).
ChainMapReport bgg_chain_map(const AlgebraMorphism& phi, const ScalarMatrix& psi1);

}  // namespace pdres
