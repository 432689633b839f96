#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pdres/algebra.hpp"
#include "pdres/budget.hpp"
#include "pdres/forms.hpp"
#include "pdres/resonance.hpp"

namespace pdres {

/// Outcome of one structural check.  Mathematical failure is reported, not
/// thrown; violated shape preconditions throw std::invalid_argument.
struct ClaimReport {
    std::string claim;
    bool pass = false;
    std::string detail;
    /// A witness point (residue digits) where the claimed identity fails.
    std::optional<std::vector<std::uint32_t>> counterexample;
};

/// All claim names accepted by claim_by_name, in canonical order.
const std::vector<std::string>& claim_names();

// ---------------------------------------------------------------------------
// Profile-level checkers.  These take precomputed sweep data so that several
// claims can share one sweep; the claim_* wrappers below compute what they
// need themselves.

/// R^i_k == R^{m-i}_k for every degree pair and depth.
ClaimReport check_duality(const ResonanceProfile& P);

/// R^2_k == R^1_k for every depth (top degree 3 required).
ClaimReport check_degree_table(const ResonanceProfile& P);

/// Every depth locus R^1_d (0 <= d < n) equals the vanishing locus of the
/// parity-matched principal Pfaffians of the contraction matrix.
ClaimReport check_parity(const Trivector& mu, const ResonanceProfile& P,
                         std::uint64_t budget = kDefaultBudget);

/// R^1_{n-2} = R^1_{n-1} = R^1_n = {0} (n >= 3).
ClaimReport check_vanish(const Trivector& mu, const ResonanceProfile& P);

/// The odd-n trichotomy for R^1_1: {0} when n = 3; V(Pf) when Pf != 0;
/// everything otherwise.
ClaimReport check_top(const Trivector& mu, const ResonanceProfile& P,
                      std::uint64_t budget = kDefaultBudget);

/// R^1_k is the full space for every depth below the corank.
ClaimReport check_corank_full(const Trivector& mu, const ResonanceProfile& P);

/// The span of a maximal 2-singular subspace lies in R^1_{nu-1}.
ClaimReport check_nullity_bound(const Trivector& mu, const ResonanceProfile& P,
                                std::uint64_t budget = kDefaultBudget);

/// union_singular_planes(A) == R^1_1.
ClaimReport check_isotropic_union(const GradedAlgebra& A, const ResonanceProfile& P,
                                  std::uint64_t budget = kDefaultBudget);

// ---------------------------------------------------------------------------
// Self-contained claims.

ClaimReport claim_duality(const GradedAlgebra& A, std::uint64_t budget = kDefaultBudget,
                          unsigned workers = 1);
ClaimReport claim_degree_table(const GradedAlgebra& A, std::uint64_t budget = kDefaultBudget,
                               unsigned workers = 1);
ClaimReport claim_parity(const Trivector& mu, std::uint64_t budget = kDefaultBudget,
                         unsigned workers = 1);
ClaimReport claim_vanish(const Trivector& mu, std::uint64_t budget = kDefaultBudget,
                         unsigned workers = 1);
ClaimReport claim_top(const Trivector& mu, std::uint64_t budget = kDefaultBudget,
                      unsigned workers = 1);
ClaimReport claim_corank_full(const Trivector& mu, std::uint64_t budget = kDefaultBudget,
                              unsigned workers = 1);
ClaimReport claim_nullity_bound(const Trivector& mu, std::uint64_t budget = kDefaultBudget,
                                unsigned workers = 1);
ClaimReport claim_isotropic_union(const GradedAlgebra& A, std::uint64_t budget = kDefaultBudget,
                                  unsigned workers = 1);

/// Splits off the radical and checks, in split coordinates, that every depth
/// locus of the full form is the product of a shifted depth locus of the
/// irreducible part with the radical directions.
ClaimReport claim_decomp(const Trivector& mu, std::uint64_t budget = kDefaultBudget,
                         unsigned workers = 1);

/// Pointwise additivity of twisted Betti numbers for a connected sum, with
/// the rank-one corrections in degrees 1 and m-1 at mixed points.
ClaimReport claim_connsum(const GradedAlgebra& B, const GradedAlgebra& C,
                          std::uint64_t budget = kDefaultBudget);

/// Pointwise Kuenneth convolution of twisted Betti numbers for a tensor
/// product.
ClaimReport claim_tensor(const GradedAlgebra& B, const GradedAlgebra& C,
                         std::uint64_t budget = kDefaultBudget);

/// Pointwise twisted Betti numbers of a wedge sum: additive in degrees >= 2,
/// with the mixed-point correction in degree 1.
ClaimReport claim_wedge(const GradedAlgebra& B, const GradedAlgebra& C,
                        std::uint64_t budget = kDefaultBudget);

/// In every degree i >= 1 with phi^i injective, phi^{i-1} surjective and
/// phi^1 injective: b_i(B, phi(a)) >= b_i(A, a) at every point a.
ClaimReport claim_functoriality(const AlgebraMorphism& phi,
                                std::uint64_t budget = kDefaultBudget);

/// Dispatch by claim name for single-input claims (everything except
/// connsum/tensor/wedge/functoriality, which need their own input shapes).
/// The algebra must be over a finite field; trivector-based claims extract
/// the form from the algebra.
ClaimReport claim_by_name(const std::string& name, const GradedAlgebra& A,
                          std::uint64_t budget = kDefaultBudget, unsigned workers = 1);

}  // namespace pdres
