#include "pdres/claims.hpp"

#include <algorithm>
#include <stdexcept>

namespace pdres {

namespace {

std::uint64_t checked_space(std::uint64_t q, std::size_t n, std::uint64_t budget,
                            const std::string& what) {
    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > budget / q)
            throw BudgetExceeded(what + ": q^n exceeds the budget of " + std::to_string(budget) +
                                 " points");
        space *= q;
    }
    return space;
}

PointLocus origin_locus(const Field& gf, std::size_t n) {
    PointLocus out(gf, n);
    out.set(0);
    return out;
}

std::vector<std::uint32_t> digits_of(std::uint64_t index, std::uint64_t q, std::size_t n) {
    std::vector<std::uint32_t> digits(n, 0);
    for (std::size_t s = n; s-- > 0;) {
        digits[s] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    return digits;
}

std::vector<Scalar> residue_table(const Field& gf) {
    std::vector<Scalar> table;
    table.reserve(gf.characteristic());
    for (std::uint32_t d = 0; d < gf.characteristic(); ++d)
        table.push_back(Scalar::from_int(gf, d));
    return table;
}

std::vector<Scalar> to_scalars(const std::vector<Scalar>& table,
                               const std::vector<std::uint32_t>& digits) {
    std::vector<Scalar> out;
    out.reserve(digits.size());
    for (std::uint32_t d : digits) out.push_back(table[d]);
    return out;
}

/// Twisted Betti vectors at every point of GF(q)^{dim A^1}, indexed by the
/// lexicographic point index.
std::vector<std::vector<std::uint32_t>> all_betti(const GradedAlgebra& A, std::uint64_t budget,
                                                  const std::string& what) {
    const Field& gf = A.field();
    const std::uint64_t q = gf.characteristic();
    const std::size_t n = A.dim(1);
    const std::uint64_t space = checked_space(q, n, budget, what);
    const auto table = residue_table(gf);
    std::vector<std::vector<std::uint32_t>> out;
    out.reserve(space);
    for (std::uint64_t idx = 0; idx < space; ++idx)
        out.push_back(twisted_betti(A, to_scalars(table, digits_of(idx, q, n))));
    return out;
}

std::vector<std::uint32_t> concat_digits(const std::vector<std::uint32_t>& a,
                                         const std::vector<std::uint32_t>& b) {
    std::vector<std::uint32_t> out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

void fail_at(ClaimReport& rep, const std::string& detail,
             const std::vector<std::uint32_t>& point) {
    rep.pass = false;
    rep.detail = detail;
    rep.counterexample = point;
}

std::string point_str(const std::vector<std::uint32_t>& digits) {
    std::string out = "(";
    for (std::size_t i = 0; i < digits.size(); ++i) {
        if (i) out += ",";
        out += std::to_string(digits[i]);
    }
    return out + ")";
}

}  // namespace

const std::vector<std::string>& claim_names() {
    static const std::vector<std::string> names = {
        "duality",     "degree_table", "parity",        "vanish",
        "decomp",      "corank_full",  "top",           "connsum",
        "tensor",      "wedge",        "nullity_bound", "functoriality",
        "isotropic_union"};
    return names;
}

// ---------------------------------------------------------------------------
// Profile-level checkers

ClaimReport check_duality(const ResonanceProfile& P) {
    ClaimReport rep{"duality", true, "", std::nullopt};
    const std::uint32_t m = static_cast<std::uint32_t>(P.dims.size()) - 1;
    for (std::uint32_t i = 0; i <= m; ++i) {
        const int maxk = static_cast<int>(std::max(P.dims[i], P.dims[m - i]));
        for (int k = 1; k <= maxk; ++k) {
            const PointLocus L = P.locus(i, k);
            const PointLocus R = P.locus(m - i, k);
            if (auto d = L.first_difference(R)) {
                fail_at(rep,
                        "loci of degrees " + std::to_string(i) + " and " + std::to_string(m - i) +
                            " differ at depth " + std::to_string(k) + ", point " +
                            point_str(L.point_at(*d)),
                        L.point_at(*d));
                return rep;
            }
        }
    }
    rep.detail = "complementary-degree loci agree at every depth";
    return rep;
}

ClaimReport check_degree_table(const ResonanceProfile& P) {
    if (P.dims.size() != 4)
        throw std::invalid_argument("degree table: top degree 3 required");
    ClaimReport rep{"degree_table", true, "", std::nullopt};
    const int maxk = static_cast<int>(std::max(P.dims[1], P.dims[2]));
    for (int k = 1; k <= maxk; ++k) {
        const PointLocus L1 = P.locus(1, k);
        const PointLocus L2 = P.locus(2, k);
        if (auto d = L1.first_difference(L2)) {
            fail_at(rep,
                    "degree-1 and degree-2 loci differ at depth " + std::to_string(k) +
                        ", point " + point_str(L1.point_at(*d)),
                    L1.point_at(*d));
            return rep;
        }
    }
    rep.detail = "degree-2 loci equal degree-1 loci at every depth";
    return rep;
}

ClaimReport check_parity(const Trivector& mu, const ResonanceProfile& P, std::uint64_t budget) {
    if (!(mu.field() == P.gf) || mu.n() != P.n)
        throw std::invalid_argument("parity: form and profile do not match");
    ClaimReport rep{"parity", true, "", std::nullopt};
    const std::size_t n = mu.n();
    for (int d = 0; d < static_cast<int>(n); ++d) {
        const PointLocus V = locus_of_ideal(pfaffian_loci(mu, d), P.gf, n, budget);
        const PointLocus R = P.locus(1, d);
        if (auto w = R.first_difference(V)) {
            fail_at(rep,
                    "depth " + std::to_string(d) + ": sweep locus differs from the Pfaffian locus "
                        "at point " + point_str(R.point_at(*w)),
                    R.point_at(*w));
            return rep;
        }
    }
    rep.detail = "every depth locus matches its parity-matched Pfaffian locus";
    return rep;
}

ClaimReport check_vanish(const Trivector& mu, const ResonanceProfile& P) {
    const std::size_t n = mu.n();
    if (n < 3) throw std::invalid_argument("vanish: need n >= 3");
    if (!(mu.field() == P.gf) || n != P.n)
        throw std::invalid_argument("vanish: form and profile do not match");
    ClaimReport rep{"vanish", true, "", std::nullopt};
    const PointLocus origin = origin_locus(P.gf, n);
    for (int k = static_cast<int>(n) - 2; k <= static_cast<int>(n); ++k) {
        const PointLocus R = P.locus(1, k);
        if (auto w = R.first_difference(origin)) {
            std::string detail = "depth " + std::to_string(k) + " locus is not just the origin";
            const std::size_t corank = mu.form_rank().second;
            if (corank > 0)
                detail += " (the form is not irreducible: corank " + std::to_string(corank) + ")";
            fail_at(rep, detail, R.point_at(*w));
            return rep;
        }
    }
    rep.detail = "depths n-2, n-1, n all cut out exactly the origin";
    return rep;
}

ClaimReport check_top(const Trivector& mu, const ResonanceProfile& P, std::uint64_t budget) {
    const std::size_t n = mu.n();
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("top: odd n >= 3 required");
    if (!(mu.field() == P.gf) || n != P.n)
        throw std::invalid_argument("top: form and profile do not match");
    ClaimReport rep{"top", true, "", std::nullopt};
    const PointLocus R1 = P.locus(1, 1);

    PointLocus expected(P.gf, n);
    std::string branch;
    if (n == 3) {
        expected = origin_locus(P.gf, n);
        branch = "n = 3: depth-1 locus is {0}";
    } else {
        const BpGenericity bp = is_bp_generic(mu);
        if (bp.generic) {
            expected = locus_of_ideal({bp.pf}, P.gf, n, budget);
            branch = "pfaffian is nonzero: depth-1 locus is its vanishing set";
        } else {
            expected = PointLocus::full(P.gf, n);
            branch = "pfaffian vanishes identically: depth-1 locus is everything";
        }
    }
    if (auto w = R1.first_difference(expected)) {
        fail_at(rep, branch + "; mismatch at point " + point_str(R1.point_at(*w)),
                R1.point_at(*w));
        return rep;
    }
    rep.detail = branch;
    return rep;
}

ClaimReport check_corank_full(const Trivector& mu, const ResonanceProfile& P) {
    if (!(mu.field() == P.gf) || mu.n() != P.n)
        throw std::invalid_argument("corank full: form and profile do not match");
    ClaimReport rep{"corank_full", true, "", std::nullopt};
    const std::size_t corank = mu.form_rank().second;
    if (corank == 0) {
        rep.detail = "form has full rank: no depths below the corank";
        return rep;
    }
    const PointLocus full = PointLocus::full(P.gf, P.n);
    for (int k = 1; k < static_cast<int>(corank); ++k) {
        const PointLocus R = P.locus(1, k);
        if (auto w = R.first_difference(full)) {
            fail_at(rep,
                    "depth " + std::to_string(k) + " < corank " + std::to_string(corank) +
                        " but the locus misses " + point_str(R.point_at(*w)),
                    R.point_at(*w));
            return rep;
        }
    }
    rep.detail = "every depth below corank " + std::to_string(corank) + " is the full space";
    return rep;
}

ClaimReport check_nullity_bound(const Trivector& mu, const ResonanceProfile& P,
                                std::uint64_t budget) {
    if (!(mu.field() == P.gf) || mu.n() != P.n)
        throw std::invalid_argument("nullity bound: form and profile do not match");
    ClaimReport rep{"nullity_bound", true, "", std::nullopt};
    const std::size_t n = mu.n();
    if (n == 0) {
        rep.detail = "no degree-one directions";
        return rep;
    }
    const NullityResult nr = nullity(mu, n, budget);
    const std::string nu_note = "nullity " + std::to_string(nr.nu) +
                                (nr.exact ? "" : " (lower bound: search budget exhausted)");
    if (nr.nu == 0) {
        rep.detail = nu_note;
        return rep;
    }
    const PointLocus R = P.locus(1, static_cast<int>(nr.nu) - 1);
    const std::uint64_t q = P.gf.characteristic();
    const std::uint64_t combos = checked_space(q, nr.nu, budget, "nullity bound");
    std::vector<std::vector<std::uint32_t>> witness_digits;
    for (const auto& row : nr.witness) {
        std::vector<std::uint32_t> d;
        d.reserve(n);
        for (const Scalar& c : row) d.push_back(c.residue());
        witness_digits.push_back(std::move(d));
    }
    for (std::uint64_t combo = 0; combo < combos; ++combo) {
        const auto lambda = digits_of(combo, q, nr.nu);
        std::vector<std::uint32_t> pt(n, 0);
        for (std::size_t i = 0; i < nr.nu; ++i)
            for (std::size_t s = 0; s < n; ++s)
                pt[s] = static_cast<std::uint32_t>((pt[s] + static_cast<std::uint64_t>(lambda[i]) *
                                                                witness_digits[i][s]) %
                                                   q);
        if (!R.test(R.index_of(pt))) {
            fail_at(rep,
                    nu_note + "; witness span leaves the depth-" + std::to_string(nr.nu - 1) +
                        " locus at " + point_str(pt),
                    pt);
            return rep;
        }
    }
    rep.detail = nu_note + "; the span of the witness subspace lies in the depth-" +
                 std::to_string(nr.nu - 1) + " locus";
    return rep;
}

ClaimReport check_isotropic_union(const GradedAlgebra& A, const ResonanceProfile& P,
                                  std::uint64_t budget) {
    if (!(A.field() == P.gf) || A.dim(1) != P.n)
        throw std::invalid_argument("isotropic union: algebra and profile do not match");
    ClaimReport rep{"isotropic_union", true, "", std::nullopt};
    const PointLocus U = union_singular_planes(A, budget);
    const PointLocus R = P.locus(1, 1);
    if (auto w = U.first_difference(R)) {
        const auto pt = U.point_at(*w);
        fail_at(rep,
                std::string(U.test(*w) ? "a plane point is missing from the depth-1 locus"
                                       : "a depth-1 point lies on no isotropic plane") +
                    " at " + point_str(pt),
                pt);
        return rep;
    }
    rep.detail = "union of isotropic planes equals the depth-1 locus (" +
                 std::to_string(R.point_count()) + " points)";
    return rep;
}

// ---------------------------------------------------------------------------
// Self-contained claims

ClaimReport claim_duality(const GradedAlgebra& A, std::uint64_t budget, unsigned workers) {
    const PdReport pd = verify_pd(A);
    if (!pd.pass) throw std::invalid_argument("duality: " + pd.reason);
    return check_duality(resonance_points(A, budget, workers));
}

ClaimReport claim_degree_table(const GradedAlgebra& A, std::uint64_t budget, unsigned workers) {
    if (A.top_degree() != 3)
        throw std::invalid_argument("degree table: top degree 3 required");
    return check_degree_table(resonance_points(A, budget, workers));
}

ClaimReport claim_parity(const Trivector& mu, std::uint64_t budget, unsigned workers) {
    const ResonanceProfile P = resonance_points(pd3_from_trivector(mu), budget, workers);
    return check_parity(mu, P, budget);
}

ClaimReport claim_vanish(const Trivector& mu, std::uint64_t budget, unsigned workers) {
    const ResonanceProfile P = resonance_points(pd3_from_trivector(mu), budget, workers);
    return check_vanish(mu, P);
}

ClaimReport claim_top(const Trivector& mu, std::uint64_t budget, unsigned workers) {
    const ResonanceProfile P = resonance_points(pd3_from_trivector(mu), budget, workers);
    return check_top(mu, P, budget);
}

ClaimReport claim_corank_full(const Trivector& mu, std::uint64_t budget, unsigned workers) {
    const ResonanceProfile P = resonance_points(pd3_from_trivector(mu), budget, workers);
    return check_corank_full(mu, P);
}

ClaimReport claim_nullity_bound(const Trivector& mu, std::uint64_t budget, unsigned workers) {
    const ResonanceProfile P = resonance_points(pd3_from_trivector(mu), budget, workers);
    return check_nullity_bound(mu, P, budget);
}

ClaimReport claim_isotropic_union(const GradedAlgebra& A, std::uint64_t budget,
                                  unsigned workers) {
    return check_isotropic_union(A, resonance_points(A, budget, workers), budget);
}

ClaimReport claim_decomp(const Trivector& mu, std::uint64_t budget, unsigned workers) {
    const Field& f = mu.field();
    if (f.characteristic() == 0)
        throw std::invalid_argument("decomp: finite field required");
    ClaimReport rep{"decomp", true, "", std::nullopt};
    const RankSplit split = split_by_rank(mu);
    const std::size_t n = mu.n();
    const std::size_t c = split.corank;

    const Trivector muT = mu.transformed(split.g);
    const ResonanceProfile PT = resonance_points(pd3_from_trivector(muT), budget, workers);
    const ResonanceProfile PB =
        resonance_points(pd3_from_trivector(split.reduced), budget, workers);
    const PointLocus full_radical = PointLocus::full(f, c);

    const std::string coords =
        "rank " + std::to_string(split.rank) + ", corank " + std::to_string(c) +
        " (checked in split coordinates)";
    for (int k = 1; k <= static_cast<int>(n); ++k) {
        PointLocus expected(f, n);
        if (k == static_cast<int>(n)) {
            expected = origin_locus(f, n);
        } else {
            const int t = k - static_cast<int>(c);
            const PointLocus part =
                t <= 0 ? PointLocus::full(f, split.rank) : PB.locus(1, t);
            expected = PointLocus::product(part, full_radical);
        }
        const PointLocus R = PT.locus(1, k);
        if (auto w = R.first_difference(expected)) {
            fail_at(rep,
                    coords + "; depth " + std::to_string(k) +
                        " locus differs from the product form at " + point_str(R.point_at(*w)),
                    R.point_at(*w));
            return rep;
        }
    }
    rep.detail = coords + "; every depth locus is the shifted product with the radical";
    return rep;
}

ClaimReport claim_connsum(const GradedAlgebra& B, const GradedAlgebra& C, std::uint64_t budget) {
    const GradedAlgebra X = connected_sum(B, C);
    const Field& f = X.field();
    if (f.characteristic() == 0)
        throw std::invalid_argument("connsum claim: finite field required");
    ClaimReport rep{"connsum", true, "", std::nullopt};
    const std::uint64_t q = f.characteristic();
    const std::uint32_t m = X.top_degree();
    const std::size_t nB = B.dim(1), nC = C.dim(1);
    checked_space(q, nB + nC, budget, "connsum claim");

    const auto bettiB = all_betti(B, budget, "connsum claim");
    const auto bettiC = all_betti(C, budget, "connsum claim");
    const auto table = residue_table(f);
    for (std::uint64_t ib = 0; ib < bettiB.size(); ++ib) {
        const auto db = digits_of(ib, q, nB);
        for (std::uint64_t ic = 0; ic < bettiC.size(); ++ic) {
            const auto pt = concat_digits(db, digits_of(ic, q, nC));
            const auto bx = twisted_betti(X, to_scalars(table, pt));
            const bool zero = ib == 0 && ic == 0;
            const int cross = (ib != 0 && ic != 0) ? 1 : 0;
            for (std::uint32_t i = 0; i <= m; ++i) {
                int expected;
                if (i == 0 || i == m) {
                    expected = zero ? 1 : 0;
                } else {
                    expected = static_cast<int>(bettiB[ib][i]) + static_cast<int>(bettiC[ic][i]);
                    if (i == 1) expected += cross;
                    if (i == m - 1) expected += cross;
                }
                if (static_cast<int>(bx[i]) != expected) {
                    fail_at(rep,
                            "degree " + std::to_string(i) + " at " + point_str(pt) + ": got " +
                                std::to_string(bx[i]) + ", expected " + std::to_string(expected),
                            pt);
                    return rep;
                }
            }
        }
    }
    rep.detail = "twisted Betti numbers are additive with the mixed-point corrections in "
                 "degrees 1 and " +
                 std::to_string(m - 1);
    return rep;
}

ClaimReport claim_tensor(const GradedAlgebra& B, const GradedAlgebra& C, std::uint64_t budget) {
    const GradedAlgebra X = tensor_product(B, C);
    const Field& f = X.field();
    if (f.characteristic() == 0)
        throw std::invalid_argument("tensor claim: finite field required");
    ClaimReport rep{"tensor", true, "", std::nullopt};
    const std::uint64_t q = f.characteristic();
    const std::uint32_t m = X.top_degree();
    const std::size_t nB = B.dim(1), nC = C.dim(1);
    checked_space(q, nB + nC, budget, "tensor claim");

    const auto bettiB = all_betti(B, budget, "tensor claim");
    const auto bettiC = all_betti(C, budget, "tensor claim");
    const auto table = residue_table(f);
    for (std::uint64_t ib = 0; ib < bettiB.size(); ++ib) {
        const auto db = digits_of(ib, q, nB);
        for (std::uint64_t ic = 0; ic < bettiC.size(); ++ic) {
            const auto pt = concat_digits(db, digits_of(ic, q, nC));
            const auto bx = twisted_betti(X, to_scalars(table, pt));
            for (std::uint32_t i = 0; i <= m; ++i) {
                std::uint64_t expected = 0;
                for (std::uint32_t p = 0; p <= i; ++p) {
                    const std::uint32_t r = i - p;
                    if (p < bettiB[ib].size() && r < bettiC[ic].size())
                        expected += static_cast<std::uint64_t>(bettiB[ib][p]) * bettiC[ic][r];
                }
                if (bx[i] != expected) {
                    fail_at(rep,
                            "degree " + std::to_string(i) + " at " + point_str(pt) + ": got " +
                                std::to_string(bx[i]) + ", expected " + std::to_string(expected),
                            pt);
                    return rep;
                }
            }
        }
    }
    rep.detail = "twisted Betti numbers satisfy the Kuenneth convolution at every point";
    return rep;
}

ClaimReport claim_wedge(const GradedAlgebra& B, const GradedAlgebra& C, std::uint64_t budget) {
    const GradedAlgebra X = wedge_sum(B, C);
    const Field& f = X.field();
    if (f.characteristic() == 0)
        throw std::invalid_argument("wedge claim: finite field required");
    ClaimReport rep{"wedge", true, "", std::nullopt};
    const std::uint64_t q = f.characteristic();
    const std::uint32_t m = X.top_degree();
    const std::size_t nB = B.dim(1), nC = C.dim(1);
    checked_space(q, nB + nC, budget, "wedge claim");

    const auto bettiB = all_betti(B, budget, "wedge claim");
    const auto bettiC = all_betti(C, budget, "wedge claim");
    auto betti_of = [](const std::vector<std::uint32_t>& b, std::uint32_t i) -> int {
        return i < b.size() ? static_cast<int>(b[i]) : 0;
    };
    const auto table = residue_table(f);
    for (std::uint64_t ib = 0; ib < bettiB.size(); ++ib) {
        const auto db = digits_of(ib, q, nB);
        for (std::uint64_t ic = 0; ic < bettiC.size(); ++ic) {
            const auto pt = concat_digits(db, digits_of(ic, q, nC));
            const auto bx = twisted_betti(X, to_scalars(table, pt));
            for (std::uint32_t i = 0; i <= m; ++i) {
                int expected;
                if (i == 0) {
                    expected = (ib == 0 && ic == 0) ? 1 : 0;
                } else {
                    expected = betti_of(bettiB[ib], i) + betti_of(bettiC[ic], i);
                    if (i == 1 && ib != 0 && ic != 0) expected += 1;
                }
                if (static_cast<int>(bx[i]) != expected) {
                    fail_at(rep,
                            "degree " + std::to_string(i) + " at " + point_str(pt) + ": got " +
                                std::to_string(bx[i]) + ", expected " + std::to_string(expected),
                            pt);
                    return rep;
                }
            }
        }
    }
    rep.detail = "twisted Betti numbers are additive in degrees >= 2 with the degree-1 "
                 "mixed-point correction";
    return rep;
}

ClaimReport claim_functoriality(const AlgebraMorphism& phi, std::uint64_t budget) {
    const GradedAlgebra& A = phi.domain;
    const GradedAlgebra& B = phi.codomain;
    const Field& f = A.field();
    if (f.characteristic() == 0)
        throw std::invalid_argument("functoriality claim: finite field required");
    if (A.top_degree() != B.top_degree())
        throw std::invalid_argument("functoriality claim: top degrees differ");
    ClaimReport rep{"functoriality", true, "", std::nullopt};
    const std::uint32_t m = A.top_degree();

    std::vector<bool> inj(m + 1), surj(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i) {
        const std::size_t r = phi.maps[i].rank();
        inj[i] = r == A.dim(i);
        surj[i] = r == B.dim(i);
    }
    std::vector<std::uint32_t> degrees;
    if (inj[1])
        for (std::uint32_t i = 1; i <= m; ++i)
            if (inj[i] && surj[i - 1]) degrees.push_back(i);
    if (degrees.empty()) {
        rep.pass = false;
        rep.detail = "the comparison hypotheses (injective in the degree, surjective one "
                     "below, injective in degree 1) hold in no degree";
        return rep;
    }

    const std::uint64_t q = f.characteristic();
    const std::size_t nA = A.dim(1);
    const std::uint64_t space = checked_space(q, nA, budget, "functoriality claim");
    const auto table = residue_table(f);
    std::string checked;
    for (std::uint32_t i : degrees) checked += (checked.empty() ? "" : ", ") + std::to_string(i);
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        const auto da = digits_of(idx, q, nA);
        const auto a = to_scalars(table, da);
        const auto ba = twisted_betti(A, a);
        const auto bb = twisted_betti(B, phi.apply(1, a));
        for (std::uint32_t i : degrees)
            if (bb[i] < ba[i]) {
                fail_at(rep,
                        "degree " + std::to_string(i) + " at " + point_str(da) +
                            ": codomain Betti " + std::to_string(bb[i]) +
                            " < domain Betti " + std::to_string(ba[i]),
                        da);
                return rep;
            }
    }
    rep.detail = "pointwise cohomology comparison holds in degrees " + checked;
    return rep;
}

ClaimReport claim_by_name(const std::string& name, const GradedAlgebra& A, std::uint64_t budget,
                          unsigned workers) {
    if (name == "duality") return claim_duality(A, budget, workers);
    if (name == "degree_table") return claim_degree_table(A, budget, workers);
    if (name == "isotropic_union") return claim_isotropic_union(A, budget, workers);
    if (name == "parity" || name == "vanish" || name == "top" || name == "corank_full" ||
        name == "nullity_bound" || name == "decomp") {
        if (A.field().characteristic() == 0)
            throw std::invalid_argument("claim '" + name + "': finite field required");
        const Trivector mu = trivector_of(A);
        if (name == "parity") return claim_parity(mu, budget, workers);
        if (name == "vanish") return claim_vanish(mu, budget, workers);
        if (name == "top") return claim_top(mu, budget, workers);
        if (name == "corank_full") return claim_corank_full(mu, budget, workers);
        if (name == "nullity_bound") return claim_nullity_bound(mu, budget, workers);
        return claim_decomp(mu, budget, workers);
    }
    if (name == "connsum" || name == "tensor" || name == "wedge")
        throw std::invalid_argument("claim '" + name + "' needs two inputs");
    if (name == "functoriality")
        throw std::invalid_argument("claim 'functoriality' needs two inputs (it checks the "
                                    "inclusion into their connected sum)");
    throw std::invalid_argument("unknown claim '" + name + "'");
}

}  // namespace pdres
