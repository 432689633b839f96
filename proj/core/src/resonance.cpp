#include "pdres/resonance.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <thread>
#include <utility>

namespace pdres {

namespace {

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t out = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) out = out * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return out;
}

/// In-place Gaussian elimination rank over GF(p); entries must already be
/// reduced mod p.  Row-major dense layout.
std::size_t gf_rank_inplace(std::vector<std::uint64_t>& a, std::size_t rows, std::size_t cols,
                            std::uint64_t p) {
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t i = r; i < rows; ++i) {
            if (a[i * cols + c] != 0) {
                piv = i;
                break;
            }
        }
        if (piv == rows) continue;
        if (piv != r) {
            for (std::size_t j = c; j < cols; ++j) std::swap(a[piv * cols + j], a[r * cols + j]);
        }
        const std::uint64_t inv = pow_mod(a[r * cols + c], p - 2, p);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t lead = a[i * cols + c];
            if (lead == 0) continue;
            const std::uint64_t factor = lead * inv % p;
            a[i * cols + c] = 0;
            for (std::size_t j = c + 1; j < cols; ++j) {
                const std::uint64_t sub = factor * a[r * cols + j] % p;
                std::uint64_t& cell = a[i * cols + j];
                cell = (cell + p - sub) % p;
            }
        }
        ++r;
    }
    return r;
}

std::vector<Scalar> basis_vector(const Field& f, std::size_t dim, std::size_t index) {
    std::vector<Scalar> v(dim, Scalar::zero(f));
    v[index] = Scalar::one(f);
    return v;
}

/// q^n with an overflow guard.
std::uint64_t checked_power(std::uint64_t q, std::size_t n) {
    std::uint64_t out = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (out > std::numeric_limits<std::uint64_t>::max() / q)
            throw std::invalid_argument("point space: size overflows");
        out *= q;
    }
    return out;
}

/// Positional weights pw[s] = q^{n-1-s} for the big-endian point index.
std::vector<std::uint64_t> index_weights(std::uint64_t q, std::size_t n) {
    std::vector<std::uint64_t> pw(n, 1);
    for (std::size_t s = n; s-- > 0;) {
        if (s + 1 < n) pw[s] = pw[s + 1] * q;
    }
    return pw;
}

PolyMatrix scalar_to_poly(const ScalarMatrix& m, std::size_t nvars) {
    PolyMatrix out(m.field(), nvars, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i)
        for (std::size_t j = 0; j < m.cols(); ++j)
            out.at(i, j) = Polynomial::constant(m.field(), nvars, m.at(i, j));
    return out;
}

/// Applies the variable substitution x_j -> images[j] to every entry.
PolyMatrix substitute_matrix(const PolyMatrix& m, const std::vector<Polynomial>& images,
                             std::size_t out_nvars) {
    const Field& f = m.field();
    PolyMatrix out(f, out_nvars, m.rows(), m.cols());
    for (std::size_t i = 0; i < m.rows(); ++i) {
        for (std::size_t j = 0; j < m.cols(); ++j) {
            Polynomial acc = Polynomial::zero(f, out_nvars);
            for (const auto& [exps, c] : m.at(i, j).terms()) {
                Polynomial term = Polynomial::constant(f, out_nvars, c);
                for (std::size_t v = 0; v < exps.size(); ++v)
                    for (std::uint32_t e = 0; e < exps[v]; ++e) term = term * images[v];
                acc += term;
            }
            out.at(i, j) = acc;
        }
    }
    return out;
}

}  // namespace

// ---------------------------------------------------------------------------
// PointLocus

PointLocus::PointLocus(const Field& gf, std::size_t n) : gf_(gf), n_(n) {
    if (gf.characteristic() == 0)
        throw std::invalid_argument("point locus: finite field required");
    bits_.assign(checked_power(gf.characteristic(), n), false);
}

PointLocus PointLocus::full(const Field& gf, std::size_t n) {
    PointLocus out(gf, n);
    out.bits_.assign(out.bits_.size(), true);
    return out;
}

std::uint64_t PointLocus::point_count() const {
    std::uint64_t c = 0;
    for (bool b : bits_) c += b ? 1 : 0;
    return c;
}

bool PointLocus::operator==(const PointLocus& rhs) const {
    return gf_ == rhs.gf_ && n_ == rhs.n_ && bits_ == rhs.bits_;
}

bool PointLocus::is_subset_of(const PointLocus& rhs) const {
    if (!(gf_ == rhs.gf_) || n_ != rhs.n_)
        throw std::invalid_argument("point locus: mismatched spaces");
    for (std::uint64_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] && !rhs.bits_[i]) return false;
    return true;
}

std::optional<std::uint64_t> PointLocus::first_difference(const PointLocus& rhs) const {
    if (!(gf_ == rhs.gf_) || n_ != rhs.n_)
        throw std::invalid_argument("point locus: mismatched spaces");
    for (std::uint64_t i = 0; i < bits_.size(); ++i)
        if (bits_[i] != rhs.bits_[i]) return i;
    return std::nullopt;
}

PointLocus PointLocus::unioned(const PointLocus& rhs) const {
    if (!(gf_ == rhs.gf_) || n_ != rhs.n_)
        throw std::invalid_argument("point locus: mismatched spaces");
    PointLocus out(gf_, n_);
    for (std::uint64_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] || rhs.bits_[i];
    return out;
}

PointLocus PointLocus::intersected(const PointLocus& rhs) const {
    if (!(gf_ == rhs.gf_) || n_ != rhs.n_)
        throw std::invalid_argument("point locus: mismatched spaces");
    PointLocus out(gf_, n_);
    for (std::uint64_t i = 0; i < bits_.size(); ++i) out.bits_[i] = bits_[i] && rhs.bits_[i];
    return out;
}

PointLocus PointLocus::product(const PointLocus& left, const PointLocus& right) {
    if (!(left.gf_ == right.gf_)) throw std::invalid_argument("point locus: mixed fields");
    PointLocus out(left.gf_, left.n_ + right.n_);
    const std::uint64_t right_size = right.bits_.size();
    for (std::uint64_t il = 0; il < left.bits_.size(); ++il) {
        if (!left.bits_[il]) continue;
        const std::uint64_t base = il * right_size;
        for (std::uint64_t ir = 0; ir < right_size; ++ir)
            if (right.bits_[ir]) out.bits_[base + ir] = true;
    }
    return out;
}

bool PointLocus::is_homogeneous_set() const {
    const std::uint64_t q = gf_.characteristic();
    const auto pw = index_weights(q, n_);
    for (std::uint64_t idx = 1; idx < bits_.size(); ++idx) {
        if (!bits_[idx]) continue;
        const auto digits = point_at(idx);
        for (std::uint64_t lam = 2; lam < q; ++lam) {
            std::uint64_t other = 0;
            for (std::size_t s = 0; s < n_; ++s) other += (digits[s] * lam % q) * pw[s];
            if (!bits_[other]) return false;
        }
    }
    return true;
}

std::uint64_t PointLocus::index_of(const std::vector<std::uint32_t>& digits) const {
    if (digits.size() != n_) throw std::invalid_argument("point index: wrong length");
    const std::uint64_t q = gf_.characteristic();
    std::uint64_t idx = 0;
    for (std::uint32_t d : digits) {
        if (d >= q) throw std::invalid_argument("point index: digit out of range");
        idx = idx * q + d;
    }
    return idx;
}

std::vector<std::uint32_t> PointLocus::point_at(std::uint64_t index) const {
    const std::uint64_t q = gf_.characteristic();
    std::vector<std::uint32_t> digits(n_, 0);
    for (std::size_t s = n_; s-- > 0;) {
        digits[s] = static_cast<std::uint32_t>(index % q);
        index /= q;
    }
    return digits;
}

std::vector<std::vector<std::uint32_t>> PointLocus::sample_points(std::size_t limit) const {
    std::vector<std::vector<std::uint32_t>> out;
    for (std::uint64_t idx = 0; idx < bits_.size() && out.size() < limit; ++idx)
        if (bits_[idx]) out.push_back(point_at(idx));
    return out;
}

// ---------------------------------------------------------------------------
// ResonanceProfile

PointLocus ResonanceProfile::locus(std::uint32_t i, int k) const {
    if (k <= 0) return PointLocus::full(gf, n);
    const std::uint32_t bi = i < dims.size() ? dims[i] : 0;
    if (k > static_cast<int>(bi)) return PointLocus(gf, n);
    return loci[i][static_cast<std::size_t>(k) - 1];
}

const PointLocus& ResonanceProfile::locus_ref(std::uint32_t i, std::uint32_t k) const {
    if (i >= loci.size() || k == 0 || k > loci[i].size())
        throw std::out_of_range("resonance profile: no stored locus for this depth");
    return loci[i][k - 1];
}

// ---------------------------------------------------------------------------
// Twisted Betti numbers (structure-constant path)

std::vector<std::uint32_t> twisted_betti(const GradedAlgebra& A, const std::vector<Scalar>& a) {
    const std::uint32_t m = A.top_degree();
    if (a.size() != A.dim(1)) throw std::invalid_argument("twisted betti: wrong point length");
    std::vector<std::size_t> r(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = A.mult_by_degree_one(a, i).rank();
    std::vector<std::uint32_t> b(m + 1, 0);
    for (std::uint32_t i = 0; i <= m; ++i) {
        std::size_t drop = (i > 0 ? r[i - 1] : 0) + (i < m ? r[i] : 0);
        b[i] = static_cast<std::uint32_t>(A.dim(i) - drop);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Exhaustive resonance sweep

ResonanceProfile resonance_points(const GradedAlgebra& A, std::uint64_t budget, unsigned workers) {
    const Field& gf = A.field();
    if (gf.characteristic() == 0)
        throw std::invalid_argument("resonance sweep: finite field required");
    const std::uint64_t q = gf.characteristic();
    const std::uint32_t m = A.top_degree();
    const std::size_t n = A.dim(1);

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > budget / q)
            throw BudgetExceeded("resonance sweep: q^n exceeds the budget of " +
                                 std::to_string(budget) + " points");
        space *= q;
    }

    // Residue tables of multiplication by each degree-one basis vector.
    std::vector<std::vector<std::vector<std::uint64_t>>> slice(m);
    for (std::uint32_t i = 0; i < m; ++i) {
        slice[i].resize(n);
        for (std::size_t s = 0; s < n; ++s) {
            const ScalarMatrix M = A.mult_by_degree_one(basis_vector(gf, n, s), i);
            std::vector<std::uint64_t> flat(M.rows() * M.cols());
            for (std::size_t u = 0; u < M.rows(); ++u)
                for (std::size_t w = 0; w < M.cols(); ++w)
                    flat[u * M.cols() + w] = M.at(u, w).residue();
            slice[i][s] = std::move(flat);
        }
    }

    const std::size_t stride = m + 1;
    std::vector<std::uint8_t> betti(space * stride, 0);
    for (std::uint32_t i = 0; i <= m; ++i) betti[i] = static_cast<std::uint8_t>(A.dim(i));

    // Projective representatives: leading digit 1 at position l, free tail.
    std::vector<std::uint64_t> rep_offset(n + 1, 0);
    for (std::size_t l = 0; l < n; ++l)
        rep_offset[l + 1] = rep_offset[l] + checked_power(q, n - 1 - l);
    const std::uint64_t rep_count = rep_offset[n];
    const auto pw = index_weights(q, n);

    auto sweep_range = [&](std::uint64_t first, std::uint64_t last) {
        std::vector<std::uint32_t> digits(n, 0);
        std::vector<std::uint64_t> scratch;
        std::vector<std::size_t> rank(m, 0);
        for (std::uint64_t rep = first; rep < last; ++rep) {
            const std::size_t l =
                static_cast<std::size_t>(std::upper_bound(rep_offset.begin(), rep_offset.end(), rep) -
                                         rep_offset.begin()) -
                1;
            std::uint64_t tail = rep - rep_offset[l];
            std::fill(digits.begin(), digits.end(), 0);
            digits[l] = 1;
            for (std::size_t s = n; s-- > l + 1;) {
                digits[s] = static_cast<std::uint32_t>(tail % q);
                tail /= q;
            }
            for (std::uint32_t i = 0; i < m; ++i) {
                const std::size_t rows = A.dim(i), cols = A.dim(i + 1);
                scratch.assign(rows * cols, 0);
                for (std::size_t s = l; s < n; ++s) {
                    if (digits[s] == 0) continue;
                    const std::uint64_t d = digits[s];
                    const auto& sl = slice[i][s];
                    for (std::size_t t = 0; t < sl.size(); ++t)
                        scratch[t] = (scratch[t] + d * sl[t]) % q;
                }
                rank[i] = gf_rank_inplace(scratch, rows, cols, q);
            }
            for (std::uint64_t lam = 1; lam < q; ++lam) {
                std::uint64_t idx = 0;
                for (std::size_t s = l; s < n; ++s) idx += (digits[s] * lam % q) * pw[s];
                std::uint8_t* out = betti.data() + idx * stride;
                for (std::uint32_t i = 0; i <= m; ++i) {
                    const std::size_t drop = (i > 0 ? rank[i - 1] : 0) + (i < m ? rank[i] : 0);
                    out[i] = static_cast<std::uint8_t>(A.dim(i) - drop);
                }
            }
        }
    };

    if (workers <= 1 || rep_count < 2) {
        sweep_range(0, rep_count);
    } else {
        const unsigned count = static_cast<unsigned>(
            std::min<std::uint64_t>(workers, rep_count));
        std::vector<std::thread> pool;
        const std::uint64_t chunk = (rep_count + count - 1) / count;
        for (unsigned w = 0; w < count; ++w) {
            const std::uint64_t first = w * chunk;
            const std::uint64_t last = std::min(rep_count, first + chunk);
            if (first >= last) break;
            pool.emplace_back(sweep_range, first, last);
        }
        for (auto& t : pool) t.join();
    }

    ResonanceProfile profile{gf, A.dims(), n, {}};
    profile.loci.resize(m + 1);
    for (std::uint32_t i = 0; i <= m; ++i)
        profile.loci[i].assign(A.dim(i), PointLocus(gf, n));
    for (std::uint64_t idx = 0; idx < space; ++idx) {
        const std::uint8_t* row = betti.data() + idx * stride;
        for (std::uint32_t i = 0; i <= m; ++i)
            for (std::uint8_t k = 1; k <= row[i]; ++k) profile.loci[i][k - 1].set(idx);
    }
    return profile;
}

// ---------------------------------------------------------------------------
// Linear-form complex

BGGComplex build_bgg(const GradedAlgebra& A) {
    const std::size_t n = A.dim(1);
    if (n == 0) throw std::invalid_argument("bgg: algebra has no degree-one part");
    const Field& f = A.field();
    const std::uint32_t m = A.top_degree();

    BGGComplex C{f, n, A.dims(), {}};
    for (std::uint32_t i = 0; i < m; ++i) {
        PolyMatrix D(f, n, A.dim(i), A.dim(i + 1));
        if (i == 0) {
            for (std::size_t w = 0; w < n; ++w) D.at(0, w) = Polynomial::variable(f, n, w + 1);
        } else {
            for (std::size_t u = 0; u < A.dim(i); ++u)
                for (std::size_t w = 0; w < A.dim(i + 1); ++w) {
                    Polynomial entry = Polynomial::zero(f, n);
                    for (std::size_t j = 0; j < n; ++j) {
                        const Scalar c = A.product_coeff(1, j, i, u, w);
                        if (!c.is_zero())
                            entry += Polynomial::variable(f, n, j + 1) * c;
                    }
                    D.at(u, w) = entry;
                }
        }
        C.delta.push_back(std::move(D));
    }

    for (std::uint32_t i = 0; i + 1 < m; ++i)
        if (!(C.delta[i] * C.delta[i + 1]).is_zero())
            throw std::logic_error("bgg: differentials do not compose to zero");

    if (m == 3 && A.dims() == std::vector<std::uint32_t>{1, static_cast<std::uint32_t>(n),
                                                         static_cast<std::uint32_t>(n), 1} &&
        A.has_orientation()) {
        if (A.pairing_matrix(1) == ScalarMatrix::identity(f, n) &&
            !C.delta[1].is_alternating())
            throw std::logic_error("bgg: middle differential is not alternating");
    }
    return C;
}

std::vector<std::uint32_t> BGGComplex::betti_at(const std::vector<Scalar>& point) const {
    const std::uint32_t m = static_cast<std::uint32_t>(dims.size()) - 1;
    if (point.size() != n) throw std::invalid_argument("betti: wrong point length");
    std::vector<std::size_t> r(m, 0);
    for (std::uint32_t i = 0; i < m; ++i) r[i] = delta[i].eval(point).rank();
    std::vector<std::uint32_t> b(m + 1, 0);
    for (std::uint32_t i = 0; i <= m; ++i) {
        const std::size_t drop = (i > 0 ? r[i - 1] : 0) + (i < m ? r[i] : 0);
        b[i] = static_cast<std::uint32_t>(dims[i] - drop);
    }
    return b;
}

// ---------------------------------------------------------------------------
// Determinantal resonance ideals

std::vector<Polynomial> resonance_ideal(const GradedAlgebra& A, std::uint32_t i, int k) {
    const Field& f = A.field();
    const std::size_t n = A.dim(1);
    const std::uint32_t m = A.top_degree();
    const std::uint32_t bi = A.dim(i);
    const int r = static_cast<int>(bi) - k + 1;

    if (r <= 0) return {Polynomial::one(f, n)};  // depth beyond b_i: empty locus
    if (k < 0 || n == 0) return {};              // full space, zero ideal
    if (i == 1 && k < static_cast<int>(n)) {
        if (m < 2) return {};  // no degree-two part: the matrix is empty
        BGGComplex C = build_bgg(A);
        return C.delta[1].minors_ideal(static_cast<int>(n) - k);
    }
    if (k <= 0) return {};  // generators are identically zero

    BGGComplex C = build_bgg(A);
    auto delta_at = [&](int d) -> PolyMatrix {
        if (d < 0) return PolyMatrix(f, n, 0, A.dim(0));
        if (d >= static_cast<int>(m)) return PolyMatrix(f, n, A.dim(m), 0);
        return C.delta[static_cast<std::size_t>(d)];
    };
    const PolyMatrix left = delta_at(static_cast<int>(i) - 1);
    const PolyMatrix right = delta_at(static_cast<int>(i));

    std::vector<Polynomial> gens;
    for (int s = 0; s <= r; ++s) {
        const auto ls = left.minors_ideal(s);
        if (ls.empty()) continue;
        const auto rs = right.minors_ideal(r - s);
        if (rs.empty()) continue;
        auto prod = multiply_ideals(ls, rs);
        gens.insert(gens.end(), prod.begin(), prod.end());
    }
    normalize_ideal(gens);
    return gens;
}

// ---------------------------------------------------------------------------
// Vanishing loci by evaluation

PointLocus locus_of_ideal(const std::vector<Polynomial>& gens, const Field& gf, std::size_t n,
                          std::uint64_t budget) {
    if (gf.characteristic() == 0) throw std::invalid_argument("locus: finite field required");
    const std::uint64_t q = gf.characteristic();
    for (const Polynomial& g : gens) {
        if (!(g.field() == gf)) throw std::invalid_argument("locus: generator field mismatch");
        if (g.nvars() != n) throw std::invalid_argument("locus: generator variable count mismatch");
    }

    std::uint64_t space = 1;
    for (std::size_t i = 0; i < n; ++i) {
        if (space > budget / q)
            throw BudgetExceeded("locus: q^n exceeds the budget of " + std::to_string(budget) +
                                 " points");
        space *= q;
    }

    struct FastPoly {
        std::vector<std::pair<std::uint64_t, Exponents>> terms;
    };
    std::vector<FastPoly> fast;
    bool homogeneous = true;
    std::uint32_t maxdeg = 0;
    for (const Polynomial& g : gens) {
        if (g.is_zero()) continue;
        if (g.is_constant()) return PointLocus(gf, n);  // unit ideal: empty locus
        if (!g.is_homogeneous()) homogeneous = false;
        FastPoly fp;
        for (const auto& [exps, c] : g.terms()) {
            fp.terms.emplace_back(c.residue(), exps);
            for (std::uint32_t e : exps) maxdeg = std::max(maxdeg, e);
        }
        fast.push_back(std::move(fp));
    }
    if (fast.empty()) return PointLocus::full(gf, n);

    // powers[s][e] = digits[s]^e, refreshed per point.
    std::vector<std::vector<std::uint64_t>> powers(n, std::vector<std::uint64_t>(maxdeg + 1, 1));
    auto vanishes_at = [&](const std::vector<std::uint32_t>& digits) {
        for (std::size_t s = 0; s < n; ++s)
            for (std::uint32_t e = 1; e <= maxdeg; ++e)
                powers[s][e] = powers[s][e - 1] * digits[s] % q;
        for (const FastPoly& fp : fast) {
            std::uint64_t acc = 0;
            for (const auto& [c, exps] : fp.terms) {
                std::uint64_t t = c;
                for (std::size_t s = 0; s < exps.size(); ++s)
                    if (exps[s] != 0) t = t * powers[s][exps[s]] % q;
                acc = (acc + t) % q;
            }
            if (acc != 0) return false;
        }
        return true;
    };

    PointLocus out(gf, n);
    std::vector<std::uint32_t> digits(n, 0);
    if (homogeneous) {
        out.set(0);  // every generator has positive degree
        const auto pw = index_weights(q, n);
        for (std::size_t l = 0; l < n; ++l) {
            const std::uint64_t tails = checked_power(q, n - 1 - l);
            for (std::uint64_t tail = 0; tail < tails; ++tail) {
                std::fill(digits.begin(), digits.end(), 0);
                digits[l] = 1;
                std::uint64_t rest = tail;
                for (std::size_t s = n; s-- > l + 1;) {
                    digits[s] = static_cast<std::uint32_t>(rest % q);
                    rest /= q;
                }
                if (!vanishes_at(digits)) continue;
                for (std::uint64_t lam = 1; lam < q; ++lam) {
                    std::uint64_t idx = 0;
                    for (std::size_t s = l; s < n; ++s) idx += (digits[s] * lam % q) * pw[s];
                    out.set(idx);
                }
            }
        }
    } else {
        for (std::uint64_t idx = 0; idx < space; ++idx) {
            std::uint64_t rest = idx;
            for (std::size_t s = n; s-- > 0;) {
                digits[s] = static_cast<std::uint32_t>(rest % q);
                rest /= q;
            }
            if (vanishes_at(digits)) out.set(idx);
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Pfaffian depth loci

std::vector<Polynomial> pfaffian_loci(const Trivector& mu, int depth) {
    const std::size_t n = mu.n();
    if (depth < 0 || depth >= static_cast<int>(n))
        throw std::invalid_argument("pfaffian loci: depth out of range");
    const bool even = n % 2 == 0;
    if (!even && depth == 0) return {};  // depth 0 is the full space
    const int size = even ? static_cast<int>(n) - 2 * (depth / 2)
                          : static_cast<int>(n) - 2 * ((depth + 1) / 2) + 1;
    return mu.generic_contraction().principal_pfaffian_ideal(size);
}

// ---------------------------------------------------------------------------
// Reduced determinant and Pfaffian

TuraevResult turaev_det_pf(const Trivector& mu) {
    const std::size_t n = mu.n();
    if (n < 3) throw std::invalid_argument("turaev: need at least three variables");
    const Field& f = mu.field();
    const PolyMatrix theta = mu.generic_contraction();

    auto var = [&](std::size_t i1) { return Polynomial::variable(f, n, i1); };
    auto sign_poly = [&](bool negative) {
        return Polynomial::constant(f, n, Scalar::from_int(f, negative ? -1 : 1));
    };

    std::vector<std::vector<Polynomial>> D(n, std::vector<Polynomial>(n, Polynomial::zero(f, n)));
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) D[i][j] = theta.minor_matrix(i, j).det();

    Polynomial det_red = Polynomial::zero(f, n);
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i) {
        for (std::size_t j = 0; j < n && !found; ++j) {
            if (D[i][j].is_zero()) continue;
            try {
                Polynomial quot = D[i][j].divide_exact(var(i + 1)).divide_exact(var(j + 1));
                det_red = quot * sign_poly((i + j) % 2 == 1);
            } catch (const std::domain_error&) {
                throw std::logic_error("turaev: codimension-one minor is not divisible by x_i*x_j");
            }
            found = true;
        }
    }
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) {
            const Polynomial expected =
                sign_poly((i + j) % 2 == 1) * var(i + 1) * var(j + 1) * det_red;
            if (D[i][j] != expected)
                throw std::logic_error("turaev: codimension-one minors are inconsistent");
        }

    TuraevResult out{det_red, std::nullopt};
    if (n % 2 == 1) {
        Polynomial pf_red = Polynomial::zero(f, n);
        std::vector<Polynomial> P;
        P.reserve(n);
        for (std::size_t i = 0; i < n; ++i) P.push_back(theta.minor_matrix(i, i).pfaffian());
        bool pf_found = false;
        for (std::size_t i = 0; i < n && !pf_found; ++i) {
            if (P[i].is_zero()) continue;
            try {
                pf_red = P[i].divide_exact(var(i + 1)) * sign_poly(i % 2 == 1);
            } catch (const std::domain_error&) {
                throw std::logic_error("turaev: principal sub-pfaffian is not divisible by x_i");
            }
            pf_found = true;
        }
        for (std::size_t i = 0; i < n; ++i) {
            const Polynomial expected = sign_poly(i % 2 == 1) * var(i + 1) * pf_red;
            if (P[i] != expected)
                throw std::logic_error("turaev: principal sub-pfaffians are inconsistent");
        }
        if (det_red != pf_red * pf_red)
            throw std::logic_error("turaev: determinant is not the square of the pfaffian");
        out.pf = pf_red;
    }
    return out;
}

// ---------------------------------------------------------------------------
// Unions of singular planes

PointLocus union_singular_planes(const GradedAlgebra& A, std::uint64_t budget) {
    const Field& gf = A.field();
    if (gf.characteristic() == 0)
        throw std::invalid_argument("singular planes: finite field required");
    const std::uint64_t q = gf.characteristic();
    const std::size_t n = A.dim(1);

    std::uint64_t plane_count = 0;
    for (std::size_t c1 = 0; c1 + 1 < n; ++c1)
        for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
            const std::uint64_t planes =
                checked_power(q, (n - c1 - 2) + (n - 1 - c2));
            plane_count += planes;
            if (plane_count > budget)
                throw BudgetExceeded("singular planes: plane count exceeds the budget of " +
                                     std::to_string(budget));
        }

    PointLocus out(gf, n);
    if (n >= 1) out.set(0);
    if (n < 2) return out;

    std::vector<Scalar> residue_scalar;
    residue_scalar.reserve(q);
    for (std::uint64_t d = 0; d < q; ++d)
        residue_scalar.push_back(Scalar::from_int(gf, static_cast<long long>(d)));
    const auto pw = index_weights(q, n);

    std::vector<std::uint32_t> da(n, 0), db(n, 0);
    std::vector<Scalar> va(n, Scalar::zero(gf)), vb(n, Scalar::zero(gf));
    for (std::size_t c1 = 0; c1 + 1 < n; ++c1) {
        for (std::size_t c2 = c1 + 1; c2 < n; ++c2) {
            std::vector<std::size_t> fa, fb;
            for (std::size_t j = c1 + 1; j < n; ++j)
                if (j != c2) fa.push_back(j);
            for (std::size_t j = c2 + 1; j < n; ++j) fb.push_back(j);
            const std::uint64_t ca = checked_power(q, fa.size());
            const std::uint64_t cb = checked_power(q, fb.size());
            for (std::uint64_t ta = 0; ta < ca; ++ta) {
                std::fill(da.begin(), da.end(), 0);
                da[c1] = 1;
                std::uint64_t rest = ta;
                for (std::size_t pos : fa) {
                    da[pos] = static_cast<std::uint32_t>(rest % q);
                    rest /= q;
                }
                for (std::size_t s = 0; s < n; ++s) va[s] = residue_scalar[da[s]];
                for (std::uint64_t tb = 0; tb < cb; ++tb) {
                    std::fill(db.begin(), db.end(), 0);
                    db[c2] = 1;
                    std::uint64_t restb = tb;
                    for (std::size_t pos : fb) {
                        db[pos] = static_cast<std::uint32_t>(restb % q);
                        restb /= q;
                    }
                    for (std::size_t s = 0; s < n; ++s) vb[s] = residue_scalar[db[s]];
                    const std::vector<Scalar> prod = A.multiply(1, va, 1, vb);
                    bool zero = true;
                    for (const Scalar& c : prod)
                        if (!c.is_zero()) {
                            zero = false;
                            break;
                        }
                    if (!zero) continue;
                    for (std::uint64_t alpha = 0; alpha < q; ++alpha)
                        for (std::uint64_t beta = 0; beta < q; ++beta) {
                            if (alpha == 0 && beta == 0) continue;
                            std::uint64_t idx = 0;
                            for (std::size_t s = 0; s < n; ++s)
                                idx += (alpha * da[s] + beta * db[s]) % q * pw[s];
                            out.set(idx);
                        }
                }
            }
        }
    }
    return out;
}

// ---------------------------------------------------------------------------
// Induced maps of linear-form complexes

ChainMapReport bgg_chain_map(const AlgebraMorphism& phi, const ScalarMatrix& psi1) {
    const GradedAlgebra& A = phi.domain;
    const GradedAlgebra& B = phi.codomain;
    const std::uint32_t m = A.top_degree();
    if (B.top_degree() != m)
        throw std::invalid_argument("chain map: top degrees differ");
    for (std::uint32_t i = 0; i <= m; ++i)
        if (phi.maps[i].rank() != A.dim(i))
            throw std::invalid_argument("chain map: morphism is not injective in degree " +
                                        std::to_string(i));

    const std::size_t nA = A.dim(1), nB = B.dim(1);
    const Field& f = A.field();
    if (psi1.rows() != nB || psi1.cols() != nA ||
        !(phi.maps[1].transpose() * psi1 == ScalarMatrix::identity(f, nA)))
        throw std::invalid_argument("chain map: psi1 is not a right inverse of the dual of phi^1");

    const BGGComplex CA = build_bgg(A);
    const BGGComplex CB = build_bgg(B);

    // x_j -> sum_t psi1[t][j] y_t
    std::vector<Polynomial> images;
    images.reserve(nA);
    for (std::size_t j = 0; j < nA; ++j) {
        Polynomial im = Polynomial::zero(f, nB);
        for (std::size_t t = 0; t < nB; ++t) {
            const Scalar& c = psi1.at(t, j);
            if (!c.is_zero()) im += Polynomial::variable(f, nB, t + 1) * c;
        }
        images.push_back(std::move(im));
    }

    ChainMapReport report{psi1, {}, {}, true};
    for (std::uint32_t i = 0; i < m; ++i) {
        const PolyMatrix lhs = substitute_matrix(CA.delta[i], images, nB) *
                               scalar_to_poly(phi.maps[i + 1].transpose(), nB);
        const PolyMatrix rhs =
            scalar_to_poly(phi.maps[i].transpose(), nB) * CB.delta[i];
        PolyMatrix residual(f, nB, lhs.rows(), lhs.cols());
        for (std::size_t u = 0; u < lhs.rows(); ++u)
            for (std::size_t w = 0; w < lhs.cols(); ++w)
                residual.at(u, w) = lhs.at(u, w) - rhs.at(u, w);
        const bool ok = residual.is_zero();
        report.square_commutes.push_back(ok);
        report.residuals.push_back(std::move(residual));
        report.all_commute = report.all_commute && ok;
    }
    return report;
}

}  // namespace pdres
