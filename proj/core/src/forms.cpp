#include "pdres/forms.hpp"

#include <algorithm>
#include <cctype>
#include <stdexcept>

namespace pdres {

namespace {

// Sorts (i,j,k) in place and returns the sign of the permutation,
// or 0 if two indices coincide.
int sort_sign(std::uint32_t& i, std::uint32_t& j, std::uint32_t& k) {
    int sign = 1;
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (j > k) { std::swap(j, k); sign = -sign; }
    if (i > j) { std::swap(i, j); sign = -sign; }
    if (i == j || j == k) return 0;
    return sign;
}

Scalar det3(const ScalarMatrix& h,
            std::uint32_t r0, std::uint32_t r1, std::uint32_t r2,
            std::uint32_t c0, std::uint32_t c1, std::uint32_t c2) {
    const Scalar a = h.at(r0, c0), b = h.at(r0, c1), c = h.at(r0, c2);
    const Scalar d = h.at(r1, c0), e = h.at(r1, c1), f = h.at(r1, c2);
    const Scalar g = h.at(r2, c0), i = h.at(r2, c1), j = h.at(r2, c2);
    return a * (e * j - f * i) - b * (d * j - f * g) + c * (d * i - e * g);
}

}  // namespace

Trivector::Trivector(const Field& f, std::size_t n) : field_(f), n_(n) {}

void Trivector::add_term(std::uint32_t i, std::uint32_t j, std::uint32_t k, const Scalar& c) {
    if (i < 1 || j < 1 || k < 1 || i > n_ || j > n_ || k > n_) {
        throw std::invalid_argument("trivector: index out of range");
    }
    if (c.field() != field_) throw std::invalid_argument("trivector: coefficient field mismatch");
    std::uint32_t a = i - 1, b = j - 1, d = k - 1;
    const int sign = sort_sign(a, b, d);
    if (sign == 0) throw std::invalid_argument("trivector: repeated index");
    const Scalar value = sign > 0 ? c : -c;
    const Triple key{a, b, d};
    auto it = coeffs_.find(key);
    if (it == coeffs_.end()) {
        if (!value.is_zero()) coeffs_.emplace(key, value);
        return;
    }
    it->second += value;
    if (it->second.is_zero()) coeffs_.erase(it);
}

Scalar Trivector::coeff(std::uint32_t i, std::uint32_t j, std::uint32_t k) const {
    std::uint32_t a = i, b = j, d = k;
    const int sign = sort_sign(a, b, d);
    if (sign == 0) return Scalar::zero(field_);
    auto it = coeffs_.find(Triple{a, b, d});
    if (it == coeffs_.end()) return Scalar::zero(field_);
    return sign > 0 ? it->second : -it->second;
}

bool Trivector::operator==(const Trivector& rhs) const {
    return field_ == rhs.field_ && n_ == rhs.n_ && coeffs_ == rhs.coeffs_;
}

Trivector Trivector::parse(const Field& f, std::size_t n, const std::string& expr) {
    Trivector mu(f, n);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < expr.size() && std::isspace(static_cast<unsigned char>(expr[pos]))) ++pos;
    };
    auto parse_uint = [&]() -> std::uint64_t {
        skip_ws();
        if (pos >= expr.size() || !std::isdigit(static_cast<unsigned char>(expr[pos]))) {
            throw std::invalid_argument("trivector: expected number at position " + std::to_string(pos));
        }
        std::uint64_t v = 0;
        while (pos < expr.size() && std::isdigit(static_cast<unsigned char>(expr[pos]))) {
            v = v * 10 + (expr[pos] - '0');
            if (v > (1ull << 32)) throw std::invalid_argument("trivector: number too large");
            ++pos;
        }
        return v;
    };
    auto expect = [&](char c) {
        skip_ws();
        if (pos >= expr.size() || expr[pos] != c) {
            throw std::invalid_argument(std::string("trivector: expected '") + c + "' at position " +
                                        std::to_string(pos));
        }
        ++pos;
    };

    skip_ws();
    if (pos == expr.size()) return mu;  // empty expression: the zero form
    if (expr[pos] == '0') {
        // Accept the canonical text "0" for the zero form (generator indices are 1-based,
        // so no genuine term starts with a bare zero).
        std::size_t probe = pos + 1;
        while (probe < expr.size() && std::isspace(static_cast<unsigned char>(expr[probe]))) ++probe;
        if (probe == expr.size()) return mu;
    }
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == expr.size()) break;
        Scalar coeff = Scalar::one(f);
        if (expr[pos] == '+' || expr[pos] == '-') {
            if (expr[pos] == '-') coeff = -coeff;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("trivector: expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;
        skip_ws();

        std::uint32_t i = 0, j = 0, k = 0;
        if (pos < expr.size() && expr[pos] == '[') {
            ++pos;
            i = static_cast<std::uint32_t>(parse_uint());
            expect(',');
            j = static_cast<std::uint32_t>(parse_uint());
            expect(',');
            k = static_cast<std::uint32_t>(parse_uint());
            expect(']');
        } else {
            // Either a digit triple, or a coefficient followed by '*' and a triple.
            const std::size_t start = pos;
            std::uint64_t num = parse_uint();
            const std::size_t digits_end = pos;
            skip_ws();
            if (pos < expr.size() && (expr[pos] == '*' || expr[pos] == '/')) {
                if (expr[pos] == '/') {
                    ++pos;
                    std::uint64_t den = parse_uint();
                    if (den == 0) throw std::domain_error("trivector: zero denominator");
                    coeff = coeff * Scalar::from_rational(f, Rational(num, den));
                } else {
                    coeff = coeff * Scalar::from_int(f, static_cast<long long>(num));
                }
                skip_ws();
                expect('*');
                skip_ws();
                if (pos < expr.size() && expr[pos] == '[') {
                    ++pos;
                    i = static_cast<std::uint32_t>(parse_uint());
                    expect(',');
                    j = static_cast<std::uint32_t>(parse_uint());
                    expect(',');
                    k = static_cast<std::uint32_t>(parse_uint());
                    expect(']');
                } else {
                    const std::size_t tstart = pos;
                    std::uint64_t digits = parse_uint();
                    if (pos - tstart != 3) throw std::invalid_argument("trivector: expected a digit triple");
                    i = static_cast<std::uint32_t>(digits / 100);
                    j = static_cast<std::uint32_t>(digits / 10 % 10);
                    k = static_cast<std::uint32_t>(digits % 10);
                }
            } else {
                if (digits_end - start != 3) throw std::invalid_argument("trivector: expected a digit triple");
                i = static_cast<std::uint32_t>(num / 100);
                j = static_cast<std::uint32_t>(num / 10 % 10);
                k = static_cast<std::uint32_t>(num % 10);
            }
        }
        mu.add_term(i, j, k, coeff);
    }
    return mu;
}

std::string Trivector::str() const {
    if (coeffs_.empty()) return "0";
    std::string out;
    for (const auto& [t, c] : coeffs_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        if (cs != "1") out += cs + "*";
        if (n_ <= 9) {
            out += std::to_string(t[0] + 1) + std::to_string(t[1] + 1) + std::to_string(t[2] + 1);
        } else {
            out += "[" + std::to_string(t[0] + 1) + "," + std::to_string(t[1] + 1) + "," +
                   std::to_string(t[2] + 1) + "]";
        }
    }
    return out;
}

Trivector Trivector::transformed(const ScalarMatrix& g) const {
    if (g.rows() != n_ || g.cols() != n_) throw std::invalid_argument("trivector: transform shape mismatch");
    const ScalarMatrix h = g.inverse();  // throws std::domain_error("singular") if not invertible
    Trivector out(field_, n_);
    for (std::uint32_t p = 0; p + 2 < n_; ++p) {
        for (std::uint32_t q = p + 1; q + 1 < n_; ++q) {
            for (std::uint32_t r = q + 1; r < n_; ++r) {
                Scalar acc = Scalar::zero(field_);
                for (const auto& [t, c] : coeffs_) {
                    acc += c * det3(h, t[0], t[1], t[2], p, q, r);
                }
                if (!acc.is_zero()) out.add_term(p + 1, q + 1, r + 1, acc);
            }
        }
    }
    return out;
}

ScalarMatrix Trivector::contraction(const std::vector<Scalar>& v) const {
    if (v.size() != n_) throw std::invalid_argument("trivector: contraction arity mismatch");
    ScalarMatrix m(field_, n_, n_);
    for (const auto& [t, c] : coeffs_) {
        const auto [i, j, k] = t;
        m.at(j, k) += c * v[i];
        m.at(k, j) -= c * v[i];
        m.at(i, k) -= c * v[j];
        m.at(k, i) += c * v[j];
        m.at(i, j) += c * v[k];
        m.at(j, i) -= c * v[k];
    }
    return m;
}

PolyMatrix Trivector::generic_contraction() const {
    PolyMatrix m(field_, n_, n_, n_);
    for (const auto& [t, c] : coeffs_) {
        const auto [i, j, k] = t;
        const Polynomial xi = Polynomial::variable(field_, n_, i + 1) * c;
        const Polynomial xj = Polynomial::variable(field_, n_, j + 1) * c;
        const Polynomial xk = Polynomial::variable(field_, n_, k + 1) * c;
        m.at(j, k) += xi;
        m.at(k, j) -= xi;
        m.at(i, k) -= xj;
        m.at(k, i) += xj;
        m.at(i, j) += xk;
        m.at(j, i) -= xk;
    }
    return m;
}

ScalarMatrix Trivector::contraction_map() const {
    const std::size_t pairs = n_ * (n_ - 1) / 2;
    ScalarMatrix m(field_, pairs, n_);
    auto pair_row = [&](std::uint32_t a, std::uint32_t b) {
        // Index of (a,b), a < b, in lexicographic order.
        return static_cast<std::size_t>(a) * (2 * n_ - a - 1) / 2 + (b - a - 1);
    };
    for (const auto& [t, c] : coeffs_) {
        const auto [i, j, k] = t;
        m.at(pair_row(j, k), i) += c;
        m.at(pair_row(i, k), j) -= c;
        m.at(pair_row(i, j), k) += c;
    }
    return m;
}

std::pair<std::size_t, std::size_t> Trivector::form_rank() const {
    const std::size_t corank = n_ - contraction_map().rank();
    return {n_ - corank, corank};
}

Trivector change_field(const Trivector& mu, const Field& f) {
    if (mu.field() == f) return mu;
    if (mu.field().is_prime() && f.is_prime()) {
        throw std::invalid_argument("trivector: cannot move between distinct prime fields");
    }
    Trivector out(f, mu.n());
    for (const auto& [t, c] : mu.coeffs()) {
        const Scalar v = c.field().is_rational()
                             ? Scalar::from_rational(f, c.rational_value())
                             : Scalar::from_int(f, c.residue());
        if (!v.is_zero()) out.add_term(t[0] + 1, t[1] + 1, t[2] + 1, v);
    }
    return out;
}

RankSplit split_by_rank(const Trivector& mu) {
    const Field& f = mu.field();
    const std::size_t n = mu.n();
    const ScalarMatrix cmap = mu.contraction_map();
    std::vector<std::size_t> pivots;
    cmap.rref(&pivots);
    const auto kernel = cmap.kernel_basis();
    const std::size_t rank = pivots.size() == 0 && kernel.size() == n ? 0 : n - kernel.size();

    // Basis: standard vectors at the pivot coordinates (ascending), then the
    // radical basis; the transformed form is then supported on the first
    // `rank` coordinates.
    ScalarMatrix h(f, n, n);
    std::size_t col = 0;
    for (std::size_t p : pivots) h.at(p, col++) = Scalar::one(f);
    for (const auto& v : kernel) {
        for (std::size_t row = 0; row < n; ++row) h.at(row, col) = v[row];
        ++col;
    }

    RankSplit split{rank, n - rank, ScalarMatrix::identity(f, n), Trivector(f, rank)};
    split.g = h.inverse();
    const Trivector moved = mu.transformed(split.g);
    for (const auto& [t, c] : moved.coeffs()) {
        if (t[2] >= rank) {
            throw std::logic_error("split_by_rank: radical coordinates not eliminated");
        }
        split.reduced.add_term(t[0] + 1, t[1] + 1, t[2] + 1, c);
    }
    return split;
}

bool is_two_singular(const Trivector& mu, const std::vector<std::vector<Scalar>>& basis) {
    for (std::size_t a = 0; a < basis.size(); ++a) {
        const ScalarMatrix m = mu.contraction(basis[a]);
        for (std::size_t b = 0; b < basis.size(); ++b) {
            for (const Scalar& entry : m.apply(basis[b])) {
                if (!entry.is_zero()) return false;
            }
        }
    }
    return true;
}

namespace {

struct NullitySearch {
    const Trivector& mu;
    std::uint32_t q;
    std::size_t n;
    std::size_t dim_cap;
    std::uint64_t budget;
    NullityResult result;

    // basis rows form the canonical reduced echelon basis of the current
    // 2-singular subspace; candidates extend it by one vector whose pivot
    // lies to the right of all current pivots, so every subspace is visited
    // exactly once.
    void extend(std::vector<std::vector<Scalar>>& basis, std::size_t min_pivot) {
        if (basis.size() > result.nu) {
            result.nu = basis.size();
            result.witness = basis;
        }
        if (basis.size() >= dim_cap) return;
        const Field& f = mu.field();
        for (std::size_t pivot = min_pivot; pivot < n; ++pivot) {
            std::vector<std::uint32_t> tail(n - pivot - 1, 0);
            while (true) {
                if (!result.exact) return;
                if (++result.nodes_visited > budget) {
                    result.exact = false;
                    return;
                }
                std::vector<Scalar> v(n, Scalar::zero(f));
                v[pivot] = Scalar::one(f);
                for (std::size_t t = 0; t < tail.size(); ++t) {
                    v[pivot + 1 + t] = Scalar::from_int(f, tail[t]);
                }
                if (candidate_ok(basis, v)) {
                    std::vector<std::vector<Scalar>> next = basis;
                    // Re-reduce old rows at the new pivot column to keep the
                    // canonical echelon form.
                    for (auto& row : next) {
                        if (!row[pivot].is_zero()) {
                            const Scalar factor = row[pivot];
                            for (std::size_t c = 0; c < n; ++c) row[c] -= factor * v[c];
                        }
                    }
                    next.push_back(v);
                    extend(next, pivot + 1);
                    if (!result.exact) return;
                }
                // Advance the tail as a base-q counter.
                std::size_t t = tail.size();
                while (t > 0) {
                    --t;
                    if (++tail[t] < q) break;
                    tail[t] = 0;
                    if (t == 0) { t = tail.size() + 1; break; }
                }
                if (tail.empty() || t == tail.size() + 1) break;
            }
        }
    }

    bool candidate_ok(const std::vector<std::vector<Scalar>>& basis, const std::vector<Scalar>& v) {
        const ScalarMatrix m = mu.contraction(v);
        for (const auto& u : basis) {
            for (const Scalar& entry : m.apply(u)) {
                if (!entry.is_zero()) return false;
            }
        }
        return true;
    }
};

}  // namespace

NullityResult nullity(const Trivector& mu, std::size_t dim_cap, std::uint64_t budget) {
    if (!mu.field().is_prime()) throw std::invalid_argument("nullity: finite field required");
    if (dim_cap > mu.n()) dim_cap = mu.n();
    NullitySearch search{mu, mu.field().characteristic(), mu.n(), dim_cap, budget, {}};
    std::vector<std::vector<Scalar>> basis;
    search.extend(basis, 0);
    return search.result;
}

Polynomial form_pfaffian(const Trivector& mu) {
    const std::size_t n = mu.n();
    if (n < 3 || n % 2 == 0) throw std::invalid_argument("pfaffian: rank must be odd and at least 3");
    const PolyMatrix theta = mu.generic_contraction();
    const Field& f = mu.field();
    const Polynomial pf1 = theta.minor_matrix(0, 0).pfaffian();
    const Polynomial pf = pf1.divide_exact(Polynomial::variable(f, n, 1));
    // Cross-check the quotient on a second index: pf(theta(2;2)) = -x2 Pf.
    const Polynomial pf2 = theta.minor_matrix(1, 1).pfaffian();
    if (pf2 != -(Polynomial::variable(f, n, 2) * pf)) {
        throw std::logic_error("pfaffian: inconsistent quotients across indices");
    }
    return pf;
}

BpGenericity is_bp_generic(const Trivector& mu, std::uint32_t witness_prime) {
    const std::size_t n = mu.n();
    if (n % 2 == 0) throw std::invalid_argument("bp-generic: even rank is not supported");
    BpGenericity out{false, form_pfaffian(mu), std::nullopt};
    out.generic = !out.pf.is_zero();

    // Finite-field witness search: a vector whose contraction has rank n-1.
    // Absence of a witness over a small field does not refute genericity.
    Trivector reduced(mu.field(), 0);
    try {
        reduced = change_field(mu, mu.field().is_prime() ? mu.field() : Field::prime(witness_prime));
    } catch (const std::exception&) {
        return out;  // reduction unavailable (e.g. denominator divisible by p)
    }
    const Field gf = reduced.field();
    const std::uint32_t q = gf.characteristic();
    for (std::size_t pivot = 0; pivot < n; ++pivot) {
        std::vector<std::uint32_t> tail(n - pivot - 1, 0);
        bool more = true;
        while (more) {
            std::vector<Scalar> v(n, Scalar::zero(gf));
            v[pivot] = Scalar::one(gf);
            for (std::size_t t = 0; t < tail.size(); ++t) {
                v[pivot + 1 + t] = Scalar::from_int(gf, tail[t]);
            }
            if (reduced.contraction(v).rank() == n - 1) {
                if (!out.generic) throw std::logic_error("bp-generic: witness found with zero pfaffian");
                out.witness = v;
                return out;
            }
            std::size_t t = tail.size();
            more = false;
            while (t > 0) {
                --t;
                if (++tail[t] < q) { more = true; break; }
                tail[t] = 0;
            }
        }
    }
    return out;
}

DfmrResult is_dfmr_generic(const Trivector& mu, const Field& gf, std::uint64_t budget) {
    if (!gf.is_prime()) throw std::invalid_argument("dfmr-generic: finite field required");
    const Trivector reduced = change_field(mu, gf);
    const std::size_t n = reduced.n();
    const std::uint32_t q = gf.characteristic();
    // (q^n - 1) / (q - 1) projective representatives; ranks are invariant
    // under scaling, so representatives decide the sweep.
    std::uint64_t reps = 0, power = 1;
    for (std::size_t i = 0; i < n; ++i) {
        reps += power;
        if (reps > budget || power > budget) {
            throw BudgetExceeded("dfmr-generic: projective sweep exceeds budget");
        }
        power *= q;
    }
    if (reps > budget) throw BudgetExceeded("dfmr-generic: projective sweep exceeds budget");

    for (std::size_t pivot = 0; pivot < n; ++pivot) {
        std::vector<std::uint32_t> tail(n - pivot - 1, 0);
        bool more = true;
        while (more) {
            std::vector<Scalar> v(n, Scalar::zero(gf));
            v[pivot] = Scalar::one(gf);
            for (std::size_t t = 0; t < tail.size(); ++t) {
                v[pivot + 1 + t] = Scalar::from_int(gf, tail[t]);
            }
            if (reduced.contraction(v).rank() < 4) {
                return DfmrResult{false, v};
            }
            std::size_t t = tail.size();
            more = false;
            while (t > 0) {
                --t;
                if (++tail[t] < q) { more = true; break; }
                tail[t] = 0;
            }
        }
    }
    return DfmrResult{true, std::nullopt};
}

}  // namespace pdres
