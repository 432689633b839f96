#include "pdres/algebra.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <utility>

#include "json.hpp"

namespace pdres {

namespace {

std::vector<Scalar> basis_vector(const Field& f, std::size_t dim, std::size_t idx) {
    std::vector<Scalar> v(dim, Scalar::zero(f));
    v[idx] = Scalar::one(f);
    return v;
}

std::vector<Scalar> matrix_column(const ScalarMatrix& M, std::size_t j) {
    std::vector<Scalar> v;
    v.reserve(M.rows());
    for (std::size_t i = 0; i < M.rows(); ++i) v.push_back(M.at(i, j));
    return v;
}

bool is_identity(const ScalarMatrix& M) {
    if (M.rows() != M.cols()) return false;
    return M == ScalarMatrix::identity(M.field(), M.rows());
}

}  // namespace

GradedAlgebra::GradedAlgebra(const Field& f, std::vector<std::uint32_t> dims)
    : field_(f), dims_(std::move(dims)) {
    if (dims_.empty()) throw std::invalid_argument("algebra: empty dimension vector");
    if (dims_[0] != 1) throw std::invalid_argument("algebra: not connected (dim 0 != 1)");
    m_ = static_cast<std::uint32_t>(dims_.size() - 1);
}

std::size_t GradedAlgebra::dim(std::uint32_t i) const {
    return i < dims_.size() ? dims_[i] : 0;
}

const std::vector<Scalar>* GradedAlgebra::table(std::uint32_t i, std::uint32_t j) const {
    auto it = tables_.find({i, j});
    return it == tables_.end() ? nullptr : &it->second;
}

std::vector<Scalar>& GradedAlgebra::table_mut(std::uint32_t i, std::uint32_t j) {
    auto key = std::make_pair(i, j);
    auto it = tables_.find(key);
    if (it == tables_.end()) {
        std::vector<Scalar> data(dim(i) * dim(j) * dim(i + j), Scalar::zero(field_));
        it = tables_.emplace(key, std::move(data)).first;
    }
    return it->second;
}

void GradedAlgebra::set_product(std::uint32_t i, std::size_t u, std::uint32_t j,
                                std::size_t v, std::size_t w, const Scalar& c) {
    if (i == 0 || j == 0 || i + j > m_)
        throw std::invalid_argument("algebra: product degrees out of range");
    if (u >= dim(i) || v >= dim(j) || w >= dim(i + j))
        throw std::invalid_argument("algebra: product index out of range");
    table_mut(i, j)[(u * dim(j) + v) * dim(i + j) + w] = c;
}

Scalar GradedAlgebra::product_coeff(std::uint32_t i, std::size_t u, std::uint32_t j,
                                    std::size_t v, std::size_t w) const {
    const auto* t = table(i, j);
    if (t == nullptr) return Scalar::zero(field_);
    return (*t)[(u * dim(j) + v) * dim(i + j) + w];
}

std::vector<Scalar> GradedAlgebra::multiply(std::uint32_t i, const std::vector<Scalar>& a,
                                            std::uint32_t j,
                                            const std::vector<Scalar>& b) const {
    if (a.size() != dim(i) || b.size() != dim(j))
        throw std::invalid_argument("algebra: multiply operand size mismatch");
    if (i == 0) {
        std::vector<Scalar> out = b;
        for (auto& c : out) c *= a[0];
        return out;
    }
    if (j == 0) {
        std::vector<Scalar> out = a;
        for (auto& c : out) c *= b[0];
        return out;
    }
    std::vector<Scalar> out(dim(i + j), Scalar::zero(field_));
    const auto* t = table(i, j);
    if (t == nullptr) return out;
    for (std::size_t u = 0; u < a.size(); ++u) {
        if (a[u].is_zero()) continue;
        for (std::size_t v = 0; v < b.size(); ++v) {
            if (b[v].is_zero()) continue;
            const Scalar coeff = a[u] * b[v];
            for (std::size_t w = 0; w < out.size(); ++w)
                out[w] += coeff * (*t)[(u * b.size() + v) * out.size() + w];
        }
    }
    return out;
}

ScalarMatrix GradedAlgebra::mult_by_degree_one(const std::vector<Scalar>& a,
                                               std::uint32_t i) const {
    if (a.size() != dim(1))
        throw std::invalid_argument("algebra: degree-one element size mismatch");
    ScalarMatrix M(field_, dim(i), dim(i + 1));
    if (i == 0) {
        for (std::size_t w = 0; w < a.size(); ++w) M.at(0, w) = a[w];
        return M;
    }
    for (std::size_t u = 0; u < M.rows(); ++u)
        for (std::size_t s = 0; s < a.size(); ++s) {
            if (a[s].is_zero()) continue;
            for (std::size_t w = 0; w < M.cols(); ++w)
                M.at(u, w) += a[s] * product_coeff(1, s, i, u, w);
        }
    return M;
}

void GradedAlgebra::set_orientation(std::vector<Scalar> eps) {
    if (eps.size() != dim(m_))
        throw std::invalid_argument("algebra: orientation size mismatch");
    bool nonzero = false;
    for (const auto& c : eps) nonzero = nonzero || !c.is_zero();
    if (!nonzero) throw std::invalid_argument("algebra: orientation must be nonzero");
    orientation_ = std::move(eps);
}

const std::vector<Scalar>& GradedAlgebra::orientation() const {
    if (orientation_.empty()) throw std::logic_error("algebra: no orientation set");
    return orientation_;
}

Scalar GradedAlgebra::top_value(const std::vector<Scalar>& top) const {
    const auto& eps = orientation();
    if (top.size() != eps.size())
        throw std::invalid_argument("algebra: top-degree vector size mismatch");
    Scalar out = Scalar::zero(field_);
    for (std::size_t w = 0; w < eps.size(); ++w) out += eps[w] * top[w];
    return out;
}

ScalarMatrix GradedAlgebra::pairing_matrix(std::uint32_t i) const {
    if (i > m_) throw std::invalid_argument("algebra: pairing degree out of range");
    const std::uint32_t j = m_ - i;
    ScalarMatrix P(field_, dim(i), dim(j));
    for (std::size_t u = 0; u < P.rows(); ++u)
        for (std::size_t v = 0; v < P.cols(); ++v) {
            std::vector<Scalar> prod =
                multiply(i, basis_vector(field_, dim(i), u), j,
                         basis_vector(field_, dim(j), v));
            P.at(u, v) = top_value(prod);
        }
    return P;
}

void GradedAlgebra::validate() const {
    // Graded commutativity on every stored degree pair.
    for (std::uint32_t i = 1; i <= m_; ++i)
        for (std::uint32_t j = i; i + j <= m_; ++j) {
            const int sign = (i * j) % 2 == 0 ? 1 : -1;
            for (std::size_t u = 0; u < dim(i); ++u)
                for (std::size_t v = 0; v < dim(j); ++v)
                    for (std::size_t w = 0; w < dim(i + j); ++w) {
                        Scalar lhs = product_coeff(i, u, j, v, w);
                        Scalar rhs = product_coeff(j, v, i, u, w);
                        if (sign < 0) rhs = -rhs;
                        if (lhs != rhs)
                            throw std::invalid_argument(
                                "algebra: not graded-commutative");
                    }
        }
    // Associativity on all basis triples that land at or below the top.
    for (std::uint32_t i = 1; i <= m_; ++i)
        for (std::uint32_t j = 1; i + j <= m_; ++j)
            for (std::uint32_t k = 1; i + j + k <= m_; ++k)
                for (std::size_t u = 0; u < dim(i); ++u)
                    for (std::size_t v = 0; v < dim(j); ++v)
                        for (std::size_t x = 0; x < dim(k); ++x) {
                            auto eu = basis_vector(field_, dim(i), u);
                            auto ev = basis_vector(field_, dim(j), v);
                            auto ex = basis_vector(field_, dim(k), x);
                            auto lhs = multiply(i + j, multiply(i, eu, j, ev), k, ex);
                            auto rhs = multiply(i, eu, j + k, multiply(j, ev, k, ex));
                            if (lhs != rhs)
                                throw std::invalid_argument("algebra: not associative");
                        }
}

bool GradedAlgebra::operator==(const GradedAlgebra& rhs) const {
    if (field_ != rhs.field_ || dims_ != rhs.dims_) return false;
    for (std::uint32_t i = 1; i <= m_; ++i)
        for (std::uint32_t j = 1; i + j <= m_; ++j)
            for (std::size_t u = 0; u < dim(i); ++u)
                for (std::size_t v = 0; v < dim(j); ++v)
                    for (std::size_t w = 0; w < dim(i + j); ++w)
                        if (product_coeff(i, u, j, v, w) !=
                            rhs.product_coeff(i, u, j, v, w))
                            return false;
    return orientation_ == rhs.orientation_;
}

PdReport verify_pd(const GradedAlgebra& A) {
    PdReport rep;
    if (!A.has_orientation()) {
        rep.pass = false;
        rep.failed_degree = 0;
        rep.reason = "no orientation";
        return rep;
    }
    for (std::uint32_t i = 0; i <= A.top_degree(); ++i) {
        if (A.dim(i) != A.dim(A.top_degree() - i)) {
            rep.pass = false;
            rep.failed_degree = i;
            rep.reason = "pairing not square";
            return rep;
        }
        ScalarMatrix P = A.pairing_matrix(i);
        if (P.rank() != P.rows()) {
            rep.pass = false;
            rep.failed_degree = i;
            rep.reason = "singular pairing";
            return rep;
        }
    }
    rep.pass = true;
    return rep;
}

std::vector<std::vector<Scalar>> dual_basis(const GradedAlgebra& A, std::uint32_t i) {
    ScalarMatrix P = A.pairing_matrix(i);
    if (P.rows() != P.cols() || P.rank() != P.rows())
        throw std::domain_error("singular pairing");
    ScalarMatrix Q = P.inverse();
    std::vector<std::vector<Scalar>> duals;
    duals.reserve(P.rows());
    for (std::size_t w = 0; w < P.rows(); ++w) duals.push_back(matrix_column(Q, w));
    return duals;
}

GradedAlgebra pd3_from_trivector(const Trivector& mu) {
    const Field& f = mu.field();
    const auto n = static_cast<std::uint32_t>(mu.n());
    GradedAlgebra B(f, {1, n, n, 1});
    for (std::uint32_t u = 0; u < n; ++u)
        for (std::uint32_t v = 0; v < n; ++v) {
            for (std::uint32_t k = 0; k < n; ++k) {
                Scalar c = mu.coeff(u, v, k);
                if (!c.is_zero()) B.set_product(1, u, 1, v, k, c);
            }
            if (u == v) {
                B.set_product(1, u, 2, v, 0, Scalar::one(f));
                B.set_product(2, v, 1, u, 0, Scalar::one(f));
            }
        }
    B.set_orientation({Scalar::one(f)});
    B.validate();
    return B;
}

Trivector trivector_of(const GradedAlgebra& A) {
    if (A.top_degree() != 3)
        throw std::invalid_argument("trivector_of: top degree must be 3");
    PdReport rep = verify_pd(A);
    if (!rep.pass)
        throw std::invalid_argument("trivector_of: not a duality algebra (" +
                                    rep.reason + " in degree " +
                                    std::to_string(rep.failed_degree) + ")");
    const Field& f = A.field();
    const std::size_t n = A.dim(1);
    Trivector mu(f, n);
    for (std::uint32_t i = 0; i < n; ++i)
        for (std::uint32_t j = i + 1; j < n; ++j)
            for (std::uint32_t k = j + 1; k < n; ++k) {
                std::vector<Scalar> ei = basis_vector(f, n, i);
                std::vector<Scalar> ej = basis_vector(f, n, j);
                std::vector<Scalar> ek = basis_vector(f, n, k);
                Scalar c = A.top_value(A.multiply(2, A.multiply(1, ei, 1, ej), 1, ek));
                if (!c.is_zero()) mu.add_term(i + 1, j + 1, k + 1, c);
            }
    return mu;
}

GradedAlgebra sphere_algebra(const Field& f, std::uint32_t d) {
    if (d == 0) {
        GradedAlgebra A(f, {1});
        A.set_orientation({Scalar::one(f)});
        return A;
    }
    std::vector<std::uint32_t> dims(d + 1, 0);
    dims[0] = 1;
    dims[d] = 1;
    GradedAlgebra A(f, std::move(dims));
    A.set_orientation({Scalar::one(f)});
    return A;
}

GradedAlgebra surface_algebra(const Field& f, std::uint32_t g) {
    GradedAlgebra A(f, {1, 2 * g, 1});
    for (std::uint32_t i = 0; i < g; ++i) {
        A.set_product(1, i, 1, g + i, 0, Scalar::one(f));
        A.set_product(1, g + i, 1, i, 0, -Scalar::one(f));
    }
    A.set_orientation({Scalar::one(f)});
    A.validate();
    return A;
}

GradedAlgebra connected_sum(const GradedAlgebra& A, const GradedAlgebra& B) {
    if (A.field() != B.field())
        throw std::invalid_argument("connected sum: mixed fields");
    if (A.top_degree() != B.top_degree())
        throw std::invalid_argument("connected sum: top degrees differ");
    if (!A.has_orientation() || !verify_pd(A).pass || !B.has_orientation() ||
        !verify_pd(B).pass)
        throw std::invalid_argument(
            "connected sum: operands must be oriented duality algebras");
    const Field& f = A.field();
    const std::uint32_t m = A.top_degree();
    std::vector<std::uint32_t> dims(m + 1, 0);
    dims[0] = 1;
    if (m >= 1) dims[m] = 1;
    for (std::uint32_t i = 1; i < m; ++i)
        dims[i] = static_cast<std::uint32_t>(A.dim(i) + B.dim(i));
    GradedAlgebra C(f, std::move(dims));

    // Products of middle-degree classes: block-diagonal below the top degree,
    // and through the identified top class eps_X(ab) * omega at the top.
    auto fill = [&](const GradedAlgebra& X, bool second) {
        auto off = [&](std::uint32_t i) -> std::size_t {
            return (second && i > 0 && i < m) ? A.dim(i) : 0;
        };
        for (std::uint32_t i = 1; i < m; ++i)
            for (std::uint32_t j = 1; i + j <= m; ++j) {
                for (std::size_t u = 0; u < X.dim(i); ++u)
                    for (std::size_t v = 0; v < X.dim(j); ++v) {
                        if (i + j < m) {
                            for (std::size_t w = 0; w < X.dim(i + j); ++w) {
                                Scalar c = X.product_coeff(i, u, j, v, w);
                                if (!c.is_zero())
                                    C.set_product(i, off(i) + u, j, off(j) + v,
                                                  off(i + j) + w, c);
                            }
                        } else {
                            std::vector<Scalar> prod = X.multiply(
                                i, basis_vector(f, X.dim(i), u), j,
                                basis_vector(f, X.dim(j), v));
                            Scalar c = X.top_value(prod);
                            if (!c.is_zero())
                                C.set_product(i, off(i) + u, j, off(j) + v, 0, c);
                        }
                    }
            }
    };
    fill(A, false);
    fill(B, true);
    C.set_orientation({Scalar::one(f)});
    C.validate();
    return C;
}

GradedAlgebra tensor_product(const GradedAlgebra& B, const GradedAlgebra& C) {
    if (B.field() != C.field())
        throw std::invalid_argument("tensor product: mixed fields");
    const Field& f = B.field();
    const std::uint32_t m = B.top_degree() + C.top_degree();
    std::vector<std::uint32_t> dims(m + 1, 0);
    for (std::uint32_t i = 0; i <= m; ++i) {
        std::size_t d = 0;
        for (std::uint32_t p = 0; p <= i; ++p) d += B.dim(p) * C.dim(i - p);
        dims[i] = static_cast<std::uint32_t>(d);
    }
    GradedAlgebra A(f, std::move(dims));

    // Basis of A^i: blocks (p, q = i - p) with p decreasing, so the pure
    // B part leads in every degree; inside a block the B index is major.
    auto offset = [&](std::uint32_t i, std::uint32_t p) {
        std::size_t off = 0;
        for (std::uint32_t t = i; t > p; --t) off += B.dim(t) * C.dim(i - t);
        return off;
    };
    // Product of two basis elements of one factor, as coordinates; degree-0
    // factors act as the unit.
    auto factor_product = [&f](const GradedAlgebra& X, std::uint32_t p, std::size_t u,
                               std::uint32_t p2, std::size_t u2) {
        return X.multiply(p, basis_vector(f, X.dim(p), u), p2,
                          basis_vector(f, X.dim(p2), u2));
    };

    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = 1; i + j <= m; ++j)
            for (std::uint32_t p = 0; p <= i; ++p) {
                const std::uint32_t q = i - p;
                if (B.dim(p) == 0 || C.dim(q) == 0) continue;
                for (std::uint32_t p2 = 0; p2 <= j; ++p2) {
                    const std::uint32_t q2 = j - p2;
                    if (B.dim(p2) == 0 || C.dim(q2) == 0) continue;
                    if (p + p2 > B.top_degree() || q + q2 > C.top_degree()) continue;
                    const bool negate = (q * p2) % 2 != 0;
                    for (std::size_t u = 0; u < B.dim(p); ++u)
                        for (std::size_t u2 = 0; u2 < B.dim(p2); ++u2) {
                            std::vector<Scalar> bb = factor_product(B, p, u, p2, u2);
                            for (std::size_t v = 0; v < C.dim(q); ++v)
                                for (std::size_t v2 = 0; v2 < C.dim(q2); ++v2) {
                                    std::vector<Scalar> cc =
                                        factor_product(C, q, v, q2, v2);
                                    const std::size_t U =
                                        offset(i, p) + u * C.dim(q) + v;
                                    const std::size_t V =
                                        offset(j, p2) + u2 * C.dim(q2) + v2;
                                    for (std::size_t wb = 0; wb < bb.size(); ++wb) {
                                        if (bb[wb].is_zero()) continue;
                                        for (std::size_t wc = 0; wc < cc.size(); ++wc) {
                                            if (cc[wc].is_zero()) continue;
                                            Scalar c = bb[wb] * cc[wc];
                                            if (negate) c = -c;
                                            const std::size_t W =
                                                offset(i + j, p + p2) +
                                                wb * C.dim(q + q2) + wc;
                                            Scalar cur = A.product_coeff(i, U, j, V, W);
                                            A.set_product(i, U, j, V, W, cur + c);
                                        }
                                    }
                                }
                        }
                }
            }

    if (B.has_orientation() && C.has_orientation() && m >= 1) {
        std::vector<Scalar> eps;
        eps.reserve(A.dim(m));
        for (std::uint32_t t = 0; t <= m; ++t) {
            const std::uint32_t p = m - t;
            if (B.dim(p) == 0 || C.dim(m - p) == 0) continue;
            for (std::size_t wb = 0; wb < B.dim(p); ++wb)
                for (std::size_t wc = 0; wc < C.dim(m - p); ++wc)
                    eps.push_back(p == B.top_degree()
                                      ? B.orientation()[wb] * C.orientation()[wc]
                                      : Scalar::zero(f));
        }
        A.set_orientation(std::move(eps));
    }
    A.validate();
    return A;
}

GradedAlgebra wedge_sum(const GradedAlgebra& B, const GradedAlgebra& C) {
    if (B.field() != C.field())
        throw std::invalid_argument("wedge sum: mixed fields");
    const std::uint32_t m = std::max(B.top_degree(), C.top_degree());
    std::vector<std::uint32_t> dims(m + 1, 0);
    dims[0] = 1;
    for (std::uint32_t i = 1; i <= m; ++i)
        dims[i] = static_cast<std::uint32_t>(B.dim(i) + C.dim(i));
    GradedAlgebra A(B.field(), std::move(dims));
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = 1; i + j <= m; ++j)
            for (std::size_t u = 0; u < A.dim(i); ++u)
                for (std::size_t v = 0; v < A.dim(j); ++v) {
                    const bool ub = u < B.dim(i);
                    const bool vb = v < B.dim(j);
                    if (ub != vb) continue;
                    const GradedAlgebra& X = ub ? B : C;
                    const std::size_t xu = ub ? u : u - B.dim(i);
                    const std::size_t xv = vb ? v : v - B.dim(j);
                    if (X.dim(i + j) == 0) continue;
                    for (std::size_t w = 0; w < X.dim(i + j); ++w) {
                        Scalar c = X.product_coeff(i, xu, j, xv, w);
                        if (!c.is_zero())
                            A.set_product(i, u, j, v, (ub ? 0 : B.dim(i + j)) + w, c);
                    }
                }
    A.validate();
    return A;
}

std::vector<Scalar> AlgebraMorphism::apply(std::uint32_t i,
                                           const std::vector<Scalar>& v) const {
    return maps.at(i).apply(v);
}

AlgebraMorphism make_morphism(const GradedAlgebra& A, const GradedAlgebra& B,
                              std::vector<ScalarMatrix> maps) {
    if (A.field() != B.field())
        throw std::invalid_argument("morphism: mixed fields");
    if (A.top_degree() != B.top_degree())
        throw std::invalid_argument("morphism: top degrees differ");
    const std::uint32_t m = A.top_degree();
    if (maps.size() != m + 1)
        throw std::invalid_argument("morphism: expected one matrix per degree");
    for (std::uint32_t i = 0; i <= m; ++i)
        if (maps[i].rows() != B.dim(i) || maps[i].cols() != A.dim(i))
            throw std::invalid_argument("morphism: matrix shape mismatch in degree " +
                                        std::to_string(i));
    if (!maps[0].at(0, 0).is_one())
        throw std::invalid_argument("morphism: not unital");
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = 1; i + j <= m; ++j)
            for (std::size_t u = 0; u < A.dim(i); ++u)
                for (std::size_t v = 0; v < A.dim(j); ++v) {
                    std::vector<Scalar> prod(A.dim(i + j), Scalar::zero(A.field()));
                    for (std::size_t w = 0; w < prod.size(); ++w)
                        prod[w] = A.product_coeff(i, u, j, v, w);
                    std::vector<Scalar> lhs = maps[i + j].apply(prod);
                    std::vector<Scalar> rhs =
                        B.multiply(i, matrix_column(maps[i], u), j,
                                   matrix_column(maps[j], v));
                    if (lhs != rhs)
                        throw std::invalid_argument("morphism: not multiplicative");
                }
    return AlgebraMorphism{A, B, std::move(maps)};
}

AlgebraMorphism identity_morphism(const GradedAlgebra& A) {
    std::vector<ScalarMatrix> maps;
    for (std::uint32_t i = 0; i <= A.top_degree(); ++i)
        maps.push_back(ScalarMatrix::identity(A.field(), A.dim(i)));
    return make_morphism(A, A, std::move(maps));
}

AlgebraMorphism connected_sum_inclusion(const GradedAlgebra& A, const GradedAlgebra& B,
                                        bool second) {
    GradedAlgebra C = connected_sum(A, B);
    const GradedAlgebra& X = second ? B : A;
    const std::uint32_t m = C.top_degree();
    std::vector<ScalarMatrix> maps;
    maps.push_back(ScalarMatrix::identity(X.field(), 1));
    for (std::uint32_t i = 1; i < m; ++i) {
        ScalarMatrix M(X.field(), C.dim(i), X.dim(i));
        const std::size_t off = second ? A.dim(i) : 0;
        for (std::size_t u = 0; u < X.dim(i); ++u)
            M.at(off + u, u) = Scalar::one(X.field());
        maps.push_back(std::move(M));
    }
    if (m >= 1) {
        // omega_X maps to eps_X(omega_X) * omega_C.
        ScalarMatrix M(X.field(), 1, X.dim(m));
        for (std::size_t u = 0; u < X.dim(m); ++u) M.at(0, u) = X.orientation()[u];
        maps.push_back(std::move(M));
    }
    return make_morphism(X, C, std::move(maps));
}

MorphismReport morphism_check(const AlgebraMorphism& phi) {
    MorphismReport rep;
    const std::uint32_t m = phi.domain.top_degree();
    rep.all_injective = true;
    for (std::uint32_t i = 0; i <= m; ++i) {
        const bool inj = phi.maps[i].rank() == phi.domain.dim(i);
        rep.injective.push_back(inj);
        rep.all_injective = rep.all_injective && inj;
    }
    if (phi.domain.has_orientation() && phi.codomain.has_orientation() &&
        phi.domain.dim(m) == 1 && phi.codomain.dim(m) == 1) {
        // phi(omega_A) = degree * omega_B in the eps-normalized top classes.
        Scalar lambda = phi.codomain.orientation()[0] * phi.maps[m].at(0, 0) /
                        phi.domain.orientation()[0];
        rep.degree = lambda;
        rep.equivalence_holds = rep.all_injective == !lambda.is_zero();
    }
    return rep;
}

AlgebraMorphism iso_from_form_map(const GradedAlgebra& A, const GradedAlgebra& B,
                                  const ScalarMatrix& g) {
    Trivector mu_a = trivector_of(A);
    Trivector mu_b = trivector_of(B);
    if (g.rows() != B.dim(1) || g.cols() != A.dim(1))
        throw std::invalid_argument("iso_from_form_map: map shape mismatch");
    if (A.dim(1) != B.dim(1) || mu_a.transformed(g) != mu_b)
        throw std::invalid_argument("not equivalent under g");
    const Field& f = A.field();
    // Degree 2 is the pairing-dual of g^{-1}: P_B^{-1} g^{-T} P_A, so that
    // eps_B(phi(a) phi(x)) = eps_A(a x) for a in degree 1, x in degree 2.
    ScalarMatrix F2 =
        B.pairing_matrix(1).inverse() * g.inverse().transpose() * A.pairing_matrix(1);
    ScalarMatrix F3(f, 1, 1);
    F3.at(0, 0) = A.orientation()[0] / B.orientation()[0];
    std::vector<ScalarMatrix> maps;
    maps.push_back(ScalarMatrix::identity(f, 1));
    maps.push_back(g);
    maps.push_back(std::move(F2));
    maps.push_back(std::move(F3));
    return make_morphism(A, B, std::move(maps));
}

namespace {

Scalar scalar_from_json(const Field& f, const nlohmann::json& j) {
    if (j.is_number_integer()) return Scalar::from_int(f, j.get<long long>());
    if (j.is_string()) return Scalar::parse(f, j.get<std::string>());
    throw std::invalid_argument("algebra json: coefficient must be integer or string");
}

}  // namespace

GradedAlgebra change_field(const GradedAlgebra& A, const Field& f) {
    if (A.field() == f) return A;
    if (A.field().characteristic() != 0)
        throw std::invalid_argument("change field: source must be rational");
    const std::uint32_t m = A.top_degree();
    GradedAlgebra out(f, A.dims());
    auto convert = [&f](const Scalar& c) { return Scalar::from_rational(f, c.rational_value()); };
    for (std::uint32_t i = 1; i <= m; ++i)
        for (std::uint32_t j = 1; i + j <= m; ++j)
            for (std::size_t u = 0; u < A.dim(i); ++u)
                for (std::size_t v = 0; v < A.dim(j); ++v)
                    for (std::size_t w = 0; w < A.dim(i + j); ++w) {
                        const Scalar c = A.product_coeff(i, u, j, v, w);
                        if (!c.is_zero()) out.set_product(i, u, j, v, w, convert(c));
                    }
    if (A.has_orientation()) {
        std::vector<Scalar> eps;
        eps.reserve(A.dim(m));
        for (const Scalar& c : A.orientation()) eps.push_back(convert(c));
        out.set_orientation(std::move(eps));
    }
    out.validate();
    return out;
}

GradedAlgebra algebra_from_json_text(const std::string& text) {
    nlohmann::json j;
    try {
        j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw std::invalid_argument(std::string("algebra json: ") + e.what());
    }
    if (!j.is_object() || !j.contains("dims") || !j.contains("field"))
        throw std::invalid_argument("algebra json: need dims and field");
    Field f = Field::parse(j.at("field").get<std::string>());
    std::vector<std::uint32_t> dims = j.at("dims").get<std::vector<std::uint32_t>>();
    GradedAlgebra A(f, std::move(dims));
    const std::uint32_t m = A.top_degree();

    std::set<std::pair<std::uint32_t, std::uint32_t>> seen;
    if (j.contains("products")) {
        for (const auto& entry : j.at("products")) {
            if (!entry.is_array() || entry.size() != 6)
                throw std::invalid_argument(
                    "algebra json: product entries are [i,u,j,v,w,c]");
            const auto i = entry[0].get<std::uint32_t>();
            const auto u = entry[1].get<std::size_t>();
            const auto jj = entry[2].get<std::uint32_t>();
            const auto v = entry[3].get<std::size_t>();
            const auto w = entry[4].get<std::size_t>();
            if (u == 0 || v == 0 || w == 0)
                throw std::invalid_argument("algebra json: basis indices are 1-based");
            A.set_product(i, u - 1, jj, v - 1, w - 1, scalar_from_json(f, entry[5]));
            seen.insert({i, jj});
        }
    }
    // Tables given in only one order are completed by graded commutativity.
    for (const auto& [i, jj] : seen) {
        if (i == jj || seen.count({jj, i})) continue;
        const int sign = (i * jj) % 2 == 0 ? 1 : -1;
        for (std::size_t u = 0; u < A.dim(i); ++u)
            for (std::size_t v = 0; v < A.dim(jj); ++v)
                for (std::size_t w = 0; w < A.dim(i + jj); ++w) {
                    Scalar c = A.product_coeff(i, u, jj, v, w);
                    if (!c.is_zero())
                        A.set_product(jj, v, i, u, w, sign < 0 ? -c : c);
                }
    }
    if (j.contains("orientation")) {
        std::vector<Scalar> eps;
        for (const auto& entry : j.at("orientation"))
            eps.push_back(scalar_from_json(f, entry));
        A.set_orientation(std::move(eps));
    }
    if (j.contains("m") && j.at("m").get<std::uint32_t>() != m)
        throw std::invalid_argument("algebra json: m does not match dims");
    A.validate();
    return A;
}

std::string algebra_to_json_text(const GradedAlgebra& A) {
    nlohmann::json j;
    j["m"] = A.top_degree();
    j["dims"] = A.dims();
    j["field"] = A.field().name();
    nlohmann::json products = nlohmann::json::array();
    for (std::uint32_t i = 1; i <= A.top_degree(); ++i)
        for (std::uint32_t jj = i; i + jj <= A.top_degree(); ++jj)
            for (std::size_t u = 0; u < A.dim(i); ++u)
                for (std::size_t v = 0; v < A.dim(jj); ++v)
                    for (std::size_t w = 0; w < A.dim(i + jj); ++w) {
                        Scalar c = A.product_coeff(i, u, jj, v, w);
                        if (!c.is_zero())
                            products.push_back({i, u + 1, jj, v + 1, w + 1, c.str()});
                    }
    j["products"] = std::move(products);
    if (A.has_orientation()) {
        nlohmann::json eps = nlohmann::json::array();
        for (const auto& c : A.orientation()) eps.push_back(c.str());
        j["orientation"] = std::move(eps);
    }
    return j.dump(2) + "\n";
}

}  // namespace pdres
