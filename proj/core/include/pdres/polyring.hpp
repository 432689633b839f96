#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "pdres/scalars.hpp"

namespace pdres {

/// Exponent vector of a monomial; entry j is the exponent of x_{j+1}.
using Exponents = std::vector<std::uint32_t>;

/// Graded lexicographic order, descending (highest term first), with
/// x1 > x2 > ... .  This is the canonical term order for printing and for
/// the deterministic ordering of ideal generators.
struct GradedLexDesc {
    bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over a Field in variables x1..xn.
///
/// Every polynomial carries its coefficient field and variable count;
/// operations on mismatched rings throw std::invalid_argument.  Terms with
/// zero coefficient are never stored.
class Polynomial {
public:
    using TermMap = std::map<Exponents, Scalar, GradedLexDesc>;

    /// The zero polynomial in n variables.
    Polynomial(const Field& f, std::size_t nvars);

    static Polynomial zero(const Field& f, std::size_t nvars) { return Polynomial(f, nvars); }
    static Polynomial constant(const Field& f, std::size_t nvars, const Scalar& c);
    static Polynomial one(const Field& f, std::size_t nvars);

    /// The variable x_index (1-based, as printed).
    static Polynomial variable(const Field& f, std::size_t nvars, std::size_t index);

    /// Parses e.g. "x1^2*x5 - 2*x3*x4 + 1/2".  Whitespace is ignored.
    static Polynomial parse(const Field& f, std::size_t nvars, const std::string& text);

    const Field& field() const { return field_; }
    std::size_t nvars() const { return nvars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const;

    /// Total degree; -1 for the zero polynomial.
    int degree() const;

    /// True if all terms share the same total degree (the zero polynomial
    /// is homogeneous of every degree).
    bool is_homogeneous() const;

    /// Adds c * x^exp to the polynomial.
    void add_term(const Exponents& exp, const Scalar& c);

    Polynomial operator-() const;
    Polynomial operator+(const Polynomial& rhs) const;
    Polynomial operator-(const Polynomial& rhs) const;
    Polynomial operator*(const Polynomial& rhs) const;
    Polynomial operator*(const Scalar& c) const;
    Polynomial& operator+=(const Polynomial& rhs);
    Polynomial& operator-=(const Polynomial& rhs);

    bool operator==(const Polynomial& rhs) const;
    bool operator!=(const Polynomial& rhs) const { return !(*this == rhs); }

    /// Deterministic total order (degree, then terms); used to sort generator
    /// lists for stable output.
    bool operator<(const Polynomial& rhs) const;

    /// Evaluates at a point given by one scalar per variable.
    Scalar eval(const std::vector<Scalar>& point) const;

    /// Exact division; throws std::domain_error("not divisible") when the
    /// divisor does not divide this polynomial.
    Polynomial divide_exact(const Polynomial& divisor) const;

    /// Canonical text, terms in descending graded lex order; "0" for zero.
    std::string str() const;

private:
    void require_same_ring(const Polynomial& rhs) const;

    Field field_;
    std::size_t nvars_;
    TermMap terms_;
};

Polynomial operator*(const Scalar& c, const Polynomial& p);

}  // namespace pdres
