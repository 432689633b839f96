#pragma once

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace pdres {

/// Exact rational number (arbitrary precision).
using Rational = boost::multiprecision::cpp_rational;

/// Coefficient field: either the rationals or a prime field GF(p) with p odd.
///
/// Characteristic 2 is rejected everywhere: alternating forms and Pfaffians
/// degenerate there, and none of the supported computations are valid mod 2.
class Field {
public:
    /// The field of rational numbers.
    static Field rationals();

    /// GF(p) for an odd prime p < 2^31.
    static Field prime(std::uint32_t p);

    /// Parses "rational" or "pP" (e.g. "p5").
    static Field parse(const std::string& text);

    bool is_rational() const { return p_ == 0; }
    bool is_prime() const { return p_ != 0; }

    /// Characteristic: 0 for the rationals, p for GF(p).
    std::uint32_t characteristic() const { return p_; }

    /// "rational" or "pP"; inverse of parse().
    std::string name() const;

    bool operator==(const Field& other) const { return p_ == other.p_; }
    bool operator!=(const Field& other) const { return p_ != other.p_; }

private:
    explicit Field(std::uint32_t p) : p_(p) {}
    std::uint32_t p_ = 0;
};

/// An element of a Field.  Arithmetic between scalars of different fields
/// throws std::invalid_argument.
class Scalar {
public:
    /// Zero in the rationals (default so containers work; prefer explicit ctors).
    Scalar() : field_(Field::rationals()) {}

    static Scalar zero(const Field& f);
    static Scalar one(const Field& f);
    static Scalar from_int(const Field& f, long long value);
    static Scalar from_rational(const Field& f, const Rational& value);

    /// Parses an integer or "a/b" fraction in the given field.
    static Scalar parse(const Field& f, const std::string& text);

    const Field& field() const { return field_; }
    bool is_zero() const;
    bool is_one() const;

    /// Value as a rational; throws for prime fields.
    const Rational& rational_value() const;

    /// Canonical residue in [0, p); throws for the rationals.
    std::uint32_t residue() const;

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;

    /// Division; throws std::domain_error on division by zero.
    Scalar operator/(const Scalar& rhs) const;

    /// Multiplicative inverse; throws std::domain_error for zero.
    Scalar inverse() const;

    Scalar& operator+=(const Scalar& rhs) { return *this = *this + rhs; }
    Scalar& operator-=(const Scalar& rhs) { return *this = *this - rhs; }
    Scalar& operator*=(const Scalar& rhs) { return *this = *this * rhs; }

    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    /// Canonical text: "3", "-1/2" for rationals, the residue for GF(p).
    std::string str() const;

private:
    explicit Scalar(const Field& f) : field_(f) {}
    void require_same_field(const Scalar& rhs) const;

    Field field_;
    Rational rat_ = 0;       // used when field_.is_rational()
    std::uint64_t res_ = 0;  // used when field_.is_prime()
};

}  // namespace pdres
