#include "pdres/scalars.hpp"

#include <stdexcept>

namespace pdres {

namespace {

bool is_prime_u32(std::uint32_t n) {
    if (n < 2) return false;
    if (n % 2 == 0) return n == 2;
    for (std::uint64_t d = 3; d * d <= n; d += 2) {
        if (n % d == 0) return false;
    }
    return true;
}

// Exponent of p can be huge in principle; Fermat inverse only needs p-2.
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
    std::uint64_t result = 1 % p;
    base %= p;
    while (exp > 0) {
        if (exp & 1) result = result * base % p;
        base = base * base % p;
        exp >>= 1;
    }
    return result;
}

}  // namespace

Field Field::rationals() { return Field(0); }

Field Field::prime(std::uint32_t p) {
    if (p == 2) throw std::invalid_argument("field: characteristic 2 is not supported");
    if (p >= (1u << 31)) throw std::invalid_argument("field: prime must be < 2^31");
    if (!is_prime_u32(p)) throw std::invalid_argument("field: " + std::to_string(p) + " is not prime");
    return Field(p);
}

Field Field::parse(const std::string& text) {
    if (text == "rational") return rationals();
    if (text.size() >= 2 && text[0] == 'p') {
        try {
            std::size_t pos = 0;
            unsigned long value = std::stoul(text.substr(1), &pos);
            if (pos == text.size() - 1 && value < (1ul << 31)) {
                return prime(static_cast<std::uint32_t>(value));
            }
        } catch (const std::logic_error&) {
            // fall through to the error below
        }
    }
    throw std::invalid_argument("field: cannot parse '" + text + "' (expected 'rational' or 'pP')");
}

std::string Field::name() const {
    return is_rational() ? "rational" : "p" + std::to_string(p_);
}

Scalar Scalar::zero(const Field& f) { return Scalar(f); }

Scalar Scalar::one(const Field& f) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = 1;
    } else {
        s.res_ = 1;
    }
    return s;
}

Scalar Scalar::from_int(const Field& f, long long value) {
    Scalar s(f);
    if (f.is_rational()) {
        s.rat_ = value;
    } else {
        long long p = f.characteristic();
        long long r = value % p;
        if (r < 0) r += p;
        s.res_ = static_cast<std::uint64_t>(r);
    }
    return s;
}

Scalar Scalar::from_rational(const Field& f, const Rational& value) {
    if (f.is_rational()) {
        Scalar s(f);
        s.rat_ = value;
        return s;
    }
    using boost::multiprecision::cpp_int;
    const cpp_int p = f.characteristic();
    cpp_int num = numerator(value) % p;
    if (num < 0) num += p;
    cpp_int den = denominator(value) % p;
    if (den == 0) throw std::domain_error("scalar: denominator divisible by " + std::to_string(f.characteristic()));
    Scalar n = from_int(f, static_cast<long long>(num));
    Scalar d = from_int(f, static_cast<long long>(den));
    return n / d;
}

Scalar Scalar::parse(const Field& f, const std::string& text) {
    auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            std::size_t pos = 0;
            long long v = std::stoll(text, &pos);
            if (pos != text.size()) throw std::invalid_argument("trailing characters");
            return from_int(f, v);
        }
        std::size_t pos = 0;
        long long num = std::stoll(text.substr(0, slash), &pos);
        if (pos != slash) throw std::invalid_argument("trailing characters");
        long long den = std::stoll(text.substr(slash + 1), &pos);
        if (pos != text.size() - slash - 1) throw std::invalid_argument("trailing characters");
        if (den == 0) throw std::domain_error("zero denominator");
        return from_rational(f, Rational(num, den));
    } catch (const std::logic_error&) {
        throw std::invalid_argument("scalar: cannot parse '" + text + "'");
    }
}

bool Scalar::is_zero() const {
    return field_.is_rational() ? rat_.is_zero() : res_ == 0;
}

bool Scalar::is_one() const {
    return field_.is_rational() ? rat_ == 1 : res_ == 1;
}

const Rational& Scalar::rational_value() const {
    if (!field_.is_rational()) throw std::invalid_argument("scalar: not a rational");
    return rat_;
}

std::uint32_t Scalar::residue() const {
    if (!field_.is_prime()) throw std::invalid_argument("scalar: not a prime field element");
    return static_cast<std::uint32_t>(res_);
}

void Scalar::require_same_field(const Scalar& rhs) const {
    if (field_ != rhs.field_) throw std::invalid_argument("scalar: mixed fields in arithmetic");
}

Scalar Scalar::operator-() const {
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = -rat_;
    } else if (res_ != 0) {
        s.res_ = field_.characteristic() - res_;
    }
    return s;
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ + rhs.rat_;
    } else {
        s.res_ = (res_ + rhs.res_) % field_.characteristic();
    }
    return s;
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_field(rhs);
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = rat_ * rhs.rat_;
    } else {
        s.res_ = res_ * rhs.res_ % field_.characteristic();
    }
    return s;
}

Scalar Scalar::operator/(const Scalar& rhs) const { return *this * rhs.inverse(); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw std::domain_error("scalar: division by zero");
    Scalar s(field_);
    if (field_.is_rational()) {
        s.rat_ = 1 / rat_;
    } else {
        const std::uint64_t p = field_.characteristic();
        s.res_ = pow_mod(res_, p - 2, p);
    }
    return s;
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (field_ != rhs.field_) return false;
    return field_.is_rational() ? rat_ == rhs.rat_ : res_ == rhs.res_;
}

std::string Scalar::str() const {
    return field_.is_rational() ? rat_.str() : std::to_string(res_);
}

}  // namespace pdres
