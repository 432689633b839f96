#include "pdres/polyring.hpp"

#include <cctype>
#include <numeric>
#include <stdexcept>

namespace pdres {

namespace {

std::uint32_t total_degree(const Exponents& e) {
    return std::accumulate(e.begin(), e.end(), 0u);
}

std::string monomial_str(const Exponents& e) {
    std::string out;
    for (std::size_t j = 0; j < e.size(); ++j) {
        if (e[j] == 0) continue;
        if (!out.empty()) out += "*";
        out += "x" + std::to_string(j + 1);
        if (e[j] > 1) out += "^" + std::to_string(e[j]);
    }
    return out;
}

}  // namespace

bool GradedLexDesc::operator()(const Exponents& a, const Exponents& b) const {
    const std::uint32_t da = total_degree(a);
    const std::uint32_t db = total_degree(b);
    if (da != db) return da > db;
    return a > b;  // lexicographic on exponents, x1 weighing heaviest
}

Polynomial::Polynomial(const Field& f, std::size_t nvars) : field_(f), nvars_(nvars) {}

Polynomial Polynomial::constant(const Field& f, std::size_t nvars, const Scalar& c) {
    Polynomial p(f, nvars);
    p.add_term(Exponents(nvars, 0), c);
    return p;
}

Polynomial Polynomial::one(const Field& f, std::size_t nvars) {
    return constant(f, nvars, Scalar::one(f));
}

Polynomial Polynomial::variable(const Field& f, std::size_t nvars, std::size_t index) {
    if (index < 1 || index > nvars) throw std::invalid_argument("polynomial: variable index out of range");
    Polynomial p(f, nvars);
    Exponents e(nvars, 0);
    e[index - 1] = 1;
    p.add_term(e, Scalar::one(f));
    return p;
}

bool Polynomial::is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
}

int Polynomial::degree() const {
    if (terms_.empty()) return -1;
    return static_cast<int>(total_degree(terms_.begin()->first));
}

bool Polynomial::is_homogeneous() const {
    if (terms_.empty()) return true;
    const std::uint32_t d = total_degree(terms_.begin()->first);
    for (const auto& [e, c] : terms_) {
        if (total_degree(e) != d) return false;
    }
    return true;
}

void Polynomial::add_term(const Exponents& exp, const Scalar& c) {
    if (exp.size() != nvars_) throw std::invalid_argument("polynomial: exponent arity mismatch");
    if (c.field() != field_) throw std::invalid_argument("polynomial: coefficient field mismatch");
    if (c.is_zero()) return;
    auto it = terms_.find(exp);
    if (it == terms_.end()) {
        terms_.emplace(exp, c);
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

void Polynomial::require_same_ring(const Polynomial& rhs) const {
    if (field_ != rhs.field_ || nvars_ != rhs.nvars_) {
        throw std::invalid_argument("polynomial: mixed rings in arithmetic");
    }
}

Polynomial Polynomial::operator-() const {
    Polynomial p(field_, nvars_);
    for (const auto& [e, c] : terms_) p.terms_.emplace(e, -c);
    return p;
}

Polynomial Polynomial::operator+(const Polynomial& rhs) const {
    Polynomial p = *this;
    p += rhs;
    return p;
}

Polynomial Polynomial::operator-(const Polynomial& rhs) const {
    Polynomial p = *this;
    p -= rhs;
    return p;
}

Polynomial& Polynomial::operator+=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, c);
    return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& rhs) {
    require_same_ring(rhs);
    for (const auto& [e, c] : rhs.terms_) add_term(e, -c);
    return *this;
}

Polynomial Polynomial::operator*(const Polynomial& rhs) const {
    require_same_ring(rhs);
    Polynomial p(field_, nvars_);
    for (const auto& [ea, ca] : terms_) {
        for (const auto& [eb, cb] : rhs.terms_) {
            Exponents e(nvars_);
            for (std::size_t j = 0; j < nvars_; ++j) e[j] = ea[j] + eb[j];
            p.add_term(e, ca * cb);
        }
    }
    return p;
}

Polynomial Polynomial::operator*(const Scalar& c) const {
    Polynomial p(field_, nvars_);
    if (c.is_zero()) return p;
    for (const auto& [e, coeff] : terms_) p.terms_.emplace(e, coeff * c);
    return p;
}

Polynomial operator*(const Scalar& c, const Polynomial& p) { return p * c; }

bool Polynomial::operator==(const Polynomial& rhs) const {
    return field_ == rhs.field_ && nvars_ == rhs.nvars_ && terms_ == rhs.terms_;
}

bool Polynomial::operator<(const Polynomial& rhs) const {
    if (degree() != rhs.degree()) return degree() < rhs.degree();
    auto it = terms_.begin();
    auto jt = rhs.terms_.begin();
    GradedLexDesc lt;
    for (; it != terms_.end() && jt != rhs.terms_.end(); ++it, ++jt) {
        if (it->first != jt->first) return lt(jt->first, it->first);
        if (it->second != jt->second) return it->second.str() < jt->second.str();
    }
    return it == terms_.end() && jt != rhs.terms_.end();
}

Scalar Polynomial::eval(const std::vector<Scalar>& point) const {
    if (point.size() != nvars_) throw std::invalid_argument("polynomial: evaluation arity mismatch");
    Scalar acc = Scalar::zero(field_);
    for (const auto& [e, c] : terms_) {
        Scalar term = c;
        for (std::size_t j = 0; j < nvars_; ++j) {
            for (std::uint32_t k = 0; k < e[j]; ++k) term *= point[j];
        }
        acc += term;
    }
    return acc;
}

Polynomial Polynomial::divide_exact(const Polynomial& divisor) const {
    require_same_ring(divisor);
    if (divisor.is_zero()) throw std::domain_error("polynomial: division by zero");
    Polynomial quotient(field_, nvars_);
    Polynomial rem = *this;
    const auto& [lead_exp, lead_coeff] = *divisor.terms_.begin();
    while (!rem.is_zero()) {
        const auto& [re, rc] = *rem.terms_.begin();
        Exponents qe(nvars_);
        for (std::size_t j = 0; j < nvars_; ++j) {
            if (re[j] < lead_exp[j]) throw std::domain_error("polynomial: not divisible");
            qe[j] = re[j] - lead_exp[j];
        }
        Polynomial t(field_, nvars_);
        t.add_term(qe, rc / lead_coeff);
        quotient += t;
        rem -= t * divisor;
    }
    return quotient;
}

Polynomial Polynomial::parse(const Field& f, std::size_t nvars, const std::string& text) {
    Polynomial result(f, nvars);
    std::size_t pos = 0;
    auto skip_ws = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    };
    auto parse_uint = [&]() -> std::uint64_t {
        skip_ws();
        if (pos >= text.size() || !std::isdigit(static_cast<unsigned char>(text[pos]))) {
            throw std::invalid_argument("polynomial: expected number at position " + std::to_string(pos));
        }
        std::uint64_t v = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            v = v * 10 + (text[pos] - '0');
            if (v > (1ull << 62)) throw std::invalid_argument("polynomial: number too large");
            ++pos;
        }
        return v;
    };

    skip_ws();
    if (pos == text.size()) throw std::invalid_argument("polynomial: empty expression");
    bool first = true;
    while (true) {
        skip_ws();
        if (pos == text.size()) {
            if (first) throw std::invalid_argument("polynomial: empty expression");
            break;
        }
        Scalar sign = Scalar::one(f);
        if (text[pos] == '+' || text[pos] == '-') {
            if (text[pos] == '-') sign = -sign;
            ++pos;
        } else if (!first) {
            throw std::invalid_argument("polynomial: expected '+' or '-' at position " + std::to_string(pos));
        }
        first = false;

        // One term: '*'-separated factors, each a constant or x<i>[^e].
        Scalar coeff = sign;
        Exponents exp(nvars, 0);
        bool expect_factor = true;
        while (expect_factor) {
            skip_ws();
            if (pos < text.size() && (text[pos] == 'x' || text[pos] == 'X')) {
                ++pos;
                std::uint64_t index = parse_uint();
                if (index < 1 || index > nvars) {
                    throw std::invalid_argument("polynomial: variable x" + std::to_string(index) + " out of range");
                }
                std::uint64_t e = 1;
                skip_ws();
                if (pos < text.size() && text[pos] == '^') {
                    ++pos;
                    e = parse_uint();
                }
                exp[index - 1] += static_cast<std::uint32_t>(e);
            } else {
                std::uint64_t num = parse_uint();
                skip_ws();
                if (pos < text.size() && text[pos] == '/') {
                    ++pos;
                    std::uint64_t den = parse_uint();
                    if (den == 0) throw std::domain_error("polynomial: zero denominator");
                    coeff = coeff * Scalar::from_rational(f, Rational(num, den));
                } else {
                    coeff = coeff * Scalar::from_int(f, static_cast<long long>(num));
                }
            }
            skip_ws();
            if (pos < text.size() && text[pos] == '*') {
                ++pos;
            } else {
                expect_factor = false;
            }
        }
        result.add_term(exp, coeff);
    }
    return result;
}

std::string Polynomial::str() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [e, c] : terms_) {
        std::string cs = c.str();
        bool negative = !cs.empty() && cs[0] == '-';
        if (negative) cs = cs.substr(1);
        if (out.empty()) {
            if (negative) out += "-";
        } else {
            out += negative ? " - " : " + ";
        }
        std::string mono = monomial_str(e);
        if (mono.empty()) {
            out += cs;
        } else if (cs == "1") {
            out += mono;
        } else {
            out += cs + "*" + mono;
        }
    }
    return out;
}

}  // namespace pdres
