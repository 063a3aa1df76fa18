#include "gwa/exact/qscalar.hpp"

#include <stdexcept>
#include <utility>

namespace gwa {

Rational parse_rational(const std::string& text)
{
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(BigInt(text));
        }
        BigInt num(text.substr(0, slash));
        BigInt den(text.substr(slash + 1));
        if (den.is_zero()) {
            throw std::domain_error("parse_rational: zero denominator in '" + text + "'");
        }
        return Rational(num) / Rational(den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("parse_rational: not a rational number: '" + text + "'");
    }
}

QScalar::QScalar(const Rational& c) : num_(numerator(c)), den_(denominator(c)) {}

QScalar::QScalar(IntPoly num, IntPoly den) : num_(std::move(num)), den_(std::move(den))
{
    if (den_.is_zero()) {
        throw std::domain_error("QScalar: zero denominator (numerator " + num_.to_string() + ")");
    }
    canonicalize();
}

QScalar QScalar::q_power(int k)
{
    QScalar r;
    if (k >= 0) {
        r.num_ = IntPoly::monomial(BigInt(1), k);
        r.den_ = IntPoly(1);
    } else {
        r.num_ = IntPoly(1);
        r.den_ = IntPoly::monomial(BigInt(1), -k);
    }
    return r;
}

void QScalar::canonicalize()
{
    if (num_.is_zero()) {
        den_ = IntPoly(1);
        return;
    }
    if (!(den_.is_constant() && den_.leading() == 1)) {
        IntPoly g = gcd(num_, den_);
        if (!(g.is_constant() && g.leading() == 1)) {
            num_ = exact_quotient(num_, g);
            den_ = exact_quotient(den_, g);
        }
    }
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
}

std::optional<int> QScalar::q_monomial_exponent(Rational* coefficient) const
{
    if (!num_.is_monomial() || !den_.is_monomial()) {
        return std::nullopt;
    }
    if (coefficient != nullptr) {
        *coefficient = Rational(num_.leading()) / Rational(den_.leading());
    }
    return num_.degree() - den_.degree();
}

QScalar QScalar::inverse() const
{
    if (is_zero()) {
        throw std::domain_error("QScalar: inverse of zero");
    }
    QScalar r;
    r.num_ = den_;
    r.den_ = num_;
    if (r.den_.leading() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

QScalar QScalar::operator-() const
{
    QScalar r = *this;
    r.num_ = -r.num_;
    return r;
}

QScalar& QScalar::operator+=(const QScalar& other)
{
    if (other.is_zero()) {
        return *this;
    }
    if (is_zero()) {
        return *this = other;
    }
    if (den_ == other.den_) {
        num_ += other.num_;
    } else {
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ = den_ * other.den_;
    }
    canonicalize();
    return *this;
}

QScalar& QScalar::operator-=(const QScalar& other) { return *this += -other; }

QScalar& QScalar::operator*=(const QScalar& other)
{
    if (is_zero() || other.is_zero()) {
        return *this = QScalar();
    }
    // Cross-cancel so the product of two reduced fractions stays reduced.
    IntPoly g1 = gcd(num_, other.den_);
    IntPoly g2 = gcd(other.num_, den_);
    IntPoly n = exact_quotient(num_, g1) * exact_quotient(other.num_, g2);
    IntPoly d = exact_quotient(den_, g2) * exact_quotient(other.den_, g1);
    num_ = std::move(n);
    den_ = std::move(d);
    if (den_.leading() < 0) {
        num_ = -num_;
        den_ = -den_;
    }
    return *this;
}

QScalar& QScalar::operator/=(const QScalar& other)
{
    if (other.is_zero()) {
        throw std::domain_error("QScalar: division by zero (dividend " + to_string() + ")");
    }
    return *this *= other.inverse();
}

std::string QScalar::to_string() const
{
    if (den_.is_constant() && den_.leading() == 1) {
        return num_.to_string();
    }
    return "(" + num_.to_string() + ")/(" + den_.to_string() + ")";
}

QScalar pow_int(const QScalar& x, int k)
{
    if (k < 0) {
        return pow_int(x.inverse(), -k);
    }
    QScalar result(1);
    QScalar base = x;
    auto e = static_cast<unsigned>(k);
    while (e != 0) {
        if (e & 1U) {
            result *= base;
        }
        base *= base;
        e >>= 1U;
    }
    return result;
}

QScalar quantum_integer(int m, int step)
{
    const QScalar v = QScalar::q_power(step);
    return (pow_int(v, m) - pow_int(v, -m)) / (v - v.inverse());
}

}  // namespace gwa
