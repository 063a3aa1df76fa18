#include "gwa/exact/int_poly.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <utility>

namespace gwa {

IntPoly::IntPoly(long c)
{
    if (c != 0) {
        coeffs_.emplace_back(c);
    }
}

IntPoly::IntPoly(const BigInt& c)
{
    if (!c.is_zero()) {
        coeffs_.push_back(c);
    }
}

IntPoly::IntPoly(std::vector<BigInt> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

IntPoly IntPoly::monomial(const BigInt& c, int degree)
{
    if (c.is_zero()) {
        return {};
    }
    std::vector<BigInt> coeffs(static_cast<std::size_t>(degree) + 1);
    coeffs.back() = c;
    return IntPoly(std::move(coeffs));
}

void IntPoly::trim()
{
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

bool IntPoly::is_monomial() const
{
    if (coeffs_.empty()) {
        return false;
    }
    return std::count_if(coeffs_.begin(), coeffs_.end(), [](const BigInt& c) { return !c.is_zero(); }) == 1;
}

int IntPoly::valuation() const
{
    for (std::size_t k = 0; k < coeffs_.size(); ++k) {
        if (!coeffs_[k].is_zero()) {
            return static_cast<int>(k);
        }
    }
    return -1;
}

BigInt IntPoly::content() const
{
    BigInt g(0);
    for (const auto& c : coeffs_) {
        g = gcd(g, c);
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPoly IntPoly::primitive_part() const
{
    if (is_zero()) {
        return {};
    }
    BigInt c = content();
    if (leading() < 0) {
        c = -c;
    }
    return exact_quotient(*this, c);
}

IntPoly IntPoly::operator-() const
{
    IntPoly r = *this;
    for (auto& c : r.coeffs_) {
        c = -c;
    }
    return r;
}

IntPoly& IntPoly::operator+=(const IntPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] += other.coeffs_[k];
    }
    trim();
    return *this;
}

IntPoly& IntPoly::operator-=(const IntPoly& other)
{
    if (other.coeffs_.size() > coeffs_.size()) {
        coeffs_.resize(other.coeffs_.size());
    }
    for (std::size_t k = 0; k < other.coeffs_.size(); ++k) {
        coeffs_[k] -= other.coeffs_[k];
    }
    trim();
    return *this;
}

IntPoly operator*(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero() || b.is_zero()) {
        return {};
    }
    std::vector<BigInt> out(a.coeffs_.size() + b.coeffs_.size() - 1);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
        if (a.coeffs_[i].is_zero()) {
            continue;
        }
        for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
            out[i + j] += a.coeffs_[i] * b.coeffs_[j];
        }
    }
    return IntPoly(std::move(out));
}

IntPoly operator*(IntPoly a, const BigInt& c)
{
    if (c.is_zero()) {
        return {};
    }
    for (auto& x : a.coeffs_) {
        x *= c;
    }
    return a;
}

std::string IntPoly::to_string(const std::string& var) const
{
    if (is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const BigInt& c = coeffs_[static_cast<std::size_t>(k)];
        if (c.is_zero()) {
            continue;
        }
        BigInt mag = abs(c);
        if (first) {
            if (c < 0) {
                out << "-";
            }
        } else {
            out << (c < 0 ? " - " : " + ");
        }
        first = false;
        if (k == 0) {
            out << mag;
            continue;
        }
        if (mag != 1) {
            out << mag << "*";
        }
        out << var;
        if (k != 1) {
            out << "^" << k;
        }
    }
    return out.str();
}

IntPoly pseudo_remainder(IntPoly a, const IntPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("pseudo_remainder: zero divisor");
    }
    const int db = b.degree();
    const BigInt& lb = b.leading();
    while (!a.is_zero() && a.degree() >= db) {
        const int shift = a.degree() - db;
        IntPoly t = IntPoly::monomial(a.leading(), shift) * b;
        a = a * lb;
        a -= t;
    }
    return a;
}

IntPoly exact_quotient(const IntPoly& a, const BigInt& c)
{
    if (c.is_zero()) {
        throw std::domain_error("exact_quotient: division by zero constant");
    }
    std::vector<BigInt> out = a.coeffs();
    for (auto& x : out) {
        if (!(x % c).is_zero()) {
            throw std::domain_error("exact_quotient: constant does not divide polynomial");
        }
        x /= c;
    }
    return IntPoly(std::move(out));
}

IntPoly exact_quotient(const IntPoly& a, const IntPoly& b)
{
    if (b.is_zero()) {
        throw std::domain_error("exact_quotient: division by zero polynomial");
    }
    if (b.is_constant()) {
        return exact_quotient(a, b.leading());
    }
    IntPoly r = a;
    std::vector<BigInt> q(a.is_zero() || a.degree() < b.degree()
                              ? 0
                              : static_cast<std::size_t>(a.degree() - b.degree()) + 1);
    while (!r.is_zero() && r.degree() >= b.degree()) {
        const int shift = r.degree() - b.degree();
        if (!(r.leading() % b.leading()).is_zero()) {
            throw std::domain_error("exact_quotient: polynomial does not divide over Z");
        }
        BigInt c = r.leading() / b.leading();
        q[static_cast<std::size_t>(shift)] = c;
        r -= IntPoly::monomial(c, shift) * b;
    }
    if (!r.is_zero()) {
        throw std::domain_error("exact_quotient: nonzero remainder");
    }
    return IntPoly(std::move(q));
}

namespace {

IntPoly normalized(IntPoly p)
{
    if (!p.is_zero() && p.leading() < 0) {
        return -p;
    }
    return p;
}

IntPoly monomial_gcd(const IntPoly& mono, const IntPoly& other)
{
    const BigInt c = gcd(mono.leading(), other.content());
    const int k = std::min(mono.valuation(), other.valuation());
    return IntPoly::monomial(abs(c), k);
}

}  // namespace

IntPoly gcd(const IntPoly& a, const IntPoly& b)
{
    if (a.is_zero()) {
        return normalized(b);
    }
    if (b.is_zero()) {
        return normalized(a);
    }
    if (a.is_monomial()) {
        return monomial_gcd(a, b);
    }
    if (b.is_monomial()) {
        return monomial_gcd(b, a);
    }
    const BigInt content_gcd = gcd(a.content(), b.content());
    IntPoly x = a.primitive_part();
    IntPoly y = b.primitive_part();
    if (x.degree() < y.degree()) {
        std::swap(x, y);
    }
    while (!y.is_zero()) {
        IntPoly r = pseudo_remainder(x, y);
        x = std::move(y);
        y = r.is_zero() ? IntPoly() : r.primitive_part();
    }
    return normalized(x.primitive_part() * content_gcd);
}

}  // namespace gwa
