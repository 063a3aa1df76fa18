#pragma once

#include "gwa/exact/mlaurent.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gwa {

/// Exact quotient a / b of polynomials (non-negative exponents) over a field,
/// or nullopt when b does not divide a.
template <class S>
std::optional<MLaurent<S>> exact_divide(const MLaurent<S>& a, const MLaurent<S>& b)
{
    if (b.is_zero()) {
        throw std::domain_error("exact_divide: division by the zero polynomial");
    }
    MLaurent<S> quotient(a.nvars());
    MLaurent<S> rest = a;
    const auto& [lead_b, coeff_b] = b.leading_term();
    while (!rest.is_zero()) {
        const auto& [lead_r, coeff_r] = rest.leading_term();
        Exponent shift = lead_r - lead_b;
        for (int x : shift) {
            if (x < 0) {
                return std::nullopt;
            }
        }
        MLaurent<S> t = MLaurent<S>::monomial(shift, coeff_r / coeff_b);
        quotient += t;
        rest -= t * b;
    }
    return quotient;
}

namespace detail {

template <class S>
MLaurent<S> make_monic(const MLaurent<S>& p)
{
    if (p.is_zero()) {
        return p;
    }
    return p * (S(1) / p.leading_term().second);
}

template <class S>
MLaurent<S> divide_or_throw(const MLaurent<S>& a, const MLaurent<S>& b)
{
    auto q = exact_divide(a, b);
    if (!q) {
        throw std::logic_error("polynomial gcd: expected exact division failed");
    }
    return *q;
}

template <class S>
MLaurent<S> pseudo_remainder_in(MLaurent<S> a, const MLaurent<S>& b, std::size_t v)
{
    const int db = b.degree_in(v);
    const MLaurent<S> lb = coefficient_in(b, v, db);
    while (!a.is_zero() && a.degree_in(v) >= db) {
        const int da = a.degree_in(v);
        MLaurent<S> la = coefficient_in(a, v, da);
        a = lb * a - shift_exponents(la, unit_exponent(a.nvars(), v, da - db)) * b;
    }
    return a;
}

template <class S>
MLaurent<S> gcd_from(const MLaurent<S>& a, const MLaurent<S>& b, std::size_t first_var);

// gcd of the coefficients of p viewed as a polynomial in v.
template <class S>
MLaurent<S> content_in(const MLaurent<S>& p, std::size_t v)
{
    MLaurent<S> g(p.nvars());
    for (int k = p.low_degree_in(v); k <= p.degree_in(v); ++k) {
        MLaurent<S> c = coefficient_in(p, v, k);
        if (c.is_zero()) {
            continue;
        }
        g = g.is_zero() ? make_monic(c) : gcd_from(g, c, v + 1);
        if (g.is_constant()) {
            break;
        }
    }
    return g;
}

template <class S>
MLaurent<S> primitive_in(const MLaurent<S>& p, std::size_t v)
{
    if (p.is_zero()) {
        return p;
    }
    return divide_or_throw(p, content_in(p, v));
}

// Recursive primitive-PRS gcd; variables below first_var are absent from a, b.
template <class S>
MLaurent<S> gcd_from(const MLaurent<S>& a, const MLaurent<S>& b, std::size_t first_var)
{
    if (a.is_zero()) {
        return make_monic(b);
    }
    if (b.is_zero()) {
        return make_monic(a);
    }
    if (a.is_constant() || b.is_constant()) {
        return MLaurent<S>::constant(a.nvars(), S(1));
    }
    std::size_t v = first_var;
    while (v < a.nvars() && a.degree_in(v) == 0 && b.degree_in(v) == 0) {
        ++v;
    }
    if (v == a.nvars()) {
        return MLaurent<S>::constant(a.nvars(), S(1));
    }
    if (a.degree_in(v) == 0) {
        return gcd_from(a, content_in(b, v), v + 1);
    }
    if (b.degree_in(v) == 0) {
        return gcd_from(content_in(a, v), b, v + 1);
    }
    const MLaurent<S> ca = content_in(a, v);
    const MLaurent<S> cb = content_in(b, v);
    const MLaurent<S> content = gcd_from(ca, cb, v + 1);
    MLaurent<S> x = make_monic(divide_or_throw(a, ca));
    MLaurent<S> y = make_monic(divide_or_throw(b, cb));
    if (x.degree_in(v) < y.degree_in(v)) {
        std::swap(x, y);
    }
    while (!y.is_zero() && y.degree_in(v) > 0) {
        MLaurent<S> r = pseudo_remainder_in(x, y, v);
        x = std::move(y);
        // Scalar normalization keeps rational coefficient growth in check.
        y = r.is_zero() ? r : make_monic(primitive_in(r, v));
    }
    MLaurent<S> g = y.is_zero() ? primitive_in(x, v) : MLaurent<S>::constant(a.nvars(), S(1));
    return make_monic(g * content);
}

}  // namespace detail

/// Greatest common divisor of two polynomials over a field, normalized so
/// that the lexicographically leading coefficient is 1.
template <class S>
MLaurent<S> poly_gcd(const MLaurent<S>& a, const MLaurent<S>& b)
{
    if (!a.is_polynomial() || !b.is_polynomial()) {
        throw std::domain_error("poly_gcd: arguments must have non-negative exponents");
    }
    if (a.is_monomial() || b.is_monomial()) {
        // gcd with a monomial is the common monomial factor of the other side.
        const MLaurent<S>& mono = a.is_monomial() ? a : b;
        const MLaurent<S>& other = a.is_monomial() ? b : a;
        if (other.is_zero()) {
            return detail::make_monic(mono);
        }
        Exponent common = mono.leading_term().first;
        for (const auto& [e, c] : other.terms()) {
            for (std::size_t i = 0; i < common.size(); ++i) {
                common[i] = std::min(common[i], e[i]);
            }
        }
        return MLaurent<S>::monomial(common, S(1));
    }
    return detail::gcd_from(a, b, 0);
}

// Element of the fraction field of S[x_1..x_n]. Stored reduced, with the
// denominator's lexicographically leading coefficient equal to 1, so equal
// fractions are structurally equal. Laurent inputs are cleared into the
// denominator on construction.
template <class S>
class PolyFrac {
public:
    using scalar_type = S;
    using poly_type = MLaurent<S>;

    PolyFrac() = default;
    explicit PolyFrac(std::size_t nvars) : num_(nvars), den_(poly_type::constant(nvars, S(1))) {}

    explicit PolyFrac(poly_type num) : num_(std::move(num)), den_(poly_type::constant(num_.nvars(), S(1)))
    {
        clear_negative_exponents();
        canonicalize();
    }

    PolyFrac(poly_type num, poly_type den) : num_(std::move(num)), den_(std::move(den))
    {
        if (den_.is_zero()) {
            throw std::domain_error("PolyFrac: zero denominator");
        }
        clear_negative_exponents();
        canonicalize();
    }

    static PolyFrac constant(std::size_t nvars, const S& c) { return PolyFrac(poly_type::constant(nvars, c)); }

    const poly_type& num() const { return num_; }
    const poly_type& den() const { return den_; }
    std::size_t nvars() const { return num_.nvars(); }
    bool is_zero() const { return num_.is_zero(); }
    bool is_polynomial() const { return den_.is_constant(); }

    PolyFrac inverse() const
    {
        if (is_zero()) {
            throw std::domain_error("PolyFrac: inverse of zero");
        }
        return PolyFrac(den_, num_);
    }

    PolyFrac operator-() const
    {
        PolyFrac r = *this;
        r.num_ = -r.num_;
        return r;
    }

    PolyFrac& operator+=(const PolyFrac& other)
    {
        if (den_ == other.den_) {
            num_ += other.num_;
            if (!den_.is_constant()) {
                canonicalize();
            }
            return *this;
        }
        num_ = num_ * other.den_ + other.num_ * den_;
        den_ = den_ * other.den_;
        canonicalize();
        return *this;
    }

    PolyFrac& operator-=(const PolyFrac& other) { return *this += -other; }

    PolyFrac& operator*=(const PolyFrac& other)
    {
        num_ = num_ * other.num_;
        if (den_.is_constant() && other.den_.is_constant()) {
            return *this;
        }
        den_ = den_ * other.den_;
        canonicalize();
        return *this;
    }

    PolyFrac& operator*=(const S& s)
    {
        num_ *= s;
        if (num_.is_zero()) {
            den_ = poly_type::constant(num_.nvars(), S(1));
        }
        return *this;
    }

    PolyFrac& operator/=(const PolyFrac& other) { return *this *= other.inverse(); }

    friend PolyFrac operator+(PolyFrac a, const PolyFrac& b) { return a += b; }
    friend PolyFrac operator-(PolyFrac a, const PolyFrac& b) { return a -= b; }
    friend PolyFrac operator*(PolyFrac a, const PolyFrac& b) { return a *= b; }
    friend PolyFrac operator*(PolyFrac a, const S& s) { return a *= s; }
    friend PolyFrac operator/(PolyFrac a, const PolyFrac& b) { return a /= b; }

    bool operator==(const PolyFrac& other) const = default;

private:
    void clear_negative_exponents()
    {
        Exponent shift = zero_exponent(num_.nvars());
        for (std::size_t v = 0; v < shift.size(); ++v) {
            shift[v] = std::max(0, std::max(-num_.low_degree_in(v), -den_.low_degree_in(v)));
        }
        if (!is_zero_exponent(shift)) {
            num_ = shift_exponents(num_, shift);
            den_ = shift_exponents(den_, shift);
        }
    }

    void canonicalize()
    {
        if (num_.is_zero()) {
            den_ = poly_type::constant(num_.nvars(), S(1));
            return;
        }
        if (!den_.is_constant()) {
            poly_type g = poly_gcd(num_, den_);
            if (!g.is_constant()) {
                num_ = detail::divide_or_throw(num_, g);
                den_ = detail::divide_or_throw(den_, g);
            }
        }
        const S lead = den_.leading_term().second;
        if (!is_one(lead)) {
            const S inv = S(1) / lead;
            num_ *= inv;
            den_ *= inv;
        }
    }

    poly_type num_;
    poly_type den_;
};

template <class S>
bool is_zero(const PolyFrac<S>& f)
{
    return f.is_zero();
}

template <class S>
std::string to_string(const PolyFrac<S>& f, const std::vector<std::string>& names)
{
    if (f.den().is_constant()) {
        return to_string(f.num(), names);
    }
    return "(" + to_string(f.num(), names) + ")/(" + to_string(f.den(), names) + ")";
}

}  // namespace gwa
