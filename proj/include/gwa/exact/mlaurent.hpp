#pragma once

#include "gwa/exact/numbers.hpp"
#include "gwa/exact/qscalar.hpp"

#include <algorithm>
#include <cstddef>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace gwa {

/// Exponent vector of a Laurent monomial; also used for torus degrees.
using Exponent = std::vector<int>;

inline Exponent zero_exponent(std::size_t n) { return Exponent(n, 0); }

inline Exponent unit_exponent(std::size_t n, std::size_t i, int power = 1)
{
    Exponent e(n, 0);
    e[i] = power;
    return e;
}

inline Exponent operator+(Exponent a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] += b[i];
    }
    return a;
}

inline Exponent operator-(Exponent a)
{
    for (auto& x : a) {
        x = -x;
    }
    return a;
}

inline Exponent operator-(Exponent a, const Exponent& b)
{
    for (std::size_t i = 0; i < a.size(); ++i) {
        a[i] -= b[i];
    }
    return a;
}

inline bool is_zero_exponent(const Exponent& e)
{
    return std::all_of(e.begin(), e.end(), [](int x) { return x == 0; });
}

inline std::string exponent_to_string(const Exponent& e)
{
    std::string s = "(";
    for (std::size_t i = 0; i < e.size(); ++i) {
        if (i != 0) {
            s += ",";
        }
        s += std::to_string(e[i]);
    }
    return s + ")";
}

// Multivariate Laurent polynomial with coefficients in a field S (Rational or
// QScalar). Ordinary polynomials are the case with non-negative exponents.
// Terms are keyed by exponent vector in lexicographic order; zero
// coefficients are never stored.
template <class S>
class MLaurent {
public:
    using scalar_type = S;
    using term_map = std::map<Exponent, S>;

    MLaurent() = default;
    explicit MLaurent(std::size_t nvars) : nvars_(nvars) {}

    static MLaurent constant(std::size_t nvars, const S& c)
    {
        MLaurent p(nvars);
        p.add_term(zero_exponent(nvars), c);
        return p;
    }

    static MLaurent variable(std::size_t nvars, std::size_t i, int power = 1)
    {
        MLaurent p(nvars);
        p.add_term(unit_exponent(nvars, i, power), S(1));
        return p;
    }

    static MLaurent monomial(const Exponent& e, const S& c)
    {
        MLaurent p(e.size());
        p.add_term(e, c);
        return p;
    }

    std::size_t nvars() const { return nvars_; }
    const term_map& terms() const { return terms_; }
    std::size_t size() const { return terms_.size(); }
    bool is_zero() const { return terms_.empty(); }

    bool is_constant() const
    {
        return terms_.empty() || (terms_.size() == 1 && is_zero_exponent(terms_.begin()->first));
    }

    S constant_term() const
    {
        auto it = terms_.find(zero_exponent(nvars_));
        return it == terms_.end() ? S(0) : it->second;
    }

    bool is_monomial() const { return terms_.size() == 1; }

    /// True when no exponent is negative.
    bool is_polynomial() const
    {
        for (const auto& [e, c] : terms_) {
            if (std::any_of(e.begin(), e.end(), [](int x) { return x < 0; })) {
                return false;
            }
        }
        return true;
    }

    /// Largest exponent of variable v; 0 for the zero polynomial.
    int degree_in(std::size_t v) const
    {
        int d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[v] > d) {
                d = e[v];
                first = false;
            }
        }
        return d;
    }

    /// Smallest exponent of variable v; 0 for the zero polynomial.
    int low_degree_in(std::size_t v) const
    {
        int d = 0;
        bool first = true;
        for (const auto& [e, c] : terms_) {
            if (first || e[v] < d) {
                d = e[v];
                first = false;
            }
        }
        return d;
    }

    int total_degree() const
    {
        int d = 0;
        for (const auto& [e, c] : terms_) {
            int s = 0;
            for (int x : e) {
                s += x;
            }
            d = std::max(d, s);
        }
        return d;
    }

    /// Lexicographically largest term. Precondition: nonzero.
    const std::pair<const Exponent, S>& leading_term() const { return *terms_.rbegin(); }

    void add_term(const Exponent& e, const S& c)
    {
        if (e.size() != nvars_) {
            throw std::invalid_argument("MLaurent: exponent length " + std::to_string(e.size()) +
                                        " does not match variable count " + std::to_string(nvars_));
        }
        if (gwa::is_zero(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(e, c);
        if (!inserted) {
            it->second += c;
            if (gwa::is_zero(it->second)) {
                terms_.erase(it);
            }
        }
    }

    MLaurent operator-() const
    {
        MLaurent r = *this;
        for (auto& [e, c] : r.terms_) {
            c = -c;
        }
        return r;
    }

    MLaurent& operator+=(const MLaurent& other)
    {
        check_same(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, c);
        }
        return *this;
    }

    MLaurent& operator-=(const MLaurent& other)
    {
        check_same(other);
        for (const auto& [e, c] : other.terms_) {
            add_term(e, -c);
        }
        return *this;
    }

    MLaurent& operator*=(const S& s)
    {
        if (gwa::is_zero(s)) {
            terms_.clear();
            return *this;
        }
        for (auto& [e, c] : terms_) {
            c *= s;
        }
        return *this;
    }

    friend MLaurent operator+(MLaurent a, const MLaurent& b) { return a += b; }
    friend MLaurent operator-(MLaurent a, const MLaurent& b) { return a -= b; }
    friend MLaurent operator*(MLaurent a, const S& s) { return a *= s; }
    friend MLaurent operator*(const S& s, MLaurent a) { return a *= s; }

    friend MLaurent operator*(const MLaurent& a, const MLaurent& b)
    {
        a.check_same(b);
        MLaurent r(a.nvars_);
        for (const auto& [ea, ca] : a.terms_) {
            for (const auto& [eb, cb] : b.terms_) {
                r.add_term(ea + eb, ca * cb);
            }
        }
        return r;
    }

    MLaurent& operator*=(const MLaurent& other) { return *this = *this * other; }

    bool operator==(const MLaurent& other) const = default;

private:
    void check_same(const MLaurent& other) const
    {
        if (other.nvars_ != nvars_) {
            throw std::invalid_argument("MLaurent: variable count mismatch (" + std::to_string(nvars_) +
                                        " vs " + std::to_string(other.nvars_) + ")");
        }
    }

    std::size_t nvars_ = 0;
    term_map terms_;
};

template <class S>
bool is_zero(const MLaurent<S>& p)
{
    return p.is_zero();
}

template <class S>
MLaurent<S> pow(const MLaurent<S>& p, int k)
{
    if (k < 0) {
        if (!p.is_monomial()) {
            throw std::domain_error("MLaurent: negative power of a non-monomial");
        }
        const auto& [e, c] = p.leading_term();
        Exponent inv = -e;
        return pow(MLaurent<S>::monomial(inv, S(1) / c), -k);
    }
    MLaurent<S> result = MLaurent<S>::constant(p.nvars(), S(1));
    MLaurent<S> base = p;
    auto n = static_cast<unsigned>(k);
    while (n != 0) {
        if (n & 1U) {
            result = result * base;
        }
        n >>= 1U;
        if (n != 0) {
            base = base * base;
        }
    }
    return result;
}

/// Formal partial derivative with respect to variable v.
template <class S>
MLaurent<S> derivative(const MLaurent<S>& p, std::size_t v)
{
    MLaurent<S> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] == 0) {
            continue;
        }
        Exponent f = e;
        f[v] -= 1;
        r.add_term(f, c * S(e[v]));
    }
    return r;
}

/// Coefficient of v^k, as a polynomial whose v-exponents are all zero.
template <class S>
MLaurent<S> coefficient_in(const MLaurent<S>& p, std::size_t v, int k)
{
    MLaurent<S> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        if (e[v] == k) {
            Exponent f = e;
            f[v] = 0;
            r.add_term(f, c);
        }
    }
    return r;
}

/// Multiplies by the monomial x^shift.
template <class S>
MLaurent<S> shift_exponents(const MLaurent<S>& p, const Exponent& shift)
{
    MLaurent<S> r(p.nvars());
    for (const auto& [e, c] : p.terms()) {
        r.add_term(e + shift, c);
    }
    return r;
}

/// Linear change of variables: x_u -> sum_v m(u, v) * y_v. The result has
/// m.cols() variables. Requires non-negative exponents.
template <class S>
MLaurent<S> substitute_linear(const MLaurent<S>& p, const RationalMatrix& m)
{
    if (static_cast<std::size_t>(m.rows()) != p.nvars()) {
        throw std::invalid_argument("substitute_linear: matrix rows do not match variable count");
    }
    const auto out_vars = static_cast<std::size_t>(m.cols());
    std::vector<MLaurent<S>> images;
    images.reserve(p.nvars());
    for (Eigen::Index u = 0; u < m.rows(); ++u) {
        MLaurent<S> img(out_vars);
        for (Eigen::Index v = 0; v < m.cols(); ++v) {
            img.add_term(unit_exponent(out_vars, static_cast<std::size_t>(v)), S(m(u, v)));
        }
        images.push_back(std::move(img));
    }
    MLaurent<S> r(out_vars);
    for (const auto& [e, c] : p.terms()) {
        MLaurent<S> term = MLaurent<S>::constant(out_vars, c);
        for (std::size_t u = 0; u < e.size(); ++u) {
            if (e[u] < 0) {
                throw std::domain_error("substitute_linear: negative exponent");
            }
            if (e[u] > 0) {
                term = term * pow(images[u], e[u]);
            }
        }
        r += term;
    }
    return r;
}

inline std::string scalar_factor_string(const Rational& c, bool& negative)
{
    negative = c < 0;
    return Rational(abs(c)).str();
}

inline std::string scalar_factor_string(const QScalar& c, bool& negative)
{
    negative = false;
    return c.to_string();
}

/// Human-readable rendering, highest lexicographic term first.
template <class S>
std::string to_string(const MLaurent<S>& p, const std::vector<std::string>& names)
{
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream out;
    bool first = true;
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const auto& [e, c] = *it;
        bool negative = false;
        std::string coeff = scalar_factor_string(c, negative);
        const bool compound = coeff.find_first_of(" +") != std::string::npos ||
                              coeff.find('-', 1) != std::string::npos;
        if (compound) {
            coeff = "(" + coeff + ")";
        }
        std::string mono;
        for (std::size_t v = 0; v < e.size(); ++v) {
            if (e[v] == 0) {
                continue;
            }
            if (!mono.empty()) {
                mono += "*";
            }
            mono += v < names.size() ? names[v] : "x" + std::to_string(v + 1);
            if (e[v] != 1) {
                mono += "^" + std::to_string(e[v]);
            }
        }
        if (first) {
            out << (negative ? "-" : "");
        } else {
            out << (negative ? " - " : " + ");
        }
        first = false;
        if (mono.empty()) {
            out << coeff;
        } else if (coeff == "1") {
            out << mono;
        } else {
            out << coeff << "*" << mono;
        }
    }
    return out.str();
}

/// Default variable names base1, base2, ...
inline std::vector<std::string> indexed_names(const std::string& base, std::size_t n)
{
    std::vector<std::string> names;
    names.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        names.push_back(base + std::to_string(i + 1));
    }
    return names;
}

}  // namespace gwa
