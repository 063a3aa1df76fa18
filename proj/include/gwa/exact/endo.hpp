#pragma once

#include "gwa/exact/polyfrac.hpp"

#include <stdexcept>
#include <vector>

namespace gwa {

// A ring endomorphism of S[v_1^±..v_n^±] given on variables: either an
// additive shift v_j -> v_j + c_j or a multiplicative scaling v_j -> s_j v_j.
template <class S>
struct EndoSpec {
    enum class Kind { shift, scale };

    Kind kind = Kind::shift;
    std::vector<S> values;

    static EndoSpec shift(std::vector<S> offsets) { return {Kind::shift, std::move(offsets)}; }
    static EndoSpec scale(std::vector<S> factors)
    {
        for (const auto& s : factors) {
            if (is_zero(s)) {
                throw std::invalid_argument("EndoSpec: zero scaling factor is not invertible");
            }
        }
        return {Kind::scale, std::move(factors)};
    }
    static EndoSpec identity(Kind kind, std::size_t n) { return {kind, std::vector<S>(n, kind == Kind::shift ? S(0) : S(1))}; }

    std::size_t nvars() const { return values.size(); }

    bool is_identity() const
    {
        for (const auto& v : values) {
            if (kind == Kind::shift ? !is_zero(v) : !is_one(v)) {
                return false;
            }
        }
        return true;
    }

    bool operator==(const EndoSpec&) const = default;
};

namespace detail {

inline Rational pow_scalar(const Rational& x, int k) { return pow_int(x, k); }
inline QScalar pow_scalar(const QScalar& x, int k) { return pow_int(x, k); }

template <class S>
void require_same_kind(const EndoSpec<S>& a, const EndoSpec<S>& b)
{
    if (a.kind != b.kind || a.nvars() != b.nvars()) {
        throw std::invalid_argument("EndoSpec: cannot combine endomorphisms of different kind or size");
    }
}

}  // namespace detail

/// a after b (both orders agree: shifts and scalings commute among themselves).
template <class S>
EndoSpec<S> compose(const EndoSpec<S>& a, const EndoSpec<S>& b)
{
    detail::require_same_kind(a, b);
    EndoSpec<S> r = a;
    for (std::size_t j = 0; j < r.values.size(); ++j) {
        if (r.kind == EndoSpec<S>::Kind::shift) {
            r.values[j] += b.values[j];
        } else {
            r.values[j] *= b.values[j];
        }
    }
    return r;
}

template <class S>
EndoSpec<S> power(const EndoSpec<S>& a, int k)
{
    EndoSpec<S> r = a;
    for (auto& v : r.values) {
        if (r.kind == EndoSpec<S>::Kind::shift) {
            v *= S(k);
        } else {
            v = detail::pow_scalar(v, k);
        }
    }
    return r;
}

template <class S>
EndoSpec<S> inverse(const EndoSpec<S>& a)
{
    return power(a, -1);
}

template <class S>
MLaurent<S> apply_endo(const MLaurent<S>& f, const EndoSpec<S>& spec)
{
    if (spec.nvars() != f.nvars()) {
        throw std::invalid_argument("apply_endo: endomorphism acts on " + std::to_string(spec.nvars()) +
                                    " variables, polynomial has " + std::to_string(f.nvars()));
    }
    if (spec.is_identity()) {
        return f;
    }
    const std::size_t n = f.nvars();
    MLaurent<S> out(n);
    if (spec.kind == EndoSpec<S>::Kind::scale) {
        for (const auto& [e, c] : f.terms()) {
            S factor = c;
            for (std::size_t j = 0; j < n; ++j) {
                if (e[j] != 0) {
                    factor *= detail::pow_scalar(spec.values[j], e[j]);
                }
            }
            out.add_term(e, factor);
        }
        return out;
    }
    // Shift: expand each (v_j + c_j)^k once and reuse.
    std::vector<std::vector<MLaurent<S>>> cache(n);
    auto binomial_power = [&](std::size_t j, int k) -> const MLaurent<S>& {
        auto& powers = cache[j];
        if (powers.empty()) {
            MLaurent<S> lin = MLaurent<S>::variable(n, j);
            lin += MLaurent<S>::constant(n, spec.values[j]);
            powers.push_back(MLaurent<S>::constant(n, S(1)));
            powers.push_back(std::move(lin));
        }
        while (static_cast<int>(powers.size()) <= k) {
            powers.push_back(powers.back() * powers[1]);
        }
        return powers[static_cast<std::size_t>(k)];
    };
    for (const auto& [e, c] : f.terms()) {
        MLaurent<S> term = MLaurent<S>::constant(n, c);
        Exponent untouched = zero_exponent(n);
        for (std::size_t j = 0; j < n; ++j) {
            if (e[j] == 0) {
                continue;
            }
            if (is_zero(spec.values[j])) {
                untouched[j] = e[j];
                continue;
            }
            if (e[j] < 0) {
                throw std::domain_error("apply_endo: additive shift of variable " + std::to_string(j + 1) +
                                        " applied to a negative power; the image is not a Laurent polynomial");
            }
            term = term * binomial_power(j, e[j]);
        }
        out += shift_exponents(term, untouched);
    }
    return out;
}

template <class S>
PolyFrac<S> apply_endo(const PolyFrac<S>& f, const EndoSpec<S>& spec)
{
    if (spec.is_identity()) {
        return f;
    }
    if (f.den().is_constant()) {
        return PolyFrac<S>(apply_endo(f.num(), spec)) * (S(1) / f.den().constant_term());
    }
    return PolyFrac<S>(apply_endo(f.num(), spec), apply_endo(f.den(), spec));
}

}  // namespace gwa
