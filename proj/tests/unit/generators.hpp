#pragma once

// Hand-rolled random generators for property tests. Every generator takes the
// engine explicitly so each test case controls its own seed.

#include "gwa/exact/polyfrac.hpp"

#include <random>

namespace gwa::testing {

using Engine = std::mt19937_64;

inline int small_int(Engine& rng, int lo, int hi)
{
    return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Rational small_rational(Engine& rng, int bound = 5)
{
    const int num = small_int(rng, -bound, bound);
    const int den = small_int(rng, 1, bound);
    return Rational(num, den);
}

inline Rational nonzero_rational(Engine& rng, int bound = 5)
{
    Rational r;
    do {
        r = small_rational(rng, bound);
    } while (r.is_zero());
    return r;
}

inline IntPoly small_intpoly(Engine& rng, int max_degree = 3, int bound = 4)
{
    std::vector<BigInt> c;
    const int deg = small_int(rng, 0, max_degree);
    for (int k = 0; k <= deg; ++k) {
        c.emplace_back(small_int(rng, -bound, bound));
    }
    return IntPoly(std::move(c));
}

inline QScalar small_qscalar(Engine& rng)
{
    IntPoly den;
    do {
        den = small_intpoly(rng, 2, 3);
    } while (den.is_zero());
    return QScalar(small_intpoly(rng, 3, 4), den);
}

inline QScalar nonzero_qscalar(Engine& rng)
{
    QScalar x;
    do {
        x = small_qscalar(rng);
    } while (x.is_zero());
    return x;
}

template <class S>
S random_scalar(Engine& rng);

template <>
inline Rational random_scalar<Rational>(Engine& rng)
{
    return small_rational(rng);
}

template <>
inline QScalar random_scalar<QScalar>(Engine& rng)
{
    return small_qscalar(rng);
}

/// Random polynomial (or Laurent polynomial when min_exp < 0) with few terms.
template <class S>
MLaurent<S> random_poly(Engine& rng, std::size_t nvars, int max_terms = 4, int max_exp = 2, int min_exp = 0)
{
    MLaurent<S> p(nvars);
    const int terms = small_int(rng, 0, max_terms);
    for (int t = 0; t < terms; ++t) {
        Exponent e(nvars);
        for (auto& x : e) {
            x = small_int(rng, min_exp, max_exp);
        }
        p.add_term(e, random_scalar<S>(rng));
    }
    return p;
}

template <class S>
MLaurent<S> random_nonzero_poly(Engine& rng, std::size_t nvars, int max_terms = 3, int max_exp = 2)
{
    MLaurent<S> p(nvars);
    while (p.is_zero()) {
        p = random_poly<S>(rng, nvars, max_terms, max_exp);
    }
    return p;
}

}  // namespace gwa::testing
