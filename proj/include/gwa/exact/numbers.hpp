#pragma once

// Arbitrary-precision integers and rationals, plus the Eigen aliases used by
// the matrix-side code. Rational is a GMP rational behind Boost.Multiprecision
// so Eigen picks up NumTraits for free.

#include <Eigen/Core>
#include <boost/multiprecision/gmp.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <string>
#include <vector>

namespace gwa {

namespace mp = boost::multiprecision;

using BigInt = mp::number<mp::gmp_int, mp::et_off>;
using Rational = mp::number<mp::gmp_rational, mp::et_off>;

using IntMatrix = Eigen::Matrix<int, Eigen::Dynamic, Eigen::Dynamic>;
using IntVector = Eigen::Matrix<int, Eigen::Dynamic, 1>;
using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

inline bool is_zero(const Rational& x) { return x.is_zero(); }
inline bool is_one(const Rational& x) { return x == 1; }
inline std::string to_string(const Rational& x) { return x.str(); }
inline std::string to_string(const BigInt& x) { return x.str(); }

inline Rational pow_int(const Rational& x, int k)
{
    if (k < 0) {
        return pow_int(Rational(1) / x, -k);
    }
    Rational result(1);
    Rational base = x;
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

inline BigInt lcm(const BigInt& a, const BigInt& b)
{
    if (a.is_zero() || b.is_zero()) {
        return BigInt(0);
    }
    return abs(a / gcd(a, b) * b);
}

/// Parses "p", "-p" or "p/q".
Rational parse_rational(const std::string& text);

}  // namespace gwa
