#pragma once

#include "gwa/exact/int_poly.hpp"
#include "gwa/exact/numbers.hpp"

#include <optional>
#include <string>

namespace gwa {

// An element of the rational function field Q(q), stored as a reduced
// fraction of integer polynomials in q. The denominator has a positive
// leading coefficient, so structural equality is field equality.
class QScalar {
public:
    QScalar() : num_(0), den_(1) {}
    QScalar(long c) : num_(c), den_(1) {}  // NOLINT(google-explicit-constructor)
    explicit QScalar(const BigInt& c) : num_(c), den_(1) {}
    explicit QScalar(const Rational& c);
    QScalar(IntPoly num, IntPoly den);

    /// q^k for any integer k.
    static QScalar q_power(int k);
    static QScalar q() { return q_power(1); }

    const IntPoly& num() const { return num_; }
    const IntPoly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_ == den_; }

    /// If this equals c * q^k for rational c, returns k (and c via out-param).
    std::optional<int> q_monomial_exponent(Rational* coefficient = nullptr) const;

    QScalar inverse() const;

    QScalar operator-() const;
    QScalar& operator+=(const QScalar& other);
    QScalar& operator-=(const QScalar& other);
    QScalar& operator*=(const QScalar& other);
    QScalar& operator/=(const QScalar& other);
    friend QScalar operator+(QScalar a, const QScalar& b) { return a += b; }
    friend QScalar operator-(QScalar a, const QScalar& b) { return a -= b; }
    friend QScalar operator*(QScalar a, const QScalar& b) { return a *= b; }
    friend QScalar operator/(QScalar a, const QScalar& b) { return a /= b; }

    bool operator==(const QScalar& other) const = default;

    std::string to_string() const;

private:
    void canonicalize();
    IntPoly num_;
    IntPoly den_;
};

inline bool is_zero(const QScalar& x) { return x.is_zero(); }
inline bool is_one(const QScalar& x) { return x.is_one(); }
inline std::string to_string(const QScalar& x) { return x.to_string(); }

QScalar pow_int(const QScalar& x, int k);

/// Symmetric quantum integer [m]_v = (v^m - v^-m) / (v - v^-1) with v = q^step.
QScalar quantum_integer(int m, int step);

}  // namespace gwa
