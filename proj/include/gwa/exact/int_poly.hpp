#pragma once

#include "gwa/exact/numbers.hpp"

#include <string>
#include <vector>

namespace gwa {

// Dense univariate polynomial over the integers; coeffs()[k] multiplies x^k.
// No trailing zero coefficients are stored, so the zero polynomial is empty.
class IntPoly {
public:
    IntPoly() = default;
    IntPoly(long c);  // NOLINT(google-explicit-constructor)
    explicit IntPoly(const BigInt& c);
    explicit IntPoly(std::vector<BigInt> coeffs);

    static IntPoly monomial(const BigInt& c, int degree);

    const std::vector<BigInt>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const BigInt& leading() const { return coeffs_.back(); }
    bool is_constant() const { return coeffs_.size() <= 1; }
    bool is_monomial() const;
    /// Lowest power with a nonzero coefficient; -1 for zero.
    int valuation() const;

    BigInt content() const;
    IntPoly primitive_part() const;

    IntPoly operator-() const;
    IntPoly& operator+=(const IntPoly& other);
    IntPoly& operator-=(const IntPoly& other);
    friend IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
    friend IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }
    friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
    friend IntPoly operator*(IntPoly a, const BigInt& c);

    bool operator==(const IntPoly& other) const = default;

    std::string to_string(const std::string& var = "q") const;

private:
    void trim();
    std::vector<BigInt> coeffs_;
};

/// Pseudo-remainder of a by b: lc(b)^k * a mod b with k = deg a - deg b + 1.
IntPoly pseudo_remainder(IntPoly a, const IntPoly& b);

/// Exact quotient a / b; throws std::domain_error if b does not divide a over Z.
IntPoly exact_quotient(const IntPoly& a, const IntPoly& b);

/// Exact quotient by an integer constant.
IntPoly exact_quotient(const IntPoly& a, const BigInt& c);

/// gcd over Z[x], normalized to positive leading coefficient. gcd(0, 0) = 0.
IntPoly gcd(const IntPoly& a, const IntPoly& b);

}  // namespace gwa
