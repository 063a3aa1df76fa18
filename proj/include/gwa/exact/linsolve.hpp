#pragma once

#include "gwa/exact/numbers.hpp"

#include <optional>

namespace gwa {

/// Exact Gauss-Jordan solve of A x = b; free variables are set to zero.
/// Returns nullopt when the system is inconsistent.
inline std::optional<RationalVector> solve_linear(RationalMatrix a, RationalVector b)
{
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    std::vector<Eigen::Index> pivots;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < cols && row < rows; ++col) {
        Eigen::Index p = row;
        while (p < rows && a(p, col).is_zero()) {
            ++p;
        }
        if (p == rows) {
            continue;
        }
        a.row(row).swap(a.row(p));
        std::swap(b(row), b(p));
        const Rational inv = Rational(1) / a(row, col);
        a.row(row) *= inv;
        b(row) *= inv;
        for (Eigen::Index k = 0; k < rows; ++k) {
            if (k != row && !a(k, col).is_zero()) {
                const Rational f = a(k, col);
                a.row(k) -= f * a.row(row);
                b(k) -= f * b(row);
            }
        }
        pivots.push_back(col);
        ++row;
    }
    for (Eigen::Index k = row; k < rows; ++k) {
        if (!b(k).is_zero()) {
            return std::nullopt;
        }
    }
    RationalVector x = RationalVector::Zero(cols);
    for (std::size_t k = 0; k < pivots.size(); ++k) {
        x(pivots[k]) = b(static_cast<Eigen::Index>(k));
    }
    return x;
}

}  // namespace gwa
