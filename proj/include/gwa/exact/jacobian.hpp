#pragma once

#include "gwa/exact/polyfrac.hpp"

#include <stdexcept>
#include <vector>

namespace gwa {

template <class S>
using PolyMatrix = std::vector<std::vector<MLaurent<S>>>;

/// Matrix of formal partials d f_i / d x_j for n polynomials in n variables.
template <class S>
PolyMatrix<S> jacobian(const std::vector<MLaurent<S>>& fs)
{
    const std::size_t n = fs.size();
    PolyMatrix<S> jac(n);
    for (std::size_t i = 0; i < n; ++i) {
        if (fs[i].nvars() != n) {
            throw std::invalid_argument("jacobian: expected " + std::to_string(n) + " polynomials in " +
                                        std::to_string(n) + " variables, polynomial " + std::to_string(i + 1) +
                                        " has " + std::to_string(fs[i].nvars()));
        }
        jac[i].reserve(n);
        for (std::size_t j = 0; j < n; ++j) {
            jac[i].push_back(derivative(fs[i], j));
        }
    }
    return jac;
}

/// Determinant by Bareiss elimination; every division is exact.
template <class S>
MLaurent<S> determinant(PolyMatrix<S> m, std::size_t nvars)
{
    const std::size_t n = m.size();
    if (n == 0) {
        return MLaurent<S>::constant(nvars, S(1));
    }
    bool negate = false;
    MLaurent<S> prev = MLaurent<S>::constant(nvars, S(1));
    for (std::size_t k = 0; k + 1 < n; ++k) {
        if (m[k][k].is_zero()) {
            std::size_t swap_row = k + 1;
            while (swap_row < n && m[swap_row][k].is_zero()) {
                ++swap_row;
            }
            if (swap_row == n) {
                return MLaurent<S>(nvars);
            }
            std::swap(m[k], m[swap_row]);
            negate = !negate;
        }
        for (std::size_t i = k + 1; i < n; ++i) {
            for (std::size_t j = k + 1; j < n; ++j) {
                MLaurent<S> x = m[i][j] * m[k][k] - m[i][k] * m[k][j];
                auto q = exact_divide(x, prev);
                if (!q) {
                    throw std::logic_error("determinant: Bareiss step was not exact");
                }
                m[i][j] = std::move(*q);
            }
        }
        prev = m[k][k];
    }
    return negate ? -m[n - 1][n - 1] : m[n - 1][n - 1];
}

}  // namespace gwa
