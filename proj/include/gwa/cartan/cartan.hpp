#pragma once

#include "gwa/exact/numbers.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwa {

/// Raised for malformed or non-symmetrizable matrices; the message names the
/// violated condition and a 1-based position.
class CartanError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

// A validated generalized Cartan matrix.
class CartanMatrix {
public:
    const IntMatrix& entries() const { return a_; }
    int n() const { return static_cast<int>(a_.rows()); }
    int operator()(int i, int j) const { return a_(i, j); }

private:
    friend CartanMatrix validate_gcm(const IntMatrix& m);
    IntMatrix a_;
};

// A pair with q^T C m = 1 against the bilinear form of C; distinct pairs are
// orthogonal.
struct DualPair {
    RationalVector q;
    IntVector m;
};

struct CartanAux {
    std::vector<int> d;
    int rank = 0;
    int corank = 0;
    RationalMatrix Q;
    RationalMatrix left_kernel;  // corank x n, rows w with w^T C = 0
    std::vector<DualPair> dual_pairs;
    std::vector<IntVector> torus_complement;  // right-kernel vectors; with the m_i a basis of Z^n
    std::vector<BigInt> g;
};

CartanMatrix validate_gcm(const IntMatrix& m);

/// Minimal positive symmetrizer, per connected component of the Dynkin graph.
std::vector<int> symmetrize(const CartanMatrix& c);

/// Checks a user-supplied symmetrizer; throws CartanError if it fails.
void check_symmetrizer(const CartanMatrix& c, const std::vector<int>& d);

/// Exact rank over Q (fraction-free elimination) and corank n - rank.
std::pair<int, int> rank_corank(const CartanMatrix& c);

/// Integer column echelon: returns unimodular U with C U = [H | 0], H having
/// `rank` nonzero columns.
Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic> column_echelon_transform(const IntMatrix& c, int* rank = nullptr);

/// Fills Q, left_kernel, dual_pairs and torus_complement.
void quasi_inverse(const CartanMatrix& c, CartanAux& aux);

/// g_j = lcm of denominators in column j of Q.
std::vector<BigInt> lattice_scaling(const RationalMatrix& q);

/// Everything the constructions need; `d_override` replaces the symmetrizer
/// after validation.
CartanAux analyze(const CartanMatrix& c, const std::optional<std::vector<int>>& d_override = std::nullopt);

/// Built-in matrices: A1, A2, A1xA1, A3, B2, G2, A1_1 (affine).
IntMatrix catalog_matrix(const std::string& name);
const std::vector<std::string>& catalog_names();
bool is_finite_catalog_entry(const std::string& name);

std::string matrix_to_string(const IntMatrix& m);
std::string matrix_to_string(const RationalMatrix& m);

}  // namespace gwa
