#pragma once

// Canonical Cartan data bound by a generalized Cartan matrix: the classical
// datum over k[h_1..h_n] with shifts h_j -> h_j + a_ji, and the quantum datum
// over k(q)[K^±] with scalings K_j -> q^(-d_i a_ij) K_j.

#include "gwa/cartan/cartan.hpp"
#include "gwa/check.hpp"
#include "gwa/skew/skew.hpp"

#include <memory>
#include <string>
#include <vector>

namespace gwa {

using HPoly = MLaurent<Rational>;
using KPoly = MLaurent<QScalar>;
using ClassicalCoeff = PolyFrac<Rational>;
using ClassicalContext = ModelContext<ClassicalCoeff>;
using QuantumContext = ModelContext<KPoly>;

class DatumError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

std::shared_ptr<const ClassicalContext> make_classical_context(const CartanMatrix& c);
std::shared_ptr<const QuantumContext> make_quantum_context(const CartanMatrix& c, const std::vector<int>& d);

/// sigma^m applied to a polynomial coefficient.
template <class R, class P>
P shift_by(const ModelContext<R>& ctx, const P& f, const Exponent& m)
{
    return is_zero_exponent(m) ? f : apply_endo(f, ctx.sigma_power(m));
}

/// (sigma^m - 1)^k f
template <class R, class P>
P diff_power(const ModelContext<R>& ctx, const Exponent& m, int k, P f)
{
    for (int s = 0; s < k; ++s) {
        f = shift_by(ctx, f, m) - f;
    }
    return f;
}

struct AlphaSystem {
    std::vector<HPoly> alpha;       // r pairing elements, D_{m_j}(alpha_i) = delta_ij
    std::vector<HPoly> gamma;       // corank central elements
    std::vector<Exponent> directions;  // m_1..m_r
};

struct BetaSolution {
    std::vector<HPoly> beta;        // in h-coordinates
    std::vector<HPoly> beta_alpha;  // in alpha-coordinates (corank 0 only)
    std::vector<HPoly> b;
    std::string method;
};

struct ClassicalDatum {
    std::shared_ptr<const ClassicalContext> context;
    IntMatrix a;
    int rank = 0;
    int corank = 0;
    AlphaSystem alpha;
    std::vector<HPoly> beta;
    std::vector<HPoly> b;
    std::string method;
};

AlphaSystem build_alpha(const CartanMatrix& c, const CartanAux& aux);

/// Minimal correction terms; throws DatumError if the ansatz cannot be met.
BetaSolution solve_beta(const CartanMatrix& c, const CartanAux& aux, const AlphaSystem& alpha);

ClassicalDatum build_classical_datum(const CartanMatrix& c, const CartanAux& aux);

/// The same datum with every beta replaced (used for negative controls).
ClassicalDatum with_beta(ClassicalDatum datum, const std::vector<HPoly>& beta);

/// D_i(b_i) = h_i, D_iD_j(b_j) = a_ji, D_i^(1-a_ij)(b_j) = 0, plus the
/// pairing and centrality identities of the alpha system.
CheckSection check_bound_classical(const ClassicalDatum& datum);

struct FullRank {
    bool independent = false;
    HPoly jacobian_det;
    std::string birational;  // "identity" or "not decided"
};

FullRank check_full_rank(const std::vector<HPoly>& system);
FullRank check_full_rank(const ClassicalDatum& datum);

struct QuantumDatum {
    std::shared_ptr<const QuantumContext> context;
    IntMatrix a;
    std::vector<int> d;
    int rank = 0;
    int corank = 0;
    std::vector<KPoly> b;                  // K_i^-1
    std::vector<KPoly> omega;              // Laurent K-monomials
    std::vector<Exponent> omega_exponents;  // K-exponents of omega_i
    std::vector<BigInt> g;                 // scaling used for omega
    std::vector<Exponent> directions;      // m_1..m_r, then the torus complement
};

QuantumDatum build_quantum_datum(const CartanMatrix& c, const CartanAux& aux);

/// qCS2 plainly, and the plain sigma-based reading of qCS1 (a documented
/// discrepancy for a_ij < 0).
CheckSection check_bound_quantum(const QuantumDatum& datum);

/// e_ij with sigma_{dir j}(omega_i) = q^(e_ij) omega_i.
std::vector<std::vector<int>> omega_scaling_table(const QuantumDatum& datum);

/// Compares the scaling table with q^(g_i delta_ij) on the pairing block and
/// 1 on the kernel block.
CheckSection check_omega(const QuantumDatum& datum);

}  // namespace gwa
