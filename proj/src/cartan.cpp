#include "gwa/cartan/cartan.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

namespace gwa {

using BigMatrix = Eigen::Matrix<BigInt, Eigen::Dynamic, Eigen::Dynamic>;

namespace {

std::string pos(int i, int j) { return "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")"; }

BigMatrix to_big(const IntMatrix& m) { return m.cast<BigInt>(); }

void swap_columns(BigMatrix& m, Eigen::Index a, Eigen::Index b)
{
    if (a != b) {
        m.col(a).swap(m.col(b));
    }
}

// Makes a vector primitive with positive first nonzero entry.
void normalize_primitive(Eigen::Matrix<BigInt, Eigen::Dynamic, 1>& v)
{
    BigInt g(0);
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        g = gcd(g, v(k));
    }
    if (g.is_zero()) {
        return;
    }
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        if (!v(k).is_zero()) {
            if (v(k) < 0) {
                g = -g;
            }
            break;
        }
    }
    for (Eigen::Index k = 0; k < v.size(); ++k) {
        v(k) /= g;
    }
}

int checked_int(const BigInt& x)
{
    if (x > BigInt(std::numeric_limits<int>::max()) || x < BigInt(std::numeric_limits<int>::min())) {
        throw std::overflow_error("cartan: lattice vector entry does not fit in int");
    }
    return x.convert_to<int>();
}

}  // namespace

CartanMatrix validate_gcm(const IntMatrix& m)
{
    if (m.rows() != m.cols()) {
        throw CartanError("not a square matrix: " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()));
    }
    if (m.rows() == 0) {
        throw CartanError("empty matrix");
    }
    const int n = static_cast<int>(m.rows());
    for (int i = 0; i < n; ++i) {
        if (m(i, i) != 2) {
            throw CartanError("diagonal entry at " + pos(i, i) + " is " + std::to_string(m(i, i)) + ", expected 2");
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && m(i, j) > 0) {
                throw CartanError("positive off-diagonal entry " + std::to_string(m(i, j)) + " at " + pos(i, j));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j && m(i, j) == 0 && m(j, i) != 0) {
                throw CartanError("zero-symmetry violated at " + pos(i, j) + ": entry is 0 but " + pos(j, i) +
                                  " is " + std::to_string(m(j, i)));
            }
        }
    }
    CartanMatrix c;
    c.a_ = m;
    return c;
}

std::vector<int> symmetrize(const CartanMatrix& c)
{
    const int n = c.n();
    std::vector<std::optional<Rational>> ratio(static_cast<std::size_t>(n));
    std::vector<int> component(static_cast<std::size_t>(n), -1);
    int components = 0;
    for (int root = 0; root < n; ++root) {
        if (ratio[root]) {
            continue;
        }
        ratio[root] = Rational(1);
        component[root] = components;
        std::deque<int> queue{root};
        while (!queue.empty()) {
            const int i = queue.front();
            queue.pop_front();
            for (int j = 0; j < n; ++j) {
                if (i == j || c(i, j) == 0) {
                    continue;
                }
                // d_i a_ij = d_j a_ji
                const Rational dj = *ratio[i] * Rational(c(i, j)) / Rational(c(j, i));
                if (!ratio[j]) {
                    ratio[j] = dj;
                    component[j] = components;
                    queue.push_back(j);
                } else if (*ratio[j] != dj) {
                    throw CartanError("not symmetrizable: inconsistent ratio around a cycle through " + pos(i, j));
                }
            }
        }
        ++components;
    }
    std::vector<int> d(static_cast<std::size_t>(n));
    for (int comp = 0; comp < components; ++comp) {
        BigInt den_lcm(1);
        for (int i = 0; i < n; ++i) {
            if (component[i] == comp) {
                den_lcm = lcm(den_lcm, denominator(*ratio[i]));
            }
        }
        BigInt num_gcd(0);
        for (int i = 0; i < n; ++i) {
            if (component[i] == comp) {
                num_gcd = gcd(num_gcd, BigInt(numerator(*ratio[i] * den_lcm)));
            }
        }
        for (int i = 0; i < n; ++i) {
            if (component[i] == comp) {
                d[i] = checked_int(BigInt(numerator(*ratio[i] * den_lcm)) / num_gcd);
            }
        }
    }
    return d;
}

void check_symmetrizer(const CartanMatrix& c, const std::vector<int>& d)
{
    const int n = c.n();
    if (static_cast<int>(d.size()) != n) {
        throw CartanError("symmetrizer has " + std::to_string(d.size()) + " entries, expected " + std::to_string(n));
    }
    for (int i = 0; i < n; ++i) {
        if (d[i] <= 0) {
            throw CartanError("symmetrizer entry " + std::to_string(i + 1) + " is not positive");
        }
        for (int j = 0; j < n; ++j) {
            if (d[i] * c(i, j) != d[j] * c(j, i)) {
                throw CartanError("symmetrizer fails d_i a_ij = d_j a_ji at " + pos(i, j));
            }
        }
    }
}

std::pair<int, int> rank_corank(const CartanMatrix& c)
{
    // Bareiss elimination with row pivoting; every division is exact.
    BigMatrix m = to_big(c.entries());
    const Eigen::Index n = m.rows();
    BigInt prev(1);
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < n && row < n; ++col) {
        Eigen::Index best = -1;
        for (Eigen::Index r = row; r < n; ++r) {
            if (!m(r, col).is_zero() && (best < 0 || abs(m(r, col)) > abs(m(best, col)))) {
                best = r;
            }
        }
        if (best < 0) {
            continue;
        }
        m.row(row).swap(m.row(best));
        for (Eigen::Index r = row + 1; r < n; ++r) {
            for (Eigen::Index k = col + 1; k < n; ++k) {
                m(r, k) = (m(r, k) * m(row, col) - m(r, col) * m(row, k)) / prev;
            }
            m(r, col) = 0;
        }
        prev = m(row, col);
        ++row;
    }
    const int r = static_cast<int>(row);
    return {r, c.n() - r};
}

BigMatrix column_echelon_transform(const IntMatrix& c, int* rank)
{
    BigMatrix a = to_big(c);
    const Eigen::Index rows = a.rows();
    const Eigen::Index cols = a.cols();
    BigMatrix u = BigMatrix::Identity(cols, cols);
    Eigen::Index piv = 0;
    for (Eigen::Index i = 0; i < rows && piv < cols; ++i) {
        for (Eigen::Index j = piv + 1; j < cols; ++j) {
            // Euclid on columns piv and j, mirrored on u.
            while (!a(i, j).is_zero()) {
                if (!a(i, piv).is_zero() && (a(i, j) % a(i, piv)).is_zero()) {
                    const BigInt q = a(i, j) / a(i, piv);
                    a.col(j) -= q * a.col(piv);
                    u.col(j) -= q * u.col(piv);
                    break;
                }
                const BigInt q = a(i, piv) / a(i, j);
                a.col(piv) -= q * a.col(j);
                u.col(piv) -= q * u.col(j);
                swap_columns(a, piv, j);
                swap_columns(u, piv, j);
            }
        }
        if (a(i, piv).is_zero()) {
            continue;
        }
        if (a(i, piv) < 0) {
            a.col(piv) = -a.col(piv);
            u.col(piv) = -u.col(piv);
        }
        ++piv;
    }
    if (rank != nullptr) {
        *rank = static_cast<int>(piv);
    }
    return u;
}

namespace {

// Solves A x = e_i for every i (A is r x n of full row rank) by Gauss-Jordan
// with first-maximal-|.| pivots; free variables are set to zero. Column i of
// the result is the solution for e_i.
RationalMatrix right_inverse(const RationalMatrix& a)
{
    const Eigen::Index r = a.rows();
    const Eigen::Index n = a.cols();
    RationalMatrix aug(r, n + r);
    aug << a, RationalMatrix::Identity(r, r);
    std::vector<Eigen::Index> pivot_col;
    Eigen::Index row = 0;
    for (Eigen::Index col = 0; col < n && row < r; ++col) {
        Eigen::Index best = -1;
        for (Eigen::Index k = row; k < r; ++k) {
            if (!aug(k, col).is_zero() && (best < 0 || abs(aug(k, col)) > abs(aug(best, col)))) {
                best = k;
            }
        }
        if (best < 0) {
            continue;
        }
        aug.row(row).swap(aug.row(best));
        const Rational p = aug(row, col);
        aug.row(row) /= p;
        for (Eigen::Index k = 0; k < r; ++k) {
            if (k != row && !aug(k, col).is_zero()) {
                const Rational f = aug(k, col);
                aug.row(k) -= f * aug.row(row);
            }
        }
        pivot_col.push_back(col);
        ++row;
    }
    if (row != r) {
        throw std::logic_error("dual pairs: pairing system is rank deficient");
    }
    RationalMatrix x = RationalMatrix::Zero(n, r);
    for (Eigen::Index k = 0; k < r; ++k) {
        for (Eigen::Index i = 0; i < r; ++i) {
            x(pivot_col[static_cast<std::size_t>(k)], i) = aug(k, n + i);
        }
    }
    return x;
}

}  // namespace

void quasi_inverse(const CartanMatrix& c, CartanAux& aux)
{
    const int n = c.n();
    int r = 0;
    BigMatrix u = column_echelon_transform(c.entries(), &r);
    const int ell = n - r;
    if (ell == 0) {
        u = BigMatrix::Identity(n, n);
    }
    aux.rank = r;
    aux.corank = ell;

    // m_i: first r columns of U; pairing system (C M)^T q = e_i.
    const BigMatrix big_c = to_big(c.entries());
    RationalMatrix cm_t(r, n);
    const BigMatrix cm = big_c * u.leftCols(r);
    for (int i = 0; i < r; ++i) {
        for (int k = 0; k < n; ++k) {
            cm_t(i, k) = Rational(cm(k, i));
        }
    }
    const RationalMatrix qs = r > 0 ? right_inverse(cm_t) : RationalMatrix(n, 0);
    aux.dual_pairs.clear();
    for (int i = 0; i < r; ++i) {
        DualPair p;
        p.q = qs.col(i);
        p.m = IntVector(n);
        for (int k = 0; k < n; ++k) {
            p.m(k) = checked_int(u(k, i));
        }
        aux.dual_pairs.push_back(std::move(p));
    }

    aux.torus_complement.clear();
    for (int k = r; k < n; ++k) {
        Eigen::Matrix<BigInt, Eigen::Dynamic, 1> v = u.col(k);
        normalize_primitive(v);
        IntVector iv(n);
        for (int t = 0; t < n; ++t) {
            iv(t) = checked_int(v(t));
        }
        aux.torus_complement.push_back(std::move(iv));
    }

    // Left kernel from the right kernel of C^T.
    int rt = 0;
    const BigMatrix v = column_echelon_transform(c.entries().transpose(), &rt);
    aux.left_kernel = RationalMatrix(ell, n);
    for (int k = 0; k < ell; ++k) {
        Eigen::Matrix<BigInt, Eigen::Dynamic, 1> w = v.col(rt + k);
        normalize_primitive(w);
        for (int t = 0; t < n; ++t) {
            aux.left_kernel(k, t) = Rational(w(t));
        }
    }

    aux.Q = RationalMatrix(n, n);
    for (int i = 0; i < r; ++i) {
        aux.Q.row(i) = aux.dual_pairs[static_cast<std::size_t>(i)].q.transpose();
    }
    for (int k = 0; k < ell; ++k) {
        aux.Q.row(r + k) = aux.left_kernel.row(k);
    }
}

std::vector<BigInt> lattice_scaling(const RationalMatrix& q)
{
    std::vector<BigInt> g(static_cast<std::size_t>(q.cols()), BigInt(1));
    for (Eigen::Index j = 0; j < q.cols(); ++j) {
        for (Eigen::Index i = 0; i < q.rows(); ++i) {
            g[static_cast<std::size_t>(j)] = lcm(g[static_cast<std::size_t>(j)], BigInt(denominator(q(i, j))));
        }
    }
    return g;
}

CartanAux analyze(const CartanMatrix& c, const std::optional<std::vector<int>>& d_override)
{
    CartanAux aux;
    if (d_override) {
        check_symmetrizer(c, *d_override);
        aux.d = *d_override;
    } else {
        aux.d = symmetrize(c);
    }
    const auto [r, ell] = rank_corank(c);
    quasi_inverse(c, aux);
    if (aux.rank != r || aux.corank != ell) {
        throw std::logic_error("cartan: rank from echelon form disagrees with Bareiss rank");
    }
    aux.g = lattice_scaling(aux.Q);
    return aux;
}

namespace {

const std::map<std::string, std::vector<std::vector<int>>>& catalog()
{
    static const std::map<std::string, std::vector<std::vector<int>>> entries = {
        {"A1", {{2}}},
        {"A2", {{2, -1}, {-1, 2}}},
        {"A1xA1", {{2, 0}, {0, 2}}},
        {"A3", {{2, -1, 0}, {-1, 2, -1}, {0, -1, 2}}},
        {"B2", {{2, -2}, {-1, 2}}},
        {"G2", {{2, -1}, {-3, 2}}},
        {"A1_1", {{2, -2}, {-2, 2}}},
    };
    return entries;
}

}  // namespace

IntMatrix catalog_matrix(const std::string& name)
{
    const auto it = catalog().find(name);
    if (it == catalog().end()) {
        std::string known;
        for (const auto& n : catalog_names()) {
            known += (known.empty() ? "" : ", ") + n;
        }
        throw CartanError("unknown catalog entry '" + name + "' (known: " + known + ")");
    }
    const auto& rows = it->second;
    const auto n = static_cast<Eigen::Index>(rows.size());
    IntMatrix m(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            m(i, j) = rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
        }
    }
    return m;
}

const std::vector<std::string>& catalog_names()
{
    static const std::vector<std::string> names = {"A1", "A2", "A1xA1", "A3", "B2", "G2", "A1_1"};
    return names;
}

bool is_finite_catalog_entry(const std::string& name) { return name != "A1_1" && catalog().count(name) != 0; }

std::string matrix_to_string(const IntMatrix& m)
{
    std::ostringstream out;
    out << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << (j ? "," : "") << m(i, j);
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

std::string matrix_to_string(const RationalMatrix& m)
{
    std::ostringstream out;
    out << "[";
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        out << (i ? ",[" : "[");
        for (Eigen::Index j = 0; j < m.cols(); ++j) {
            out << (j ? "," : "") << m(i, j).str();
        }
        out << "]";
    }
    out << "]";
    return out.str();
}

}  // namespace gwa
