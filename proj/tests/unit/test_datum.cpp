#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "gwa/datum/datum.hpp"

using namespace gwa;
using gwa::testing::Engine;

namespace {

struct Built {
    CartanMatrix c;
    CartanAux aux;
};

Built built(const IntMatrix& m)
{
    const auto c = validate_gcm(m);
    return {c, analyze(c)};
}

HPoly h(std::size_t n, std::size_t i) { return HPoly::variable(n, i); }
HPoly cst(std::size_t n, Rational v) { return HPoly::constant(n, std::move(v)); }

const CheckEntry& entry(const CheckSection& s, const std::string& id)
{
    for (const auto& e : s.entries) {
        if (e.id == id) {
            return e;
        }
    }
    throw std::runtime_error("no entry " + id);
}

// Random symmetrizable GCM of size n: symmetric off-diagonal pattern scaled by
// a random symmetrizer, rejected until nondegenerate.
IntMatrix random_gcm(Engine& rng, int n)
{
    for (;;) {
        std::vector<int> d(static_cast<std::size_t>(n));
        for (auto& x : d) {
            x = gwa::testing::small_int(rng, 1, 2);
        }
        IntMatrix m = IntMatrix::Constant(n, n, 0);
        for (int i = 0; i < n; ++i) {
            m(i, i) = 2;
            for (int j = i + 1; j < n; ++j) {
                if (gwa::testing::small_int(rng, 0, 2) == 0) {
                    continue;
                }
                // d_i a_ij = d_j a_ji = -s * lcm-ish
                const int s = gwa::testing::small_int(rng, 1, 2);
                m(i, j) = -s * d[static_cast<std::size_t>(j)];
                m(j, i) = -s * d[static_cast<std::size_t>(i)];
            }
        }
        try {
            const auto c = validate_gcm(m);
            if (rank_corank(c).second == 0) {
                return m;
            }
        } catch (const CartanError&) {
        }
    }
}

}  // namespace

TEST_CASE("alpha coordinates")
{
    const auto a2 = built(catalog_matrix("A2"));
    const auto s = build_alpha(a2.c, a2.aux);
    CHECK(s.alpha[0] == (h(2, 0) * Rational(2) + h(2, 1)) * Rational(1, 3));
    CHECK(s.alpha[1] == (h(2, 0) + h(2, 1) * Rational(2)) * Rational(1, 3));
    CHECK(s.gamma.empty());

    const auto a1 = built(catalog_matrix("A1"));
    CHECK(build_alpha(a1.c, a1.aux).alpha[0] == h(1, 0) * Rational(1, 2));

    const auto aff = built(catalog_matrix("A1_1"));
    const auto sa = build_alpha(aff.c, aff.aux);
    REQUIRE(sa.gamma.size() == 1);
    CHECK(sa.gamma[0] == h(2, 0) + h(2, 1));
    const auto ctx = make_classical_context(aff.c);
    for (std::size_t i = 0; i < 2; ++i) {
        CHECK(diff_power(*ctx, unit_exponent(2, i), 1, sa.gamma[0]).is_zero());
    }
}

TEST_CASE("solve_beta examples")
{
    const auto a1 = built(catalog_matrix("A1"));
    const auto s1 = solve_beta(a1.c, a1.aux, build_alpha(a1.c, a1.aux));
    CHECK(s1.beta[0].is_zero());
    CHECK(s1.b[0] == h(1, 0) * (h(1, 0) - cst(1, 2)) * Rational(1, 4));

    const auto a2 = built(catalog_matrix("A2"));
    const auto s2 = solve_beta(a2.c, a2.aux, build_alpha(a2.c, a2.aux));
    CHECK(s2.beta_alpha[1] == HPoly::variable(2, 0, 2) * Rational(-1, 4));
    CHECK(s2.beta_alpha[0] == HPoly::variable(2, 1, 2) * Rational(-1, 4));
    const auto ctx = make_classical_context(a2.c);
    CHECK(diff_power(*ctx, unit_exponent(2, 0), 2, s2.b[1]).is_zero());

    const auto a11 = built(catalog_matrix("A1xA1"));
    const auto s11 = solve_beta(a11.c, a11.aux, build_alpha(a11.c, a11.aux));
    CHECK(s11.beta[0].is_zero());
    CHECK(s11.beta[1].is_zero());

    const auto aff = built(catalog_matrix("A1_1"));
    const auto saff = solve_beta(aff.c, aff.aux, build_alpha(aff.c, aff.aux));
    CHECK(saff.beta[0].is_zero());
    CHECK(saff.beta[1].is_zero());
}

TEST_CASE("bound conditions hold across the catalog")
{
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto b = built(catalog_matrix(name));
        const auto datum = build_classical_datum(b.c, b.aux);
        const auto report = check_bound_classical(datum);
        for (const auto& e : report.entries) {
            CAPTURE(e.id);
            CHECK(e.holds);
            CHECK(e.residual == "0");
        }
        CHECK(report.passed());
    }
}

TEST_CASE("beta never involves its own alpha and is minimal")
{
    for (const auto& name : {"A2", "B2", "G2", "A3"}) {
        CAPTURE(name);
        const auto b = built(catalog_matrix(name));
        const auto sol = solve_beta(b.c, b.aux, build_alpha(b.c, b.aux));
        const auto n = static_cast<std::size_t>(b.c.n());
        for (std::size_t j = 0; j < n; ++j) {
            CHECK(sol.beta_alpha[j].degree_in(j) <= 0);
        }
        const auto datum = build_classical_datum(b.c, b.aux);
        for (std::size_t j = 0; j < n; ++j) {
            for (const auto& [e, coef] : sol.beta_alpha[j].terms()) {
                HPoly reduced = sol.beta_alpha[j];
                reduced.add_term(e, -coef);
                auto beta = datum.beta;
                beta[j] = substitute_linear(reduced, b.aux.Q);
                CHECK_FALSE(check_bound_classical(with_beta(datum, beta)).passed());
            }
        }
    }
}

TEST_CASE("negative control: A2 with beta = 0")
{
    const auto b = built(catalog_matrix("A2"));
    const auto datum = with_beta(build_classical_datum(b.c, b.aux), {HPoly(2), HPoly(2)});
    const auto report = check_bound_classical(datum);
    CHECK_FALSE(report.passed());
    for (const auto& e : report.entries) {
        CAPTURE(e.id);
        if (e.id.rfind("CS1", 0) == 0) {
            CHECK_FALSE(e.holds);
            CHECK(e.residual == "1/2");
        } else {
            CHECK(e.holds);
        }
    }
}

TEST_CASE("full rank")
{
    const auto b = built(catalog_matrix("G2"));
    const auto fr = check_full_rank(build_classical_datum(b.c, b.aux));
    CHECK(fr.independent);
    CHECK(fr.birational == "identity");
    CHECK(fr.jacobian_det == cst(2, 1));

    const auto dep = check_full_rank({h(2, 0) + h(2, 1), h(2, 0) + h(2, 1)});
    CHECK_FALSE(dep.independent);

    const auto sq = check_full_rank({h(2, 0) * h(2, 0), h(2, 1)});
    CHECK(sq.independent);
    CHECK(sq.jacobian_det == h(2, 0) * Rational(2));
    CHECK(sq.birational == "not decided");
}

TEST_CASE("random nondegenerate GCMs carry a bound datum")
{
    Engine rng(41);
    for (int trial = 0; trial < 25; ++trial) {
        const int n = gwa::testing::small_int(rng, 2, 3);
        const auto m = random_gcm(rng, n);
        CAPTURE(matrix_to_string(m));
        const auto b = built(m);
        const auto datum = build_classical_datum(b.c, b.aux);
        CHECK(check_bound_classical(datum).passed());
        CHECK(check_full_rank(datum).birational == "identity");
    }
}

TEST_CASE("quantum datum: qCS2 and the plain qCS1 reading")
{
    const auto b = built(catalog_matrix("A2"));
    const auto qd = build_quantum_datum(b.c, b.aux);
    const auto report = check_bound_quantum(qd);
    CHECK(entry(report, "qCS2(1,2)").holds);
    CHECK(shift_by(*qd.context, qd.b[1], unit_exponent(2, 0)) == qd.b[1] * QScalar::q_power(-1));

    const auto& plain = entry(report, "qCS1-plain(1,2)");
    CHECK_FALSE(plain.holds);
    CHECK_FALSE(plain.expected);
    const KPoly expected = qd.b[1] * ((QScalar::q_power(-1) - QScalar(1)) * (QScalar::q_power(-1) - QScalar::q_power(2)));
    CHECK(q_divided_diff(*qd.context, 0, 2, qd.b[1], qd.d) == expected);

    const auto diag = built(catalog_matrix("A1xA1"));
    const auto qdiag = check_bound_quantum(build_quantum_datum(diag.c, diag.aux));
    CHECK(entry(qdiag, "qCS1-plain(1,2)").holds);
    CHECK(entry(qdiag, "qCS1-plain(1,2)").expected);

    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto bb = built(catalog_matrix(name));
        const auto r = check_bound_quantum(build_quantum_datum(bb.c, bb.aux));
        CHECK(r.passed());
        for (const auto& e : r.entries) {
            if (e.id.rfind("qCS1-plain", 0) == 0) {
                const int i = e.id[11] - '1';
                const int j = e.id[13] - '1';
                CHECK(e.holds == (bb.c(i, j) == 0));
            }
        }
    }
}

TEST_CASE("omega weights")
{
    const auto a2 = built(catalog_matrix("A2"));
    const auto qd = build_quantum_datum(a2.c, a2.aux);
    CHECK(qd.omega[0] == KPoly::monomial({-2, -1}, QScalar(1)));
    CHECK(qd.omega[1] == KPoly::monomial({-1, -2}, QScalar(1)));
    CHECK(qd.g == std::vector<BigInt>{3, 3});
    CHECK(omega_scaling_table(qd) == std::vector<std::vector<int>>{{3, 0}, {0, 3}});
    CHECK(check_omega(qd).passed());

    const auto a1 = built(catalog_matrix("A1"));
    const auto q1 = build_quantum_datum(a1.c, a1.aux);
    CHECK(q1.omega[0] == KPoly::variable(1, 0, -1));
    CHECK(omega_scaling_table(q1) == std::vector<std::vector<int>>{{2}});

    // The scaling table is always q^(d_i g_i delta_ij) on the pairing block and
    // trivial on the kernel block.
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto b = built(catalog_matrix(name));
        const auto d = build_quantum_datum(b.c, b.aux);
        const auto table = omega_scaling_table(d);
        for (std::size_t i = 0; i < table.size(); ++i) {
            for (std::size_t j = 0; j < table.size(); ++j) {
                const bool pairing = i == j && static_cast<int>(i) < d.rank;
                CHECK(table[i][j] == (pairing ? d.d[i] * static_cast<int>(d.g[i]) : 0));
            }
        }
        if (d.corank == 0) {
            CHECK(d.g == b.aux.g);
        }
    }
}
