#include "gwa/morphisms/morphisms.hpp"

namespace gwa {

namespace {

std::string idx(int i) { return std::to_string(i + 1); }
std::string pair_label(const std::string& tag, int i, int j) { return tag + "(" + idx(i) + "," + idx(j) + ")"; }

std::vector<std::string> family(const std::string& base, int n)
{
    std::vector<std::string> out;
    for (int i = 0; i < n; ++i) {
        out.push_back(base + idx(i));
    }
    return out;
}

template <class S>
std::vector<S> integer_twists(int steps)
{
    return std::vector<S>(static_cast<std::size_t>(steps), S(1));
}

// Shared shape of both classical Borel halves; `sign` is +1 for E, -1 for F.
Presentation<Rational> classical_borel(const CartanMatrix& c, const std::string& letter, int sign)
{
    const int n = c.n();
    Presentation<Rational> p;
    p.name = sign > 0 ? "borel-upper" : "borel-lower";
    p.generators = family("H", n);
    for (const auto& g : family(letter, n)) {
        p.generators.push_back(g);
    }
    auto H = [&](int i) { return NCPoly<Rational>::letter(i); };
    auto X = [&](int i) { return NCPoly<Rational>::letter(n + i); };
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            p.relations.push_back({pair_label("[H," + letter + "]", i, j),
                                   commutator(H(i), X(j)) - X(j).scaled(Rational(sign * c(i, j)))});
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            p.relations.push_back({pair_label("[H,H]", i, j), commutator(H(i), H(j))});
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                p.relations.push_back({pair_label("serre-" + letter, i, j),
                                       ad_iterated(X(i), X(j), integer_twists<Rational>(1 - c(i, j)))});
            }
        }
    }
    return p;
}

Presentation<QScalar> quantum_borel(const CartanMatrix& c, const std::vector<int>& d, const std::string& letter,
                                    int sign)
{
    const int n = c.n();
    Presentation<QScalar> p;
    p.name = sign > 0 ? "quantum-borel-upper" : "quantum-borel-lower";
    p.generators = family("K", n);
    for (const auto& g : family("Kinv", n)) {
        p.generators.push_back(g);
    }
    for (const auto& g : family(letter, n)) {
        p.generators.push_back(g);
    }
    for (int i = 0; i < n; ++i) {
        p.inverse_pairs.emplace_back(i, n + i);
    }
    using P = NCPoly<QScalar>;
    auto K = [&](int i) { return P::letter(i); };
    auto X = [&](int i) { return P::letter(2 * n + i); };
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            p.relations.push_back({pair_label("[K,K]", i, j), commutator(K(i), K(j))});
        }
    }
    // E_j K_i = q^(-d_i a_ij) K_i E_j ; F_j K_i = q^(d_i a_ij) K_i F_j
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            p.relations.push_back({pair_label(letter + "K", j, i),
                                   X(j) * K(i) - (K(i) * X(j)).scaled(QScalar::q_power(-sign * d[i] * c(i, j)))});
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i != j) {
                p.relations.push_back({pair_label("qserre-" + letter, i, j),
                                       ad_iterated(X(i), X(j), serre_twists(c(i, j), d[i], sign))});
            }
        }
    }
    return p;
}

template <class S>
Presentation<S> weyl_shape(const std::string& name, int m, int n, int central)
{
    if (m < 0 || n < m || central < 0) {
        throw std::invalid_argument("weyl: need 0 <= m <= n and central >= 0");
    }
    Presentation<S> p;
    p.name = name;
    p.generators = family("x", m);
    for (const auto& g : family("y", n)) {
        p.generators.push_back(g);
    }
    for (const auto& g : family("z", central)) {
        p.generators.push_back(g);
    }
    auto L = [](int k) { return NCPoly<S>::letter(k); };
    for (int i = 0; i < m; ++i) {
        for (int i2 = i + 1; i2 < m; ++i2) {
            p.relations.push_back({pair_label("[x,x]", i, i2), commutator(L(i), L(i2))});
        }
    }
    for (int j = 0; j < n; ++j) {
        for (int j2 = j + 1; j2 < n; ++j2) {
            p.relations.push_back({pair_label("[y,y]", j, j2), commutator(L(m + j), L(m + j2))});
        }
    }
    const int total = m + n + central;
    for (int k = 0; k < central; ++k) {
        for (int g = 0; g < total; ++g) {
            if (g != m + n + k) {
                p.relations.push_back({"central(z" + idx(k) + "," + p.generators[static_cast<std::size_t>(g)] + ")",
                                       commutator(L(m + n + k), L(g))});
            }
        }
    }
    return p;
}

HPoly theta(const HPoly& f)
{
    const auto n = static_cast<Eigen::Index>(f.nvars());
    return substitute_linear(f, RationalMatrix(-RationalMatrix::Identity(n, n)));
}

Exponent negated(const Exponent& e)
{
    Exponent r = e;
    for (auto& x : r) {
        x = -x;
    }
    return r;
}

std::vector<Exponent> exponent_box(std::size_t n, int radius)
{
    std::vector<Exponent> out{zero_exponent(n)};
    Exponent e(n, -radius);
    for (;;) {
        if (!is_zero_exponent(e)) {
            out.push_back(e);
        }
        std::size_t k = 0;
        while (k < n && e[k] == radius) {
            e[k] = -radius;
            ++k;
        }
        if (k == n) {
            break;
        }
        ++e[k];
    }
    return out;
}

}  // namespace

std::vector<QScalar> serre_twists(int aij, int di, int sign)
{
    std::vector<QScalar> t;
    for (int k = 0; k <= -aij; ++k) {
        t.push_back(QScalar::q_power(sign * di * (aij + 2 * k)));
    }
    return t;
}

Presentation<Rational> borel_upper(const CartanMatrix& c) { return classical_borel(c, "E", 1); }
Presentation<Rational> borel_lower(const CartanMatrix& c) { return classical_borel(c, "F", -1); }

Presentation<Rational> weyl(int m, int n, int central)
{
    auto p = weyl_shape<Rational>("weyl", m, n, central);
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            auto rel = commutator(NCPoly<Rational>::letter(i), NCPoly<Rational>::letter(m + j));
            if (i == j) {
                rel -= NCPoly<Rational>::constant(Rational(1));
            }
            p.relations.push_back({pair_label("[x,y]", i, j), rel});
        }
    }
    return p;
}

Presentation<QScalar> quantum_weyl(int m, int n, const std::vector<BigInt>& g, int central)
{
    if (static_cast<int>(g.size()) < m) {
        throw std::invalid_argument("quantum_weyl: need a scaling for every x");
    }
    auto p = weyl_shape<QScalar>("quantum-weyl", m, n, central);
    using P = NCPoly<QScalar>;
    for (int i = 0; i < m; ++i) {
        for (int j = 0; j < n; ++j) {
            const int e = i == j ? static_cast<int>(g[static_cast<std::size_t>(i)]) : 0;
            p.relations.push_back({pair_label("yx", j, i),
                                   P::letter(m + j) * P::letter(i) - (P::letter(i) * P::letter(m + j)).scaled(QScalar::q_power(e))});
        }
    }
    return p;
}

Presentation<QScalar> quantum_borel_upper(const CartanMatrix& c, const std::vector<int>& d)
{
    return quantum_borel(c, d, "E", 1);
}

Presentation<QScalar> quantum_borel_lower(const CartanMatrix& c, const std::vector<int>& d)
{
    return quantum_borel(c, d, "F", -1);
}

GeneratorAssignment<ClassicalCoeff> borel_upper_assignment(const CartanMatrix& c, const ClassicalDatum& datum)
{
    const auto n = static_cast<std::size_t>(c.n());
    GeneratorAssignment<ClassicalCoeff> a;
    a.presentation = borel_upper(c);
    a.context = datum.context;
    using E = SkewElem<ClassicalCoeff>;
    for (std::size_t i = 0; i < n; ++i) {
        a.images.push_back(E::coefficient(a.context, ClassicalCoeff(HPoly::variable(n, i))));
    }
    for (std::size_t i = 0; i < n; ++i) {
        a.images.push_back(E::term(a.context, ClassicalCoeff(datum.b[i]), unit_exponent(n, i, -1)));
    }
    a.localize = a.images;
    a.conventions.push_back("H_i -> h_i, E_i -> b_i t_i^-1");
    return a;
}

GeneratorAssignment<ClassicalCoeff> borel_lower_assignment(const CartanMatrix& c, const ClassicalDatum& datum)
{
    const auto n = static_cast<std::size_t>(c.n());
    GeneratorAssignment<ClassicalCoeff> a;
    a.presentation = borel_lower(c);
    a.context = datum.context;
    using E = SkewElem<ClassicalCoeff>;
    for (std::size_t i = 0; i < n; ++i) {
        a.images.push_back(E::coefficient(a.context, ClassicalCoeff(HPoly::variable(n, i))));
    }
    for (std::size_t i = 0; i < n; ++i) {
        a.images.push_back(E::term(a.context, ClassicalCoeff(theta(datum.b[i])), unit_exponent(n, i)));
    }
    a.localize = a.images;
    a.conventions.push_back("H_i -> h_i, F_i -> theta(b_i) t_i with theta(h) = -h");
    return a;
}

GeneratorAssignment<ClassicalCoeff> weyl_assignment(const ClassicalDatum& datum, const CartanAux& aux)
{
    const auto n = datum.context->nvars();
    const int r = datum.rank;
    const int ell = datum.corank;
    GeneratorAssignment<ClassicalCoeff> a;
    a.presentation = weyl(r, static_cast<int>(n), ell);
    a.context = datum.context;
    using E = SkewElem<ClassicalCoeff>;
    const auto& dirs = datum.alpha.directions;
    for (int i = 0; i < r; ++i) {
        const auto k = static_cast<std::size_t>(i);
        a.images.push_back(E::term(a.context, ClassicalCoeff(datum.alpha.alpha[k]), negated(dirs[k])));
    }
    for (int i = 0; i < r; ++i) {
        a.images.push_back(-E::torus(a.context, dirs[static_cast<std::size_t>(i)]));
    }
    for (int k = 0; k < ell; ++k) {
        const auto& u = aux.torus_complement[static_cast<std::size_t>(k)];
        Exponent e(n);
        for (std::size_t t = 0; t < n; ++t) {
            e[t] = u(static_cast<Eigen::Index>(t));
        }
        a.images.push_back(-E::torus(a.context, e));
    }
    for (int k = 0; k < ell; ++k) {
        a.images.push_back(E::coefficient(a.context, ClassicalCoeff(datum.alpha.gamma[static_cast<std::size_t>(k)])));
    }
    for (std::size_t i = 0; i < n; ++i) {
        a.localize.push_back(E::coefficient(a.context, ClassicalCoeff(HPoly::variable(n, i))));
    }
    a.conventions.push_back("x_i -> alpha_i t^(-m_i), y_i -> -t^(m_i)");
    if (ell > 0) {
        a.conventions.push_back("corank " + std::to_string(ell) +
                                ": D_i(alpha_j) = delta_ij cannot hold along every coordinate direction; alpha pairs "
                                "with the directions m_i, extra y's use the torus complement, and z_k -> gamma_k is central");
    }
    return a;
}

WitnessBasis<ClassicalCoeff> classical_witness_basis(const ClassicalDatum& datum)
{
    const auto& ctx = *datum.context;
    const auto n = ctx.nvars();
    WitnessBasis<ClassicalCoeff> basis;
    for (const auto& m : exponent_box(n, 2)) {
        const std::string tag = is_zero_exponent(m) ? "" : "sigma^" + exponent_to_string(m);
        auto wrap = [&](const std::string& s) { return tag.empty() ? s : tag + "(" + s + ")"; };
        for (std::size_t j = 0; j < n; ++j) {
            basis.factors.emplace_back(wrap("b" + idx(static_cast<int>(j))), shift_by(ctx, datum.b[j], m));
            basis.factors.emplace_back(wrap("theta(b" + idx(static_cast<int>(j)) + ")"),
                                       shift_by(ctx, theta(datum.b[j]), m));
            basis.factors.emplace_back(wrap("h" + idx(static_cast<int>(j))), shift_by(ctx, HPoly::variable(n, j), m));
        }
    }
    return basis;
}

WitnessBasis<KPoly> quantum_witness_basis()
{
    WitnessBasis<KPoly> b;
    b.units_only = true;
    return b;
}

GeneratorAssignment<KPoly> quantum_borel_assignment(const CartanMatrix& c, const QuantumDatum& qd, bool upper,
                                                    const std::vector<int>& signs)
{
    const auto n = static_cast<std::size_t>(c.n());
    GeneratorAssignment<KPoly> a;
    a.presentation = upper ? quantum_borel_upper(c, qd.d) : quantum_borel_lower(c, qd.d);
    a.context = qd.context;
    using E = SkewElem<KPoly>;
    for (std::size_t i = 0; i < n; ++i) {
        a.images.push_back(E::coefficient(a.context, KPoly::variable(n, i)));
    }
    for (std::size_t i = 0; i < n; ++i) {
        a.images.push_back(E::coefficient(a.context, KPoly::variable(n, i, -1)));
    }
    std::string s;
    for (std::size_t i = 0; i < n; ++i) {
        a.images.push_back(E::term(a.context, qd.b[i], unit_exponent(n, i, signs.at(i))));
        s += (i ? "," : "") + std::to_string(signs[i]);
    }
    for (std::size_t i = 0; i < n; ++i) {
        a.localize.push_back(a.images[2 * n + i]);
    }
    a.conventions.push_back(std::string(upper ? "E" : "F") + "_i -> K_i^-1 t_i^(s_i), s = (" + s + ")");
    return a;
}

Orientation fix_orientation(const CartanMatrix& c, const QuantumDatum& qd, bool upper)
{
    const auto n = static_cast<std::size_t>(c.n());
    const std::string tag = upper ? "EK" : "FK";
    Orientation o;
    std::vector<int> signs(n, -1);
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
        for (std::size_t i = 0; i < n; ++i) {
            signs[i] = (mask >> i) & 1U ? 1 : -1;
        }
        const auto a = quantum_borel_assignment(c, qd, upper, signs);
        bool ok = true;
        std::string first_failure;
        for (const auto& rel : a.presentation.relations) {
            if (rel.label.rfind(tag, 0) == 0) {
                const auto img = evaluate_word(a, rel.poly);
                if (!img.is_zero()) {
                    ok = false;
                    if (first_failure.empty()) {
                        first_failure = rel.label + " residual " + img.to_string();
                    }
                }
            }
        }
        const bool uniform = mask == 0 || mask + 1 == (std::size_t{1} << n);
        if (uniform) {
            o.notes.push_back("orientation s = " + std::string(mask == 0 ? "-1" : "+1") + " throughout: " +
                              (ok ? "K-relations hold" : "fails, " + first_failure));
        }
        if (ok) {
            o.candidates.push_back(signs);
        }
    }
    if (o.candidates.size() == 1) {
        o.signs = o.candidates.front();
    } else if (o.candidates.size() > 1) {
        o.notes.push_back(std::to_string(o.candidates.size()) + " sign vectors satisfy the K-relations; not unique");
    } else {
        o.notes.push_back("no sign vector satisfies the K-relations");
    }
    return o;
}

GeneratorAssignment<KPoly> quantum_weyl_assignment(const QuantumDatum& qd)
{
    const auto n = qd.context->nvars();
    const int r = qd.rank;
    const int ell = qd.corank;
    GeneratorAssignment<KPoly> a;
    a.presentation = quantum_weyl(r, static_cast<int>(n), qd.g, ell);
    a.context = qd.context;
    using E = SkewElem<KPoly>;
    for (int i = 0; i < r; ++i) {
        const auto k = static_cast<std::size_t>(i);
        a.images.push_back(E::term(a.context, qd.omega[k], negated(qd.directions[k])));
    }
    for (std::size_t j = 0; j < n; ++j) {
        a.images.push_back(E::torus(a.context, qd.directions[j]));
    }
    for (int k = 0; k < ell; ++k) {
        a.images.push_back(E::coefficient(a.context, qd.omega[static_cast<std::size_t>(r + k)]));
    }
    for (int i = 0; i < r; ++i) {
        a.localize.push_back(a.images[static_cast<std::size_t>(i)]);
    }
    a.conventions.push_back("x_i -> omega_i t^(-m_i), y_j -> t^(m_j)");
    if (ell > 0) {
        a.conventions.push_back("corank " + std::to_string(ell) + ": z_k -> omega_(r+k), central");
    }
    return a;
}

CheckSection check_localized(const CartanMatrix& c, const QuantumDatum& qd, const GeneratorAssignment<KPoly>& a,
                             bool upper)
{
    const int n = c.n();
    using E = SkewElem<KPoly>;
    const auto& ctx = a.context;
    CheckSection s;
    s.name = upper ? "localized-upper" : "localized-lower";
    s.evidences = "localized q-Chevalley-Serre relations on the image generators";
    const std::string X = upper ? "E" : "F";
    auto x = [&](int i) { return a.images.at(static_cast<std::size_t>(2 * n + i)); };
    auto kinv_x = [&](int i) {
        return E::coefficient(ctx, KPoly::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(i), -1)) * x(i);
    };
    DenominatorLog<KPoly> log;
    const int sign = upper ? -1 : 1;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const E ki = E::coefficient(ctx, KPoly::variable(static_cast<std::size_t>(n), static_cast<std::size_t>(i)));
            const E r = conjugate(kinv_x(j), ki, log) - ki.scaled(QScalar::q_power(sign * qd.d[i] * c(i, j)));
            s.add(pair_label("loc-qCS2", i, j),
                  "Ad(K_j^-1 " + X + "_j)(K_i) = q^(" + std::string(upper ? "-" : "") + "d_i a_ij) K_i", r.is_zero(),
                  r.to_string());
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const E u = kinv_x(i);
            E y = x(j);
            for (int l = 0; l <= -c(i, j); ++l) {
                y = conjugate(u, y, log) - y.scaled(QScalar::q_power(2 * l * qd.d[i]));
            }
            s.add(pair_label("loc-qCS1", i, j),
                  "prod_l (Ad(K_i^-1 " + X + "_i) - q^(2 l d_i))(" + X + "_j) = 0", y.is_zero(), y.to_string());
            if (!upper && !y.is_zero()) {
                E m = x(j);
                for (int l = 0; l <= -c(i, j); ++l) {
                    m = conjugate(u, m, log) - m.scaled(QScalar::q_power(-2 * l * qd.d[i]));
                }
                s.notes.push_back(pair_label("loc-qCS1", i, j) + " with q^(-2 l d_i) instead: " +
                                  (m.is_zero() ? "holds" : "residual " + m.to_string()));
            }
        }
    }
    return s;
}

}  // namespace gwa
