#pragma once

// Presentations as relation lists over free algebras, generator assignments
// into the skew Laurent model, and exact verification of relation images.

#include "gwa/biproduct/ncpoly.hpp"
#include "gwa/datum/datum.hpp"

#include <optional>
#include <string>
#include <vector>

namespace gwa {

template <class S>
struct Relation {
    std::string label;
    NCPoly<S> poly;
};

template <class S>
struct Presentation {
    std::string name;
    std::vector<std::string> generators;
    std::vector<std::pair<int, int>> inverse_pairs;  // (g, g^-1)
    std::vector<Relation<S>> relations;

    int index(const std::string& g) const
    {
        for (std::size_t k = 0; k < generators.size(); ++k) {
            if (generators[k] == g) {
                return static_cast<int>(k);
            }
        }
        throw std::invalid_argument("presentation " + name + ": unknown generator " + g);
    }
    NCPoly<S> gen(const std::string& g) const { return NCPoly<S>::letter(index(g)); }
};

/// Upper Borel half: [H_i,E_j] = a_ij E_j, [H_i,H_j] = 0, ad(E_i)^(1-a_ij)(E_j) = 0.
Presentation<Rational> borel_upper(const CartanMatrix& c);
/// Lower Borel half: [H_i,F_j] = -a_ij F_j, [H_i,H_j] = 0, ad(F_i)^(1-a_ij)(F_j) = 0.
Presentation<Rational> borel_lower(const CartanMatrix& c);
/// x_1..x_m, y_1..y_n, central z_1..z_k with [x_i,y_j] = delta_ij.
Presentation<Rational> weyl(int m, int n, int central = 0);
/// y_j x_i = q^(g_i delta_ij) x_i y_j; x's and y's commute among themselves.
Presentation<QScalar> quantum_weyl(int m, int n, const std::vector<BigInt>& g, int central = 0);
/// K_i^±1 and E_i: E_j K_i = q^(-d_i a_ij) K_i E_j and twisted Serre relations.
Presentation<QScalar> quantum_borel_upper(const CartanMatrix& c, const std::vector<int>& d);
/// K_i^±1 and F_i: F_j K_i = q^(d_i a_ij) K_i F_j and twisted Serre relations.
Presentation<QScalar> quantum_borel_lower(const CartanMatrix& c, const std::vector<int>& d);

/// The twist exponents of the iterated ad_q(E_i)^(1-a_ij)(E_j) (sign -1 for F).
std::vector<QScalar> serre_twists(int aij, int di, int sign);

template <class R>
struct GeneratorAssignment {
    using scalar = typename ModelContext<R>::scalar;

    Presentation<scalar> presentation;
    std::shared_ptr<const ModelContext<R>> context;
    std::vector<SkewElem<R>> images;    // indexed like presentation.generators
    std::vector<SkewElem<R>> localize;  // elements inverted for the birational witness
    std::vector<std::string> conventions;
};

template <class R>
SkewElem<R> evaluate_word(const GeneratorAssignment<R>& a, const NCPoly<typename ModelContext<R>::scalar>& p)
{
    if (a.images.size() != a.presentation.generators.size()) {
        throw std::invalid_argument("evaluate_word: assignment does not cover every generator");
    }
    SkewElem<R> result(a.context);
    for (const auto& [w, c] : p.terms()) {
        SkewElem<R> t = SkewElem<R>::one(a.context);
        for (int g : w) {
            const auto& img = a.images.at(static_cast<std::size_t>(g));
            if (!img.context()) {
                throw std::invalid_argument("evaluate_word: unassigned generator " +
                                            a.presentation.generators.at(static_cast<std::size_t>(g)));
            }
            t = t * img;
        }
        result += t.scaled(c);
    }
    return result;
}

/// Multiplicative generators allowed in a birational witness, with names.
template <class R>
struct WitnessBasis {
    std::vector<std::pair<std::string, MLaurent<typename ModelContext<R>::scalar>>> factors;
    bool units_only = false;  // quantum: every denominator must be a torus unit
};

struct WitnessResult {
    bool ok = true;
    std::vector<std::string> lines;
};

/// Factors every logged denominator into the basis (trial division).
template <class R>
WitnessResult birational_witness(const DenominatorLog<R>& log, const WitnessBasis<R>& basis,
                                 const std::vector<std::string>& names)
{
    using P = MLaurent<typename ModelContext<R>::scalar>;
    WitnessResult res;
    auto factor_one = [&](const P& f, std::string& out) {
        if (f.is_constant()) {
            out = "constant";
            return true;
        }
        if (basis.units_only) {
            const bool unit = f.is_monomial();
            out = (unit ? "unit " : "non-unit ") + to_string(f, names);
            return unit;
        }
        P rest = f;
        std::vector<std::string> used;
        bool progress = true;
        while (!rest.is_constant() && progress) {
            progress = false;
            for (const auto& [label, g] : basis.factors) {
                if (g.is_constant()) {
                    continue;
                }
                if (auto q = exact_divide(rest, g)) {
                    rest = *q;
                    used.push_back(label);
                    progress = true;
                    break;
                }
            }
        }
        out.clear();
        for (const auto& u : used) {
            out += (out.empty() ? "" : " * ") + u;
        }
        if (!rest.is_constant()) {
            out += (out.empty() ? "" : " * ") + std::string("UNFACTORED(") + to_string(rest, names) + ")";
            return false;
        }
        if (out.empty()) {
            out = "constant";
        }
        return true;
    };
    for (const auto& entry : log.entries) {
        std::string line;
        bool ok = true;
        if constexpr (std::is_same_v<R, P>) {
            ok = factor_one(entry, line);
        } else {
            std::string num_line;
            std::string den_line;
            ok = factor_one(entry.num(), num_line) && factor_one(entry.den(), den_line);
            line = den_line == "constant" ? num_line : num_line + " / (" + den_line + ")";
            if (num_line == "constant" && den_line != "constant") {
                line = "1 / (" + den_line + ")";
            }
        }
        res.ok = res.ok && ok;
        res.lines.push_back(to_string(entry, names) + " = " + line);
    }
    return res;
}

template <class R>
CheckSection verify(const GeneratorAssignment<R>& a, const std::optional<WitnessBasis<R>>& basis = std::nullopt)
{
    CheckSection s;
    s.name = a.presentation.name;
    s.notes = a.conventions;
    const auto one = SkewElem<R>::one(a.context);
    for (const auto& rel : a.presentation.relations) {
        const auto img = evaluate_word(a, rel.poly);
        s.add(rel.label, to_string(rel.poly, a.presentation.generators) + " = 0", img.is_zero(), img.to_string());
    }
    for (const auto& [g, ginv] : a.presentation.inverse_pairs) {
        const auto& x = a.images.at(static_cast<std::size_t>(g));
        const auto& y = a.images.at(static_cast<std::size_t>(ginv));
        const auto r1 = x * y - one;
        const auto r2 = y * x - one;
        const auto label = a.presentation.generators.at(static_cast<std::size_t>(g));
        s.add("inverse(" + label + ")", "images of " + label + " and its inverse are mutually inverse",
              r1.is_zero() && r2.is_zero(), r1.is_zero() ? r2.to_string() : r1.to_string());
    }
    if (basis) {
        DenominatorLog<R> log;
        for (std::size_t k = 0; k < a.localize.size(); ++k) {
            const auto& u = a.localize[k];
            const auto inv = invert(u, log);
            const auto r = u * inv - one;
            const auto l = inv * u - one;
            s.add("unit(" + std::to_string(k + 1) + ")", u.to_string() + " is invertible after localization",
                  r.is_zero() && l.is_zero(), r.is_zero() ? l.to_string() : r.to_string());
        }
        const auto w = birational_witness(log, *basis, a.context->names());
        s.witness = w.lines;
        s.add("witness", "every inverted denominator lies in the expected Ore set", w.ok,
              w.ok ? "0" : "denominator outside the multiplicative set");
    }
    return s;
}

// ---- Concrete assignments -------------------------------------------------

/// H_i -> h_i, E_i -> b_i t_i^-1.
GeneratorAssignment<ClassicalCoeff> borel_upper_assignment(const CartanMatrix& c, const ClassicalDatum& datum);
/// H_i -> h_i, F_i -> theta(b_i) t_i with theta(h) = -h.
GeneratorAssignment<ClassicalCoeff> borel_lower_assignment(const CartanMatrix& c, const ClassicalDatum& datum);
/// x_i -> alpha_i t^(-m_i), y_i -> -t^(m_i); corank > 0 adds y_(r+k) -> -t^(u_k)
/// and central z_k -> gamma_k.
GeneratorAssignment<ClassicalCoeff> weyl_assignment(const ClassicalDatum& datum, const CartanAux& aux);

/// Shifts sigma^m(b_j), sigma^m(theta(b_j)), sigma^m(h_i) for m in [-2,2]^n.
WitnessBasis<ClassicalCoeff> classical_witness_basis(const ClassicalDatum& datum);
WitnessBasis<KPoly> quantum_witness_basis();

/// E_i (or F_i) -> K_i^-1 t_i^(s_i); K_i^±1 -> K_i^±1.
GeneratorAssignment<KPoly> quantum_borel_assignment(const CartanMatrix& c, const QuantumDatum& qd, bool upper,
                                                    const std::vector<int>& signs);

struct Orientation {
    std::vector<int> signs;                  // chosen sign vector, empty if none works
    std::vector<std::vector<int>> candidates;  // every sign vector satisfying the K-relations
    std::vector<std::string> notes;
};

/// Picks the sign vector making every K-commutation relation verify.
Orientation fix_orientation(const CartanMatrix& c, const QuantumDatum& qd, bool upper);

/// x_i -> omega_i t^(-m_i), y_j -> t^(dir_j), central z_k -> omega_(r+k).
GeneratorAssignment<KPoly> quantum_weyl_assignment(const QuantumDatum& qd);

/// Ad(K_j^-1 X_j)(K_i) and prod_l (Ad(K_i^-1 X_i) - q^(2 l d_i))(X_j) on the
/// images of an oriented assignment (X = E if upper, F otherwise).
CheckSection check_localized(const CartanMatrix& c, const QuantumDatum& qd, const GeneratorAssignment<KPoly>& a,
                             bool upper);

}  // namespace gwa
