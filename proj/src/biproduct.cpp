#include "gwa/biproduct/rewrite.hpp"
#include "gwa/morphisms/morphisms.hpp"

#include <cctype>

namespace gwa {

std::vector<std::string> Alphabet::names() const
{
    std::vector<std::string> out(static_cast<std::size_t>(size()));
    for (int i = 0; i < n; ++i) {
        const auto idx = std::to_string(i + 1);
        out[static_cast<std::size_t>(e(i))] = "E" + idx;
        out[static_cast<std::size_t>(f(i))] = "F" + idx;
        if (quantum) {
            out[static_cast<std::size_t>(k(i))] = "K" + idx;
            out[static_cast<std::size_t>(kinv(i))] = "Kinv" + idx;
        } else {
            out[static_cast<std::size_t>(h(i))] = "H" + idx;
        }
    }
    return out;
}

Word Alphabet::parse(const std::string& text) const
{
    Word w;
    std::size_t p = 0;
    auto fail = [&](const std::string& why) {
        throw std::invalid_argument("word, column " + std::to_string(p + 1) + ": " + why);
    };
    while (p < text.size()) {
        const char ch = text[p];
        if (std::isspace(static_cast<unsigned char>(ch)) || ch == '*') {
            ++p;
            continue;
        }
        const std::size_t start = p;
        std::string head;
        while (p < text.size() && std::isalpha(static_cast<unsigned char>(text[p]))) {
            head += text[p++];
        }
        std::string digits;
        while (p < text.size() && std::isdigit(static_cast<unsigned char>(text[p]))) {
            digits += text[p++];
        }
        bool inverse = false;
        if (text.compare(p, 3, "^-1") == 0) {
            inverse = true;
            p += 3;
        }
        if (head.empty() || digits.empty()) {
            p = start;
            fail("expected a generator such as E1, F2, " + std::string(quantum ? "K1 or K1^-1" : "H1"));
        }
        const int i = std::stoi(digits) - 1;
        if (i < 0 || i >= n) {
            p = start;
            fail("index " + digits + " out of range 1.." + std::to_string(n));
        }
        if (head == "Kinv") {
            head = "K";
            inverse = !inverse;
        }
        if (inverse && head != "K") {
            p = start;
            fail("only K generators have inverses");
        }
        if (head == "E") {
            w.push_back(e(i));
        } else if (head == "F") {
            w.push_back(f(i));
        } else if (head == "H" && !quantum) {
            w.push_back(h(i));
        } else if (head == "K" && quantum) {
            w.push_back(inverse ? kinv(i) : k(i));
        } else {
            p = start;
            fail("unknown generator " + head);
        }
    }
    return w;
}

namespace {

std::string label2(const std::string& head, int i, int j)
{
    return head + "(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

template <class S>
NCPoly<S> L(int x)
{
    return NCPoly<S>::letter(x);
}

}  // namespace

ClassicalRewrite build_classical_rules(const CartanMatrix& c)
{
    const int n = c.n();
    const Alphabet al{n, false};
    ClassicalRewrite rs(al, "classical");
    using P = NCPoly<Rational>;
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            const Rational a(c(i, j));
            // F_j E_i = E_i F_j - delta_ij H_i
            P fe = L<Rational>(al.e(i)) * L<Rational>(al.f(j));
            if (i == j) {
                fe -= L<Rational>(al.h(i));
            }
            rs.add(label2("FE", j, i), {al.f(j), al.e(i)}, fe);
            // H_i E_j = E_j H_i + a_ij E_j
            rs.add(label2("HE", i, j), {al.h(i), al.e(j)},
                   L<Rational>(al.e(j)) * L<Rational>(al.h(i)) + L<Rational>(al.e(j)).scaled(a));
            // F_j H_i = H_i F_j + a_ij F_j
            rs.add(label2("FH", j, i), {al.f(j), al.h(i)},
                   L<Rational>(al.h(i)) * L<Rational>(al.f(j)) + L<Rational>(al.f(j)).scaled(a));
            if (j > i) {
                rs.add(label2("HH", j, i), {al.h(j), al.h(i)}, L<Rational>(al.h(i)) * L<Rational>(al.h(j)));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            const std::vector<Rational> ones(static_cast<std::size_t>(1 - c(i, j)), Rational(1));
            rs.add_relation(label2("serre-E", i, j), ad_iterated(L<Rational>(al.e(i)), L<Rational>(al.e(j)), ones));
            rs.add_relation(label2("serre-F", i, j), ad_iterated(L<Rational>(al.f(i)), L<Rational>(al.f(j)), ones));
        }
    }
    return rs;
}

QuantumRewrite build_quantum_rules(const CartanMatrix& c, const std::vector<int>& d)
{
    check_symmetrizer(c, d);
    const int n = c.n();
    const Alphabet al{n, true};
    QuantumRewrite rs(al, "quantum");
    using P = NCPoly<QScalar>;
    auto X = [](int x) { return P::letter(x); };
    for (int i = 0; i < n; ++i) {
        const int di = d[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            const int e = di * c(i, j);
            // F_j E_i = E_i F_j - delta_ij (K_i - K_i^-1)/(q^d_i - q^-d_i)
            P fe = X(al.e(i)) * X(al.f(j));
            if (i == j) {
                fe -= (X(al.k(i)) - X(al.kinv(i))).scaled(QScalar(1) / (QScalar::q_power(di) - QScalar::q_power(-di)));
            }
            rs.add(label2("FE", j, i), {al.f(j), al.e(i)}, fe);
            // E_j K_i = q^(-d_i a_ij) K_i E_j, so K_i E_j = q^(d_i a_ij) E_j K_i.
            rs.add(label2("KE", i, j), {al.k(i), al.e(j)}, (X(al.e(j)) * X(al.k(i))).scaled(QScalar::q_power(e)));
            rs.add(label2("KinvE", i, j), {al.kinv(i), al.e(j)},
                   (X(al.e(j)) * X(al.kinv(i))).scaled(QScalar::q_power(-e)));
            // F_j K_i = q^(d_i a_ij) K_i F_j
            rs.add(label2("FK", j, i), {al.f(j), al.k(i)}, (X(al.k(i)) * X(al.f(j))).scaled(QScalar::q_power(e)));
            rs.add(label2("FKinv", j, i), {al.f(j), al.kinv(i)},
                   (X(al.kinv(i)) * X(al.f(j))).scaled(QScalar::q_power(-e)));
        }
    }
    // Torus letters commute; K_i K_i^-1 = K_i^-1 K_i = 1.
    for (int x = al.k(0); x < al.f(0); ++x) {
        for (int y = al.k(0); y < x; ++y) {
            const bool inverse_pair = (y - n) / 2 == (x - n) / 2;
            if (inverse_pair) {
                const auto idx = (y - n) / 2;
                rs.add("inv(" + std::to_string(idx + 1) + ")", {y, x}, P::constant(QScalar(1)));
                rs.add("inv'(" + std::to_string(idx + 1) + ")", {x, y}, P::constant(QScalar(1)));
            } else {
                rs.add("KK(" + al.names()[static_cast<std::size_t>(x)] + "," + al.names()[static_cast<std::size_t>(y)] + ")",
                       {x, y}, X(y) * X(x));
            }
        }
    }
    for (int i = 0; i < n; ++i) {
        const int di = d[static_cast<std::size_t>(i)];
        for (int j = 0; j < n; ++j) {
            if (i == j) {
                continue;
            }
            rs.add_relation(label2("qserre-E", i, j), ad_iterated(X(al.e(i)), X(al.e(j)), serre_twists(c(i, j), di, 1)));
            rs.add_relation(label2("qserre-F", i, j), ad_iterated(X(al.f(i)), X(al.f(j)), serre_twists(c(i, j), di, -1)));
        }
    }
    return rs;
}

CheckSection confluence_section(const ConfluenceReport& rep, const std::string& system)
{
    CheckSection s;
    s.name = "confluence " + system;
    for (const auto& a : rep.ambiguities) {
        s.add("overlap " + a.word + " [" + a.rule_a + " / " + a.rule_b + "]", "both reductions of " + a.word + " agree",
              a.resolved, a.difference);
    }
    s.notes.push_back(std::to_string(rep.ambiguities.size()) + " ambiguities up to degree " +
                      std::to_string(rep.degree_bound) + ", " + std::to_string(rep.unresolved()) + " unresolved");
    return s;
}

CheckSection mixed_relation_check(const ClassicalRewrite& rs, const CartanMatrix& c)
{
    CheckSection s;
    s.name = "mixed relations (classical)";
    const auto& al = rs.alphabet();
    using P = NCPoly<Rational>;
    for (int i = 0; i < c.n(); ++i) {
        for (int j = 0; j < c.n(); ++j) {
            P rel = commutator(P::letter(al.e(i)), P::letter(al.f(j)));
            if (i == j) {
                rel -= P::letter(al.h(j));
            }
            const auto nf = rs.normal_form(rel);
            s.add(label2("[E,F]", i, j), "[E" + std::to_string(i + 1) + ",F" + std::to_string(j + 1) + "] = " +
                                            (i == j ? "H" + std::to_string(j + 1) : std::string("0")),
                  nf.is_zero(), rs.show(nf));
        }
    }
    return s;
}

CheckSection mixed_relation_check(const QuantumRewrite& rs, const CartanMatrix& c, const std::vector<int>& d)
{
    CheckSection s;
    s.name = "mixed relations (quantum)";
    const auto& al = rs.alphabet();
    using P = NCPoly<QScalar>;
    for (int i = 0; i < c.n(); ++i) {
        const int di = d[static_cast<std::size_t>(i)];
        for (int j = 0; j < c.n(); ++j) {
            P rel = commutator(P::letter(al.e(i)), P::letter(al.f(j)));
            std::string rhs = "0";
            if (i == j) {
                rel -= (P::letter(al.k(i)) - P::letter(al.kinv(i)))
                           .scaled(QScalar(1) / (QScalar::q_power(di) - QScalar::q_power(-di)));
                rhs = "(K" + std::to_string(i + 1) + " - K" + std::to_string(i + 1) + "^-1)/(q^" + std::to_string(di) +
                      " - q^-" + std::to_string(di) + ")";
            }
            const auto nf = rs.normal_form(rel);
            s.add(label2("[E,F]", i, j), "[E" + std::to_string(i + 1) + ",F" + std::to_string(j + 1) + "] = " + rhs,
                  nf.is_zero(), rs.show(nf));
        }
    }
    return s;
}

}  // namespace gwa
