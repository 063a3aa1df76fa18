#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "generators.hpp"
#include "gwa/biproduct/rewrite.hpp"

using namespace gwa;
using gwa::testing::Engine;

namespace {

CartanMatrix cat(const std::string& name) { return validate_gcm(catalog_matrix(name)); }

template <class S>
NCPoly<S> random_input(Engine& rng, int letters, int max_len)
{
    NCPoly<S> p;
    const int terms = gwa::testing::small_int(rng, 1, 4);
    for (int t = 0; t < terms; ++t) {
        Word w(static_cast<std::size_t>(gwa::testing::small_int(rng, 0, max_len)));
        for (auto& a : w) {
            a = gwa::testing::small_int(rng, 0, letters - 1);
        }
        p.add_term(w, gwa::testing::random_scalar<S>(rng));
    }
    return p;
}

template <class S>
NCPoly<S> parse(const RewriteSystem<S>& rs, const std::string& w)
{
    return NCPoly<S>::word(rs.alphabet().parse(w));
}

template <class S>
std::string nf(const RewriteSystem<S>& rs, const std::string& w)
{
    return rs.show(rs.normal_form(parse(rs, w)));
}

}  // namespace

TEST_CASE("alphabet codes and parsing")
{
    const Alphabet c{2, false};
    CHECK(c.names() == std::vector<std::string>{"E1", "E2", "H1", "H2", "F1", "F2"});
    CHECK(c.parse("F1*E2 H1") == Word{4, 1, 2});
    const Alphabet q{1, true};
    CHECK(q.names() == std::vector<std::string>{"E1", "K1", "Kinv1", "F1"});
    CHECK(q.parse("K1^-1 Kinv1 K1") == Word{2, 2, 1});
    CHECK(q.parse("") == Word{});
    CHECK_THROWS_WITH_AS(c.parse("E1 X2"), "word, column 4: unknown generator X", std::invalid_argument);
    CHECK_THROWS_WITH_AS(c.parse("E3"), "word, column 1: index 3 out of range 1..2", std::invalid_argument);
    CHECK_THROWS_AS(c.parse("H1^-1"), std::invalid_argument);
    CHECK_THROWS_AS(q.parse("H1"), std::invalid_argument);
    CHECK_THROWS_AS(c.parse("E"), std::invalid_argument);
}

TEST_CASE("sl2 rules as displayed")
{
    const auto rs = build_classical_rules(cat("A1"));
    CHECK(nf(rs, "F1 E1") == "E1*F1 - H1");
    CHECK(nf(rs, "H1 E1") == "E1*H1 + 2*E1");
    CHECK(nf(rs, "E1 H1 F1") == "E1*H1*F1");
    CHECK(nf(rs, "F1 H1") == "H1*F1 + 2*F1");

    const auto qs = build_quantum_rules(cat("A1"), {1});
    // F E -> E F - (K - K^-1)/(q - q^-1)
    const auto fe = qs.normal_form(parse(qs, "F1 E1"));
    using P = NCPoly<QScalar>;
    const auto& al = qs.alphabet();
    const P expected = P::letter(al.e(0)) * P::letter(al.f(0)) -
                       (P::letter(al.k(0)) - P::letter(al.kinv(0))).scaled(QScalar(1) / (QScalar::q() - QScalar::q_power(-1)));
    CHECK(fe == expected);
    CHECK(nf(qs, "K1 K1^-1") == "1");
    CHECK(nf(qs, "K1^-1 K1") == "1");
    CHECK(nf(qs, "K1 E1") == "q^2*E1*K1");
    CHECK(nf(qs, "F1 K1") == "q^2*K1*F1");
}

TEST_CASE("rule invariants: decreasing, monic, shape")
{
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto c = cat(name);
        const auto rs = build_classical_rules(c);
        for (const auto& r : rs.rules()) {
            for (const auto& [w, coeff] : r.rhs.terms()) {
                CHECK(GradedLex{}(w, r.lhs));
            }
        }
        const auto d = analyze(c).d;
        const auto qs = build_quantum_rules(c, d);
        for (const auto& r : qs.rules()) {
            for (const auto& [w, coeff] : r.rhs.terms()) {
                CHECK(GradedLex{}(w, r.lhs));
            }
        }
    }
    CHECK_THROWS_AS(build_quantum_rules(cat("B2"), {1, 1}), CartanError);
    auto rs = build_classical_rules(cat("A1"));
    CHECK_THROWS_AS(rs.add("bad", {0}, NCPoly<Rational>::letter(2)), std::logic_error);
}

TEST_CASE("normal forms are ordered E-part, Cartan part, F-part")
{
    Engine rng(5);
    for (const auto& name : {"A1", "A2", "B2"}) {
        CAPTURE(name);
        const auto c = cat(name);
        const auto rs = build_classical_rules(c);
        const auto& al = rs.alphabet();
        for (int trial = 0; trial < 40; ++trial) {
            const auto p = rs.normal_form(random_input<Rational>(rng, al.size(), 5));
            for (const auto& [w, coeff] : p.terms()) {
                for (std::size_t k = 1; k < w.size(); ++k) {
                    CHECK(static_cast<int>(al.family(w[k - 1])) <= static_cast<int>(al.family(w[k])));
                }
                CHECK(rs.is_normal(w));
            }
        }
    }
}

TEST_CASE("mixed relations")
{
    for (const auto& name : {"A1", "A2", "A3", "B2", "G2", "A1_1"}) {
        CAPTURE(name);
        const auto c = cat(name);
        CHECK(mixed_relation_check(build_classical_rules(c), c).passed());
        const auto d = analyze(c).d;
        CHECK(mixed_relation_check(build_quantum_rules(c, d), c, d).passed());
    }
    // F_j E_i for i != j just swaps.
    const auto rs = build_classical_rules(cat("A2"));
    CHECK(nf(rs, "F2 E1") == "E1*F2");
    CHECK(nf(rs, "F1 E1") == "E1*F1 - H1");
}

TEST_CASE("local confluence up to degree 4 for sl2 and A2, both modes")
{
    for (const auto& name : {"A1", "A2"}) {
        CAPTURE(name);
        const auto c = cat(name);
        const auto r1 = check_local_confluence(build_classical_rules(c), 4);
        CHECK(!r1.ambiguities.empty());
        CHECK(r1.unresolved() == 0);
        const auto r2 = check_local_confluence(build_quantum_rules(c, analyze(c).d), 4);
        CHECK(r2.unresolved() == 0);
        CHECK(confluence_section(r2, name).passed());
    }
}

TEST_CASE("corrupted F*E rules")
{
    // Dropping -H keeps every overlap resolvable: the overlap words meet the
    // F*E rule exactly once, so any weight-zero right side of [E,F] is coherent.
    const auto rs = build_classical_rules(cat("A1"));
    const auto& al = rs.alphabet();
    using P = NCPoly<Rational>;
    const auto dropped = rs.with_rule("FE(1,1)", P::letter(al.e(0)) * P::letter(al.f(0)));
    CHECK(check_local_confluence(dropped, 5).unresolved() == 0);

    // A weight-breaking right side is caught.
    const auto sl2_bad = rs.with_rule("FE(1,1)", P::letter(al.e(0)) * P::letter(al.f(0)) - P::letter(al.e(0)));
    CHECK(check_local_confluence(sl2_bad, 3).unresolved() > 0);

    const auto a2 = build_classical_rules(cat("A2"));
    const auto& b = a2.alphabet();
    const auto wrong = a2.with_rule("FE(1,1)", P::letter(b.e(0)) * P::letter(b.f(0)) - P::letter(b.h(1)));
    const auto rep = check_local_confluence(wrong, 4);
    CHECK(rep.unresolved() == 2);
    bool seen = false;
    for (const auto& a : rep.ambiguities) {
        if (a.word == "F1*E2*E1*E1") {
            seen = true;
            CHECK_FALSE(a.resolved);
            CHECK(a.difference == "3*E2*E1 - 3*E1*E2");
        }
    }
    CHECK(seen);
    CHECK_FALSE(confluence_section(rep, "corrupted").passed());
    CHECK_THROWS_AS(rs.with_rule("nope", P()), std::invalid_argument);
}

TEST_CASE("A3 Serre rules need one completion rule at degree 4")
{
    const auto c = cat("A3");
    const auto raw = build_classical_rules(c);
    CHECK(check_local_confluence(raw, 4).unresolved() == 2);
    const auto done = complete(raw, 4);
    CHECK(done.converged);
    CHECK(done.added.size() == 2);
    CHECK(check_local_confluence(done.system, 4).unresolved() == 0);
    CHECK(mixed_relation_check(done.system, c).passed());
}

TEST_CASE("order independence on random inputs")
{
    Engine rng(2024);
    for (const auto& name : catalog_names()) {
        CAPTURE(name);
        const auto c = cat(name);
        const auto cs = complete(build_classical_rules(c), 4).system;
        const auto qs = complete(build_quantum_rules(c, analyze(c).d), 4).system;
        for (int trial = 0; trial < 100; ++trial) {
            const auto p = random_input<Rational>(rng, cs.alphabet().size(), 4);
            CHECK(cs.normal_form(p, Strategy::Leftmost) == cs.normal_form(p, Strategy::Rightmost));
            const auto qp = random_input<QScalar>(rng, qs.alphabet().size(), 4);
            CHECK(qs.normal_form(qp, Strategy::Leftmost) == qs.normal_form(qp, Strategy::Rightmost));
        }
    }
}

TEST_CASE("termination on degree-6 inputs and the step limit")
{
    Engine rng(99);
    for (const auto& name : {"A1", "A2"}) {
        const auto c = cat(name);
        const auto cs = build_classical_rules(c);
        const auto qs = build_quantum_rules(c, analyze(c).d);
        for (int trial = 0; trial < 30; ++trial) {
            CHECK_NOTHROW(cs.normal_form(random_input<Rational>(rng, cs.alphabet().size(), 6)));
            CHECK_NOTHROW(qs.normal_form(random_input<QScalar>(rng, qs.alphabet().size(), 6)));
        }
    }
    const auto rs = build_classical_rules(cat("A1"));
    try {
        (void)rs.normal_form(parse(rs, "F1 F1 F1 E1 E1 E1"), Strategy::Leftmost, 3);
        FAIL("expected the step limit to trigger");
    } catch (const RewriteError& e) {
        CHECK(e.trace().size() == 3);
        CHECK(e.trace().front().find(" by ") != std::string::npos);
    }
}

TEST_CASE("PBW census for sl2")
{
    const auto c = cat("A1");
    const auto cs = build_classical_rules(c);
    const auto qs = build_quantum_rules(c, {1});
    for (int len = 1; len <= 5; ++len) {
        CAPTURE(len);
        CHECK(pbw_census(cs, len).matches);
        CHECK(pbw_census(qs, len).matches);
    }
    const auto census = pbw_census(cs, 3);
    CHECK(census.counts.size() == 20);  // a+b+c <= 3
    CHECK(census.counts.at({1, 1, 1}) == 1);
    CHECK_THROWS_AS(pbw_census(build_classical_rules(cat("A2")), 2), std::invalid_argument);
    // The census only sees left sides: a broken right side leaves it intact.
    const auto bad = cs.with_rule("FE(1,1)", NCPoly<Rational>::letter(0) * NCPoly<Rational>::letter(2) -
                                                 NCPoly<Rational>::letter(0));
    CHECK(pbw_census(bad, 3).matches);
    CHECK(check_local_confluence(bad, 3).unresolved() > 0);
}
