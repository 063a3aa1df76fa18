#pragma once

// Oriented rewriting over the letters {E_i} < {H_i or K_i^±1} < {F_i}. Normal
// words read E-part, then Cartan part, then F-part, which is the ordering of
// the merged product of the two Borel halves.

#include "gwa/biproduct/ncpoly.hpp"
#include "gwa/cartan/cartan.hpp"
#include "gwa/check.hpp"

#include <algorithm>
#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace gwa {

class RewriteError : public std::runtime_error {
public:
    RewriteError(const std::string& what, std::vector<std::string> trace)
        : std::runtime_error(what), trace_(std::move(trace))
    {
    }
    const std::vector<std::string>& trace() const { return trace_; }

private:
    std::vector<std::string> trace_;
};

/// Letter codes. Classical: E_i = i, H_i = n+i, F_i = 2n+i.
/// Quantum: E_i = i, K_i = n+2i, K_i^-1 = n+2i+1, F_i = 3n+i.
struct Alphabet {
    int n = 0;
    bool quantum = false;

    int e(int i) const { return i; }
    int h(int i) const { return n + i; }
    int k(int i) const { return n + 2 * i; }
    int kinv(int i) const { return n + 2 * i + 1; }
    int f(int i) const { return (quantum ? 3 : 2) * n + i; }
    int size() const { return (quantum ? 4 : 3) * n; }

    enum class Family { E, Cartan, F };
    Family family(int letter) const
    {
        if (letter < n) {
            return Family::E;
        }
        return letter < size() - n ? Family::Cartan : Family::F;
    }
    std::vector<std::string> names() const;
    /// Parses "F1*E1", "F1 E1 H2", "K1^-1", "Kinv1".
    Word parse(const std::string& text) const;
};

template <class S>
struct Rule {
    std::string label;
    Word lhs;
    NCPoly<S> rhs;
};

enum class Strategy { Leftmost, Rightmost };

template <class S>
class RewriteSystem {
public:
    RewriteSystem(Alphabet alphabet, std::string mode) : alphabet_(alphabet), mode_(std::move(mode)) {}

    const Alphabet& alphabet() const { return alphabet_; }
    const std::string& mode() const { return mode_; }
    const std::vector<Rule<S>>& rules() const { return rules_; }
    std::string order_descriptor() const { return "graded lex, E < " + std::string(alphabet_.quantum ? "K" : "H") + " < F"; }

    /// Adds lhs -> rhs after checking that rhs lies strictly below lhs.
    /// An identical duplicate is ignored; a conflicting one is kept as a
    /// separate rule (the confluence check will see the inclusion).
    void add(std::string label, const Word& lhs, NCPoly<S> rhs)
    {
        for (const auto& [w, c] : rhs.terms()) {
            if (!GradedLex{}(w, lhs)) {
                throw std::logic_error("rule " + label + " does not decrease: " + word_to_string(w, alphabet_.names()));
            }
        }
        for (const auto& r : rules_) {
            if (r.lhs == lhs && r.rhs == rhs) {
                return;
            }
        }
        max_lhs_ = std::max(max_lhs_, lhs.size());
        rules_.push_back({std::move(label), lhs, std::move(rhs)});
        index_.emplace(lhs, rules_.size() - 1);
    }

    /// Turns a relation p = 0 into a rule on its leading word.
    void add_relation(std::string label, const NCPoly<S>& p)
    {
        if (p.is_zero()) {
            return;
        }
        const auto [lead, c] = p.leading();
        NCPoly<S> rhs = -p.scaled(S(1) / c);
        rhs.add_term(lead, S(1));
        add(std::move(label), lead, rhs);
    }

    /// Copy with the rule `label` replaced (negative controls).
    RewriteSystem with_rule(const std::string& label, NCPoly<S> rhs) const
    {
        RewriteSystem r(alphabet_, mode_ + " (modified)");
        bool found = false;
        for (const auto& rule : rules_) {
            if (rule.label == label) {
                r.add(rule.label, rule.lhs, rhs);
                found = true;
            } else {
                r.add(rule.label, rule.lhs, rule.rhs);
            }
        }
        if (!found) {
            throw std::invalid_argument("no rule " + label);
        }
        return r;
    }

    struct Redex {
        std::size_t rule = 0;
        std::size_t pos = 0;
    };

    /// First redex in the given scan order (leftmost: earliest start, shortest
    /// pattern; rightmost: latest start, longest pattern).
    std::optional<Redex> find_redex(const Word& w, Strategy s) const
    {
        const std::size_t len = w.size();
        auto try_at = [&](std::size_t pos, std::size_t l) -> std::optional<Redex> {
            if (pos + l > len) {
                return std::nullopt;
            }
            const Word sub(w.begin() + static_cast<std::ptrdiff_t>(pos), w.begin() + static_cast<std::ptrdiff_t>(pos + l));
            auto it = index_.find(sub);
            if (it == index_.end()) {
                return std::nullopt;
            }
            return Redex{it->second, pos};
        };
        if (s == Strategy::Leftmost) {
            for (std::size_t pos = 0; pos < len; ++pos) {
                for (std::size_t l = 1; l <= max_lhs_; ++l) {
                    if (auto r = try_at(pos, l)) {
                        return r;
                    }
                }
            }
        } else {
            for (std::size_t pos = len; pos-- > 0;) {
                for (std::size_t l = max_lhs_; l >= 1; --l) {
                    if (auto r = try_at(pos, l)) {
                        return r;
                    }
                }
            }
        }
        return std::nullopt;
    }

    bool is_normal(const Word& w) const { return !find_redex(w, Strategy::Leftmost).has_value(); }

    /// u * rhs * v for w = u lhs v.
    NCPoly<S> apply(const Word& w, const Redex& r) const
    {
        const auto& rule = rules_.at(r.rule);
        const Word u(w.begin(), w.begin() + static_cast<std::ptrdiff_t>(r.pos));
        const Word v(w.begin() + static_cast<std::ptrdiff_t>(r.pos + rule.lhs.size()), w.end());
        return NCPoly<S>::word(u) * rule.rhs * NCPoly<S>::word(v);
    }

    /// Reduces the largest reducible word first until nothing applies.
    NCPoly<S> normal_form(const NCPoly<S>& p, Strategy s = Strategy::Leftmost, std::size_t step_limit = 200000) const
    {
        NCPoly<S> work = p;
        NCPoly<S> done;
        std::size_t steps = 0;
        std::vector<std::string> trace;
        while (!work.is_zero()) {
            const auto [w, c] = work.leading();
            const Word word = w;
            const S coeff = c;
            work.add_term(word, -coeff);
            const auto r = find_redex(word, s);
            if (!r) {
                done.add_term(word, coeff);
                continue;
            }
            if (++steps > step_limit) {
                throw RewriteError("normal_form: step limit " + std::to_string(step_limit) + " exceeded", trace);
            }
            if (trace.size() == 16) {
                trace.erase(trace.begin());
            }
            trace.push_back(word_to_string(word, alphabet_.names()) + " by " + rules_[r->rule].label);
            work += apply(word, *r).scaled(coeff);
        }
        return done;
    }

    std::string show(const NCPoly<S>& p) const { return to_string(p, alphabet_.names()); }

private:
    Alphabet alphabet_;
    std::string mode_;
    std::vector<Rule<S>> rules_;
    std::map<Word, std::size_t> index_;
    std::size_t max_lhs_ = 0;
};

using ClassicalRewrite = RewriteSystem<Rational>;
using QuantumRewrite = RewriteSystem<QScalar>;

ClassicalRewrite build_classical_rules(const CartanMatrix& c);
/// Throws CartanError if d does not symmetrize c.
QuantumRewrite build_quantum_rules(const CartanMatrix& c, const std::vector<int>& d);

struct Ambiguity {
    std::string word;
    std::string rule_a;
    std::string rule_b;
    bool resolved = false;
    std::string difference = "0";
    bool operator==(const Ambiguity&) const = default;
};

struct ConfluenceReport {
    int degree_bound = 0;
    std::vector<Ambiguity> ambiguities;
    std::size_t unresolved() const
    {
        return static_cast<std::size_t>(
            std::count_if(ambiguities.begin(), ambiguities.end(), [](const auto& a) { return !a.resolved; }));
    }
};

/// Calls fn(word, rule_a, pos_a, rule_b, pos_b) for every overlap (a proper
/// suffix of one left side equal to a prefix of another) and every inclusion
/// whose word has length <= degree_bound.
template <class S, class Fn>
void for_each_ambiguity(const RewriteSystem<S>& rs, int degree_bound, Fn&& fn)
{
    const auto& rules = rs.rules();
    const auto bound = static_cast<std::size_t>(degree_bound);
    for (std::size_t a = 0; a < rules.size(); ++a) {
        const Word& la = rules[a].lhs;
        for (std::size_t b = 0; b < rules.size(); ++b) {
            const Word& lb = rules[b].lhs;
            for (std::size_t k = 1; k < la.size() && k < lb.size(); ++k) {
                if (la.size() + lb.size() - k <= bound &&
                    std::equal(la.end() - static_cast<std::ptrdiff_t>(k), la.end(), lb.begin())) {
                    Word w = la;
                    w.insert(w.end(), lb.begin() + static_cast<std::ptrdiff_t>(k), lb.end());
                    fn(w, a, std::size_t{0}, b, la.size() - k);
                }
            }
            if (a != b && lb.size() <= la.size() && la.size() <= bound) {
                for (std::size_t pos = 0; pos + lb.size() <= la.size(); ++pos) {
                    if (std::equal(lb.begin(), lb.end(), la.begin() + static_cast<std::ptrdiff_t>(pos))) {
                        fn(la, a, std::size_t{0}, b, pos);
                    }
                }
            }
        }
    }
}

/// Both one-step reductions of an ambiguity, normalized; zero iff it resolves.
template <class S>
NCPoly<S> ambiguity_difference(const RewriteSystem<S>& rs, const Word& w, std::size_t ra, std::size_t pa, std::size_t rb,
                               std::size_t pb)
{
    using Redex = typename RewriteSystem<S>::Redex;
    return rs.normal_form(rs.apply(w, Redex{ra, pa})) - rs.normal_form(rs.apply(w, Redex{rb, pb}));
}

template <class S>
ConfluenceReport check_local_confluence(const RewriteSystem<S>& rs, int degree_bound)
{
    ConfluenceReport rep;
    rep.degree_bound = degree_bound;
    const auto names = rs.alphabet().names();
    for_each_ambiguity(rs, degree_bound, [&](const Word& w, std::size_t a, std::size_t pa, std::size_t b, std::size_t pb) {
        const auto diff = ambiguity_difference(rs, w, a, pa, b, pb);
        rep.ambiguities.push_back(
            {word_to_string(w, names), rs.rules()[a].label, rs.rules()[b].label, diff.is_zero(), rs.show(diff)});
    });
    return rep;
}

/// Bounded Knuth-Bendix: every unresolved overlap difference (an element of
/// the ideal) is oriented into a new rule, until the system is confluent up to
/// degree_bound or max_rounds is reached.
template <class S>
struct Completion {
    RewriteSystem<S> system;
    std::vector<std::string> added;  // "label: lhs -> rhs"
    int rounds = 0;
    bool converged = false;
};

template <class S>
Completion<S> complete(const RewriteSystem<S>& rs, int degree_bound, int max_rounds = 8)
{
    Completion<S> out{rs, {}, 0, false};
    auto& sys = out.system;
    const auto& al = sys.alphabet();
    while (out.rounds < max_rounds) {
        ++out.rounds;
        std::vector<NCPoly<S>> pending;
        for_each_ambiguity(sys, degree_bound, [&](const Word& w, std::size_t a, std::size_t pa, std::size_t b, std::size_t pb) {
            auto d = ambiguity_difference(sys, w, a, pa, b, pb);
            if (!d.is_zero()) {
                pending.push_back(std::move(d));
            }
        });
        if (pending.empty()) {
            out.converged = true;
            break;
        }
        for (const auto& d : pending) {
            const auto nf = sys.normal_form(d);
            if (nf.is_zero()) {
                continue;
            }
            const auto label = "kb(" + std::to_string(out.added.size() + 1) + ")";
            const auto before = sys.rules().size();
            sys.add_relation(label, nf);
            if (sys.rules().size() != before) {
                const auto& r = sys.rules().back();
                out.added.push_back(label + ": " + word_to_string(r.lhs, al.names()) + " -> " + sys.show(r.rhs));
            }
        }
    }
    return out;
}

struct OrderIndependence {
    int samples = 0;
    int disagreements = 0;
    std::string first_mismatch;  // empty if none
};

/// Random polynomials of length <= max_len with small integer coefficients,
/// normalized leftmost and rightmost; deterministic for a given seed.
template <class S>
OrderIndependence order_independence(const RewriteSystem<S>& rs, int samples, int max_len, std::uint64_t seed)
{
    std::mt19937_64 rng(seed);
    std::uniform_int_distribution<int> terms(1, 4);
    std::uniform_int_distribution<int> length(0, max_len);
    std::uniform_int_distribution<int> letter(0, rs.alphabet().size() - 1);
    std::uniform_int_distribution<int> coeff(-3, 3);
    OrderIndependence out;
    for (int k = 0; k < samples; ++k) {
        NCPoly<S> p;
        for (int t = terms(rng); t > 0; --t) {
            Word w(static_cast<std::size_t>(length(rng)));
            for (auto& a : w) {
                a = letter(rng);
            }
            p.add_term(w, S(coeff(rng)));
        }
        ++out.samples;
        const auto l = rs.normal_form(p, Strategy::Leftmost);
        const auto r = rs.normal_form(p, Strategy::Rightmost);
        if (!(l == r)) {
            if (out.disagreements++ == 0) {
                out.first_mismatch = rs.show(p) + ": " + rs.show(l) + " vs " + rs.show(r);
            }
        }
    }
    return out;
}

CheckSection confluence_section(const ConfluenceReport& rep, const std::string& system);

/// [E_i,F_j] minus its prescribed value normalizes to zero for all i, j.
CheckSection mixed_relation_check(const ClassicalRewrite& rs, const CartanMatrix& c);
CheckSection mixed_relation_check(const QuantumRewrite& rs, const CartanMatrix& c, const std::vector<int>& d);

/// Irreducible words of length <= max_len grouped by multidegree
/// (E count, net Cartan degree, F count) for a rank-one alphabet.
struct PbwCensus {
    std::map<std::tuple<int, int, int>, int> counts;
    bool matches = false;  // every ordered monomial of that size occurs exactly once
};
template <class S>
PbwCensus pbw_census(const RewriteSystem<S>& rs, int max_len)
{
    const auto& al = rs.alphabet();
    if (al.n != 1) {
        throw std::invalid_argument("pbw_census: rank-one alphabets only");
    }
    PbwCensus out;
    std::vector<Word> frontier{Word{}};
    for (int len = 0; len <= max_len; ++len) {
        std::vector<Word> next;
        for (const auto& w : frontier) {
            if (!rs.is_normal(w)) {
                continue;
            }
            int e = 0;
            int h = 0;
            int f = 0;
            for (int x : w) {
                if (x == al.e(0)) {
                    ++e;
                } else if (x == al.f(0)) {
                    ++f;
                } else {
                    h += (al.quantum && x == al.kinv(0)) ? -1 : 1;
                }
            }
            ++out.counts[{e, h, f}];
            if (len < max_len) {
                for (int x = 0; x < al.size(); ++x) {
                    Word v = w;
                    v.push_back(x);
                    next.push_back(std::move(v));
                }
            }
        }
        frontier = std::move(next);
    }
    // Expected: E^a H^b F^c with a+b+c <= max_len (b >= 0), or E^a K^b F^c with
    // a+|b|+c <= max_len (b in Z).
    std::size_t expected = 0;
    bool all_one = true;
    for (int a = 0; a <= max_len; ++a) {
        for (int c = 0; a + c <= max_len; ++c) {
            const int room = max_len - a - c;
            for (int b = al.quantum ? -room : 0; b <= room; ++b) {
                ++expected;
                auto it = out.counts.find({a, b, c});
                all_one = all_one && it != out.counts.end() && it->second == 1;
            }
        }
    }
    out.matches = all_one && out.counts.size() == expected;
    return out;
}

}  // namespace gwa
