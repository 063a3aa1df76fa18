#pragma once

// Noncommutative polynomials: finite sums of scalar * word over an integer
// alphabet. Words are kept in graded-lex order (length, then letter codes), so
// the last term is the leading one.

#include "gwa/exact/qscalar.hpp"

#include <map>
#include <stdexcept>
#include <string>
#include <vector>

namespace gwa {

using Word = std::vector<int>;

struct GradedLex {
    bool operator()(const Word& a, const Word& b) const
    {
        if (a.size() != b.size()) {
            return a.size() < b.size();
        }
        return a < b;
    }
};

template <class S>
class NCPoly {
public:
    using term_map = std::map<Word, S, GradedLex>;

    NCPoly() = default;

    static NCPoly word(Word w, const S& c = S(1))
    {
        NCPoly p;
        p.add_term(std::move(w), c);
        return p;
    }
    static NCPoly letter(int a) { return word({a}); }
    static NCPoly constant(const S& c) { return word({}, c); }

    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t size() const { return terms_.size(); }
    const std::pair<const Word, S>& leading() const { return *terms_.rbegin(); }
    std::size_t degree() const { return terms_.empty() ? 0 : terms_.rbegin()->first.size(); }

    void add_term(const Word& w, const S& c)
    {
        if (is_zero_scalar(c)) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(w, c);
        if (!inserted) {
            it->second += c;
            if (is_zero_scalar(it->second)) {
                terms_.erase(it);
            }
        }
    }

    NCPoly& operator+=(const NCPoly& o)
    {
        for (const auto& [w, c] : o.terms_) {
            add_term(w, c);
        }
        return *this;
    }
    NCPoly& operator-=(const NCPoly& o)
    {
        for (const auto& [w, c] : o.terms_) {
            add_term(w, -c);
        }
        return *this;
    }
    NCPoly operator-() const
    {
        NCPoly r;
        for (const auto& [w, c] : terms_) {
            r.terms_.emplace(w, -c);
        }
        return r;
    }
    NCPoly scaled(const S& s) const
    {
        NCPoly r;
        for (const auto& [w, c] : terms_) {
            r.add_term(w, c * s);
        }
        return r;
    }

    friend NCPoly operator+(NCPoly a, const NCPoly& b) { return a += b; }
    friend NCPoly operator-(NCPoly a, const NCPoly& b) { return a -= b; }
    friend NCPoly operator*(const NCPoly& a, const NCPoly& b)
    {
        NCPoly r;
        for (const auto& [wa, ca] : a.terms_) {
            for (const auto& [wb, cb] : b.terms_) {
                Word w = wa;
                w.insert(w.end(), wb.begin(), wb.end());
                r.add_term(w, ca * cb);
            }
        }
        return r;
    }
    friend NCPoly operator*(const S& s, const NCPoly& a) { return a.scaled(s); }

    bool operator==(const NCPoly& o) const { return terms_ == o.terms_; }

private:
    static bool is_zero_scalar(const S& c) { return gwa::is_zero(c); }
    term_map terms_;
};

inline std::string word_to_string(const Word& w, const std::vector<std::string>& alphabet)
{
    if (w.empty()) {
        return "1";
    }
    std::string s;
    for (int a : w) {
        if (!s.empty()) {
            s += "*";
        }
        s += alphabet.at(static_cast<std::size_t>(a));
    }
    return s;
}

template <class S>
std::string to_string(const NCPoly<S>& p, const std::vector<std::string>& alphabet)
{
    if (p.is_zero()) {
        return "0";
    }
    std::string s;
    // Leading word first.
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        const std::string c = to_string(it->second);
        const bool negative = !c.empty() && c[0] == '-' && c.find_first_of("+-", 1) == std::string::npos;
        std::string mag = negative ? c.substr(1) : c;
        if (mag.find_first_of("+-/") != std::string::npos && mag.front() != '(') {
            mag = "(" + mag + ")";
        }
        if (s.empty()) {
            s += negative ? "-" : "";
        } else {
            s += negative ? " - " : " + ";
        }
        const std::string w = word_to_string(it->first, alphabet);
        if (mag == "1") {
            s += w;
        } else if (it->first.empty()) {
            s += mag;
        } else {
            s += mag + "*" + w;
        }
    }
    return s;
}

// ad(x)^k (y) and the twisted variant x X - c_k X x with per-step twists.
template <class S>
NCPoly<S> commutator(const NCPoly<S>& a, const NCPoly<S>& b)
{
    return a * b - b * a;
}

template <class S>
NCPoly<S> ad_iterated(const NCPoly<S>& x, NCPoly<S> y, const std::vector<S>& twists)
{
    for (const auto& c : twists) {
        y = x * y - (y * x).scaled(c);
    }
    return y;
}

}  // namespace gwa
