#pragma once

// Skew Laurent model Frac(A) # T^n: finite sums f_m t^m with
//   (f t^m)(g t^m') = f sigma^m(g) t^(m+m'),
// where sigma^m = prod sigma_i^(m_i) for commuting automorphisms sigma_i.

#include "gwa/exact/endo.hpp"

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <type_traits>
#include <vector>

namespace gwa {

// Coefficient-ring adaptors. Classical coefficients are PolyFrac<Rational> in
// h-variables; quantum coefficients are Laurent polynomials in K-variables.
inline PolyFrac<Rational> invert_coefficient(const PolyFrac<Rational>& f) { return f.inverse(); }

template <class S>
MLaurent<S> invert_coefficient(const MLaurent<S>& f)
{
    if (!f.is_monomial()) {
        throw std::domain_error("skew: only monomial (torus unit) coefficients are invertible in the Laurent model");
    }
    return pow(f, -1);
}

template <class S>
PolyFrac<S> coefficient_one(const PolyFrac<S>*, std::size_t nvars)
{
    return PolyFrac<S>::constant(nvars, S(1));
}

template <class S>
MLaurent<S> coefficient_one(const MLaurent<S>*, std::size_t nvars)
{
    return MLaurent<S>::constant(nvars, S(1));
}

template <class S>
PolyFrac<S> coefficient_zero(const PolyFrac<S>*, std::size_t nvars)
{
    return PolyFrac<S>(nvars);
}

template <class S>
MLaurent<S> coefficient_zero(const MLaurent<S>*, std::size_t nvars)
{
    return MLaurent<S>(nvars);
}

template <class R>
struct coefficient_traits;

template <class S>
struct coefficient_traits<PolyFrac<S>> {
    using scalar = S;
};

template <class S>
struct coefficient_traits<MLaurent<S>> {
    using scalar = S;
};

template <class R>
class ModelContext {
public:
    using coefficient = R;
    using scalar = typename coefficient_traits<R>::scalar;
    using endo = EndoSpec<scalar>;

    /// sigma[i] acts on the coefficient variables; all must commute.
    ModelContext(std::vector<endo> sigma, std::vector<std::string> variable_names, std::string torus_name = "t")
        : sigma_(std::move(sigma)), names_(std::move(variable_names)), torus_name_(std::move(torus_name))
    {
        if (sigma_.empty()) {
            throw std::invalid_argument("ModelContext: torus rank must be positive");
        }
        for (const auto& s : sigma_) {
            if (s.nvars() != names_.size() || s.kind != sigma_.front().kind) {
                throw std::invalid_argument("ModelContext: automorphisms must share kind and variable count");
            }
        }
        check_commuting();
    }

    std::size_t rank() const { return sigma_.size(); }
    std::size_t nvars() const { return names_.size(); }
    const std::vector<endo>& sigma() const { return sigma_; }
    const std::vector<std::string>& names() const { return names_; }
    const std::string& torus_name() const { return torus_name_; }

    /// sigma^m as a single endomorphism.
    endo sigma_power(const Exponent& m) const
    {
        endo r = endo::identity(sigma_.front().kind, nvars());
        for (std::size_t i = 0; i < m.size(); ++i) {
            if (m[i] != 0) {
                r = compose(r, power(sigma_[i], m[i]));
            }
        }
        return r;
    }

    R apply(const R& f, const Exponent& m) const
    {
        if (is_zero_exponent(m)) {
            return f;
        }
        return apply_endo(f, sigma_power(m));
    }

    R one() const { return coefficient_one(static_cast<const R*>(nullptr), nvars()); }
    R zero() const { return coefficient_zero(static_cast<const R*>(nullptr), nvars()); }

    /// Coefficient variable v as an element of R.
    R variable(std::size_t v, int power = 1) const { return R(MLaurent<scalar>::variable(nvars(), v, power)); }

private:
    void check_commuting() const
    {
        for (std::size_t i = 0; i < sigma_.size(); ++i) {
            for (std::size_t j = i + 1; j < sigma_.size(); ++j) {
                for (std::size_t v = 0; v < nvars(); ++v) {
                    const auto x = MLaurent<scalar>::variable(nvars(), v);
                    if (apply_endo(apply_endo(x, sigma_[j]), sigma_[i]) !=
                        apply_endo(apply_endo(x, sigma_[i]), sigma_[j])) {
                        throw std::invalid_argument("ModelContext: automorphisms " + std::to_string(i + 1) + " and " +
                                                    std::to_string(j + 1) + " do not commute");
                    }
                }
            }
        }
    }

    std::vector<endo> sigma_;
    std::vector<std::string> names_;
    std::string torus_name_;
};

/// Multiplicative record of every coefficient inverted during a computation.
template <class R>
struct DenominatorLog {
    std::vector<R> entries;

    void record(const R& f) { entries.push_back(f); }
    void merge(const DenominatorLog& other) { entries.insert(entries.end(), other.entries.begin(), other.entries.end()); }
};

template <class R>
class SkewElem {
public:
    using context_type = ModelContext<R>;
    using term_map = std::map<Exponent, R>;

    SkewElem() = default;
    explicit SkewElem(std::shared_ptr<const context_type> ctx) : ctx_(std::move(ctx)) {}

    static SkewElem term(std::shared_ptr<const context_type> ctx, const R& f, const Exponent& m)
    {
        SkewElem e(std::move(ctx));
        e.add_term(m, f);
        return e;
    }

    static SkewElem coefficient(std::shared_ptr<const context_type> ctx, const R& f)
    {
        const auto n = ctx->rank();
        return term(std::move(ctx), f, zero_exponent(n));
    }

    static SkewElem one(const std::shared_ptr<const context_type>& ctx) { return coefficient(ctx, ctx->one()); }

    /// t^m
    static SkewElem torus(const std::shared_ptr<const context_type>& ctx, const Exponent& m) { return term(ctx, ctx->one(), m); }

    const std::shared_ptr<const context_type>& context() const { return ctx_; }
    const term_map& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_single_term() const { return terms_.size() == 1; }

    void add_term(const Exponent& m, const R& f)
    {
        if (m.size() != ctx_->rank()) {
            throw std::invalid_argument("SkewElem: torus exponent has wrong length");
        }
        if (f.is_zero()) {
            return;
        }
        auto [it, inserted] = terms_.try_emplace(m, f);
        if (!inserted) {
            it->second += f;
            if (it->second.is_zero()) {
                terms_.erase(it);
            }
        }
    }

    SkewElem operator-() const
    {
        SkewElem r(ctx_);
        for (const auto& [m, f] : terms_) {
            r.terms_.emplace(m, -f);
        }
        return r;
    }

    SkewElem& operator+=(const SkewElem& other)
    {
        check_context(other);
        for (const auto& [m, f] : other.terms_) {
            add_term(m, f);
        }
        return *this;
    }

    SkewElem& operator-=(const SkewElem& other) { return *this += -other; }

    template <class Scalar>
    SkewElem scaled(const Scalar& s) const
    {
        SkewElem r(ctx_);
        for (const auto& [m, f] : terms_) {
            r.add_term(m, f * s);
        }
        return r;
    }

    friend SkewElem operator+(SkewElem a, const SkewElem& b) { return a += b; }
    friend SkewElem operator-(SkewElem a, const SkewElem& b) { return a -= b; }

    friend SkewElem operator*(const SkewElem& a, const SkewElem& b)
    {
        a.check_context(b);
        SkewElem r(a.ctx_);
        for (const auto& [ma, fa] : a.terms_) {
            for (const auto& [mb, fb] : b.terms_) {
                r.add_term(ma + mb, fa * a.ctx_->apply(fb, ma));
            }
        }
        return r;
    }

    bool operator==(const SkewElem& other) const { return terms_ == other.terms_; }

    std::string to_string() const
    {
        if (terms_.empty()) {
            return "0";
        }
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!s.empty()) {
                s += " + ";
            }
            s += "(" + gwa::to_string(it->second, ctx_->names()) + ")";
            if (!is_zero_exponent(it->first)) {
                s += "*" + ctx_->torus_name() + "^" + exponent_to_string(it->first);
            }
        }
        return s;
    }

private:
    void check_context(const SkewElem& other) const
    {
        if (ctx_ != other.ctx_) {
            throw std::invalid_argument("SkewElem: operands belong to different model contexts");
        }
    }

    std::shared_ptr<const context_type> ctx_;
    term_map terms_;
};

/// (f t^m)^-1 = sigma^-m(f^-1) t^-m; f is appended to the log.
template <class R>
SkewElem<R> invert(const SkewElem<R>& a, DenominatorLog<R>& log)
{
    if (a.is_zero()) {
        throw std::domain_error("invert: zero element");
    }
    if (!a.is_single_term()) {
        throw std::domain_error("invert: inversion supported only for unit monomials f*t^m, got " +
                                std::to_string(a.terms().size()) + " terms");
    }
    const auto& [m, f] = *a.terms().begin();
    const R finv = invert_coefficient(f);
    if (!f.is_zero()) {
        log.record(f);
    }
    return SkewElem<R>::term(a.context(), a.context()->apply(finv, -m), -m);
}

/// D_i(f) = sigma_i(f) - f.
template <class R>
R twisted_diff(const ModelContext<R>& ctx, std::size_t i, const R& f)
{
    return ctx.apply(f, unit_exponent(ctx.rank(), i)) - f;
}

/// sigma^m(f) - f: the twisted differential along a torus direction.
template <class R>
R twisted_diff_along(const ModelContext<R>& ctx, const Exponent& m, const R& f)
{
    return ctx.apply(f, m) - f;
}

/// prod_{l=0}^{m-1} (sigma_i - q^(2 l d_i)) applied to f.
template <class R>
R q_divided_diff(const ModelContext<R>& ctx, std::size_t i, int m, const R& f, const std::vector<int>& d)
{
    using S = typename ModelContext<R>::scalar;
    if constexpr (!std::is_same_v<S, QScalar>) {
        throw std::logic_error("q_divided_diff: requires the quantum model");
    } else {
        R r = f;
        for (int l = 0; l < m; ++l) {
            r = ctx.apply(r, unit_exponent(ctx.rank(), i)) - r * QScalar::q_power(2 * l * d.at(i));
        }
        return r;
    }
}

template <class R>
SkewElem<R> commutator(const SkewElem<R>& a, const SkewElem<R>& b)
{
    return a * b - b * a;
}

/// ad(x)^p (y)
template <class R>
SkewElem<R> ad_power(const SkewElem<R>& x, SkewElem<R> y, int p)
{
    for (int k = 0; k < p; ++k) {
        y = commutator(x, y);
    }
    return y;
}

/// x y - twist * y x
template <class R>
SkewElem<R> ad_q(const SkewElem<R>& x, const SkewElem<R>& y, const QScalar& twist)
{
    using S = typename ModelContext<R>::scalar;
    if constexpr (!std::is_same_v<S, QScalar>) {
        throw std::logic_error("ad_q: requires the quantum model");
    } else {
        return x * y - (y * x).scaled(twist);
    }
}

/// Ad(u)(v) = u v u^-1 for a unit monomial u.
template <class R>
SkewElem<R> conjugate(const SkewElem<R>& u, const SkewElem<R>& v, DenominatorLog<R>& log)
{
    return u * v * invert(u, log);
}

}  // namespace gwa
