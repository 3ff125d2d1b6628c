#pragma once

#include <stdexcept>
#include <string>
#include <utility>

#include "hopfcole/multipoly.hpp"
#include "hopfcole/rational.hpp"

namespace hopfcole {

// Exact rational function num/den over a shared variable context.  No GCD or
// cancellation is ever attempted: equality is decided by cross-multiplication,
// which exact polynomial arithmetic settles unambiguously.
class RationalFn {
public:
    RationalFn(MultiPoly num, MultiPoly den) {
        if (den.is_zero()) throw std::invalid_argument("RationalFn: zero denominator");
        if (num.vars() == den.vars()) {
            num_ = std::move(num);
            den_ = std::move(den);
        } else {
            auto m = MultiPoly::merged_vars(num, den);
            num_ = num.with_vars(m);
            den_ = den.with_vars(m);
        }
    }

    // Embeds a polynomial as p/1.
    explicit RationalFn(const MultiPoly& p)
        : num_(p), den_(MultiPoly::constant(p.vars(), Rational(1))) {}

    static RationalFn constant(std::vector<std::string> vars, const Rational& c) {
        return RationalFn(MultiPoly::constant(vars, c),
                          MultiPoly::constant(std::move(vars), Rational(1)));
    }

    const MultiPoly& num() const { return num_; }
    const MultiPoly& den() const { return den_; }
    const std::vector<std::string>& vars() const { return num_.vars(); }

    bool is_zero() const { return num_.is_zero(); }

    RationalFn operator+(const RationalFn& o) const {
        // When the denominators are structurally identical the sum collapses
        // to (a+c)/b — the same value as (ab+cb)/b² under cross-multiplication
        // but without squaring the denominator, which keeps long residual
        // chains polynomial-sized instead of exponential.
        if (den_ == o.den_) return RationalFn(num_ + o.num_, den_);
        return RationalFn(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
    }

    RationalFn operator-(const RationalFn& o) const {
        if (den_ == o.den_) return RationalFn(num_ - o.num_, den_);
        return RationalFn(num_ * o.den_ - o.num_ * den_, den_ * o.den_);
    }

    RationalFn operator-() const { return RationalFn(-num_, den_); }

    RationalFn operator*(const RationalFn& o) const {
        return RationalFn(num_ * o.num_, den_ * o.den_);
    }

    RationalFn operator/(const RationalFn& o) const {
        if (o.num_.is_zero()) throw std::invalid_argument("RationalFn: division by zero function");
        return RationalFn(num_ * o.den_, den_ * o.num_);
    }

    RationalFn scaled(const Rational& c) const { return RationalFn(num_.scaled(c), den_); }

    // Quotient rule, exact, no cancellation: (n'd − nd')/d².
    RationalFn derivative(const std::string& var) const {
        MultiPoly n = num_.partial_derivative(var) * den_ - num_ * den_.partial_derivative(var);
        return RationalFn(std::move(n), den_ * den_);
    }

    bool equals_crossmult(const RationalFn& o) const {
        return (num_ * o.den_ - o.num_ * den_).is_zero();
    }

    std::string to_string() const { return "(" + num_.to_string() + ") / (" + den_.to_string() + ")"; }

private:
    MultiPoly num_, den_;
};

// The log-derivative transform u = (d/d var) Z / Z.
inline RationalFn hopf_cole(const MultiPoly& z, const std::string& var) {
    if (z.is_zero()) throw std::invalid_argument("hopf_cole: zero input polynomial");
    return RationalFn(z.partial_derivative(var), z);
}

inline bool equals_zero(const RationalFn& u) { return u.num().is_zero(); }

// Scales num and den by the same rational constant so den's leading
// coefficient (graded-lex greatest monomial) becomes 1.  Value unchanged
// under cross-multiplication.
inline RationalFn normalize_content(const RationalFn& u) {
    Rational lc = u.den().leading_coefficient();
    Rational inv = lc.inverse();
    return RationalFn(u.num().scaled(inv), u.den().scaled(inv));
}

// (d/d var + u·)^k applied to u.  Equivalent to k-fold iteration of
// w ↦ derivative(w) + u·w starting from w = u, but carried on the common
// denominator q^{j+1}: with u = p/q, the invariant (∂+u)^j u = a_j / q^{j+1}
// gives a_{j+1} = q·∂a_j − (j+1)(∂q)·a_j + p·a_j, since
//   ∂(a_j/q^{j+1}) = (q·∂a_j − (j+1)(∂q)·a_j)/q^{j+2} and
//   u·(a_j/q^{j+1}) = p·a_j/q^{j+2}.
// The naive iteration triples the denominator degree per step; this form
// grows it linearly, which is what makes high-order equations tractable.
inline RationalFn shifted_derivative_power(const RationalFn& u, int k, const std::string& var) {
    if (k < 0) throw std::invalid_argument("shifted_derivative_power: negative power");
    const MultiPoly& p = u.num();
    const MultiPoly& q = u.den();
    MultiPoly dq = q.partial_derivative(var);
    MultiPoly a = p;
    MultiPoly qpow = q;
    for (int j = 0; j < k; ++j) {
        a = q * a.partial_derivative(var) - dq.scaled(Rational(j + 1)) * a + p * a;
        qpow = qpow * q;
    }
    return RationalFn(std::move(a), std::move(qpow));
}

}  // namespace hopfcole
