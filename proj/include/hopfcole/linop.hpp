#pragma once

#include <string>
#include <vector>

#include "hopfcole/multipoly.hpp"
#include "hopfcole/ratfunc.hpp"
#include "hopfcole/rational.hpp"

namespace hopfcole {

// Linear differential operator with rational coefficients: a sum of terms,
// each a coefficient times a chain of atoms from {d/d var, multiply-by-var}.
// A chain is written left-to-right in standard operator notation and is
// applied right-to-left: the chain {D(x), M(x), D(x)} is the Laguerre
// derivative d/dx x d/dx — differentiate, multiply by x, differentiate.
struct LinearDiffOp {
    struct Atom {
        enum class Kind { Derivative, MultiplyByVar };
        Kind kind;
        std::string var;
    };
    struct Term {
        Rational coeff;
        std::vector<Atom> atoms;
    };
    std::vector<Term> terms;

    static Atom d(std::string var) { return {Atom::Kind::Derivative, std::move(var)}; }
    static Atom mul(std::string var) { return {Atom::Kind::MultiplyByVar, std::move(var)}; }

    MultiPoly apply(const MultiPoly& p) const {
        MultiPoly acc(p.vars());
        for (const auto& term : terms) {
            MultiPoly w = p;
            for (auto it = term.atoms.rbegin(); it != term.atoms.rend(); ++it) {
                if (it->kind == Atom::Kind::Derivative)
                    w = w.partial_derivative(it->var);
                else
                    w = w * MultiPoly::variable(w.vars(), it->var);
            }
            acc = acc + w.scaled(term.coeff);
        }
        return acc;
    }

    // Extension to rational functions by composing the quotient-rule
    // derivative and multiplication; no separate mechanism.
    RationalFn apply(const RationalFn& u) const {
        RationalFn acc = RationalFn::constant(u.vars(), Rational(0));
        for (const auto& term : terms) {
            RationalFn w = u;
            for (auto it = term.atoms.rbegin(); it != term.atoms.rend(); ++it) {
                if (it->kind == Atom::Kind::Derivative)
                    w = w.derivative(it->var);
                else
                    w = w * RationalFn(MultiPoly::variable(w.vars(), it->var));
            }
            acc = acc + w.scaled(term.coeff);
        }
        return acc;
    }
};

// d^k/d var^k
inline LinearDiffOp nth_derivative_op(const std::string& var, unsigned k) {
    LinearDiffOp op;
    LinearDiffOp::Term t;
    t.coeff = Rational(1);
    for (unsigned i = 0; i < k; ++i) t.atoms.push_back(LinearDiffOp::d(var));
    op.terms.push_back(std::move(t));
    return op;
}

// The Laguerre derivative d/d var · var · d/d var.
inline LinearDiffOp laguerre_derivative_op(const std::string& var) {
    LinearDiffOp op;
    op.terms.push_back({Rational(1),
                        {LinearDiffOp::d(var), LinearDiffOp::mul(var), LinearDiffOp::d(var)}});
    return op;
}

// c1*d/dv + c2*d²/dv² + ... + ck*d^k/dv^k (coeffs[i] multiplies the (i+1)-th
// derivative; zero coefficients contribute no term).
inline LinearDiffOp derivative_polynomial_op(const std::string& var,
                                             const std::vector<Rational>& coeffs) {
    LinearDiffOp op;
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (coeffs[i].is_zero()) continue;
        LinearDiffOp::Term t;
        t.coeff = coeffs[i];
        for (std::size_t j = 0; j <= i; ++j) t.atoms.push_back(LinearDiffOp::d(var));
        op.terms.push_back(std::move(t));
    }
    return op;
}

// LHS - RHS for a linear PDE, both sides given as operators on the candidate.
inline MultiPoly linear_pde_residual(const MultiPoly& z, const LinearDiffOp& lhs,
                                     const LinearDiffOp& rhs) {
    return lhs.apply(z) - rhs.apply(z);
}

// Common case: LHS is d/d time_var.
inline MultiPoly linear_pde_residual(const MultiPoly& z, const std::string& time_var,
                                     const LinearDiffOp& rhs) {
    return z.partial_derivative(time_var) - rhs.apply(z);
}

}  // namespace hopfcole
