#pragma once

#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcole/multipoly.hpp"
#include "hopfcole/rational.hpp"

namespace hopfcole {

namespace detail {

// n! * sum_{r=0}^{floor(n/gap)} y^r x^(n-gap*r) / ((n-gap*r)! r!), the shared
// shape of the two-variable Hermite family and its lacunary generalizations.
inline MultiPoly hermite_gap_named(int n, int gap, const std::string& xname,
                                   const std::string& yname) {
    if (n < 0) throw std::invalid_argument("hermite family: negative degree");
    if (gap < 2) throw std::invalid_argument("hermite family: gap order must be >= 2");
    MultiPoly p({xname, yname});
    Rational nfact = Rational::factorial(static_cast<unsigned long>(n));
    for (int r = 0; n - gap * r >= 0; ++r) {
        int k = n - gap * r;
        Rational c = nfact / (Rational::factorial(static_cast<unsigned long>(k)) *
                              Rational::factorial(static_cast<unsigned long>(r)));
        p.add_term({static_cast<unsigned>(k), static_cast<unsigned>(r)}, c);
    }
    return p;
}

}  // namespace detail

// H_n(x,y) = n! * sum_r y^r x^(n-2r) / ((n-2r)! r!), over (x, y).
inline MultiPoly hermite2(int n) { return detail::hermite_gap_named(n, 2, "x", "y"); }

// Same family over caller-chosen variable names (space-like first).
inline MultiPoly hermite2_named(int n, const std::string& xname, const std::string& yname) {
    return detail::hermite_gap_named(n, 2, xname, yname);
}

// H_n^(m)(x,y) = n! * sum_r y^r x^(n-mr) / ((n-mr)! r!), over (x, y); m=2 is hermite2.
inline MultiPoly hermite_lacunary(int n, int m) {
    return detail::hermite_gap_named(n, m, "x", "y");
}

// Complete third-order family over (x1, x2, x3):
// H_n^(3)(x1,x2,x3) = n! * sum_r H_{n-3r}(x1,x2) x3^r / ((n-3r)! r!).
inline MultiPoly hermite3_complete(int n) {
    if (n < 0) throw std::invalid_argument("hermite3_complete: negative degree");
    const std::vector<std::string> vars{"x1", "x2", "x3"};
    MultiPoly acc(vars);
    Rational nfact = Rational::factorial(static_cast<unsigned long>(n));
    for (int r = 0; n - 3 * r >= 0; ++r) {
        int k = n - 3 * r;
        MultiPoly inner = detail::hermite_gap_named(k, 2, "x1", "x2").with_vars(vars);
        MultiPoly x3r(vars);
        x3r.add_term({0, 0, static_cast<unsigned>(r)},
                     nfact / (Rational::factorial(static_cast<unsigned long>(k)) *
                              Rational::factorial(static_cast<unsigned long>(r))));
        acc = acc + inner * x3r;
    }
    return acc;
}

// Complete order-m family over (x1, ..., xm), the coefficient
// n! * [t^n] prod_k exp(xk t^k).  Expanding each exponential and collecting
// t^n gives the closed multinomial form used here:
//   n! * sum over (r1,...,rm) with sum(k*rk) = n of prod_k xk^rk / rk!.
// generating_series_check() re-derives the same values by actually multiplying
// truncated series, so the two routes validate each other.
inline MultiPoly hermite_complete_m(int n, int m) {
    if (n < 0) throw std::invalid_argument("hermite_complete_m: negative degree");
    if (m < 2) throw std::invalid_argument("hermite_complete_m: order must be >= 2");
    std::vector<std::string> vars;
    vars.reserve(static_cast<std::size_t>(m));
    for (int k = 1; k <= m; ++k) vars.push_back("x" + std::to_string(k));

    MultiPoly p(vars);
    Rational nfact = Rational::factorial(static_cast<unsigned long>(n));
    std::vector<unsigned> exps(static_cast<std::size_t>(m), 0);

    // Enumerate exponent tuples with sum(k * r_k) = n, filling slots m..1.
    std::function<void(int, int, Rational)> walk = [&](int k, int remaining, Rational invprod) {
        if (k == 1) {
            exps[0] = static_cast<unsigned>(remaining);
            Rational c = nfact * invprod /
                         Rational::factorial(static_cast<unsigned long>(remaining));
            p.add_term(exps, c);
            exps[0] = 0;
            return;
        }
        for (int r = 0; r * k <= remaining; ++r) {
            exps[static_cast<std::size_t>(k - 1)] = static_cast<unsigned>(r);
            walk(k - 1, remaining - r * k,
                 invprod / Rational::factorial(static_cast<unsigned long>(r)));
        }
        exps[static_cast<std::size_t>(k - 1)] = 0;
    };
    walk(m, n, Rational(1));
    return p;
}

// L_n(x,t) = n! * sum_{r=0}^{n} t^(n-r) x^r / ((n-r)! (r!)^2), over (x, t).
inline MultiPoly laguerre2(int n) {
    if (n < 0) throw std::invalid_argument("laguerre2: negative degree");
    MultiPoly p({"x", "t"});
    Rational nfact = Rational::factorial(static_cast<unsigned long>(n));
    for (int r = 0; r <= n; ++r) {
        Rational rf = Rational::factorial(static_cast<unsigned long>(r));
        Rational c = nfact / (Rational::factorial(static_cast<unsigned long>(n - r)) * rf * rf);
        p.add_term({static_cast<unsigned>(r), static_cast<unsigned>(n - r)}, c);
    }
    return p;
}

// Hybrid family over (x, y): n! * sum_r y^r x^(n-2r) / ((n-2r)! (r!)^2).
inline MultiPoly hybrid_l2(int n) {
    if (n < 0) throw std::invalid_argument("hybrid_l2: negative degree");
    MultiPoly p({"x", "y"});
    Rational nfact = Rational::factorial(static_cast<unsigned long>(n));
    for (int r = 0; n - 2 * r >= 0; ++r) {
        int k = n - 2 * r;
        Rational rf = Rational::factorial(static_cast<unsigned long>(r));
        Rational c = nfact / (Rational::factorial(static_cast<unsigned long>(k)) * rf * rf);
        p.add_term({static_cast<unsigned>(k), static_cast<unsigned>(r)}, c);
    }
    return p;
}

// Truncated Bessel-like series over (z): sum_{r=0}^{N} z^r / (r!)^2.
inline MultiPoly bessel_c0_truncated(int N) {
    if (N < 0) throw std::invalid_argument("bessel_c0_truncated: negative truncation");
    MultiPoly p({"z"});
    for (int r = 0; r <= N; ++r) {
        Rational rf = Rational::factorial(static_cast<unsigned long>(r));
        p.add_term({static_cast<unsigned>(r)}, (rf * rf).inverse());
    }
    return p;
}

// The operator series sum_r y^r d^{2r}/dx^{2r} (x^n) / (r!)^2, evaluated by
// actually differentiating x^n repeatedly.  Must reproduce hybrid_l2(n); kept
// as an independent operational route.
inline MultiPoly apply_c0_operator(int n) {
    if (n < 0) throw std::invalid_argument("apply_c0_operator: negative degree");
    const std::vector<std::string> vars{"x", "y"};
    MultiPoly xn(vars);
    xn.add_term({static_cast<unsigned>(n), 0}, Rational(1));
    MultiPoly acc(vars);
    MultiPoly d = xn;
    for (int r = 0; 2 * r <= n; ++r) {
        Rational rf = Rational::factorial(static_cast<unsigned long>(r));
        MultiPoly yr(vars);
        yr.add_term({0, static_cast<unsigned>(r)}, (rf * rf).inverse());
        acc = acc + d * yr;
        d = d.partial_derivative("x").partial_derivative("x");
    }
    return acc;
}

// hermite3_complete(n) with x1 -> x + alpha*y, x2 -> beta*y, x3 -> gamma*y,
// yielding a polynomial over (x, y).
inline MultiPoly shifted_hermite3(int n, const Rational& alpha, const Rational& beta,
                                  const Rational& gamma) {
    if (n < 0) throw std::invalid_argument("shifted_hermite3: negative degree");
    const std::vector<std::string> vars{"x", "y"};
    MultiPoly x = MultiPoly::variable(vars, "x");
    MultiPoly y = MultiPoly::variable(vars, "y");
    MultiPoly h = hermite3_complete(n)
                      .substituted("x1", x + y.scaled(alpha))
                      .substituted("x2", y.scaled(beta))
                      .substituted("x3", y.scaled(gamma));
    return h.with_vars(vars);
}

// Extracts the coefficient of tvar^k as a polynomial over the remaining context.
inline MultiPoly coefficient_of(const MultiPoly& p, const std::string& tvar, unsigned k) {
    std::size_t ti = p.var_index(tvar);
    std::vector<std::string> rest;
    for (std::size_t i = 0; i < p.vars().size(); ++i)
        if (i != ti) rest.push_back(p.vars()[i]);
    MultiPoly out(rest);
    for (const auto& [e, c] : p.terms()) {
        if (e[ti] != k) continue;
        std::vector<unsigned> re;
        re.reserve(rest.size());
        for (std::size_t i = 0; i < e.size(); ++i)
            if (i != ti) re.push_back(e[i]);
        out.add_term(re, c);
    }
    return out;
}

// Multiplies the truncated exponential series prod_k exp(xk t^k) up to order
// t^N and checks n! * [t^n] against hermite_complete_m(n, m) + offset for
// every n <= N.  A nonzero offset deliberately breaks the comparison and is
// used as a negative control.
inline bool generating_series_check(int m, int N, const Rational& offset = Rational(0)) {
    if (m < 2) throw std::invalid_argument("generating_series_check: order must be >= 2");
    if (N < 0) throw std::invalid_argument("generating_series_check: negative truncation");
    std::vector<std::string> vars;
    for (int k = 1; k <= m; ++k) vars.push_back("x" + std::to_string(k));
    vars.push_back("t");
    const std::size_t ti = vars.size() - 1;

    MultiPoly product = MultiPoly::constant(vars, Rational(1));
    for (int k = 1; k <= m; ++k) {
        // exp(xk t^k) truncated at t^N.
        MultiPoly series(vars);
        for (int r = 0; r * k <= N; ++r) {
            std::vector<unsigned> e(vars.size(), 0);
            e[static_cast<std::size_t>(k - 1)] = static_cast<unsigned>(r);
            e[ti] = static_cast<unsigned>(r * k);
            series.add_term(e, Rational::factorial(static_cast<unsigned long>(r)).inverse());
        }
        MultiPoly next = product * series;
        // Drop everything beyond the working order before the next factor.
        MultiPoly pruned(vars);
        for (const auto& [e, c] : next.terms())
            if (e[ti] <= static_cast<unsigned>(N)) pruned.add_term(e, c);
        product = pruned;
    }

    for (int n = 0; n <= N; ++n) {
        MultiPoly coeff = coefficient_of(product, "t", static_cast<unsigned>(n))
                              .scaled(Rational::factorial(static_cast<unsigned long>(n)));
        MultiPoly direct = hermite_complete_m(n, m).with_vars(coeff.vars());
        direct = direct + MultiPoly::constant(coeff.vars(), offset);
        if (!(coeff == direct)) return false;
    }
    return true;
}

// Declarative description of one family instance, as exchanged over JSON and
// the command line.
struct FamilySpec {
    std::string kind;  // Hermite2 | HermiteLacunary | Hermite3Complete | HermiteCompleteM |
                       // Laguerre2 | HybridL2 | BesselC0 | ShiftedHermite3
    int n = 0;
    int m = 0;
    Rational alpha, beta, gamma;
    int N = 0;
};

inline MultiPoly build_family(const FamilySpec& spec) {
    if (spec.kind == "Hermite2") return hermite2(spec.n);
    if (spec.kind == "HermiteLacunary") return hermite_lacunary(spec.n, spec.m);
    if (spec.kind == "Hermite3Complete") return hermite3_complete(spec.n);
    if (spec.kind == "HermiteCompleteM") return hermite_complete_m(spec.n, spec.m);
    if (spec.kind == "Laguerre2") return laguerre2(spec.n);
    if (spec.kind == "HybridL2") return hybrid_l2(spec.n);
    if (spec.kind == "BesselC0") return bessel_c0_truncated(spec.N);
    if (spec.kind == "ShiftedHermite3")
        return shifted_hermite3(spec.n, spec.alpha, spec.beta, spec.gamma);
    throw std::invalid_argument("build_family: unknown kind '" + spec.kind + "'");
}

}  // namespace hopfcole
