#pragma once

#include <stdexcept>
#include <string>

#include "hopfcole/families.hpp"
#include "hopfcole/linop.hpp"
#include "hopfcole/multipoly.hpp"
#include "hopfcole/ratfunc.hpp"
#include "hopfcole/rational.hpp"

namespace hopfcole {

// ---------------------------------------------------------------------------
// Solution builders
// ---------------------------------------------------------------------------

// u = n H_{n-1}^(m)(x,y) / H_n^(m)(x,y); by the derivative recurrence this is
// the log-derivative of H_n^(m) in x.
inline RationalFn phi_solution(int n, int m) {
    if (n < 1) throw std::invalid_argument("phi_solution: degree must be >= 1");
    if (m < 2) throw std::invalid_argument("phi_solution: order must be >= 2");
    return RationalFn(hermite_lacunary(n - 1, m).scaled(Rational(n)), hermite_lacunary(n, m));
}

// u = (d/dx L_n) / L_n over (x, t).
inline RationalFn laguerre_solution(int n) {
    if (n < 1) throw std::invalid_argument("laguerre_solution: degree must be >= 1");
    return hopf_cole(laguerre2(n), "x");
}

// Log-derivative of the hybrid family in x, over (x, y).
inline RationalFn hybrid_solution(int n) {
    if (n < 1) throw std::invalid_argument("hybrid_solution: degree must be >= 1");
    return hopf_cole(hybrid_l2(n), "x");
}

// u = n H_{n-1}^(m) / H_n^(m) over the complete-family variables (x1,...,xm).
inline RationalFn hierarchical_solution(int n, int m) {
    if (n < 1) throw std::invalid_argument("hierarchical_solution: degree must be >= 1");
    if (m < 2) throw std::invalid_argument("hierarchical_solution: order must be >= 2");
    return RationalFn(hermite_complete_m(n - 1, m).scaled(Rational(n)), hermite_complete_m(n, m));
}

// u = n H_{n-1}(x+ay, by, cy) / H_n(x+ay, by, cy) over (x, y).
inline RationalFn combined_solution(int n, const Rational& a, const Rational& b,
                                    const Rational& c) {
    if (n < 1) throw std::invalid_argument("combined_solution: degree must be >= 1");
    return RationalFn(shifted_hermite3(n - 1, a, b, c).scaled(Rational(n)),
                      shifted_hermite3(n, a, b, c));
}

// u(x,y,t) = -H_n(y,t) * n H_{n-1}(x,t) / H_n(x,t), over (x, y, t).
inline RationalFn varcoef_solution(int n) {
    if (n < 1) throw std::invalid_argument("varcoef_solution: degree must be >= 1");
    const std::vector<std::string> vars{"x", "y", "t"};
    MultiPoly f = hermite2_named(n, "y", "t").with_vars(vars);
    MultiPoly num = hermite2_named(n - 1, "x", "t").with_vars(vars).scaled(Rational(-n)) * f;
    MultiPoly den = hermite2_named(n, "x", "t").with_vars(vars);
    return RationalFn(std::move(num), std::move(den));
}

// Adds 1 to the numerator — the built-in way to break a rational solution for
// negative-control runs.
inline RationalFn perturb_num_plus_one(const RationalFn& u) {
    return RationalFn(u.num() + MultiPoly::constant(u.num().vars(), Rational(1)), u.den());
}

// Adds the monomial space*time to a polynomial candidate.  Linear heat-type
// operators annihilate constants, so "+1" would be an inert perturbation for
// them; space*time is the smallest monomial none of the equations here kill.
inline MultiPoly perturb_add_bilinear(const MultiPoly& z, const std::string& space_var,
                                      const std::string& time_var) {
    return z + MultiPoly::variable(z.vars(), space_var) *
                   MultiPoly::variable(z.vars(), time_var);
}

// ---------------------------------------------------------------------------
// Nonlinear residuals (rational): zero iff the candidate solves the equation
// ---------------------------------------------------------------------------

// d/d time u - d/d space (d/d space + u)^(m-1) u.
inline RationalFn burgers_residual(const RationalFn& u, int m,
                                   const std::string& time_var = "y",
                                   const std::string& space_var = "x") {
    if (m < 2) throw std::invalid_argument("burgers_residual: order must be >= 2");
    RationalFn p = shifted_derivative_power(u, m - 1, space_var);
    return u.derivative(time_var) - p.derivative(space_var);
}

// d/d xk u - d/d x1 (d/d x1 + u)^(k-1) u for the complete-family solution.
inline RationalFn hierarchical_burgers_residual(int n, int m, int k, bool perturb = false) {
    if (k <= 1 || k > m)
        throw std::invalid_argument("hierarchical_burgers_residual: need 1 < k <= m");
    RationalFn u = hierarchical_solution(n, m);
    if (perturb) u = perturb_num_plus_one(u);
    RationalFn p = shifted_derivative_power(u, k - 1, "x1");
    return u.derivative("x" + std::to_string(k)) - p.derivative("x1");
}

// d/dt u - [d/dx x d/dx u + d/dx u + u^2 + x d/dx(u^2)] for u built from the
// two-variable Laguerre family.
inline RationalFn laguerre_burgers_residual(int n, bool perturb = false) {
    RationalFn u = laguerre_solution(n);
    if (perturb) u = perturb_num_plus_one(u);
    RationalFn xd = laguerre_derivative_op("x").apply(u);
    RationalFn u2 = u * u;
    RationalFn x_du2 = RationalFn(MultiPoly::variable(u.vars(), "x")) * u2.derivative("x");
    return u.derivative("t") - (xd + u.derivative("x") + u2 + x_du2);
}

// For u = ln h the equation  du/dt = d/dx x d/dx u + x (du/dx)^2  reduces to a
// rational identity: with du/dt = h_t/h, d/dx x d/dx u = (h_x + x h_xx)/h -
// x h_x^2/h^2 and x(du/dx)^2 = x h_x^2/h^2, the quadratic pieces cancel and
// the residual is exactly (h_t - d/dx x d/dx h)/h.  That reduced form is what
// is returned here, with h the two-variable Laguerre polynomial.
inline RationalFn log_burgers_residual_laguerre(int n, bool perturb = false) {
    if (n < 0) throw std::invalid_argument("log_burgers_residual_laguerre: negative degree");
    MultiPoly h = laguerre2(n);
    if (perturb) h = perturb_add_bilinear(h, "x", "t");
    MultiPoly num = h.partial_derivative("t") - laguerre_derivative_op("x").apply(h);
    return RationalFn(std::move(num), std::move(h));
}

// d/dy y d/dy Z - d²/dx² Z for the hybrid family (polynomial residual).
inline MultiPoly hybrid_linear_residual(int n, bool perturb = false) {
    MultiPoly z = hybrid_l2(n);
    if (perturb) z = perturb_add_bilinear(z, "x", "y");
    return laguerre_derivative_op("y").apply(z) - z.partial_derivative("x").partial_derivative("x");
}

// For u = ln Z the equation  d/dy y d/dy u + y (u_y)^2 = d²/dx² u + (u_x)^2
// reduces the same way as the Laguerre log-form: the LHS collapses to
// (d/dy y d/dy Z)/Z and the RHS to Z_xx/Z, so the residual is
// (d/dy y d/dy Z - Z_xx)/Z with Z the hybrid polynomial.
inline RationalFn hybrid_log_burgers_residual(int n, bool perturb = false) {
    MultiPoly z = hybrid_l2(n);
    if (perturb) z = perturb_add_bilinear(z, "x", "y");
    MultiPoly num =
        laguerre_derivative_op("y").apply(z) - z.partial_derivative("x").partial_derivative("x");
    return RationalFn(std::move(num), std::move(z));
}

// d/dt u + (2/F) u du/dx - d²u/dx² - d²u/dy², F = H_n(y,t), for the
// variable-coefficient candidate u = -F * n H_{n-1}(x,t)/H_n(x,t).
inline RationalFn variable_coefficient_residual(int n, bool perturb = false) {
    RationalFn u = varcoef_solution(n);
    if (perturb) u = perturb_num_plus_one(u);
    MultiPoly f = hermite2_named(n, "y", "t").with_vars(u.vars());
    RationalFn two_over_f(MultiPoly::constant(u.vars(), Rational(2)), f);
    RationalFn nonlinear = two_over_f * u * u.derivative("x");
    RationalFn uxx = u.derivative("x").derivative("x");
    RationalFn uyy = u.derivative("y").derivative("y");
    return u.derivative("t") + nonlinear - uxx - uyy;
}

// d/dy u - d/dx [a u + b (d/dx + u) u + c (d/dx + u)^2 u].
inline RationalFn combined_burgers_residual(int n, const Rational& a, const Rational& b,
                                            const Rational& c, bool perturb = false) {
    RationalFn u = combined_solution(n, a, b, c);
    if (perturb) u = perturb_num_plus_one(u);
    RationalFn p1 = shifted_derivative_power(u, 1, "x");
    RationalFn p2 = shifted_derivative_power(u, 2, "x");
    RationalFn inner = u.scaled(a) + p1.scaled(b) + p2.scaled(c);
    return u.derivative("y") - inner.derivative("x");
}

// (d/dx + F_n) F_n - S_n with F_n = (n-1) H_{n-2}/H_{n-1} and
// S_n = (n-1)(n-2) H_{n-3}/H_{n-1}.
inline RationalFn hermite_identity_residual(int n, bool perturb = false) {
    if (n < 3) throw std::invalid_argument("hermite_identity_residual: degree must be >= 3");
    RationalFn f(hermite2(n - 2).scaled(Rational(n - 1)), hermite2(n - 1));
    if (perturb) f = perturb_num_plus_one(f);
    RationalFn s(hermite2(n - 3).scaled(Rational((n - 1) * (n - 2))), hermite2(n - 1));
    return shifted_derivative_power(f, 1, "x") - s;
}

// ---------------------------------------------------------------------------
// Linear residuals (polynomial)
// ---------------------------------------------------------------------------

// d/dy Z - d^m/dx^m Z for the lacunary family (m-th order heat-type equation).
inline MultiPoly heat_residual(int n, int m, bool perturb = false) {
    if (m < 2) throw std::invalid_argument("heat_residual: order must be >= 2");
    MultiPoly z = hermite_lacunary(n, m);
    if (perturb) z = perturb_add_bilinear(z, "x", "y");
    return linear_pde_residual(z, "y", nth_derivative_op("x", static_cast<unsigned>(m)));
}

// d/dy Z - (a d/dx + b d²/dx² + c d³/dx³) Z for the shifted candidate.
inline MultiPoly combined_linear_residual(int n, const Rational& a, const Rational& b,
                                          const Rational& c, bool perturb = false) {
    if (n < 0) throw std::invalid_argument("combined_linear_residual: negative degree");
    MultiPoly z = shifted_hermite3(n, a, b, c);
    if (perturb) z = perturb_add_bilinear(z, "x", "y");
    return linear_pde_residual(z, "y", derivative_polynomial_op("x", {a, b, c}));
}

}  // namespace hopfcole
