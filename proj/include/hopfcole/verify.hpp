#pragma once

#include <chrono>
#include <cstdint>
#include <stdexcept>
#include <string>

#include "hopfcole/json_io.hpp"
#include "hopfcole/pde.hpp"

namespace hopfcole {

// Parameters for one verification run; each equation reads only the fields it
// needs.  alpha/beta/gamma default to 1 so the combined equations are
// runnable with just a degree.
struct EquationParams {
    int n = 0;
    int m = 2;
    int k = 2;
    int N = 8;
    Rational alpha = Rational(1);
    Rational beta = Rational(1);
    Rational gamma = Rational(1);
    bool perturb = false;
};

struct VerifyReport {
    std::string equation;
    json params;
    bool residual_zero = false;
    std::size_t residual_num_terms = 0;
    std::int64_t elapsed_ms = 0;

    json to_json() const {
        json j;
        j["equation"] = equation;
        j["params"] = params;
        j["residual_zero"] = residual_zero;
        j["residual_num_terms"] = residual_num_terms;
        j["elapsed_ms"] = elapsed_ms;
        return j;
    }
};

inline bool is_known_equation(const std::string& id) {
    static const char* ids[] = {"burgers",    "hierarchical", "laguerre", "laguerre-log",
                                "hybrid",     "hybrid-log",   "varcoef",  "combined",
                                "combined-linear", "identity", "heat",    "genfun"};
    for (const char* s : ids)
        if (id == s) return true;
    return false;
}

// Runs one residual verification and assembles the report.  Throws
// std::invalid_argument for unknown equations or out-of-range parameters.
inline VerifyReport run_verification(const std::string& equation, const EquationParams& p) {
    VerifyReport rep;
    rep.equation = equation;
    json params = json::object();
    auto start = std::chrono::steady_clock::now();

    bool zero = false;
    std::size_t terms = 0;

    if (equation == "burgers") {
        params["n"] = p.n;
        params["m"] = p.m;
        RationalFn u = phi_solution(p.n, p.m);
        if (p.perturb) u = perturb_num_plus_one(u);
        RationalFn r = burgers_residual(u, p.m);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "hierarchical") {
        params["n"] = p.n;
        params["m"] = p.m;
        params["k"] = p.k;
        RationalFn r = hierarchical_burgers_residual(p.n, p.m, p.k, p.perturb);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "laguerre") {
        params["n"] = p.n;
        RationalFn r = laguerre_burgers_residual(p.n, p.perturb);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "laguerre-log") {
        params["n"] = p.n;
        RationalFn r = log_burgers_residual_laguerre(p.n, p.perturb);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "hybrid") {
        params["n"] = p.n;
        MultiPoly r = hybrid_linear_residual(p.n, p.perturb);
        zero = r.is_zero();
        terms = r.num_terms();
    } else if (equation == "hybrid-log") {
        params["n"] = p.n;
        RationalFn r = hybrid_log_burgers_residual(p.n, p.perturb);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "varcoef") {
        params["n"] = p.n;
        RationalFn r = variable_coefficient_residual(p.n, p.perturb);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "combined") {
        params["n"] = p.n;
        params["alpha"] = p.alpha.to_string();
        params["beta"] = p.beta.to_string();
        params["gamma"] = p.gamma.to_string();
        RationalFn r = combined_burgers_residual(p.n, p.alpha, p.beta, p.gamma, p.perturb);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "combined-linear") {
        params["n"] = p.n;
        params["alpha"] = p.alpha.to_string();
        params["beta"] = p.beta.to_string();
        params["gamma"] = p.gamma.to_string();
        MultiPoly r = combined_linear_residual(p.n, p.alpha, p.beta, p.gamma, p.perturb);
        zero = r.is_zero();
        terms = r.num_terms();
    } else if (equation == "identity") {
        params["n"] = p.n;
        RationalFn r = hermite_identity_residual(p.n, p.perturb);
        zero = equals_zero(r);
        terms = r.num().num_terms();
    } else if (equation == "heat") {
        params["n"] = p.n;
        params["m"] = p.m;
        MultiPoly r = heat_residual(p.n, p.m, p.perturb);
        zero = r.is_zero();
        terms = r.num_terms();
    } else if (equation == "genfun") {
        params["m"] = p.m;
        params["N"] = p.N;
        zero = generating_series_check(p.m, p.N, p.perturb ? Rational(1) : Rational(0));
        terms = zero ? 0 : 1;
    } else {
        throw std::invalid_argument("run_verification: unknown equation '" + equation + "'");
    }

    if (p.perturb) params["perturb"] = true;
    auto end = std::chrono::steady_clock::now();
    rep.params = std::move(params);
    rep.residual_zero = zero;
    rep.residual_num_terms = terms;
    rep.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(end - start).count();
    return rep;
}

}  // namespace hopfcole
