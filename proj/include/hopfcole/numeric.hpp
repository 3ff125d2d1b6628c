#pragma once

#include <charconv>
#include <cmath>
#include <cstdlib>
#include <functional>
#include <map>
#include <optional>
#include <ostream>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcole/ratfunc.hpp"

namespace hopfcole {

// Shortest decimal string that round-trips to the same binary64.
inline std::string format_double(double v) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

struct AxisSpec {
    std::string var;
    double min = 0.0;
    double max = 0.0;
    int steps = 0;  // number of intervals; a grid has steps+1 nodes

    void validate() const {
        if (!(min < max)) throw std::invalid_argument("AxisSpec: need min < max");
        if (steps < 2) throw std::invalid_argument("AxisSpec: need steps >= 2");
    }

    // Node i of steps+1, with exact endpoints (and an exact 0 on symmetric
    // ranges with even step counts).
    double node(int i) const {
        return (min * static_cast<double>(steps - i) + max * static_cast<double>(i)) /
               static_cast<double>(steps);
    }
};

struct GridSpec {
    AxisSpec axis;
    std::optional<AxisSpec> second_axis;
    std::map<std::string, double> fixed;

    // The axes plus fixed assignments must cover `vars` exactly, no repeats.
    void validate_covers(const std::vector<std::string>& vars) const {
        axis.validate();
        if (second_axis) second_axis->validate();
        std::set<std::string> assigned;
        assigned.insert(axis.var);
        if (second_axis && !assigned.insert(second_axis->var).second)
            throw std::invalid_argument("GridSpec: repeated axis variable");
        for (const auto& [v, _] : fixed)
            if (!assigned.insert(v).second)
                throw std::invalid_argument("GridSpec: variable '" + v + "' assigned twice");
        std::set<std::string> context(vars.begin(), vars.end());
        if (assigned != context)
            throw std::invalid_argument("GridSpec: assignments do not cover the variable context");
    }
};

struct SampleRow {
    std::vector<double> coords;
    double value = 0.0;
    bool pole = false;
};

struct SampleTable {
    std::vector<std::string> coord_names;
    std::vector<SampleRow> rows;
};

constexpr double kPoleThresholdScale = 1e-9;

inline bool is_pole(double num, double den) {
    return std::abs(den) < kPoleThresholdScale * (1.0 + std::abs(num));
}

// Samples u over the grid, axis-major (second axis, when present, is the
// inner loop).  Values at flagged rows are reported raw but untrusted.
inline SampleTable sample(const RationalFn& u, const GridSpec& grid) {
    grid.validate_covers(u.vars());
    const auto& vars = u.vars();

    // source index per context variable: 0 = first axis, 1 = second, 2 = fixed
    std::vector<int> source(vars.size(), 2);
    std::vector<double> fixed_vals(vars.size(), 0.0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == grid.axis.var) source[i] = 0;
        else if (grid.second_axis && vars[i] == grid.second_axis->var) source[i] = 1;
        else fixed_vals[i] = grid.fixed.at(vars[i]);
    }

    SampleTable table;
    table.coord_names.push_back(grid.axis.var);
    if (grid.second_axis) table.coord_names.push_back(grid.second_axis->var);

    std::vector<double> vals = fixed_vals;
    const int outer_n = grid.axis.steps;
    const int inner_n = grid.second_axis ? grid.second_axis->steps : 0;
    for (int i = 0; i <= outer_n; ++i) {
        double a = grid.axis.node(i);
        for (int j = 0; j <= (grid.second_axis ? inner_n : 0); ++j) {
            double b = grid.second_axis ? grid.second_axis->node(j) : 0.0;
            for (std::size_t v = 0; v < vars.size(); ++v) {
                if (source[v] == 0) vals[v] = a;
                else if (source[v] == 1) vals[v] = b;
            }
            double num = u.num().evaluate_float_aligned(vals);
            double den = u.den().evaluate_float_aligned(vals);
            SampleRow row;
            row.coords.push_back(a);
            if (grid.second_axis) row.coords.push_back(b);
            row.value = num / den;
            row.pole = is_pole(num, den);
            table.rows.push_back(std::move(row));
        }
    }
    return table;
}

// Header + one row per sample; shortest round-trip decimals; pole as 0/1.
inline void emit_csv(const SampleTable& table, std::ostream& out) {
    for (const auto& name : table.coord_names) out << name << ",";
    out << "value,pole\n";
    for (const auto& row : table.rows) {
        for (double c : row.coords) out << format_double(c) << ",";
        out << format_double(row.value) << "," << (row.pole ? 1 : 0) << "\n";
    }
}

// ---------------------------------------------------------------------------
// Finite-difference residual oracle
//
// Every derivative is an iterated symmetric first difference with the same
// step h, which keeps the truncation error O(h²) at every order; an exact
// solution's sampled residual must then shrink ~4x when h halves.
// ---------------------------------------------------------------------------

namespace fd {

using Fn2 = std::function<double(double, double)>;

inline Fn2 d_first(const Fn2& f, double h) {
    return [f, h](double s, double t) { return (f(s + h, t) - f(s - h, t)) / (2.0 * h); };
}

inline Fn2 d_second_arg(const Fn2& f, double h) {
    return [f, h](double s, double t) { return (f(s, t + h) - f(s, t - h)) / (2.0 * h); };
}

// Evaluator of u as a function of (space, time) with any remaining context
// variables pinned to fixed values.
inline Fn2 make_eval2(const RationalFn& u, const std::string& space_var,
                      const std::string& time_var,
                      const std::map<std::string, double>& fixed = {}) {
    const auto& vars = u.vars();
    std::vector<int> source(vars.size(), 2);
    std::vector<double> base(vars.size(), 0.0);
    for (std::size_t i = 0; i < vars.size(); ++i) {
        if (vars[i] == space_var) source[i] = 0;
        else if (vars[i] == time_var) source[i] = 1;
        else base[i] = fixed.at(vars[i]);
    }
    MultiPoly num = u.num(), den = u.den();
    return [num, den, source, base](double s, double t) {
        std::vector<double> vals = base;
        for (std::size_t i = 0; i < vals.size(); ++i) {
            if (source[i] == 0) vals[i] = s;
            else if (source[i] == 1) vals[i] = t;
        }
        return num.evaluate_float_aligned(vals) / den.evaluate_float_aligned(vals);
    };
}

// (d/ds + u·)^k u assembled numerically from the evaluator alone.
inline Fn2 shifted_power_fd(const Fn2& u, int k, double h) {
    Fn2 p = u;
    for (int j = 0; j < k; ++j) {
        Fn2 dp = d_first(p, h);
        Fn2 prev = p;
        p = [u, dp, prev](double s, double t) { return dp(s, t) + u(s, t) * prev(s, t); };
    }
    return p;
}

}  // namespace fd

// Max |d/dt u - d/ds (d/ds + u)^(m-1) u| over the axis nodes at fixed time.
inline double fd_burgers_residual_max(const RationalFn& u, int m, const std::string& space_var,
                                      const std::string& time_var, const AxisSpec& axis,
                                      double time_value, double h) {
    fd::Fn2 U = fd::make_eval2(u, space_var, time_var);
    fd::Fn2 rhs = fd::d_first(fd::shifted_power_fd(U, m - 1, h), h);
    fd::Fn2 lhs = fd::d_second_arg(U, h);
    double worst = 0.0;
    for (int i = 0; i <= axis.steps; ++i) {
        double s = axis.node(i);
        worst = std::max(worst, std::abs(lhs(s, time_value) - rhs(s, time_value)));
    }
    return worst;
}

// Max |d/dt u - [d/ds s d/ds u + d/ds u + u² + s d/ds(u²)]| over the grid.
inline double fd_laguerre_residual_max(const RationalFn& u, const AxisSpec& axis,
                                       double time_value, double h) {
    fd::Fn2 U = fd::make_eval2(u, "x", "t");
    fd::Fn2 dU = fd::d_first(U, h);
    fd::Fn2 sdU = [dU](double s, double t) { return s * dU(s, t); };
    fd::Fn2 d_sdU = fd::d_first(sdU, h);
    fd::Fn2 U2 = [U](double s, double t) { double v = U(s, t); return v * v; };
    fd::Fn2 dU2 = fd::d_first(U2, h);
    fd::Fn2 lhs = fd::d_second_arg(U, h);
    double worst = 0.0;
    for (int i = 0; i <= axis.steps; ++i) {
        double s = axis.node(i);
        double rhs = d_sdU(s, time_value) + dU(s, time_value) + U2(s, time_value) +
                     s * dU2(s, time_value);
        worst = std::max(worst, std::abs(lhs(s, time_value) - rhs));
    }
    return worst;
}

// Max |d/dy u - d/dx (a u + b (d/dx+u) u + c (d/dx+u)² u)| over the grid.
inline double fd_combined_residual_max(const RationalFn& u, const Rational& a, const Rational& b,
                                       const Rational& c, const AxisSpec& axis, double y_value,
                                       double h) {
    fd::Fn2 U = fd::make_eval2(u, "x", "y");
    fd::Fn2 p1 = fd::shifted_power_fd(U, 1, h);
    fd::Fn2 p2 = fd::shifted_power_fd(U, 2, h);
    const double av = a.to_double(), bv = b.to_double(), cv = c.to_double();
    fd::Fn2 inner = [U, p1, p2, av, bv, cv](double s, double t) {
        return av * U(s, t) + bv * p1(s, t) + cv * p2(s, t);
    };
    fd::Fn2 rhs = fd::d_first(inner, h);
    fd::Fn2 lhs = fd::d_second_arg(U, h);
    double worst = 0.0;
    for (int i = 0; i <= axis.steps; ++i) {
        double s = axis.node(i);
        worst = std::max(worst, std::abs(lhs(s, y_value) - rhs(s, y_value)));
    }
    return worst;
}

// Max |d/dx F + F² - S| over the grid (no time derivative in this identity).
inline double fd_identity_residual_max(const RationalFn& f, const RationalFn& s_fn,
                                       const AxisSpec& axis, double y_value, double h) {
    fd::Fn2 F = fd::make_eval2(f, "x", "y");
    fd::Fn2 S = fd::make_eval2(s_fn, "x", "y");
    fd::Fn2 dF = fd::d_first(F, h);
    double worst = 0.0;
    for (int i = 0; i <= axis.steps; ++i) {
        double x = axis.node(i);
        double r = dF(x, y_value) + F(x, y_value) * F(x, y_value) - S(x, y_value);
        worst = std::max(worst, std::abs(r));
    }
    return worst;
}

}  // namespace hopfcole
