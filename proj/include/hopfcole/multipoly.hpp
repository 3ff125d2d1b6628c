#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <numeric>
#include <stdexcept>
#include <string>
#include <vector>

#include "hopfcole/rational.hpp"

namespace hopfcole {

// Graded lexicographic order on exponent vectors: lower total degree first,
// ties broken lexicographically over the declared variable order.
struct GradedLexLess {
    bool operator()(const std::vector<unsigned>& a, const std::vector<unsigned>& b) const {
        unsigned long da = std::accumulate(a.begin(), a.end(), 0UL);
        unsigned long db = std::accumulate(b.begin(), b.end(), 0UL);
        if (da != db) return da < db;
        return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
    }
};

// Exact sparse multivariate polynomial over Rational coefficients, attached to
// an explicit ordered variable context.  Canonical form: no zero-coefficient
// terms, exponent vectors keyed in graded-lex order.  Immutable in practice:
// every operation returns a new value.
class MultiPoly {
public:
    using TermMap = std::map<std::vector<unsigned>, Rational, GradedLexLess>;

    MultiPoly() = default;

    explicit MultiPoly(std::vector<std::string> vars) : vars_(std::move(vars)) {
        check_distinct();
    }

    static MultiPoly zero(std::vector<std::string> vars) {
        return MultiPoly(std::move(vars));
    }

    static MultiPoly constant(std::vector<std::string> vars, const Rational& c) {
        MultiPoly p(std::move(vars));
        if (!c.is_zero()) p.terms_[std::vector<unsigned>(p.vars_.size(), 0)] = c;
        return p;
    }

    static MultiPoly variable(std::vector<std::string> vars, const std::string& name) {
        MultiPoly p(std::move(vars));
        std::vector<unsigned> e(p.vars_.size(), 0);
        e.at(p.var_index(name)) = 1;
        p.terms_[e] = Rational(1);
        return p;
    }

    const std::vector<std::string>& vars() const { return vars_; }
    const TermMap& terms() const { return terms_; }

    bool is_zero() const { return terms_.empty(); }
    std::size_t num_terms() const { return terms_.size(); }

    bool has_var(const std::string& name) const {
        return std::find(vars_.begin(), vars_.end(), name) != vars_.end();
    }

    std::size_t var_index(const std::string& name) const {
        auto it = std::find(vars_.begin(), vars_.end(), name);
        if (it == vars_.end())
            throw std::invalid_argument("MultiPoly: variable '" + name + "' not in context");
        return static_cast<std::size_t>(it - vars_.begin());
    }

    unsigned long total_degree() const {
        if (terms_.empty()) return 0;
        // Graded-lex keys ascend by total degree, so the last key is maximal.
        const auto& e = terms_.rbegin()->first;
        return std::accumulate(e.begin(), e.end(), 0UL);
    }

    // Coefficient of the greatest monomial under graded-lex; zero polynomial has none.
    Rational leading_coefficient() const {
        if (terms_.empty()) throw std::invalid_argument("MultiPoly: zero polynomial has no leading coefficient");
        return terms_.rbegin()->second;
    }

    Rational coefficient(const std::vector<unsigned>& exps) const {
        auto it = terms_.find(exps);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    // Accumulates coeff onto the monomial with the given exponents, dropping
    // the term if the sum cancels to zero.
    void add_term(const std::vector<unsigned>& exps, const Rational& coeff) {
        if (exps.size() != vars_.size())
            throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
        if (coeff.is_zero()) return;
        auto [it, inserted] = terms_.try_emplace(exps, coeff);
        if (!inserted) {
            it->second += coeff;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Re-expresses this polynomial over a context that contains every variable
    // it actually uses (and possibly more).  Order of `new_vars` governs the
    // new canonical form.
    MultiPoly with_vars(const std::vector<std::string>& new_vars) const {
        MultiPoly out{new_vars};
        std::vector<long> pos(vars_.size(), -1);
        for (std::size_t i = 0; i < vars_.size(); ++i) {
            auto it = std::find(new_vars.begin(), new_vars.end(), vars_[i]);
            if (it != new_vars.end()) pos[i] = it - new_vars.begin();
        }
        for (const auto& [e, c] : terms_) {
            std::vector<unsigned> ne(new_vars.size(), 0);
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (pos[i] < 0)
                    throw std::invalid_argument("MultiPoly: variable '" + vars_[i] +
                                                "' used but absent from new context");
                ne[static_cast<std::size_t>(pos[i])] = e[i];
            }
            out.terms_[ne] = c;
        }
        return out;
    }

    // Union context: left operand's variables in order, then the right
    // operand's new ones in their order.
    static std::vector<std::string> merged_vars(const MultiPoly& a, const MultiPoly& b) {
        std::vector<std::string> m = a.vars_;
        for (const auto& v : b.vars_)
            if (std::find(m.begin(), m.end(), v) == m.end()) m.push_back(v);
        return m;
    }

    MultiPoly operator+(const MultiPoly& o) const {
        if (vars_ == o.vars_) {
            MultiPoly out = *this;
            for (const auto& [e, c] : o.terms_) out.add_term(e, c);
            return out;
        }
        auto m = merged_vars(*this, o);
        return with_vars(m) + o.with_vars(m);
    }

    MultiPoly operator-(const MultiPoly& o) const {
        if (vars_ == o.vars_) {
            MultiPoly out = *this;
            for (const auto& [e, c] : o.terms_) out.add_term(e, -c);
            return out;
        }
        auto m = merged_vars(*this, o);
        return with_vars(m) - o.with_vars(m);
    }

    MultiPoly operator-() const {
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) out.terms_[e] = -c;
        return out;
    }

    MultiPoly operator*(const MultiPoly& o) const {
        if (vars_ != o.vars_) {
            auto m = merged_vars(*this, o);
            return with_vars(m) * o.with_vars(m);
        }
        MultiPoly out(vars_);
        std::vector<unsigned> e(vars_.size());
        for (const auto& [ea, ca] : terms_) {
            for (const auto& [eb, cb] : o.terms_) {
                for (std::size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
                out.add_term(e, ca * cb);
            }
        }
        return out;
    }

    MultiPoly scaled(const Rational& c) const {
        MultiPoly out(vars_);
        if (c.is_zero()) return out;
        for (const auto& [e, k] : terms_) out.terms_[e] = k * c;
        return out;
    }

    MultiPoly pow(unsigned e) const {
        MultiPoly result = MultiPoly::constant(vars_, Rational(1));
        MultiPoly base = *this;
        while (e > 0) {
            if (e & 1u) result = result * base;
            base = (e >>= 1) ? base * base : base;
        }
        return result;
    }

    MultiPoly partial_derivative(const std::string& var) const {
        std::size_t k = var_index(var);
        MultiPoly out(vars_);
        for (const auto& [e, c] : terms_) {
            if (e[k] == 0) continue;
            std::vector<unsigned> ne = e;
            ne[k] -= 1;
            out.terms_[ne] = c * Rational(static_cast<long>(e[k]));
        }
        return out;
    }

    // Exact substitution of a polynomial for one variable.  The result lives
    // on the union of the remaining context and the replacement's context.
    MultiPoly substituted(const std::string& var, const MultiPoly& replacement) const {
        std::size_t k = var_index(var);
        std::vector<std::string> rest;
        for (std::size_t i = 0; i < vars_.size(); ++i)
            if (i != k) rest.push_back(vars_[i]);
        std::vector<std::string> out_vars = rest;
        for (const auto& v : replacement.vars_)
            if (std::find(out_vars.begin(), out_vars.end(), v) == out_vars.end())
                out_vars.push_back(v);

        // Cache powers of the replacement; exponents of `var` are small.
        std::vector<MultiPoly> powers{MultiPoly::constant(replacement.vars_, Rational(1))};
        MultiPoly out(out_vars);
        for (const auto& [e, c] : terms_) {
            while (powers.size() <= e[k]) powers.push_back(powers.back() * replacement);
            std::vector<unsigned> re;
            re.reserve(rest.size());
            for (std::size_t i = 0; i < e.size(); ++i)
                if (i != k) re.push_back(e[i]);
            MultiPoly base(rest);
            base.add_term(re, c);
            out = out + base * powers[e[k]];
        }
        return out;
    }

    Rational evaluate_exact(const std::map<std::string, Rational>& point) const {
        std::vector<Rational> vals;
        vals.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("MultiPoly: point does not assign variable '" + v + "'");
            vals.push_back(it->second);
        }
        Rational acc(0);
        for (const auto& [e, c] : terms_) {
            Rational t = c;
            for (std::size_t i = 0; i < e.size(); ++i)
                if (e[i] != 0) t *= vals[i].pow(e[i]);
            acc += t;
        }
        return acc;
    }

    double evaluate_float(const std::map<std::string, double>& point) const {
        std::vector<double> vals;
        vals.reserve(vars_.size());
        for (const auto& v : vars_) {
            auto it = point.find(v);
            if (it == point.end())
                throw std::invalid_argument("MultiPoly: point does not assign variable '" + v + "'");
            vals.push_back(it->second);
        }
        return evaluate_float_aligned(vals);
    }

    // Fast path for grid sampling: values aligned with the variable context.
    // Each exact coefficient is rounded to nearest binary64 independently,
    // then terms are accumulated in canonical order.
    double evaluate_float_aligned(const std::vector<double>& vals) const {
        if (vals.size() != vars_.size())
            throw std::invalid_argument("MultiPoly: point size mismatch");
        double acc = 0.0;
        for (const auto& [e, c] : terms_) {
            double t = c.to_double();
            for (std::size_t i = 0; i < e.size(); ++i)
                for (unsigned j = 0; j < e[i]; ++j) t *= vals[i];
            acc += t;
        }
        return acc;
    }

    // Mathematical equality: identical canonical forms over the merged context.
    bool operator==(const MultiPoly& o) const {
        if (vars_ == o.vars_) return terms_ == o.terms_;
        auto m = merged_vars(*this, o);
        return with_vars(m).terms_ == o.with_vars(m).terms_;
    }
    bool operator!=(const MultiPoly& o) const { return !(*this == o); }

    // Human-readable rendering, leading term first; used in messages and logs.
    std::string to_string() const {
        if (terms_.empty()) return "0";
        std::string s;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            const auto& [e, c] = *it;
            std::string mono;
            for (std::size_t i = 0; i < e.size(); ++i) {
                if (e[i] == 0) continue;
                if (!mono.empty()) mono += "*";
                mono += vars_[i];
                if (e[i] > 1) mono += "^" + std::to_string(e[i]);
            }
            std::string coeff = c.to_string();
            std::string piece;
            if (mono.empty()) piece = coeff;
            else if (coeff == "1") piece = mono;
            else if (coeff == "-1") piece = "-" + mono;
            else piece = coeff + "*" + mono;
            if (s.empty()) s = piece;
            else if (!piece.empty() && piece[0] == '-') s += " - " + piece.substr(1);
            else s += " + " + piece;
        }
        return s;
    }

private:
    void check_distinct() const {
        for (std::size_t i = 0; i < vars_.size(); ++i)
            for (std::size_t j = i + 1; j < vars_.size(); ++j)
                if (vars_[i] == vars_[j])
                    throw std::invalid_argument("MultiPoly: duplicate variable '" + vars_[i] + "'");
    }

    std::vector<std::string> vars_;
    TermMap terms_;
};

}  // namespace hopfcole
