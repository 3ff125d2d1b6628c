#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "hopfcole/families.hpp"
#include "hopfcole/multipoly.hpp"
#include "hopfcole/ratfunc.hpp"
#include "hopfcole/rational.hpp"

namespace hopfcole {

using json = nlohmann::ordered_json;

// {"vars":[...], "terms":[{"exps":[...], "num":"...", "den":"..."}]}
// Terms are emitted leading-first (descending graded-lex), the same canonical
// order used everywhere; parsing then re-serializing is byte-identical.
inline json multipoly_to_json(const MultiPoly& p) {
    json j;
    j["vars"] = p.vars();
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json t;
        t["exps"] = it->first;
        t["num"] = it->second.numerator_string();
        t["den"] = it->second.denominator_string();
        terms.push_back(std::move(t));
    }
    j["terms"] = std::move(terms);
    return j;
}

inline MultiPoly multipoly_from_json(const json& j) {
    if (!j.is_object() || !j.contains("vars") || !j.contains("terms"))
        throw std::invalid_argument("MultiPoly JSON: expected object with 'vars' and 'terms'");
    std::vector<std::string> vars = j.at("vars").get<std::vector<std::string>>();
    MultiPoly p(vars);
    for (const auto& t : j.at("terms")) {
        std::vector<unsigned> exps = t.at("exps").get<std::vector<unsigned>>();
        Rational num = Rational::from_string(t.at("num").get<std::string>());
        Rational den = Rational::from_string(t.at("den").get<std::string>());
        if (den.is_zero()) throw std::invalid_argument("MultiPoly JSON: zero denominator");
        p.add_term(exps, num / den);
    }
    return p;
}

// {"num": <MultiPoly JSON>, "den": <MultiPoly JSON>}
inline json rationalfn_to_json(const RationalFn& u) {
    json j;
    j["num"] = multipoly_to_json(u.num());
    j["den"] = multipoly_to_json(u.den());
    return j;
}

inline RationalFn rationalfn_from_json(const json& j) {
    if (!j.is_object() || !j.contains("num") || !j.contains("den"))
        throw std::invalid_argument("RationalFn JSON: expected object with 'num' and 'den'");
    return RationalFn(multipoly_from_json(j.at("num")), multipoly_from_json(j.at("den")));
}

// {"kind":"...", "n":..., "m":..., "alpha":"p/q", "beta":"p/q", "gamma":"p/q", "N":...}
// Only the fields the kind actually uses are emitted.
inline json familyspec_to_json(const FamilySpec& s) {
    json j;
    j["kind"] = s.kind;
    if (s.kind == "BesselC0") {
        j["N"] = s.N;
        return j;
    }
    j["n"] = s.n;
    if (s.kind == "HermiteLacunary" || s.kind == "HermiteCompleteM") j["m"] = s.m;
    if (s.kind == "ShiftedHermite3") {
        j["alpha"] = s.alpha.to_string();
        j["beta"] = s.beta.to_string();
        j["gamma"] = s.gamma.to_string();
    }
    return j;
}

inline FamilySpec familyspec_from_json(const json& j) {
    FamilySpec s;
    s.kind = j.at("kind").get<std::string>();
    if (j.contains("n")) s.n = j.at("n").get<int>();
    if (j.contains("m")) s.m = j.at("m").get<int>();
    if (j.contains("N")) s.N = j.at("N").get<int>();
    if (j.contains("alpha")) s.alpha = Rational::from_string(j.at("alpha").get<std::string>());
    if (j.contains("beta")) s.beta = Rational::from_string(j.at("beta").get<std::string>());
    if (j.contains("gamma")) s.gamma = Rational::from_string(j.at("gamma").get<std::string>());
    return s;
}

}  // namespace hopfcole
