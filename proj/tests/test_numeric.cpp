#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdlib>
#include <sstream>
#include <string>
#include <vector>

#include "hopfcole/families.hpp"
#include "hopfcole/numeric.hpp"
#include "hopfcole/pde.hpp"

using namespace hopfcole;

TEST_CASE("axis nodes hit endpoints and symmetric zero exactly") {
    AxisSpec a{"x", 1.0, 2.0, 2};
    CHECK(a.node(0) == 1.0);
    CHECK(a.node(1) == 1.5);
    CHECK(a.node(2) == 2.0);

    AxisSpec b{"x", -5.0, 5.0, 400};
    CHECK(b.node(0) == -5.0);
    CHECK(b.node(200) == 0.0);
    CHECK(b.node(400) == 5.0);
}

TEST_CASE("axis and grid validation") {
    CHECK_THROWS_AS((AxisSpec{"x", 2.0, 1.0, 4}.validate()), std::invalid_argument);
    CHECK_THROWS_AS((AxisSpec{"x", 0.0, 1.0, 1}.validate()), std::invalid_argument);

    RationalFn u = phi_solution(2, 2);  // context {x, y}
    GridSpec missing{{"x", -1.0, 1.0, 4}, std::nullopt, {}};
    CHECK_THROWS_AS(sample(u, missing), std::invalid_argument);
    GridSpec repeated{{"x", -1.0, 1.0, 4}, std::nullopt, {{"x", 0.0}, {"y", 1.0}}};
    CHECK_THROWS_AS(sample(u, repeated), std::invalid_argument);
    GridSpec extra{{"x", -1.0, 1.0, 4}, std::nullopt, {{"y", 1.0}, {"z", 2.0}}};
    CHECK_THROWS_AS(sample(u, extra), std::invalid_argument);
}

TEST_CASE("sampling flags the removable 0/0 node and keeps steps+1 rows") {
    RationalFn u = phi_solution(2, 2);  // 2x / (x^2 + 2y)
    GridSpec g{{"x", -1.0, 1.0, 2}, std::nullopt, {{"y", 0.0}}};
    SampleTable t = sample(u, g);
    REQUIRE(t.rows.size() == 3);
    CHECK(t.coord_names == std::vector<std::string>{"x"});
    CHECK(t.rows[0].coords[0] == -1.0);
    CHECK(t.rows[0].value == -2.0);
    CHECK_FALSE(t.rows[0].pole);
    CHECK(t.rows[1].coords[0] == 0.0);
    CHECK(t.rows[1].pole);  // num and den both vanish at x = 0, y = 0
    CHECK(t.rows[2].value == 2.0);

    GridSpec wide{{"x", -5.0, 5.0, 400}, std::nullopt, {{"y", 1.0}}};
    CHECK(sample(u, wide).rows.size() == 401);
}

TEST_CASE("two-axis sampling is axis-major with the second axis inner") {
    RationalFn u = phi_solution(2, 2);
    GridSpec g{{"x", 0.0, 1.0, 2}, AxisSpec{"y", 1.0, 2.0, 2}, {}};
    SampleTable t = sample(u, g);
    REQUIRE(t.rows.size() == 9);
    CHECK(t.coord_names == std::vector<std::string>{"x", "y"});
    CHECK(t.rows[0].coords == std::vector<double>{0.0, 1.0});
    CHECK(t.rows[1].coords == std::vector<double>{0.0, 1.5});
    CHECK(t.rows[3].coords == std::vector<double>{0.5, 1.0});
}

TEST_CASE("float sampling agrees with exact evaluation to 1e-12 relative") {
    RationalFn u = normalize_content(phi_solution(4, 2));
    AxisSpec ax{"x", 1.0, 3.0, 8};  // nodes 1 + i/4: exactly representable
    GridSpec g{ax, std::nullopt, {{"y", 0.5}}};
    SampleTable t = sample(u, g);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        std::map<std::string, Rational> pt{
            {"x", Rational::from_double_exact(t.rows[i].coords[0])},
            {"y", Rational::from_double_exact(0.5)}};
        Rational exact = u.num().evaluate_exact(pt) / u.den().evaluate_exact(pt);
        double e = exact.to_double();
        CHECK(std::abs(t.rows[i].value - e) <= 1e-12 * std::max(1.0, std::abs(e)));
    }
}

TEST_CASE("csv output uses round-trippable decimals") {
    CHECK(format_double(0.5) == "0.5");
    CHECK(format_double(-2.0) == "-2");
    CHECK(std::strtod(format_double(0.1).c_str(), nullptr) == 0.1);
    CHECK(std::strtod(format_double(1.0 / 3.0).c_str(), nullptr) == 1.0 / 3.0);

    RationalFn u = phi_solution(2, 2);
    GridSpec g{{"x", 1.0, 2.0, 2}, std::nullopt, {{"y", 1.0}}};
    SampleTable t = sample(u, g);
    std::ostringstream out;
    emit_csv(t, out);
    std::istringstream in(out.str());
    std::string line;
    REQUIRE(std::getline(in, line));
    CHECK(line == "x,value,pole");
    std::size_t nrows = 0;
    while (std::getline(in, line)) {
        auto c1 = line.find(',');
        auto c2 = line.find(',', c1 + 1);
        REQUIRE(c2 != std::string::npos);
        double x = std::strtod(line.substr(0, c1).c_str(), nullptr);
        double v = std::strtod(line.substr(c1 + 1, c2 - c1 - 1).c_str(), nullptr);
        std::string flag = line.substr(c2 + 1);
        CHECK(x == t.rows[nrows].coords[0]);
        CHECK(v == t.rows[nrows].value);  // bit-exact round trip
        CHECK(flag == (t.rows[nrows].pole ? "1" : "0"));
        ++nrows;
    }
    CHECK(nrows == t.rows.size());
}

TEST_CASE("pole detection threshold scales with the numerator") {
    CHECK(is_pole(0.0, 0.0));
    CHECK(is_pole(1.0, 1e-10));
    CHECK_FALSE(is_pole(1.0, 1e-3));
    // the same denominator can be fine or suspect depending on the numerator
    CHECK_FALSE(is_pole(1e6, 1.0));
    CHECK(is_pole(1e12, 1.0));
}

TEST_CASE("difference-quotient residual is tiny on an exact solution") {
    AxisSpec ax{"x", 1.0, 3.0, 40};
    RationalFn u = phi_solution(2, 2);
    double r = fd_burgers_residual_max(u, 2, "x", "y", ax, 1.0, 1e-3);
    CHECK(r < 1e-5);
    // and large on a spoiled one
    RationalFn bad = perturb_num_plus_one(u);
    CHECK(fd_burgers_residual_max(bad, 2, "x", "y", ax, 1.0, 1e-3) > 1e-2);
}

TEST_CASE("halving the step shrinks the residual about fourfold") {
    AxisSpec ax{"x", 1.0, 3.0, 40};
    RationalFn u = phi_solution(3, 3);
    double r1 = fd_burgers_residual_max(u, 3, "x", "y", ax, 1.0, 1e-2);
    double r2 = fd_burgers_residual_max(u, 3, "x", "y", ax, 1.0, 5e-3);
    CHECK(r1 / r2 > 3.0);
    CHECK(r1 / r2 < 5.0);
}

TEST_CASE("specialized difference-quotient checks accept their exact solutions") {
    AxisSpec ax{"x", 1.0, 3.0, 40};
    CHECK(fd_laguerre_residual_max(laguerre_solution(3), ax, 1.0, 1e-3) < 1e-4);
    RationalFn uc = combined_solution(2, Rational(1), Rational(1), Rational(1));
    CHECK(fd_combined_residual_max(uc, Rational(1), Rational(1), Rational(1), ax, 1.0, 1e-3) <
          1e-4);
    MultiPoly h3 = hermite2(3), h2 = hermite2(2), h1 = hermite2(1);
    RationalFn f(h2.scaled(Rational(3)), h3);   // F_4 = 3 H_2 / H_3
    RationalFn s(h1.scaled(Rational(6)), h3);   // S_4 = 6 H_1 / H_3
    CHECK(fd_identity_residual_max(f, s, ax, 1.0, 1e-3) < 1e-4);
}
