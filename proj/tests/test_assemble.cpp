#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "vw/assemble.hpp"
#include "vw/qseries.hpp"
#include "vw/tautcalc.hpp"

using namespace vw;

namespace {
const Poly g = Poly::var("g");
const Poly nu = Poly::var("pg") + Poly(1);
}  // namespace

TEST_CASE("surface presets and invariant relations") {
    SurfaceData q = surface_preset("quintic");
    CHECK(q.K2 == 5);
    CHECK(q.c2 == 55);
    CHECK(q.chi == 5);
    CHECK(q.pg == 4);
    CHECK(q.g == 6);
    CHECK(q.P2() == 10);
    CHECK(q.plurigenus(3) == Rational(20));

    SurfaceData octic = surface_preset("octic-double-cover");
    CHECK(octic.K2 == 2);
    CHECK(octic.c2 == 46);
    CHECK(octic.chi == 4);
    CHECK(octic.g == 3);

    SurfaceData bk3 = surface_preset("blowup-k3");
    CHECK(bk3.K2 == -1);
    CHECK(bk3.c2 == 25);
    CHECK(bk3.chi == 2);
    CHECK(bk3.g == 0);

    SurfaceData c = SurfaceData::custom(0, 24, "k3-like");
    CHECK(c.chi == 2);
    CHECK(c.pg == 1);
    CHECK(c.g == 1);

    CHECK_THROWS_AS(SurfaceData::custom(1, 1), std::invalid_argument);
    CHECK_THROWS_AS(surface_preset("torus"), std::invalid_argument);
}

TEST_CASE("monopole series through q^3") {
    MonopoleSeries m = monopole_series_q3();
    CHECK(m.bracket.coeff(0) == Poly(1));
    CHECK(m.bracket.coeff(1) == Rational(-2) * (g - Poly(1)));
    CHECK(m.bracket.coeff(2) == Rational(2) * (g - Poly(1)) * (g - Poly(3)) + Rational(12) * nu);
    CHECK(m.bracket.coeff(3) ==
          Rational(-4, 3) * (g - Poly(1)) * (Rational(18) * nu + g * g - Rational(8) * g + Poly(9)));
    CHECK(m.norm.str() == "(-2)^(-g - pg)");

    // Component bookkeeping per the fixed-locus decomposition.
    std::map<int, std::vector<std::string>> by_power;
    for (const auto& c : m.components) by_power[c.power].push_back(c.label);
    CHECK(by_power[0] == std::vector<std::string>{"S^[0,0]"});
    CHECK(by_power[1] == std::vector<std::string>{"S^[0,1]"});
    CHECK(by_power[2] == std::vector<std::string>{"S^[0,2]", "S^[1,1]"});
    CHECK(by_power[3] == std::vector<std::string>{"S^[0,3]", "S^[1,2]"});

    // The bracket is the sum of the per-component contributions.
    PSeries sum("q", 3);
    for (const auto& c : m.components) sum.set_coeff(c.power, sum.coeff(c.power) + c.coeff);
    for (int n = 0; n <= 3; ++n) CHECK(sum.coeff(n) == m.bracket.coeff(n));

    // q^2 split: horizontal (g-1)(2g-11) plus vertical c2 + 6K2 under the
    // surface-parameter substitutions.
    Poly vertical_part = Rational(12) * nu - (g - Poly(1)) + Rational(6) * (g - Poly(1));
    CHECK(m.components[2].coeff == (g - Poly(1)) * (Rational(2) * g - Poly(11)));
    CHECK(m.components[4].coeff == vertical_part);
    CHECK(m.components[2].coeff + vertical_part == m.bracket.coeff(2));

    // Normalization consistency: (-2)^(-pg-g) from the horizontal expansion
    // equals (-2)^(-nu-g+1) from the assembled series.
    CHECK(m.norm == NormalizationRecord::neg_two_pow(-nu - g + Poly(1)));
    CHECK(m.norm == horizontal_normalization());

    // On the quintic: (1, -10, 90, -580) with normalization (-2)^(-10).
    SurfaceData q = surface_preset("quintic");
    CHECK(eval_at(m.bracket, q.param_values()) ==
          QSeries::with_coeffs("q", 3, {1, -10, 90, -580}));
    CHECK(m.norm.evaluate(q.param_values()) == Rational(1, 1024));
}

TEST_CASE("headline comparison with the prediction") {
    VWComparison symbolic = compare_vw();
    CHECK(symbolic.equal);
    CHECK(symbolic.first_mismatch == -1);
    CHECK(symbolic.two_exponent_equal);
    CHECK(symbolic.sign_exponent_diff == -nu - g + Poly(1));
    CHECK(symbolic.vd_parity_matches);

    VWComparison quintic = compare_vw(surface_preset("quintic"));
    CHECK(quintic.equal);
    CHECK(quintic.monopole_coeffs == std::vector<std::string>{"1", "-10", "90", "-580"});
    CHECK(quintic.prediction_coeffs == quintic.monopole_coeffs);
    CHECK(quintic.vd_formula == "4*n - 20");
    CHECK(quintic.vd_parity_matches);

    // All presets satisfy the identity (it holds in Q[g, nu]).
    for (const std::string& name : surface_preset_names())
        CHECK(compare_vw(surface_preset(name)).equal);
}

TEST_CASE("perturbed coefficients are reported unequal") {
    MonopoleSeries m = monopole_series_q3();
    VWPrediction p = vw_prediction_bracket(3);
    PSeries broken = m.bracket;
    broken.set_coeff(2, broken.coeff(2) + Poly(1));
    VWComparison r = compare_brackets(broken, m.norm, p.bracket, p.norm, std::nullopt);
    CHECK_FALSE(r.equal);
    CHECK(r.first_mismatch == 2);

    VWComparison rq =
        compare_brackets(broken, m.norm, p.bracket, p.norm, surface_preset("quintic"));
    CHECK_FALSE(rq.equal);
    CHECK(rq.first_mismatch == 2);
}
