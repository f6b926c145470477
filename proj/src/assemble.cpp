#include "vw/assemble.hpp"

#include <sstream>
#include <stdexcept>

#include "vw/qseries.hpp"
#include "vw/surfring.hpp"
#include "vw/tautcalc.hpp"

namespace vw {

namespace {
const char* kQ = "q";

/// Substitutions from intersection-ring symbols to surface parameters:
/// K2 = g - 1, c2 = 12 nu - (g - 1), P_m = nu + m(m-1)(g-1)/2, nu = pg + 1.
std::map<std::string, Poly> ring_to_params() {
    Poly g = Poly::var("g");
    Poly nu = Poly::var("pg") + Poly(1);
    std::map<std::string, Poly> sub{{"K2", g - Poly(1)},
                                    {"c2", Rational(12) * nu - (g - Poly(1))}};
    for (long m = 2; m <= 7; ++m)
        sub["P" + std::to_string(m)] =
            nu + Rational(m * (m - 1), 2) * (g - Poly(1));
    return sub;
}
}  // namespace

SurfaceData SurfaceData::custom(long K2, long c2, const std::string& name) {
    if ((K2 + c2) % 12 != 0)
        throw std::invalid_argument("SurfaceData: K2 + c2 = " + std::to_string(K2 + c2) +
                                    " is not divisible by 12");
    SurfaceData s;
    s.name = name;
    s.K2 = K2;
    s.c2 = c2;
    s.chi = (K2 + c2) / 12;
    s.pg = s.chi - 1;
    s.g = 1 + K2;
    if (s.pg < 0) throw std::invalid_argument("SurfaceData: pg = chi - 1 is negative");
    return s;
}

std::map<std::string, Rational> SurfaceData::param_values() const {
    std::map<std::string, Rational> v{{"g", Rational(g)},   {"pg", Rational(pg)},
                                      {"K2", Rational(K2)}, {"c2", Rational(c2)}};
    for (long m = 2; m <= 7; ++m) v["P" + std::to_string(m)] = plurigenus(m);
    return v;
}

SurfaceData surface_preset(const std::string& name) {
    if (name == "quintic") return SurfaceData::custom(5, 55, "quintic");
    if (name == "octic-double-cover" || name == "octic")
        return SurfaceData::custom(2, 46, "octic-double-cover");
    if (name == "blowup-k3") return SurfaceData::custom(-1, 25, "blowup-k3");
    throw std::invalid_argument("surface_preset: unknown surface '" + name + "'");
}

std::vector<std::string> surface_preset_names() {
    return {"quintic", "octic-double-cover", "blowup-k3"};
}

MonopoleSeries monopole_series_q3() {
    const int order = 3;
    const std::map<std::string, Poly> sub = ring_to_params();

    MonopoleSeries m{PSeries(kQ, order), horizontal_normalization(), {}};

    for (int n = 0; n <= order; ++n)
        m.components.push_back(
            {"S^[0," + std::to_string(n) + "]", n, horizontal_coefficient(n)});

    RingValue vertical = vertical_c2_2();
    if (!vertical.norm.subst(sub).equivalent(m.norm))
        throw std::logic_error("monopole_series_q3: vertical normalization mismatch");
    m.components.push_back({"S^[1,1]", 2, vertical.bracket.subst(sub)});

    RingValue mixed = mixed_s21();
    if (!mixed.norm.subst(sub).equivalent(m.norm))
        throw std::logic_error("monopole_series_q3: mixed normalization mismatch");
    m.components.push_back({"S^[1,2]", 3, mixed.bracket.subst(sub)});

    for (const MonopoleComponent& c : m.components)
        m.bracket.set_coeff(c.power, m.bracket.coeff(c.power) + c.coeff);
    return m;
}

VWComparison compare_brackets(const PSeries& monopole, const NormalizationRecord& mono_norm,
                              const PSeries& prediction, const NormalizationRecord& pred_norm,
                              const std::optional<SurfaceData>& surface) {
    VWComparison r;
    int order = std::min(monopole.order(), prediction.order());
    std::map<std::string, Rational> values;
    if (surface) values = surface->param_values();

    r.equal = true;
    for (int n = 0; n <= order; ++n) {
        Poly a = monopole.coeff(n), b = prediction.coeff(n);
        if (surface) {
            Rational av = a.eval(values), bv = b.eval(values);
            r.monopole_coeffs.push_back(av.str());
            r.prediction_coeffs.push_back(bv.str());
            if (av != bv && r.equal) {
                r.equal = false;
                r.first_mismatch = n;
            }
        } else {
            r.monopole_coeffs.push_back(a.str());
            r.prediction_coeffs.push_back(b.str());
            if (a != b && r.equal) {
                r.equal = false;
                r.first_mismatch = n;
            }
        }
    }

    r.two_exponent_equal = mono_norm.prime_exponents == pred_norm.prime_exponents;
    r.sign_exponent_diff = mono_norm.sign_exponent - pred_norm.sign_exponent;

    // vd at r = 2, with c1(E)^2 = c1(S)^2 = g - 1 and chi = nu = pg + 1.
    Poly vd = Rational(4) * Poly::var("n") - (Poly::var("g") - Poly(1)) -
              Rational(3) * (Poly::var("pg") + Poly(1));
    if (surface) {
        std::ostringstream os;
        os << "4*n - " << (surface->g - 1 + 3 * surface->chi);
        r.vd_formula = os.str();
    } else {
        r.vd_formula = vd.str() + "  (n = c2(E))";
    }
    // (-1)^vd equals the residual sign iff vd - diff is even; vd depends on
    // c2(E) only through the even term 4n.
    Poly parity_gap = vd.subst({{"n", Poly(0)}}) - r.sign_exponent_diff;
    r.vd_parity_matches =
        NormalizationRecord::sign_pow(parity_gap).sign_parity_equal(NormalizationRecord());
    return r;
}

VWComparison compare_vw() {
    MonopoleSeries m = monopole_series_q3();
    VWPrediction p = vw_prediction_bracket(3);
    return compare_brackets(m.bracket, m.norm, p.bracket, p.norm, std::nullopt);
}

VWComparison compare_vw(const SurfaceData& s) {
    MonopoleSeries m = monopole_series_q3();
    VWPrediction p = vw_prediction_bracket(3);
    return compare_brackets(m.bracket, m.norm, p.bracket, p.norm, s);
}

}  // namespace vw
