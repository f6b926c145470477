#include "vw/tautcalc.hpp"

#include <stdexcept>

#include "vw/parallel.hpp"

namespace vw {

namespace {
const char* kOmegaVar = "w";
Poly g_sym() { return Poly::var("g"); }
Poly pg_sym() { return Poly::var("pg"); }
}  // namespace

void TautClass::add_term(int omega_pow, int theta_pow, const Poly& coeff) {
    if (omega_pow < 0 || theta_pow < 0) throw std::invalid_argument("TautClass: negative power");
    if (omega_pow + theta_pow > n_) return;  // integrates to zero on C^[n]
    if (coeff.is_zero()) return;
    auto key = std::make_pair(omega_pow, theta_pow);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_[key] = coeff;
    } else {
        it->second += coeff;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

Poly TautClass::coeff(int omega_pow, int theta_pow) const {
    auto it = terms_.find(std::make_pair(omega_pow, theta_pow));
    return it == terms_.end() ? Poly() : it->second;
}

TautClass operator+(const TautClass& a, const TautClass& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("TautClass: ambient mismatch");
    TautClass r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
}

TautClass operator*(const TautClass& a, const TautClass& b) {
    if (a.n_ != b.n_) throw std::invalid_argument("TautClass: ambient mismatch");
    TautClass r(a.n_);
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_)
            r.add_term(ka.first + kb.first, ka.second + kb.second, ca * cb);
    return r;
}

TautClass TautClass::operator*(const Poly& s) const {
    TautClass r(n_);
    for (const auto& [k, c] : terms_) r.add_term(k.first, k.second, c * s);
    return r;
}

TautClass reduce_theta(const TautClass& c) {
    TautClass r(c.ambient());
    for (const auto& [k, coeff] : c.terms()) {
        auto [wp, tp] = k;
        if (tp == 0) {
            r.add_term(wp, 0, coeff);
        } else {
            // theta^i ~ i! * binom(g, i) * omega^i under the integral.
            Poly factor = factorial(static_cast<unsigned>(tp)) *
                          binom_poly(g_sym(), static_cast<unsigned>(tp));
            r.add_term(wp + tp, 0, coeff * factor);
        }
    }
    return r;
}

Poly integrate_Cn(const TautClass& c) {
    return reduce_theta(c).coeff(c.ambient(), 0);
}

ChernFactor chern_series_tangent(int n, const Rational& s) {
    QSeries base = QSeries::one(kOmegaVar, n);
    if (n >= 1) base.set_coeff(1, s);
    Poly expo = Poly(n + 1) - g_sym();
    QSeries theta = inv(base) * (-s);
    return {base, expo, theta};
}

ChernFactor chern_series_bundle(const Poly& L_degree, int n, const Rational& s) {
    QSeries base = QSeries::one(kOmegaVar, n);
    if (n >= 1) base.set_coeff(1, -s);
    Poly expo = Poly(n) + g_sym() - Poly(1) - L_degree;
    QSeries theta = inv(base) * s;
    return {base, expo, theta};
}

Poly degree_KS() { return g_sym() - Poly(1); }
Poly degree_KS2() { return Rational(2) * (g_sym() - Poly(1)); }

std::vector<ChernFactor> horizontal_factors(int n, const Rational& t) {
    if (t.is_zero()) throw std::invalid_argument("horizontal_factors: weight t must be nonzero");
    Rational it = Rational(1) / t;
    std::vector<ChernFactor> f;
    f.push_back(chern_series_bundle(degree_KS2(), n, it * Rational(1, 2)));
    f.push_back(chern_series_tangent(n, -it));
    f.push_back(chern_series_bundle(degree_KS(), n, -it));
    f.push_back(chern_series_bundle(degree_KS(), n, it).inverted());
    f.push_back(chern_series_bundle(degree_KS2(), n, it).inverted());
    return f;
}

namespace {

// Product of the base^exponent parts and the consolidated theta coefficient.
std::pair<PSeries, QSeries> assemble_factors(const std::vector<ChernFactor>& factors, int n) {
    PSeries prod = PSeries::one(kOmegaVar, n);
    QSeries alpha(kOmegaVar, n);
    for (const ChernFactor& f : factors) {
        prod = prod * pow_sym(f.base, f.exponent);
        alpha = alpha + f.theta;
    }
    return {prod, alpha};
}

}  // namespace

Poly horizontal_coefficient(int n, const Rational& t) {
    auto [prod, alpha] = assemble_factors(horizontal_factors(n, t), n);
    // exp(alpha * theta) -> (1 + alpha * omega)^g under the integral.
    QSeries one_plus_aw = QSeries::one(kOmegaVar, n) + alpha.shifted_up(1);
    prod = prod * pow_sym(one_plus_aw, g_sym());
    return prod.coeff(n) * (Rational(2).pow(n) * t.pow(n));
}

Poly horizontal_coefficient(int n) { return horizontal_coefficient(n, Rational(1)); }

Poly horizontal_coefficient_tautclass(int n) {
    auto [prod, alpha] = assemble_factors(horizontal_factors(n, Rational(1)), n);
    TautClass integrand(n);
    QSeries alpha_pow = QSeries::one(kOmegaVar, n);
    Rational inv_fact(1);
    for (int i = 0; i <= n; ++i) {
        if (i > 0) {
            alpha_pow = alpha_pow * alpha;
            inv_fact /= Rational(i);
        }
        PSeries si = prod * lift(alpha_pow * inv_fact);
        for (int j = 0; i + j <= n; ++j) integrand.add_term(j, i, si.coeff(j));
    }
    return integrate_Cn(integrand) * Poly(Rational(2).pow(n));
}

std::vector<Poly> horizontal_series(int order) {
    std::vector<Poly> h(static_cast<size_t>(order) + 1);
    parallel_for(h.size(), [&](size_t n) { h[n] = horizontal_coefficient(static_cast<int>(n)); });
    return h;
}

std::vector<Poly> horizontal_series_serial(int order) {
    std::vector<Poly> h;
    h.reserve(static_cast<size_t>(order) + 1);
    for (int n = 0; n <= order; ++n) h.push_back(horizontal_coefficient(n));
    return h;
}

NormalizationRecord horizontal_normalization() {
    return NormalizationRecord::neg_two_pow(-pg_sym() - g_sym());
}

}  // namespace vw
