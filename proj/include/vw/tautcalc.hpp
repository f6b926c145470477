#pragma once

#include <map>
#include <utility>
#include <vector>

#include "vw/normalization.hpp"
#include "vw/poly.hpp"
#include "vw/series.hpp"

namespace vw {

/// Polynomial in the tautological degree-2 classes omega and theta on the
/// symmetric product C^[n], with parameter-polynomial coefficients.
/// Monomials of complex degree > n integrate to zero and are dropped.
/// Values are only ever compared through integration (theta-reduction is a
/// substitution valid under the integral sign, not a cohomological identity).
class TautClass {
public:
    explicit TautClass(int n) : n_(n) {}

    static TautClass one(int n) {
        TautClass c(n);
        c.add_term(0, 0, Poly(1));
        return c;
    }
    static TautClass monomial(int n, int omega_pow, int theta_pow, const Poly& coeff) {
        TautClass c(n);
        c.add_term(omega_pow, theta_pow, coeff);
        return c;
    }

    int ambient() const { return n_; }
    void add_term(int omega_pow, int theta_pow, const Poly& coeff);
    Poly coeff(int omega_pow, int theta_pow) const;
    const std::map<std::pair<int, int>, Poly>& terms() const { return terms_; }

    friend TautClass operator+(const TautClass& a, const TautClass& b);
    friend TautClass operator*(const TautClass& a, const TautClass& b);
    TautClass operator*(const Poly& s) const;

private:
    int n_;
    std::map<std::pair<int, int>, Poly> terms_;  // (omega power, theta power) -> coeff
};

/// Substitutes theta^i -> i! * binom(g, i) * omega^i. Integrates identically
/// to the input against any omega-power series (Poincare pairing).
TautClass reduce_theta(const TautClass& c);

/// Integral over C^[n]: the omega^n coefficient after theta-reduction.
Poly integrate_Cn(const TautClass& c);

/// One multiplicative factor of a localized Chern-series integrand on
/// C^[n]: base^exponent * exp(theta * theta_coeff), with base a unit
/// omega-series and the exp-of-theta part kept symbolic until the final
/// consolidation.
struct ChernFactor {
    QSeries base;       // series in omega, constant term 1
    Poly exponent;
    QSeries theta;      // coefficient of theta in the exponential

    ChernFactor inverted() const { return {base, -exponent, -theta * Rational(1)}; }
};

/// c_s(T_{C^[n]}) = (1 + s*omega)^(n+1-g) * exp(-s*theta/(1 + s*omega)).
ChernFactor chern_series_tangent(int n, const Rational& s);

/// c_s(L^[n]) = (1 - s*omega)^(n+g-1-deg L) * exp(s*theta/(1 - s*omega))
/// for a line bundle of degree deg L on the curve.
ChernFactor chern_series_bundle(const Poly& L_degree, int n, const Rational& s);

/// Degrees on the canonical curve C (genus g = 1 + K^2): K_S restricts to
/// degree g-1, K_S^2 to degree 2g-2.
Poly degree_KS();
Poly degree_KS2();

/// The five-factor integrand of the horizontal (i = 0) fixed-locus
/// contribution at equivariant weight t, before theta consolidation.
std::vector<ChernFactor> horizontal_factors(int n, const Rational& t);

/// Coefficient h_n in Q[g] of the horizontal generating-series bracket,
/// normalized by (-2)^(-pg-g). Consolidates the theta exponential via the
/// substitution exp(alpha*theta) -> (1 + alpha*omega)^g and integrates.
Poly horizontal_coefficient(int n);

/// Same computation carrying the equivariant weight t explicitly; the
/// result is t-independent because the integrand is homogeneous of joint
/// degree zero (only the t^0 part survives integration).
Poly horizontal_coefficient(int n, const Rational& t);

/// Reference route: expands exp(theta * alpha(omega)) into finitely many
/// theta-powers, reduces via the Poincare substitution, then integrates.
Poly horizontal_coefficient_tautclass(int n);

/// h_0..h_order; the parallel version distributes independent n.
std::vector<Poly> horizontal_series(int order);
std::vector<Poly> horizontal_series_serial(int order);

/// (-2)^(-pg-g), the common prefactor of the horizontal bracket.
NormalizationRecord horizontal_normalization();

}  // namespace vw
