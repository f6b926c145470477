#include "vw/closedform.hpp"

#include <stdexcept>

#include "vw/parallel.hpp"
#include "vw/tautcalc.hpp"

namespace vw {

namespace {
const char* kQ = "q";
const char* kW = "w";

QSeries one_minus_q(int order) { return QSeries::with_coeffs(kQ, order, {1, -1}); }

/// Column n of the double series: the omega-expansion of
/// (omega-2)^(n+1-2g) (1+omega)^(n-g) (1-omega)^(-n-g) (1-2omega)^g.
QSeries double_series_column(long g, int n, int order) {
    QSeries one = QSeries::one(kW, order);
    QSeries omega = QSeries::variable(kW, order);
    QSeries half_base = one - omega * Rational(1, 2);
    QSeries col = pow_int(half_base, n + 1 - 2 * g) * Rational(-2).pow(n + 1 - 2 * g);
    col = col * pow_int(one + omega, n - g);
    col = col * pow_int(one - omega, -(n + g));
    col = col * pow_int(one - omega * Rational(2), g);
    return col;
}
}  // namespace

ClosedForm closed_form_series(int order) {
    Poly g = Poly::var("g");
    QSeries q = QSeries::variable(kQ, order);
    QSeries arg = one_minus_q(order) * (QSeries::one(kQ, order) - q * Rational(9));
    QSeries f = (QSeries::one(kQ, order) - q * Rational(3)) * inv(sqrt_one(arg));
    QSeries half = (QSeries::one(kQ, order) + f) * Rational(1, 2);
    PSeries bracket = pow_sym(one_minus_q(order), g - Poly(1)) * pow_sym(half, Poly(1) - g);
    return {bracket, NormalizationRecord::neg_two_pow(-Poly::var("pg") - g)};
}

QSeries closed_form_series_at(long g_value, int order) {
    QSeries q = QSeries::variable(kQ, order);
    QSeries arg = one_minus_q(order) * (QSeries::one(kQ, order) - q * Rational(9));
    QSeries f = (QSeries::one(kQ, order) - q * Rational(3)) * inv(sqrt_one(arg));
    QSeries half = (QSeries::one(kQ, order) + f) * Rational(1, 2);
    return pow_int(one_minus_q(order), g_value - 1) * pow_int(half, 1 - g_value);
}

BivariateSeries expand_double_series(long g_value, int order) {
    if (g_value < 2) throw std::invalid_argument("expand_double_series: integer genus must be >= 2");
    BivariateSeries b;
    b.order_x = b.order_t = order;
    b.a.assign(order + 1, std::vector<Rational>(order + 1));
    parallel_for(static_cast<size_t>(order) + 1, [&](size_t n) {
        QSeries col = double_series_column(g_value, static_cast<int>(n), order);
        for (int i = 0; i <= order; ++i) b.a[i][n] = col.coeff(i);
    });
    return b;
}

BivariateSeries expand_double_series_serial(long g_value, int order) {
    if (g_value < 2) throw std::invalid_argument("expand_double_series: integer genus must be >= 2");
    BivariateSeries b;
    b.order_x = b.order_t = order;
    b.a.assign(order + 1, std::vector<Rational>(order + 1));
    for (int n = 0; n <= order; ++n)
        for (int i = 0; i <= order; ++i) {
            // Cell-by-cell reference: truncate the column at omega^i and
            // integrate over C^[i].
            QSeries col = double_series_column(g_value, n, i);
            TautClass c(i);
            for (int j = 0; j <= i; ++j) c.add_term(j, 0, Poly(col.coeff(j)));
            b.a[i][n] = integrate_Cn(c).to_rational();
        }
    return b;
}

QSeries diagonal(const BivariateSeries& b) {
    if (b.order_x != b.order_t)
        throw std::invalid_argument("diagonal: needs a square index range");
    QSeries d(kQ, b.order_t);
    for (int n = 0; n <= b.order_t; ++n) d.set_coeff(n, b.at(n, n));
    return d;
}

QSeries diagonal_to_bracket(const QSeries& diag, long g_value) {
    Rational c = Rational(-2).pow(2 * g_value - 1);
    QSeries r(kQ, diag.order());
    for (int n = 0; n <= diag.order(); ++n)
        r.set_coeff(n, diag.coeff(n) * c * Rational(n % 2 == 0 ? 1 : -1));
    return r;
}

QSeries root_x0(int order) {
    QSeries one = QSeries::one(kQ, order);
    QSeries q = QSeries::variable(kQ, order);
    QSeries arg = one + q * Rational(8) * inv(one + q);
    return (one - sqrt_one(arg)) * Rational(1, 2);
}

QSeries residue_series_at(long g_value, int order) {
    if (g_value < 2) throw std::invalid_argument("residue_series: integer genus must be >= 2");
    const long g = g_value;
    QSeries one = QSeries::one(kQ, order);
    QSeries q = QSeries::variable(kQ, order);
    QSeries s = sqrt_one(one + q * Rational(8) * inv(one + q));
    QSeries x0 = (one - s) * Rational(1, 2);
    QSeries x1 = (one + s) * Rational(1, 2);

    QSeries numerator = pow_int(one - x0 * Rational(2), g);
    QSeries den = pow_int(x0 - one * Rational(2), 2 * g - 1);
    den = den * pow_int(one + x0, g);
    den = den * pow_int(one - x0, g - 1);
    den = den * (one + q);
    den = den * (x0 - x1);
    QSeries residue = -(numerator * inv(den));

    // Match the bracket convention of the closed form.
    return residue.negate_variable() * Rational(-2).pow(2 * g - 1);
}

}  // namespace vw
