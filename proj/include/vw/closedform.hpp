#pragma once

#include <vector>

#include "vw/normalization.hpp"
#include "vw/series.hpp"

namespace vw {

/// Bivariate truncated series sum a_{i,n} x^i t^n over exact rationals at a
/// fixed integer genus. Diagonal extraction needs a square index range.
struct BivariateSeries {
    int order_x = 0;
    int order_t = 0;
    std::vector<std::vector<Rational>> a;  // a[i][n]

    const Rational& at(int i, int n) const { return a.at(i).at(n); }
};

/// The horizontal bracket B(q) = (1-q)^(g-1) * ((1+f)/2)^(1-g) with
/// f = (1-3q)/sqrt((1-q)(1-9q)), normalized by (-2)^(-pg-g). B(0) = 1 and
/// the coefficients are polynomial in g.
struct ClosedForm {
    PSeries bracket;
    NormalizationRecord norm;
};
ClosedForm closed_form_series(int order);

/// The same bracket at a concrete integer genus.
QSeries closed_form_series_at(long g_value, int order);

/// Grid a_{i,n} = integral over C^[i] of
/// (omega-2)^(n+1-2g) (1+omega)^(n-g) (1-omega)^(-n-g) (1-2omega)^g,
/// for integer g >= 2. The parallel kernel distributes the independent
/// columns; the serial reference evaluates each cell through integrate_Cn.
BivariateSeries expand_double_series(long g_value, int order);
BivariateSeries expand_double_series_serial(long g_value, int order);

/// q^n coefficient a_{n,n}.
QSeries diagonal(const BivariateSeries& b);

/// Converts the diagonal of the double series to the bracket convention:
/// b_n = (-2)^(2g-1) * (-1)^n * a_{n,n}.
QSeries diagonal_to_bracket(const QSeries& diag, long g_value);

/// The root x0 = (1 - sqrt(1 + 8q/(1+q)))/2 of (1+q)x^2 - (1+q)x - 2q,
/// the unique root with zero constant term.
QSeries root_x0(int order);

/// Residue evaluation of the diagonal at the root x0, reduced to the same
/// bracket convention as closed_form_series; the two agree exactly.
QSeries residue_series_at(long g_value, int order);

}  // namespace vw
