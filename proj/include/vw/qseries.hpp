#pragma once

#include <functional>
#include <vector>

#include "vw/normalization.hpp"
#include "vw/series.hpp"

namespace vw {

/// prod_{m=1..order} (1 - q^m)^(e(m)) with integer exponents.
QSeries euler_product(const std::function<long(int)>& exponent_fn, int order);

/// Same with parameter-polynomial exponents.
PSeries euler_product_sym(const std::function<Poly(int)>& exponent_fn, int order);

/// Reduced theta series sum_{j>=0} q^(j^2+j): coefficient of q^m is 1
/// exactly when m = j^2 + j.
QSeries theta_reduced(int order);

/// Half-integer-square form sum_{n in Z+1/2} q^(n^2), carried with its
/// exact shift 1/4; equals 2 q^(1/4) times the reduced series.
QSeries theta_halfint(int order);

/// The monopole-branch prediction bracket
/// prod (1-q^(2n))^(-12 nu) (1-q^n)^(2g-2) * (sum q^(j^2+j))^(1-g)
/// with nu = pg + 1, normalized by 2^(-nu+1-g) = 2^(-pg-g); the fractional
/// prefactor q^((1-g)/6 - nu) is reported as an exact symbolic shift.
struct VWPrediction {
    PSeries bracket;
    NormalizationRecord norm;
    Poly full_shift;
};
VWPrediction vw_prediction_bracket(int order);

/// Number of nested pairs mu <= lambda (componentwise) with
/// |mu| + |lambda| = total, by exhaustive enumeration. This is the
/// brute-force oracle for (1-q) prod (1-q^n)^(-2).
long nested_partition_count(int total);
long nested_partition_count_serial(int total);

/// All partitions of n, parts weakly decreasing.
std::vector<std::vector<int>> partitions_of(int n);

/// Euler-characteristic series of the full nested tower:
/// (1-q)^e prod (1-q^n)^(-2e), carried with its exact shift -e/12.
QSeries euler_char_series(long e_of_S, int order);

/// q^(-1) prod (1-q^n)^(-24), shift -1.
QSeries g_series(int order);

}  // namespace vw
