#include "vw/qseries.hpp"


#include "vw/parallel.hpp"

namespace vw {

namespace {
const char* kQ = "q";

/// 1 - q^m truncated at the given order.
QSeries one_minus_qm(int m, int order) {
    QSeries s = QSeries::one(kQ, order);
    if (m <= order) s.set_coeff(m, Rational(-1));
    return s;
}
}  // namespace

QSeries euler_product(const std::function<long(int)>& exponent_fn, int order) {
    QSeries r = QSeries::one(kQ, order);
    for (int m = 1; m <= order; ++m) {
        long e = exponent_fn(m);
        if (e != 0) r = r * pow_int(one_minus_qm(m, order), e);
    }
    return r;
}

PSeries euler_product_sym(const std::function<Poly(int)>& exponent_fn, int order) {
    PSeries r = PSeries::one(kQ, order);
    for (int m = 1; m <= order; ++m) {
        Poly e = exponent_fn(m);
        if (!e.is_zero()) r = r * pow_sym(one_minus_qm(m, order), e);
    }
    return r;
}

QSeries theta_reduced(int order) {
    QSeries s(kQ, order);
    for (long j = 0; j * j + j <= order; ++j) s.set_coeff(static_cast<int>(j * j + j), Rational(1));
    return s;
}

QSeries theta_halfint(int order) {
    QSeries s = QSeries{kQ, order}.with_shift(Rational(1, 4));
    // n = +-(j + 1/2) both contribute to exponent n^2 = (j^2+j) + 1/4.
    for (long j = 0; j * j + j <= order; ++j) s.set_coeff(static_cast<int>(j * j + j), Rational(2));
    return s;
}

VWPrediction vw_prediction_bracket(int order) {
    Poly g = Poly::var("g");
    Poly nu = Poly::var("pg") + Poly(1);
    PSeries even = euler_product_sym(
        [&](int m) { return m % 2 == 0 ? Rational(-12) * nu : Poly(); }, order);
    PSeries all = euler_product_sym([&](int) { return Rational(2) * g - Poly(2); }, order);
    PSeries theta_part = pow_sym(lift(theta_reduced(order)), Poly(1) - g);
    PSeries bracket = even * all * theta_part;
    NormalizationRecord norm = NormalizationRecord::two_pow(-nu + Poly(1) - g);
    Poly full_shift = (Poly(1) - g) * Rational(1, 6) - nu;
    return {bracket, norm, full_shift};
}

namespace {
/// Number of partitions mu of `remaining` fitting under lambda from index
/// `idx` on, with parts bounded by `prev`.
long count_nested_under(const std::vector<int>& lambda, size_t idx, int remaining, int prev) {
    if (remaining == 0) return 1;
    if (idx >= lambda.size()) return 0;
    long total = 0;
    int bound = std::min(prev, std::min(lambda[idx], remaining));
    for (int part = 1; part <= bound; ++part)
        total += count_nested_under(lambda, idx + 1, remaining - part, part);
    return total;
}

void emit_partitions(int n, int max_part, std::vector<int>& cur,
                     std::vector<std::vector<int>>& out) {
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int part = std::min(n, max_part); part >= 1; --part) {
        cur.push_back(part);
        emit_partitions(n - part, part, cur, out);
        cur.pop_back();
    }
}
}  // namespace

std::vector<std::vector<int>> partitions_of(int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    emit_partitions(n, n == 0 ? 1 : n, cur, out);
    return out;
}

long nested_partition_count_serial(int total) {
    long count = 0;
    for (int w = (total + 1) / 2; w <= total; ++w)
        for (const auto& lambda : partitions_of(w))
            count += count_nested_under(lambda, 0, total - w, total);
    return count;
}

long nested_partition_count(int total) {
    // Independent outer-partition sizes |lambda| = w in parallel.
    int lo = (total + 1) / 2;
    std::vector<long> per_size(static_cast<size_t>(total - lo) + 1, 0);
    parallel_for(per_size.size(), [&](size_t s) {
        int w = lo + static_cast<int>(s);
        long count = 0;
        for (const auto& lambda : partitions_of(w))
            count += count_nested_under(lambda, 0, total - w, total);
        per_size[s] = count;
    });
    long count = 0;
    for (long c : per_size) count += c;
    return count;
}

QSeries euler_char_series(long e_of_S, int order) {
    QSeries product = euler_product([&](int) { return -2 * e_of_S; }, order);
    QSeries rational_part = pow_int(one_minus_qm(1, order), e_of_S);
    return (rational_part * product).with_shift(Rational(-e_of_S, 12));
}

QSeries g_series(int order) {
    return euler_product([](int) { return -24; }, order).with_shift(Rational(-1));
}

}  // namespace vw
