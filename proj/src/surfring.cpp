#include "vw/surfring.hpp"

#include <stdexcept>
#include <vector>

namespace vw {

namespace {
Poly K2_sym() { return Poly::var("K2"); }
Poly c2_sym() { return Poly::var("c2"); }
Poly P_sym(long m) { return Poly::var("P" + std::to_string(m)); }

std::map<long, long> factorize(long n) {
    std::map<long, long> f;
    for (long p = 2; p * p <= n; ++p)
        while (n % p == 0) {
            ++f[p];
            n /= p;
        }
    if (n > 1) ++f[n];
    return f;
}
}  // namespace

SurfClass operator+(const SurfClass& a, const SurfClass& b) {
    SurfClass r;
    r.c0_ = a.c0_ + b.c0_;
    r.cu_ = a.cu_ + b.cu_;
    r.cuu_ = a.cuu_ + b.cuu_;
    r.cv_ = a.cv_ + b.cv_;
    return r;
}

SurfClass operator-(const SurfClass& a, const SurfClass& b) { return a + b * Rational(-1); }

SurfClass operator*(const SurfClass& a, const SurfClass& b) {
    SurfClass r;
    r.c0_ = a.c0_ * b.c0_;
    r.cu_ = a.c0_ * b.cu_ + a.cu_ * b.c0_;
    r.cuu_ = a.c0_ * b.cuu_ + a.cu_ * b.cu_ + a.cuu_ * b.c0_;
    r.cv_ = a.c0_ * b.cv_ + a.cv_ * b.c0_;
    return r;
}

SurfClass operator*(const SurfClass& a, const Rational& s) {
    SurfClass r = a;
    r.c0_ *= s;
    r.cu_ *= s;
    r.cuu_ *= s;
    r.cv_ *= s;
    return r;
}

SurfClass SurfClass::inverse() const {
    if (c0_.is_zero()) throw std::invalid_argument("SurfClass: inverse of a non-unit");
    Rational c0i = Rational(1) / c0_;
    SurfClass n = *this * c0i - SurfClass(1);  // nilpotent, n^3 = 0
    return (SurfClass(1) - n + n * n) * c0i;
}

Poly integrate_S(const SurfClass& c) {
    return Poly(c.cuu()) * K2_sym() + Poly(c.cv()) * c2_sym();
}

std::pair<SurfClass, SurfClass> twist_chern(long l) {
    SurfClass u = SurfClass::u(), v = SurfClass::v();
    SurfClass c1 = u * Rational(1 - 2 * l);
    SurfClass c2 = v + u * u * Rational(l * l - l);
    return {c1, c2};
}

Poly vertical_c2_2_bracket(const Rational& t) {
    SurfClass u = SurfClass::u(), v = SurfClass::v();
    auto [c1p, c2p] = twist_chern(2);
    auto [c1m, c2m] = twist_chern(-1);
    SurfClass cotangent = SurfClass(t * t) - u * t + v;
    SurfClass twisted_up = SurfClass(t * t * Rational(4)) + c1p * (t * Rational(2)) + c2p;
    SurfClass twisted_down = SurfClass(t * t) - c1m * t + c2m;
    return integrate_S(cotangent * twisted_up * twisted_down.inverse());
}

RingValue vertical_c2_2() {
    return {vertical_c2_2_bracket(Rational(1)), NormalizationRecord::neg_two_pow(-P_sym(2))};
}

RingValue vertical_rank_r(long r) {
    if (r < 2) throw std::invalid_argument("vertical_rank_r: rank must be >= 2");
    Rational H(0);
    for (long i = 1; i < r; ++i) H += Rational(1, i);
    Rational inner = Rational(r - 1) - Rational(2 * (r - 1)) * H + Rational(2 * r) * H * H;
    Poly bracket = Poly(Rational(r) * inner) * K2_sym() + c2_sym();

    NormalizationRecord norm;
    for (long m = 2; m <= r; ++m) norm.sign_exponent += P_sym(m);
    Poly g_minus_1 = Poly::var("g") - Poly(1);
    for (long i = 2; i < r; ++i)
        for (const auto& [p, e] : factorize(i))
            norm *= NormalizationRecord{Poly(), {{p, Poly(Rational(e * i)) * g_minus_1}}};
    for (const auto& [p, e] : factorize(r))
        norm *= NormalizationRecord{Poly(), {{p, Poly(Rational(-e)) * P_sym(r)}}};
    return {bracket, norm};
}

BlowupClass BlowupClass::gen(int which) {
    BlowupClass c;
    Key k{0, 0, 0, 0, 0};
    k[which] = 1;
    c.add(k, Rational(1));
    return c;
}

void BlowupClass::add(const Key& k, const Rational& c) {
    if (c.is_zero()) return;
    int deg_a = k[1] + 2 * k[2];
    int deg_b = k[3] + 2 * k[4];
    if (deg_a > 2 || deg_b > 2 || k[0] + deg_a + deg_b > 4) return;  // vanishes
    auto it = terms_.find(k);
    if (it == terms_.end()) {
        terms_[k] = c;
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

BlowupClass operator+(const BlowupClass& a, const BlowupClass& b) {
    BlowupClass r = a;
    for (const auto& [k, c] : b.terms_) r.add(k, c);
    return r;
}

BlowupClass operator-(const BlowupClass& a, const BlowupClass& b) {
    return a + b * Rational(-1);
}

BlowupClass operator*(const BlowupClass& a, const BlowupClass& b) {
    BlowupClass r;
    for (const auto& [ka, ca] : a.terms_)
        for (const auto& [kb, cb] : b.terms_) {
            BlowupClass::Key k;
            for (int i = 0; i < 5; ++i) k[i] = ka[i] + kb[i];
            r.add(k, ca * cb);
        }
    return r;
}

BlowupClass operator*(const BlowupClass& a, const Rational& s) {
    BlowupClass r;
    if (s.is_zero()) return r;
    for (const auto& [k, c] : a.terms_) r.terms_[k] = c * s;
    return r;
}

BlowupClass BlowupClass::inverse() const {
    auto it = terms_.find(Key{0, 0, 0, 0, 0});
    if (it == terms_.end()) throw std::invalid_argument("BlowupClass: inverse of a non-unit");
    Rational c0i = Rational(1) / it->second;
    BlowupClass n = *this * c0i - BlowupClass(1);  // nilpotent, n^5 = 0
    BlowupClass acc(1), npow(1);
    for (int k = 1; k <= 4; ++k) {
        npow = npow * n;
        acc = (k % 2 == 0) ? acc + npow : acc - npow;
    }
    return acc * c0i;
}

namespace {

/// Restriction of a coefficient monomial a1^p a2^q b1^r b2^s to the
/// exceptional divisor: both factors restrict to the Chern classes of S.
SurfClass restrict_to_E(const BlowupClass::Key& k) {
    int c1_pow = k[1] + k[3], c2_pow = k[2] + k[4];
    if (c1_pow + 2 * c2_pow > 2) return SurfClass();
    SurfClass r(1);
    for (int i = 0; i < c1_pow; ++i) r = r * SurfClass::u();
    for (int i = 0; i < c2_pow; ++i) r = r * SurfClass::v();
    return r;
}

/// Per-factor integral over S of a monomial in (c1, c2): degree 2 only.
Poly factor_integral(int c1_pow, int c2_pow) {
    if (c1_pow == 2 && c2_pow == 0) return K2_sym();
    if (c1_pow == 0 && c2_pow == 1) return c2_sym();
    return Poly();
}

/// eps^m = A_m * eps + B_m on P(T_S), from the relation eps^2 = c1 eps - c2.
std::pair<SurfClass, SurfClass> eps_power(int m) {
    SurfClass A(1), B;  // m = 1
    for (int i = 1; i < m; ++i) {
        SurfClass A_next = SurfClass::u() * A + B;
        B = -(SurfClass::v() * A);
        A = A_next;
    }
    return {A, B};
}

}  // namespace

Poly blowup_integrate(const BlowupClass& c) {
    Poly total;
    for (const auto& [k, coeff] : c.terms()) {
        if (k[0] == 0) {
            total += Poly(coeff) * factor_integral(k[1], k[2]) * factor_integral(k[3], k[4]);
        } else if (k[0] >= 2) {
            auto [A, B] = eps_power(k[0] - 1);
            // push-down sends eps to -1 and 1 to 0
            total += Poly(coeff) * integrate_S(-(A * restrict_to_E(k)));
        }
        // k[0] == 1: a fiberwise-trivial integral over P(T_S), zero
    }
    return total;
}

Poly blowup_integrate_topdown(const BlowupClass& c) {
    Poly total;
    for (const auto& [k, coeff] : c.terms()) {
        if (k[0] == 0) {
            total += Poly(coeff) * factor_integral(k[1], k[2]) * factor_integral(k[3], k[4]);
        } else if (k[0] >= 2) {
            // Multiply the restricted coefficient class in first, then fold
            // the top eps-power down by the quadratic relation.
            std::vector<SurfClass> eps_poly(static_cast<size_t>(k[0]));
            eps_poly[static_cast<size_t>(k[0] - 1)] = restrict_to_E(k);
            for (size_t m = eps_poly.size() - 1; m >= 2; --m) {
                SurfClass top = eps_poly[m];
                eps_poly[m] = SurfClass();
                eps_poly[m - 1] = eps_poly[m - 1] + SurfClass::u() * top;
                eps_poly[m - 2] = eps_poly[m - 2] - SurfClass::v() * top;
            }
            total += Poly(coeff) * integrate_S(-eps_poly[1]);
        }
    }
    return total;
}

Poly mixed_s21_bracket(int i, int j, int k, const Rational& t) {
    if ((i != 1 && i != 2) || (j != 1 && j != 2) || (k != 1 && k != 2))
        throw std::invalid_argument("mixed_s21: i, j, k must be 1 or 2");
    using BC = BlowupClass;
    BC e = BC::e(), a1 = BC::a1(), a2 = BC::a2(), b1 = BC::b1(), b2 = BC::b2();
    BC ci = (i == 1) ? a1 : b1;
    BC cj = (j == 1) ? a1 : b1;
    BC ck = (k == 1) ? a1 : b1;
    BC T(t), T2(t * t);

    BC numerator = b1;                                             // virtual cycle c1(S_2)
    numerator = numerator * (T + e * Rational(2) - ci);            // K_{S_i}(2E) . t
    numerator = numerator * (T2 - a1 * t + a2);                    // Omega_{S_1} . t
    numerator = numerator * (T2 - b1 * t + b2);                    // Omega_{S_2} . t
    numerator = numerator *
                (T2 * Rational(4) - a1 * (t * Rational(6)) + a2 + a1 * a1 * Rational(2));
    numerator = numerator * (T * Rational(2) - b1 * Rational(2));  // K^2_{S_2} . t^2
    numerator = numerator * (T * Rational(2) - cj - e * Rational(2));  // K_{S_j}(-2E) . t^2
    numerator = numerator * (-T + ck + e);                         // K^{-1}_{S_k}(E) . t^{-1}

    BC denominator = T + e - ci;                                   // K_{S_i}(E) . t
    denominator = denominator * (T - b1);                          // K_{S_2} . t
    denominator = denominator * (T * Rational(2) - cj - e);        // K_{S_j}(-E) . t^2
    denominator = denominator *
                  (T2 - a1 * (t * Rational(3)) + a2 + a1 * a1 * Rational(2));
    denominator = denominator * (-T + b1 * Rational(2));           // K^{-2}_{S_2} . t^{-1}
    denominator = denominator * (-T + ck + e * Rational(2));       // K^{-1}_{S_k}(2E) . t^{-1}

    return blowup_integrate(numerator * denominator.inverse());
}

RingValue mixed_s21(int i, int j, int k) {
    return {mixed_s21_bracket(i, j, k, Rational(1)),
            NormalizationRecord::neg_two_pow(-P_sym(2))};
}

RingValue mixed_s21() { return mixed_s21(1, 1, 1); }

}  // namespace vw
