#pragma once

#include <array>
#include <map>
#include <utility>

#include "vw/normalization.hpp"
#include "vw/poly.hpp"

namespace vw {

/// Class on a surface S: polynomial in u = c1(S) (complex degree 1) and
/// v = c2(S) (degree 2), truncated above degree 2. Integration reads off
/// the degree-2 part with u^2 -> K2 and v -> c2.
class SurfClass {
public:
    SurfClass() = default;
    SurfClass(const Rational& constant) : c0_(constant) {}
    SurfClass(long constant) : c0_(constant) {}
    static SurfClass u() {
        SurfClass c;
        c.cu_ = Rational(1);
        return c;
    }
    static SurfClass v() {
        SurfClass c;
        c.cv_ = Rational(1);
        return c;
    }

    const Rational& c0() const { return c0_; }
    const Rational& cu() const { return cu_; }
    const Rational& cuu() const { return cuu_; }
    const Rational& cv() const { return cv_; }

    friend SurfClass operator+(const SurfClass& a, const SurfClass& b);
    friend SurfClass operator-(const SurfClass& a, const SurfClass& b);
    friend SurfClass operator*(const SurfClass& a, const SurfClass& b);
    friend SurfClass operator*(const SurfClass& a, const Rational& s);
    SurfClass operator-() const { return *this * Rational(-1); }
    bool operator==(const SurfClass&) const = default;

    /// Inverse of a unit (nonzero constant term); the positive-degree part
    /// is nilpotent of order 3.
    SurfClass inverse() const;

private:
    Rational c0_, cu_, cuu_, cv_;  // 1, u, u^2, v
};

/// Degree-2 part of the class as a polynomial in K2 and c2; lower degrees
/// integrate to zero.
Poly integrate_S(const SurfClass& c);

/// Chern classes (c1, c2) of T_S tensor K_S^l:
/// c1 = (1-2l) u, c2 = v + (l^2 - l) u^2.
std::pair<SurfClass, SurfClass> twist_chern(long l);

struct RingValue {
    Poly bracket;              // polynomial in K2, c2
    NormalizationRecord norm;  // constant prefactor with P2, P3, ... exponents
};

/// Vertical fixed-locus term at c2(E) = 2: integrates the reciprocal
/// equivariant Euler class over S^[1,1] = S, giving
/// (-2)^(-P2) * (c2 + 6 K2).
RingValue vertical_c2_2();

/// The same integrand carrying the equivariant weight t; t-independent.
Poly vertical_c2_2_bracket(const Rational& t);

/// Rank-r vertical term over S^[1,...,1] = S:
/// (-1)^(P2+...+Pr) / r^(Pr) * (prod i^i)^(g-1) *
/// [ r*K2*(r-1 - 2(r-1)H + 2rH^2) + c2 ],  H = sum_{i<r} 1/i.
RingValue vertical_rank_r(long r);

/// Class on Bl_Delta(S x S): polynomial in e = [E] (degree 1) over the
/// bi-graded ring generated by a1, a2 (c1, c2 of the first factor) and
/// b1, b2 (second factor). Per-factor degree <= 2, total degree <= 4;
/// units invert by geometric series (nilpotency order 5).
class BlowupClass {
public:
    // exponents: (e, a1, a2, b1, b2)
    using Key = std::array<int, 5>;

    BlowupClass() = default;
    BlowupClass(const Rational& constant) { add(Key{0, 0, 0, 0, 0}, constant); }
    BlowupClass(long constant) : BlowupClass(Rational(constant)) {}
    static BlowupClass gen(int which);  // 0:e 1:a1 2:a2 3:b1 4:b2
    static BlowupClass e() { return gen(0); }
    static BlowupClass a1() { return gen(1); }
    static BlowupClass a2() { return gen(2); }
    static BlowupClass b1() { return gen(3); }
    static BlowupClass b2() { return gen(4); }

    void add(const Key& k, const Rational& c);
    const std::map<Key, Rational>& terms() const { return terms_; }

    friend BlowupClass operator+(const BlowupClass& a, const BlowupClass& b);
    friend BlowupClass operator-(const BlowupClass& a, const BlowupClass& b);
    friend BlowupClass operator*(const BlowupClass& a, const BlowupClass& b);
    friend BlowupClass operator*(const BlowupClass& a, const Rational& s);
    BlowupClass operator-() const { return *this * Rational(-1); }

    BlowupClass inverse() const;

private:
    std::map<Key, Rational> terms_;
};

/// Integration over Bl_Delta(S x S) by the stated rules: the e^0 part
/// integrates factor-wise over S x S; e^1 terms vanish; e^k (k >= 2)
/// restricts to the exceptional divisor P(T_S), reduces by the
/// Grothendieck relation e|_E^2 = c1 e|_E - c2, and pushes e|_E down to -1.
Poly blowup_integrate(const BlowupClass& c);

/// Same, reducing e-powers by top-down polynomial division instead of the
/// linear recurrence (order-independence witness).
Poly blowup_integrate_topdown(const BlowupClass& c);

/// Mixed fixed-locus term over S^[2,1] = Bl_Delta(S x S) with virtual-class
/// insertion c1(S_2): (-2)^(-P2) * K2 * (-12 K2 - 2 c2 + 62), the same for
/// every choice of i, j, k in {1, 2}.
RingValue mixed_s21(int i, int j, int k);
RingValue mixed_s21();

/// Mixed integrand with the equivariant weight t carried; t-independent.
Poly mixed_s21_bracket(int i, int j, int k, const Rational& t);

}  // namespace vw
