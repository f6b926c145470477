#pragma once

#include <initializer_list>
#include <map>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "vw/poly.hpp"
#include "vw/rational.hpp"

namespace vw {

/// Truncated power series sum_{k=0..order} c_k * x^(shift+k) in one formal
/// variable, over an exact coefficient ring (Rational or Poly). Arithmetic
/// truncates consistently: a product to order N only ever uses inputs up to
/// order N. The exact-rational exponent shift is bookkeeping on the side;
/// it adds under multiplication and must agree for addition/comparison.
template <typename C>
class Series {
public:
    Series(std::string var, int order)
        : var_(std::move(var)), shift_(0), c_(static_cast<size_t>(order) + 1) {
        if (order < 0) throw std::invalid_argument("Series: negative order");
    }

    static Series constant(const std::string& var, int order, const C& value) {
        Series s(var, order);
        s.c_[0] = value;
        return s;
    }
    static Series one(const std::string& var, int order) { return constant(var, order, C(1)); }
    /// The series "x" itself (truncates to 0 at order 0).
    static Series variable(const std::string& var, int order) {
        Series s(var, order);
        if (order >= 1) s.c_[1] = C(1);
        return s;
    }
    static Series with_coeffs(const std::string& var, int order, std::initializer_list<C> cs) {
        Series s(var, order);
        size_t i = 0;
        for (const C& v : cs) {
            if (i >= s.c_.size()) break;
            s.c_[i++] = v;
        }
        return s;
    }

    const std::string& var() const { return var_; }
    int order() const { return static_cast<int>(c_.size()) - 1; }
    const Rational& shift() const { return shift_; }

    const C& coeff(int k) const {
        static const C zero{};
        if (k < 0 || k > order()) return zero;
        return c_[static_cast<size_t>(k)];
    }
    void set_coeff(int k, const C& v) { c_.at(static_cast<size_t>(k)) = v; }

    Series with_shift(const Rational& s) const {
        Series r = *this;
        r.shift_ = s;
        return r;
    }
    /// Re-truncates (or zero-extends) to the given order.
    Series truncated(int new_order) const {
        Series r(var_, new_order);
        r.shift_ = shift_;
        for (int k = 0; k <= std::min(order(), new_order); ++k) r.c_[k] = c_[k];
        return r;
    }
    /// Multiplies by x^k without changing the truncation window.
    Series shifted_up(int k) const {
        Series r(var_, order());
        r.shift_ = shift_;
        for (int j = 0; j + k <= order(); ++j) r.c_[j + k] = c_[j];
        return r;
    }
    /// x -> -x on a shift-0 series.
    Series negate_variable() const {
        require_shift_zero("negate_variable");
        Series r = *this;
        for (int k = 1; k <= order(); k += 2) r.c_[k] = -r.c_[k];
        return r;
    }

    Series operator-() const {
        Series r = *this;
        for (auto& v : r.c_) v = -v;
        return r;
    }

    friend Series operator+(const Series& a, const Series& b) {
        a.require_compatible(b, true);
        Series r(a.var_, std::min(a.order(), b.order()));
        r.shift_ = a.shift_;
        for (int k = 0; k <= r.order(); ++k) r.c_[k] = a.c_[k] + b.c_[k];
        return r;
    }
    friend Series operator-(const Series& a, const Series& b) { return a + (-b); }

    friend Series operator*(const Series& a, const Series& b) {
        a.require_compatible(b, false);
        Series r(a.var_, std::min(a.order(), b.order()));
        r.shift_ = a.shift_ + b.shift_;
        for (int i = 0; i <= r.order(); ++i) {
            if (is_zero_coeff(a.c_[i])) continue;
            for (int j = 0; i + j <= r.order(); ++j) {
                if (is_zero_coeff(b.c_[j])) continue;
                r.c_[i + j] += a.c_[i] * b.c_[j];
            }
        }
        return r;
    }

    friend Series operator*(Series a, const C& s) {
        for (auto& v : a.c_) v = v * s;
        return a;
    }
    friend Series operator*(const C& s, Series a) { return a * s; }

    bool operator==(const Series& o) const {
        return var_ == o.var_ && shift_ == o.shift_ && c_ == o.c_;
    }

    bool is_zero() const {
        for (const auto& v : c_)
            if (!is_zero_coeff(v)) return false;
        return true;
    }

    std::string str() const {
        std::ostringstream os;
        bool first = true;
        for (int k = 0; k <= order(); ++k) {
            if (is_zero_coeff(c_[k])) continue;
            if (!first) os << " + ";
            first = false;
            os << "(" << c_[k] << ")*" << var_ << "^(" << (shift_ + Rational(k)).str() << ")";
        }
        return first ? "0" : os.str();
    }

    void require_shift_zero(const char* what) const {
        if (!shift_.is_zero())
            throw std::invalid_argument(std::string("Series: ") + what + " requires shift 0");
    }

private:
    static bool is_zero_coeff(const C& v) {
        if constexpr (requires { v.is_zero(); })
            return v.is_zero();
        else
            return v == C{};
    }
    void require_compatible(const Series& o, bool need_same_shift) const {
        if (var_ != o.var_)
            throw std::invalid_argument("Series: variable mismatch ('" + var_ + "' vs '" +
                                        o.var_ + "')");
        if (need_same_shift && shift_ != o.shift_)
            throw std::invalid_argument("Series: shift mismatch (" + shift_.str() + " vs " +
                                        o.shift_.str() + ")");
    }

    std::string var_;
    Rational shift_;
    std::vector<C> c_;
};

namespace detail {
inline bool is_unit(const Rational& c) { return !c.is_zero(); }
inline Rational unit_inverse(const Rational& c) { return Rational(1) / c; }
inline bool is_unit(const Poly& c) { return c.is_constant() && !c.is_zero(); }
inline Poly unit_inverse(const Poly& c) { return Poly(Rational(1) / c.to_rational()); }
}  // namespace detail

/// Multiplicative inverse to the truncation order. Requires shift 0 and a
/// unit constant term.
template <typename C>
Series<C> inv(const Series<C>& a) {
    a.require_shift_zero("inversion");
    if (!detail::is_unit(a.coeff(0)))
        throw std::invalid_argument("Series: inversion needs a unit constant term");
    C c0i = detail::unit_inverse(a.coeff(0));
    Series<C> r(a.var(), a.order());
    r.set_coeff(0, c0i);
    for (int n = 1; n <= a.order(); ++n) {
        C acc{};
        for (int k = 1; k <= n; ++k) acc += a.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, -(acc * c0i));
    }
    return r;
}

/// Square root with constant term 1 (positive branch); result^2 == a to the
/// truncation order.
template <typename C>
Series<C> sqrt_one(const Series<C>& a) {
    a.require_shift_zero("square root");
    if (!(a.coeff(0) == C(1)))
        throw std::invalid_argument("Series: square root needs constant term 1");
    Series<C> r(a.var(), a.order());
    r.set_coeff(0, C(1));
    const C half = C(1) * Rational(1, 2);
    for (int n = 1; n <= a.order(); ++n) {
        C acc = a.coeff(n);
        for (int k = 1; k < n; ++k) acc -= r.coeff(k) * r.coeff(n - k);
        r.set_coeff(n, acc * half);
    }
    return r;
}

/// Integer power by square-and-multiply; negative exponents invert first.
template <typename C>
Series<C> pow_int(const Series<C>& a, long e) {
    if (e < 0) return pow_int(inv(a), -e);
    Series<C> r = Series<C>::one(a.var(), a.order());
    Series<C> b = a;
    unsigned long k = static_cast<unsigned long>(e);
    // Shift bookkeeping: x^(s)+... to integer power scales the shift.
    r = r.with_shift(a.shift() * Rational(e));
    b = b.with_shift(Rational(0));
    while (k > 0) {
        if (k & 1ul) r = r * b;
        k >>= 1ul;
        if (k > 0) b = b * b;
    }
    return r;
}

inline Series<Poly> lift(const Series<Rational>& a) {
    Series<Poly> r(a.var(), a.order());
    r = r.with_shift(a.shift());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, Poly(a.coeff(k)));
    return r;
}

/// base^e for a polynomial exponent, via the binomial series
/// sum_k binom_poly(e, k) (base-1)^k. Requires shift 0 and constant term 1;
/// callers must factor out any other constant and track it separately.
inline Series<Poly> pow_sym(const Series<Poly>& base, const Poly& e) {
    base.require_shift_zero("symbolic power");
    if (!(base.coeff(0) == Poly(1)))
        throw std::invalid_argument("Series: symbolic power needs constant term 1");
    const int N = base.order();
    Series<Poly> h = base - Series<Poly>::one(base.var(), N);
    Series<Poly> r = Series<Poly>::one(base.var(), N);
    Series<Poly> hk = Series<Poly>::one(base.var(), N);
    for (int k = 1; k <= N; ++k) {
        hk = hk * h;  // valuation >= k
        r = r + binom_poly(e, static_cast<unsigned>(k)) * hk;
    }
    return r;
}

inline Series<Poly> pow_sym(const Series<Rational>& base, const Poly& e) {
    return pow_sym(lift(base), e);
}

inline Series<Rational> eval_at(const Series<Poly>& a,
                                const std::map<std::string, Rational>& values) {
    Series<Rational> r(a.var(), a.order());
    r = r.with_shift(a.shift());
    for (int k = 0; k <= a.order(); ++k) r.set_coeff(k, a.coeff(k).eval(values));
    return r;
}

using QSeries = Series<Rational>;
using PSeries = Series<Poly>;

}  // namespace vw
