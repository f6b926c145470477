#pragma once

#include <map>
#include <string>

#include "vw/poly.hpp"
#include "vw/rational.hpp"

namespace vw {

/// Exact bookkeeping for constant prefactors of the form
/// (-1)^s * prod_p p^(e_p) with polynomial exponents (e.g. (-2)^(-pg-g)).
/// Keeping these outside the series leaves all coefficients polynomial.
/// Composes additively under multiplication of normalized quantities.
struct NormalizationRecord {
    Poly sign_exponent;                     // exponent of (-1)
    std::map<long, Poly> prime_exponents;   // prime base -> exponent

    static NormalizationRecord identity() { return {}; }
    static NormalizationRecord neg_two_pow(const Poly& e);
    static NormalizationRecord two_pow(const Poly& e);
    static NormalizationRecord sign_pow(const Poly& e);

    NormalizationRecord& operator*=(const NormalizationRecord& o);
    friend NormalizationRecord operator*(NormalizationRecord a, const NormalizationRecord& b) {
        return a *= b;
    }

    Poly two_exponent() const;

    bool operator==(const NormalizationRecord& o) const;

    /// Prefactors denote equal numbers iff prime exponents agree exactly and
    /// the sign exponents agree mod 2. Sign exponents are integer-valued
    /// polynomials; parity is certified on an integer grid (period 2^k in
    /// each variable bounds the degree, so a small grid is exhaustive).
    bool sign_parity_equal(const NormalizationRecord& o) const;
    bool equivalent(const NormalizationRecord& o) const;

    NormalizationRecord subst(const std::map<std::string, Poly>& values) const;

    /// The prefactor as an exact rational at concrete parameter values.
    Rational evaluate(const std::map<std::string, Rational>& values) const;

    /// Compact form, e.g. "(-2)^(-g - pg)" or "(-1)^(P2 + P3) * 2^(2*g - 2) * 3^(-P3)".
    std::string str() const;
};

}  // namespace vw
