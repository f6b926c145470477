#pragma once

#include <map>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "vw/rational.hpp"

namespace vw {

/// Display/ordering priority of the parameter symbols. Known surface
/// parameters come first, anything else sorts after them by name.
int symbol_rank(const std::string& sym);

/// A monomial in named parameters: sorted list of (symbol, exponent > 0).
struct Monomial {
    std::vector<std::pair<std::string, unsigned>> factors;

    int degree() const {
        int d = 0;
        for (const auto& [s, e] : factors) d += static_cast<int>(e);
        return d;
    }
    bool operator==(const Monomial&) const = default;
};

/// Graded-lex order (higher total degree first, then earlier/larger
/// exponents on higher-priority symbols). Map iteration in this order is
/// the canonical serialization order.
struct MonomialOrder {
    bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Sparse multivariate polynomial over Rational in named formal
/// parameters (g, pg for surface series; K2, c2, P2, ... for the
/// intersection rings). No zero coefficients are stored.
class Poly {
public:
    Poly() = default;
    Poly(long n) { if (n != 0) terms_[Monomial{}] = Rational(n); }
    Poly(const Rational& c) { if (!c.is_zero()) terms_[Monomial{}] = c; }

    static Poly var(const std::string& symbol) {
        Poly p;
        p.terms_[Monomial{{{symbol, 1}}}] = Rational(1);
        return p;
    }

    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first.factors.empty());
    }
    /// Coefficient of the constant monomial.
    Rational constant_term() const {
        auto it = terms_.find(Monomial{});
        return it == terms_.end() ? Rational(0) : it->second;
    }
    /// Value of a constant polynomial; throws if not constant.
    Rational to_rational() const {
        if (!is_constant()) throw std::domain_error("Poly: not constant: " + str());
        return constant_term();
    }

    int total_degree() const {
        int d = 0;
        for (const auto& [m, c] : terms_) d = std::max(d, m.degree());
        return d;
    }
    int degree_in(const std::string& symbol) const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    Poly& operator*=(const Poly& o) { return *this = *this * o; }
    Poly& operator*=(const Rational& c);
    friend Poly operator*(Poly a, const Rational& c) { return a *= c; }
    friend Poly operator*(const Rational& c, Poly a) { return a *= c; }

    Poly pow(unsigned e) const;

    bool operator==(const Poly& o) const { return terms_ == o.terms_; }
    bool operator!=(const Poly& o) const { return !(*this == o); }

    /// Exact evaluation; every symbol occurring in the polynomial must be bound.
    Rational eval(const std::map<std::string, Rational>& values) const;

    /// Substitutes polynomials for symbols; unbound symbols stay formal.
    Poly subst(const std::map<std::string, Poly>& values) const;

    std::vector<std::string> symbols() const;

    const std::map<Monomial, Rational, MonomialOrder>& terms() const { return terms_; }

    /// Canonical human/machine form, e.g. "2*g^2*pg - 3/2*g + 1".
    std::string str() const;
    friend std::ostream& operator<<(std::ostream& os, const Poly& p) { return os << p.str(); }

private:
    std::map<Monomial, Rational, MonomialOrder> terms_;
};

/// Falling-factorial binomial coefficient with polynomial top argument:
/// e(e-1)...(e-k+1)/k!. Evaluating at an integer e = m >= k gives the
/// ordinary binomial coefficient.
Poly binom_poly(const Poly& e, unsigned k);

}  // namespace vw
