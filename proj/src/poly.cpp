#include "vw/poly.hpp"

#include <algorithm>
#include <set>
#include <sstream>

namespace vw {

int symbol_rank(const std::string& sym) {
    static const std::vector<std::string> known = {"g",  "pg", "c2", "K2", "P2",
                                                   "P3", "P4", "P5", "P6", "P7"};
    for (size_t i = 0; i < known.size(); ++i)
        if (known[i] == sym) return static_cast<int>(i);
    return static_cast<int>(known.size());
}

namespace {
bool symbol_before(const std::string& a, const std::string& b) {
    int ra = symbol_rank(a), rb = symbol_rank(b);
    if (ra != rb) return ra < rb;
    return a < b;
}
}  // namespace

bool MonomialOrder::operator()(const Monomial& a, const Monomial& b) const {
    int da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    // Walk both factor lists in symbol priority order; the monomial with
    // the larger exponent on the earlier symbol comes first.
    size_t i = 0, j = 0;
    while (i < a.factors.size() && j < b.factors.size()) {
        const auto& [sa, ea] = a.factors[i];
        const auto& [sb, eb] = b.factors[j];
        if (sa == sb) {
            if (ea != eb) return ea > eb;
            ++i, ++j;
        } else if (symbol_before(sa, sb)) {
            return true;  // a has positive exponent where b has zero
        } else {
            return false;
        }
    }
    return i < a.factors.size();
}

int Poly::degree_in(const std::string& symbol) const {
    int d = 0;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors)
            if (s == symbol) d = std::max(d, static_cast<int>(e));
    return d;
}

Poly Poly::operator-() const {
    Poly r;
    for (const auto& [m, c] : terms_) r.terms_[m] = -c;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = c;
        } else {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    for (const auto& [m, c] : o.terms_) {
        auto it = terms_.find(m);
        if (it == terms_.end()) {
            terms_[m] = -c;
        } else {
            it->second -= c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }
    return *this;
}

namespace {
Monomial mul_monomials(const Monomial& a, const Monomial& b) {
    Monomial r;
    size_t i = 0, j = 0;
    while (i < a.factors.size() || j < b.factors.size()) {
        if (j == b.factors.size() ||
            (i < a.factors.size() && symbol_before(a.factors[i].first, b.factors[j].first))) {
            r.factors.push_back(a.factors[i++]);
        } else if (i == a.factors.size() ||
                   symbol_before(b.factors[j].first, a.factors[i].first)) {
            r.factors.push_back(b.factors[j++]);
        } else {
            r.factors.emplace_back(a.factors[i].first, a.factors[i].second + b.factors[j].second);
            ++i, ++j;
        }
    }
    return r;
}
}  // namespace

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    for (const auto& [ma, ca] : a.terms_)
        for (const auto& [mb, cb] : b.terms_) {
            Monomial m = mul_monomials(ma, mb);
            auto it = r.terms_.find(m);
            if (it == r.terms_.end()) {
                Rational c = ca * cb;
                if (!c.is_zero()) r.terms_[m] = c;
            } else {
                it->second += ca * cb;
                if (it->second.is_zero()) r.terms_.erase(it);
            }
        }
    return r;
}

Poly& Poly::operator*=(const Rational& c) {
    if (c.is_zero()) {
        terms_.clear();
        return *this;
    }
    for (auto& [m, v] : terms_) v *= c;
    return *this;
}

Poly Poly::pow(unsigned e) const {
    Poly r(1);
    Poly b = *this;
    while (e > 0) {
        if (e & 1u) r = r * b;
        e >>= 1u;
        if (e > 0) b = b * b;
    }
    return r;
}

Rational Poly::eval(const std::map<std::string, Rational>& values) const {
    Rational r(0);
    for (const auto& [m, c] : terms_) {
        Rational t = c;
        for (const auto& [s, e] : m.factors) {
            auto it = values.find(s);
            if (it == values.end())
                throw std::invalid_argument("Poly::eval: unbound symbol '" + s + "'");
            t *= it->second.pow(static_cast<long>(e));
        }
        r += t;
    }
    return r;
}

Poly Poly::subst(const std::map<std::string, Poly>& values) const {
    Poly r;
    for (const auto& [m, c] : terms_) {
        Poly t(c);
        for (const auto& [s, e] : m.factors) {
            auto it = values.find(s);
            Poly base = it == values.end() ? Poly::var(s) : it->second;
            t = t * base.pow(e);
        }
        r += t;
    }
    return r;
}

std::vector<std::string> Poly::symbols() const {
    std::set<std::string> seen;
    for (const auto& [m, c] : terms_)
        for (const auto& [s, e] : m.factors) seen.insert(s);
    std::vector<std::string> r(seen.begin(), seen.end());
    std::sort(r.begin(), r.end(), symbol_before);
    return r;
}

std::string Poly::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [m, c] : terms_) {
        Rational a = c;
        if (first) {
            if (a.sign() < 0) {
                os << "-";
                a = -a;
            }
        } else {
            os << (a.sign() < 0 ? " - " : " + ");
            a = a.abs();
        }
        first = false;
        bool coeff_one = a.is_one() && !m.factors.empty();
        if (!coeff_one) os << a.str();
        bool need_star = !coeff_one;
        for (const auto& [s, e] : m.factors) {
            if (need_star) os << "*";
            os << s;
            if (e > 1) os << "^" << e;
            need_star = true;
        }
    }
    return os.str();
}

Poly binom_poly(const Poly& e, unsigned k) {
    Poly r(1);
    for (unsigned i = 0; i < k; ++i) r = r * (e - Poly(static_cast<long>(i)));
    r *= Rational(1) / factorial(k);
    return r;
}

}  // namespace vw
