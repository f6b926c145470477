#include "vw/normalization.hpp"

#include <set>
#include <sstream>
#include <stdexcept>

namespace vw {

NormalizationRecord NormalizationRecord::neg_two_pow(const Poly& e) {
    NormalizationRecord r;
    r.sign_exponent = e;
    if (!e.is_zero()) r.prime_exponents[2] = e;
    return r;
}

NormalizationRecord NormalizationRecord::two_pow(const Poly& e) {
    NormalizationRecord r;
    if (!e.is_zero()) r.prime_exponents[2] = e;
    return r;
}

NormalizationRecord NormalizationRecord::sign_pow(const Poly& e) {
    NormalizationRecord r;
    r.sign_exponent = e;
    return r;
}

NormalizationRecord& NormalizationRecord::operator*=(const NormalizationRecord& o) {
    sign_exponent += o.sign_exponent;
    for (const auto& [p, e] : o.prime_exponents) {
        auto it = prime_exponents.find(p);
        if (it == prime_exponents.end()) {
            prime_exponents[p] = e;
        } else {
            it->second += e;
            if (it->second.is_zero()) prime_exponents.erase(it);
        }
    }
    return *this;
}

Poly NormalizationRecord::two_exponent() const {
    auto it = prime_exponents.find(2);
    return it == prime_exponents.end() ? Poly() : it->second;
}

bool NormalizationRecord::operator==(const NormalizationRecord& o) const {
    return sign_exponent == o.sign_exponent && prime_exponents == o.prime_exponents;
}

bool NormalizationRecord::sign_parity_equal(const NormalizationRecord& o) const {
    Poly d = sign_exponent - o.sign_exponent;
    if (d.is_zero()) return true;
    std::vector<std::string> syms = d.symbols();
    if (syms.size() > 3)
        throw std::domain_error("NormalizationRecord: too many symbols for parity certificate");
    // Enumerate the grid {0..7}^k; the parity of an integer-valued
    // polynomial of degree < 8 is periodic with period dividing 8.
    size_t k = syms.size();
    size_t count = 1;
    for (size_t i = 0; i < k; ++i) count *= 8;
    for (size_t idx = 0; idx < count; ++idx) {
        std::map<std::string, Rational> vals;
        size_t rest = idx;
        for (size_t i = 0; i < k; ++i) {
            vals[syms[i]] = Rational(static_cast<long>(rest % 8));
            rest /= 8;
        }
        Rational v = d.eval(vals);
        if (!v.is_integer()) return false;
        if ((v / Rational(2)).is_integer() == false) return false;
    }
    return true;
}

bool NormalizationRecord::equivalent(const NormalizationRecord& o) const {
    return prime_exponents == o.prime_exponents && sign_parity_equal(o);
}

NormalizationRecord NormalizationRecord::subst(const std::map<std::string, Poly>& values) const {
    NormalizationRecord r;
    r.sign_exponent = sign_exponent.subst(values);
    for (const auto& [p, e] : prime_exponents) {
        Poly s = e.subst(values);
        if (!s.is_zero()) r.prime_exponents[p] = s;
    }
    return r;
}

Rational NormalizationRecord::evaluate(const std::map<std::string, Rational>& values) const {
    long s = sign_exponent.eval(values).to_long();
    Rational r((s % 2 + 2) % 2 == 0 ? 1 : -1);
    for (const auto& [p, e] : prime_exponents) r *= Rational(p).pow(e.eval(values).to_long());
    return r;
}

std::string NormalizationRecord::str() const {
    if (sign_exponent.is_zero() && prime_exponents.empty()) return "1";
    // Merged (-2)^e form when the sign exponent matches the 2-exponent and
    // no other prime occurs.
    if (!sign_exponent.is_zero() && prime_exponents.size() == 1 &&
        prime_exponents.begin()->first == 2 && prime_exponents.begin()->second == sign_exponent)
        return "(-2)^(" + sign_exponent.str() + ")";
    std::ostringstream os;
    bool first = true;
    auto sep = [&]() {
        if (!first) os << " * ";
        first = false;
    };
    if (!sign_exponent.is_zero()) {
        sep();
        os << "(-1)^(" << sign_exponent.str() << ")";
    }
    for (const auto& [p, e] : prime_exponents) {
        sep();
        os << p << "^(" << e.str() << ")";
    }
    return os.str();
}

}  // namespace vw
