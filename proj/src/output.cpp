#include "vw/output.hpp"

namespace vw {

Json normalization_json(const NormalizationRecord& n) {
    Json j;
    j["two_exponent"] = n.two_exponent().str();
    j["sign_exponent"] = n.sign_exponent.str();
    bool extra = false;
    for (const auto& [p, e] : n.prime_exponents) extra = extra || p != 2;
    if (extra) {
        Json primes;
        for (const auto& [p, e] : n.prime_exponents)
            if (p != 2) primes[std::to_string(p)] = e.str();
        j["other_primes"] = primes;
    }
    return j;
}

std::vector<std::string> coeff_strings(const PSeries& s) {
    std::vector<std::string> r;
    for (int n = 0; n <= s.order(); ++n) r.push_back(s.coeff(n).str());
    return r;
}

std::vector<std::string> coeff_strings(const QSeries& s) {
    std::vector<std::string> r;
    for (int n = 0; n <= s.order(); ++n) r.push_back(s.coeff(n).str());
    return r;
}

void print_coefficients(std::ostream& out, const std::string& var,
                        const std::vector<std::string>& coeffs) {
    for (size_t n = 0; n < coeffs.size(); ++n)
        out << var << "^" << n << ": " << coeffs[n] << "\n";
}

void print_json(std::ostream& out, const Json& j) { out << j.dump(2) << "\n"; }

}  // namespace vw
