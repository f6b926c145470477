#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vw/normalization.hpp"
#include "vw/series.hpp"

namespace vw {

/// Exact numerical invariants of a surface with h^1(O) = 0 and a smooth
/// connected canonical curve. c2 doubles as the topological Euler number
/// e(S). Construction enforces g = 1 + K2, Noether integrality
/// chi = (K2 + c2)/12, pg = chi - 1 and P2 = pg + g.
struct SurfaceData {
    std::string name;
    long K2 = 0;
    long c2 = 0;
    long chi = 0;
    long pg = 0;
    long g = 0;

    long P2() const { return pg + g; }
    long nu() const { return chi; }
    /// P_n = chi + n(n-1) K2 / 2 (no higher cohomology).
    Rational plurigenus(long n) const {
        return Rational(chi) + Rational(n * (n - 1), 2) * Rational(K2);
    }

    /// Validates and derives the dependent fields from K2 and c2.
    static SurfaceData custom(long K2, long c2, const std::string& name = "custom");

    /// Values bound for parameter-polynomial evaluation, including the
    /// plurigenus symbols P2..P7.
    std::map<std::string, Rational> param_values() const;
};

SurfaceData surface_preset(const std::string& name);
std::vector<std::string> surface_preset_names();

/// One fixed-locus component contribution at bracket scale.
struct MonopoleComponent {
    std::string label;  // e.g. "S^[1,2]"
    int power;          // q-power = c2(E)
    Poly coeff;
};

/// The monopole-branch generating series through q^3: horizontal terms
/// S^[0,n], the vertical term S^[1,1] at q^2 and the mixed term S^[1,2]
/// at q^3, under the common normalization (-2)^(-nu-g+1) = (-2)^(-pg-g).
/// Orders beyond q^3 would need further components and are not summed here.
struct MonopoleSeries {
    PSeries bracket;
    NormalizationRecord norm;
    std::vector<MonopoleComponent> components;
};
MonopoleSeries monopole_series_q3();

/// Coefficient-wise comparison of the monopole series against the
/// prediction bracket, with normalization comparison and the parity of the
/// overall sign (-1)^vd reported separately, never absorbed.
struct VWComparison {
    bool equal = false;
    int first_mismatch = -1;  // offending q-power, -1 when equal
    std::vector<std::string> monopole_coeffs;
    std::vector<std::string> prediction_coeffs;
    bool two_exponent_equal = false;
    Poly sign_exponent_diff;  // monopole minus prediction sign exponent
    /// vd = 2 r c2(E) - (r-1) c1^2 - (r^2-1) chi at r = 2; its parity is
    /// independent of c2(E) and matches the sign-exponent difference.
    std::string vd_formula;
    bool vd_parity_matches = false;
};
VWComparison compare_vw();
VWComparison compare_vw(const SurfaceData& s);

/// Comparison core, exposed so that perturbed inputs can be exercised.
VWComparison compare_brackets(const PSeries& monopole, const NormalizationRecord& mono_norm,
                              const PSeries& prediction, const NormalizationRecord& pred_norm,
                              const std::optional<SurfaceData>& surface);

}  // namespace vw
