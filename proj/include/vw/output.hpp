#pragma once

#include <json.hpp>

#include <ostream>
#include <string>
#include <vector>

#include "vw/normalization.hpp"
#include "vw/series.hpp"

namespace vw {

/// All machine output uses insertion-ordered JSON so that serialization is
/// byte-stable for fixed inputs and round-trips exactly.
using Json = nlohmann::ordered_json;

Json normalization_json(const NormalizationRecord& n);

std::vector<std::string> coeff_strings(const PSeries& s);
std::vector<std::string> coeff_strings(const QSeries& s);

/// Plain-text form: one coefficient per line as "q^n: value".
void print_coefficients(std::ostream& out, const std::string& var,
                        const std::vector<std::string>& coeffs);

void print_json(std::ostream& out, const Json& j);

}  // namespace vw
