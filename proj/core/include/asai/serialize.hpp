#pragma once

#include <string>
#include <string_view>

#include "asai/cyclotomic.hpp"
#include "asai/symbolic.hpp"

namespace asai {

// Compact canonical JSON: {"num":[{"coef":"3/2","exps":{"T":1}}],"den":[...]}.
std::string to_json(const RationalFunction& f);
std::string to_json(const RationalPoly& p);
// {"level":N,"coeffs":["1","0",...]}
std::string to_json(const CyclotomicNumber& c);
std::string to_json(const CycloPoly& p);

// Throw std::invalid_argument on malformed input.
RationalFunction rational_function_from_json(std::string_view text);
RationalPoly rational_poly_from_json(std::string_view text);
CyclotomicNumber cyclotomic_from_json(std::string_view text);
CycloPoly cyclo_poly_from_json(std::string_view text);

}  // namespace asai
