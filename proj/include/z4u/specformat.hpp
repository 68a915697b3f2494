/*
   Copyright 2026 The z4ucyclic authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#ifndef Z4U_SPECFORMAT_HPP
#define Z4U_SPECFORMAT_HPP

#include <string>

#include <json.hpp>

#include "z4u/codes.hpp"
#include "z4u/graymap.hpp"

namespace z4u {

/**
 * Parser for the ideal descriptor mini-language, one term per factor:
 *
 *   u^i            plain chain power (0 -> <u^k>, 1 -> <u^0> also accepted)
 *   2u^s           doubled chain power (2 alone means 2u^0)
 *   u^i+2u^t*(h)   twisted principal; h lists the u-coefficients of the
 *                  unit, comma separated, each an F2 polynomial in x,
 *                  e.g. u^3+2u^2*(x^2+1) or u^2+2*(1,x)
 *   (u^i,2u^s)             two-generator plain form
 *   (u^i+2u^t*(h),2u^s)    two-generator twisted form
 *
 * Angle brackets around a term are tolerated.  Classification into the
 * canonical case happens automatically; invalid parameter combinations are
 * rejected.
 */
IdealSpec parse_ideal_term(const std::string& term, const FieldPtr& field, int k);

/// Semicolon-separated terms, one per factor of the system.
std::vector<IdealSpec> parse_spec_list(const std::string& text, const FactorSystem& system, int k);

nlohmann::json poly_to_json(const Z4Poly& p);
nlohmann::json poly_to_json(const F2Poly& p);
nlohmann::json spec_to_json(const IdealSpec& spec);
nlohmann::json mixed_to_json(const MixedEl& e);
nlohmann::json factor_system_to_json(const FactorSystem& system);
nlohmann::json code_to_json(const CyclicCode& code);
nlohmann::json matrix_to_json(const Z4Matrix& m);

/// One codeword as a CSV row: n*k digits, column-major by u-power.
std::string codeword_csv_row(const CodeElement& w);
std::string matrix_to_csv(const Z4Matrix& m);

}  // namespace z4u

#endif
