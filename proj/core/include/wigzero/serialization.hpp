// Copyright 2026 The wigzero Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef WIGZERO_SERIALIZATION_HPP
#define WIGZERO_SERIALIZATION_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "wigzero/certificates.hpp"
#include "wigzero/laguerre.hpp"
#include "wigzero/nodal.hpp"
#include "wigzero/phase_space.hpp"
#include "wigzero/wigner.hpp"

namespace wigzero::io {

/// Malformed or invalid input document.
class ParseError : public std::invalid_argument {
   public:
    explicit ParseError(const std::string& what) : std::invalid_argument(what) {}
};

/// Largest norm deviation accepted without renormalize.
inline constexpr double kNormAccept = 1e-6;

/// "%.17g".
std::string format_double(double v);

/// {hbar, coeffs: [{re, im}...], center: [x, p], frame: [[a, b], [c, d]]}
std::string state_to_json(const HermiteState& state);

/// Missing hbar, center and frame take their defaults. A norm deviation up to
/// kNormAccept is rescaled silently; larger ones are rejected unless
/// `renormalize` is set.
HermiteState state_from_json(const std::string& text, bool renormalize = false);

/// FNV-1a of the canonical state JSON, as 16 hex digits.
std::string state_digest(const HermiteState& state);

/// {proposition, range: {...}, verdict, failures: [...], witnesses: [...], runtime_ms}
std::string certificate_to_json(const certificates::Certificate& cert, bool with_runtime = true);

std::string zeros_to_json(unsigned n, unsigned alpha, const laguerre::ZeroList& zeros);

/// Header "x,p,value".
std::string grid_to_csv(const wigner::GridValues& grid);
/// {hbar, state_digest, grid: {size, radius, center}, values: [...]} with rows along p.
std::string grid_to_json(const wigner::GridValues& grid, const HermiteState& state);

/// Header "center_x,center_p,radius,max_residual".
std::string circles_to_csv(const std::vector<nodal::Circle>& circles);

std::string nodal_report_to_json(const nodal::NodalReport& report);
std::string signup_to_json(const nodal::SignUPResult& result);
std::string inverse_to_json(const nodal::InverseResult& result, const std::vector<double>& s_values, int sigma,
                            unsigned N_max, double hbar);

}  // namespace wigzero::io

#endif  // WIGZERO_SERIALIZATION_HPP
