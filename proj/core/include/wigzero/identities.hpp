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

#ifndef WIGZERO_IDENTITIES_HPP
#define WIGZERO_IDENTITIES_HPP

#include <functional>

#include "wigzero/phase_space.hpp"
#include "wigzero/quadrature.hpp"

namespace wigzero::identities {

struct IdentityCheck {
    Complex lhs;
    Complex rhs;
    double residual = 0.0;
    unsigned order = 0;
};

/// Both sides of
///   int Wf(z) Wf(-z) e^{2 i sigma(z, z2) / hbar} dz = (pi hbar / 2) Wf(z2/2) Wf(-z2/2),
/// the left by 2-D quadrature.
IdentityCheck hlawatsch_nuttall_check(const HermiteState& state, const PhasePoint& z2,
                                      const quadrature::Options& opts = {});

struct SelfMapReport {
    PhasePoint zero;
    double max_residual = 0.0;
    /// Largest |right side| over the check grid, for scale.
    double max_rhs = 0.0;
    unsigned points = 0;
};

/// A zero of Wf found by bisection along rays from the state center.
/// Throws DiagnosticError when no sign change exists out to the bound radius.
PhasePoint find_zero(const HermiteState& state);

/// With g the state translated so that `zero` sits at the origin and
/// F(z) = Wg(z) Wg(-z), checks (FF)(xi) = (pi hbar / 2) F(-(pi hbar / 2) J xi)
/// on a grid x grid set of xi, where (FF)(xi) = int F(z) e^{-2 pi i z.xi} dz.
/// Throws DiagnosticError if Wf(zero) is not 0 within 1e-9.
SelfMapReport fourier_selfmap_check(const HermiteState& state, const PhasePoint& zero, unsigned grid = 8);
SelfMapReport fourier_selfmap_check(const HermiteState& state, unsigned grid = 8);

/// Same relation for F(z) = G(z) e^{-|z|^2 / width^2}, with G supplied.
SelfMapReport fourier_selfmap_check(const std::function<Complex(const PhasePoint&)>& G, double width, double hbar,
                                    unsigned grid = 8);

}  // namespace wigzero::identities

#endif  // WIGZERO_IDENTITIES_HPP
