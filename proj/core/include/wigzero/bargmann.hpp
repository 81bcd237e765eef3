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

#ifndef WIGZERO_BARGMANN_HPP
#define WIGZERO_BARGMANN_HPP

#include <vector>

#include "wigzero/phase_space.hpp"
#include "wigzero/quadrature.hpp"

namespace wigzero::bargmann {

/// Bargmann transform of a Hermite state as a polynomial in w. For a state
/// centered at the origin, B h_n(w) = (-w)^n / sqrt(n! hbar^n). A nonzero
/// center shifts the variable: eval(w) = Q(w - shift).
struct BargmannPoly {
    double hbar = 1.0;
    /// Coefficients of Q, low to high.
    std::vector<Complex> coeffs;
    Complex shift;

    unsigned degree() const { return static_cast<unsigned>(coeffs.size() - 1); }
    Complex eval(Complex w) const;
    /// All roots with multiplicity, sorted by (real, imag).
    std::vector<Complex> roots() const;
};

/// Point of the Bargmann plane paired with z in the Husimi formula,
/// w = -(x - i p) / sqrt 2.
inline Complex bargmann_argument(const PhasePoint& z) { return -Complex(z.x, -z.p) / std::sqrt(2.0); }

/// Requires an identity or rotation frame.
BargmannPoly bargmann_poly(const HermiteState& state);

/// Direct quadrature of the Bargmann integral for a state centered at the
/// origin with an identity or rotation frame.
Complex bargmann_quadrature(const HermiteState& state, Complex w);

/// |Bf|^2 e^{-|z|^2 / 2hbar} / (2 pi hbar), taken about the state center.
double husimi_eval(const HermiteState& state, const PhasePoint& z);

/// Convolution of Wf with the Gaussian Wigner function by 2-D quadrature.
/// Works for any frame.
double husimi_convolution(const HermiteState& state, const PhasePoint& z, const quadrature::Options& opts = {});

}  // namespace wigzero::bargmann

#endif  // WIGZERO_BARGMANN_HPP
