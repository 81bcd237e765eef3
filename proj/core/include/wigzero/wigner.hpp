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

#ifndef WIGZERO_WIGNER_HPP
#define WIGZERO_WIGNER_HPP

#include <map>
#include <utility>
#include <vector>

#include "wigzero/phase_space.hpp"
#include "wigzero/quadrature.hpp"

namespace wigzero::wigner {

/// Normalized Hermite functions h_0(x) .. h_n(x) for the given hbar.
std::vector<double> hermite_functions(unsigned n, double x, double hbar);

/// Same recurrence without the factor e^{-x^2/(2 hbar)}. The argument may be
/// complex; the values are then the analytic continuation of the polynomial part.
std::vector<Complex> hermite_polys(unsigned n, Complex x, double hbar);

/// sum_n b_n h_n(x).
Complex expansion_value(std::span<const Complex> coeffs, double x, double hbar);

/// zeta = sqrt(2/hbar) (x + i p).
inline Complex zeta_of(const PhasePoint& z, double hbar) { return std::sqrt(2.0 / hbar) * Complex(z.x, z.p); }

/// W(h_{n+k}, h_n)(z).
Complex cross_wigner_hermite(unsigned n, unsigned k, const PhasePoint& z, double hbar);

struct WignerValue {
    double value = 0.0;
    PhasePoint location;
};

/// Wigner function of the plain expansion sum b_n h_n at the local point w.
double wigner_local(std::span<const Complex> coeffs, double hbar, const PhasePoint& w);

/// P(w) with Wg(w) = e^{-|zeta|^2/2} P / (pi hbar). Used where the Gaussian is
/// carried by a quadrature weight.
double stripped_local(std::span<const Complex> coeffs, double hbar, const PhasePoint& w);

/// Wf(z) = Wg_N(S (z - z1)).
WignerValue wigner_eval(const HermiteState& state, const PhasePoint& z);

/// Direct quadrature of the defining integral at S (z - z1). Slow; for cross-checks.
double quadrature_oracle(const HermiteState& state, const PhasePoint& z, const quadrature::Options& opts = {});

/// Gaussian-free bivariate polynomial in the local variable w = zeta - zeta1,
/// Wf(z) = e^{-|w|^2/2} P(w, conj w) / (pi hbar).
struct PolyanalyticForm {
    double hbar = 1.0;
    unsigned order = 1;
    PhasePoint center;
    /// (power of w, power of conj w) -> coefficient.
    std::map<std::pair<unsigned, unsigned>, Complex> coeffs;
    bool gaussian_prefactor = true;

    Complex eval_poly(Complex w) const;
    double wigner(const PhasePoint& z) const;
    /// t_m for m = -(order-1) .. order-1 with P(sqrt(s) e^{i theta}) = sum t_m e^{i m theta}.
    std::vector<Complex> circle_restriction(double s) const;
    unsigned max_conj_degree() const;
    bool is_hermitian(double tol = 0.0) const;
};

/// Requires an identity or rotation frame; rotations are absorbed first.
PolyanalyticForm polyanalytic_form(const HermiteState& state);

/// Integral of Wf(x, p) over p, which is |f(x)|^2.
double marginal_position(const HermiteState& state, double x);

/// Integral of Wf over the plane, sum |b_n|^2.
double normalization(const HermiteState& state);

struct GridSpec {
    unsigned size = 512;
    double radius = 1.0;
    PhasePoint center;

    double step() const { return 2.0 * radius / static_cast<double>(size - 1); }
    /// Column i runs along x, row j along p.
    PhasePoint point(unsigned i, unsigned j) const {
        return {center.x - radius + step() * i, center.p - radius + step() * j};
    }
    void validate() const;
};

/// 512 x 512 over radius 4 sqrt(hbar (2N+1)) about the state center.
GridSpec default_grid(const HermiteState& state);

struct GridValues {
    GridSpec spec;
    /// values[j * size + i] = Wf(point(i, j)).
    std::vector<double> values;

    double at(unsigned i, unsigned j) const { return values[static_cast<std::size_t>(j) * spec.size + i]; }
};

GridValues grid_sweep(const HermiteState& state, const GridSpec& spec);

}  // namespace wigzero::wigner

#endif  // WIGZERO_WIGNER_HPP
