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

#include "wigzero/bargmann.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wigzero/wigner.hpp"

namespace wigzero::bargmann {

namespace {

constexpr double kPi = std::numbers::pi;

HermiteState plain_frame(const HermiteState& state, const char* who) {
    HermiteState s = absorb_rotation(state);
    if (!s.frame().is_identity()) {
        throw std::invalid_argument(std::string(who) + ": frame must be a rotation");
    }
    return s;
}

}  // namespace

Complex BargmannPoly::eval(Complex w) const {
    const Complex x = w - shift;
    Complex s = 0.0;
    for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) s = s * x + *it;
    return s;
}

std::vector<Complex> BargmannPoly::roots() const {
    const unsigned n = degree();
    std::vector<Complex> out;
    if (n == 0) return out;
    Eigen::MatrixXcd companion = Eigen::MatrixXcd::Zero(n, n);
    const Complex lead = coeffs.back();
    for (unsigned i = 1; i < n; ++i) companion(i, i - 1) = 1.0;
    for (unsigned i = 0; i < n; ++i) companion(i, n - 1) = -coeffs[i] / lead;
    Eigen::ComplexEigenSolver<Eigen::MatrixXcd> solver(companion, false);
    for (unsigned i = 0; i < n; ++i) out.push_back(solver.eigenvalues()[i] + shift);
    std::sort(out.begin(), out.end(), [](Complex a, Complex b) {
        return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
    });
    return out;
}

BargmannPoly bargmann_poly(const HermiteState& input) {
    const HermiteState state = plain_frame(input, "bargmann_poly");
    BargmannPoly out;
    out.hbar = state.hbar();
    out.shift = bargmann_argument(state.center());
    const auto& b = state.coeffs();
    out.coeffs.resize(b.size());
    for (std::size_t n = 0; n < b.size(); ++n) {
        const double norm = std::exp(-0.5 * (std::lgamma(n + 1.0) + n * std::log(state.hbar())));
        out.coeffs[n] = b[n] * (n % 2 ? -norm : norm);
    }
    return out;
}

Complex bargmann_quadrature(const HermiteState& input, Complex w) {
    const HermiteState state = plain_frame(input, "bargmann_quadrature");
    if (state.center() != PhasePoint{}) {
        throw std::invalid_argument("bargmann_quadrature: state must be centered at the origin");
    }
    const double hbar = state.hbar();
    const double sh = std::sqrt(hbar);
    const unsigned N = state.rank();
    const auto& b = state.coeffs();
    // Completing the square in the kernel and shifting the contour by
    // -w/sqrt 2 leaves a Gaussian-weighted polynomial in t.
    auto integrand = [&](double t) {
        const auto psi = wigner::hermite_polys(N, sh * t - w / std::sqrt(2.0), hbar);
        Complex s = 0.0;
        for (unsigned n = 0; n <= N; ++n) s += b[n] * psi[n];
        return s;
    };
    quadrature::Options opts;
    opts.start_order = 16;
    const auto est = quadrature::integrate_1d(integrand, opts);
    return std::pow(kPi * hbar, -0.25) * sh * est.value;
}

double husimi_eval(const HermiteState& state, const PhasePoint& z) {
    const BargmannPoly poly = bargmann_poly(state);
    const double hbar = state.hbar();
    const PhasePoint d = z - state.center();
    return std::norm(poly.eval(bargmann_argument(z))) * std::exp(-d.norm_sq() / (2.0 * hbar)) / (2.0 * kPi * hbar);
}

double husimi_convolution(const HermiteState& state, const PhasePoint& z, const quadrature::Options& opts) {
    // Exponent of Wf(z') Wh0(z - z') is -Q(z')/hbar with
    // Q = |S(z' - z1)|^2 + |z' - z|^2 = (z' - m) A (z' - m) + Q(m), A = S^T S + I.
    const double hbar = state.hbar();
    const Mat2& S = state.frame().matrix();
    const Mat2 G = S.transpose() * S;
    const Mat2 A{G.a + 1.0, G.b, G.c, G.d + 1.0};
    const PhasePoint z1 = state.center();
    const PhasePoint rhs = G.apply(z1) + z;
    const double det = A.det();
    const Mat2 Ainv{A.d / det, -A.b / det, -A.c / det, A.a / det};
    const PhasePoint m = Ainv.apply(rhs);
    const PhasePoint dm1 = S.apply(m - z1);
    const PhasePoint dm2 = m - z;
    const double qm = dm1.norm_sq() + dm2.norm_sq();
    // Cholesky A = R^T R with R upper triangular.
    const double r11 = std::sqrt(A.a);
    const double r12 = A.b / r11;
    const double r22 = std::sqrt(A.d - r12 * r12);
    const double sh = std::sqrt(hbar);
    auto integrand = [&](double u, double v) {
        // z' - m = sqrt(hbar) R^{-1} (u, v).
        const double y2 = v / r22;
        const double y1 = (u - r12 * y2) / r11;
        const PhasePoint zp = m + PhasePoint{sh * y1, sh * y2};
        return Complex(wigner::stripped_local(state.coeffs(), hbar, state.to_local(zp)));
    };
    const double pref = std::exp(-qm / hbar) / (kPi * kPi * hbar * std::sqrt(det));
    quadrature::Options o = opts;
    o.start_order = std::min(opts.start_order, 32u);
    o.scale = opts.scale / std::max(pref, 1e-300);
    const auto est = quadrature::integrate_2d(integrand, o);
    return pref * est.value.real();
}

}  // namespace wigzero::bargmann
