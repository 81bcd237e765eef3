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

#include "wigzero/phase_space.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <string>

#include "wigzero/quadrature.hpp"
#include "wigzero/wigner.hpp"

namespace wigzero {

double PhasePoint::norm() const { return std::hypot(x, p); }

double symplectic_form(const PhasePoint& z, const PhasePoint& zp) { return z.p * zp.x - z.x * zp.p; }

Mat2 Mat2::operator*(const Mat2& o) const {
    return {a * o.a + b * o.c, a * o.b + b * o.d, c * o.a + d * o.c, c * o.b + d * o.d};
}

double Mat2::max_abs_diff(const Mat2& o) const {
    return std::max({std::fabs(a - o.a), std::fabs(b - o.b), std::fabs(c - o.c), std::fabs(d - o.d)});
}

SymplecticMat2::SymplecticMat2(double a, double b, double c, double d) : m_{a, b, c, d} {
    if (!std::isfinite(a) || !std::isfinite(b) || !std::isfinite(c) || !std::isfinite(d)) {
        throw std::domain_error("SymplecticMat2: non-finite entry");
    }
    if (std::fabs(m_.det() - 1.0) > kDetTolerance) {
        throw std::domain_error("SymplecticMat2: determinant " + std::to_string(m_.det()) + " is not 1");
    }
}

SymplecticMat2 SymplecticMat2::rotation(double theta) {
    const double c = std::cos(theta);
    const double s = std::sin(theta);
    // cos^2 + sin^2 can miss 1 by an ulp or two; that is inside the tolerance.
    return SymplecticMat2(c, -s, s, c);
}

bool SymplecticMat2::is_identity(double tol) const { return m_.max_abs_diff(Mat2{}) <= tol; }

bool SymplecticMat2::is_rotation(double tol) const {
    return std::fabs(m_.a - m_.d) <= tol && std::fabs(m_.b + m_.c) <= tol;
}

double SymplecticMat2::rotation_angle() const { return std::atan2(m_.c, m_.a); }

namespace {

Coeffs canonicalize(Coeffs coeffs) {
    while (!coeffs.empty() && std::abs(coeffs.back()) <= 1e-14) {
        coeffs.pop_back();
    }
    if (coeffs.empty()) {
        throw std::invalid_argument("HermiteState: coefficient list is empty or identically zero");
    }
    for (const auto& c : coeffs) {
        if (!std::isfinite(c.real()) || !std::isfinite(c.imag())) {
            throw std::invalid_argument("HermiteState: non-finite coefficient");
        }
    }
    return coeffs;
}

double norm_sq(const Coeffs& coeffs) {
    double s = 0.0;
    for (const auto& c : coeffs) {
        s += std::norm(c);
    }
    return s;
}

}  // namespace

HermiteState::HermiteState(Coeffs coeffs, double hbar, PhasePoint center, SymplecticMat2 frame)
    : hbar_(hbar), coeffs_(canonicalize(std::move(coeffs))), center_(center), frame_(frame) {
    if (!(hbar > 0.0) || !std::isfinite(hbar)) {
        throw std::invalid_argument("HermiteState: hbar must be positive");
    }
    if (!std::isfinite(center.x) || !std::isfinite(center.p)) {
        throw std::invalid_argument("HermiteState: non-finite center");
    }
    const double n = norm_sq(coeffs_);
    if (std::fabs(n - 1.0) > kNormTolerance) {
        throw std::invalid_argument("HermiteState: coefficients are not normalized (sum |b_n|^2 = " +
                                    std::to_string(n) + ")");
    }
}

HermiteState HermiteState::normalized(Coeffs coeffs, double hbar, PhasePoint center, SymplecticMat2 frame) {
    coeffs = canonicalize(std::move(coeffs));
    const double scale = 1.0 / std::sqrt(norm_sq(coeffs));
    for (auto& c : coeffs) {
        c *= scale;
    }
    return HermiteState(std::move(coeffs), hbar, center, frame);
}

HermiteState HermiteState::hermite(unsigned n, double hbar) {
    Coeffs c(n + 1, Complex(0.0));
    c[n] = 1.0;
    return HermiteState(std::move(c), hbar);
}

HermiteState HermiteState::with_center(PhasePoint center) const {
    HermiteState s = *this;
    s.center_ = center;
    return s;
}

HermiteState HermiteState::with_frame(SymplecticMat2 frame) const {
    HermiteState s = *this;
    s.frame_ = frame;
    return s;
}

HermiteState HermiteState::with_coeffs(Coeffs coeffs) const {
    return HermiteState(std::move(coeffs), hbar_, center_, frame_);
}

void EllipseSpec::validate() const {
    const double scale = std::max({std::fabs(M.a), std::fabs(M.b), std::fabs(M.c), std::fabs(M.d), 1.0});
    if (std::fabs(M.b - M.c) > 1e-12 * scale) {
        throw std::domain_error("EllipseSpec: matrix is not symmetric");
    }
    if (!(M.a > 0.0) || !(M.det() > 0.0)) {
        throw std::domain_error("EllipseSpec: matrix is not positive definite");
    }
}

SymplecticMat2 williamson_factor(const Mat2& M) {
    EllipseSpec{M, {}}.validate();
    const double sym = 0.5 * (M.b + M.c);
    const Mat2 sm{M.a, sym, sym, M.d};
    const Mat2 unit = sm * (1.0 / std::sqrt(sm.det()));
    // For a 2x2 SPD matrix with det 1: sqrt(U) = (U + I) / sqrt(tr U + 2).
    const double k = 1.0 / std::sqrt(unit.a + unit.d + 2.0);
    Mat2 s{(unit.a + 1.0) * k, unit.b * k, unit.c * k, (unit.d + 1.0) * k};
    // Renormalize away rounding in the determinant.
    const double fix = 1.0 / std::sqrt(s.det());
    s = s * fix;
    return SymplecticMat2(s);
}

Coeffs rotate_coeffs(std::span<const Complex> coeffs, double alpha) {
    Coeffs out(coeffs.begin(), coeffs.end());
    for (std::size_t n = 0; n < out.size(); ++n) {
        out[n] *= std::polar(1.0, alpha * static_cast<double>(n));
    }
    return out;
}

HermiteState translate_state(const HermiteState& state, const PhasePoint& dz) {
    return state.with_center(state.center() + dz);
}

HermiteState absorb_rotation(const HermiteState& state) {
    if (state.frame().is_identity() || !state.frame().is_rotation()) {
        return state;
    }
    // Wg(R(theta) w) is the Wigner function of b rotated by -theta.
    const double theta = state.frame().rotation_angle();
    return HermiteState(rotate_coeffs(state.coeffs(), -theta), state.hbar(), state.center(),
                        SymplecticMat2::identity());
}

CenterTest is_centered_at(const HermiteState& state, const PhasePoint& z) {
    const double w = wigner::wigner_eval(state, z).value;
    const double scaled = w * std::numbers::pi * state.hbar();
    CenterTest t;
    t.value = w;
    t.sigma = scaled > 0 ? 1 : (scaled < 0 ? -1 : 0);
    t.centered = std::fabs(std::fabs(scaled) - 1.0) <= 1e-9;
    return t;
}

CenterTest is_centered_at_origin(const HermiteState& state) { return is_centered_at(state, {}); }

}  // namespace wigzero
