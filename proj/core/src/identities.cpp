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

#include "wigzero/identities.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wigzero/wigner.hpp"

namespace wigzero::identities {

namespace {

constexpr double kPi = std::numbers::pi;

// Left side of the self-map relation with the state's Wigner square.
Complex wigner_square_transform(const HermiteState& state, const PhasePoint& z2, const quadrature::Options& opts) {
    // |S(z - z1)|^2 + |S(-z - z1)|^2 = 2|Sz|^2 + 2|S z1|^2. With y = S z and
    // y = sqrt(hbar/2) (u, v) the Gaussian becomes the quadrature weight.
    const double hbar = state.hbar();
    const SymplecticMat2 Sinv = state.frame().inverse();
    const PhasePoint sz1 = state.frame().apply(state.center());
    const double a = std::sqrt(hbar / 2.0);
    const auto& b = state.coeffs();
    auto integrand = [&](double u, double v) {
        const PhasePoint z = Sinv.apply({a * u, a * v});
        const double p1 = wigner::stripped_local(b, hbar, state.to_local(z));
        const double p2 = wigner::stripped_local(b, hbar, state.to_local(-z));
        return p1 * p2 * std::polar(1.0, 2.0 * symplectic_form(z, z2) / hbar);
    };
    const double pref = std::exp(-2.0 * sz1.norm_sq() / hbar) * (hbar / 2.0) / (kPi * kPi * hbar * hbar);
    quadrature::Options o = opts;
    o.start_order = std::min(opts.start_order, 32u);
    o.scale = opts.scale / std::max(pref, 1e-300);
    return pref * quadrature::integrate_2d(integrand, o).value;
}

double wigner_at(const HermiteState& s, const PhasePoint& z) { return wigner::wigner_eval(s, z).value; }

// xi grid spanning about 2 sqrt(hbar) in the z2 = pi hbar J xi variable.
PhasePoint grid_xi(unsigned i, unsigned j, unsigned grid, double hbar) {
    const double a = 4.0 / (kPi * std::sqrt(hbar));
    const double step = grid > 1 ? 2.0 * a / (grid - 1) : 0.0;
    return {-a + step * i, -a + step * j};
}

// -(pi hbar / 2) J xi with J = [[0, 1], [-1, 0]].
PhasePoint selfmap_point(const PhasePoint& xi, double hbar) {
    const double c = kPi * hbar / 2.0;
    return {-c * xi.p, c * xi.x};
}

}  // namespace

IdentityCheck hlawatsch_nuttall_check(const HermiteState& state, const PhasePoint& z2,
                                      const quadrature::Options& opts) {
    IdentityCheck out;
    out.lhs = wigner_square_transform(state, z2, opts);
    const double hbar = state.hbar();
    out.rhs = (kPi * hbar / 2.0) * wigner_at(state, z2 * 0.5) * wigner_at(state, z2 * -0.5);
    out.residual = std::abs(out.lhs - out.rhs);
    return out;
}

PhasePoint find_zero(const HermiteState& state) {
    const double hbar = state.hbar();
    const auto& b = state.coeffs();
    // Local zeros lie within the larger of the oscillatory radius and a
    // margin for off-center structure.
    const double bound = 2.0 * std::sqrt(hbar * (4.0 * state.rank() + 2.0) / 2.0) + 2.0 * std::sqrt(hbar);
    const int steps = 400;
    for (int ray = 0; ray < 16; ++ray) {
        const double theta = 2.0 * kPi * ray / 16.0;
        const double c = std::cos(theta);
        const double s = std::sin(theta);
        auto f = [&](double r) { return wigner::stripped_local(b, hbar, {r * c, r * s}); };
        double r0 = 0.0;
        double f0 = f(r0);
        for (int k = 1; k <= steps; ++k) {
            const double r1 = bound * k / steps;
            const double f1 = f(r1);
            if (f0 == 0.0) return state.from_local({r0 * c, r0 * s});
            if ((f0 < 0) != (f1 < 0)) {
                double lo = r0;
                double hi = r1;
                for (int it = 0; it < 200 && hi - lo > 1e-16 * hi; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if ((f(mid) < 0) == (f0 < 0)) lo = mid;
                    else hi = mid;
                }
                const double r = 0.5 * (lo + hi);
                return state.from_local({r * c, r * s});
            }
            r0 = r1;
            f0 = f1;
        }
    }
    throw DiagnosticError("find_zero: no sign change of the Wigner function found; its nodal set may be empty");
}

SelfMapReport fourier_selfmap_check(const HermiteState& state, const PhasePoint& zero, unsigned grid) {
    const double w0 = wigner_at(state, zero);
    if (std::fabs(w0) > 1e-9) {
        throw DiagnosticError("fourier_selfmap_check: Wf(zero) = " + std::to_string(w0) + " is not 0");
    }
    const HermiteState g = translate_state(state, -zero);
    const double hbar = state.hbar();
    auto F = [&](const PhasePoint& z) { return wigner_at(g, z) * wigner_at(g, -z); };
    SelfMapReport rep;
    rep.zero = zero;
    for (unsigned j = 0; j < grid; ++j) {
        for (unsigned i = 0; i < grid; ++i) {
            const PhasePoint xi = grid_xi(i, j, grid, hbar);
            // e^{-2 pi i z.xi} = e^{2 i sigma(z, z2)/hbar} with z2 = pi hbar (-xi_p, xi_x).
            const PhasePoint z2{-kPi * hbar * xi.p, kPi * hbar * xi.x};
            const Complex lhs = wigner_square_transform(g, z2, {});
            const double rhs = (kPi * hbar / 2.0) * F(selfmap_point(xi, hbar));
            rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
            rep.max_rhs = std::max(rep.max_rhs, std::fabs(rhs));
            ++rep.points;
        }
    }
    return rep;
}

SelfMapReport fourier_selfmap_check(const HermiteState& state, unsigned grid) {
    return fourier_selfmap_check(state, find_zero(state), grid);
}

SelfMapReport fourier_selfmap_check(const std::function<Complex(const PhasePoint&)>& G, double width, double hbar,
                                    unsigned grid) {
    if (!(width > 0.0) || !(hbar > 0.0)) {
        throw std::invalid_argument("fourier_selfmap_check: width and hbar must be positive");
    }
    auto F = [&](const PhasePoint& z) { return G(z) * std::exp(-z.norm_sq() / (width * width)); };
    SelfMapReport rep;
    for (unsigned j = 0; j < grid; ++j) {
        for (unsigned i = 0; i < grid; ++i) {
            const PhasePoint xi = grid_xi(i, j, grid, hbar);
            auto integrand = [&](double u, double v) {
                const PhasePoint z{width * u, width * v};
                return G(z) * std::polar(1.0, -2.0 * kPi * (z.x * xi.x + z.p * xi.p));
            };
            quadrature::Options o;
            o.start_order = 32;
            const Complex lhs = width * width * quadrature::integrate_2d(integrand, o).value;
            const Complex rhs = (kPi * hbar / 2.0) * F(selfmap_point(xi, hbar));
            rep.max_residual = std::max(rep.max_residual, std::abs(lhs - rhs));
            rep.max_rhs = std::max(rep.max_rhs, std::abs(rhs));
            ++rep.points;
        }
    }
    return rep;
}

}  // namespace wigzero::identities
