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

#include "wigzero/wigner.hpp"

#include <cmath>
#include <numbers>
#include <stdexcept>

#include "wigzero/laguerre.hpp"
#include "wigzero/parallel.hpp"

namespace wigzero::wigner {

namespace {

constexpr double kPi = std::numbers::pi;

// L_0^(k)(r) .. L_count-1^(k)(r).
void laguerre_row(unsigned count, unsigned k, double r, std::vector<double>& out) {
    out.assign(count, 0.0);
    if (count == 0) return;
    out[0] = 1.0;
    if (count == 1) return;
    out[1] = 1.0 + k - r;
    for (unsigned n = 1; n + 1 < count; ++n) {
        out[n + 1] = ((2.0 * n + 1.0 + k - r) * out[n] - (n + k) * out[n - 1]) / (n + 1.0);
    }
}

// Sum inside the brackets of the closed form; the Gaussian is included when
// `gaussian` is set. Returns pi hbar Wg(w) or P(w).
double closed_form(std::span<const Complex> b, double hbar, const PhasePoint& w, bool gaussian) {
    const unsigned N = static_cast<unsigned>(b.size()) - 1;
    const Complex zeta = zeta_of(w, hbar);
    const double r = std::norm(zeta);
    const double mod = std::sqrt(r);
    const Complex unit = mod > 0.0 ? zeta / mod : Complex(1.0, 0.0);
    const double damp = gaussian ? -0.5 * r : 0.0;
    std::vector<double> lag;

    double total_re = 0.0;
    double total_im = 0.0;
    double scale = 0.0;

    laguerre_row(N + 1, 0, r, lag);
    const double g0 = std::exp(damp);
    for (unsigned n = 0; n <= N; ++n) {
        const double t = std::norm(b[n]) * (n % 2 ? -1.0 : 1.0) * lag[n] * g0;
        total_re += t;
        scale += std::fabs(t);
    }
    if (mod == 0.0) {
        return total_re;
    }
    const double log_mod = std::log(mod);
    for (unsigned k = 1; k <= N; ++k) {
        laguerre_row(N - k + 1, k, r, lag);
        const Complex uk = std::pow(unit, static_cast<int>(k));
        const Complex ukbar = std::pow(std::conj(unit), static_cast<int>(k));
        for (unsigned n = 0; n + k <= N; ++n) {
            const double fac =
                std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + k + 1.0)) + k * log_mod + damp);
            const double amp = (n % 2 ? -1.0 : 1.0) * fac * lag[n];
            const Complex x1 = b[n] * std::conj(b[n + k]) * uk * amp;
            const Complex x2 = b[n + k] * std::conj(b[n]) * ukbar * amp;
            total_re += x1.real() + x2.real();
            total_im += x1.imag() + x2.imag();
            scale += std::abs(x1) + std::abs(x2);
        }
    }
    if (std::fabs(total_im) > 1e-12 * std::max(1.0, scale)) {
        throw DiagnosticError("wigner: imaginary residue " + std::to_string(total_im) + " exceeds 1e-12");
    }
    return total_re;
}

}  // namespace

std::vector<Complex> hermite_polys(unsigned n, Complex x, double hbar) {
    std::vector<Complex> out(n + 1);
    const Complex y = x / std::sqrt(hbar);
    out[0] = std::pow(kPi * hbar, -0.25);
    if (n >= 1) out[1] = std::sqrt(2.0) * y * out[0];
    for (unsigned k = 1; k < n; ++k) {
        out[k + 1] = std::sqrt(2.0 / (k + 1.0)) * y * out[k] - std::sqrt(k / (k + 1.0)) * out[k - 1];
    }
    return out;
}

std::vector<double> hermite_functions(unsigned n, double x, double hbar) {
    // Start from the damped h_0 so large |x| underflows instead of overflowing.
    std::vector<double> out(n + 1);
    const double y = x / std::sqrt(hbar);
    out[0] = std::pow(kPi * hbar, -0.25) * std::exp(-0.5 * y * y);
    if (n >= 1) out[1] = std::sqrt(2.0) * y * out[0];
    for (unsigned k = 1; k < n; ++k) {
        out[k + 1] = std::sqrt(2.0 / (k + 1.0)) * y * out[k] - std::sqrt(k / (k + 1.0)) * out[k - 1];
    }
    return out;
}

Complex expansion_value(std::span<const Complex> coeffs, double x, double hbar) {
    if (coeffs.empty()) return 0.0;
    const auto h = hermite_functions(static_cast<unsigned>(coeffs.size() - 1), x, hbar);
    Complex s = 0.0;
    for (std::size_t n = 0; n < coeffs.size(); ++n) s += coeffs[n] * h[n];
    return s;
}

Complex cross_wigner_hermite(unsigned n, unsigned k, const PhasePoint& z, double hbar) {
    const Complex zeta = zeta_of(z, hbar);
    const double r = std::norm(zeta);
    std::vector<double> lag;
    laguerre_row(n + 1, k, r, lag);
    const double sign = n % 2 ? -1.0 : 1.0;
    const double ratio = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + k + 1.0)));
    return sign / (kPi * hbar) * ratio * std::pow(std::conj(zeta), static_cast<int>(k)) * lag[n] *
           std::exp(-0.5 * r);
}

double wigner_local(std::span<const Complex> coeffs, double hbar, const PhasePoint& w) {
    return closed_form(coeffs, hbar, w, true) / (kPi * hbar);
}

double stripped_local(std::span<const Complex> coeffs, double hbar, const PhasePoint& w) {
    return closed_form(coeffs, hbar, w, false);
}

WignerValue wigner_eval(const HermiteState& state, const PhasePoint& z) {
    return {wigner_local(state.coeffs(), state.hbar(), state.to_local(z)), z};
}

double quadrature_oracle(const HermiteState& state, const PhasePoint& z, const quadrature::Options& opts) {
    const double hbar = state.hbar();
    const PhasePoint w = state.to_local(z);
    const double sh = std::sqrt(hbar);
    const unsigned N = state.rank();
    const auto& b = state.coeffs();
    auto g_at = [&](double x) {
        const auto psi = hermite_polys(N, Complex(x), hbar);
        Complex s = 0.0;
        for (unsigned n = 0; n <= N; ++n) s += b[n] * psi[n];
        return s;
    };
    // tau = 2 sqrt(hbar) t turns the Gaussian part into e^{-x^2/hbar} e^{-t^2}.
    auto integrand = [&](double t) {
        const Complex phase = std::polar(1.0, -2.0 * w.p * t / sh);
        return g_at(w.x + sh * t) * std::conj(g_at(w.x - sh * t)) * phase;
    };
    const double pref = std::exp(-w.x * w.x / hbar) / (kPi * sh);
    quadrature::Options o = opts;
    // Accuracy is requested on Wf itself, so scale the tolerance by 1/pref.
    o.scale = opts.scale / pref;
    if (!std::isfinite(o.scale)) o.scale = 1e300;
    const auto est = quadrature::integrate_1d(integrand, o);
    return pref * est.value.real();
}

Complex PolyanalyticForm::eval_poly(Complex w) const {
    Complex s = 0.0;
    const Complex wb = std::conj(w);
    for (const auto& [pw, c] : coeffs) {
        s += c * std::pow(w, static_cast<int>(pw.first)) * std::pow(wb, static_cast<int>(pw.second));
    }
    return s;
}

double PolyanalyticForm::wigner(const PhasePoint& z) const {
    const Complex w = zeta_of(z - center, hbar);
    const Complex v = eval_poly(w);
    return gaussian_prefactor ? std::exp(-0.5 * std::norm(w)) * v.real() / (kPi * hbar) : v.real() / (kPi * hbar);
}

std::vector<Complex> PolyanalyticForm::circle_restriction(double s) const {
    const int top = static_cast<int>(order) - 1;
    std::vector<Complex> t(2 * top + 1, Complex(0.0));
    for (const auto& [pw, c] : coeffs) {
        const int m = static_cast<int>(pw.first) - static_cast<int>(pw.second);
        t[m + top] += c * std::pow(s, 0.5 * (pw.first + pw.second));
    }
    return t;
}

unsigned PolyanalyticForm::max_conj_degree() const {
    unsigned d = 0;
    for (const auto& [pw, c] : coeffs) {
        if (c != Complex(0.0)) d = std::max(d, pw.second);
    }
    return d;
}

bool PolyanalyticForm::is_hermitian(double tol) const {
    for (const auto& [pw, c] : coeffs) {
        auto it = coeffs.find({pw.second, pw.first});
        const Complex other = it == coeffs.end() ? Complex(0.0) : it->second;
        if (std::abs(c - std::conj(other)) > tol) return false;
    }
    return true;
}

PolyanalyticForm polyanalytic_form(const HermiteState& input) {
    const HermiteState state = absorb_rotation(input);
    if (!state.frame().is_identity()) {
        throw std::invalid_argument("polyanalytic_form: frame must be a rotation");
    }
    const auto& b = state.coeffs();
    const unsigned N = state.rank();
    PolyanalyticForm form;
    form.hbar = state.hbar();
    form.order = N + 1;
    form.center = state.center();
    for (unsigned k = 0; k <= N; ++k) {
        for (unsigned n = 0; n + k <= N; ++n) {
            const auto lag = laguerre::laguerre_coeffs(n, k).coeffs();
            const double ratio = std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + k + 1.0)));
            const double sign = n % 2 ? -1.0 : 1.0;
            const Complex pair = b[n] * std::conj(b[n + k]) * sign * ratio;
            for (unsigned j = 0; j <= n; ++j) {
                const Complex c = pair * lag[j].get_d();
                if (k == 0) {
                    form.coeffs[{j, j}] += Complex(c.real(), 0.0);
                } else {
                    form.coeffs[{j + k, j}] += c;
                    form.coeffs[{j, j + k}] += std::conj(c);
                }
            }
        }
    }
    return form;
}

double marginal_position(const HermiteState& state, double x) {
    const HermiteState s = absorb_rotation(state);
    if (s.frame().is_identity()) {
        return std::norm(expansion_value(s.coeffs(), x - s.center().x, s.hbar()));
    }
    // General frame: along fixed x the local point is affine in p, so the
    // integrand is a Gaussian times a polynomial of degree 2N and a
    // Gauss-Hermite rule with N+1 nodes is exact.
    const Mat2& S = s.frame().matrix();
    const double hbar = s.hbar();
    const double X = x - s.center().x;
    const double alpha = S.b * S.b + S.d * S.d;
    const double beta = S.a * S.b + S.c * S.d;
    const double gamma = S.a * S.a + S.c * S.c;
    const unsigned order = s.rank() + 2;
    const auto& rule = quadrature::gauss_hermite(order);
    double acc = 0.0;
    for (unsigned i = 0; i < order; ++i) {
        const double q = -beta * X / alpha + std::sqrt(hbar / alpha) * rule.nodes[i];
        const PhasePoint w = S.apply({X, q});
        acc += rule.weights[i] * stripped_local(s.coeffs(), hbar, w);
    }
    return acc * std::sqrt(hbar / alpha) * std::exp(-(gamma - beta * beta / alpha) * X * X / hbar) / (kPi * hbar);
}

double normalization(const HermiteState& state) {
    double s = 0.0;
    for (const auto& c : state.coeffs()) s += std::norm(c);
    return s;
}

void GridSpec::validate() const {
    if (size < 2) throw std::invalid_argument("grid: size must be at least 2");
    if (!(radius > 0.0) || !std::isfinite(radius)) throw std::invalid_argument("grid: radius must be positive");
}

GridSpec default_grid(const HermiteState& state) {
    GridSpec g;
    g.size = 512;
    g.radius = 4.0 * std::sqrt(state.hbar() * (2.0 * state.rank() + 1.0));
    g.center = state.center();
    return g;
}

GridValues grid_sweep(const HermiteState& state, const GridSpec& spec) {
    spec.validate();
    GridValues out{spec, std::vector<double>(static_cast<std::size_t>(spec.size) * spec.size)};
    parallel_for(spec.size, [&](std::size_t j) {
        for (unsigned i = 0; i < spec.size; ++i) {
            out.values[j * spec.size + i] =
                wigner_local(state.coeffs(), state.hbar(), state.to_local(spec.point(i, static_cast<unsigned>(j))));
        }
    });
    return out;
}

}  // namespace wigzero::wigner
