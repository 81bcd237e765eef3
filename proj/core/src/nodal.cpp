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

#include "wigzero/nodal.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "wigzero/laguerre.hpp"
#include "wigzero/parallel.hpp"

namespace wigzero::nodal {

namespace {

constexpr double kPi = std::numbers::pi;

double ratio_sqrt(unsigned n, unsigned m) {
    return std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + m + 1.0)));
}

double spectral_norm(const Mat2& M) {
    const Mat2 G = M.transpose() * M;
    const double tr = G.a + G.d;
    const double det = G.det();
    const double disc = std::sqrt(std::max(0.0, 0.25 * tr * tr - det));
    return std::sqrt(0.5 * tr + disc);
}

Disc disc_from(const PhasePoint& a, const PhasePoint& b) {
    const PhasePoint c = (a + b) * 0.5;
    return {c, (a - c).norm()};
}

Disc disc_from(const PhasePoint& a, const PhasePoint& b, const PhasePoint& c) {
    const double bx = b.x - a.x, by = b.p - a.p;
    const double cx = c.x - a.x, cy = c.p - a.p;
    const double d = 2.0 * (bx * cy - by * cx);
    if (std::fabs(d) < 1e-300) {
        Disc best = disc_from(a, b);
        for (const Disc& o : {disc_from(a, c), disc_from(b, c)}) {
            if (o.radius > best.radius) best = o;
        }
        return best;
    }
    const double b2 = bx * bx + by * by;
    const double c2 = cx * cx + cy * cy;
    const PhasePoint u{(cy * b2 - by * c2) / d, (bx * c2 - cx * b2) / d};
    return {a + u, u.norm()};
}

bool inside(const Disc& d, const PhasePoint& p) { return (p - d.center).norm() <= d.radius * (1.0 + 1e-12) + 1e-15; }

}  // namespace

std::vector<Complex> circle_residuals(std::span<const Complex> c, double s) {
    if (!(s > 0.0)) throw std::invalid_argument("circle_residuals: s must be positive");
    if (c.empty()) return {};
    const unsigned N = static_cast<unsigned>(c.size()) - 1;
    std::vector<Complex> rows(N + 1, Complex(0.0));
    for (unsigned m = 0; m <= N; ++m) {
        // Recurrence for L_n^(m)(s), n = 0..N-m.
        double lm1 = 0.0;
        double l = 1.0;
        for (unsigned n = 0; n + m <= N; ++n) {
            const double w = (n % 2 ? -1.0 : 1.0) * ratio_sqrt(n, m) * l;
            rows[m] += c[n] * std::conj(c[n + m]) * w;
            const double next = ((2.0 * n + 1.0 + m - s) * l - (n + m) * lm1) / (n + 1.0);
            lm1 = l;
            l = next;
        }
    }
    return rows;
}

std::vector<AdmissibleValue> admissible_values(unsigned N_max, double hbar) {
    if (N_max < 1) throw std::invalid_argument("admissible_values: N_max must be at least 1");
    std::vector<AdmissibleValue> all;
    for (unsigned n = 1; n <= N_max; ++n) {
        for (unsigned k = 0; n + k <= N_max; ++k) {
            for (double p : laguerre::laguerre_zeros(n, k).values) {
                all.push_back({p, std::sqrt(hbar * p / 2.0), n, k});
            }
        }
    }
    std::sort(all.begin(), all.end(), [](const auto& a, const auto& b) { return a.p < b.p; });
    std::vector<AdmissibleValue> out;
    for (const auto& v : all) {
        if (!out.empty() && std::fabs(v.p - out.back().p) <= 1e-10 * std::max(1.0, v.p)) continue;
        out.push_back(v);
    }
    return out;
}

std::vector<double> admissible_radii(unsigned N_max, double hbar) {
    std::vector<double> r;
    for (const auto& v : admissible_values(N_max, hbar)) r.push_back(v.radius);
    return r;
}

unsigned rank_lower_bound(double R, double hbar) {
    if (!(R > 0.0) || !(hbar > 0.0)) throw std::invalid_argument("rank_lower_bound: R and hbar must be positive");
    const double x = (R * R / hbar - 1.0) / 2.0;
    if (x <= 0.0) return 0;
    // R is usually a square root, so allow for rounding just above an integer.
    return static_cast<unsigned>(std::ceil(x - 1e-9));
}

const char* to_string(Parity p) {
    switch (p) {
        case Parity::plus: return "+1";
        case Parity::minus: return "-1";
        case Parity::unconstrained: return "unconstrained";
        case Parity::impossible: return "impossible";
    }
    return "?";
}

Parity parity_constraint(const Rational& p) {
    if (sgn(p) <= 0) throw std::invalid_argument("parity_constraint: p must be positive");
    if (p.get_den() != 1) return Parity::impossible;
    const Integer n = p.get_num();
    if (mpz_odd_p(n.get_mpz_t())) return Parity::minus;
    // Even here, so 2^k means k >= 1.
    if (mpz_popcount(n.get_mpz_t()) == 1) return Parity::plus;
    return Parity::unconstrained;
}

LineRestriction line_restriction(const HermiteState& state, double angle, double offset) {
    const wigner::PolyanalyticForm form = wigner::polyanalytic_form(state);
    const unsigned deg = 2 * (form.order - 1);
    std::vector<Complex> acc(deg + 1, Complex(0.0));
    // (xi + i offset)^a and (xi - i offset)^b as coefficient lists in xi.
    auto binom_poly = [&](unsigned a, Complex shift) {
        std::vector<Complex> out(a + 1);
        double binom = 1.0;
        for (unsigned i = 0; i <= a; ++i) {
            out[i] = binom * std::pow(shift, static_cast<int>(a - i));
            binom = binom * (a - i) / (i + 1.0);
        }
        return out;
    };
    for (const auto& [pw, c] : form.coeffs) {
        const auto pa = binom_poly(pw.first, Complex(0.0, offset));
        const auto pb = binom_poly(pw.second, Complex(0.0, -offset));
        const Complex phase = std::polar(1.0, (static_cast<double>(pw.first) - pw.second) * angle);
        for (unsigned i = 0; i < pa.size(); ++i) {
            for (unsigned j = 0; j < pb.size(); ++j) acc[i + j] += c * phase * pa[i] * pb[j];
        }
    }
    LineRestriction out;
    out.coeffs.resize(deg + 1);
    for (unsigned i = 0; i <= deg; ++i) out.coeffs[i] = acc[i].real();
    out.leading = out.coeffs[deg];
    if (out.leading == 0.0) throw std::logic_error("line_restriction: vanishing leading coefficient");
    return out;
}

double sign_up_bound(unsigned n, double hbar) {
    if (n < 1) throw std::invalid_argument("sign_up_bound: dimension must be at least 1");
    if (!(hbar > 0.0)) throw std::invalid_argument("sign_up_bound: hbar must be positive");
    const double root = std::exp((std::lgamma(n + 1.0) - std::log(2.0)) / n);
    return 0.5 * std::sqrt(hbar / 2.0 * root);
}

Disc min_enclosing_disc(std::vector<PhasePoint> pts) {
    if (pts.empty()) return {};
    std::mt19937_64 rng(0x5eed);
    for (std::size_t i = pts.size(); i > 1; --i) {
        std::uniform_int_distribution<std::size_t> pick(0, i - 1);
        std::swap(pts[i - 1], pts[pick(rng)]);
    }
    Disc d{pts[0], 0.0};
    for (std::size_t i = 1; i < pts.size(); ++i) {
        if (inside(d, pts[i])) continue;
        d = {pts[i], 0.0};
        for (std::size_t j = 0; j < i; ++j) {
            if (inside(d, pts[j])) continue;
            d = disc_from(pts[i], pts[j]);
            for (std::size_t k = 0; k < j; ++k) {
                if (!inside(d, pts[k])) d = disc_from(pts[i], pts[j], pts[k]);
            }
        }
    }
    return d;
}

SignUPResult negative_region_radius(const HermiteState& state, const wigner::GridSpec& grid) {
    grid.validate();
    SignUPResult res;
    res.bound = sign_up_bound(1, state.hbar());
    res.cell = grid.step();
    if (state.rank() >= 1 && res.cell > res.bound) {
        throw DiagnosticError("negative_region_radius: grid cell " + std::to_string(res.cell) +
                              " exceeds the bound it should certify");
    }
    const auto values = wigner::grid_sweep(state, grid);
    std::vector<PhasePoint> neg;
    for (unsigned j = 0; j < grid.size; ++j) {
        for (unsigned i = 0; i < grid.size; ++i) {
            if (values.at(i, j) < 0.0) neg.push_back(grid.point(i, j));
        }
    }
    res.negative_points = neg.size();
    if (neg.empty()) {
        if (state.rank() >= 1) {
            throw DiagnosticError("negative_region_radius: no negative grid point although N >= 1; refine the grid");
        }
        res.empty = true;
        res.verdict = true;
        return res;
    }
    const Disc d = min_enclosing_disc(std::move(neg));
    res.empty = false;
    res.radius = d.radius;
    res.center = d.center;
    res.verdict = res.radius >= res.bound - 1e-9;
    res.reaches_conjectured_optimum = res.radius >= std::sqrt(state.hbar() / 2.0) - res.cell;
    return res;
}

ProbeResult symmetric_zero_probe(const std::function<double(const PhasePoint&)>& W, const PhasePoint& z1,
                                 unsigned samples, double radius, std::uint64_t seed) {
    ProbeResult out;
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (unsigned i = 0; i < samples; ++i) {
        const double r = radius * std::sqrt(unit(rng));
        const double t = 2.0 * kPi * unit(rng);
        const PhasePoint z{r * std::cos(t), r * std::sin(t)};
        const double v = W(z1 + z) * W(z1 - z);
        if (v > 0.0) ++out.positive;
        else if (v < 0.0) ++out.negative;
        else ++out.zero;
    }
    out.both_signs = out.positive > 0 && out.negative > 0;
    out.flagged = !out.both_signs;
    return out;
}

ProbeResult symmetric_zero_probe(const HermiteState& state, const PhasePoint& z1, unsigned samples,
                                 std::uint64_t seed) {
    const double w = wigner::wigner_eval(state, z1).value;
    if (std::fabs(w) > 1e-9) {
        throw PreconditionError("symmetric_zero_probe: Wf(z1) = " + std::to_string(w) + " is not a zero");
    }
    const double radius = zero_bound_radius(state) + (z1 - state.center()).norm();
    // Signs are read from the Gaussian-free part so distant samples do not underflow.
    auto W = [&](const PhasePoint& z) {
        return wigner::stripped_local(state.coeffs(), state.hbar(), state.to_local(z));
    };
    return symmetric_zero_probe(W, z1, samples, radius, seed);
}

PatchFit fit_from_patch(const std::vector<Sample>& samples, unsigned N_max, double hbar, PhasePoint center) {
    if (!(hbar > 0.0)) throw std::invalid_argument("fit_from_patch: hbar must be positive");
    const unsigned K = N_max + 1;
    const std::size_t unknowns = static_cast<std::size_t>(K) * K;
    if (samples.size() < unknowns) {
        throw DiagnosticError("fit_from_patch: need at least " + std::to_string(unknowns) + " samples");
    }
    double rho = 0.0;
    for (const auto& s : samples) rho = std::max(rho, std::abs(wigner::zeta_of(s.z - center, hbar)));
    if (!(rho > 0.0)) throw DiagnosticError("fit_from_patch: samples collapse onto the center");

    // Columns: (a, a) real; (a, b) with a > b as real and imaginary parts.
    struct Col {
        unsigned a, b;
        bool imag;
    };
    std::vector<Col> cols;
    for (unsigned a = 0; a < K; ++a) {
        for (unsigned b = 0; b <= a; ++b) {
            cols.push_back({a, b, false});
            if (a != b) cols.push_back({a, b, true});
        }
    }
    const std::size_t M = samples.size();
    Eigen::MatrixXd A(M, cols.size());
    Eigen::VectorXd y(M);
    Eigen::VectorXd damp(M);
    for (std::size_t i = 0; i < M; ++i) {
        const Complex zeta = wigner::zeta_of(samples[i].z - center, hbar);
        const Complex w = zeta / rho;
        const double r = std::norm(zeta);
        damp[i] = std::exp(-0.5 * r);
        y[i] = kPi * hbar * samples[i].value / damp[i];
        for (std::size_t c = 0; c < cols.size(); ++c) {
            const Complex mono =
                std::pow(w, static_cast<int>(cols[c].a)) * std::pow(std::conj(w), static_cast<int>(cols[c].b));
            if (cols[c].a == cols[c].b) A(i, c) = mono.real();
            else A(i, c) = cols[c].imag ? -2.0 * mono.imag() : 2.0 * mono.real();
        }
    }
    Eigen::VectorXd colnorm = A.colwise().norm();
    for (Eigen::Index c = 0; c < A.cols(); ++c) {
        if (colnorm[c] == 0.0) throw DiagnosticError("fit_from_patch: rank-deficient sample geometry");
        A.col(c) /= colnorm[c];
    }
    Eigen::JacobiSVD<Eigen::MatrixXd> svd(A, Eigen::ComputeThinU | Eigen::ComputeThinV);
    const auto& sv = svd.singularValues();
    if (sv[sv.size() - 1] <= 1e-12 * sv[0]) {
        throw DiagnosticError("fit_from_patch: rank-deficient sample geometry (condition " +
                              std::to_string(sv[0] / sv[sv.size() - 1]) + ")");
    }
    Eigen::VectorXd x = svd.solve(y);
    const Eigen::VectorXd fit_err = (A * x - y).cwiseProduct(damp);
    for (Eigen::Index c = 0; c < A.cols(); ++c) x[c] /= colnorm[c];

    PatchFit out;
    out.residual = std::sqrt(fit_err.squaredNorm() / static_cast<double>(M));
    out.form.hbar = hbar;
    out.form.order = K;
    out.form.center = center;
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const double scale = std::pow(rho, -static_cast<double>(cols[c].a + cols[c].b));
        const unsigned a = cols[c].a, b = cols[c].b;
        if (a == b) {
            out.form.coeffs[{a, a}] += x[c] * scale;
        } else if (!cols[c].imag) {
            out.form.coeffs[{a, b}] += x[c] * scale;
            out.form.coeffs[{b, a}] += x[c] * scale;
        } else {
            out.form.coeffs[{a, b}] += Complex(0.0, x[c] * scale);
            out.form.coeffs[{b, a}] += Complex(0.0, -x[c] * scale);
        }
    }

    // Back out the density matrix rho_{n, n+m} = b_n conj(b_{n+m}): the
    // Laguerre structure is triangular in (j, n) with diagonal (-1)^n / n!.
    Eigen::MatrixXcd R = Eigen::MatrixXcd::Zero(K, K);
    for (unsigned m = 0; m < K; ++m) {
        const unsigned len = K - m;
        std::vector<std::vector<double>> lag(len);
        for (unsigned n = 0; n < len; ++n) {
            for (const auto& q : laguerre::laguerre_coeffs(n, m).coeffs()) lag[n].push_back(q.get_d());
        }
        std::vector<Complex> d(len);
        for (int j = static_cast<int>(len) - 1; j >= 0; --j) {
            auto it = out.form.coeffs.find({static_cast<unsigned>(j) + m, static_cast<unsigned>(j)});
            Complex rhs = it == out.form.coeffs.end() ? Complex(0.0) : it->second;
            for (unsigned n = j + 1; n < len; ++n) {
                rhs -= d[n] * (n % 2 ? -1.0 : 1.0) * ratio_sqrt(n, m) * lag[n][j];
            }
            d[j] = rhs / ((j % 2 ? -1.0 : 1.0) * ratio_sqrt(j, m) * lag[j][j]);
        }
        for (unsigned n = 0; n < len; ++n) {
            R(n, n + m) = d[n];
            R(n + m, n) = std::conj(d[n]);
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> eig(R);
    const auto& ev = eig.eigenvalues();
    const double top = ev[K - 1];
    double total = 0.0;
    for (unsigned i = 0; i < K; ++i) total += std::fabs(ev[i]);
    out.impurity = total > 0.0 ? 1.0 - top / total : 1.0;
    if (top > 0.0) {
        Coeffs c(K);
        for (unsigned i = 0; i < K; ++i) c[i] = std::sqrt(top) * eig.eigenvectors()(i, K - 1);
        double big = 0.0;
        for (const auto& v : c) big = std::max(big, std::abs(v));
        for (auto& v : c) {
            if (std::abs(v) <= 1e-8 * big) v = 0.0;
        }
        while (c.size() > 1 && c.back() == Complex(0.0)) c.pop_back();
        const Complex phase = std::conj(c.back()) / std::abs(c.back());
        for (auto& v : c) v *= phase;
        out.rank = static_cast<unsigned>(c.size() - 1);
        out.coeffs = std::move(c);
    }
    return out;
}

double zero_bound_radius(const HermiteState& state) {
    const double hbar = state.hbar();
    const unsigned N = state.rank();
    const double osc = std::sqrt(hbar * (4.0 * N + 2.0) / 2.0);
    if (N == 0) return osc;
    const wigner::PolyanalyticForm form = wigner::polyanalytic_form(HermiteState(state.coeffs(), hbar));
    // Along any ray w = rho e^{i theta}, P is a polynomial in rho of degree 2N
    // with leading coefficient |b_N|^2 / N!; Cauchy's bound applies.
    std::vector<double> mag(2 * N + 1, 0.0);
    for (const auto& [pw, c] : form.coeffs) mag[pw.first + pw.second] += std::abs(c);
    const double lead = std::norm(state.coeffs().back()) * std::exp(-std::lgamma(N + 1.0));
    double worst = 0.0;
    for (unsigned k = 0; k < 2 * N; ++k) worst = std::max(worst, mag[k] / lead);
    const double local = (1.0 + worst) * std::sqrt(hbar / 2.0);
    return std::max(osc, spectral_norm(state.frame().inverse().matrix()) * local);
}

NodalReport nodal_scan(const HermiteState& state, const wigner::GridSpec& grid, const ScanOptions& opts) {
    grid.validate();
    if (opts.rays < 8) throw std::invalid_argument("nodal_scan: need at least 8 rays");
    const double hbar = state.hbar();
    const auto& b = state.coeffs();
    auto P = [&](const PhasePoint& z) { return wigner::stripped_local(b, hbar, state.to_local(z)); };

    NodalReport rep;
    rep.grid = grid;
    rep.oscillatory_radius = std::sqrt(hbar * (4.0 * state.rank() + 2.0) / 2.0);
    rep.bound_radius = zero_bound_radius(state);
    const double cell = grid.step();

    // Signs of the Gaussian-free part, which cannot underflow.
    const unsigned n = grid.size;
    std::vector<signed char> sign(static_cast<std::size_t>(n) * n);
    parallel_for(n, [&](std::size_t j) {
        for (unsigned i = 0; i < n; ++i) {
            const double v = P(grid.point(i, static_cast<unsigned>(j)));
            sign[j * n + i] = v > 0 ? 1 : (v < 0 ? -1 : 0);
        }
    });
    for (unsigned j = 0; j + 1 < n; ++j) {
        for (unsigned i = 0; i + 1 < n; ++i) {
            const signed char s[4] = {sign[j * n + i], sign[j * n + i + 1], sign[(j + 1) * n + i],
                                      sign[(j + 1) * n + i + 1]};
            bool pos = false, neg = false, zero = false;
            for (signed char v : s) {
                pos |= v > 0;
                neg |= v < 0;
                zero |= v == 0;
            }
            if ((pos && neg) || zero) {
                rep.sign_change_cells.emplace_back(i, j);
                const PhasePoint mid = grid.point(i, j) + PhasePoint{0.5 * cell, 0.5 * cell};
                if ((mid - state.center()).norm() > rep.bound_radius + cell) rep.within_bound = false;
            }
        }
    }

    // Zero crossings along rays from the center, scanned past the bound.
    const PhasePoint c0 = state.center();
    const double reach = 1.25 * rep.bound_radius;
    const double h = std::min(cell / 4.0, reach / 4000.0);
    const unsigned steps = static_cast<unsigned>(std::ceil(reach / h));
    std::vector<std::vector<double>> crossings(opts.rays);
    parallel_for(opts.rays, [&](std::size_t t) {
        const double th = 2.0 * kPi * static_cast<double>(t) / opts.rays;
        const PhasePoint dir{std::cos(th), std::sin(th)};
        auto f = [&](double r) { return P(c0 + dir * r); };
        double r0 = 0.0;
        double f0 = f(0.0);
        for (unsigned k = 1; k <= steps; ++k) {
            const double r1 = reach * k / steps;
            const double f1 = f(r1);
            if (f0 != 0.0 && f1 != 0.0 && (f0 < 0) != (f1 < 0)) {
                double lo = r0, hi = r1;
                for (int it = 0; it < 100 && hi - lo > 1e-15 * hi; ++it) {
                    const double mid = 0.5 * (lo + hi);
                    if ((f(mid) < 0) == (f0 < 0)) lo = mid;
                    else hi = mid;
                }
                crossings[t].push_back(0.5 * (lo + hi));
            } else if (f1 == 0.0) {
                crossings[t].push_back(r1);
            }
            r0 = r1;
            f0 = f1 == 0.0 ? f(r1 + 0.5 * h) : f1;
        }
    });

    // A circle is seeded by any unused crossing. Rays where another nodal curve
    // meets the circle see a double zero and may lack a crossing, so only most
    // rays are required to match; the angular check below decides.
    std::vector<std::vector<bool>> used(opts.rays);
    for (unsigned t = 0; t < opts.rays; ++t) used[t].assign(crossings[t].size(), false);
    const unsigned min_rays = opts.rays - opts.rays / 4;
    for (unsigned seed = 0; seed < opts.rays; ++seed) {
        for (std::size_t q = 0; q < crossings[seed].size(); ++q) {
            if (used[seed][q]) continue;
            const double r0 = crossings[seed][q];
            std::vector<std::pair<unsigned, std::size_t>> pick;
            for (unsigned t = 0; t < opts.rays; ++t) {
                double best = 2.0 * cell;
                std::size_t arg = crossings[t].size();
                for (std::size_t u = 0; u < crossings[t].size(); ++u) {
                    const double d = std::fabs(crossings[t][u] - r0);
                    if (!used[t][u] && d <= best) {
                        best = d;
                        arg = u;
                    }
                }
                if (arg < crossings[t].size()) pick.emplace_back(t, arg);
            }
            if (pick.size() < min_rays) continue;
            std::vector<double> radii;
            radii.reserve(pick.size());
            for (auto [t, u] : pick) radii.push_back(crossings[t][u]);
            std::sort(radii.begin(), radii.end());
            const double spread = radii.back() - radii.front();
            const double radius = radii[radii.size() / 2];
            double worst = 0.0;
            for (int k = 0; k < 128; ++k) {
                const double th = 2.0 * kPi * k / 128.0;
                const PhasePoint z = c0 + PhasePoint{radius * std::cos(th), radius * std::sin(th)};
                worst = std::max(worst, std::fabs(wigner::wigner_eval(state, z).value));
            }
            if (spread <= 2.0 * cell && worst <= opts.tol) {
                rep.circles.push_back({c0, radius, worst, spread});
                for (auto [t, u] : pick) used[t][u] = true;
            }
        }
    }
    std::sort(rep.circles.begin(), rep.circles.end(),
              [](const Circle& x, const Circle& y) { return x.radius < y.radius; });
    for (unsigned t = 0; t < opts.rays; ++t) {
        const double th = 2.0 * kPi * t / opts.rays;
        for (std::size_t u = 0; u < crossings[t].size(); ++u) {
            const double r = crossings[t][u];
            if (r > rep.bound_radius) rep.within_bound = false;
            if (!used[t][u]) rep.loose_crossings.push_back(c0 + PhasePoint{r * std::cos(th), r * std::sin(th)});
        }
    }
    return rep;
}

}  // namespace wigzero::nodal
