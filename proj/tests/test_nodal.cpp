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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "oracles.hpp"
#include "wigzero/laguerre.hpp"
#include "wigzero/nodal.hpp"
#include "wigzero/wigner.hpp"

using namespace wigzero;
using namespace wigzero::nodal;

namespace {

constexpr double kPi = std::numbers::pi;

double max_abs(const std::vector<Complex>& v) {
    double m = 0.0;
    for (auto x : v) m = std::max(m, std::abs(x));
    return m;
}

// Fourier coefficient m of pi hbar e^{s/2} Wf on the circle |zeta|^2 = s, by
// sampling; row m of the residual system is proportional to it.
Complex circle_fourier(const HermiteState& st, double s, int m) {
    const int K = 64;
    Complex acc = 0.0;
    const double R = radius_of_s(s, st.hbar());
    for (int k = 0; k < K; ++k) {
        const double th = 2 * kPi * k / K;
        acc += wigner::wigner_eval(st, {R * std::cos(th), R * std::sin(th)}).value * std::polar(1.0, -m * th);
    }
    return acc / double(K) * kPi * st.hbar() * std::exp(s / 2);
}

Disc brute_force_disc(const std::vector<PhasePoint>& pts) {
    auto covers = [&](const Disc& d) {
        for (const auto& p : pts) {
            if ((p - d.center).norm() > d.radius * (1 + 1e-12) + 1e-12) return false;
        }
        return true;
    };
    Disc best{{}, 1e300};
    for (std::size_t i = 0; i < pts.size(); ++i) {
        for (std::size_t j = i + 1; j < pts.size(); ++j) {
            Disc d{(pts[i] + pts[j]) * 0.5, (pts[i] - pts[j]).norm() / 2};
            if (d.radius < best.radius && covers(d)) best = d;
            for (std::size_t k = j + 1; k < pts.size(); ++k) {
                const PhasePoint a = pts[i], b = pts[j], c = pts[k];
                const double D = 2 * (a.x * (b.p - c.p) + b.x * (c.p - a.p) + c.x * (a.p - b.p));
                if (std::fabs(D) < 1e-14) continue;
                const double ux = (a.norm_sq() * (b.p - c.p) + b.norm_sq() * (c.p - a.p) + c.norm_sq() * (a.p - b.p)) / D;
                const double uy = (a.norm_sq() * (c.x - b.x) + b.norm_sq() * (a.x - c.x) + c.norm_sq() * (b.x - a.x)) / D;
                Disc e{{ux, uy}, (a - PhasePoint{ux, uy}).norm()};
                if (e.radius < best.radius && covers(e)) best = e;
            }
        }
    }
    return best;
}

}  // namespace

TEST(CircleResiduals, Examples) {
    EXPECT_LE(max_abs(circle_residuals(oracle::unit(1), 1.0)), 1e-15);
    EXPECT_LE(max_abs(circle_residuals(oracle::f1(), 2.0)), 1e-12);
    EXPECT_LE(max_abs(circle_residuals(oracle::f2_vanishing(), 3.0)), 1e-12);
    EXPECT_GE(max_abs(circle_residuals(oracle::random_state(3, 1), 1.0)), 1e-3);
    EXPECT_EQ(circle_residuals(oracle::random_state(4, 1), 1.0).size(), 5u);
    EXPECT_EQ(circle_residuals(oracle::unit(2), 0.7)[0].imag(), 0.0);
}

TEST(CircleResiduals, HermiteFunctionsAtLaguerreZeros) {
    for (unsigned k = 1; k <= 6; ++k) {
        for (double s : laguerre::laguerre_zeros(k, 0).values) {
            EXPECT_LE(max_abs(circle_residuals(oracle::unit(k), s)), 1e-12 * std::max(1.0, s));
        }
    }
}

TEST(CircleResiduals, ProportionalToCircleFourierModes) {
    const auto c = oracle::random_state(3, 44);
    const HermiteState st(c);
    for (double s : {0.6, 2.2}) {
        const auto rows = circle_residuals(c, s);
        // Each row is a fixed multiple of one Fourier mode; compare ratios between states.
        const auto c2 = oracle::random_state(3, 45);
        const auto rows2 = circle_residuals(c2, s);
        const HermiteState st2(c2);
        for (int m = 0; m <= 3; ++m) {
            const Complex a = circle_fourier(st, s, m), b = circle_fourier(st2, s, m);
            // rows and modes may differ by conjugation depending on orientation.
            const double lhs = std::abs(rows[m] * b);
            const double rhs = std::abs(rows2[m] * a);
            EXPECT_NEAR(lhs, rhs, 1e-10 * std::max(1.0, lhs));
        }
    }
}

TEST(Admissible, Radii) {
    const auto r1 = admissible_radii(1, 1.0);
    ASSERT_EQ(r1.size(), 1u);
    EXPECT_NEAR(r1[0], std::sqrt(0.5), 1e-15);
    const auto r2 = admissible_radii(2, 1.0);
    ASSERT_EQ(r2.size(), 4u);
    const std::vector<double> expect{std::sqrt((2 - std::sqrt(2.0)) / 2), std::sqrt(0.5), 1.0,
                                     std::sqrt((2 + std::sqrt(2.0)) / 2)};
    for (int i = 0; i < 4; ++i) EXPECT_NEAR(r2[i], expect[i], 1e-14);
    for (unsigned N = 1; N <= 6; ++N) {
        for (const auto& v : admissible_values(N, 2.0)) {
            EXPECT_LT(v.p, 4.0 * N + 2);
            EXPECT_NEAR(v.radius, std::sqrt(2.0 * v.p / 2), 1e-14);
            EXPECT_NEAR(laguerre::laguerre_eval(v.n, double(v.k), v.p), 0.0, 1e-9);
        }
    }
}

TEST(RankAndParity, Examples) {
    EXPECT_EQ(rank_lower_bound(std::sqrt(0.5), 1.0), 0u);
    EXPECT_EQ(rank_lower_bound(std::sqrt(5.0), 1.0), 2u);
    EXPECT_EQ(rank_lower_bound(std::sqrt(1.5), 1.0), 1u);
    EXPECT_EQ(rank_lower_bound(std::sqrt(2.0 * 5.0), 2.0), 2u);
    EXPECT_EQ(parity_constraint(2), Parity::plus);
    EXPECT_EQ(parity_constraint(8), Parity::plus);
    EXPECT_EQ(parity_constraint(3), Parity::minus);
    EXPECT_EQ(parity_constraint(1), Parity::minus);
    EXPECT_EQ(parity_constraint(Rational(3, 2)), Parity::impossible);
    EXPECT_EQ(parity_constraint(6), Parity::unconstrained);
    EXPECT_STREQ(to_string(Parity::plus), "+1");
}

TEST(LineRestriction, Examples) {
    const auto h1 = line_restriction(HermiteState::hermite(1), 0.0, 0.0);
    ASSERT_EQ(h1.coeffs.size(), 3u);
    EXPECT_NEAR(h1.coeffs[0], -1.0, 1e-15);
    EXPECT_NEAR(h1.coeffs[1], 0.0, 1e-15);
    EXPECT_NEAR(h1.coeffs[2], 1.0, 1e-15);
    const auto h0 = line_restriction(HermiteState::hermite(0), 0.3, 1.0);
    ASSERT_EQ(h0.coeffs.size(), 1u);
    EXPECT_NEAR(h0.coeffs[0], 1.0, 1e-15);
    for (unsigned N = 1; N <= 6; ++N) {
        const auto c = oracle::random_state(N, 70 + N);
        const HermiteState st(c, 1.0, {0.2, 0.1}, SymplecticMat2::rotation(0.4));
        const auto lr = line_restriction(st, 1.1, -0.3);
        ASSERT_EQ(lr.coeffs.size(), 2 * N + 1);
        EXPECT_NEAR(lr.leading, std::norm(c[N]) / std::tgamma(N + 1.0), 1e-12);
        EXPECT_GT(std::fabs(lr.leading), 0.0);
        // Matches the evaluator along the line.
        const double scale = std::sqrt(st.hbar() / 2);
        for (double xi : {-1.0, 0.4, 2.0}) {
            const Complex w = std::polar(1.0, 1.1) * Complex(xi, -0.3);
            const PhasePoint z = st.center() + PhasePoint{scale * w.real(), scale * w.imag()};
            double poly = 0.0;
            for (std::size_t j = lr.coeffs.size(); j-- > 0;) poly = poly * xi + lr.coeffs[j];
            const double expect = wigner::wigner_eval(st, z).value * kPi * std::exp(std::norm(w) / 2);
            EXPECT_NEAR(poly, expect, 1e-10 * std::max(1.0, std::fabs(expect)));
        }
    }
}

TEST(SignUncertainty, Bound) {
    EXPECT_DOUBLE_EQ(sign_up_bound(1, 1.0), 0.25);
    EXPECT_NEAR(sign_up_bound(1, 3.0), std::sqrt(3.0) / 4, 1e-15);
    EXPECT_NEAR(sign_up_bound(2, 1.0), 0.5 * std::sqrt(0.5), 1e-15);
    double prev = 0.0;
    for (unsigned n = 1; n <= 60; ++n) {
        const double b = sign_up_bound(n, 1.0);
        EXPECT_GT(b, prev);
        prev = b;
    }
    EXPECT_GT(sign_up_bound(2000, 1.0), 9.0);
}

TEST(SignUncertainty, NegativeRegion) {
    const wigner::GridSpec g{401, 3.0, {}};
    const auto h1 = negative_region_radius(HermiteState::hermite(1), g);
    EXPECT_FALSE(h1.empty);
    EXPECT_NEAR(h1.radius, std::sqrt(0.5), g.step());
    EXPECT_TRUE(h1.verdict);
    EXPECT_TRUE(h1.reaches_conjectured_optimum);
    const auto h2 = negative_region_radius(HermiteState::hermite(2), g);
    EXPECT_NEAR(h2.radius, std::sqrt((2 + std::sqrt(2.0)) / 2), g.step());
    EXPECT_TRUE(h2.verdict);
    const auto h0 = negative_region_radius(HermiteState::hermite(0), g);
    EXPECT_TRUE(h0.empty);
    EXPECT_TRUE(h0.verdict);
    for (unsigned t = 0; t < 4; ++t) {
        const auto r = negative_region_radius(HermiteState(oracle::random_state(1 + t, 500 + t)), {301, 5.0, {}});
        EXPECT_TRUE(r.verdict);
    }
    EXPECT_THROW(negative_region_radius(HermiteState::hermite(1), {16, 3.0, {}}), DiagnosticError);
}

TEST(SignUncertainty, EnclosingDiscMatchesBruteForce) {
    std::mt19937_64 rng(3);
    std::normal_distribution<double> g;
    for (int t = 0; t < 20; ++t) {
        std::vector<PhasePoint> pts;
        for (int i = 0; i < 25; ++i) pts.push_back({g(rng), 0.5 * g(rng)});
        const Disc a = min_enclosing_disc(pts);
        const Disc b = brute_force_disc(pts);
        EXPECT_NEAR(a.radius, b.radius, 1e-12);
        EXPECT_NEAR((a.center - b.center).norm(), 0.0, 1e-9);
    }
    EXPECT_EQ(min_enclosing_disc({{1.0, 2.0}}).radius, 0.0);
}

TEST(SymmetricProbe, Examples) {
    const auto h1 = symmetric_zero_probe(HermiteState::hermite(1), {std::sqrt(0.5), 0.0}, 2000, 7);
    EXPECT_TRUE(h1.both_signs);
    EXPECT_FALSE(h1.flagged);
    for (unsigned n = 0; n <= 4; ++n) {
        EXPECT_THROW(symmetric_zero_probe(HermiteState::hermite(n), {}, 10), PreconditionError);
    }
    const PhasePoint z1{0.5, -0.25};
    const auto odd = symmetric_zero_probe([&](const PhasePoint& z) { return (z - z1).x; }, z1, 500, 2.0, 1);
    EXPECT_TRUE(odd.flagged);
    EXPECT_EQ(odd.positive, 0u);
    const auto a = symmetric_zero_probe(HermiteState::hermite(1), {std::sqrt(0.5), 0.0}, 300, 9);
    const auto b = symmetric_zero_probe(HermiteState::hermite(1), {std::sqrt(0.5), 0.0}, 300, 9);
    EXPECT_EQ(a.positive, b.positive);
}

TEST(PatchFit, FirstExcitedState) {
    std::mt19937_64 rng(11);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const HermiteState h1 = HermiteState::hermite(1);
    std::vector<Sample> samples;
    for (int i = 0; i < 100; ++i) {
        const double r = 0.3 * std::sqrt(u(rng)), t = 2 * kPi * u(rng);
        const PhasePoint z{r * std::cos(t), r * std::sin(t)};
        samples.push_back({z, wigner::wigner_eval(h1, z).value});
    }
    for (unsigned N = 1; N <= 2; ++N) {
        const auto fit = fit_from_patch(samples, N, 1.0);
        EXPECT_LE(fit.residual, 1e-8);
        EXPECT_EQ(fit.rank, 1u);
        ASSERT_FALSE(fit.coeffs.empty());
        EXPECT_LE(orbit_distance(fit.coeffs, oracle::unit(1)), 1e-6);
        double sup = 0.0;
        for (int i = 0; i < 40; ++i) {
            for (int k = 0; k < 40; ++k) {
                const double r = 3.0 * i / 39, t = 2 * kPi * k / 40;
                const PhasePoint z{r * std::cos(t), r * std::sin(t)};
                sup = std::max(sup, std::fabs(fit.form.wigner(z) - wigner::wigner_eval(h1, z).value));
            }
        }
        EXPECT_LE(sup, 1e-7);
    }
}

TEST(PatchFit, TwoTermStateAndGround) {
    std::mt19937_64 rng(12);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    const HermiteState f1(oracle::f1());
    std::vector<Sample> samples, ground;
    while (samples.size() < 200) {
        const PhasePoint z{0.8 * u(rng), 0.8 * u(rng)};
        if (z.norm() > 0.8) continue;
        samples.push_back({z, wigner::wigner_eval(f1, z).value});
        ground.push_back({z, wigner::wigner_eval(HermiteState::hermite(0), z).value});
    }
    const auto fit = fit_from_patch(samples, 4, 1.0);
    EXPECT_LE(fit.residual, 1e-8);
    for (const PhasePoint z : {PhasePoint{0.0, 0.0}, PhasePoint{1.0, 0.0}, PhasePoint{0.5, -1.5}}) {
        EXPECT_NEAR(fit.form.wigner(z), wigner::wigner_eval(f1, z).value, 1e-6);
    }
    const auto g = fit_from_patch(ground, 0, 1.0);
    ASSERT_EQ(g.coeffs.size(), 1u);
    EXPECT_NEAR(std::abs(g.coeffs[0]), 1.0, 1e-12);
    std::vector<Sample> line;
    for (int i = 0; i < 50; ++i) line.push_back({{0.01 * i, 0.0}, 0.0});
    EXPECT_THROW(fit_from_patch(line, 2, 1.0), DiagnosticError);
}

TEST(NodalScan, Examples) {
    const wigner::GridSpec g{128, 3.0, {}};
    const auto h0 = nodal_scan(HermiteState::hermite(0), g);
    EXPECT_TRUE(h0.sign_change_cells.empty());
    EXPECT_TRUE(h0.circles.empty());
    const auto h1 = nodal_scan(HermiteState::hermite(1), g);
    ASSERT_EQ(h1.circles.size(), 1u);
    EXPECT_NEAR(h1.circles[0].radius, std::sqrt(0.5), g.step());
    EXPECT_LE(h1.circles[0].max_residual, 1e-8);
    EXPECT_TRUE(h1.within_bound);
    const auto f1 = nodal_scan(HermiteState(oracle::f1()), {192, 5.0, {}});
    bool found = false;
    for (const auto& c : f1.circles) {
        found = found || std::fabs(c.radius - 1.0) < 1e-6;
        EXPECT_LE(c.max_residual, 1e-8);
        EXPECT_LE(c.radius, f1.bound_radius);
    }
    EXPECT_TRUE(found);
    EXPECT_TRUE(f1.within_bound);
    EXPECT_GE(f1.bound_radius, f1.oscillatory_radius);
    const auto shifted = nodal_scan(translate_state(HermiteState::hermite(1), {1.0, 0.5}), {128, 3.0, {1.0, 0.5}});
    ASSERT_EQ(shifted.circles.size(), 1u);
    EXPECT_NEAR(shifted.circles[0].center.x, 1.0, 1e-6);
}

TEST(NodalScan, ZerosWithinBound) {
    for (unsigned t = 0; t < 4; ++t) {
        const HermiteState s(oracle::random_state(2 + t, 900 + t), 1.0, {0.4, -0.6});
        const double R = zero_bound_radius(s);
        EXPECT_GE(R, std::sqrt((4.0 * s.rank() + 2) / 2));
        const auto rep = nodal_scan(s, {160, R * 1.3, s.center()});
        EXPECT_TRUE(rep.within_bound);
        for (const auto& z : rep.loose_crossings) EXPECT_LE((z - s.center()).norm(), R);
    }
}
