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

#include "oracles.hpp"
#include "wigzero/wigner.hpp"

using namespace wigzero;
using namespace wigzero::wigner;

namespace {

constexpr double kPi = std::numbers::pi;

PhasePoint polar(double r, double th) { return {r * std::cos(th), r * std::sin(th)}; }

}  // namespace

TEST(HermiteFunctions, MatchPhysicistsFormula) {
    for (double hbar : {1.0, 0.3, kTimeFrequencyHbar}) {
        for (double x : {-2.0, -0.1, 0.0, 0.9, 3.3}) {
            const auto h = hermite_functions(12, x, hbar);
            for (unsigned n = 0; n <= 12; ++n) {
                EXPECT_NEAR(h[n], oracle::hermite_function(n, x, hbar), 1e-13 * std::pow(hbar, -0.25));
            }
        }
    }
}

TEST(CrossWigner, Examples) {
    for (double hbar : {1.0, 2.5, kTimeFrequencyHbar}) {
        EXPECT_NEAR(cross_wigner_hermite(0, 0, {}, hbar).real(), 1.0 / (kPi * hbar), 1e-14 / hbar);
        EXPECT_NEAR(cross_wigner_hermite(1, 0, {}, hbar).real(), -1.0 / (kPi * hbar), 1e-14 / hbar);
        for (int k = 0; k < 8; ++k) {
            EXPECT_NEAR(std::abs(cross_wigner_hermite(1, 0, polar(std::sqrt(hbar / 2), k * 0.8), hbar)), 0.0,
                        1e-14 / hbar);
        }
    }
}

TEST(CrossWigner, OffDiagonalAgainstTrapezoid) {
    const double hbar = 1.0;
    for (unsigned n = 0; n <= 3; ++n) {
        for (unsigned k = 0; k <= 3; ++k) {
            auto f = [&](double y) { return Complex(oracle::hermite_function(n + k, y, hbar)); };
            auto g = [&](double y) { return Complex(oracle::hermite_function(n, y, hbar)); };
            for (const PhasePoint z : {PhasePoint{1.0, 0.0}, PhasePoint{-0.4, 0.7}, PhasePoint{0.2, -1.3}}) {
                const Complex ref = oracle::cross_wigner_trapezoid(f, g, z.x, z.p, hbar, 20.0);
                EXPECT_NEAR(std::abs(cross_wigner_hermite(n, k, z, hbar) - ref), 0.0, 1e-11) << n << " " << k;
            }
        }
    }
}

TEST(WignerEval, TwoTermStates) {
    for (double hbar : {1.0, 0.5}) {
        const HermiteState f1(oracle::f1(), hbar), f2(oracle::f2(), hbar);
        const HermiteState f2_vanishing(oracle::f2_vanishing(), hbar);
        EXPECT_NEAR(wigner_eval(f1, {}).value, 1.0 / (kPi * hbar), 1e-13);
        EXPECT_NEAR(wigner_eval(f2, {}).value, -1.0 / (kPi * hbar), 1e-13);
        for (int k = 0; k < 64; ++k) {
            const double th = 2 * kPi * k / 64;
            EXPECT_NEAR(wigner_eval(f1, polar(std::sqrt(hbar), th)).value, 0.0, 1e-10);
            EXPECT_NEAR(wigner_eval(f2_vanishing, polar(std::sqrt(1.5 * hbar), th)).value, 0.0, 1e-10);
            // The printed coefficients 1/3 and 2 sqrt 2/3 give a radial but nonzero value there.
            EXPECT_NEAR(wigner_eval(f2, polar(std::sqrt(1.5 * hbar), th)).value,
                        -2.0 / 3.0 * std::exp(-1.5) / (kPi * hbar), 1e-13);
        }
        EXPECT_NEAR(wigner_eval(f2_vanishing, {}).value, -1.0 / (kPi * hbar), 1e-13);
    }
}

TEST(WignerEval, ShiftedTwoTermState) {
    const double hbar = 0.8;
    const Complex c0(0.3, 0.4), c1raw(0.5, -0.7);
    const double nrm = std::sqrt(std::norm(c0) + std::norm(c1raw));
    const Complex a = c0 / nrm, b = c1raw / nrm;
    const Complex cc = std::conj(b) * a;
    const double s = std::sqrt(hbar / 2) / std::norm(b);
    const HermiteState st({a, b}, hbar, {s * cc.real(), -s * cc.imag()});
    for (int k = 0; k < 64; ++k) {
        EXPECT_NEAR(wigner_eval(st, polar(std::sqrt(hbar / 2), 2 * kPi * k / 64)).value, 0.0, 1e-12);
    }
}

TEST(WignerEval, AgainstTrapezoidOracle) {
    for (unsigned n = 0; n <= 6; ++n) {
        const auto c = oracle::unit(n);
        const HermiteState s(c);
        for (int i = 0; i < 5; ++i) {
            for (int j = 0; j < 5; ++j) {
                const PhasePoint z{-2.5 + 1.2 * i, -2.3 + 1.15 * j};
                EXPECT_NEAR(wigner_eval(s, z).value, oracle::wigner_trapezoid(c, 1.0, z.x, z.p), 1e-8);
            }
        }
    }
    for (unsigned t = 0; t < 5; ++t) {
        const auto c = oracle::random_state(1 + t % 4, 100 + t);
        const HermiteState s(c, 0.7);
        for (int i = 0; i < 10; ++i) {
            const PhasePoint z{-2.0 + 0.4 * i, 1.5 - 0.3 * i};
            EXPECT_NEAR(wigner_eval(s, z).value, oracle::wigner_trapezoid(c, 0.7, z.x, z.p), 1e-8);
        }
    }
}

TEST(WignerEval, GeneralFrame) {
    const auto c = oracle::random_state(3, 77);
    const SymplecticMat2 S(1.5, 0.4, 0.2, (1.0 + 0.4 * 0.2) / 1.5);
    const PhasePoint z1{0.3, -0.2};
    const HermiteState s(c, 1.0, z1, S);
    const HermiteState plain(c);
    for (int i = 0; i < 6; ++i) {
        const PhasePoint z{-1.0 + 0.4 * i, 0.5 - 0.2 * i};
        EXPECT_NEAR(wigner_eval(s, z).value, wigner_eval(plain, S.apply(z - z1)).value, 1e-14);
    }
}

TEST(QuadratureOracle, Examples) {
    EXPECT_NEAR(quadrature_oracle(HermiteState::hermite(0), {}), 1.0 / kPi, 1e-10);
    const HermiteState h3 = HermiteState::hermite(3);
    for (int i = 0; i < 10; ++i) {
        for (int j = 0; j < 10; ++j) {
            const PhasePoint z{-2.0 + 0.45 * i, -2.0 + 0.45 * j};
            EXPECT_NEAR(quadrature_oracle(h3, z), wigner_eval(h3, z).value, 1e-8);
        }
    }
    const HermiteState f1(oracle::f1());
    EXPECT_NEAR(quadrature_oracle(f1, {0.3, -0.7}), wigner_eval(f1, {0.3, -0.7}).value, 1e-8);
    EXPECT_NEAR(quadrature_oracle(HermiteState::hermite(0, 1.0), {1.0, 0.0}),
                std::real(cross_wigner_hermite(0, 0, {1.0, 0.0}, 1.0)), 1e-10);
}

TEST(QuadratureOracle, UnreachableToleranceIsDiagnostic) {
    quadrature::Options opts;
    opts.start_order = 64;
    opts.max_order = 64;
    opts.tol = 1e-30;
    EXPECT_THROW(quadrature_oracle(HermiteState(oracle::random_state(5, 1)), {1.0, 1.0}, opts), DiagnosticError);
}

TEST(WignerProperties, BoundRadialAndHudson) {
    for (unsigned n = 0; n <= 8; ++n) {
        const HermiteState s = HermiteState::hermite(n);
        for (double r : {0.0, 0.4, 1.1, 2.3}) {
            const double ref = wigner_eval(s, {r, 0.0}).value;
            for (int k = 1; k < 24; ++k) {
                EXPECT_NEAR(wigner_eval(s, polar(r, 2 * kPi * k / 24)).value, ref, 1e-12);
            }
        }
    }
    for (unsigned t = 0; t < 6; ++t) {
        const HermiteState s(oracle::random_state(1 + t, 40 + t));
        double min_value = 1.0;
        for (int i = 0; i < 100; ++i) {
            for (int j = 0; j < 100; ++j) {
                const PhasePoint z{-4.0 + 8.0 * i / 99, -4.0 + 8.0 * j / 99};
                const double v = wigner_eval(s, z).value;
                EXPECT_LE(std::fabs(v), 1.0 / kPi + 1e-12);
                min_value = std::min(min_value, v);
            }
        }
        EXPECT_LT(min_value, 0.0);
    }
    const HermiteState h0 = HermiteState::hermite(0);
    for (int i = 0; i < 30; ++i) EXPECT_GT(wigner_eval(h0, {0.2 * i - 3.0, 0.1 * i}).value, 0.0);
}

TEST(Polyanalytic, Examples) {
    const auto p0 = polyanalytic_form(HermiteState::hermite(0));
    EXPECT_EQ(p0.order, 1u);
    EXPECT_EQ(p0.coeffs.size(), 1u);
    EXPECT_NEAR(std::abs(p0.coeffs.at({0, 0}) - 1.0), 0.0, 1e-15);
    const auto p1 = polyanalytic_form(HermiteState::hermite(1));
    EXPECT_NEAR(std::abs(p1.eval_poly(0.0) + 1.0), 0.0, 1e-15);
    EXPECT_NEAR(std::abs(p1.coeffs.at({1, 1}) - 1.0), 0.0, 1e-15);
    for (Complex w : {Complex(0.3, 1.1), Complex(-2.0, 0.5)}) {
        EXPECT_NEAR(std::abs(p1.eval_poly(w) - (std::norm(w) - 1.0)), 0.0, 1e-14);
    }
    const auto p3 = polyanalytic_form(HermiteState(oracle::random_state(3, 8)));
    EXPECT_EQ(p3.order, 4u);
    EXPECT_TRUE(p3.is_hermitian(0.0));
    EXPECT_LE(p3.max_conj_degree(), 3u);
}

TEST(Polyanalytic, AgreesWithEvaluatorAndCircleRestriction) {
    const HermiteState s(oracle::random_state(4, 21), 0.6, {0.4, -0.3}, SymplecticMat2::rotation(0.5));
    const auto form = polyanalytic_form(s);
    for (int i = 0; i < 12; ++i) {
        const PhasePoint z{-1.0 + 0.3 * i, 0.7 - 0.15 * i};
        EXPECT_NEAR(form.wigner(z), wigner_eval(s, z).value, 1e-12);
    }
    for (double sv : {0.5, 1.7, 4.0}) {
        const auto t = form.circle_restriction(sv);
        ASSERT_EQ(t.size(), 2 * form.order - 1);
        for (int k = 0; k < 16; ++k) {
            const double th = 2 * kPi * k / 16;
            Complex trig = 0.0;
            for (int m = -static_cast<int>(form.order - 1); m <= static_cast<int>(form.order - 1); ++m) {
                trig += t[m + form.order - 1] * std::polar(1.0, m * th);
            }
            const Complex w = std::polar(std::sqrt(sv), th);
            const double scale = std::sqrt(s.hbar() / 2);
            const PhasePoint z = s.center() + PhasePoint{scale * w.real(), scale * w.imag()};
            const double expect = wigner_eval(s, z).value * kPi * s.hbar() * std::exp(sv / 2);
            EXPECT_NEAR(trig.real(), expect, 1e-10 * std::max(1.0, std::fabs(expect)));
            EXPECT_NEAR(trig.imag(), 0.0, 1e-10 * std::max(1.0, std::fabs(expect)));
        }
    }
    const HermiteState sq(oracle::random_state(2, 1), 1.0, {}, SymplecticMat2(2.0, 0.0, 0.0, 0.5));
    EXPECT_THROW(polyanalytic_form(sq), std::invalid_argument);
}

TEST(Marginals, Examples) {
    EXPECT_NEAR(marginal_position(HermiteState::hermite(1), 0.0), 0.0, 1e-15);
    for (double hbar : {1.0, 0.4}) {
        for (double x : {-1.0, 0.0, 0.6}) {
            EXPECT_NEAR(marginal_position(HermiteState::hermite(0, hbar), x),
                        std::exp(-x * x / hbar) / std::sqrt(kPi * hbar), 1e-14);
        }
    }
    EXPECT_NEAR(normalization(HermiteState(oracle::f1())), 1.0, 1e-12);
    const auto c = oracle::random_state(3, 12);
    const HermiteState s(c, 1.0, {0.5, 0.2});
    for (double x : {-0.8, 0.1, 1.4}) {
        EXPECT_NEAR(marginal_position(s, x), std::norm(oracle::expansion(c, x - 0.5, 1.0)), 1e-13);
        // Direct p-integral of the evaluator.
        double acc = 0.0;
        const double h = 0.01;
        for (int k = -1200; k <= 1200; ++k) acc += wigner_eval(s, {x, k * h}).value * h;
        EXPECT_NEAR(marginal_position(s, x), acc, 1e-10);
    }
    const HermiteState g(c, 1.0, {0.1, 0.0}, SymplecticMat2(1.3, 0.5, 0.4, (1.0 + 0.2) / 1.3));
    for (double x : {-0.5, 0.8}) {
        double acc = 0.0;
        const double h = 0.01;
        for (int k = -1500; k <= 1500; ++k) acc += wigner_eval(g, {x, k * h}).value * h;
        EXPECT_NEAR(marginal_position(g, x), acc, 1e-9);
    }
}

TEST(Grid, SweepMatchesPointwise) {
    const HermiteState s(oracle::f2());
    const auto spec = default_grid(s);
    EXPECT_EQ(spec.size, 512u);
    EXPECT_NEAR(spec.radius, 4.0 * std::sqrt(7.0), 1e-14);
    GridSpec small{33, 2.0, {0.5, 0.0}};
    const auto g = grid_sweep(s, small);
    ASSERT_EQ(g.values.size(), 33u * 33u);
    for (unsigned i = 0; i < 33; i += 4) {
        for (unsigned j = 0; j < 33; j += 5) EXPECT_EQ(g.at(i, j), wigner_eval(s, small.point(i, j)).value);
    }
    EXPECT_THROW((GridSpec{1, 1.0, {}}).validate(), std::invalid_argument);
}
