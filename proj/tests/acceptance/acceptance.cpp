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

// Runs the eight acceptance criteria and prints one line per criterion.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <set>
#include <string>

#include "../oracles.hpp"
#include "wigzero/certificates.hpp"
#include "wigzero/identities.hpp"
#include "wigzero/laguerre.hpp"
#include "wigzero/nodal.hpp"
#include "wigzero/wigner.hpp"

using namespace wigzero;

namespace {

constexpr double kPi = std::numbers::pi;

struct Outcome {
    bool pass = false;
    std::string detail;
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

PhasePoint polar(double r, double th) { return {r * std::cos(th), r * std::sin(th)}; }

Outcome closed_form_vs_oracle() {
    const double hbar = 1.0;
    std::vector<Coeffs> states;
    for (unsigned n = 0; n <= 6; ++n) states.push_back(oracle::unit(n));
    for (unsigned t = 0; t < 5; ++t) states.push_back(oracle::random_state(1 + t % 4, 1000 + t));
    double worst = 0.0;
    const double R = 3.0 * std::sqrt(hbar);
    for (const auto& c : states) {
        const HermiteState s(c, hbar);
        for (int i = 0; i < 10; ++i) {
            for (int j = 0; j < 10; ++j) {
                const PhasePoint z{-R + 2 * R * i / 9, -R + 2 * R * j / 9};
                worst = std::max(worst, std::fabs(wigner::wigner_eval(s, z).value - wigner::quadrature_oracle(s, z)));
            }
        }
    }
    return {worst <= 1e-8, "max deviation " + fmt("%.2e", worst) + " over 12 states x 100 points"};
}

Outcome reproduce_circles() {
    std::string detail;
    bool ok = true;
    struct Case {
        double s;
        int sigma;
        unsigned nmax;
        unsigned k;
    };
    const double x1 = laguerre::laguerre_zeros(3, 0).values[2];
    for (const Case c : {Case{1.0, -1, 3, 1}, Case{2.0 + std::sqrt(2.0), 1, 3, 2}, Case{x1, -1, 4, 3}}) {
        const auto r = nodal::inverse_from_s({c.s}, c.sigma, c.nmax);
        const bool one = r.solutions.size() == 1;
        const double d = one ? nodal::orbit_distance(r.solutions[0].coeffs, oracle::unit(c.k)) : 1.0;
        ok = ok && one && d <= 1e-8;
        detail += "h" + std::to_string(c.k) + ": " + std::to_string(r.solutions.size()) + " orbit(s), distance " +
                  fmt("%.1e", d) + (r.uniqueness_certified ? " certified" : "") + "; ";
    }
    return {ok, detail};
}

Outcome two_term_states(bool& f2_literal) {
    const double hbar = 1.0;
    const HermiteState f1(oracle::f1(), hbar), f2(oracle::f2(), hbar);
    double f1_circle = 0.0, f2_circle = 0.0;
    for (int k = 0; k < 128; ++k) {
        const double th = 2 * kPi * k / 128;
        f1_circle = std::max(f1_circle, std::fabs(wigner::wigner_eval(f1, polar(std::sqrt(hbar), th)).value));
        f2_circle = std::max(f2_circle, std::fabs(wigner::wigner_eval(f2, polar(std::sqrt(1.5 * hbar), th)).value));
    }
    const double f1_0 = wigner::wigner_eval(f1, {}).value - 1.0 / (kPi * hbar);
    const double f2_0 = wigner::wigner_eval(f2, {}).value + 1.0 / (kPi * hbar);
    const bool f1_ok = std::fabs(f1_0) <= 1e-10 && f1_circle <= 1e-10;
    f2_literal = std::fabs(f2_0) <= 1e-10 && f2_circle <= 1e-10;
    const HermiteState g(oracle::f2_vanishing(), hbar);
    double g_circle = 0.0;
    for (int k = 0; k < 128; ++k) {
        g_circle = std::max(g_circle, std::fabs(wigner::wigner_eval(g, polar(std::sqrt(1.5 * hbar), 2 * kPi * k / 128)).value));
    }
    std::string detail = "f1(0) err " + fmt("%.1e", std::fabs(f1_0)) + ", f1 circle max " + fmt("%.1e", f1_circle) +
                         "; f2(0) err " + fmt("%.1e", std::fabs(f2_0)) + ", f2 circle max " + fmt("%.3e", f2_circle);
    if (!f2_literal) {
        detail += " (known erratum: printed f2 coefficients do not vanish there; h1/sqrt3 + sqrt(2/3) h3 gives " +
                  fmt("%.1e", g_circle) + ")";
    }
    return {f1_ok && f2_literal, detail};
}

Outcome laguerre_certificates() {
    using namespace certificates;
    const auto a2 = verify_A2(200, 200);
    const auto a3 = verify_A3(50, 50);
    const auto a4 = verify_A4(30, 30);
    const auto scan = scan_conjecture_A1(20, 20, 10);
    bool trivial = true;
    for (const auto& w : scan.witnesses) trivial = trivial && w.params[0] == w.params[1] && w.params[2] == 0;
    auto has = [](const Certificate& c, long n) {
        for (const auto& w : c.witnesses) {
            if (w.label == "designated_zero" && w.params[0] == n && w.params[1] == 0) return true;
        }
        return false;
    };
    const bool ok = a2.passed() && a3.passed() && a4.passed() && scan.passed() && trivial && has(a2, 1) &&
                    has(a3, 2) && has(a4, 3);
    return {ok, "A2 " + std::to_string(a2.failures.size()) + " / A3 " + std::to_string(a3.failures.size()) +
                    " / A4 " + std::to_string(a4.failures.size()) + " counterexamples; scan hits " +
                    std::to_string(scan.witnesses.size()) + (trivial ? " all trivial" : " NON-TRIVIAL")};
}

Outcome laguerre_structure() {
    unsigned checked = 0;
    for (unsigned a = 0; a <= 10; ++a) {
        const auto chain = laguerre::laguerre_zero_chain(50, a);
        for (unsigned n = 1; n <= 50; ++n) {
            const auto& z = chain[n - 1];
            const laguerre::LaguerrePoly p(n, a);
            if (z.values.size() != n || z.brackets.size() != n) return {false, "zero count wrong"};
            for (unsigned i = 0; i < n; ++i) {
                const auto& b = z.brackets[i];
                if (!(b.lo > 0) || !(b.hi < laguerre::oscillatory_bound(n, a))) return {false, "bound violated"};
                if (p.sign_at(b.lo) * p.sign_at(b.hi) != -1) return {false, "bracket without sign change"};
                if (i > 0 && !(z.brackets[i - 1].hi < b.lo)) return {false, "brackets overlap"};
                if (n >= 2 && i + 1 < n) {
                    const auto& prev = chain[n - 2].values[i];
                    if (!(z.values[i] < prev && prev < z.values[i + 1])) return {false, "interlacing violated"};
                }
            }
            // Exact count on (0, nu) by Sturm confirms no zero was missed.
            const laguerre::Interval whole{Rational(0), Rational(laguerre::oscillatory_bound(n, a))};
            if (laguerre::sturm_root_count(p, whole) != static_cast<int>(n)) return {false, "Sturm count differs"};
            ++checked;
        }
    }
    return {true, std::to_string(checked) + " polynomials: count, positivity, interlacing, bound"};
}

Outcome sign_uncertainty() {
    const double hbar = 1.0;
    const double b = nodal::sign_up_bound(1, hbar);
    const wigner::GridSpec g{401, 3.0, {}};
    const auto h1 = nodal::negative_region_radius(HermiteState::hermite(1, hbar), g);
    const bool radius_ok = std::fabs(h1.radius - std::sqrt(hbar / 2)) <= g.step();
    bool hudson = true;
    const HermiteState h0 = HermiteState::hermite(0, hbar);
    for (int i = 0; i < 100 && hudson; ++i) {
        for (int j = 0; j < 100; ++j) {
            hudson = hudson && wigner::wigner_eval(h0, {-4.0 + 8.0 * i / 99, -4.0 + 8.0 * j / 99}).value > 0.0;
        }
    }
    unsigned negative_states = 0;
    std::vector<Coeffs> tests{oracle::f1(), oracle::f2()};
    for (unsigned n = 1; n <= 6; ++n) tests.push_back(oracle::unit(n));
    for (unsigned t = 0; t < 5; ++t) tests.push_back(oracle::random_state(1 + t, 2000 + t));
    for (const auto& c : tests) {
        const HermiteState s(c, hbar);
        double mn = 1.0;
        for (int i = 0; i < 100; ++i) {
            for (int j = 0; j < 100; ++j) {
                mn = std::min(mn, wigner::wigner_eval(s, {-4.0 + 8.0 * i / 99, -4.0 + 8.0 * j / 99}).value);
            }
        }
        negative_states += mn < 0.0;
    }
    const bool ok = b == 0.25 && radius_ok && h1.verdict && hudson && negative_states == tests.size();
    return {ok, "bound " + fmt("%.17g", b) + ", h1 radius " + fmt("%.6f", h1.radius) + " (cell " +
                    fmt("%.4f", g.step()) + "), h0 positive " + (hudson ? "yes" : "no") + ", negative " +
                    std::to_string(negative_states) + "/" + std::to_string(tests.size())};
}

Outcome identity_checks() {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> u(-1.5, 1.5);
    double worst = 0.0;
    for (unsigned t = 0; t < 10; ++t) {
        const HermiteState s(oracle::random_state(t % 4, 3000 + t));
        worst = std::max(worst, identities::hlawatsch_nuttall_check(s, {u(rng), u(rng)}).residual);
    }
    const auto two = nodal::inverse_from_s({2.0}, +1, 4);
    const auto two_wrong = nodal::inverse_from_s({2.0}, -1, 4);
    const auto three = nodal::inverse_from_s({3.0}, -1, 4);
    const auto three_wrong = nodal::inverse_from_s({3.0}, +1, 4);
    auto signs = [](const nodal::InverseResult& r, int sigma) {
        for (const auto& s : r.solutions) {
            if (std::fabs(s.origin_value - sigma) > 1e-9) return false;
        }
        return !r.solutions.empty();
    };
    // Fixture states for p = 2 and p = 3 satisfy the same circle systems.
    double fixtures = 0.0;
    for (auto v : nodal::circle_residuals(oracle::f1(), 2.0)) fixtures = std::max(fixtures, std::abs(v));
    for (auto v : nodal::circle_residuals(oracle::f2_vanishing(), 3.0)) fixtures = std::max(fixtures, std::abs(v));
    const bool parity = signs(two, 1) && signs(three, -1) && two_wrong.solutions.empty() &&
                        three_wrong.solutions.empty() && fixtures <= 1e-12 &&
                        nodal::parity_constraint(2) == nodal::Parity::plus &&
                        nodal::parity_constraint(3) == nodal::Parity::minus;
    return {worst <= 1e-6 && parity, "HN max residual " + fmt("%.1e", worst) + "; p=2: " +
                                         std::to_string(two.solutions.size()) + " sigma=+1 orbits, p=3: " +
                                         std::to_string(three.solutions.size()) + " sigma=-1 orbits, opposite signs empty"};
}

Outcome patch_uniqueness() {
    const double hbar = 1.0;
    std::mt19937_64 rng(8);
    std::uniform_real_distribution<double> u(0.0, 1.0);
    const HermiteState h1 = HermiteState::hermite(1, hbar);
    std::vector<nodal::Sample> samples;
    for (int i = 0; i < 100; ++i) {
        const PhasePoint z = polar(0.3 * std::sqrt(hbar) * std::sqrt(u(rng)), 2 * kPi * u(rng));
        samples.push_back({z, wigner::wigner_eval(h1, z).value});
    }
    const auto fit = nodal::fit_from_patch(samples, 1, hbar);
    double sup = 0.0;
    for (int i = 0; i <= 60; ++i) {
        for (int k = 0; k < 96; ++k) {
            const PhasePoint z = polar(3.0 * std::sqrt(hbar) * i / 60, 2 * kPi * k / 96);
            sup = std::max(sup, std::fabs(fit.form.wigner(z) - wigner::wigner_eval(h1, z).value));
        }
    }
    return {sup <= 1e-7, "sup error " + fmt("%.1e", sup) + " on radius 3 disc, fit residual " + fmt("%.1e", fit.residual)};
}

}  // namespace

int main() {
    struct Entry {
        int id;
        const char* name;
        std::function<Outcome()> run;
    };
    bool f2_literal = true;
    const std::vector<Entry> entries{
        {1, "closed form vs quadrature oracle", closed_form_vs_oracle},
        {2, "single circles force h1, h2, h3", reproduce_circles},
        {3, "two-term example states", [&] { return two_term_states(f2_literal); }},
        {4, "exact Laguerre certificates", laguerre_certificates},
        {5, "Laguerre zero structure n<=50, alpha<=10", laguerre_structure},
        {6, "sign uncertainty and Hudson property", sign_uncertainty},
        {7, "Hlawatsch-Nuttall identity and circle parity", identity_checks},
        {8, "uniqueness from a patch", patch_uniqueness},
    };
    // Failures accepted by the exit status: documented errata only.
    std::set<int> unexpected;
    for (const auto& e : entries) {
        const auto t0 = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = e.run();
        } catch (const std::exception& ex) {
            o = {false, std::string("exception: ") + ex.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
        std::printf("[%s] %d %s: %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", e.id, e.name, o.detail.c_str(), secs);
        std::fflush(stdout);
        const bool known = e.id == 3 && !f2_literal;
        if (!o.pass && !known) unexpected.insert(e.id);
    }
    return unexpected.empty() ? 0 : 1;
}
