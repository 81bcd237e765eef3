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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

#include "wigzero/certificates.hpp"
#include "wigzero/laguerre.hpp"
#include "wigzero/nodal.hpp"
#include "wigzero/parallel.hpp"

namespace wigzero::nodal {

namespace {

constexpr double kPi = std::numbers::pi;

// Circle rows for one s: weights[m][n] = (-1)^n sqrt(n!/(n+m)!) L_n^(m)(s).
using Weights = std::vector<std::vector<double>>;

Weights circle_weights(unsigned N, double s) {
    Weights w(N + 1);
    for (unsigned m = 0; m <= N; ++m) {
        double lm1 = 0.0;
        double l = 1.0;
        for (unsigned n = 0; n + m <= N; ++n) {
            w[m].push_back((n % 2 ? -1.0 : 1.0) * std::exp(0.5 * (std::lgamma(n + 1.0) - std::lgamma(n + m + 1.0))) *
                           l);
            const double next = ((2.0 * n + 1.0 + m - s) * l - (n + m) * lm1) / (n + 1.0);
            lm1 = l;
            l = next;
        }
    }
    return w;
}

// Least-squares problem over the coefficients of one parity sector. The sign
// at the origin and the unit norm together force the other sector to vanish,
// so it is dropped from the unknowns.
class CircleProblem {
   public:
    CircleProblem(std::vector<Weights> weights, std::vector<unsigned> sector, unsigned N)
        : weights_(std::move(weights)), sector_(std::move(sector)), N_(N) {}

    std::size_t vars() const { return 2 * sector_.size(); }
    std::size_t rows() const { return weights_.size() * (2 * N_ + 1) + 1; }

    Coeffs expand(const Eigen::VectorXd& x) const {
        Coeffs c(N_ + 1, Complex(0.0));
        for (std::size_t i = 0; i < sector_.size(); ++i) c[sector_[i]] = Complex(x[2 * i], x[2 * i + 1]);
        return c;
    }

    void eval(const Eigen::VectorXd& x, Eigen::VectorXd& r, Eigen::MatrixXd* J) const {
        const Coeffs c = expand(x);
        r.setZero(rows());
        if (J) J->setZero(rows(), vars());
        std::size_t row = 0;
        for (const Weights& w : weights_) {
            for (unsigned m = 0; m <= N_; ++m) {
                Complex v = 0.0;
                for (unsigned n = 0; n + m <= N_; ++n) v += c[n] * std::conj(c[n + m]) * w[m][n];
                r[row] = v.real();
                if (m > 0) r[row + 1] = v.imag();
                if (J) {
                    for (std::size_t i = 0; i < sector_.size(); ++i) {
                        const unsigned j = sector_[i];
                        Complex dre = 0.0;
                        Complex dim = 0.0;
                        if (j + m <= N_) {
                            dre += w[m][j] * std::conj(c[j + m]);
                            dim += Complex(0.0, 1.0) * w[m][j] * std::conj(c[j + m]);
                        }
                        if (j >= m) {
                            dre += w[m][j - m] * c[j - m];
                            dim -= Complex(0.0, 1.0) * w[m][j - m] * c[j - m];
                        }
                        (*J)(row, 2 * i) = dre.real();
                        (*J)(row, 2 * i + 1) = dim.real();
                        if (m > 0) {
                            (*J)(row + 1, 2 * i) = dre.imag();
                            (*J)(row + 1, 2 * i + 1) = dim.imag();
                        }
                    }
                }
                row += m > 0 ? 2 : 1;
            }
        }
        double norm = 0.0;
        for (const auto& v : c) norm += std::norm(v);
        r[row] = norm - 1.0;
        if (J) {
            for (std::size_t i = 0; i < vars(); ++i) (*J)(row, i) = 2.0 * x[i];
        }
    }

   private:
    std::vector<Weights> weights_;
    std::vector<unsigned> sector_;
    unsigned N_;
};

struct StartResult {
    Coeffs coeffs;
    double residual = 0.0;
    bool converged = false;
};

double max_abs(const Eigen::VectorXd& r) { return r.size() ? r.cwiseAbs().maxCoeff() : 0.0; }

// Levenberg-Marquardt from x.
Eigen::VectorXd levenberg_marquardt(const CircleProblem& prob, Eigen::VectorXd x, unsigned max_it) {
    Eigen::VectorXd r;
    Eigen::MatrixXd J;
    prob.eval(x, r, &J);
    double cost = r.squaredNorm();
    double lambda = 1e-3;
    const Eigen::Index n = x.size();
    for (unsigned it = 0; it < max_it; ++it) {
        if (max_abs(r) < 1e-16) break;
        const Eigen::MatrixXd A = J.transpose() * J;
        const Eigen::VectorXd g = J.transpose() * r;
        bool improved = false;
        while (lambda < 1e16) {
            Eigen::MatrixXd Ad = A;
            for (Eigen::Index i = 0; i < n; ++i) Ad(i, i) += lambda * (A(i, i) + 1e-12);
            const Eigen::VectorXd step = Ad.ldlt().solve(-g);
            const Eigen::VectorXd xn = x + step;
            Eigen::VectorXd rn;
            prob.eval(xn, rn, nullptr);
            const double cn = rn.squaredNorm();
            if (std::isfinite(cn) && cn < cost) {
                const bool tiny = step.norm() <= 1e-16 * (x.norm() + 1e-16);
                x = xn;
                cost = cn;
                lambda = std::max(lambda / 3.0, 1e-15);
                improved = !tiny;
                break;
            }
            lambda *= 4.0;
        }
        if (!improved) break;
        prob.eval(x, r, &J);
    }
    return x;
}

void canonical_phase(Coeffs& c) {
    for (auto it = c.rbegin(); it != c.rend(); ++it) {
        if (std::abs(*it) > 0.0) {
            const Complex ph = std::conj(*it) / std::abs(*it);
            for (auto& v : c) v = v * ph + Complex(0.0, 0.0);
            return;
        }
    }
}

bool lex_less(const Coeffs& a, const Coeffs& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i].real() != b[i].real()) return a[i].real() < b[i].real();
        if (a[i].imag() != b[i].imag()) return a[i].imag() < b[i].imag();
    }
    return false;
}

// Matches s against the zeros of L_k: index of the zero, or -1.
int match_zero(unsigned k, double s, bool* in_bracket) {
    const auto zeros = laguerre::laguerre_zeros(k, 0);
    for (std::size_t i = 0; i < zeros.values.size(); ++i) {
        if (std::fabs(zeros.values[i] - s) <= 1e-10 * std::max(1.0, s)) {
            const Rational q(s);
            *in_bracket = zeros.brackets[i].lo <= q && q <= zeros.brackets[i].hi;
            return static_cast<int>(i);
        }
    }
    *in_bracket = false;
    return -1;
}

}  // namespace

double orbit_distance(std::span<const Complex> a, std::span<const Complex> b) {
    Complex inner = 0.0;
    const std::size_t n = std::max(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i) {
        const Complex x = i < a.size() ? a[i] : Complex(0.0);
        const Complex y = i < b.size() ? b[i] : Complex(0.0);
        inner += x * std::conj(y);
    }
    return std::sqrt(std::max(0.0, 2.0 - 2.0 * std::abs(inner)));
}

InverseResult inverse_from_circles(const std::vector<double>& radii, int sigma, unsigned N_max,
                                   const InverseOptions& opts) {
    if (!(opts.hbar > 0.0)) throw std::invalid_argument("inverse_from_circles: hbar must be positive");
    std::vector<double> svals;
    for (double R : radii) {
        if (!(R > 0.0) || !std::isfinite(R)) throw std::invalid_argument("inverse_from_circles: radii must be positive");
        svals.push_back(s_of_radius(R, opts.hbar));
    }
    return inverse_from_s(svals, sigma, N_max, opts);
}

InverseResult inverse_from_s(const std::vector<double>& svals, int sigma, unsigned N_max,
                             const InverseOptions& opts) {
    if (sigma != 1 && sigma != -1) throw std::invalid_argument("inverse_from_circles: sigma must be +1 or -1");
    if (svals.empty()) throw std::invalid_argument("inverse_from_circles: no circles given");
    if (!(opts.hbar > 0.0)) throw std::invalid_argument("inverse_from_circles: hbar must be positive");
    std::vector<Weights> weights;
    for (double s : svals) {
        if (!(s > 0.0) || !std::isfinite(s)) throw std::invalid_argument("inverse_from_circles: s must be positive");
        weights.push_back(circle_weights(N_max, s));
    }
    std::vector<unsigned> sector;
    for (unsigned n = sigma > 0 ? 0 : 1; n <= N_max; n += 2) sector.push_back(n);

    InverseResult res;
    if (sector.empty()) {
        res.note = "no coefficient of the required parity up to N_max";
        return res;
    }
    const CircleProblem prob(weights, sector, N_max);

    const auto runs = parallel_map<StartResult>(opts.starts, [&](std::size_t start) {
        std::mt19937_64 rng(opts.seed * 0x9e3779b97f4a7c15ULL + start);
        std::normal_distribution<double> gauss;
        Eigen::VectorXd x(prob.vars());
        for (Eigen::Index i = 0; i < x.size(); ++i) x[i] = gauss(rng);
        x /= x.norm();
        x = levenberg_marquardt(prob, x, opts.max_iterations);
        StartResult out;
        Coeffs c = prob.expand(x);
        double nrm = 0.0;
        for (const auto& v : c) nrm += std::norm(v);
        if (!(nrm > 0.0) || !std::isfinite(nrm)) return out;
        double big = 0.0;
        for (auto& v : c) {
            v /= std::sqrt(nrm);
            big = std::max(big, std::abs(v));
        }
        for (auto& v : c) {
            if (std::abs(v) <= 1e-9 * big) v = 0.0;
        }
        while (c.size() > 1 && c.back() == Complex(0.0)) c.pop_back();
        canonical_phase(c);
        double worst = 0.0;
        for (double s : svals) {
            for (const auto& row : circle_residuals(c, s)) worst = std::max(worst, std::abs(row));
        }
        out.coeffs = std::move(c);
        out.residual = worst;
        out.converged = worst <= opts.tol;
        return out;
    });

    std::vector<Solution> orbits;
    for (const auto& run : runs) {
        if (!run.converged) continue;
        ++res.converged_starts;
        bool merged = false;
        for (auto& o : orbits) {
            if (orbit_distance(o.coeffs, run.coeffs) < opts.orbit_tol) {
                ++o.hits;
                if (run.residual < o.residual) {
                    o.coeffs = run.coeffs;
                    o.residual = run.residual;
                }
                merged = true;
                break;
            }
        }
        if (!merged) {
            Solution s;
            s.coeffs = run.coeffs;
            s.residual = run.residual;
            s.hits = 1;
            orbits.push_back(std::move(s));
        }
    }
    std::sort(orbits.begin(), orbits.end(), [](const Solution& a, const Solution& b) {
        if (a.residual != b.residual) return a.residual < b.residual;
        return lex_less(a.coeffs, b.coeffs);
    });

    for (auto& sol : orbits) {
        sol.rank = static_cast<unsigned>(sol.coeffs.size() - 1);
        const HermiteState st(sol.coeffs, opts.hbar);
        sol.origin_value = wigner::wigner_eval(st, {}).value * kPi * opts.hbar;
        for (double s : svals) {
            const double R = radius_of_s(s, opts.hbar);
            for (int a = 0; a < 128; ++a) {
                const double th = 2.0 * kPi * a / 128.0;
                sol.max_circle_value = std::max(
                    sol.max_circle_value, std::fabs(wigner::wigner_eval(st, {R * std::cos(th), R * std::sin(th)}).value));
            }
        }
        unsigned nonzero = 0;
        for (const auto& v : sol.coeffs) nonzero += v != Complex(0.0);
        if (nonzero == 1 && sol.rank >= 1) {
            for (double s : svals) {
                bool inb = false;
                if (match_zero(sol.rank, s, &inb) >= 0 && inb) sol.exact_verified = true;
            }
        }
    }
    res.solutions = std::move(orbits);
    res.unique = res.solutions.size() == 1;
    if (res.solutions.empty()) {
        res.note = "no solution up to N_max";
        return res;
    }
    if (!res.unique) {
        res.note = std::to_string(res.solutions.size()) + " distinct orbits";
        return res;
    }
    const Solution& sol = res.solutions.front();
    const unsigned k = sol.rank;
    res.note = "single orbit across converged starts";
    if (!sol.exact_verified || k < 1 || k > 3) return res;
    // Cross-certify with the exact non-vanishing results for the zeros of L_1,
    // L_2 and the largest zero of L_3 over the searched range.
    bool root_ok = false;
    for (double s : svals) {
        bool inb = false;
        const int idx = match_zero(k, s, &inb);
        if (idx < 0 || !inb) continue;
        root_ok = root_ok || k != 3 || idx == 2;
    }
    if (!root_ok) return res;
    const unsigned range = std::max(N_max, 1u);
    const certificates::Certificate cert = k == 1   ? certificates::verify_A2(range, range)
                                           : k == 2 ? certificates::verify_A3(range, range)
                                                    : certificates::verify_A4(range, range);
    res.uniqueness_certified = cert.passed();
    res.note += res.uniqueness_certified ? "; certified by " + cert.proposition : "; certificate failed";
    return res;
}

}  // namespace wigzero::nodal
