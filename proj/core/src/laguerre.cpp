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

#include "wigzero/laguerre.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <optional>
#include <stdexcept>
#include <utility>

namespace wigzero::laguerre {

LaguerrePoly::LaguerrePoly(unsigned n, unsigned alpha) : n_(n), alpha_(alpha) {
    std::vector<Integer> c(n + 1);
    // a_{n,n} = 1 and a_{n,j-1} = a_{n,j} * j * (alpha + j) / (n - j + 1), all exact.
    Integer a = 1;
    for (unsigned j = n + 1; j-- > 0;) {
        c[j] = (j % 2 == 0) ? a : Integer(-a);
        if (j == 0) {
            break;
        }
        a *= static_cast<unsigned long>(j);
        a *= static_cast<unsigned long>(alpha + j);
        mpz_divexact_ui(a.get_mpz_t(), a.get_mpz_t(), n - j + 1);
    }
    scaled_ = IntPoly(std::move(c));
    mpz_fac_ui(denominator_.get_mpz_t(), n);
}

std::vector<Rational> LaguerrePoly::coeffs() const {
    std::vector<Rational> out(n_ + 1);
    for (unsigned j = 0; j <= n_; ++j) {
        out[j] = Rational(scaled_[j], denominator_);
        out[j].canonicalize();
    }
    return out;
}

Rational LaguerrePoly::eval(const Rational& x) const {
    Rational v = scaled_.eval(x) / Rational(denominator_);
    v.canonicalize();
    return v;
}

LaguerrePoly laguerre_coeffs(unsigned n, unsigned alpha) { return LaguerrePoly(n, alpha); }

Rational laguerre_eval_exact(const LaguerrePoly& p, const Rational& x) {
    // Horner directly over the rational coefficients.
    const auto c = p.coeffs();
    Rational acc = 0;
    for (std::size_t j = c.size(); j-- > 0;) {
        acc = acc * x + c[j];
    }
    acc.canonicalize();
    return acc;
}

namespace {

template <class T>
T recurrence(unsigned n, T alpha, T x) {
    if (n == 0) {
        return T(1);
    }
    T prev = T(1);
    T cur = T(1) + alpha - x;
    for (unsigned k = 1; k < n; ++k) {
        const T next = ((T(2 * k + 1) + alpha - x) * cur - (T(k) + alpha) * prev) / T(k + 1);
        prev = cur;
        cur = next;
    }
    return cur;
}

// Returns (L_n, L_n') at x via x L_n' = n L_n - (n + alpha) L_{n-1}.
std::pair<long double, long double> value_and_slope(unsigned n, long double alpha, long double x) {
    const long double ln = recurrence(n, alpha, x);
    const long double lm = recurrence(n - 1, alpha, x);
    return {ln, (static_cast<long double>(n) * ln - (static_cast<long double>(n) + alpha) * lm) / x};
}

Rational midpoint(const Rational& a, const Rational& b) {
    Rational m = (a + b) / 2;
    m.canonicalize();
    return m;
}

// Narrows [lo, hi] around the unique sign change of p until its relative width
// is below 2^-bits. An exact rational zero hit on the way yields a symmetric
// bracket around it.
void bisect(const IntPoly& p, Bracket& br, int bits) {
    int sign_lo = p.sign_at(br.lo);
    const Rational tol_scale = Rational(1, Integer(1) << bits);
    while (true) {
        Rational width = br.hi - br.lo;
        Rational scale = abs(br.hi) > abs(br.lo) ? Rational(abs(br.hi)) : Rational(abs(br.lo));
        if (width <= scale * tol_scale) {
            return;
        }
        Rational mid = midpoint(br.lo, br.hi);
        const int s = p.sign_at(mid);
        if (s == 0) {
            Rational q = width / 8;
            q.canonicalize();
            br.lo = mid - q;
            br.hi = mid + q;
            br.lo.canonicalize();
            br.hi.canonicalize();
            return;
        }
        if (s == sign_lo) {
            br.lo = mid;
        } else {
            br.hi = mid;
        }
    }
}

double polish(const LaguerrePoly& p, Bracket& br) {
    const long double lo = br.lo.get_d();
    const long double hi = br.hi.get_d();
    long double x = (lo + hi) / 2;
    const long double alpha = p.alpha();
    bool ok = true;
    for (int it = 0; it < 12; ++it) {
        auto [v, dv] = value_and_slope(p.degree(), alpha, x);
        if (dv == 0) {
            ok = false;
            break;
        }
        const long double step = v / dv;
        x -= step;
        if (!(x >= lo && x <= hi)) {
            ok = false;
            break;
        }
        if (std::fabs(step) <= 1e-19L * std::fabs(x)) {
            break;
        }
    }
    if (ok) {
        return static_cast<double>(x);
    }
    Bracket fine = br;
    bisect(p.scaled(), fine, 60);
    return midpoint(fine.lo, fine.hi).get_d();
}

constexpr int kBracketBits = 24;

// Newton-polished eigenvalues of the Jacobi matrix, in increasing order.
std::vector<long double> estimate_zeros(unsigned n, unsigned alpha) {
    Eigen::VectorXd diag(n);
    Eigen::VectorXd off(n > 1 ? n - 1 : 0);
    for (unsigned k = 0; k < n; ++k) {
        diag[k] = 2.0 * k + 1.0 + alpha;
        if (k + 1 < n) {
            off[k] = std::sqrt((k + 1.0) * (k + 1.0 + alpha));
        }
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, off, Eigen::EigenvaluesOnly);
    std::vector<long double> xs(n);
    for (unsigned i = 0; i < n; ++i) {
        long double x = solver.eigenvalues()[i];
        for (int it = 0; it < 4 && x > 0; ++it) {
            auto [v, dv] = value_and_slope(n, alpha, x);
            if (dv == 0) {
                break;
            }
            x -= v / dv;
        }
        xs[i] = x;
    }
    return xs;
}

// Disjoint brackets around the estimates with an exact sign change in each.
// n disjoint sign changes of a degree-n polynomial isolate all of its zeros.
std::optional<std::vector<Bracket>> isolate_from_estimates(const LaguerrePoly& p) {
    const auto xs = estimate_zeros(p.degree(), p.alpha());
    const double nu = oscillatory_bound(p.degree(), p.alpha());
    for (double rel : {0x1p-30, 0x1p-20, 0x1p-12}) {
        std::vector<Bracket> out;
        out.reserve(xs.size());
        double prev_hi = 0.0;
        bool ok = true;
        for (long double x : xs) {
            const double lo = static_cast<double>(x) * (1.0 - rel);
            const double hi = static_cast<double>(x) * (1.0 + rel);
            if (!(lo > prev_hi) || !(hi < nu)) {
                ok = false;
                break;
            }
            Bracket br{Rational(lo), Rational(hi)};
            const int a = p.sign_at(br.lo);
            const int b = p.sign_at(br.hi);
            if (a == 0 || b == 0 || a == b) {
                ok = false;
                break;
            }
            out.push_back(std::move(br));
            prev_hi = hi;
        }
        if (ok) {
            return out;
        }
    }
    return std::nullopt;
}

// Isolation through the zeros of L_{n-1}: 0, those zeros and nu separate the
// zeros of L_n.
std::vector<Bracket> isolate_by_interlacing(const LaguerrePoly& p, const std::vector<Bracket>& prev_brackets) {
    const unsigned n = p.degree();
    const IntPoly& poly = p.scaled();
    std::vector<Rational> left_ends{Rational(0)};
    std::vector<Rational> right_ends;
    if (n >= 2) {
        const LaguerrePoly prev(n - 1, p.alpha());
        for (Bracket br : prev_brackets) {
            int sign_prev_lo = prev.sign_at(br.lo);
            while (true) {
                const int a = poly.sign_at(br.lo);
                const int b = poly.sign_at(br.hi);
                if (a != 0 && a == b) {
                    break;
                }
                Rational mid = midpoint(br.lo, br.hi);
                const int s = prev.sign_at(mid);
                if (s == 0) {
                    // Exact zero of L_{n-1}; L_n cannot vanish there.
                    br.lo = mid;
                    br.hi = mid;
                    break;
                }
                if (s == sign_prev_lo) {
                    br.lo = mid;
                } else {
                    br.hi = mid;
                }
            }
            right_ends.push_back(br.lo);
            left_ends.push_back(br.hi);
        }
    }
    right_ends.push_back(Rational(oscillatory_bound(n, p.alpha())));

    std::vector<Bracket> out;
    out.reserve(n);
    for (unsigned i = 0; i < n; ++i) {
        Bracket br{left_ends[i], right_ends[i]};
        const int a = poly.sign_at(br.lo);
        const int b = poly.sign_at(br.hi);
        if (a == 0 || b == 0 || a == b) {
            throw std::logic_error("laguerre_zeros: interlacing separators failed to isolate a zero");
        }
        bisect(poly, br, kBracketBits);
        out.push_back(std::move(br));
    }
    return out;
}

}  // namespace

double laguerre_eval(unsigned n, double alpha, double x) { return recurrence(n, alpha, x); }

long double laguerre_eval(unsigned n, long double alpha, long double x) { return recurrence(n, alpha, x); }

std::vector<ZeroList> laguerre_zero_chain(unsigned n_max, unsigned alpha) {
    std::vector<ZeroList> chain;
    chain.reserve(n_max);
    for (unsigned n = 1; n <= n_max; ++n) {
        const LaguerrePoly p(n, alpha);
        auto fast = isolate_from_estimates(p);
        std::vector<Bracket> brackets =
            fast ? std::move(*fast)
                 : isolate_by_interlacing(p, n >= 2 ? chain.back().brackets : std::vector<Bracket>{});
        ZeroList zeros;
        zeros.values.reserve(n);
        for (auto& br : brackets) {
            zeros.values.push_back(polish(p, br));
        }
        zeros.brackets = std::move(brackets);
        chain.push_back(std::move(zeros));
    }
    return chain;
}

ZeroList laguerre_zeros(unsigned n, unsigned alpha) {
    if (n == 0) {
        throw std::invalid_argument("laguerre_zeros: degree must be at least 1");
    }
    return std::move(laguerre_zero_chain(n, alpha).back());
}

bool divides(unsigned k, unsigned n, unsigned m) {
    if (k > n) {
        return false;
    }
    const IntPoly divisor = LaguerrePoly(k, 0).scaled().primitive_part();
    const IntPoly dividend = LaguerrePoly(n, m).scaled().primitive_part();
    return positive_pseudo_remainder(dividend, divisor).is_zero();
}

int sturm_root_count(const LaguerrePoly& p, const Interval& interval) {
    if (interval.hi < interval.lo) {
        throw std::invalid_argument("sturm_root_count: empty interval");
    }
    const IntPoly& poly = p.scaled();
    const bool root_lo = poly.sign_at(interval.lo) == 0;
    const bool root_hi = poly.sign_at(interval.hi) == 0;
    if (interval.lo == interval.hi) {
        const bool closed = interval.lo_kind == Endpoint::closed && interval.hi_kind == Endpoint::closed;
        return closed && root_lo ? 1 : 0;
    }
    int count = count_roots_half_open(sturm_chain(poly), interval.lo, interval.hi);
    if (interval.lo_kind == Endpoint::closed && root_lo) {
        ++count;
    }
    if (interval.hi_kind == Endpoint::open && root_hi) {
        --count;
    }
    return count;
}

bool sturm_no_roots(unsigned n, unsigned m, const Interval& interval) {
    return sturm_root_count(LaguerrePoly(n, m), interval) == 0;
}

}  // namespace wigzero::laguerre
