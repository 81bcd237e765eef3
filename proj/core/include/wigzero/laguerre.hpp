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

#ifndef WIGZERO_LAGUERRE_HPP
#define WIGZERO_LAGUERRE_HPP

#include <vector>

#include "wigzero/polynomial.hpp"

namespace wigzero::laguerre {

/// Generalized Laguerre polynomial L_n^(alpha) for integer alpha >= 0, held
/// exactly. Internally the integer polynomial n! * L_n^(alpha) is stored
/// (shared denominator n!), whose x^j coefficient is
/// (-1)^j * (n!/j!) * C(n+alpha, n-j).
class LaguerrePoly {
   public:
    LaguerrePoly(unsigned n, unsigned alpha);

    unsigned degree() const { return n_; }
    unsigned alpha() const { return alpha_; }

    /// Integer numerators; coefficient j of n! * L_n^(alpha).
    const IntPoly& scaled() const { return scaled_; }
    /// The shared denominator n!.
    const Integer& denominator() const { return denominator_; }
    /// Exact rational coefficients, index j holds the coefficient of x^j.
    std::vector<Rational> coeffs() const;

    Rational eval(const Rational& x) const;
    int sign_at(const Rational& x) const { return scaled_.sign_at(x); }

   private:
    unsigned n_;
    unsigned alpha_;
    IntPoly scaled_;
    Integer denominator_;
};

LaguerrePoly laguerre_coeffs(unsigned n, unsigned alpha);

/// Exact Horner evaluation over the rationals.
Rational laguerre_eval_exact(const LaguerrePoly& p, const Rational& x);

/// Floating evaluation by the three-term recurrence
/// (k+1) L_{k+1} = (2k+1+alpha-x) L_k - (k+alpha) L_{k-1}.
double laguerre_eval(unsigned n, double alpha, double x);
long double laguerre_eval(unsigned n, long double alpha, long double x);

/// Exact isolating interval [lo, hi] of a single simple zero.
struct Bracket {
    Rational lo;
    Rational hi;
};

struct ZeroList {
    /// Strictly increasing zeros.
    std::vector<double> values;
    /// brackets[i] isolates values[i].
    std::vector<Bracket> brackets;
};

/// Zeros of L_n^(alpha), n >= 1. Brackets are built from the brackets of
/// L_{n-1}^(alpha) (interlacing), narrowed by exact bisection and finished by
/// a floating Newton step that must land inside its bracket.
ZeroList laguerre_zeros(unsigned n, unsigned alpha);

/// Zero lists for L_1^(alpha), ..., L_{n_max}^(alpha); element i holds degree i+1.
std::vector<ZeroList> laguerre_zero_chain(unsigned n_max, unsigned alpha);

/// Upper end of the oscillatory region, 4n + 2 alpha + 2.
inline unsigned oscillatory_bound(unsigned n, unsigned alpha) { return 4 * n + 2 * alpha + 2; }

/// True iff L_k^(0) divides L_n^(m) over Q.
bool divides(unsigned k, unsigned n, unsigned m);

enum class Endpoint { open, closed };

struct Interval {
    Rational lo;
    Rational hi;
    Endpoint lo_kind = Endpoint::closed;
    Endpoint hi_kind = Endpoint::closed;
};

/// Exact number of distinct real roots of p in the interval.
int sturm_root_count(const LaguerrePoly& p, const Interval& interval);

/// True iff L_n^(m) has no root in the interval (exact Sturm count).
bool sturm_no_roots(unsigned n, unsigned m, const Interval& interval);

}  // namespace wigzero::laguerre

#endif  // WIGZERO_LAGUERRE_HPP
