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

#ifndef WIGZERO_POLYNOMIAL_HPP
#define WIGZERO_POLYNOMIAL_HPP

#include <cstddef>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace wigzero {

using Integer = mpz_class;
using Rational = mpq_class;

/// Dense univariate polynomial with arbitrary-precision integer coefficients.
/// Index j holds the coefficient of x^j; the representation is kept trimmed so
/// the zero polynomial has no coefficients at all.
class IntPoly {
   public:
    IntPoly() = default;
    explicit IntPoly(std::vector<Integer> coeffs);

    bool is_zero() const { return coeffs_.empty(); }
    /// Degree of the polynomial; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    const std::vector<Integer>& coeffs() const { return coeffs_; }
    const Integer& leading() const { return coeffs_.back(); }
    const Integer& operator[](std::size_t j) const { return coeffs_[j]; }

    IntPoly derivative() const;
    /// Non-negative gcd of all coefficients (0 for the zero polynomial).
    Integer content() const;
    /// Divides out the content; the sign of the polynomial is preserved.
    IntPoly primitive_part() const;
    IntPoly operator-() const;

    /// Sign of p(x) for a rational x, computed without leaving the integers.
    int sign_at(const Rational& x) const;
    Rational eval(const Rational& x) const;
    /// Sign of p(x) as x -> +inf (s=+1) or x -> -inf (s=-1).
    int sign_at_infinity(int s) const;
    double eval(double x) const;

    std::string to_string() const;

    friend bool operator==(const IntPoly&, const IntPoly&) = default;

   private:
    void trim();
    std::vector<Integer> coeffs_;
};

/// Pseudo-remainder of a by b, scaled by a strictly positive integer so that
/// the sign of the true remainder over Q is preserved (the multiplier is
/// |lc(b)|^k for some k). Precondition: b is not the zero polynomial.
IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b);

/// Sturm sequence p, p', -rem(...), ... built from primitive pseudo-remainders.
std::vector<IntPoly> sturm_chain(const IntPoly& p);

/// Number of sign variations of the chain evaluated at x (zeros skipped).
int sign_variations(const std::vector<IntPoly>& chain, const Rational& x);
int sign_variations_at_infinity(const std::vector<IntPoly>& chain, int s);

/// Number of distinct real roots of the chain's first element in (lo, hi].
int count_roots_half_open(const std::vector<IntPoly>& chain, const Rational& lo, const Rational& hi);

}  // namespace wigzero

#endif  // WIGZERO_POLYNOMIAL_HPP
