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

#ifndef WIGZERO_CERTIFICATES_HPP
#define WIGZERO_CERTIFICATES_HPP

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "wigzero/polynomial.hpp"

namespace wigzero::certificates {

struct Witness {
    std::string label;
    std::vector<long> params;
    std::vector<Integer> values;
};

struct Failure {
    std::vector<long> params;
    std::string reason;
};

/// Record of an exhaustive exact verification over a finite parameter range.
/// The verdict is derived: a certificate passes iff it carries no failures.
struct Certificate {
    std::string proposition;
    std::vector<std::pair<std::string, long>> range;
    std::vector<Witness> witnesses;
    std::vector<Failure> failures;
    double runtime_ms = 0.0;

    bool passed() const { return failures.empty(); }
};

/// Combines partition certificates; witnesses and failures are sorted by
/// parameters so the result does not depend on how the range was split.
Certificate merge(std::string proposition, std::vector<std::pair<std::string, long>> range,
                  std::vector<Certificate> parts);

/// u_n^(m) = n! L_n^(m)(1), the alternating sum of a_{n,j}^(m) = (n!/j!) C(n+m, n-j).
Integer u_value(unsigned n, unsigned m);

/// v_n^(m) = n! L_n^(m)(xbar) for a positive integer xbar.
Integer v_value(unsigned n, unsigned m, unsigned long xbar);

/// n! b^n L_n^(m)(a/b), an integer for any integers a, b.
Integer v_value(unsigned n, unsigned m, const Integer& a, const Integer& b);

/// True iff every prime factor of n divides xbar.
bool admissible_rank(unsigned long xbar, unsigned long n);

/// (A_j, B_j) with A_j - B_j sqrt(2) = (2 - sqrt(2))^j.
std::pair<Integer, Integer> ab_pair(unsigned j);
std::vector<std::pair<Integer, Integer>> ab_sequence(unsigned j_max);

/// (A_j, B_j, C_j) with x1^j = A_j + B_j s + C_j t, where x1 is the largest
/// zero of L_3, s = x1 - 3 and t = s^2 - 6.
std::array<Integer, 3> abc_triple(unsigned j);
std::vector<std::array<Integer, 3>> abc_sequence(unsigned j_max);

/// (X_n^(m), Y_n^(m)) = sum_j (-1)^j a_{n,j}^(m) (A_j, B_j); both vanish iff
/// L_n^(m)(2 - sqrt(2)) = 0.
std::pair<Integer, Integer> ab_sums(unsigned n, unsigned m);

/// The three alternating sums against A_j, B_j, C_j; all vanish iff L_n^(m)(x1) = 0.
std::array<Integer, 3> abc_sums(unsigned n, unsigned m);

/// L_n^(m) > 0 on [0, 1) whenever m >= n - 1, and at x = 1 unless (n, m) = (1, 0).
Certificate verify_A1(unsigned n_max, unsigned m_max);
/// u_n^(m) != 0 except at (1, 0), and u_n^(m) = (-1)^n (mod n).
Certificate verify_A2(unsigned n_max, unsigned m_max);
/// (X, Y) = (0, 0) only at (n, m) = (2, 0).
Certificate verify_A3(unsigned n_max, unsigned m_max);
/// All three abc sums vanish only at (n, m) = (3, 0).
Certificate verify_A4(unsigned n_max, unsigned m_max);
/// Rational roots of L_n^(m) are integers xbar and force admissible_rank(xbar, n).
/// Integer candidates 1..x_max and fractions a/b with 2 <= b <= den_max, a/b <= x_max.
Certificate verify_A5(unsigned n_max, unsigned m_max, unsigned x_max, unsigned den_max = 4);
/// Exhaustive divisibility scan; passes iff L_k | L_n^(m) only for (k, k, 0).
Certificate scan_conjecture_A1(unsigned k_max, unsigned n_max, unsigned m_max);

/// Dispatches on the proposition id (A1..A5, ConjA1-scan).
Certificate verify(const std::string& proposition, unsigned n_max, unsigned m_max, unsigned k_max = 0,
                   unsigned x_max = 0);

}  // namespace wigzero::certificates

#endif  // WIGZERO_CERTIFICATES_HPP
