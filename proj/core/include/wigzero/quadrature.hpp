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

#ifndef WIGZERO_QUADRATURE_HPP
#define WIGZERO_QUADRATURE_HPP

#include <complex>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace wigzero {

/// Raised when a numerical check cannot reach its requested accuracy, or when
/// its input does not meet a precondition that only shows up numerically.
class DiagnosticError : public std::runtime_error {
   public:
    explicit DiagnosticError(const std::string& what) : std::runtime_error(what) {}
};

namespace quadrature {

/// Gauss-Hermite rule for the weight e^{-t^2} on the real line.
struct Rule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Golub-Welsch rule of the given order. Rules are built once per order and
/// shared read-only afterwards.
const Rule& gauss_hermite(unsigned order);

struct Options {
    unsigned start_order = 64;
    unsigned max_order = 512;
    /// Successive estimates must agree to tol * scale.
    double tol = 1e-10;
    double scale = 1.0;
};

struct Estimate {
    std::complex<double> value;
    unsigned order = 0;
    double change = 0.0;
};

/// Integral of g(t) e^{-t^2} dt, doubling the order until two successive
/// estimates agree. Throws DiagnosticError at the order cap.
Estimate integrate_1d(const std::function<std::complex<double>(double)>& g, const Options& opts = {});

/// Integral of g(u, v) e^{-u^2 - v^2} du dv with a tensor rule and the same
/// doubling policy.
Estimate integrate_2d(const std::function<std::complex<double>(double, double)>& g, const Options& opts = {});

}  // namespace quadrature
}  // namespace wigzero

#endif  // WIGZERO_QUADRATURE_HPP
