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

#include "wigzero/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <map>
#include <memory>
#include <mutex>
#include <numbers>

namespace wigzero::quadrature {

namespace {

Rule build_rule(unsigned order) {
    Eigen::VectorXd diag = Eigen::VectorXd::Zero(order);
    Eigen::VectorXd sub(order > 0 ? order - 1 : 0);
    for (unsigned i = 1; i < order; ++i) {
        sub[i - 1] = std::sqrt(0.5 * static_cast<double>(i));
    }
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
    solver.computeFromTridiagonal(diag, sub, Eigen::ComputeEigenvectors);
    Rule rule;
    rule.nodes.resize(order);
    rule.weights.resize(order);
    const double mu0 = std::sqrt(std::numbers::pi);
    for (unsigned i = 0; i < order; ++i) {
        rule.nodes[i] = solver.eigenvalues()[i];
        const double v = solver.eigenvectors()(0, i);
        rule.weights[i] = mu0 * v * v;
    }
    // Symmetrize: the exact rule is symmetric about 0.
    for (unsigned i = 0; i < order / 2; ++i) {
        const unsigned j = order - 1 - i;
        const double x = 0.5 * (rule.nodes[j] - rule.nodes[i]);
        const double w = 0.5 * (rule.weights[i] + rule.weights[j]);
        rule.nodes[i] = -x;
        rule.nodes[j] = x;
        rule.weights[i] = rule.weights[j] = w;
    }
    if (order % 2 == 1) {
        rule.nodes[order / 2] = 0.0;
    }
    return rule;
}

template <class Eval>
Estimate doubling(const Eval& eval, const Options& opts) {
    if (opts.start_order < 1 || opts.max_order < opts.start_order) {
        throw std::invalid_argument("quadrature: bad order range");
    }
    unsigned order = opts.start_order;
    std::complex<double> prev = eval(order);
    double change = 0.0;
    while (2 * order <= opts.max_order) {
        order *= 2;
        const std::complex<double> cur = eval(order);
        change = std::abs(cur - prev);
        if (change <= opts.tol * opts.scale) {
            return {cur, order, change};
        }
        prev = cur;
    }
    throw DiagnosticError("quadrature: estimates still differ by " + std::to_string(change) + " at order " +
                          std::to_string(order));
}

}  // namespace

const Rule& gauss_hermite(unsigned order) {
    static std::mutex mu;
    static std::map<unsigned, std::unique_ptr<Rule>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& slot = cache[order];
    if (!slot) {
        slot = std::make_unique<Rule>(build_rule(order));
    }
    return *slot;
}

Estimate integrate_1d(const std::function<std::complex<double>(double)>& g, const Options& opts) {
    return doubling(
        [&](unsigned order) {
            const Rule& r = gauss_hermite(order);
            std::complex<double> s = 0.0;
            for (unsigned i = 0; i < order; ++i) {
                s += r.weights[i] * g(r.nodes[i]);
            }
            return s;
        },
        opts);
}

Estimate integrate_2d(const std::function<std::complex<double>(double, double)>& g, const Options& opts) {
    return doubling(
        [&](unsigned order) {
            const Rule& r = gauss_hermite(order);
            std::complex<double> s = 0.0;
            for (unsigned i = 0; i < order; ++i) {
                if (r.weights[i] < 1e-300) continue;
                std::complex<double> row = 0.0;
                for (unsigned j = 0; j < order; ++j) {
                    if (r.weights[j] < 1e-300) continue;
                    row += r.weights[j] * g(r.nodes[i], r.nodes[j]);
                }
                s += r.weights[i] * row;
            }
            return s;
        },
        opts);
}

}  // namespace wigzero::quadrature
