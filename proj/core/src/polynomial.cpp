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

#include "wigzero/polynomial.hpp"

#include <sstream>
#include <stdexcept>
#include <utility>

namespace wigzero {

IntPoly::IntPoly(std::vector<Integer> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void IntPoly::trim() {
    while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) {
        coeffs_.pop_back();
    }
}

IntPoly IntPoly::derivative() const {
    if (coeffs_.size() <= 1) {
        return {};
    }
    std::vector<Integer> d(coeffs_.size() - 1);
    for (std::size_t j = 1; j < coeffs_.size(); ++j) {
        d[j - 1] = coeffs_[j] * static_cast<unsigned long>(j);
    }
    return IntPoly(std::move(d));
}

Integer IntPoly::content() const {
    Integer g = 0;
    for (const auto& c : coeffs_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
        if (g == 1) {
            break;
        }
    }
    return g;
}

IntPoly IntPoly::primitive_part() const {
    const Integer g = content();
    if (g == 0 || g == 1) {
        return *this;
    }
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        mpz_divexact(out[j].get_mpz_t(), coeffs_[j].get_mpz_t(), g.get_mpz_t());
    }
    return IntPoly(std::move(out));
}

IntPoly IntPoly::operator-() const {
    std::vector<Integer> out(coeffs_.size());
    for (std::size_t j = 0; j < coeffs_.size(); ++j) {
        out[j] = -coeffs_[j];
    }
    return IntPoly(std::move(out));
}

int IntPoly::sign_at(const Rational& x) const {
    if (coeffs_.empty()) {
        return 0;
    }
    // x = a/b with b > 0: b^d p(a/b) = sum c_j a^j b^(d-j), evaluated by Horner.
    const Integer& a = x.get_num();
    const Integer& b = x.get_den();
    Integer acc = coeffs_.back();
    Integer bpow = 1;
    for (std::size_t j = coeffs_.size() - 1; j-- > 0;) {
        bpow *= b;
        acc = acc * a + coeffs_[j] * bpow;
    }
    return sgn(acc);
}

Rational IntPoly::eval(const Rational& x) const {
    Rational acc = 0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        acc = acc * x + Rational(coeffs_[j]);
    }
    acc.canonicalize();
    return acc;
}

int IntPoly::sign_at_infinity(int s) const {
    if (coeffs_.empty()) {
        return 0;
    }
    int lead = sgn(coeffs_.back());
    if (s < 0 && degree() % 2 == 1) {
        lead = -lead;
    }
    return lead;
}

double IntPoly::eval(double x) const {
    double acc = 0.0;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        acc = acc * x + coeffs_[j].get_d();
    }
    return acc;
}

std::string IntPoly::to_string() const {
    if (coeffs_.empty()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t j = coeffs_.size(); j-- > 0;) {
        if (sgn(coeffs_[j]) == 0) {
            continue;
        }
        if (!first) {
            os << (sgn(coeffs_[j]) > 0 ? " + " : " - ");
        } else if (sgn(coeffs_[j]) < 0) {
            os << "-";
        }
        first = false;
        Integer mag = abs(coeffs_[j]);
        if (mag != 1 || j == 0) {
            os << mag.get_str();
        }
        if (j >= 1) {
            os << "x";
        }
        if (j >= 2) {
            os << "^" << j;
        }
    }
    return os.str();
}

IntPoly positive_pseudo_remainder(const IntPoly& a, const IntPoly& b) {
    if (b.is_zero()) {
        throw std::invalid_argument("positive_pseudo_remainder: division by the zero polynomial");
    }
    std::vector<Integer> r = a.coeffs();
    const std::vector<Integer>& d = b.coeffs();
    const std::size_t db = d.size() - 1;
    const Integer& lc = d.back();
    int steps = 0;
    while (!r.empty() && r.size() - 1 >= db) {
        const std::size_t shift = r.size() - 1 - db;
        const Integer lead = r.back();
        for (auto& c : r) {
            c *= lc;
        }
        for (std::size_t j = 0; j <= db; ++j) {
            r[j + shift] -= lead * d[j];
        }
        ++steps;
        while (!r.empty() && sgn(r.back()) == 0) {
            r.pop_back();
        }
    }
    if (sgn(lc) < 0 && steps % 2 == 1) {
        for (auto& c : r) {
            c = -c;
        }
    }
    return IntPoly(std::move(r)).primitive_part();
}

std::vector<IntPoly> sturm_chain(const IntPoly& p) {
    std::vector<IntPoly> chain;
    if (p.is_zero()) {
        return chain;
    }
    chain.push_back(p.primitive_part());
    IntPoly d = p.derivative();
    if (d.is_zero()) {
        return chain;
    }
    chain.push_back(d.primitive_part());
    while (true) {
        IntPoly r = positive_pseudo_remainder(chain[chain.size() - 2], chain.back());
        if (r.is_zero()) {
            break;
        }
        chain.push_back(-r);
    }
    return chain;
}

namespace {

template <class SignFn>
int count_variations(const std::vector<IntPoly>& chain, SignFn sign) {
    int variations = 0;
    int last = 0;
    for (const auto& q : chain) {
        const int s = sign(q);
        if (s == 0) {
            continue;
        }
        if (last != 0 && s != last) {
            ++variations;
        }
        last = s;
    }
    return variations;
}

}  // namespace

int sign_variations(const std::vector<IntPoly>& chain, const Rational& x) {
    return count_variations(chain, [&](const IntPoly& q) { return q.sign_at(x); });
}

int sign_variations_at_infinity(const std::vector<IntPoly>& chain, int s) {
    return count_variations(chain, [&](const IntPoly& q) { return q.sign_at_infinity(s); });
}

int count_roots_half_open(const std::vector<IntPoly>& chain, const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) {
        return 0;
    }
    return sign_variations(chain, lo) - sign_variations(chain, hi);
}

}  // namespace wigzero
