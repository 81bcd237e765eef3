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

#include "wigzero/certificates.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>

#include "wigzero/laguerre.hpp"
#include "wigzero/parallel.hpp"

namespace wigzero::certificates {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

// Signed coefficients (-1)^j a_{n,j}^(m) of n! L_n^(m).
const std::vector<Integer>& signed_a(const laguerre::LaguerrePoly& p) { return p.scaled().coeffs(); }

long as_long(unsigned v) { return static_cast<long>(v); }

Witness witness(std::string label, std::vector<long> params, std::vector<Integer> values) {
    return Witness{std::move(label), std::move(params), std::move(values)};
}

// True iff v = target (mod modulus), with the usual non-negative residues.
bool congruent(const Integer& v, const Integer& target, const Integer& modulus) {
    Integer d = v - target;
    Integer r;
    mpz_mod(r.get_mpz_t(), d.get_mpz_t(), modulus.get_mpz_t());
    return r == 0;
}

Integer signed_power(unsigned n, const Integer& base) {
    Integer p;
    mpz_pow_ui(p.get_mpz_t(), base.get_mpz_t(), n);
    return n % 2 == 0 ? p : Integer(-p);
}

// Runs body(n) for n in [1, n_max] in parallel, one certificate per n.
template <class Body>
Certificate scan_rows(const std::string& proposition, std::vector<std::pair<std::string, long>> range,
                      unsigned n_max, Body body) {
    const auto start = Clock::now();
    std::vector<Certificate> parts =
        parallel_map<Certificate>(n_max, [&](std::size_t i) { return body(static_cast<unsigned>(i + 1)); });
    Certificate merged = merge(proposition, std::move(range), std::move(parts));
    merged.runtime_ms = elapsed_ms(start);
    return merged;
}

void require_bounds(unsigned a, unsigned b, const char* who) {
    if (a < 1 || b < 1) {
        throw std::invalid_argument(std::string(who) + ": bounds must be at least 1");
    }
}

}  // namespace

Certificate merge(std::string proposition, std::vector<std::pair<std::string, long>> range,
                  std::vector<Certificate> parts) {
    Certificate out;
    out.proposition = std::move(proposition);
    out.range = std::move(range);
    for (auto& part : parts) {
        for (auto& w : part.witnesses) {
            out.witnesses.push_back(std::move(w));
        }
        for (auto& f : part.failures) {
            out.failures.push_back(std::move(f));
        }
        out.runtime_ms += part.runtime_ms;
    }
    std::stable_sort(out.witnesses.begin(), out.witnesses.end(), [](const Witness& a, const Witness& b) {
        return std::tie(a.params, a.label) < std::tie(b.params, b.label);
    });
    std::stable_sort(out.failures.begin(), out.failures.end(), [](const Failure& a, const Failure& b) {
        return std::tie(a.params, a.reason) < std::tie(b.params, b.reason);
    });
    return out;
}

Integer u_value(unsigned n, unsigned m) {
    const laguerre::LaguerrePoly p(n, m);
    Integer sum = 0;
    for (const auto& c : signed_a(p)) {
        sum += c;
    }
    return sum;
}

Integer v_value(unsigned n, unsigned m, unsigned long xbar) { return v_value(n, m, Integer(xbar), Integer(1)); }

Integer v_value(unsigned n, unsigned m, const Integer& a, const Integer& b) {
    const laguerre::LaguerrePoly p(n, m);
    const auto& c = signed_a(p);
    // sum_j c_j a^j b^(n-j) by Horner.
    Integer acc = c.empty() ? Integer(0) : c.back();
    Integer bpow = 1;
    for (std::size_t j = c.size() - 1; j-- > 0;) {
        bpow *= b;
        acc = acc * a + c[j] * bpow;
    }
    // Degree n is exact (leading coefficient (-1)^n), so no trailing b factor is lost.
    return acc;
}

bool admissible_rank(unsigned long xbar, unsigned long n) {
    if (xbar == 0 || n == 0) {
        throw std::invalid_argument("admissible_rank: arguments must be positive");
    }
    unsigned long rest = n;
    for (unsigned long p = 2; p * p <= rest; ++p) {
        if (rest % p != 0) {
            continue;
        }
        if (xbar % p != 0) {
            return false;
        }
        while (rest % p == 0) {
            rest /= p;
        }
    }
    return rest == 1 || xbar % rest == 0;
}

std::vector<std::pair<Integer, Integer>> ab_sequence(unsigned j_max) {
    std::vector<std::pair<Integer, Integer>> seq;
    seq.reserve(j_max + 1);
    seq.emplace_back(1, 0);
    for (unsigned j = 0; j < j_max; ++j) {
        const auto& [a, b] = seq.back();
        Integer next_a = 2 * (a + b);
        Integer next_b = a + 2 * b;
        seq.emplace_back(std::move(next_a), std::move(next_b));
    }
    return seq;
}

std::pair<Integer, Integer> ab_pair(unsigned j) { return ab_sequence(j).back(); }

std::vector<std::array<Integer, 3>> abc_sequence(unsigned j_max) {
    std::vector<std::array<Integer, 3>> seq;
    seq.reserve(j_max + 1);
    seq.push_back({Integer(1), Integer(0), Integer(0)});
    for (unsigned j = 0; j < j_max; ++j) {
        const auto& [a, b, c] = seq.back();
        std::array<Integer, 3> next{3 * (a + 2 * b + 2 * c), a + 3 * (b + c), b + 3 * c};
        seq.push_back(std::move(next));
    }
    return seq;
}

std::array<Integer, 3> abc_triple(unsigned j) { return abc_sequence(j).back(); }

namespace {

std::pair<Integer, Integer> ab_sums_with(unsigned n, unsigned m, const std::vector<std::pair<Integer, Integer>>& ab) {
    const laguerre::LaguerrePoly p(n, m);
    const auto& c = signed_a(p);
    Integer x = 0;
    Integer y = 0;
    for (std::size_t j = 0; j < c.size(); ++j) {
        x += c[j] * ab[j].first;
        y += c[j] * ab[j].second;
    }
    return {x, y};
}

std::array<Integer, 3> abc_sums_with(unsigned n, unsigned m, const std::vector<std::array<Integer, 3>>& abc) {
    const laguerre::LaguerrePoly p(n, m);
    const auto& c = signed_a(p);
    std::array<Integer, 3> s{Integer(0), Integer(0), Integer(0)};
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (int i = 0; i < 3; ++i) {
            s[i] += c[j] * abc[j][i];
        }
    }
    return s;
}

}  // namespace

std::pair<Integer, Integer> ab_sums(unsigned n, unsigned m) { return ab_sums_with(n, m, ab_sequence(n)); }

std::array<Integer, 3> abc_sums(unsigned n, unsigned m) { return abc_sums_with(n, m, abc_sequence(n)); }

Certificate verify_A1(unsigned n_max, unsigned m_max) {
    require_bounds(n_max, m_max, "verify_A1");
    using laguerre::Endpoint;
    const laguerre::Interval half_open{Rational(0), Rational(1), Endpoint::closed, Endpoint::open};
    const laguerre::Interval closed{Rational(0), Rational(1), Endpoint::closed, Endpoint::closed};
    return scan_rows("A1", {{"n_max", n_max}, {"m_max", m_max}}, n_max, [&](unsigned n) {
        Certificate part;
        for (unsigned m = n - 1; m <= m_max; ++m) {
            const laguerre::LaguerrePoly p(n, m);
            const std::vector<long> params{as_long(n), as_long(m)};
            // Positive at 0 (constant term C(n+m, n)) and root-free on [0, 1) gives positivity.
            if (sgn(p.scaled()[0]) <= 0 || laguerre::sturm_root_count(p, half_open) != 0) {
                part.failures.push_back({params, "root or non-positive value in [0,1)"});
                continue;
            }
            const int at_one = laguerre::sturm_root_count(p, closed);
            if (n == 1 && m == 0) {
                if (at_one == 1) {
                    part.witnesses.push_back(witness("designated_root_at_1", params, {Integer(0)}));
                } else {
                    part.failures.push_back({params, "L_1 must vanish at 1"});
                }
            } else if (at_one != 0) {
                part.failures.push_back({params, "root at x = 1"});
            } else if (n <= 2 && m <= 2) {
                part.witnesses.push_back(witness("L(0)*n!", params, {p.scaled()[0]}));
            }
        }
        return part;
    });
}

Certificate verify_A2(unsigned n_max, unsigned m_max) {
    require_bounds(n_max, m_max, "verify_A2");
    return scan_rows("A2", {{"n_max", n_max}, {"m_max", m_max}}, n_max, [&](unsigned n) {
        Certificate part;
        const Integer modulus(n);
        const Integer expected = n % 2 == 0 ? Integer(1) : Integer(-1);
        for (unsigned m = 0; m <= m_max; ++m) {
            const Integer u = u_value(n, m);
            const std::vector<long> params{as_long(n), as_long(m)};
            const bool designated = n == 1 && m == 0;
            if (sgn(u) == 0) {
                if (designated) {
                    part.witnesses.push_back(witness("designated_zero", params, {u}));
                } else {
                    part.failures.push_back({params, "u vanishes"});
                }
            } else if (designated) {
                part.failures.push_back({params, "u_1^(0) must vanish"});
            }
            if (!congruent(u, expected, modulus)) {
                part.failures.push_back({params, "u != (-1)^n mod n"});
            }
            if (n <= 2 && m <= 2 && !designated) {
                part.witnesses.push_back(witness("u", params, {u}));
            }
        }
        return part;
    });
}

Certificate verify_A3(unsigned n_max, unsigned m_max) {
    require_bounds(n_max, m_max, "verify_A3");
    const auto ab = ab_sequence(n_max);
    return scan_rows("A3", {{"n_max", n_max}, {"m_max", m_max}}, n_max, [&](unsigned n) {
        Certificate part;
        for (unsigned m = 0; m <= m_max; ++m) {
            auto [x, y] = ab_sums_with(n, m, ab);
            const std::vector<long> params{as_long(n), as_long(m)};
            const bool zero = sgn(x) == 0 && sgn(y) == 0;
            const bool designated = n == 2 && m == 0;
            if (zero && designated) {
                part.witnesses.push_back(witness("designated_zero", params, {x, y}));
            } else if (zero) {
                part.failures.push_back({params, "(X, Y) = (0, 0)"});
            } else if (designated) {
                part.failures.push_back({params, "L_2 must vanish at 2 - sqrt(2)"});
            } else if (n <= 2 && m <= 1) {
                part.witnesses.push_back(witness("XY", params, {x, y}));
            }
        }
        return part;
    });
}

Certificate verify_A4(unsigned n_max, unsigned m_max) {
    require_bounds(n_max, m_max, "verify_A4");
    const auto abc = abc_sequence(n_max);
    return scan_rows("A4", {{"n_max", n_max}, {"m_max", m_max}}, n_max, [&](unsigned n) {
        Certificate part;
        for (unsigned m = 0; m <= m_max; ++m) {
            auto s = abc_sums_with(n, m, abc);
            const std::vector<long> params{as_long(n), as_long(m)};
            const bool zero = sgn(s[0]) == 0 && sgn(s[1]) == 0 && sgn(s[2]) == 0;
            const bool designated = n == 3 && m == 0;
            if (zero && designated) {
                part.witnesses.push_back(witness("designated_zero", params, {s[0], s[1], s[2]}));
            } else if (zero) {
                part.failures.push_back({params, "all three sums vanish"});
            } else if (designated) {
                part.failures.push_back({params, "L_3 must vanish at its largest zero"});
            } else if (n <= 3 && m <= 1) {
                part.witnesses.push_back(witness("ABC", params, {s[0], s[1], s[2]}));
            }
        }
        return part;
    });
}

Certificate verify_A5(unsigned n_max, unsigned m_max, unsigned x_max, unsigned den_max) {
    require_bounds(n_max, m_max, "verify_A5");
    if (x_max < 1) {
        throw std::invalid_argument("verify_A5: x_max must be at least 1");
    }
    return scan_rows(
        "A5", {{"n_max", n_max}, {"m_max", m_max}, {"x_max", x_max}, {"den_max", den_max}}, n_max, [&](unsigned n) {
            Certificate part;
            const Integer modulus(n);
            for (unsigned m = 0; m <= m_max; ++m) {
                for (unsigned long xbar = 1; xbar <= x_max; ++xbar) {
                    const Integer v = v_value(n, m, xbar);
                    const std::vector<long> params{as_long(n), as_long(m), static_cast<long>(xbar), 1};
                    if (!congruent(v, signed_power(n, Integer(xbar)), modulus)) {
                        part.failures.push_back({params, "v != (-1)^n xbar^n mod n"});
                    }
                    if (sgn(v) == 0) {
                        if (admissible_rank(xbar, n)) {
                            part.witnesses.push_back(witness("integer_root", params, {v}));
                        } else {
                            part.failures.push_back({params, "root at xbar with inadmissible rank"});
                        }
                    }
                }
                for (unsigned long b = 2; b <= den_max; ++b) {
                    for (unsigned long a = 1; a <= x_max * b; ++a) {
                        if (std::gcd(a, b) != 1) {
                            continue;
                        }
                        const Integer v = v_value(n, m, Integer(a), Integer(b));
                        const std::vector<long> params{as_long(n), as_long(m), static_cast<long>(a),
                                                       static_cast<long>(b)};
                        if (sgn(v) == 0) {
                            part.failures.push_back({params, "non-integer rational root"});
                        }
                        if (!congruent(v, signed_power(n, Integer(a)), Integer(b))) {
                            part.failures.push_back({params, "v != (-1)^n a^n mod b"});
                        }
                    }
                }
            }
            return part;
        });
}

Certificate scan_conjecture_A1(unsigned k_max, unsigned n_max, unsigned m_max) {
    require_bounds(k_max, n_max, "scan_conjecture_A1");
    return scan_rows("ConjA1-scan", {{"k_max", k_max}, {"n_max", n_max}, {"m_max", m_max}}, k_max,
                     [&](unsigned k) {
                         Certificate part;
                         for (unsigned n = k; n <= n_max; ++n) {
                             for (unsigned m = 0; m <= m_max; ++m) {
                                 if (!laguerre::divides(k, n, m)) {
                                     continue;
                                 }
                                 const std::vector<long> params{as_long(k), as_long(n), as_long(m)};
                                 if (n == k && m == 0) {
                                     part.witnesses.push_back(witness("trivial_hit", params, {}));
                                 } else {
                                     part.failures.push_back({params, "L_k divides L_n^(m) non-trivially"});
                                 }
                             }
                         }
                         return part;
                     });
}

Certificate verify(const std::string& proposition, unsigned n_max, unsigned m_max, unsigned k_max, unsigned x_max) {
    if (proposition == "A1") {
        return verify_A1(n_max, m_max);
    }
    if (proposition == "A2") {
        return verify_A2(n_max, m_max);
    }
    if (proposition == "A3") {
        return verify_A3(n_max, m_max);
    }
    if (proposition == "A4") {
        return verify_A4(n_max, m_max);
    }
    if (proposition == "A5") {
        return verify_A5(n_max, m_max, x_max == 0 ? 16 : x_max);
    }
    if (proposition == "ConjA1-scan" || proposition == "ConjA1") {
        return scan_conjecture_A1(k_max == 0 ? n_max : k_max, n_max, m_max);
    }
    throw std::invalid_argument("unknown proposition id: " + proposition);
}

}  // namespace wigzero::certificates
