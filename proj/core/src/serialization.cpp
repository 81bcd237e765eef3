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

#include "wigzero/serialization.hpp"

#include <cmath>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace wigzero::io {

using nlohmann::ordered_json;

namespace {

// Adding 0.0 folds -0.0 into 0.0.
ordered_json complex_json(const Complex& c) { return ordered_json{{"re", c.real() + 0.0}, {"im", c.imag() + 0.0}}; }

ordered_json coeffs_json(const Coeffs& coeffs) {
    ordered_json a = ordered_json::array();
    for (const auto& c : coeffs) a.push_back(complex_json(c));
    return a;
}

ordered_json point_json(const PhasePoint& z) { return ordered_json::array({z.x, z.p}); }

ordered_json state_json(const HermiteState& s) {
    const Mat2& m = s.frame().matrix();
    return ordered_json{{"hbar", s.hbar()},
                        {"coeffs", coeffs_json(s.coeffs())},
                        {"center", point_json(s.center())},
                        {"frame", ordered_json::array({ordered_json::array({m.a, m.b}), ordered_json::array({m.c, m.d})})}};
}

double number_at(const ordered_json& j, const char* what) {
    if (!j.is_number()) throw ParseError(std::string("state JSON: ") + what + " must be a number");
    return j.get<double>();
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

}  // namespace

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string state_to_json(const HermiteState& state) { return dump(state_json(state)); }

HermiteState state_from_json(const std::string& text, bool renormalize) {
    ordered_json j;
    try {
        j = ordered_json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
        throw ParseError(std::string("state JSON: ") + e.what());
    }
    if (!j.is_object()) throw ParseError("state JSON: top level must be an object");
    const double hbar = j.contains("hbar") ? number_at(j["hbar"], "hbar") : 1.0;
    if (!(hbar > 0.0)) throw ParseError("state JSON: hbar must be positive");
    if (!j.contains("coeffs") || !j["coeffs"].is_array()) throw ParseError("state JSON: coeffs must be an array");
    Coeffs coeffs;
    for (const auto& c : j["coeffs"]) {
        if (c.is_number()) {
            coeffs.emplace_back(c.get<double>(), 0.0);
        } else if (c.is_object()) {
            const double re = c.contains("re") ? number_at(c["re"], "re") : 0.0;
            const double im = c.contains("im") ? number_at(c["im"], "im") : 0.0;
            coeffs.emplace_back(re, im);
        } else {
            throw ParseError("state JSON: each coefficient must be {re, im} or a number");
        }
    }
    while (!coeffs.empty() && coeffs.back() == Complex(0.0)) coeffs.pop_back();
    if (coeffs.empty()) throw ParseError("state JSON: coefficient list is empty");
    PhasePoint center;
    if (j.contains("center")) {
        const auto& c = j["center"];
        if (!c.is_array() || c.size() != 2) throw ParseError("state JSON: center must be [x, p]");
        center = {number_at(c[0], "center"), number_at(c[1], "center")};
    }
    SymplecticMat2 frame;
    if (j.contains("frame")) {
        const auto& f = j["frame"];
        if (!f.is_array() || f.size() != 2 || !f[0].is_array() || !f[1].is_array() || f[0].size() != 2 ||
            f[1].size() != 2) {
            throw ParseError("state JSON: frame must be [[a, b], [c, d]]");
        }
        try {
            frame = SymplecticMat2(number_at(f[0][0], "frame"), number_at(f[0][1], "frame"),
                                   number_at(f[1][0], "frame"), number_at(f[1][1], "frame"));
        } catch (const std::domain_error& e) {
            throw ParseError(std::string("state JSON: ") + e.what());
        }
    }
    double norm = 0.0;
    for (const auto& c : coeffs) norm += std::norm(c);
    if (std::fabs(norm - 1.0) > kNormAccept && !renormalize) {
        throw ParseError("state JSON: sum |b_n|^2 = " + format_double(norm) +
                         " is not 1; pass --renormalize to rescale");
    }
    try {
        // Within the state's own tolerance the values are kept bit for bit.
        if (std::fabs(norm - 1.0) <= HermiteState::kNormTolerance) {
            return HermiteState(std::move(coeffs), hbar, center, frame);
        }
        return HermiteState::normalized(std::move(coeffs), hbar, center, frame);
    } catch (const std::exception& e) {
        throw ParseError(std::string("state JSON: ") + e.what());
    }
}

std::string state_digest(const HermiteState& state) {
    const std::string s = state_json(state).dump();
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char ch : s) {
        h ^= ch;
        h *= 0x100000001b3ULL;
    }
    char buf[17];
    std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
    return buf;
}

std::string certificate_to_json(const certificates::Certificate& cert, bool with_runtime) {
    ordered_json range = ordered_json::object();
    for (const auto& [k, v] : cert.range) range[k] = v;
    ordered_json failures = ordered_json::array();
    for (const auto& f : cert.failures) failures.push_back({{"params", f.params}, {"reason", f.reason}});
    ordered_json witnesses = ordered_json::array();
    for (const auto& w : cert.witnesses) {
        ordered_json vals = ordered_json::array();
        // Exact integers can exceed 64 bits; keep them as decimal strings.
        for (const auto& v : w.values) vals.push_back(v.get_str());
        witnesses.push_back({{"label", w.label}, {"params", w.params}, {"values", vals}});
    }
    ordered_json j{{"proposition", cert.proposition},
                   {"range", range},
                   {"verdict", cert.passed() ? "pass" : "fail"},
                   {"failures", failures},
                   {"witnesses", witnesses}};
    if (with_runtime) j["runtime_ms"] = cert.runtime_ms;
    return dump(j);
}

std::string zeros_to_json(unsigned n, unsigned alpha, const laguerre::ZeroList& zeros) {
    ordered_json br = ordered_json::array();
    for (const auto& b : zeros.brackets) br.push_back(ordered_json::array({b.lo.get_str(), b.hi.get_str()}));
    return dump(ordered_json{{"n", n}, {"alpha", alpha}, {"values", zeros.values}, {"brackets", br}});
}

std::string grid_to_csv(const wigner::GridValues& grid) {
    std::ostringstream out;
    out << "x,p,value\n";
    for (unsigned j = 0; j < grid.spec.size; ++j) {
        for (unsigned i = 0; i < grid.spec.size; ++i) {
            const PhasePoint z = grid.spec.point(i, j);
            out << format_double(z.x) << ',' << format_double(z.p) << ',' << format_double(grid.at(i, j)) << '\n';
        }
    }
    return out.str();
}

std::string grid_to_json(const wigner::GridValues& grid, const HermiteState& state) {
    ordered_json rows = ordered_json::array();
    for (unsigned j = 0; j < grid.spec.size; ++j) {
        ordered_json row = ordered_json::array();
        for (unsigned i = 0; i < grid.spec.size; ++i) row.push_back(grid.at(i, j));
        rows.push_back(std::move(row));
    }
    ordered_json g{{"size", grid.spec.size}, {"radius", grid.spec.radius}, {"center", point_json(grid.spec.center)}};
    return dump(ordered_json{{"hbar", state.hbar()}, {"state_digest", state_digest(state)}, {"grid", g}, {"values", rows}});
}

std::string circles_to_csv(const std::vector<nodal::Circle>& circles) {
    std::ostringstream out;
    out << "center_x,center_p,radius,max_residual\n";
    for (const auto& c : circles) {
        out << format_double(c.center.x) << ',' << format_double(c.center.p) << ',' << format_double(c.radius) << ','
            << format_double(c.max_residual) << '\n';
    }
    return out.str();
}

std::string nodal_report_to_json(const nodal::NodalReport& r) {
    ordered_json circles = ordered_json::array();
    for (const auto& c : r.circles) {
        circles.push_back({{"center", point_json(c.center)},
                           {"radius", c.radius},
                           {"max_residual", c.max_residual},
                           {"spread", c.spread}});
    }
    ordered_json cells = ordered_json::array();
    for (const auto& [i, j] : r.sign_change_cells) cells.push_back(ordered_json::array({i, j}));
    ordered_json loose = ordered_json::array();
    for (const auto& z : r.loose_crossings) loose.push_back(point_json(z));
    ordered_json grid{{"size", r.grid.size}, {"radius", r.grid.radius}, {"center", point_json(r.grid.center)}};
    return dump(ordered_json{{"grid", grid},
                             {"sign_change_cells", cells},
                             {"circles", circles},
                             {"loose_crossings", loose},
                             {"oscillatory_radius", r.oscillatory_radius},
                             {"bound_radius", r.bound_radius},
                             {"within_bound", r.within_bound}});
}

std::string signup_to_json(const nodal::SignUPResult& s) {
    return dump(ordered_json{{"dimension", s.dimension},
                             {"bound", s.bound},
                             {"radius", s.radius},
                             {"center", point_json(s.center)},
                             {"empty", s.empty},
                             {"negative_points", s.negative_points},
                             {"cell", s.cell},
                             {"verdict", s.verdict ? "pass" : "fail"},
                             {"reaches_conjectured_optimum", s.reaches_conjectured_optimum}});
}

std::string inverse_to_json(const nodal::InverseResult& r, const std::vector<double>& s_values, int sigma,
                            unsigned N_max, double hbar) {
    ordered_json sols = ordered_json::array();
    for (const auto& s : r.solutions) {
        sols.push_back({{"coeffs", coeffs_json(s.coeffs)},
                        {"rank", s.rank},
                        {"residual", s.residual},
                        {"hits", s.hits},
                        {"origin_value", s.origin_value},
                        {"max_circle_value", s.max_circle_value},
                        {"exact_verified", s.exact_verified}});
    }
    ordered_json radii = ordered_json::array();
    for (double s : s_values) radii.push_back(nodal::radius_of_s(s, hbar));
    return dump(ordered_json{{"hbar", hbar},
                             {"radii", radii},
                             {"s", s_values},
                             {"sigma", sigma},
                             {"n_max", N_max},
                             {"converged_starts", r.converged_starts},
                             {"unique", r.unique},
                             {"uniqueness_certified", r.uniqueness_certified},
                             {"note", r.note},
                             {"solutions", sols}});
}

}  // namespace wigzero::io
