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

#include "cli.hpp"

#include <CLI11.hpp>
#include <cmath>
#include <fstream>
#include <numbers>
#include <optional>
#include <sstream>

#include "json.hpp"
#include "wigzero/certificates.hpp"
#include "wigzero/identities.hpp"
#include "wigzero/laguerre.hpp"
#include "wigzero/nodal.hpp"
#include "wigzero/serialization.hpp"
#include "wigzero/wigner.hpp"

namespace wigzero::cli {

namespace {

using nlohmann::ordered_json;

struct RunConfig {
    double hbar = 1.0;
    double tol = 1e-10;
    unsigned grid_size = 0;
    double grid_radius = 0.0;
    std::uint64_t seed = 1;
    std::string out;
    std::string format = "json";
    bool renormalize = false;
};

class UsageError : public std::runtime_error {
   public:
    using std::runtime_error::runtime_error;
};

void validate(const RunConfig& cfg) {
    if (!(cfg.hbar > 0.0)) throw UsageError("--hbar must be positive");
    if (!(cfg.tol > 0.0) || cfg.tol > 1e-3) throw UsageError("--tol must lie in (0, 1e-3]");
    if (cfg.grid_size != 0 && cfg.grid_size < 16) throw UsageError("--grid-size must be at least 16");
    if (cfg.grid_radius < 0.0) throw UsageError("--grid-radius must be positive");
}

wigner::GridSpec grid_for(const RunConfig& cfg, const HermiteState& state) {
    wigner::GridSpec g = wigner::default_grid(state);
    if (cfg.grid_size) g.size = cfg.grid_size;
    if (cfg.grid_radius > 0.0) g.radius = cfg.grid_radius;
    return g;
}

std::string dump(const ordered_json& j) { return j.dump(2) + "\n"; }

void emit(const RunConfig& cfg, std::ostream& out, const std::string& text) {
    if (cfg.out.empty()) {
        out << text;
        return;
    }
    std::ofstream f(cfg.out, std::ios::binary);
    if (!f) throw UsageError("cannot write " + cfg.out);
    f << text;
}

Rational parse_rational(const std::string& s) {
    Rational q;
    if (q.set_str(s, 10) != 0) throw UsageError("--p expects an integer or a fraction a/b, got '" + s + "'");
    if (q.get_den() == 0) throw UsageError("--p has a zero denominator");
    q.canonicalize();
    return q;
}

}  // namespace

HermiteState load_state(const std::string& path, bool renormalize) {
    std::ifstream f(path, std::ios::binary);
    if (!f) throw io::ParseError("cannot read state file " + path);
    std::stringstream ss;
    ss << f.rdbuf();
    return io::state_from_json(ss.str(), renormalize);
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    RunConfig cfg;
    CLI::App app{"Wigner functions of Hermite states, their nodal sets, and exact Laguerre certificates", "wigzero"};
    app.require_subcommand(1);
    app.add_option("--hbar", cfg.hbar, "Reduced Planck constant")->capture_default_str();
    app.add_option("--tol", cfg.tol, "Tolerance")->capture_default_str();
    app.add_option("--grid-size", cfg.grid_size, "Grid points per side (default 512)");
    app.add_option("--grid-radius", cfg.grid_radius, "Grid half-width (default 4 sqrt(hbar (2N+1)))");
    app.add_option("--seed", cfg.seed, "Solver multistart seed")->capture_default_str();
    app.add_option("--out", cfg.out, "Write the artifact here instead of stdout");
    app.add_option("--format", cfg.format, "Artifact format")->check(CLI::IsMember({"json", "csv"}))->capture_default_str();
    app.add_flag("--renormalize", cfg.renormalize, "Rescale a state that is not normalized");

    // eval
    std::string eval_state;
    std::vector<double> eval_point;
    bool eval_oracle = false;
    std::vector<double> eval_hn;
    bool eval_selfmap = false;
    auto* eval = app.add_subcommand("eval", "Wigner values at a point or over a grid")->fallthrough();
    eval->add_option("--state", eval_state, "State JSON file")->required();
    eval->add_option("--point", eval_point, "Point x p")->expected(2)->delimiter(',');
    eval->add_flag("--oracle", eval_oracle, "Cross-check the point value against direct quadrature");
    eval->add_option("--hlawatsch-nuttall", eval_hn, "Check the Hlawatsch-Nuttall identity at z2 = x p")
        ->expected(2)
        ->delimiter(',');
    eval->add_flag("--selfmap", eval_selfmap, "Check the Fourier self-map relation about a zero");

    // scan
    std::string scan_state;
    auto* scan = app.add_subcommand("scan", "Nodal set report")->fallthrough();
    scan->add_option("--state", scan_state, "State JSON file")->required();

    // zeros
    unsigned zn = 1, zalpha = 0;
    auto* zeros = app.add_subcommand("zeros", "Zeros of a generalized Laguerre polynomial")->fallthrough();
    zeros->add_option("--n", zn, "Degree")->required()->check(CLI::PositiveNumber);
    zeros->add_option("--alpha", zalpha, "Integer parameter")->capture_default_str();

    // certify
    std::string prop;
    unsigned cn = 10, cm = 10, ck = 0, cx = 0;
    auto* certify = app.add_subcommand("certify", "Exact certificate for a Laguerre identity")->fallthrough();
    certify->add_option("--prop", prop, "A1 | A2 | A3 | A4 | A5 | ConjA1-scan")->required();
    certify->add_option("--nmax", cn, "Largest n")->capture_default_str();
    certify->add_option("--mmax", cm, "Largest m")->capture_default_str();
    certify->add_option("--kmax", ck, "Largest k (ConjA1-scan)");
    certify->add_option("--xmax", cx, "Largest integer point (A5)");

    // inverse
    std::vector<double> inv_radius, inv_r2, inv_s;
    int sigma = 0;
    unsigned inv_nmax = 0, starts = 64;
    auto* inverse = app.add_subcommand("inverse", "States vanishing on prescribed circles")->fallthrough();
    inverse->add_option("--radius", inv_radius, "Circle radius R (repeatable)");
    inverse->add_option("--radius-sq-over-hbar", inv_r2, "R^2 / hbar (repeatable)");
    inverse->add_option("--s", inv_s, "Dimensionless s = 2 R^2 / hbar (repeatable)");
    inverse->add_option("--sigma", sigma, "Sign of Wf(0)")->required()->check(CLI::IsMember({-1, 1}));
    inverse->add_option("--nmax", inv_nmax, "Largest rank")->required();
    inverse->add_option("--starts", starts, "Multistart count")->capture_default_str();

    // bounds
    std::optional<unsigned> bd_dim;
    std::optional<double> bd_radius;
    std::optional<std::string> bd_p;
    std::string bd_state;
    auto* bounds = app.add_subcommand("bounds", "Sign-uncertainty, rank and parity calculators")->fallthrough();
    bounds->add_option("--dim", bd_dim, "Sign-uncertainty bound in this dimension");
    bounds->add_option("--radius", bd_radius, "Rank lower bound for a zero circle of this radius");
    bounds->add_option("--p", bd_p, "Parity forced by a zero circle of radius sqrt(hbar p / 2)");
    bounds->add_option("--state", bd_state, "Measure the negative-region radius of this state");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kExitOk;
    } catch (const CLI::CallForAllHelp& e) {
        out << app.help("", CLI::AppFormatMode::All);
        return kExitOk;
    } catch (const CLI::ParseError& e) {
        err << "wigzero: " << e.what() << "\n";
        return kExitUsage;
    }

    try {
        validate(cfg);
        if (*eval) {
            const HermiteState st = load_state(eval_state, cfg.renormalize);
            bool failed = false;
            if (!eval_hn.empty() || eval_selfmap) {
                ordered_json j{{"hbar", st.hbar()}};
                if (!eval_hn.empty()) {
                    const auto c = identities::hlawatsch_nuttall_check(st, {eval_hn[0], eval_hn[1]});
                    j["hlawatsch_nuttall"] = {{"z2", {eval_hn[0], eval_hn[1]}},
                                              {"lhs", {c.lhs.real(), c.lhs.imag()}},
                                              {"rhs", {c.rhs.real(), c.rhs.imag()}},
                                              {"residual", c.residual}};
                    failed = failed || c.residual > 1e-6;
                }
                if (eval_selfmap) {
                    const auto r = identities::fourier_selfmap_check(st);
                    j["selfmap"] = {{"zero", {r.zero.x, r.zero.p}},
                                    {"points", r.points},
                                    {"max_residual", r.max_residual},
                                    {"max_rhs", r.max_rhs}};
                    failed = failed || r.max_residual > 1e-5;
                }
                emit(cfg, out, dump(j));
            } else if (!eval_point.empty()) {
                const PhasePoint z{eval_point[0], eval_point[1]};
                const double v = wigner::wigner_eval(st, z).value;
                std::optional<double> oracle;
                if (eval_oracle) {
                    oracle = wigner::quadrature_oracle(st, z);
                    failed = std::fabs(*oracle - v) > 1e-8;
                }
                if (cfg.format == "csv") {
                    std::string s = "x,p,value\n" + io::format_double(z.x) + "," + io::format_double(z.p) + "," +
                                    io::format_double(v) + "\n";
                    emit(cfg, out, s);
                } else {
                    ordered_json j{{"hbar", st.hbar()}, {"x", z.x}, {"p", z.p}, {"value", v}};
                    if (oracle) j["oracle"] = *oracle;
                    emit(cfg, out, dump(j));
                }
            } else {
                const auto grid = wigner::grid_sweep(st, grid_for(cfg, st));
                emit(cfg, out, cfg.format == "csv" ? io::grid_to_csv(grid) : io::grid_to_json(grid, st));
            }
            if (failed) err << "wigzero: identity or oracle check failed\n";
            return failed ? kExitVerification : kExitOk;
        }
        if (*scan) {
            const HermiteState st = load_state(scan_state, cfg.renormalize);
            nodal::ScanOptions so;
            so.tol = std::max(cfg.tol, 1e-8);
            const auto rep = nodal::nodal_scan(st, grid_for(cfg, st), so);
            emit(cfg, out, cfg.format == "csv" ? io::circles_to_csv(rep.circles) : io::nodal_report_to_json(rep));
            if (!rep.within_bound) {
                err << "wigzero: zeros found outside the boundedness radius\n";
                return kExitVerification;
            }
            return kExitOk;
        }
        if (*zeros) {
            const auto zl = laguerre::laguerre_zeros(zn, zalpha);
            if (cfg.format == "csv") {
                std::string s = "index,value\n";
                for (std::size_t i = 0; i < zl.values.size(); ++i) {
                    s += std::to_string(i) + "," + io::format_double(zl.values[i]) + "\n";
                }
                emit(cfg, out, s);
            } else {
                emit(cfg, out, io::zeros_to_json(zn, zalpha, zl));
            }
            return kExitOk;
        }
        if (*certify) {
            certificates::Certificate cert;
            try {
                cert = certificates::verify(prop, cn, cm, ck ? ck : cn, cx ? cx : cn);
            } catch (const std::invalid_argument& e) {
                throw UsageError(e.what());
            }
            emit(cfg, out, io::certificate_to_json(cert));
            if (!cert.passed()) {
                for (const auto& f : cert.failures) {
                    err << "wigzero: counterexample";
                    for (long v : f.params) err << " " << v;
                    err << ": " << f.reason << "\n";
                }
                return kExitVerification;
            }
            return kExitOk;
        }
        if (*inverse) {
            std::vector<double> svals = inv_s;
            for (double q : inv_r2) svals.push_back(2.0 * q);
            for (double R : inv_radius) {
                if (!(R > 0.0)) throw UsageError("--radius must be positive");
                svals.push_back(nodal::s_of_radius(R, cfg.hbar));
            }
            for (double s : svals) {
                if (!(s > 0.0)) throw UsageError("circle sizes must be positive");
            }
            if (svals.empty()) throw UsageError("inverse needs --radius, --radius-sq-over-hbar or --s");
            nodal::InverseOptions io_opts;
            io_opts.hbar = cfg.hbar;
            io_opts.seed = cfg.seed;
            io_opts.starts = starts;
            io_opts.tol = std::max(cfg.tol, 1e-12);
            const auto res = nodal::inverse_from_s(svals, sigma, inv_nmax, io_opts);
            emit(cfg, out, io::inverse_to_json(res, svals, sigma, inv_nmax, cfg.hbar));
            bool ok = true;
            for (const auto& s : res.solutions) {
                ok = ok && s.max_circle_value <= 1e-9 && std::fabs(s.origin_value - sigma) <= 1e-9;
            }
            if (!ok) {
                err << "wigzero: a solution failed its post-check\n";
                return kExitVerification;
            }
            return kExitOk;
        }
        if (*bounds) {
            if (!bd_dim && !bd_radius && !bd_p && bd_state.empty()) {
                throw UsageError("bounds needs at least one of --dim, --radius, --p, --state");
            }
            ordered_json j{{"hbar", cfg.hbar}};
            bool failed = false;
            if (bd_dim) {
                if (*bd_dim < 1) throw UsageError("--dim must be at least 1");
                j["sign_up_bound"] = {{"dimension", *bd_dim}, {"bound", nodal::sign_up_bound(*bd_dim, cfg.hbar)}};
            }
            if (bd_radius) {
                if (!(*bd_radius > 0.0)) throw UsageError("--radius must be positive");
                j["rank_lower_bound"] = {{"radius", *bd_radius},
                                         {"rank", nodal::rank_lower_bound(*bd_radius, cfg.hbar)}};
            }
            if (bd_p) {
                const Rational q = parse_rational(*bd_p);
                if (sgn(q) <= 0) throw UsageError("--p must be positive");
                j["parity"] = {{"p", q.get_str()}, {"constraint", nodal::to_string(nodal::parity_constraint(q))}};
            }
            if (!bd_state.empty()) {
                const HermiteState st = load_state(bd_state, cfg.renormalize);
                const auto r = nodal::negative_region_radius(st, grid_for(cfg, st));
                j["negative_region"] = ordered_json::parse(io::signup_to_json(r));
                failed = !r.verdict;
            }
            emit(cfg, out, dump(j));
            return failed ? kExitVerification : kExitOk;
        }
    } catch (const UsageError& e) {
        err << "wigzero: " << e.what() << "\n";
        return kExitUsage;
    } catch (const io::ParseError& e) {
        err << "wigzero: " << e.what() << "\n";
        return kExitUsage;
    } catch (const nodal::PreconditionError& e) {
        err << "wigzero: " << e.what() << "\n";
        return kExitVerification;
    } catch (const DiagnosticError& e) {
        err << "wigzero: " << e.what() << "\n";
        return kExitVerification;
    } catch (const std::invalid_argument& e) {
        err << "wigzero: " << e.what() << "\n";
        return kExitUsage;
    } catch (const std::domain_error& e) {
        err << "wigzero: " << e.what() << "\n";
        return kExitUsage;
    }
    return kExitUsage;
}

}  // namespace wigzero::cli
