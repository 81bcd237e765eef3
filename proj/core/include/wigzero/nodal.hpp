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

#ifndef WIGZERO_NODAL_HPP
#define WIGZERO_NODAL_HPP

#include <cmath>
#include <cstdint>
#include <functional>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "wigzero/phase_space.hpp"
#include "wigzero/polynomial.hpp"
#include "wigzero/quadrature.hpp"
#include "wigzero/wigner.hpp"

namespace wigzero::nodal {

/// Raised when an operation's documented precondition does not hold.
class PreconditionError : public std::invalid_argument {
   public:
    explicit PreconditionError(const std::string& what) : std::invalid_argument(what) {}
};

/// s = 2 R^2 / hbar and back.
inline double s_of_radius(double R, double hbar) { return 2.0 * R * R / hbar; }
inline double radius_of_s(double s, double hbar) { return std::sqrt(hbar * s / 2.0); }

/// Row m (m = 0..N) is sum_{n=0}^{N-m} c_n conj(c_{n+m}) (-1)^n sqrt(n!/(n+m)!) L_n^(m)(s).
/// All rows vanish iff the Wigner function of the centered expansion vanishes
/// on |z| = sqrt(hbar s / 2).
std::vector<Complex> circle_residuals(std::span<const Complex> coeffs, double s);

struct AdmissibleValue {
    double p = 0.0;
    double radius = 0.0;
    /// One (n, k) with L_n^(k)(p) = 0.
    unsigned n = 0;
    unsigned k = 0;
};

/// Zeros p of L_n^(k) for 1 <= n <= N_max, 0 <= k <= N_max - n, as radii
/// sqrt(hbar p / 2), sorted and deduplicated within 1e-10.
std::vector<AdmissibleValue> admissible_values(unsigned N_max, double hbar);
std::vector<double> admissible_radii(unsigned N_max, double hbar);

/// max(0, ceil((R^2/hbar - 1) / 2)).
unsigned rank_lower_bound(double R, double hbar);

enum class Parity { plus, minus, unconstrained, impossible };
const char* to_string(Parity p);

/// Sign at the origin forced by a zero circle of radius sqrt(hbar p / 2).
Parity parity_constraint(const Rational& p);

struct LineRestriction {
    /// Coefficients in xi, low to high.
    std::vector<double> coeffs;
    double leading = 0.0;
};

/// P restricted to the line zeta - zeta1 = e^{i angle} (xi + i offset), with
/// xi and offset in zeta units. Rotation frames are absorbed first; other
/// frames are rejected.
LineRestriction line_restriction(const HermiteState& state, double angle, double offset);

/// (1/2) sqrt((hbar / 2) (n!/2)^{1/n}).
double sign_up_bound(unsigned n, double hbar);

struct Disc {
    PhasePoint center;
    double radius = 0.0;
};

/// Smallest disc containing all points (Welzl; deterministic shuffle).
Disc min_enclosing_disc(std::vector<PhasePoint> points);

struct SignUPResult {
    unsigned dimension = 1;
    double bound = 0.0;
    /// Radius of the smallest disc holding every negative grid point.
    double radius = 0.0;
    PhasePoint center;
    bool empty = true;
    std::size_t negative_points = 0;
    double cell = 0.0;
    bool verdict = false;
    /// Whether the radius also reaches sqrt(hbar/2), the conjectured optimal
    /// constant. Informational only.
    bool reaches_conjectured_optimum = false;
};

SignUPResult negative_region_radius(const HermiteState& state, const wigner::GridSpec& grid);

struct ProbeResult {
    unsigned positive = 0;
    unsigned negative = 0;
    unsigned zero = 0;
    bool both_signs = false;
    /// Constant sign of W(z1 + z) W(z1 - z) over the sample.
    bool flagged = false;
};

/// Samples W(z1 + z) W(z1 - z) with z uniform in the disc of the given radius.
ProbeResult symmetric_zero_probe(const HermiteState& state, const PhasePoint& z1, unsigned samples,
                                 std::uint64_t seed = 1);
ProbeResult symmetric_zero_probe(const std::function<double(const PhasePoint&)>& W, const PhasePoint& z1,
                                 unsigned samples, double radius, std::uint64_t seed = 1);

struct Sample {
    PhasePoint z;
    double value = 0.0;
};

struct PatchFit {
    wigner::PolyanalyticForm form;
    /// Coefficients of a state reproducing the fitted form, trailing entry real
    /// and positive. Empty if the fitted form is not of rank one.
    Coeffs coeffs;
    /// Root mean square of the fit over the samples, relative to 1/(pi hbar).
    double residual = 0.0;
    /// Spectral weight outside the leading eigenvector of the recovered
    /// density matrix.
    double impurity = 0.0;
    unsigned rank = 0;
};

/// Least-squares fit of the polyanalytic form of order N_max + 1 about a known
/// center to Wigner samples. Throws DiagnosticError on rank-deficient sample
/// geometry.
PatchFit fit_from_patch(const std::vector<Sample>& samples, unsigned N_max, double hbar, PhasePoint center = {});

struct Circle {
    PhasePoint center;
    double radius = 0.0;
    double max_residual = 0.0;
    double spread = 0.0;
};

struct NodalReport {
    wigner::GridSpec grid;
    /// (i, j) of every grid cell whose corners do not share one sign.
    std::vector<std::pair<unsigned, unsigned>> sign_change_cells;
    std::vector<Circle> circles;
    /// Zero crossings on the rays that did not join a circle.
    std::vector<PhasePoint> loose_crossings;
    double oscillatory_radius = 0.0;
    /// Radius about the state center containing every zero.
    double bound_radius = 0.0;
    bool within_bound = true;
};

struct ScanOptions {
    unsigned rays = 256;
    /// Maximum |Wf| on an accepted circle.
    double tol = 1e-8;
};

NodalReport nodal_scan(const HermiteState& state, const wigner::GridSpec& grid, const ScanOptions& opts = {});

/// Radius about the center outside which Wf has no zeros.
double zero_bound_radius(const HermiteState& state);

struct InverseOptions {
    double hbar = 1.0;
    unsigned starts = 64;
    std::uint64_t seed = 1;
    unsigned max_iterations = 400;
    /// Largest residual accepted as a solution.
    double tol = 1e-10;
    /// Global-phase distance below which two solutions are the same orbit.
    double orbit_tol = 1e-6;
};

struct Solution {
    Coeffs coeffs;
    double residual = 0.0;
    unsigned rank = 0;
    /// Number of starts that converged to this orbit.
    unsigned hits = 0;
    /// Sign of Wf(0) times pi hbar Wf(0).
    double origin_value = 0.0;
    /// max |Wf| over 128 points of every prescribed circle.
    double max_circle_value = 0.0;
    /// Set when the solution is a Hermite function h_k and s lies in an exact
    /// isolating bracket of a zero of L_k.
    bool exact_verified = false;
};

struct InverseResult {
    std::vector<Solution> solutions;
    unsigned converged_starts = 0;
    /// One orbit across all converged starts.
    bool unique = false;
    /// Uniqueness backed by exact certificates over the searched rank range.
    bool uniqueness_certified = false;
    std::string note;
};

/// States centered at the origin with sign sigma and rank at most N_max whose
/// Wigner function vanishes on every circle |z| = R_i.
InverseResult inverse_from_circles(const std::vector<double>& radii, int sigma, unsigned N_max,
                                   const InverseOptions& opts = {});
/// Same, with each circle given by s = 2 R^2 / hbar.
InverseResult inverse_from_s(const std::vector<double>& s_values, int sigma, unsigned N_max,
                             const InverseOptions& opts = {});

/// Global-phase distance sqrt(max(0, 2 - 2 |<a, b>|)) for unit vectors.
double orbit_distance(std::span<const Complex> a, std::span<const Complex> b);

}  // namespace wigzero::nodal

#endif  // WIGZERO_NODAL_HPP
