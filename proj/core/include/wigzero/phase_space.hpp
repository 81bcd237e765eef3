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

#ifndef WIGZERO_PHASE_SPACE_HPP
#define WIGZERO_PHASE_SPACE_HPP

#include <complex>
#include <numbers>
#include <span>
#include <vector>

namespace wigzero {

using Complex = std::complex<double>;
using Coeffs = std::vector<Complex>;

/// Time-frequency convention for the reduced Planck constant.
inline constexpr double kTimeFrequencyHbar = 1.0 / (2.0 * std::numbers::pi);

/// A point z = (x, p) of the phase-space plane.
struct PhasePoint {
    double x = 0.0;
    double p = 0.0;

    double norm() const;
    double norm_sq() const { return x * x + p * p; }

    PhasePoint operator+(const PhasePoint& o) const { return {x + o.x, p + o.p}; }
    PhasePoint operator-(const PhasePoint& o) const { return {x - o.x, p - o.p}; }
    PhasePoint operator-() const { return {-x, -p}; }
    PhasePoint operator*(double s) const { return {s * x, s * p}; }
    bool operator==(const PhasePoint&) const = default;
};

/// Standard symplectic form sigma(z, z') = z' . J z = p x' - x p'.
double symplectic_form(const PhasePoint& z, const PhasePoint& zp);

/// Plain real 2x2 matrix, row-major.
struct Mat2 {
    double a = 1.0;
    double b = 0.0;
    double c = 0.0;
    double d = 1.0;

    double det() const { return a * d - b * c; }
    Mat2 transpose() const { return {a, c, b, d}; }
    PhasePoint apply(const PhasePoint& z) const { return {a * z.x + b * z.p, c * z.x + d * z.p}; }
    Mat2 operator*(const Mat2& o) const;
    Mat2 operator*(double s) const { return {s * a, s * b, s * c, s * d}; }
    double max_abs_diff(const Mat2& o) const;
};

/// Real 2x2 matrix with unit determinant. In two dimensions S J S^T = J is
/// equivalent to det S = 1, which is what the constructor checks.
class SymplecticMat2 {
   public:
    static constexpr double kDetTolerance = 1e-12;

    SymplecticMat2() = default;
    SymplecticMat2(double a, double b, double c, double d);
    explicit SymplecticMat2(const Mat2& m) : SymplecticMat2(m.a, m.b, m.c, m.d) {}

    static SymplecticMat2 identity() { return {}; }
    /// Counter-clockwise rotation by theta radians.
    static SymplecticMat2 rotation(double theta);

    const Mat2& matrix() const { return m_; }
    double a() const { return m_.a; }
    double b() const { return m_.b; }
    double c() const { return m_.c; }
    double d() const { return m_.d; }

    PhasePoint apply(const PhasePoint& z) const { return m_.apply(z); }
    SymplecticMat2 inverse() const { return SymplecticMat2(m_.d, -m_.b, -m_.c, m_.a); }
    SymplecticMat2 operator*(const SymplecticMat2& o) const { return SymplecticMat2(m_ * o.m_); }

    bool is_identity(double tol = 1e-14) const;
    bool is_rotation(double tol = 1e-12) const;
    /// Angle theta with S = R(theta); meaningful only when is_rotation().
    double rotation_angle() const;

   private:
    Mat2 m_;
};

/// Finite Hermite expansion f = pi(z1) mu(S^-1) sum_n b_n h_n. Its Wigner
/// function is Wg_N(S (z - z1)), where Wg_N is the Wigner function of the
/// plain expansion.
class HermiteState {
   public:
    static constexpr double kNormTolerance = 1e-12;

    /// Trailing zero coefficients are dropped; the remaining vector must be
    /// non-empty and normalized to within kNormTolerance.
    explicit HermiteState(Coeffs coeffs, double hbar = 1.0, PhasePoint center = {},
                          SymplecticMat2 frame = SymplecticMat2::identity());

    /// As the constructor, but rescales the coefficients to unit norm first.
    static HermiteState normalized(Coeffs coeffs, double hbar = 1.0, PhasePoint center = {},
                                   SymplecticMat2 frame = SymplecticMat2::identity());
    /// The n-th Hermite function h_n.
    static HermiteState hermite(unsigned n, double hbar = 1.0);

    double hbar() const { return hbar_; }
    const Coeffs& coeffs() const { return coeffs_; }
    /// N, the index of the trailing (non-zero) coefficient.
    unsigned rank() const { return static_cast<unsigned>(coeffs_.size() - 1); }
    const PhasePoint& center() const { return center_; }
    const SymplecticMat2& frame() const { return frame_; }

    HermiteState with_center(PhasePoint center) const;
    HermiteState with_frame(SymplecticMat2 frame) const;
    HermiteState with_coeffs(Coeffs coeffs) const;

    /// S (z - z1): the point at which the plain expansion is evaluated.
    PhasePoint to_local(const PhasePoint& z) const { return frame_.apply(z - center_); }
    PhasePoint from_local(const PhasePoint& w) const { return frame_.inverse().apply(w) + center_; }

   private:
    double hbar_;
    Coeffs coeffs_;
    PhasePoint center_;
    SymplecticMat2 frame_;
};

/// Symmetric positive-definite M and center z0 describing the ellipse
/// (z - z0) . M (z - z0) = 1.
struct EllipseSpec {
    Mat2 M;
    PhasePoint center;

    /// Throws std::domain_error unless M is symmetric and positive definite.
    void validate() const;
};

/// S with M = sqrt(det M) S^T S. The canonical member of the orthogonal family
/// O S is the symmetric positive-definite one, (M / sqrt(det M))^(1/2).
SymplecticMat2 williamson_factor(const Mat2& M);

/// c_n = b_n e^{i alpha n}; the Wigner function of c is that of b composed with R(-alpha).
Coeffs rotate_coeffs(std::span<const Complex> coeffs, double alpha);

/// Same state moved by dz in phase space.
HermiteState translate_state(const HermiteState& state, const PhasePoint& dz);

/// Replaces a rotation frame by the equivalent rotated coefficients; other
/// frames are returned unchanged.
HermiteState absorb_rotation(const HermiteState& state);

struct CenterTest {
    bool centered = false;
    int sigma = 0;
    double value = 0.0;
};

/// |Wf(z)| = 1/(pi hbar) within 1e-9 (relative), with sigma = sign Wf(z).
CenterTest is_centered_at(const HermiteState& state, const PhasePoint& z);
CenterTest is_centered_at_origin(const HermiteState& state);

}  // namespace wigzero

#endif  // WIGZERO_PHASE_SPACE_HPP
