#pragma once

// One-particle scattering off a delta potential with an internal two-level
// structure. Natural units: hbar^2/2m = 1, so energies are squared momenta.

#include <optional>

#include "qscatter/cxmat.hpp"

namespace qscatter {

/// Physical configuration of the excitable scatterer.
///
/// `u0` is the delta strength (a momentum), `g = u1/u0` the inelastic
/// coupling, and `e_exc` the excitation energy in units of 4 E_bind, so the
/// excited channel opens at k_th = u0 * sqrt(e_exc).
class ScattererParams {
public:
    ScattererParams(double u0, double g, double e_exc);

    double u0() const noexcept { return u0_; }
    double g() const noexcept { return g_; }
    double e_exc() const noexcept { return e_exc_; }

    double u1() const noexcept { return g_ * u0_; }
    double threshold_momentum() const noexcept;
    double binding_energy() const noexcept { return u0_ * u0_ / 4.0; }
    // E_e - E_g in natural units.
    double excitation_gap() const noexcept { return e_exc_ * u0_ * u0_; }

    ScattererParams with_g(double g) const { return {u0_, g, e_exc_}; }
    ScattererParams with_e_exc(double e_exc) const { return {u0_, g_, e_exc}; }

    bool operator==(const ScattererParams&) const = default;

private:
    double u0_;
    double g_;
    double e_exc_;
};

/// tan(delta0) = n / d, kept as a pair so the total-reflection point d = 0 stays exact.
struct PhaseShiftRatio {
    Complex n;
    Complex d;
};

struct ChannelAmplitudes {
    Complex r;
    Complex t;
    double k = 0.0;

    double reflectance() const noexcept { return std::norm(r); }
    double transmittance() const noexcept { return std::norm(t); }
    double intensity() const noexcept { return std::norm(r) + std::norm(t); }
};

struct PoleLocation {
    Complex k;
    double residual = 0.0;
    int iterations = 0;
};

struct ResonanceEstimate {
    double position = 0.0;
    double width = 0.0;
};

Complex excited_momentum(const ScattererParams& p, double k);
PhaseShiftRatio tan_delta(const ScattererParams& p, double k);

// Analytic continuation to complex momentum. The excited-channel momentum
// takes the branch with Im >= 0 (Re >= 0 on the cut), which coincides with
// the real-k convention on the positive axis.
Complex excited_momentum(const ScattererParams& p, Complex k);
PhaseShiftRatio tan_delta(const ScattererParams& p, Complex k);

/// Reflection and transmission amplitudes, t = D/(D - iN), r = iN/(D - iN).
ChannelAmplitudes amplitudes(const ScattererParams& p, double k);

/// |r|^2 + |t|^2; 1 in the elastic regime and never below 1/2.
double unitarity_deficit(const ScattererParams& p, double k);

inline constexpr int kPoleMaxIterations = 200;
inline constexpr double kPoleResidualTolerance = 1e-10;

/// S-matrix pole (tan delta0 = -i) by damped Newton iteration on
/// f(k) = D(k) - i N(k), starting from `guess`.
PoleLocation find_pole(const ScattererParams& p, Complex guess);

// f(k) = D - iN and its analytic derivative; exposed for diagnostics and tests.
Complex pole_function(const ScattererParams& p, Complex k);
Complex pole_function_derivative(const ScattererParams& p, Complex k);

/// Small-coupling resonance position and width as printed for E_R.
/// Valid for g up to roughly 0.3; find_pole is the authoritative locator.
ResonanceEstimate resonance_estimate(const ScattererParams& p, double k);

/// Real momentum where D = 0 below threshold (t = 0, r = -1), if it exists.
std::optional<double> total_reflection_momentum(const ScattererParams& p);

/// Bisection root of the real numerator N(k) inside [k_lo, k_hi] (r = 0).
/// Both ends must lie in (0, k_th]. Throws NoSignChange when N does not
/// change sign over the bracket.
double reflection_zero(const ScattererParams& p, double k_lo, double k_hi);

/// Scans (0, k_th] for the reflection zero and refines it by bisection.
std::optional<double> find_reflection_zero(const ScattererParams& p);

}  // namespace qscatter
