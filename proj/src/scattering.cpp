#include "qscatter/scattering.hpp"

#include <cmath>
#include <limits>
#include <string>

namespace qscatter {

namespace {

constexpr Complex kI{0.0, 1.0};

void require_positive_momentum(double k) {
    if (!(k > 0.0) || !std::isfinite(k)) {
        throw Error(ErrorCode::NonPositiveMomentum, "momentum must be finite and > 0, got " +
                                                        std::to_string(k));
    }
}

bool finite(Complex z) { return std::isfinite(z.real()) && std::isfinite(z.imag()); }

// Without coupling N = u0 D / 2k, so D cancels; the literal pair is 0/0 at D = 0.
template <typename K>
PhaseShiftRatio cancelled_ratio(const ScattererParams& p, K k) {
    const double u0 = p.u0();
    return {Complex(u0 * u0 * u0, 0.0) / (2.0 * Complex(k)), Complex(u0 * u0, 0.0)};
}

}  // namespace

ScattererParams::ScattererParams(double u0, double g, double e_exc) : u0_(u0), g_(g), e_exc_(e_exc) {
    if (!(u0 > 0.0) || !std::isfinite(u0)) {
        throw Error(ErrorCode::InvalidArgument, "u0 must be finite and > 0");
    }
    if (!(g >= 0.0) || !std::isfinite(g)) {
        throw Error(ErrorCode::InvalidArgument, "g must be finite and >= 0");
    }
    if (!(e_exc >= 0.0) || !std::isfinite(e_exc)) {
        throw Error(ErrorCode::InvalidArgument, "e_exc must be finite and >= 0");
    }
}

double ScattererParams::threshold_momentum() const noexcept { return u0_ * std::sqrt(e_exc_); }

Complex excited_momentum(const ScattererParams& p, double k) {
    require_positive_momentum(k);
    const double kth = p.threshold_momentum();
    const double ke_sq = (k - kth) * (k + kth);
    if (ke_sq >= 0.0) return {std::sqrt(ke_sq), 0.0};
    return {0.0, std::sqrt(-ke_sq)};
}

Complex excited_momentum(const ScattererParams& p, Complex k) {
    const Complex w = std::sqrt(k * k - p.excitation_gap());
    if (w.imag() < 0.0 || (w.imag() == 0.0 && w.real() < 0.0)) return -w;
    return w;
}

PhaseShiftRatio tan_delta(const ScattererParams& p, double k) {
    const Complex ke = excited_momentum(p, k);
    const double kth = p.threshold_momentum();
    const double u0 = p.u0();
    const double u1_sq = p.u1() * p.u1();
    // k_e^2 is real for real k; keep D exactly real.
    const double d = u0 * u0 + 4.0 * (k - kth) * (k + kth);
    const Complex n = u0 * (d - u1_sq) / (2.0 * k) + kI * ke * u1_sq / k;
    return {n, Complex(d, 0.0)};
}

PhaseShiftRatio tan_delta(const ScattererParams& p, Complex k) {
    const Complex ke = excited_momentum(p, k);
    const double u0 = p.u0();
    const double u1_sq = p.u1() * p.u1();
    const Complex d = u0 * u0 + 4.0 * ke * ke;
    const Complex n = u0 * (d - u1_sq) / (2.0 * k) + kI * ke * u1_sq / k;
    return {n, d};
}

ChannelAmplitudes amplitudes(const ScattererParams& p, double k) {
    require_positive_momentum(k);
    const double u0 = p.u0();
    const PhaseShiftRatio ratio = p.g() == 0.0 ? cancelled_ratio(p, k) : tan_delta(p, k);
    if (ratio.d == Complex{}) return {Complex(-1.0, 0.0), Complex{}, k};

    const Complex den = ratio.d - kI * ratio.n;
    if (std::abs(den) < 1e-13 * u0 * u0) {
        throw Error(ErrorCode::AtPole, "D - iN vanishes at k = " + std::to_string(k));
    }
    ChannelAmplitudes out{kI * ratio.n / den, ratio.d / den, k};
    if (!finite(out.r) || !finite(out.t)) {
        throw Error(ErrorCode::NonFinite, "amplitudes overflowed at k = " + std::to_string(k));
    }
    return out;
}

double unitarity_deficit(const ScattererParams& p, double k) { return amplitudes(p, k).intensity(); }

Complex pole_function(const ScattererParams& p, Complex k) {
    const auto [n, d] = p.g() == 0.0 ? cancelled_ratio(p, k) : tan_delta(p, k);
    return d - kI * n;
}

Complex pole_function_derivative(const ScattererParams& p, Complex k) {
    const double u0 = p.u0();
    if (p.g() == 0.0) return kI * u0 * u0 * u0 / (2.0 * k * k);
    const double u1_sq = p.u1() * p.u1();
    const Complex ke = excited_momentum(p, k);
    const Complex d = u0 * u0 + 4.0 * ke * ke;
    const Complex d_prime = 8.0 * k;
    Complex n_prime = u0 * d_prime / (2.0 * k) - u0 * (d - u1_sq) / (2.0 * k * k);
    if (ke == Complex{}) {
        throw Error(ErrorCode::DerivativeVanished, "branch point of k_e reached");
    }
    // d(k_e)/dk = k / k_e
    n_prime += kI * u1_sq * (1.0 / ke - ke / (k * k));
    return d_prime - kI * n_prime;
}

PoleLocation find_pole(const ScattererParams& p, Complex guess) {
    if (!finite(guess) || std::abs(guess) == 0.0) {
        throw Error(ErrorCode::InvalidArgument, "pole guess must be finite and nonzero");
    }
    const double u0 = p.u0();
    const double tolerance = kPoleResidualTolerance * u0 * u0;
    constexpr double eps = std::numeric_limits<double>::epsilon();

    Complex k = guess;
    Complex fk = pole_function(p, k);
    for (int it = 1; it <= kPoleMaxIterations; ++it) {
        if (fk == Complex{}) return {k, 0.0, it - 1};

        const Complex dk = pole_function_derivative(p, k);
        if (!finite(dk) || std::abs(dk) < 1e-300) {
            throw Error(ErrorCode::DerivativeVanished, "f'(k) vanished during Newton iteration");
        }
        const Complex step = fk / dk;

        // Halve the step until |f| does not increase.
        double lambda = 1.0;
        bool accepted = false;
        Complex k_next;
        Complex f_next;
        for (int h = 0; h < 40; ++h, lambda *= 0.5) {
            k_next = k - lambda * step;
            if (k_next == Complex{}) continue;
            f_next = pole_function(p, k_next);
            if (finite(f_next) && std::abs(f_next) <= std::abs(fk)) {
                accepted = true;
                break;
            }
        }
        if (!accepted) {
            if (std::abs(fk) < tolerance) return {k, std::abs(fk), it - 1};
            throw Error(ErrorCode::NoConvergence, "Newton step cannot reduce |f|");
        }

        const double moved = std::abs(k_next - k);
        k = k_next;
        fk = f_next;
        if (std::abs(fk) < tolerance && moved <= 4.0 * eps * std::max(std::abs(k), u0)) {
            return {k, std::abs(fk), it};
        }
    }
    if (std::abs(fk) < tolerance) return {k, std::abs(fk), kPoleMaxIterations};
    throw Error(ErrorCode::NoConvergence,
                "no pole within " + std::to_string(kPoleMaxIterations) + " iterations");
}

ResonanceEstimate resonance_estimate(const ScattererParams& p, double k) {
    require_positive_momentum(k);
    const double u0 = p.u0();
    const double u1_sq = p.u1() * p.u1();
    const double denom = u0 * u0 + 4.0 * k * k;
    // Literal small-u1 expression; with hbar^2/2m = 1 the hbar^2/4m prefactor is 1/2.
    return {u0 / 2.0 - u1_sq * u0 / denom, k * u0 * u1_sq / (2.0 * denom)};
}

std::optional<double> total_reflection_momentum(const ScattererParams& p) {
    if (p.g() > 0.0 && p.e_exc() > 0.25) return p.u0() * std::sqrt(p.e_exc() - 0.25);
    return std::nullopt;
}

namespace {

// Real part of N below threshold (N is real there).
double numerator(const ScattererParams& p, double k) {
    return (p.g() == 0.0 ? cancelled_ratio(p, k) : tan_delta(p, k)).n.real();
}

}  // namespace

double reflection_zero(const ScattererParams& p, double k_lo, double k_hi) {
    require_positive_momentum(k_lo);
    require_positive_momentum(k_hi);
    const double kth = p.threshold_momentum();
    if (!(k_lo < k_hi)) throw Error(ErrorCode::InvalidArgument, "bracket needs k_lo < k_hi");
    if (k_hi > kth) {
        throw Error(ErrorCode::InvalidArgument, "bracket must lie below the threshold momentum");
    }

    double lo = k_lo;
    double hi = k_hi;
    double n_lo = numerator(p, lo);
    const double n_hi = numerator(p, hi);
    if (n_lo == 0.0) return lo;
    if (n_hi == 0.0) return hi;
    if ((n_lo > 0.0) == (n_hi > 0.0)) {
        throw Error(ErrorCode::NoSignChange, "N(k) keeps its sign on the bracket");
    }
    const double width_tol = 1e-12 * p.u0();
    while (hi - lo >= width_tol) {
        const double mid = 0.5 * (lo + hi);
        if (mid <= lo || mid >= hi) break;
        const double n_mid = numerator(p, mid);
        if (n_mid == 0.0) return mid;
        if ((n_mid > 0.0) == (n_lo > 0.0)) {
            lo = mid;
            n_lo = n_mid;
        } else {
            hi = mid;
        }
    }
    return 0.5 * (lo + hi);
}

std::optional<double> find_reflection_zero(const ScattererParams& p) {
    const double kth = p.threshold_momentum();
    if (p.g() == 0.0 || kth == 0.0) return std::nullopt;
    constexpr int kScan = 1024;
    double prev_k = kth / kScan;
    double prev_n = numerator(p, prev_k);
    for (int i = 2; i <= kScan; ++i) {
        const double k = (i == kScan) ? kth : kth * i / kScan;
        const double n = numerator(p, k);
        if (n == 0.0) return k;
        if ((n > 0.0) != (prev_n > 0.0)) return reflection_zero(p, prev_k, k);
        prev_k = k;
        prev_n = n;
    }
    return std::nullopt;
}

}  // namespace qscatter
