#include "qscatter/twobody.hpp"

#include <cmath>
#include <string>

namespace qscatter {

namespace {

constexpr Complex kI{0.0, 1.0};
constexpr double kNormFloor = 1e-28;

// 2ab / (a^2 + b^2) without overflow; Undefined when both vanish.
double balanced_ratio(double a, double b) {
    if (a == 0.0 && b == 0.0) {
        throw Error(ErrorCode::Undefined, "both post-selected products vanish");
    }
    if (a == 0.0 || b == 0.0) return 0.0;
    const double q = a / b;
    return 2.0 / (q + 1.0 / q);
}

CMat sector_projection(const CMat& w, bool (*keep)(std::size_t, std::size_t)) {
    CMat out(4);
    for (std::size_t i = 0; i < 4; ++i) {
        for (std::size_t j = 0; j < 4; ++j) {
            if (keep(i, j)) out(i, j) = w(i, j);
        }
    }
    return out;
}

bool is_left(std::size_t i) { return i < 2; }

std::optional<double> sector_value(const CMat& projected) {
    if (projected.frobenius_sq() < kNormFloor) return std::nullopt;
    return full_concurrence(normalized_w(projected));
}

}  // namespace

TwoParticleInput::TwoParticleInput(ScattererParams params, double k1, double k2)
    : params_(params), k1_(k1), k2_(k2) {
    for (double k : {k1, k2}) {
        if (!(k > 0.0) || !std::isfinite(k)) {
            throw Error(ErrorCode::NonPositiveMomentum,
                        "momenta must be finite and > 0, got " + std::to_string(k));
        }
    }
    if (k1 == k2) {
        throw Error(ErrorCode::EqualMomenta, "identical momenta give a null fermionic input state");
    }
}

CMat SMatrix4::r() const { return CMat::diag({channel[0].r, channel[1].r}); }
CMat SMatrix4::t() const { return CMat::diag({channel[0].t, channel[1].t}); }
CMat SMatrix4::full() const { return from_blocks(r(), t_prime(), t(), r_prime()); }

DualSMatrix DualSMatrix::from_full(const CMat& m) {
    return {block(m, 0, 0), block(m, 0, 1), block(m, 1, 0), block(m, 1, 1)};
}

SMatrix4 build_smatrix(const TwoParticleInput& in) {
    return {{amplitudes(in.params(), in.k1()), amplitudes(in.params(), in.k2())}};
}

DualSMatrix dual_smatrix(const SMatrix4& s) {
    const CMat r_dag = adjoint(s.r());
    const CMat t_dag = adjoint(s.t());
    const CMat tp_dag = adjoint(s.t_prime());
    try {
        const CMat rp_dag_inv = inverse(adjoint(s.r_prime()));
        const CMat R = inverse(r_dag - t_dag * rp_dag_inv * tp_dag);
        const CMat T_prime = Complex(-1.0) * (R * t_dag * rp_dag_inv);
        const CMat T = Complex(-1.0) * (rp_dag_inv * tp_dag * R);
        const CMat R_prime = rp_dag_inv - rp_dag_inv * tp_dag * T_prime;
        return {R, T_prime, T, R_prime};
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularMatrix && e.code() != ErrorCode::NonFinite) throw;
        throw Error(ErrorCode::SingularReflection, e.what());
    }
}

DualSMatrix dual_smatrix_direct(const SMatrix4& s) {
    return DualSMatrix::from_full(inverse(adjoint(s.full())));
}

DualSMatrix dual_smatrix_or_direct(const SMatrix4& s) {
    try {
        return dual_smatrix(s);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularReflection) throw;
    }
    try {
        return dual_smatrix_direct(s);
    } catch (const Error& e) {
        if (e.code() != ErrorCode::SingularMatrix && e.code() != ErrorCode::NonFinite) throw;
        throw Error(ErrorCode::Undefined, std::string("S^dagger is singular: ") + e.what());
    }
}

CMat sigma_input() {
    const CMat zero(2);
    return from_blocks(Complex(0.0, 0.5) * pauli_y(), zero, zero, zero);
}

CMat w_matrix(const DualSMatrix& d) {
    const CMat s = d.full();
    return s * sigma_input() * transpose(s);
}

CMat normalized_w(const CMat& w) {
    const double weight = w.frobenius_sq();
    if (!(weight > 0.0)) throw Error(ErrorCode::ZeroNorm, "W has zero norm");
    return Complex(std::sqrt(0.5 / weight)) * w;
}

double full_concurrence(const CMat& w) {
    if (w.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "W must be 4x4");
    return 8.0 * std::abs(w(0, 1) * w(2, 3) + w(0, 2) * w(3, 1) + w(0, 3) * w(1, 2));
}

PostSelection postselect(const DualSMatrix& d) {
    PostSelection ps;
    ps.gamma = d.R * pauli_y() * transpose(d.T);
    ps.norm = ps.gamma.frobenius_sq();
    if (ps.norm < kNormFloor) {
        throw Error(ErrorCode::ZeroNorm, "no reflected+transmitted component survives post-selection");
    }
    return ps;
}

double postselected_concurrence(const PostSelection& ps) {
    return 2.0 * std::abs(det2(ps.gamma)) / ps.norm;
}

double concurrence_postselected(const TwoParticleInput& in) {
    const SMatrix4 s = build_smatrix(in);
    std::array<Complex, 2> R{};
    std::array<Complex, 2> T{};
    for (std::size_t i = 0; i < 2; ++i) {
        const Complex r = s.channel[i].r;
        const Complex t = s.channel[i].t;
        const Complex det = r * r - t * t;
        if (det == Complex{}) {
            throw Error(ErrorCode::Undefined, "r^2 - t^2 vanishes in channel " + std::to_string(i + 1));
        }
        R[i] = std::conj(r / det);
        T[i] = std::conj(-t / det);
    }
    return balanced_ratio(std::abs(R[1]) * std::abs(T[0]), std::abs(R[0]) * std::abs(T[1]));
}

double concurrence_reduced(const ChannelAmplitudes& a1, const ChannelAmplitudes& a2) {
    return balanced_ratio(std::abs(a2.r) * std::abs(a1.t), std::abs(a1.r) * std::abs(a2.t));
}

double concurrence_reduced(const TwoParticleInput& in) {
    const SMatrix4 s = build_smatrix(in);
    return concurrence_reduced(s.channel[0], s.channel[1]);
}

double concurrence_smallg(const TwoParticleInput& in) {
    const ScattererParams& p = in.params();
    const double kth = p.threshold_momentum();
    if (in.k1() <= kth || in.k2() <= kth) {
        throw Error(ErrorCode::BelowThreshold, "small-g expansion needs both momenta above threshold");
    }
    const double k1 = in.k1();
    const double k2 = in.k2();
    const double u0_sq = p.u0() * p.u0();
    const double g = p.g();
    const double sum_sq = k1 * k1 + k2 * k2;
    const double diff_sq = k1 * k1 - k2 * k2;
    const double shift = u0_sq - 4.0 * u0_sq * p.e_exc();
    const double leading = 2.0 * k1 * k2 / sum_sq;
    const double correction = 8.0 * k1 * k2 * diff_sq * diff_sq * g * g /
                              (sum_sq * sum_sq * (4.0 * k1 * k1 + shift) * (4.0 * k2 * k2 + shift));
    return leading + correction;
}

SectorConcurrences sector_concurrences(const CMat& w) {
    if (w.dim() != 4) throw Error(ErrorCode::DimensionMismatch, "W must be 4x4");
    SectorConcurrences out;
    out.both_left = sector_value(
        sector_projection(w, [](std::size_t i, std::size_t j) { return is_left(i) && is_left(j); }));
    out.both_right = sector_value(
        sector_projection(w, [](std::size_t i, std::size_t j) { return !is_left(i) && !is_left(j); }));
    out.one_each = sector_value(
        sector_projection(w, [](std::size_t i, std::size_t j) { return is_left(i) != is_left(j); }));
    return out;
}

double plateau_limit(const TwoParticleInput& in) {
    const ScattererParams& p = in.params();
    const double kth = p.threshold_momentum();
    if (in.k1() <= kth || in.k2() <= kth) {
        throw Error(ErrorCode::BelowThreshold, "plateau limit needs both momenta above threshold");
    }
    const double u0 = p.u0();
    // Leading 1/u1^2 coefficient of t: D k / (i k_e - u0/2), up to a common factor.
    auto t_coefficient = [&](double k) {
        const Complex ke = excited_momentum(p, k);
        const Complex d = u0 * u0 + 4.0 * ke * ke;
        return std::abs(d * k / (kI * ke - u0 / 2.0));
    };
    const double rho = t_coefficient(in.k1()) / t_coefficient(in.k2());
    return 2.0 * rho / (1.0 + rho * rho);
}

ConcurrenceReport analyze(const TwoParticleInput& in) {
    const SMatrix4 s = build_smatrix(in);
    const DualSMatrix dual = dual_smatrix_or_direct(s);
    const CMat w = w_matrix(dual);

    ConcurrenceReport report;
    report.eta_full = full_concurrence(normalized_w(w));
    report.gamma_norm = postselect(dual).norm;
    report.eta_postselected = concurrence_postselected(in);
    report.sectors = sector_concurrences(w);
    return report;
}

}  // namespace qscatter
