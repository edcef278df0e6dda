#pragma once

// Two non-interacting fermions scattered by the same excitable delta.
// Outgoing channel ordering: (left k1, left k2, right k1, right k2).

#include <array>
#include <optional>

#include "qscatter/cxmat.hpp"
#include "qscatter/scattering.hpp"

namespace qscatter {

class TwoParticleInput {
public:
    TwoParticleInput(ScattererParams params, double k1, double k2);

    const ScattererParams& params() const noexcept { return params_; }
    double k1() const noexcept { return k1_; }
    double k2() const noexcept { return k2_; }

    TwoParticleInput swapped() const { return {params_, k2_, k1_}; }

private:
    ScattererParams params_;
    double k1_;
    double k2_;
};

/// One-particle S for both momenta, partitioned as [[r, t'], [t, r']].
/// Channels do not mix and the scatterer is inversion symmetric, so
/// r' = r and t' = t, all diagonal.
struct SMatrix4 {
    std::array<ChannelAmplitudes, 2> channel;

    CMat r() const;
    CMat t() const;
    CMat r_prime() const { return r(); }
    CMat t_prime() const { return t(); }
    CMat full() const;
};

/// The propagator (S^dagger)^-1 in the same 2x2 block layout.
struct DualSMatrix {
    CMat R{2};
    CMat T_prime{2};
    CMat T{2};
    CMat R_prime{2};

    CMat full() const { return from_blocks(R, T_prime, T, R_prime); }
    static DualSMatrix from_full(const CMat& m);
};

struct PostSelection {
    CMat gamma{2};
    double norm = 0.0;  // Tr(gamma gamma^dagger)
};

struct SectorConcurrences {
    std::optional<double> both_left;
    std::optional<double> both_right;
    std::optional<double> one_each;
};

struct ConcurrenceReport {
    double eta_full = 0.0;
    double eta_postselected = 0.0;
    SectorConcurrences sectors;
    double gamma_norm = 0.0;
};

SMatrix4 build_smatrix(const TwoParticleInput& in);

/// Block formulas for (S^dagger)^-1. Throws SingularReflection when r'^dagger
/// or the bracket defining the R block cannot be inverted.
DualSMatrix dual_smatrix(const SMatrix4& s);

/// Direct 4x4 inverse of S^dagger; the oracle for dual_smatrix.
DualSMatrix dual_smatrix_direct(const SMatrix4& s);

/// Block formulas, falling back to the direct inverse for perfect-transmission
/// channels. Throws Undefined when S^dagger itself is singular.
DualSMatrix dual_smatrix_or_direct(const SMatrix4& s);

/// Sigma: top-left block (i/2) sigma_y, zero elsewhere.
CMat sigma_input();

/// W = S_dual Sigma S_dual^T, the antisymmetric two-fermion coefficient matrix.
CMat w_matrix(const DualSMatrix& d);

/// Rescales W so that sum |W_ab|^2 = 1/2, the normalization the concurrence
/// contraction assumes. Throws ZeroNorm for W = 0.
CMat normalized_w(const CMat& w);

/// 8 |W12 W34 + W13 W42 + W14 W23| on W as given (no normalization).
double full_concurrence(const CMat& w);

/// gamma = R sigma_y T^T together with Tr(gamma gamma^dagger).
PostSelection postselect(const DualSMatrix& d);

/// 2|det gamma| / Tr(gamma gamma^dagger): the concurrence of the normalized
/// one-left/one-right state.
double postselected_concurrence(const PostSelection& ps);

/// Post-selected concurrence from the diagonal R, T entries.
double concurrence_postselected(const TwoParticleInput& in);

/// Same quantity from |r|, |t| alone; the |r^2 - t^2| factors cancel.
double concurrence_reduced(const ChannelAmplitudes& a1, const ChannelAmplitudes& a2);
double concurrence_reduced(const TwoParticleInput& in);

/// Leading elastic term plus the O(g^2) correction; both momenta must be
/// above threshold.
double concurrence_smallg(const TwoParticleInput& in);

/// Concurrence of W restricted to each local particle-number sector.
/// A sector with vanishing weight is reported as empty.
SectorConcurrences sector_concurrences(const CMat& w);

/// g -> infinity limit 2 rho / (1 + rho^2), rho = |t1 / t2| at leading order.
double plateau_limit(const TwoParticleInput& in);

ConcurrenceReport analyze(const TwoParticleInput& in);

}  // namespace qscatter
