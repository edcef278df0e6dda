#include <gtest/gtest.h>

#include <cmath>
#include <functional>
#include <tuple>
#include <random>

#include "qscatter/twobody.hpp"

using namespace qscatter;

namespace {

// Pure two-qubit state psi_ab (not necessarily normalized): concurrence from
// the purity of the reduced density matrix, C = sqrt(2 (1 - Tr rho_A^2)).
double purity_concurrence(const CMat& psi) {
    const double norm = psi.frobenius_sq();
    const CMat rho = Complex(1.0 / norm) * (psi * adjoint(psi));
    const double purity = std::real((rho * rho)(0, 0) + (rho * rho)(1, 1));
    return std::sqrt(std::max(0.0, 2.0 * (1.0 - purity)));
}

double elastic_concurrence(double k1, double k2) { return 2 * k1 * k2 / (k1 * k1 + k2 * k2); }


std::vector<TwoParticleInput> random_inputs(std::uint64_t seed, int n) {
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> log_g(-2.0, 1.0);
    std::uniform_real_distribution<double> e(0.0, 1.5);
    std::uniform_real_distribution<double> k(0.05, 3.0);
    std::vector<TwoParticleInput> out;
    while (static_cast<int>(out.size()) < n) {
        const ScattererParams p(1.0, out.size() % 5 == 0 ? 0.0 : std::pow(10.0, log_g(rng)), e(rng));
        const double k1 = k(rng);
        const double k2 = k(rng);
        if (std::abs(k1 - k2) < 1e-3) continue;
        out.emplace_back(p, k1, k2);
    }
    return out;
}

ErrorCode code_of(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.code();
    }
    ADD_FAILURE() << "no error raised";
    return ErrorCode::InvalidArgument;
}

}  // namespace

TEST(TwoParticleInput, Validation) {
    const ScattererParams p(1, 0, 0);
    EXPECT_EQ(code_of([&] { TwoParticleInput(p, 0.5, 0.5); }), ErrorCode::EqualMomenta);
    EXPECT_EQ(code_of([&] { TwoParticleInput(p, 0.0, 0.5); }), ErrorCode::NonPositiveMomentum);
    EXPECT_EQ(code_of([&] { TwoParticleInput(p, 0.5, -1.0); }), ErrorCode::NonPositiveMomentum);
    const TwoParticleInput in(p, 0.5, 1.5);
    EXPECT_EQ(in.swapped().k1(), 1.5);
    EXPECT_EQ(in.swapped().k2(), 0.5);
}

TEST(SMatrix, BlockLayout) {
    const SMatrix4 s = build_smatrix(TwoParticleInput(ScattererParams(1, 0, 0), 0.5, 1.5));
    const CMat full = s.full();
    EXPECT_EQ(full(0, 0), s.channel[0].r);
    EXPECT_EQ(full(1, 1), s.channel[1].r);
    EXPECT_EQ(full(2, 0), s.channel[0].t);
    EXPECT_EQ(full(0, 2), s.channel[0].t);
    EXPECT_EQ(full(3, 1), s.channel[1].t);
    EXPECT_EQ(full(0, 1), Complex(0.0));
    EXPECT_EQ(full(2, 1), Complex(0.0));
}

TEST(SMatrix, ElasticIsUnitary) {
    const SMatrix4 s = build_smatrix(TwoParticleInput(ScattererParams(1, 0, 0), 0.5, 1.5));
    EXPECT_LT(max_abs_diff(s.full() * adjoint(s.full()), CMat::identity(4)), 1e-14);
}

TEST(DualSMatrix, BlockFormulasInvertSDagger) {
    for (const auto& in : random_inputs(11, 500)) {
        const SMatrix4 s = build_smatrix(in);
        const CMat dual = dual_smatrix_or_direct(s).full();
        EXPECT_LT(max_abs_diff(adjoint(s.full()) * dual, CMat::identity(4)),
                  1e-10 * std::max(1.0, dual.max_abs()));
    }
}

TEST(DualSMatrix, BlockAndDirectAgree) {
    int compared = 0;
    for (const auto& in : random_inputs(12, 500)) {
        const SMatrix4 s = build_smatrix(in);
        DualSMatrix blocks;
        try {
            blocks = dual_smatrix(s);
        } catch (const Error& e) {
            EXPECT_EQ(e.code(), ErrorCode::SingularReflection);
            continue;
        }
        const CMat direct = dual_smatrix_direct(s).full();
        EXPECT_LT(max_abs_diff(blocks.full(), direct), 1e-11 * std::max(1.0, direct.max_abs()));
        ++compared;
    }
    EXPECT_GT(compared, 400);
}

TEST(DualSMatrix, CollapsesToSForUnitaryS) {
    const SMatrix4 s = build_smatrix(TwoParticleInput(ScattererParams(1, 0, 0.5), 0.3, 2.0));
    EXPECT_LT(max_abs_diff(dual_smatrix(s).full(), s.full()), 1e-12);
}

TEST(DualSMatrix, ReflectionZeroFallsBackToDirectInverse) {
    const ScattererParams p(1, 0.5, 0.5);
    const double kz = *find_reflection_zero(p);
    SMatrix4 s = build_smatrix(TwoParticleInput(p, kz, 1.5));
    s.channel[0].r = Complex(0.0);
    s.channel[0].t = Complex(1.0);
    EXPECT_EQ(code_of([&] { dual_smatrix(s); }), ErrorCode::SingularReflection);
    const CMat dual = dual_smatrix_or_direct(s).full();
    EXPECT_LT(max_abs_diff(adjoint(s.full()) * dual, CMat::identity(4)), 1e-12);
}

TEST(WMatrix, IsAntisymmetric) {
    for (const auto& in : random_inputs(13, 200)) {
        const CMat w = w_matrix(dual_smatrix_or_direct(build_smatrix(in)));
        EXPECT_LT(max_abs_diff(w, Complex(-1.0) * transpose(w)), 1e-12 * std::max(1.0, w.max_abs()));
    }
}

TEST(WMatrix, InputStateIsMaximallyEntangledInMomentum) {
    // Before scattering W = Sigma: both particles on the left, one per momentum.
    const CMat sigma = sigma_input();
    EXPECT_EQ(sigma(0, 1), Complex(0.5));
    EXPECT_EQ(sigma(1, 0), Complex(-0.5));
    EXPECT_NEAR(sigma.frobenius_sq(), 0.5, 1e-15);
    // A product of two distinct modes is unentangled in the mode sense.
    EXPECT_NEAR(full_concurrence(sigma), 0.0, 1e-15);
}

TEST(FullConcurrence, HandBuiltMaximallyEntangledState) {
    CMat w(4);
    const double a = 1.0 / (2.0 * std::sqrt(2.0));
    w(0, 1) = a;
    w(1, 0) = -a;
    w(2, 3) = a;
    w(3, 2) = -a;
    EXPECT_NEAR(w.frobenius_sq(), 0.5, 1e-15);
    EXPECT_NEAR(full_concurrence(w), 1.0, 1e-15);
    EXPECT_NEAR(full_concurrence(normalized_w(Complex(3.0) * w)), 1.0, 1e-15);
}

TEST(FullConcurrence, VanishesAfterScattering) {
    for (const auto& in : random_inputs(14, 300)) {
        const CMat w = normalized_w(w_matrix(dual_smatrix_or_direct(build_smatrix(in))));
        EXPECT_LT(full_concurrence(w), 1e-10);
    }
}

TEST(FullConcurrence, Errors) {
    EXPECT_EQ(code_of([] { full_concurrence(CMat(2)); }), ErrorCode::DimensionMismatch);
    EXPECT_EQ(code_of([] { normalized_w(CMat(4)); }), ErrorCode::ZeroNorm);
}

TEST(PostSelection, ElasticExample) {
    const TwoParticleInput in(ScattererParams(1, 0, 0), 0.5, 1.5);
    EXPECT_NEAR(concurrence_postselected(in), 0.6, 1e-14);
    EXPECT_NEAR(concurrence_reduced(in), 0.6, 1e-14);
    EXPECT_NEAR(postselected_concurrence(postselect(dual_smatrix(build_smatrix(in)))), 0.6, 1e-14);
}

TEST(PostSelection, GammaConcurrenceMatchesPurityOracle) {
    for (const auto& in : random_inputs(15, 500)) {
        const PostSelection ps = postselect(dual_smatrix_or_direct(build_smatrix(in)));
        EXPECT_NEAR(postselected_concurrence(ps), purity_concurrence(ps.gamma), 1e-7);
        EXPECT_NEAR(postselected_concurrence(ps), concurrence_reduced(in), 1e-10);
    }
}

TEST(PostSelection, AllRoutesAgree) {
    for (const auto& in : random_inputs(16, 1000)) {
        const double reduced = concurrence_reduced(in);
        EXPECT_GE(reduced, 0.0);
        EXPECT_LE(reduced, 1.0);
        EXPECT_NEAR(concurrence_postselected(in), reduced, 1e-12);
        EXPECT_NEAR(concurrence_reduced(in.swapped()), reduced, 1e-15);
        if (in.params().g() == 0.0) EXPECT_NEAR(reduced, elastic_concurrence(in.k1(), in.k2()), 1e-13);
    }
}

TEST(PostSelection, SectorConcurrenceEqualsPostSelected) {
    for (const auto& in : random_inputs(17, 300)) {
        const CMat w = w_matrix(dual_smatrix_or_direct(build_smatrix(in)));
        const SectorConcurrences sec = sector_concurrences(w);
        ASSERT_TRUE(sec.one_each);
        EXPECT_NEAR(*sec.one_each, concurrence_reduced(in), 1e-10);
        if (sec.both_left) EXPECT_LT(*sec.both_left, 1e-10);
        if (sec.both_right) EXPECT_LT(*sec.both_right, 1e-10);
    }
}

TEST(PostSelection, TransmissionZeroKillsEntanglement) {
    // k2 = u0 sqrt(e - 1/4) is a perfect-reflection point.
    const TwoParticleInput in(ScattererParams(1, 0.5, 0.5), 0.25, 0.5);
    EXPECT_NEAR(concurrence_reduced(in), 0.0, 1e-14);
    const ConcurrenceReport report = analyze(in);
    EXPECT_NEAR(report.eta_postselected, 0.0, 1e-14);
}

TEST(PostSelection, NearDegenerateMomentaAreMaximallyEntangled) {
    const ScattererParams p(1, 0.3, 0.2);
    EXPECT_NEAR(concurrence_reduced(TwoParticleInput(p, 1.0, 1.0 + 1e-7)), 1.0, 1e-10);
}

TEST(PostSelection, ZeroNormWhenNothingSurvives) {
    DualSMatrix d;
    d.T = CMat::identity(2);
    EXPECT_EQ(code_of([&] { postselect(d); }), ErrorCode::ZeroNorm);
}

TEST(SectorConcurrences, EmptySectorsAreReported) {
    const SectorConcurrences sec = sector_concurrences(sigma_input());
    ASSERT_TRUE(sec.both_left);
    EXPECT_NEAR(*sec.both_left, 0.0, 1e-15);
    EXPECT_FALSE(sec.both_right);
    EXPECT_FALSE(sec.one_each);
}

TEST(SmallCoupling, ExpansionErrorIsFourthOrder) {
    for (auto [e, k1, k2] : {std::tuple{0.0, 0.5, 1.5}, std::tuple{0.125, 0.8, 1.3}, std::tuple{0.25, 0.6, 2.0}}) {
        const ScattererParams p(1, 0.0, e);
        auto residual = [&](double g) {
            const TwoParticleInput in(p.with_g(g), k1, k2);
            return std::abs(concurrence_reduced(in) - concurrence_smallg(in));
        };
        const double ratio = residual(0.02) / residual(0.01);
        EXPECT_GT(ratio, 8.0) << e;
        EXPECT_LT(ratio, 32.0) << e;
        const TwoParticleInput at_zero(p, k1, k2);
        EXPECT_NEAR(concurrence_smallg(at_zero), elastic_concurrence(k1, k2), 1e-15);
    }
    EXPECT_NEAR(concurrence_smallg(TwoParticleInput(ScattererParams(1, 0.1, 0), 0.5, 1.5)), 0.60192, 1e-5);
}

TEST(SmallCoupling, RequiresOpenChannels) {
    EXPECT_EQ(code_of([] { concurrence_smallg(TwoParticleInput(ScattererParams(1, 0.1, 1), 0.5, 1.5)); }),
              ErrorCode::BelowThreshold);
}

TEST(Plateau, StrongCouplingLimit) {
    const TwoParticleInput zero(ScattererParams(1, 0, 0), 0.5, 1.5);
    EXPECT_NEAR(plateau_limit(zero), 0.29166, 1e-5);
    EXPECT_NEAR(concurrence_reduced(TwoParticleInput(zero.params().with_g(1e4), 0.5, 1.5)),
                plateau_limit(zero), 1e-7);

    const TwoParticleInput open(ScattererParams(1, 0, 0.25), 1.0, 2.0);
    EXPECT_NEAR(plateau_limit(open), 8.0 / 17.0, 1e-12);
    EXPECT_NEAR(concurrence_reduced(TwoParticleInput(open.params().with_g(50), 1.0, 2.0)),
                plateau_limit(open), 1e-5);
}

TEST(Analyze, ReportFields) {
    const ConcurrenceReport report = analyze(TwoParticleInput(ScattererParams(1, 0.5, 0.25), 0.7, 1.4));
    EXPECT_LT(report.eta_full, 1e-10);
    EXPECT_GT(report.gamma_norm, 0.0);
    ASSERT_TRUE(report.sectors.one_each);
    EXPECT_NEAR(*report.sectors.one_each, report.eta_postselected, 1e-10);
}
