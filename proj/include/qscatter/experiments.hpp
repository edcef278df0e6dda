#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "qscatter/scattering.hpp"
#include "qscatter/twobody.hpp"

namespace qscatter {

enum class SweepKind { TransmissionVsK, ConcurrenceVsDk, ConcurrenceVsG };

std::string_view sweep_kind_name(SweepKind kind) noexcept;

struct SweepRange {
    double lo = 0.0;
    double hi = 1.0;
    std::size_t steps = 2;

    // lo + i (hi - lo) / (steps - 1), endpoints included.
    double at(std::size_t i) const noexcept;
};

struct SweepSpec {
    SweepKind kind = SweepKind::TransmissionVsK;
    ScattererParams params{1.0, 0.0, 0.0};
    double k1 = 0.5;
    double k2 = 1.5;  // concurrence_vs_g only
    SweepRange range;
    // e_exc per curve for the concurrence sweeps; empty means params.e_exc().
    std::vector<double> extra;
    // 0 = hardware concurrency.
    unsigned threads = 0;

    void validate() const;
};

inline constexpr std::string_view kFlagOk = "ok";

struct SweepRow {
    double x = 0.0;
    std::vector<double> values;
    // "ok" or the name of the error that made the point unusable.
    std::vector<std::string> flags;

    bool ok(std::size_t i) const { return flags.at(i) == kFlagOk; }
};

struct SweepTable {
    std::string x_name;
    std::vector<std::string> columns;
    std::vector<SweepRow> rows;
};

SweepTable sweep_transmission(const SweepSpec& spec);
SweepTable sweep_concurrence_dk(const SweepSpec& spec);
SweepTable sweep_concurrence_g(const SweepSpec& spec);
SweepTable run_sweep(const SweepSpec& spec);

// Reference sweeps with u0 = 1: transmission vs k at g = 1/2, E_exc = 1;
// concurrence vs dk for k1 = u0/2, g = 1/2; concurrence vs g for k1 = u0/2, k2 = 3u0/2.
SweepSpec transmission_preset();
SweepSpec separation_preset();
SweepSpec coupling_preset();

// e_exc values for the separation sweep with k1 = u0/2, g = 1/2 and
// dk in (0, 2 u0]: both momenta open, one crossing, both closed.
inline constexpr double kRegimeOpen = 0.01;
inline constexpr double kRegimeCrossing = 0.3;
inline constexpr double kRegimeClosed = 6.3;

enum class FeatureKind { Threshold, TotalReflection, ReflectionZero };

std::string_view feature_kind_name(FeatureKind kind) noexcept;

struct Feature {
    FeatureKind kind;
    double k = 0.0;
    // Post-selected concurrence against the reference momentum, when defined.
    std::optional<double> eta;
};

std::vector<Feature> locate_features(const ScattererParams& params, double k1);

// ---- invariant suite -----------------------------------------------------

struct VerifyGrid {
    double u0 = 1.0;
    std::vector<double> g;
    std::vector<double> e_exc;
    std::vector<double> k;
    // Replaces every invariant tolerance when set.
    std::optional<double> tolerance_override;
    // Fault injection: perturb t at this flat (g, e_exc, k) index before checking.
    std::optional<std::size_t> fault_index;

    std::string describe() const;
};

VerifyGrid default_verify_grid();

struct InvariantResult {
    std::string name;
    double tolerance = 0.0;
    double worst = 0.0;
    std::size_t checks = 0;
    std::size_t skipped = 0;
    bool passed = true;
};

struct VerifyReport {
    std::vector<InvariantResult> invariants;
    std::string grid;
    double wall_seconds = 0.0;

    bool passed() const noexcept;
};

VerifyReport run_verify(const VerifyGrid& grid);

// n log-spaced points in [lo, hi].
std::vector<double> log_space(double lo, double hi, std::size_t n);

}  // namespace qscatter
