#include "qscatter/experiments.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <functional>
#include <limits>
#include <sstream>
#include <thread>

namespace qscatter {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

std::string curve_name(double e_exc) {
    std::ostringstream os;
    os.precision(17);
    os << "eta[e_exc=" << e_exc << "]";
    return os.str();
}

std::vector<double> curve_e_exc(const SweepSpec& spec) {
    if (spec.extra.empty()) return {spec.params.e_exc()};
    return spec.extra;
}

// Evaluates every grid point, possibly on several threads; rows come back in
// grid order regardless of scheduling.
std::vector<SweepRow> evaluate_grid(const SweepSpec& spec,
                                    const std::function<SweepRow(double)>& point) {
    const std::size_t n = spec.range.steps;
    std::vector<SweepRow> rows(n);
    unsigned threads = spec.threads != 0 ? spec.threads : std::thread::hardware_concurrency();
    threads = std::clamp<unsigned>(threads, 1u, static_cast<unsigned>(std::max<std::size_t>(n, 1)));

    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i = next++; i < n; i = next++) rows[i] = point(spec.range.at(i));
    };
    if (threads == 1) {
        worker();
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
    }
    return rows;
}

void push_failure(SweepRow& row, const Error& e) {
    row.values.push_back(kNaN);
    row.flags.emplace_back(error_name(e.code()));
}

void require_kind(const SweepSpec& spec, SweepKind kind) {
    if (spec.kind != kind) {
        throw Error(ErrorCode::InvalidArgument, "sweep spec kind mismatch: expected " +
                                                    std::string(sweep_kind_name(kind)));
    }
    spec.validate();
}

}  // namespace

std::string_view sweep_kind_name(SweepKind kind) noexcept {
    switch (kind) {
        case SweepKind::TransmissionVsK: return "transmission_vs_k";
        case SweepKind::ConcurrenceVsDk: return "concurrence_vs_dk";
        case SweepKind::ConcurrenceVsG: return "concurrence_vs_g";
    }
    return "unknown";
}

double SweepRange::at(std::size_t i) const noexcept {
    if (i + 1 == steps) return hi;
    return lo + (hi - lo) * static_cast<double>(i) / static_cast<double>(steps - 1);
}

void SweepSpec::validate() const {
    if (!std::isfinite(range.lo) || !std::isfinite(range.hi) || !(range.lo < range.hi)) {
        throw Error(ErrorCode::InvalidArgument, "sweep range needs finite lo < hi");
    }
    if (range.steps < 2) throw Error(ErrorCode::InvalidArgument, "sweep needs at least 2 steps");
    for (double e : extra) {
        if (!(e >= 0.0) || !std::isfinite(e)) {
            throw Error(ErrorCode::InvalidArgument, "e_exc values must be finite and >= 0");
        }
    }
    if (kind == SweepKind::ConcurrenceVsG && range.lo < 0.0) {
        throw Error(ErrorCode::InvalidArgument, "g range must start at >= 0");
    }
}

SweepTable sweep_transmission(const SweepSpec& spec) {
    require_kind(spec, SweepKind::TransmissionVsK);
    SweepTable table{"k", {"r2", "t2", "sum"}, {}};
    table.rows = evaluate_grid(spec, [&](double k) {
        SweepRow row{k, {}, {}};
        try {
            const ChannelAmplitudes a = amplitudes(spec.params, k);
            row.values = {a.reflectance(), a.transmittance(), a.intensity()};
            row.flags.assign(3, std::string(kFlagOk));
        } catch (const Error& e) {
            for (int i = 0; i < 3; ++i) push_failure(row, e);
        }
        return row;
    });
    return table;
}

SweepTable sweep_concurrence_dk(const SweepSpec& spec) {
    require_kind(spec, SweepKind::ConcurrenceVsDk);
    const std::vector<double> curves = curve_e_exc(spec);
    SweepTable table{"dk", {}, {}};
    std::vector<ScattererParams> params;
    for (double e : curves) {
        table.columns.push_back(curve_name(e));
        params.push_back(spec.params.with_e_exc(e));
    }
    const double u0 = spec.params.u0();
    table.rows = evaluate_grid(spec, [&](double dk) {
        SweepRow row{dk, {}, {}};
        for (const ScattererParams& p : params) {
            try {
                const TwoParticleInput in(p, spec.k1, spec.k1 + dk * u0);
                row.values.push_back(concurrence_reduced(in));
                row.flags.emplace_back(kFlagOk);
            } catch (const Error& e) {
                push_failure(row, e);
            }
        }
        return row;
    });
    return table;
}

SweepTable sweep_concurrence_g(const SweepSpec& spec) {
    require_kind(spec, SweepKind::ConcurrenceVsG);
    const std::vector<double> curves = curve_e_exc(spec);
    SweepTable table{"g", {}, {}};
    for (double e : curves) table.columns.push_back(curve_name(e));
    table.rows = evaluate_grid(spec, [&](double g) {
        SweepRow row{g, {}, {}};
        for (double e : curves) {
            try {
                const TwoParticleInput in(ScattererParams(spec.params.u0(), g, e), spec.k1, spec.k2);
                row.values.push_back(concurrence_reduced(in));
                row.flags.emplace_back(kFlagOk);
            } catch (const Error& e) {
                push_failure(row, e);
            }
        }
        return row;
    });
    return table;
}

SweepTable run_sweep(const SweepSpec& spec) {
    switch (spec.kind) {
        case SweepKind::TransmissionVsK: return sweep_transmission(spec);
        case SweepKind::ConcurrenceVsDk: return sweep_concurrence_dk(spec);
        case SweepKind::ConcurrenceVsG: return sweep_concurrence_g(spec);
    }
    throw Error(ErrorCode::InvalidArgument, "unknown sweep kind");
}

SweepSpec transmission_preset() {
    SweepSpec spec;
    spec.kind = SweepKind::TransmissionVsK;
    spec.params = ScattererParams(1.0, 0.5, 1.0);
    spec.range = {0.05, 3.0, 256};
    return spec;
}

SweepSpec separation_preset() {
    SweepSpec spec;
    spec.kind = SweepKind::ConcurrenceVsDk;
    spec.params = ScattererParams(1.0, 0.5, kRegimeOpen);
    spec.k1 = 0.5;
    spec.range = {2.0 / 400.0, 2.0, 400};
    spec.extra = {kRegimeOpen, kRegimeCrossing, kRegimeClosed};
    return spec;
}

SweepSpec coupling_preset() {
    SweepSpec spec;
    spec.kind = SweepKind::ConcurrenceVsG;
    spec.params = ScattererParams(1.0, 0.0, 0.0);
    spec.k1 = 0.5;
    spec.k2 = 1.5;
    spec.range = {0.0, 3.0, 301};
    spec.extra = {0.0, 0.125, 0.5, 1.0};
    return spec;
}

std::string_view feature_kind_name(FeatureKind kind) noexcept {
    switch (kind) {
        case FeatureKind::Threshold: return "threshold";
        case FeatureKind::TotalReflection: return "total_reflection";
        case FeatureKind::ReflectionZero: return "reflection_zero";
    }
    return "unknown";
}

std::vector<Feature> locate_features(const ScattererParams& params, double k1) {
    if (!(k1 > 0.0) || !std::isfinite(k1)) {
        throw Error(ErrorCode::NonPositiveMomentum, "reference momentum must be > 0");
    }
    auto paired_eta = [&](double k) -> std::optional<double> {
        try {
            return concurrence_postselected(TwoParticleInput(params, k1, k));
        } catch (const Error&) {
            return std::nullopt;
        }
    };

    std::vector<Feature> features;
    const double kth = params.threshold_momentum();
    features.push_back({FeatureKind::Threshold, kth, paired_eta(kth)});
    if (auto k = total_reflection_momentum(params)) {
        features.push_back({FeatureKind::TotalReflection, *k, paired_eta(*k)});
    }
    if (auto k = find_reflection_zero(params)) {
        features.push_back({FeatureKind::ReflectionZero, *k, paired_eta(*k)});
    }
    return features;
}

std::vector<double> log_space(double lo, double hi, std::size_t n) {
    if (!(lo > 0.0) || !(hi > lo) || n < 2) {
        throw Error(ErrorCode::InvalidArgument, "log_space needs 0 < lo < hi and n >= 2");
    }
    std::vector<double> out(n);
    const double a = std::log(lo);
    const double b = std::log(hi);
    for (std::size_t i = 0; i < n; ++i) {
        out[i] = std::exp(a + (b - a) * static_cast<double>(i) / static_cast<double>(n - 1));
    }
    out.front() = lo;
    out.back() = hi;
    return out;
}

}  // namespace qscatter
