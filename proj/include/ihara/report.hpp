#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "ihara/census.hpp"
#include "ihara/graph.hpp"
#include "ihara/hk.hpp"
#include "ihara/ramanujan.hpp"
#include "ihara/spectral.hpp"
#include "ihara/zeta.hpp"

namespace ihara {

inline constexpr const char* kToolVersion = "0.1.0";
inline constexpr int kSchemaVersion = 1;
inline constexpr int kMaxHorizon = 200;
inline constexpr double kRouteTolerance = 1e-6;

struct AnalysisOptions {
    int horizon = kDefaultHorizon;
    double tol = kSignTolerance;
    std::uint64_t seed = kDefaultSeed;
    int samples = 100;
    int zeta_check_horizon = 10;
};

struct EvenKBound {
    int k;
    double h_k;
    double bound;
    bool holds;  // max nontrivial |lambda| <= bound + 1e-9
};

struct EstimatorOutcome {
    std::string status;  // "ok", "not_applicable" or "sign_mismatch"
    std::string message;
    std::optional<EigenvalueEstimate> estimate;
};

struct StageTiming {
    std::string stage;
    double seconds;
};

struct AnalysisReport {
    std::string source;
    GraphProfile profile;
    GraphParameters graph;
    std::size_t edge_count = 0;
    std::size_t loop_count = 0;
    int horizon = 0;

    Spectrum spectrum;
    NontrivialSpectrum nontrivial;
    CycleCensus census;

    std::vector<double> zeta_inverse;
    std::vector<double> xi_numerator;
    std::vector<double> xi_denominator;
    double functional_equation_max_residual = 0.0;
    int functional_equation_samples = 0;
    int functional_equation_skipped = 0;
    int functional_equation_reexpanded = 0;
    ZetaSeriesCheck zeta_series;

    std::vector<HkSequence> routes;  // spectral, from_Nk, from_Ck, series
    double max_route_discrepancy = 0.0;

    RamanujanVerdict spectral_verdict;
    RamanujanVerdict hk_verdict;
    HasseWeilReport hasse_weil;
    std::vector<EvenKBound> even_k_bounds;
    std::optional<bool> hk_upper;  // evaluated only for spectrally Ramanujan graphs
    EstimatorOutcome estimator;

    std::vector<StageTiming> timings;

    bool routes_agree() const { return max_route_discrepancy <= kRouteTolerance; }
    bool consistent() const;
};

// Runs profile -> spectrum -> census -> zeta/xi -> four h_k routes -> checks.
// Throws InputError when the graph violates the standing assumptions.
AnalysisReport analyze(const Multigraph& g, const std::string& source, const AnalysisOptions& options = {});

// JSON with sorted keys and reals rounded to 12 significant digits. Timings are
// wall-clock and therefore only emitted on request.
nlohmann::json to_json(const AnalysisReport& report, bool include_timings = false);

nlohmann::json graph_json(const AnalysisReport& report);
nlohmann::json zeta_json(const AnalysisReport& report);
nlohmann::json verdicts_json(const AnalysisReport& report);
nlohmann::json estimator_json(const EstimatorOutcome& outcome);
nlohmann::json census_json(const CycleCensus& census);

// Real rounded to 12 significant digits; null when not finite.
nlohmann::json real_json(double value);

// "k,h_k,route" rows for one sequence, or "k,<route>,<route>,..." columns when
// several are given.
std::string series_csv(std::span<const HkSequence> routes);

} // namespace ihara
