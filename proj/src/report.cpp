#include "ihara/report.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <future>
#include <sstream>

#include "ihara/error.hpp"

namespace ihara {
namespace {

using json = nlohmann::json;

class Stopwatch {
public:
    double lap() {
        const auto now = std::chrono::steady_clock::now();
        const double s = std::chrono::duration<double>(now - last_).count();
        last_ = now;
        return s;
    }

private:
    std::chrono::steady_clock::time_point last_ = std::chrono::steady_clock::now();
};

std::string format12(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}

json reals_json(const std::vector<double>& values) {
    json out = json::array();
    for (double v : values) {
        out.push_back(real_json(v));
    }
    return out;
}

json integers_json(std::span<const BigInt> values) {
    json out = json::array();
    for (const auto& v : values) {
        out.push_back(to_decimal(v));
    }
    return out;
}

json optional_real(const std::optional<double>& v) { return v ? real_json(*v) : json(nullptr); }

json verdict_json(const RamanujanVerdict& v) {
    return {{"route", std::string(to_string(v.route))},
            {"is_ramanujan", v.is_ramanujan},
            {"max_nontrivial_abs", optional_real(v.max_nontrivial_abs)},
            {"threshold", real_json(v.threshold)},
            {"witness_eigenvalue", optional_real(v.witness_eigenvalue)},
            {"witness_k", v.witness_k ? json(*v.witness_k) : json(nullptr)},
            {"horizon", v.horizon ? json(*v.horizon) : json(nullptr)}};
}

EstimatorOutcome run_estimator(const HkSequence& seq, double tol) {
    try {
        return {"ok", "", estimate_max_eigenvalue(seq, tol)};
    } catch (const NotApplicable& e) {
        return {"not_applicable", e.what(), std::nullopt};
    } catch (const SignMismatch& e) {
        return {"sign_mismatch", e.what(), std::nullopt};
    }
}

} // namespace

bool AnalysisReport::consistent() const {
    const bool verdicts_coherent = !(spectral_verdict.is_ramanujan && !hk_verdict.is_ramanujan);
    return routes_agree() && zeta_series.passed && functional_equation_max_residual < 1e-8 && verdicts_coherent;
}

AnalysisReport analyze(const Multigraph& g, const std::string& source, const AnalysisOptions& options) {
    if (options.horizon < 10 || options.horizon > kMaxHorizon) {
        throw InputError("horizon must be in [10, " + std::to_string(kMaxHorizon) + "], got " +
                         std::to_string(options.horizon));
    }
    AnalysisReport r;
    Stopwatch clock;
    r.source = source;
    r.profile = profile(g);
    r.graph = parameters(g, r.profile);
    r.edge_count = g.edge_count();
    r.loop_count = g.loop_count();
    r.horizon = options.horizon;
    const int K = options.horizon;

    // The census and the eigensolve are independent.
    auto census = std::async(std::launch::async, [&g, K] { return cycle_census(g, K); });
    r.spectrum = graph_spectrum(g);
    r.nontrivial = nontrivial_spectrum(r.spectrum, r.profile);
    r.timings.push_back({"spectrum", clock.lap()});
    r.census = census.get();
    r.timings.push_back({"census", clock.lap()});

    const auto zeta_inv = zeta_inverse(r.spectrum, r.graph.q, r.graph.n, K);
    const auto xi = xi_rational(r.nontrivial, K);
    r.zeta_inverse = zeta_inv.to_doubles();
    r.xi_numerator = xi.numerator().to_doubles();
    r.xi_denominator = xi.denominator().to_doubles();
    const auto sweep = functional_equation_sweep(r.nontrivial, options.seed, options.samples, K);
    r.functional_equation_max_residual = sweep.max_residual;
    r.functional_equation_samples = sweep.evaluated;
    r.functional_equation_skipped = sweep.skipped;
    r.functional_equation_reexpanded = sweep.retried;
    r.zeta_series = log_series_zeta_check(r.census, zeta_inv, std::min(options.zeta_check_horizon, K));
    r.timings.push_back({"zeta_xi", clock.lap()});

    r.routes.push_back(hk_spectral(scaled_spectrum(r.nontrivial), r.graph, K));
    r.routes.push_back(hk_from_nk(r.census.geodesic, r.graph, K));
    r.routes.push_back(hk_from_ck(r.census.closed_walks, r.graph, K));
    r.routes.push_back(hk_series(xi, r.graph, K));
    for (std::size_t i = 0; i < r.routes.size(); ++i) {
        for (std::size_t j = i + 1; j < r.routes.size(); ++j) {
            r.max_route_discrepancy = std::max(r.max_route_discrepancy, max_scaled_difference(r.routes[i], r.routes[j]));
        }
    }
    r.timings.push_back({"hk_routes", clock.lap()});

    const HkSequence& h = r.routes.front();
    r.spectral_verdict = ramanujan_spectral(r.nontrivial);
    r.hk_verdict = ramanujan_hk(h, options.tol);
    r.hasse_weil = hasse_weil_check(r.census.geodesic, r.graph, K);
    const double max_abs = r.spectral_verdict.max_nontrivial_abs.value_or(0.0);
    const int radicand = r.graph.bipartite ? 2 * r.graph.n - 7 : 4 * r.graph.n - 7;
    if (radicand >= 1) {
        for (int k = 2; k <= K; k += 2) {
            if (h.h(k) >= 0.0) {
                const double bound = even_k_bound(k, r.graph.n, r.graph.q, r.graph.bipartite);
                r.even_k_bounds.push_back({k, h.h(k), bound, max_abs <= bound + 1e-9});
            }
        }
    }
    if (r.spectral_verdict.is_ramanujan) {
        r.hk_upper = hk_upper_check(h);
    }
    r.estimator = run_estimator(h, options.tol);
    r.timings.push_back({"checks", clock.lap()});
    return r;
}

json real_json(double value) {
    if (!std::isfinite(value)) {
        return nullptr;
    }
    const double rounded = std::stod(format12(value));
    return rounded == 0.0 ? 0.0 : rounded;
}

json census_json(const CycleCensus& census) {
    return {{"K", census.horizon}, {"C", integers_json(census.closed_walks)}, {"N", integers_json(census.geodesic)}};
}

json graph_json(const AnalysisReport& r) {
    return {{"n", r.graph.n},
            {"q", r.graph.q},
            {"bipartite", r.graph.bipartite},
            {"connected", r.profile.connected},
            {"edges", r.edge_count},
            {"loops", r.loop_count},
            {"source", r.source},
            // q = 1: the trivial poles +-1 and +-1/q coincide.
            {"q_degenerate", r.graph.q == 1}};
}

json zeta_json(const AnalysisReport& r) {
    json series = {{"K", static_cast<int>(r.zeta_series.residuals.size())},
                   {"passed", r.zeta_series.passed},
                   {"max_residual", real_json(r.zeta_series.residuals.empty()
                                                  ? 0.0
                                                  : *std::max_element(r.zeta_series.residuals.begin(),
                                                                      r.zeta_series.residuals.end()))}};
    return {{"zeta_inverse", reals_json(r.zeta_inverse)},
            {"xi_numerator", reals_json(r.xi_numerator)},
            {"xi_denominator", reals_json(r.xi_denominator)},
            {"functional_equation",
             {{"samples", r.functional_equation_samples},
              {"skipped_poles", r.functional_equation_skipped},
              {"reexpanded", r.functional_equation_reexpanded},
              {"max_residual", real_json(r.functional_equation_max_residual)}}},
            {"series_check", series}};
}

json verdicts_json(const AnalysisReport& r) {
    json hasse = {{"branch", r.hasse_weil.branch == HasseWeilBranch::bipartite ? "bipartite" : "nonbipartite"},
                  {"all_satisfied", r.hasse_weil.all_satisfied()},
                  {"first_violation", r.hasse_weil.first_violation() ? json(*r.hasse_weil.first_violation())
                                                                     : json(nullptr)}};
    json records = json::array();
    for (const auto& rec : r.hasse_weil.records) {
        records.push_back({{"k", rec.k}, {"lhs", to_decimal(rec.lhs)}, {"rhs", real_json(rec.rhs)}, {"satisfied", rec.satisfied}});
    }
    hasse["records"] = std::move(records);

    json bounds = json::array();
    for (const auto& b : r.even_k_bounds) {
        bounds.push_back({{"k", b.k}, {"h_k", real_json(b.h_k)}, {"bound", real_json(b.bound)}, {"holds", b.holds}});
    }
    return {{"spectral", verdict_json(r.spectral_verdict)},
            {"hk", verdict_json(r.hk_verdict)},
            {"hasse_weil", std::move(hasse)},
            {"even_k_bounds", std::move(bounds)},
            {"hk_upper", r.hk_upper ? json(*r.hk_upper) : json(nullptr)}};
}

json estimator_json(const EstimatorOutcome& o) {
    json out = {{"status", o.status}, {"message", o.message}};
    if (o.estimate) {
        out["estimate"] = real_json(o.estimate->estimate);
        out["k_used"] = o.estimate->k_used;
        out["converged"] = o.estimate->converged;
        out["mu"] = real_json(o.estimate->mu);
        out["implied_max_eigenvalue"] = real_json(o.estimate->implied_max_eigenvalue);
    } else {
        out["estimate"] = nullptr;
        out["k_used"] = nullptr;
        out["converged"] = nullptr;
        out["mu"] = nullptr;
        out["implied_max_eigenvalue"] = nullptr;
    }
    return out;
}

json to_json(const AnalysisReport& r, bool include_timings) {
    json h = {{"max_route_discrepancy", real_json(r.max_route_discrepancy)}, {"routes_agree", r.routes_agree()}};
    for (const auto& seq : r.routes) {
        h[std::string(to_string(seq.route))] = reals_json(seq.values);
    }
    json out = {{"schema", kSchemaVersion},
                {"tool", {{"name", "ihara"}, {"version", kToolVersion}}},
                {"horizon", r.horizon},
                {"graph", graph_json(r)},
                {"spectrum", reals_json(r.spectrum.values)},
                {"nontrivial_spectrum", reals_json(r.nontrivial.values)},
                {"census", census_json(r.census)},
                {"zeta", zeta_json(r)},
                {"h", std::move(h)},
                {"verdicts", verdicts_json(r)},
                {"estimator", estimator_json(r.estimator)},
                {"consistent", r.consistent()}};
    if (include_timings) {
        json t = json::object();
        for (const auto& s : r.timings) {
            t[s.stage] = real_json(s.seconds);
        }
        out["timings"] = std::move(t);
    }
    return out;
}

std::string series_csv(std::span<const HkSequence> routes) {
    std::ostringstream out;
    if (routes.size() == 1) {
        const auto& seq = routes.front();
        out << "k,h_k,route\n";
        for (int k = 1; k <= seq.horizon(); ++k) {
            out << k << ',' << format12(seq.h(k)) << ',' << to_string(seq.route) << '\n';
        }
        return out.str();
    }
    out << 'k';
    int K = routes.empty() ? 0 : routes.front().horizon();
    for (const auto& seq : routes) {
        out << ',' << to_string(seq.route);
        K = std::min(K, seq.horizon());
    }
    out << '\n';
    for (int k = 1; k <= K; ++k) {
        out << k;
        for (const auto& seq : routes) {
            out << ',' << format12(seq.h(k));
        }
        out << '\n';
    }
    return out.str();
}

} // namespace ihara
