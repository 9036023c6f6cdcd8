// ihara: Ihara zeta / xi analysis of regular multigraphs.
//
// Exit codes: 0 success, 1 certification refuted under --require-ramanujan,
// 2 invalid input or usage, 3 internal consistency failure.

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "ihara/edge_list.hpp"
#include "ihara/error.hpp"
#include "ihara/generators.hpp"
#include "ihara/report.hpp"

namespace {

using json = nlohmann::json;

constexpr int kExitRefuted = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct Options {
    std::string input;
    int horizon = ihara::kDefaultHorizon;
    std::string out;
    std::string format;
    std::string route = "all";
    bool require_ramanujan = false;
    bool timings = false;
    double tol = ihara::kSignTolerance;
};

class UsageError : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

ihara::Multigraph load(const std::string& input) {
    if (ihara::is_generator_spec(input)) {
        return ihara::generate_from_spec(input);
    }
    if (!std::filesystem::exists(input)) {
        throw ihara::InputError("'" + input + "' is neither a generator spec nor a readable file");
    }
    return ihara::read_edge_list(std::filesystem::path(input));
}

std::uint64_t seed_from_env() {
    const char* raw = std::getenv("IHARA_SEED");
    if (raw == nullptr || *raw == '\0') {
        return ihara::kDefaultSeed;
    }
    try {
        return std::stoull(raw);
    } catch (const std::exception&) {
        throw UsageError(std::string("IHARA_SEED must be an unsigned integer, got '") + raw + "'");
    }
}

void check_horizon(int K, int minimum) {
    if (K < minimum || K > ihara::kMaxHorizon) {
        throw UsageError("--k must be in [" + std::to_string(minimum) + ", " + std::to_string(ihara::kMaxHorizon) +
                         "], got " + std::to_string(K));
    }
    if (K > 120) {
        std::cerr << "warning: --k " << K << " is expensive (exact census and high-precision series)\n";
    }
}

void emit(const Options& opt, const std::string& text) {
    if (opt.out.empty()) {
        std::cout << text;
        return;
    }
    std::ofstream file(opt.out);
    if (!file) {
        throw UsageError("cannot write '" + opt.out + "'");
    }
    file << text;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

ihara::AnalysisReport run_analysis(const Options& opt) {
    check_horizon(opt.horizon, 10);
    const auto g = load(opt.input);
    ihara::AnalysisOptions options;
    options.horizon = opt.horizon;
    options.tol = opt.tol;
    options.seed = seed_from_env();
    return ihara::analyze(g, opt.input, options);
}

int finish(const Options& opt, const ihara::AnalysisReport& report) {
    if (!report.consistent()) {
        std::cerr << "internal consistency failure: route discrepancy " << report.max_route_discrepancy
                  << ", functional equation residual " << report.functional_equation_max_residual << '\n';
        return kExitInternal;
    }
    if (opt.require_ramanujan && !(report.spectral_verdict.is_ramanujan && report.hk_verdict.is_ramanujan)) {
        std::cerr << "certification refuted: graph is not Ramanujan\n";
        return kExitRefuted;
    }
    return 0;
}

int cmd_analyze(const Options& opt) {
    const auto report = run_analysis(opt);
    if (!opt.format.empty() && opt.format != "json") {
        throw UsageError("analyze supports --format json only");
    }
    emit(opt, dump(ihara::to_json(report, opt.timings)));
    return finish(opt, report);
}

int cmd_check(const Options& opt) {
    const auto report = run_analysis(opt);
    json out = {{"schema", ihara::kSchemaVersion},
                {"horizon", report.horizon},
                {"graph", ihara::graph_json(report)},
                {"verdicts", ihara::verdicts_json(report)},
                {"consistent", report.consistent()}};
    emit(opt, dump(out));
    return finish(opt, report);
}

int cmd_estimate(const Options& opt) {
    const auto report = run_analysis(opt);
    json out = {{"schema", ihara::kSchemaVersion},
                {"horizon", report.horizon},
                {"graph", ihara::graph_json(report)},
                {"max_nontrivial_abs", ihara::real_json(report.spectral_verdict.max_nontrivial_abs.value_or(0.0))},
                {"estimator", ihara::estimator_json(report.estimator)}};
    emit(opt, dump(out));
    return finish(opt, report);
}

int cmd_zeta(const Options& opt) {
    const auto report = run_analysis(opt);
    json out = {{"schema", ihara::kSchemaVersion}, {"graph", ihara::graph_json(report)}, {"zeta", ihara::zeta_json(report)}};
    emit(opt, dump(out));
    return finish(opt, report);
}

int cmd_census(const Options& opt) {
    check_horizon(opt.horizon, 1);
    const auto g = load(opt.input);
    const auto p = ihara::profile(g);
    json out = {{"schema", ihara::kSchemaVersion},
                {"n", g.vertex_count()},
                {"q", p.q},
                {"census", ihara::census_json(ihara::cycle_census(g, opt.horizon))}};
    emit(opt, dump(out));
    return 0;
}

int cmd_series(const Options& opt) {
    check_horizon(opt.horizon, 0);
    if (!opt.format.empty() && opt.format != "csv") {
        throw UsageError("series supports --format csv only");
    }
    const auto g = load(opt.input);
    const auto p = ihara::profile(g);
    const auto params = ihara::parameters(g, p);
    const int K = opt.horizon;
    const bool all = opt.route == "all";

    std::vector<ihara::HkSequence> routes;
    if (K == 0) {
        // Header only; the sequences are empty.
        if (all) {
            for (auto r : {ihara::HkRoute::spectral, ihara::HkRoute::from_nk, ihara::HkRoute::from_ck, ihara::HkRoute::series}) {
                routes.push_back({{}, r, params});
            }
        } else {
            routes.push_back({{}, ihara::HkRoute::spectral, params});
        }
        emit(opt, ihara::series_csv(routes));
        return 0;
    }

    std::optional<ihara::NontrivialSpectrum> ns;
    std::optional<ihara::CycleCensus> census;
    auto nontrivial = [&]() -> const ihara::NontrivialSpectrum& {
        if (!ns) {
            ns = ihara::nontrivial_spectrum(ihara::graph_spectrum(g), p);
        }
        return *ns;
    };
    auto counts = [&]() -> const ihara::CycleCensus& {
        if (!census) {
            census = ihara::cycle_census(g, K);
        }
        return *census;
    };
    if (all || opt.route == "spectral") {
        routes.push_back(ihara::hk_spectral(ihara::scaled_spectrum(nontrivial()), params, K));
    }
    if (all || opt.route == "nk") {
        routes.push_back(ihara::hk_from_nk(counts().geodesic, params, K));
    }
    if (all || opt.route == "ck") {
        routes.push_back(ihara::hk_from_ck(counts().closed_walks, params, K));
    }
    if (all || opt.route == "series") {
        routes.push_back(ihara::hk_series(ihara::xi_rational(nontrivial(), K), params, K));
    }
    emit(opt, ihara::series_csv(routes));
    if (all) {
        double worst = 0.0;
        for (std::size_t i = 1; i < routes.size(); ++i) {
            worst = std::max(worst, ihara::max_scaled_difference(routes[0], routes[i]));
        }
        if (worst > ihara::kRouteTolerance) {
            std::cerr << "internal consistency failure: routes disagree by " << worst << '\n';
            return kExitInternal;
        }
    }
    return 0;
}

int cmd_generate(const Options& opt) {
    if (!ihara::is_generator_spec(opt.input)) {
        throw ihara::InputError("unknown generator spec '" + opt.input + "'");
    }
    std::ostringstream text;
    ihara::write_edge_list(text, ihara::generate_from_spec(opt.input));
    emit(opt, text.str());
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Ihara zeta and xi functions of regular multigraphs, h_k sequences and Ramanujan checks"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&opt](CLI::App* sub, bool with_k = true) {
        sub->add_option("input", opt.input, "edge-list file or generator spec (petersen, complete:4, prism:24, ...)")
            ->required();
        sub->add_option("--out", opt.out, "write to this path instead of stdout");
        if (with_k) {
            sub->add_option("--k", opt.horizon, "horizon K (default 50, at most 200)");
        }
    };
    auto add_verdict_flags = [&opt](CLI::App* sub) {
        sub->add_flag("--require-ramanujan", opt.require_ramanujan, "exit 1 when the graph is not Ramanujan");
        sub->add_option("--tol", opt.tol, "relative tolerance for h_k sign tests");
    };

    auto* analyze = app.add_subcommand("analyze", "full analysis report as JSON");
    add_common(analyze);
    add_verdict_flags(analyze);
    analyze->add_option("--format", opt.format, "json");
    analyze->add_flag("--timings", opt.timings, "include wall-clock stage timings (breaks byte determinism)");

    auto* series = app.add_subcommand("series", "h_k sequence as CSV");
    add_common(series);
    series->add_option("--route", opt.route, "spectral | nk | ck | series | all")
        ->check(CLI::IsMember({"spectral", "nk", "ck", "series", "all"}));
    series->add_option("--format", opt.format, "csv");

    auto* census = app.add_subcommand("census", "closed-walk and geodesic-cycle counts as JSON");
    add_common(census);

    auto* zeta = app.add_subcommand("zeta", "Z(u)^-1 and Xi(u) coefficients as JSON");
    add_common(zeta);

    auto* check = app.add_subcommand("check", "Ramanujan verdicts, Hasse-Weil and even-k bounds");
    add_common(check);
    add_verdict_flags(check);

    auto* estimate = app.add_subcommand("estimate", "largest nontrivial eigenvalue from the h_2k tail");
    add_common(estimate);
    add_verdict_flags(estimate);

    auto* generate = app.add_subcommand("generate", "write a generated graph as an edge list");
    add_common(generate, false);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return kExitInput;
    }

    try {
        if (*analyze) {
            return cmd_analyze(opt);
        }
        if (*series) {
            return cmd_series(opt);
        }
        if (*census) {
            return cmd_census(opt);
        }
        if (*zeta) {
            return cmd_zeta(opt);
        }
        if (*check) {
            return cmd_check(opt);
        }
        if (*estimate) {
            return cmd_estimate(opt);
        }
        if (*generate) {
            return cmd_generate(opt);
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitInput;
    } catch (const ihara::InputError& e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kExitInput;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << '\n';
        return kExitInternal;
    }
    return kExitInput;
}
