// coinduel — exact and Monte Carlo analysis of coin-elimination duel games.
//
// Subcommands reproduce every figure/table of the analysis from one command
// each: exact tie probabilities, expected game lengths, tie-vs-p curves,
// power-law and Gompertz fits, multicoin duality checks, escalating-hazard
// sweeps, and a correlation study. All stochastic commands are seeded and
// byte-reproducible, independent of --threads.
//
// Exit codes: 0 success, 2 usage error, 1 computational error.

#include <CLI11.hpp>
#include <json.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "coinduel/coinduel.hpp"

namespace {

using ordered_json = nlohmann::ordered_json;
using namespace coinduel;

constexpr std::uint64_t kDefaultSeed = 24301;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Parameter validation and game construction run under this wrapper so bad
/// inputs surface as usage errors (exit 2), not computational ones (exit 1).
template <class F>
auto usage_checked(F&& f) -> decltype(f()) {
    try {
        return f();
    } catch (const UsageError&) {
        throw;
    } catch (const std::exception& e) {
        throw UsageError(e.what());
    }
}

// ---------------------------------------------------------------- helpers

double sig15(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return std::stod(os.str());
}

std::string csv_num(double v) {
    std::ostringstream os;
    os.precision(15);
    os << v;
    return os.str();
}

ordered_json rational_json(const Rational& r) {
    return ordered_json{{"rational", r.to_fraction_string()}, {"decimal", sig15(r.to_double())}};
}

ordered_json report_json(const mc::SimReport& rep) {
    return ordered_json{{"runs", rep.runs},
                        {"ties", rep.ties},
                        {"p1_wins", rep.p1_wins},
                        {"p2_wins", rep.p2_wins},
                        {"capped", rep.capped},
                        {"mean_turns", sig15(rep.mean_turns)},
                        {"mean_turns_stderr", sig15(rep.mean_turns_stderr)},
                        {"tie_rate", sig15(rep.tie_rate)},
                        {"tie_rate_stderr", sig15(rep.tie_rate_stderr)},
                        {"seed", rep.seed}};
}

ordered_json fit_json(const fit::FitResult& f) {
    ordered_json params;
    for (const auto& [k, v] : f.params) params[k] = sig15(v);
    return ordered_json{{"params", params},
                        {"residual_sum_squares", f.residual_sum_squares},
                        {"converged", f.converged},
                        {"iterations", f.iterations},
                        {"grad_norm", f.grad_norm}};
}

std::vector<int> parse_int_list(const std::string& text) {
    std::vector<int> out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        if (item.empty()) continue;
        std::size_t used = 0;
        const int v = std::stoi(item, &used);
        if (used != item.size()) throw std::invalid_argument("bad integer in list: " + item);
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty list: " + text);
    return out;
}

// Grid syntax: "a,b,c" discrete values; "start:stop:count" when the third
// field is an integer, "start:stop:step" when it carries a decimal point.
// All parsed as exact rationals so step grids land on round endpoints.
std::vector<Rational> parse_grid(const std::string& text) {
    std::vector<Rational> out;
    if (text.find(':') != std::string::npos) {
        std::vector<std::string> parts;
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ':')) parts.push_back(item);
        if (parts.size() != 3) throw std::invalid_argument("grid: expected start:stop:count|step");
        const Rational start = Rational::from_decimal(parts[0]);
        const Rational stop = Rational::from_decimal(parts[1]);
        const bool is_count = parts[2].find('.') == std::string::npos;
        if (is_count) {
            const int count = std::stoi(parts[2]);
            if (count < 1) throw std::invalid_argument("grid: count must be >= 1");
            if (count == 1) return {start};
            const Rational step = (stop - start) / Rational(count - 1);
            for (int i = 0; i < count; ++i) out.push_back(start + Rational(i) * step);
        } else {
            const Rational step = Rational::from_decimal(parts[2]);
            if (step.sign() <= 0) throw std::invalid_argument("grid: step must be positive");
            for (Rational x = start; x <= stop; x += step) {
                out.push_back(x);
                if (out.size() > 100000) throw std::invalid_argument("grid: more than 100000 points");
            }
        }
    } else {
        std::stringstream ss(text);
        std::string item;
        while (std::getline(ss, item, ',')) {
            if (!item.empty()) out.push_back(Rational::from_decimal(item));
        }
    }
    if (out.empty()) throw std::invalid_argument("empty grid: " + text);
    return out;
}

struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::string to_string() const {
        std::ostringstream os;
        for (std::size_t i = 0; i < header.size(); ++i) os << (i ? "," : "") << header[i];
        os << "\n";
        for (const auto& row : rows) {
            for (std::size_t i = 0; i < row.size(); ++i) os << (i ? "," : "") << row[i];
            os << "\n";
        }
        return os.str();
    }
};

// Flattens a scalar result object into a one-row CSV (nested objects get
// dotted column names).
void flatten_json(const ordered_json& j, const std::string& prefix, CsvTable& out) {
    for (const auto& [key, value] : j.items()) {
        const std::string name = prefix.empty() ? key : prefix + "." + key;
        if (value.is_object()) {
            flatten_json(value, name, out);
        } else if (!value.is_array()) {
            out.header.push_back(name);
            out.rows[0].push_back(value.is_string() ? value.get<std::string>() : value.dump());
        }
    }
}

struct Emitter {
    std::string format = "json";
    std::string out_path;

    void emit(const ordered_json& manifest, const ordered_json& result,
              const std::optional<CsvTable>& curve = std::nullopt) const {
        const ordered_json report{{"manifest", manifest}, {"result", result}};
        std::string payload;
        if (format == "json") {
            payload = report.dump(2) + "\n";
        } else if (curve.has_value()) {
            payload = curve->to_string();
        } else {
            CsvTable flat;
            flat.rows.emplace_back();
            flatten_json(result, "", flat);
            payload = flat.to_string();
        }
        std::cout << payload;
        if (!out_path.empty()) {
            std::ofstream f(out_path, std::ios::binary);
            if (!f) throw std::runtime_error("cannot open output file: " + out_path);
            // files always carry the plot-ready CSV when the command makes one
            f << (curve.has_value() ? curve->to_string() : payload);
        }
    }
};

ordered_json make_manifest(const std::string& command, ordered_json parameters, std::uint64_t seed,
                           const std::string& out_path) {
    return ordered_json{{"command", command},
                        {"parameters", std::move(parameters)},
                        {"seed", seed},
                        {"output", out_path.empty() ? ordered_json(nullptr) : ordered_json(out_path)},
                        {"engine_version", std::string(kEngineVersion)}};
}

int resolve_threads(int flag_value) {
    if (flag_value > 0) return flag_value;
    if (const char* env = std::getenv("COIN_DUEL_THREADS")) {
        const int v = std::atoi(env);
        if (v > 0) return v;
    }
    return 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"coinduel — exact and Monte Carlo analysis of coin-elimination duel games"};
    app.require_subcommand(1);

    std::string format = "json";
    app.add_option("--format", format, "Output format")->check(CLI::IsMember({"json", "csv"}));
    int threads_flag = 0;
    app.add_option("--threads", threads_flag,
                   "Worker threads for Monte Carlo (env COIN_DUEL_THREADS; results do not depend on this)");

    // ---- exact-tie ----
    auto* exact_tie = app.add_subcommand("exact-tie", "Exact tie probability (finite sum or lattice DP)");
    int et_k = 0, et_i1 = 0, et_i2 = 0;
    std::string et_p = "1/2";
    exact_tie->add_option("--k", et_k, "Symmetric start: both players hold k tokens");
    exact_tie->add_option("--i1", et_i1, "Player 1 starting count");
    exact_tie->add_option("--i2", et_i2, "Player 2 starting count");
    exact_tie->add_option("--p", et_p, "Head probability (decimal or fraction)");

    // ---- expected-turns ----
    auto* expected = app.add_subcommand("expected-turns", "Exact expected game length, optional simulation check");
    int xt_i1 = 0, xt_i2 = 0;
    std::uint64_t xt_runs = 0, xt_seed = kDefaultSeed;
    expected->add_option("--i1", xt_i1, "Player 1 starting count")->required();
    expected->add_option("--i2", xt_i2, "Player 2 starting count")->required();
    expected->add_option("--simulate", xt_runs, "Also simulate this many runs");
    expected->add_option("--seed", xt_seed, "Simulation seed");

    // ---- tie-curve ----
    auto* tie_curve = app.add_subcommand("tie-curve", "Simulated + exact tie probability across head probabilities");
    std::string tc_ks = "10,50", tc_grid = "0.05:1.0:0.05", tc_out;
    std::uint64_t tc_runs = 20000, tc_seed = kDefaultSeed;
    tie_curve->add_option("--ks", tc_ks, "Comma list of symmetric starting counts");
    tie_curve->add_option("--p-grid", tc_grid, "Head-probability grid (start:stop:count|step or comma list)");
    tie_curve->add_option("--runs", tc_runs, "Runs per grid point");
    tie_curve->add_option("--seed", tc_seed, "Seed");
    tie_curve->add_option("--out", tc_out, "Write the curve CSV here");

    // ---- powerlaw ----
    auto* powerlaw = app.add_subcommand("powerlaw", "Log-log power-law fit of exact tie probabilities");
    int pl_kmin = 50, pl_kmax = 110;
    long pl_check = 100000;
    double pl_eps = 1e-9;
    powerlaw->add_option("--k-min", pl_kmin, "Fit window lower edge");
    powerlaw->add_option("--k-max", pl_kmax, "Fit window upper edge");
    powerlaw->add_option("--check-at", pl_check, "Compare the prediction against the exact value at this k");
    powerlaw->add_option("--eps", pl_eps, "Tail bound for the exact check value");

    // ---- multicoin ----
    auto* multi = app.add_subcommand("multicoin", "Multicoin walk: simulation, exact walk law, duality check");
    std::string mcl_coins, mcl_convention = "exclude";
    int mcl_target = 10, mcl_floor = multicoin::MulticoinGame::kDefaultFloor, mcl_horizon = 0;
    std::uint64_t mcl_runs = 100000, mcl_seed = kDefaultSeed;
    bool mcl_exact = false, mcl_legacy = false, mcl_dual = false;
    multi->add_option("--coins", mcl_coins, "Comma list of coin values, e.g. 3,-2,-1")->required();
    multi->add_option("--target", mcl_target, "Cumulative-sum target");
    multi->add_option("--floor", mcl_floor, "Cap walks that dip below this (negative)");
    multi->add_option("--horizon", mcl_horizon, "Cap walks after this many rounds (default 10*target*m)");
    multi->add_option("--runs", mcl_runs, "Simulation runs (0 = exact only)");
    multi->add_option("--seed", mcl_seed, "Seed");
    multi->add_option("--convention", mcl_convention, "Tie convention for capped pairs")
        ->check(CLI::IsMember({"exclude", "include"}));
    multi->add_flag("--exact", mcl_exact, "Also compute the exact round-count law and tie probability");
    multi->add_flag("--legacy-appendix-b", mcl_legacy,
                    "Simulate the legacy accumulation variant (per-round sum carries over); forensic use");
    multi->add_flag("--dual-check", mcl_dual, "Also run the dual game and the increment-law equality check");

    // ---- evolving ----
    auto* evolve = app.add_subcommand("evolving", "Escalating-hazard game sweep over lambda");
    int ev_n = 200;
    std::string ev_grid = "0.1:5:30", ev_out;
    std::uint64_t ev_runs = 10000, ev_seed = kDefaultSeed;
    bool ev_exact = false, ev_fit = false;
    double ev_eps = 1e-10;
    evolve->add_option("--n", ev_n, "Starting tokens per player");
    evolve->add_option("--lambda-grid", ev_grid, "Rate-parameter grid (start:stop:count|step or comma list)");
    evolve->add_option("--runs", ev_runs, "Runs per grid point (0 = exact only)");
    evolve->add_option("--seed", ev_seed, "Seed");
    evolve->add_option("--eps", ev_eps, "Tail bound for the exact solver");
    evolve->add_flag("--exact", ev_exact, "Attach the exact tie probability per point");
    evolve->add_flag("--fit-gompertz", ev_fit, "Fit a Gompertz curve to the sweep");
    evolve->add_option("--out", ev_out, "Write the curve CSV here");

    // ---- correlation ----
    auto* corr = app.add_subcommand("correlation", "Pearson correlation of tie rate with lambda and with n");
    std::string co_lgrid = "0.1:5:30", co_ngrid = "50,100,200";
    std::uint64_t co_runs = 10000, co_seed = kDefaultSeed;
    corr->add_option("--lambda-grid", co_lgrid, "Rate-parameter grid");
    corr->add_option("--n-grid", co_ngrid, "Comma list of starting counts");
    corr->add_option("--runs", co_runs, "Runs per (lambda, n) cell");
    corr->add_option("--seed", co_seed, "Seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    const int threads = resolve_threads(threads_flag);

    try {
        if (app.got_subcommand(exact_tie)) {
            const bool has_k = exact_tie->count("--k") > 0;
            const bool has_i1 = exact_tie->count("--i1") > 0;
            const bool has_i2 = exact_tie->count("--i2") > 0;
            auto [i1, i2, p] = usage_checked([&] {
                if (has_k == (has_i1 || has_i2))
                    throw UsageError("exact-tie: give either --k or both --i1 and --i2");
                if (!has_k && !(has_i1 && has_i2))
                    throw UsageError("exact-tie: --i1 and --i2 go together");
                const Rational prob = Rational::from_decimal(et_p);
                if (prob.sign() <= 0 || prob > Rational(1))
                    throw UsageError("exact-tie: p must lie in (0, 1]");
                const int a = has_k ? et_k : et_i1;
                const int b = has_k ? et_k : et_i2;
                if (a < 1 || b < 1) throw UsageError("exact-tie: counts must be >= 1");
                return std::tuple<int, int, Rational>(a, b, prob);
            });
            const bool symmetric_fair = i1 == i2 && p == Rational(1, 2);
            const Rational tie =
                symmetric_fair ? exact::tie_prob_finite(i1) : markov::tie_prob_dp(i1, i2, p);
            ordered_json params{{"i1", i1}, {"i2", i2}, {"p", p.to_fraction_string()}};
            ordered_json result{{"method", symmetric_fair ? "finite_sum" : "lattice_dp"},
                                {"tie_probability", rational_json(tie)}};
            Emitter{format, ""}.emit(make_manifest("exact-tie", params, 0, ""), result);
            return 0;
        }

        if (app.got_subcommand(expected)) {
            const auto start = usage_checked([&] { return exact::StartCounts(xt_i1, xt_i2); });
            const Rational turns = exact::expected_turns(start);
            ordered_json params{{"i1", xt_i1}, {"i2", xt_i2}, {"simulate", xt_runs}};
            ordered_json result{{"expected_turns", rational_json(turns)}};
            if (xt_runs > 0) {
                const markov::BiasedGame game{start, Rational(1, 2)};
                const auto rep = mc::simulate_standard(game, xt_runs, xt_seed, threads);
                ordered_json sim = report_json(rep);
                sim["z_score"] = rep.mean_turns_stderr > 0
                                     ? sig15((rep.mean_turns - turns.to_double()) / rep.mean_turns_stderr)
                                     : 0.0;
                result["simulation"] = sim;
            }
            Emitter{format, ""}.emit(make_manifest("expected-turns", params, xt_seed, ""), result);
            return 0;
        }

        if (app.got_subcommand(tie_curve)) {
            const auto [ks, grid] = usage_checked([&] {
                auto k_list = parse_int_list(tc_ks);
                for (int k : k_list)
                    if (k < 1) throw UsageError("tie-curve: counts must be >= 1");
                auto p_grid = parse_grid(tc_grid);
                for (const auto& p : p_grid)
                    if (p.sign() <= 0 || p > Rational(1))
                        throw UsageError("tie-curve: p values must lie in (0, 1]");
                return std::pair(std::move(k_list), std::move(p_grid));
            });
            CsvTable curve;
            curve.header = {"k", "p", "tie_rate", "stderr", "exact"};
            ordered_json rows = ordered_json::array();
            std::uint64_t chain = tc_seed;
            for (int k : ks) {
                const std::uint64_t k_seed = rng::splitmix64(chain);
                const auto pts = mc::tie_curve_vs_p(k, grid, tc_runs, k_seed, threads);
                for (const auto& pt : pts) {
                    curve.rows.push_back({std::to_string(k), csv_num(pt.p), csv_num(pt.tie_rate),
                                          csv_num(pt.tie_rate_stderr), csv_num(pt.exact_tie)});
                    rows.push_back(ordered_json{{"k", k},
                                                {"p", sig15(pt.p)},
                                                {"tie_rate", sig15(pt.tie_rate)},
                                                {"stderr", sig15(pt.tie_rate_stderr)},
                                                {"exact", sig15(pt.exact_tie)}});
                }
            }
            ordered_json params{{"ks", tc_ks}, {"p_grid", tc_grid}, {"runs", tc_runs}};
            Emitter{format, tc_out}.emit(make_manifest("tie-curve", params, tc_seed, tc_out),
                                         ordered_json{{"rows", rows}}, curve);
            return 0;
        }

        if (app.got_subcommand(powerlaw)) {
            usage_checked([&] {
                if (pl_kmin < 1 || pl_kmax < pl_kmin)
                    throw UsageError("powerlaw: need 1 <= k-min <= k-max");
                if (pl_check < 1) throw UsageError("powerlaw: check-at must be >= 1");
                if (!(pl_eps > 0.0) || pl_eps >= 1.0)
                    throw UsageError("powerlaw: eps must lie in (0, 1)");
                return 0;
            });
            std::vector<std::pair<double, double>> pts;
            for (int k = pl_kmin; k <= pl_kmax; ++k)
                pts.emplace_back(static_cast<double>(k), exact::tie_prob_finite(k).to_double());
            const auto f = fit::powerlaw_fit(pts);
            const double predicted = fit::powerlaw_predict(f, static_cast<double>(pl_check));
            const auto exact_value = exact::tie_prob_truncated(pl_check, pl_eps);
            ordered_json params{
                {"k_min", pl_kmin}, {"k_max", pl_kmax}, {"check_at", pl_check}, {"eps", pl_eps}};
            ordered_json result{{"fit", fit_json(f)},
                                {"prediction",
                                 ordered_json{{"k", pl_check},
                                              {"predicted", sig15(predicted)},
                                              {"exact_value", sig15(exact_value.value)},
                                              {"exact_tail_bound", exact_value.tail_bound},
                                              {"abs_error", sig15(std::abs(predicted - exact_value.value))}}}};
            Emitter{format, ""}.emit(make_manifest("powerlaw", params, 0, ""), result);
            return 0;
        }

        if (app.got_subcommand(multi)) {
            const auto game = usage_checked([&] {
                const multicoin::CoinSet coins(parse_int_list(mcl_coins));
                const int horizon =
                    mcl_horizon > 0 ? mcl_horizon
                                    : multicoin::MulticoinGame::default_horizon(mcl_target, coins.size());
                return multicoin::MulticoinGame(coins, mcl_target, mcl_floor, horizon);
            });
            const auto convention = mcl_convention == "include"
                                        ? multicoin::TieConvention::include_capped
                                        : multicoin::TieConvention::exclude_capped;
            const auto mode =
                mcl_legacy ? mc::MulticoinMode::legacy_accumulate : mc::MulticoinMode::stated;

            ordered_json params{{"coins", mcl_coins},
                                {"target", mcl_target},
                                {"floor", mcl_floor},
                                {"horizon", game.horizon},
                                {"runs", mcl_runs},
                                {"convention", mcl_convention},
                                {"legacy_appendix_b", mcl_legacy},
                                {"dual_check", mcl_dual},
                                {"exact", mcl_exact}};
            ordered_json result;
            if (mcl_runs > 0)
                result["simulation"] = report_json(
                    mc::simulate_multicoin(game, convention, mcl_runs, mcl_seed, threads, mode));
            if (mcl_exact) {
                const auto pmf = multicoin::round_count_pmf(game);
                result["exact"] = ordered_json{
                    {"tie_probability", sig15(multicoin::tie_prob_multicoin(game, convention))},
                    {"residual", rational_json(pmf.residual)},
                    {"resolved_rounds", pmf.support.size()}};
            }
            if (mcl_dual) {
                const auto rep = multicoin::duality_check(game.coins);
                ordered_json dual_block{{"zero_sum", rep.zero_sum}, {"pmf_equal", rep.pmf_equal}};
                if (mcl_runs > 0) {
                    const multicoin::MulticoinGame dual_game(multicoin::dual(game.coins), mcl_target,
                                                             mcl_floor, game.horizon);
                    std::uint64_t chain = mcl_seed;
                    const auto dual_rep = mc::simulate_multicoin(dual_game, convention, mcl_runs,
                                                                 rng::splitmix64(chain), threads, mode);
                    dual_block["dual_simulation"] = report_json(dual_rep);
                }
                result["duality"] = dual_block;
            }
            Emitter{format, ""}.emit(make_manifest("multicoin", params, mcl_seed, ""), result);
            return 0;
        }

        if (app.got_subcommand(evolve)) {
            const auto grid = usage_checked([&] {
                if (ev_n < 1) throw UsageError("evolving: n must be >= 1");
                if (!(ev_eps > 0.0)) throw UsageError("evolving: eps must be > 0");
                auto g = parse_grid(ev_grid);
                for (const auto& lam : g)
                    if (lam.sign() <= 0) throw UsageError("evolving: lambda values must be > 0");
                return g;
            });
            const bool with_mc = ev_runs > 0;
            const bool with_exact = ev_exact || !with_mc;
            CsvTable curve;
            curve.header = {"lambda"};
            if (with_mc) {
                curve.header.push_back("tie_rate");
                curve.header.push_back("stderr");
            }
            if (with_exact) curve.header.push_back("exact");
            ordered_json rows = ordered_json::array();
            std::vector<std::pair<double, double>> fit_pts;
            std::uint64_t chain = ev_seed;
            for (const auto& lam_r : grid) {
                const double lam = lam_r.to_double();
                const evolving::HazardGame game(ev_n, lam);
                ordered_json row{{"lambda", sig15(lam)}};
                std::vector<std::string> cells{csv_num(lam)};
                double fit_y = 0.0;
                if (with_mc) {
                    const auto rep = mc::simulate_evolving(game, ev_runs, rng::splitmix64(chain), threads);
                    row["tie_rate"] = sig15(rep.tie_rate);
                    row["stderr"] = sig15(rep.tie_rate_stderr);
                    cells.push_back(csv_num(rep.tie_rate));
                    cells.push_back(csv_num(rep.tie_rate_stderr));
                    fit_y = rep.tie_rate;
                }
                if (with_exact) {
                    const double ex = evolving::tie_prob_evolving_exact(game, ev_eps);
                    row["exact"] = sig15(ex);
                    cells.push_back(csv_num(ex));
                    fit_y = ex;
                }
                fit_pts.emplace_back(lam, fit_y);
                rows.push_back(row);
                curve.rows.push_back(cells);
            }
            ordered_json params{{"n", ev_n},     {"lambda_grid", ev_grid}, {"runs", ev_runs},
                                {"eps", ev_eps}, {"exact", ev_exact},      {"fit_gompertz", ev_fit}};
            ordered_json result{{"rows", rows}};
            if (ev_fit) result["gompertz_fit"] = fit_json(fit::gompertz_fit(fit_pts));
            Emitter{format, ev_out}.emit(make_manifest("evolving", params, ev_seed, ev_out), result, curve);
            return 0;
        }

        if (app.got_subcommand(corr)) {
            const auto [lgrid, ngrid] = usage_checked([&] {
                auto lg = parse_grid(co_lgrid);
                for (const auto& lam : lg)
                    if (lam.sign() <= 0) throw UsageError("correlation: lambda values must be > 0");
                auto ng = parse_int_list(co_ngrid);
                for (int n : ng)
                    if (n < 1) throw UsageError("correlation: n values must be >= 1");
                if (co_runs < 1) throw UsageError("correlation: runs must be >= 1");
                return std::pair(std::move(lg), std::move(ng));
            });
            std::vector<double> lam_col, n_col, tie_col;
            ordered_json rows = ordered_json::array();
            std::uint64_t chain = co_seed;
            for (int n : ngrid)
                for (const auto& lam_r : lgrid) {
                    const double lam = lam_r.to_double();
                    const auto rep = mc::simulate_evolving(evolving::HazardGame(n, lam), co_runs,
                                                           rng::splitmix64(chain), threads);
                    lam_col.push_back(lam);
                    n_col.push_back(static_cast<double>(n));
                    tie_col.push_back(rep.tie_rate);
                    rows.push_back(ordered_json{{"n", n},
                                                {"lambda", sig15(lam)},
                                                {"tie_rate", sig15(rep.tie_rate)},
                                                {"stderr", sig15(rep.tie_rate_stderr)}});
                }
            ordered_json params{{"lambda_grid", co_lgrid}, {"n_grid", co_ngrid}, {"runs", co_runs}};
            ordered_json result{{"r_lambda", sig15(fit::pearson(lam_col, tie_col))},
                                {"r_n", sig15(fit::pearson(n_col, tie_col))},
                                {"cells", rows}};
            Emitter{format, ""}.emit(make_manifest("correlation", params, co_seed, ""), result);
            return 0;
        }
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
