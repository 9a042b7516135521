#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "cwg/game.hpp"

namespace cwg {

struct ExperimentConfig {
    std::string kind = "bias-curve";
    std::vector<int> n_grid;
    std::vector<int> q_grid;
    std::vector<double> p_grid;  // absolute edge probabilities
    std::vector<double> c_grid;  // multipliers of n^{-1/m2(H)}
    int repetitions = 20;
    uint64_t seed = 1;
    std::string waiter = "star";
    std::string client = "random";
    std::string pattern = "K3";
    int q = 1;
    int k = 2;  // tree-game parameter
    int solver_budget = 16;
    int threads = 0;  // 0 = hardware concurrency
    std::string out_dir = ".";
    std::string format = "csv";  // csv | svg | both
};

/// "key = value" lines, '#' comments. Grids are comma-separated.
ExperimentConfig load_config(std::istream& in);
void apply_config_entry(ExperimentConfig& cfg, const std::string& key, const std::string& value);

struct WilsonInterval {
    double center = 0, half = 0;
    double lo() const { return center - half; }
    double hi() const { return center + half; }
};
WilsonInterval wilson(long long successes, long long trials, double z = 1.959963984540054);

// ------------------------------------------------------------------- rows ---

struct BiasCurveRow {
    int n = 0, q = 0, rep = 0;
    std::string waiter, client;
    int max_star = 0, max_component = 0, longest_path = 0;
    bool path_exact = true;
    double bound = 0;  // the matching guarantee for this waiter at (n,q)
    uint64_t seed = 0;
};

struct ThresholdRow {
    int n = 0, rep = 0, q = 0;
    double p = 0, c = 0;
    std::string mode;  // exact-empty | exact-components | played | played-budget
    bool client_win = false;
    uint64_t seed = 0;
};

struct HittingTimeRow {
    int n = 0, rep = 0;
    int tau_win = 0;     // first prefix where the decision procedure says Client wins
    int tau_struct = 0;  // first prefix containing the 5-vertex witness
    bool flagged = false;
    uint64_t seed = 0;
};

struct TreeGameRow {
    int k = 0, q = 0, m = 0, rep = 0;
    std::string waiter;
    bool client_win = false;
    bool quota_met = false;
    double phi_t = 0;
    uint64_t seed = 0;
};

std::vector<BiasCurveRow> bias_curve(const ExperimentConfig& cfg);
std::vector<ThresholdRow> threshold_scan(const ExperimentConfig& cfg);
std::vector<HittingTimeRow> hitting_time(const ExperimentConfig& cfg);
std::vector<TreeGameRow> tree_game(const ExperimentConfig& cfg);

/// Exact-when-possible decision of the triangle game on an arbitrary board:
/// core extraction, biconnected split, per-component solving; Client wins iff
/// he wins some component. Returns nullopt when a component exceeds the
/// solver budget.
std::optional<bool> decide_triangle_game_exact(const Graph& g, int q, int solver_budget = 16);

// -------------------------------------------------------------------- i/o ---

void write_bias_curve_csv(std::ostream& out, const std::vector<BiasCurveRow>& rows);
void write_threshold_csv(std::ostream& out, const std::vector<ThresholdRow>& rows);
void write_hitting_csv(std::ostream& out, const std::vector<HittingTimeRow>& rows);
void write_tree_game_csv(std::ostream& out, const std::vector<TreeGameRow>& rows);

struct SvgSeries {
    std::string label;
    std::string color = "#1f77b4";
    std::vector<std::pair<double, double>> points;
};

/// One self-contained chart per file; no external renderer.
void write_svg_chart(std::ostream& out, const std::string& title, const std::string& xlabel,
                     const std::string& ylabel, const std::vector<SvgSeries>& series,
                     bool log_x = false);

/// Runs `fn(i)` for i in [0, count) on a small thread pool; results land at
/// their own indices, so the merge order never depends on scheduling.
void parallel_for(int count, int threads, const std::function<void(int)>& fn);

}  // namespace cwg
