// SPDX-License-Identifier: Apache-2.0
// The element-wise scheme and the benchmark harvesting protocols, each run
// with its operating factor chosen on a grid.
#pragma once

#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ewris/beamforming.hpp"
#include "ewris/metrics.hpp"

namespace ewris {

enum class Strategy { EW, PS, TS, ES, RandomPhase, AO, NoEH };

std::string to_string(Strategy s);
Strategy parse_strategy(const std::string &s); // throws std::invalid_argument

// RNG stream ids inside one (point, trial).
enum Stream : std::uint64_t { kStreamLocation = 0, kStreamCe = 1, kStreamNlos = 2, kStreamEs = 3, kStreamPhase = 4 };

// Everything random about one Monte Carlo trial.
struct TrialInputs {
    ChannelSet truth; // channels used for scoring
    ChannelSet plan;  // what the BS believes: f_hat, h, g at u_hat
    Point3 u_hat;
    std::uint64_t es_seed = 0;
    std::uint64_t phase_seed = 0;
};

TrialInputs make_trial(const ScenarioConfig &cfg, std::uint64_t master, std::uint64_t point, std::uint64_t trial,
                       Exec exec = Exec::Parallel);
// Perfect knowledge: plan == truth.
TrialInputs perfect_trial(const ScenarioConfig &cfg, Exec exec = Exec::Parallel);

// Zone layouts shared by all location-driven strategies of one trial.
struct StrategyContext {
    const ScenarioConfig *cfg = nullptr;
    const TrialInputs *trial = nullptr;
    Algorithm1Plan plan;
    Exec exec = Exec::Serial;
};
StrategyContext make_context(const ScenarioConfig &cfg, const TrialInputs &trial, Exec exec = Exec::Serial);

// A fully specified operating point: per-RIS reflection diagonals, precoder,
// budgets and the accounting needed to score it.
struct Candidate {
    std::vector<CVec> phi;
    std::vector<Budget> budgets;
    std::vector<RisConfiguration> configs; // empty where the state is not element-wise binary
    CVec w;
    double tx_power_w = 0.0;
    double rate_scale = 1.0;  // fraction of the slot carrying data
    double external_w = 0.0;  // externally supplied RIS power

    bool sustainable() const;
    double harvested_w() const;
};

double candidate_se(const ScenarioConfig &cfg, const ChannelSet &ch, const Candidate &c, Exec exec = Exec::Serial);

struct StrategyOutcome {
    Strategy strategy = Strategy::EW;
    double factor = 0.0;
    double se = 0.0;
    double ee = 0.0;
    double harvested_w = 0.0;
    bool sustainable = false;
    int iterations = 0;     // AO only
    bool converged = true;  // AO only
    std::vector<RisConfiguration> configs;
};

// Per-factor candidates.
Candidate ew_candidate(const StrategyContext &ctx, double p);
Candidate ps_candidate(const StrategyContext &ctx, double eps);
Candidate ts_candidate(const StrategyContext &ctx, double kappa);
Candidate es_candidate(const StrategyContext &ctx, double p_es, const std::vector<std::uint32_t> &order);
Candidate random_phase_candidate(const StrategyContext &ctx, const std::vector<std::uint8_t> &reflective_all,
                                 Rng &rng);
Candidate noeh_candidate(const StrategyContext &ctx);

// Element order for ES on RIS k: a seeded uniform permutation.
std::vector<std::uint32_t> es_order(std::size_t n, Rng &rng);

// Grid 0, step, 2 step, ..., 1. score(x) returns (value, feasible). Feasible
// points beat infeasible ones; ties go to the smaller factor.
template <class F>
double grid_argmax(double step, F &&score)
{
    if (!(step > 0.0 && step <= 0.5)) throw std::domain_error("grid_argmax: step must lie in (0, 0.5]");
    const auto n = static_cast<std::size_t>(std::ceil(1.0 / step - 1e-9));
    double best_x = 0.0, best_v = -std::numeric_limits<double>::infinity();
    bool best_ok = false;
    for (std::size_t i = 0; i <= n; ++i) {
        const double x = std::min(1.0, static_cast<double>(i) * step);
        const auto [v, ok] = score(x);
        if ((ok && !best_ok) || (ok == best_ok && v > best_v)) {
            best_x = x;
            best_v = v;
            best_ok = ok;
        }
    }
    return best_x;
}

// Runs one strategy. A given factor skips the grid search.
StrategyOutcome run_strategy(Strategy s, const StrategyContext &ctx, std::optional<double> factor = std::nullopt);
StrategyOutcome optimize_factor(Strategy s, const StrategyContext &ctx, double step);

struct AoOptions {
    int max_iters = 30;
    double tol = 1e-9;
};
// Alternating optimisation with perfect CSI, started from the element-wise
// optimum. se_trace receives the accepted SE sequence.
StrategyOutcome csi_ao_baseline(const ScenarioConfig &cfg, const ChannelSet &truth, const AoOptions &opt = {},
                                std::vector<double> *se_trace = nullptr, Exec exec = Exec::Serial);

} // namespace ewris
