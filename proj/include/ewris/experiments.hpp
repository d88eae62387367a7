// SPDX-License-Identifier: Apache-2.0
// Scenario files, seeded parameter sweeps, figure presets and CSV output.
#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "ewris/metrics.hpp"
#include "ewris/strategies.hpp"

namespace ewris {

// JSON scenario. Missing fields keep their defaults; unknown fields and bad
// values raise ValidationError naming the field.
ScenarioConfig parse_scenario(const std::string &text);
ScenarioConfig load_scenario(const std::string &path);
std::string dump_scenario(const ScenarioConfig &cfg);
void save_scenario(const ScenarioConfig &cfg, const std::string &path);

struct SweepSpec {
    std::string parameter = "transmit_power_dBm";
    std::vector<double> values;
    std::vector<Strategy> strategies{Strategy::EW};
    std::size_t trials = 1;
    std::uint64_t seed = 1;
    std::optional<double> factor; // fixed operating factor instead of the grid search
};

const std::vector<std::string> &sweep_parameters();
void check_sweep(const SweepSpec &spec); // throws ValidationError
SweepSpec parse_sweep(const std::string &text);
SweepSpec load_sweep(const std::string &path);

// Scenario with one swept parameter set to value. p_fraction leaves cfg unchanged.
ScenarioConfig apply_parameter(const ScenarioConfig &cfg, const std::string &name, double value);

struct SweepRow {
    double parameter = 0.0;
    std::string strategy;
    double mean_se = 0.0;
    double std_se = 0.0;
    double mean_ee = 0.0;
    double harvested_w = 0.0;
    double sustain_rate = 0.0;
};

struct SweepResult {
    std::string parameter;
    std::vector<SweepRow> rows;
};

// Point i, trial t draws its randomness from derive_seed(seed, i, t, stream).
// Trials run in parallel under Exec::Parallel; rows are reduced in trial order.
SweepResult run_sweep(const SweepSpec &spec, const ScenarioConfig &cfg, Exec exec = Exec::Parallel);

void write_csv(const SweepResult &r, std::ostream &os);
void emit_csv(const SweepResult &r, const std::string &path);

// Per-element configuration map of the element-wise design.
struct ElementRow {
    Point3 position;
    bool reflective = false;
    double phase = 0.0;
    double zone = -1.0; // zone index j, -1 without a zone
};
std::vector<ElementRow> element_map(const ScenarioConfig &cfg, std::optional<double> p = std::nullopt,
                                    Exec exec = Exec::Parallel);
void write_element_map(const std::vector<ElementRow> &rows, std::ostream &os);

// Optimal-proportion analysis over array sizes.
struct PoptRow {
    double n_r = 0.0;
    std::string tech;
    int bits = 1;
    double p_opt = 0.0;
    bool p_opt_valid = false;
    double p_max_sustainable = 0.0;
    bool p_opt_feasible = false;
};
std::vector<PoptRow> popt_analysis(const ScenarioConfig &cfg, const std::vector<double> &n_r,
                                   const std::vector<ElementTech> &techs, const std::vector<int> &bits);
void write_popt_csv(const std::vector<PoptRow> &rows, std::ostream &os);

struct Preset {
    std::string name;
    ScenarioConfig cfg;
    SweepSpec sweep;
    bool element_map = false;
    bool popt = false;
};
const std::vector<std::string> &preset_names();
Preset preset(const std::string &name, const ScenarioConfig &base); // throws std::invalid_argument

} // namespace ewris
