// SPDX-License-Identifier: Apache-2.0
// Command-line front end: simulate, analyze popt, locate, defaults.
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "ewris/experiments.hpp"
#include "ewris/localization.hpp"

using namespace ewris;

namespace {

constexpr int kValidationExit = 2;

ScenarioConfig scenario_or_default(const std::string &path)
{
    return path.empty() ? parse_scenario("") : load_scenario(path);
}

std::ofstream open_out(const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("--out: cannot write " + path);
    return out;
}

std::string sibling(const std::string &path, const std::string &suffix)
{
    const auto dot = path.rfind('.');
    const auto slash = path.find_last_of('/');
    if (dot == std::string::npos || (slash != std::string::npos && dot < slash)) return path + suffix;
    return path.substr(0, dot) + suffix;
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"Element-wise self-sustainable RIS simulator"};
    app.require_subcommand(1);

    std::string scenario_path, preset_name, sweep_path, out_path, map_path;
    std::uint64_t seed = 1;
    std::size_t trials = 0;
    bool serial = false;
    auto *sim = app.add_subcommand("simulate", "Run a parameter sweep and write a CSV");
    sim->add_option("--scenario", scenario_path, "Scenario JSON (defaults when omitted)");
    sim->add_option("--preset", preset_name, "Figure preset")->check(CLI::IsMember(preset_names()));
    sim->add_option("--sweep", sweep_path, "Sweep JSON");
    sim->add_option("--seed", seed, "Master seed (default 1; overrides the sweep file)");
    sim->add_option("--trials", trials, "Monte Carlo trials per point (overrides preset/sweep)");
    sim->add_option("--out", out_path, "Output CSV")->required();
    sim->add_option("--map", map_path, "Element map CSV for configuration presets");
    sim->add_flag("--serial", serial, "Disable OpenMP parallelism");

    std::vector<double> nr_list;
    std::string tech = "pin";
    std::vector<int> bits_list{1, 2, 3};
    std::string popt_out;
    auto *analyze = app.add_subcommand("analyze", "Closed-form analyses");
    auto *popt = analyze->add_subcommand("popt", "Optimal reflective proportion versus N_R");
    analyze->require_subcommand(1);
    popt->add_option("--nr", nr_list, "Array sizes")->required()->delimiter(',');
    popt->add_option("--tech", tech, "Element technology")->check(CLI::IsMember({"pin", "varactor", "ideal"}));
    popt->add_option("--bits", bits_list, "Phase resolutions")->delimiter(',');
    popt->add_option("--scenario", scenario_path, "Scenario JSON");
    popt->add_option("--out", popt_out, "Output CSV (stdout when omitted)");

    double extent = 1.0, step = 0.25;
    std::size_t ris_index = 0;
    auto *locate = app.add_subcommand("locate", "Uplink grid-search localisation around the scenario UE");
    locate->add_option("--grid-extent", extent, "Half-width of the search cube in m")->check(CLI::NonNegativeNumber);
    locate->add_option("--grid-step", step, "Grid step in m")->check(CLI::PositiveNumber);
    locate->add_option("--scenario", scenario_path, "Scenario JSON");
    locate->add_option("--ris", ris_index, "RIS used for sensing");

    auto *defaults = app.add_subcommand("defaults", "Print the default scenario JSON");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int rc = app.exit(e);
        return rc == 0 ? 0 : kValidationExit;
    }

    try {
        if (*defaults) {
            std::cout << dump_scenario(ScenarioConfig{});
            return 0;
        }
        if (*sim) {
            ScenarioConfig cfg = scenario_or_default(scenario_path);
            for (const auto &w : validate(cfg)) std::cerr << "warning: " << w << '\n';
            SweepSpec spec;
            Preset pre;
            if (!preset_name.empty()) {
                if (!sweep_path.empty()) throw ValidationError("--sweep: cannot be combined with --preset");
                pre = preset(preset_name, cfg);
                cfg = pre.cfg;
                spec = pre.sweep;
            } else if (!sweep_path.empty()) {
                spec = load_sweep(sweep_path);
            } else {
                throw ValidationError("simulate: give --preset or --sweep");
            }
            if (sim->count("--seed") > 0 || !preset_name.empty()) spec.seed = seed;
            if (trials > 0) spec.trials = trials;
            check_sweep(spec);
            const Exec exec = serial ? Exec::Serial : Exec::Parallel;

            if (pre.popt) {
                std::ofstream out = open_out(out_path);
                std::vector<int> bits{1, 2, 3};
                write_popt_csv(popt_analysis(cfg, spec.values, {ElementTech::Pin, ElementTech::Varactor}, bits), out);
                return 0;
            }
            if (pre.element_map) {
                std::ofstream map = open_out(map_path.empty() ? sibling(out_path, "_map.csv") : map_path);
                write_element_map(element_map(cfg, spec.factor, exec), map);
            }
            const SweepResult res = run_sweep(spec, cfg, exec);
            emit_csv(res, out_path);
            return 0;
        }
        if (*popt) {
            const ScenarioConfig cfg = scenario_or_default(scenario_path);
            const ElementTech t = tech == "pin" ? ElementTech::Pin : tech == "varactor" ? ElementTech::Varactor
                                                                                        : ElementTech::Ideal;
            for (double n : nr_list)
                if (!(n >= 1.0)) throw ValidationError("--nr: array sizes must be >= 1");
            for (int b : bits_list)
                if (b < 1 || b > 16) throw ValidationError("--bits: must be in [1, 16]");
            const auto rows = popt_analysis(cfg, nr_list, {t}, bits_list);
            if (popt_out.empty()) {
                write_popt_csv(rows, std::cout);
            } else {
                std::ofstream out = open_out(popt_out);
                write_popt_csv(rows, out);
            }
            return 0;
        }
        if (*locate) {
            const ScenarioConfig cfg = scenario_or_default(scenario_path);
            if (ris_index >= cfg.ris.size()) throw ValidationError("--ris: index out of range");
            const ChannelSet ch = build_channels(cfg);
            const auto grid = make_grid(cfg.ue, extent, step);
            const LocationEstimate est = estimate_location(cfg, ch, grid, ris_index);
            std::cout << "estimate " << est.position.x << ' ' << est.position.y << ' ' << est.position.z << '\n'
                      << "error_m " << distance(est.position, cfg.ue) << '\n'
                      << "indicator_w " << est.indicator_w << '\n'
                      << "evaluations " << est.evaluations << '\n'
                      << "degenerate " << (est.degenerate ? 1 : 0) << '\n';
            return 0;
        }
    } catch (const ValidationError &e) {
        std::cerr << "invalid input: " << e.what() << '\n';
        return kValidationExit;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return 0;
}
