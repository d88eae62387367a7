// SPDX-License-Identifier: Apache-2.0
// Wall-clock comparison of the element kernels: reference loop, blocked
// serial path and OpenMP path. Also confirms serial == parallel bitwise.
#include <omp.h>

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>

#include "CLI11.hpp"
#include "ewris/kernels.hpp"
#include "ewris/localization.hpp"

using namespace ewris;

namespace {

double best_of(int reps, const std::function<void()> &fn)
{
    double best = 1e300;
    for (int r = 0; r < reps; ++r) {
        const auto t0 = std::chrono::steady_clock::now();
        fn();
        best = std::min(best, std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count());
    }
    return best;
}

void report(const char *name, double ref, double ser, double par, bool same)
{
    std::printf("%-16s ref %9.3f ms  serial %9.3f ms  parallel %9.3f ms  speedup %5.2fx  identical %s\n", name,
                1e3 * ref, 1e3 * ser, 1e3 * par, ser / par, same ? "yes" : "NO");
}

} // namespace

int main(int argc, char **argv)
{
    CLI::App app{"element kernel benchmark"};
    int reps = 5, rows = 100, cols = 160, threads = 0;
    double grid_radius = 0.2;
    app.add_option("--reps", reps, "repetitions, best time is reported")->check(CLI::PositiveNumber);
    app.add_option("--rows", rows, "panel rows")->check(CLI::PositiveNumber);
    app.add_option("--cols", cols, "panel columns")->check(CLI::PositiveNumber);
    app.add_option("--threads", threads, "OpenMP threads (0 keeps the runtime default)");
    app.add_option("--grid-radius", grid_radius, "half-width of the localization grid in metres");
    CLI11_PARSE(app, argc, argv);
    if (threads > 0) omp_set_num_threads(threads);

    ScenarioConfig cfg;
    cfg.ris[0].rows = rows;
    cfg.ris[0].cols = cols;
    const auto elems = cfg.ris[0].elements(cfg.lambda);
    std::printf("N_R = %zu, threads = %d, best of %d\n", elems.size(), omp_get_max_threads(), reps);

    kernels::PanelLinks in;
    in.tx = &cfg.bs_antennas;
    in.elements = &elems;
    in.ue = cfg.ue;
    in.tx_pattern = &cfg.bs_pattern;
    in.ue_pattern = &cfg.ue_pattern;
    in.element_pattern = cfg.ris_pattern;
    in.element_pattern.boresight = cfg.ris[0].normal;
    in.lambda = cfg.lambda;

    CMat h0, h1, h2;
    CVec g0, g1, g2;
    const double c_ref = best_of(reps, [&] { kernels::ris_channels_ref(in, h0, g0); });
    const double c_ser = best_of(reps, [&] { kernels::ris_channels(in, h1, g1, Exec::Serial); });
    const double c_par = best_of(reps, [&] { kernels::ris_channels(in, h2, g2, Exec::Parallel); });
    report("ris_channels", c_ref, c_ser, c_par, h1.data == h2.data && g1 == g2);

    std::mt19937_64 rng(1);
    std::uniform_real_distribution<double> ph(0.0, 6.283185307179586);
    const CVec w{std::polar(std::sqrt(0.5), ph(rng)), std::polar(std::sqrt(0.5), ph(rng))};
    CVec z0, z1, z2;
    const double i_ref = best_of(reps, [&] {
        z0.assign(elems.size(), {});
        for (std::size_t n = 0; n < elems.size(); ++n)
            for (std::size_t t = 0; t < w.size(); ++t) z0[n] += std::conj(h1(t, n)) * w[t];
    });
    const double i_ser = best_of(reps, [&] { kernels::incident(h1, w, 1.0, z1, Exec::Serial); });
    const double i_par = best_of(reps, [&] { kernels::incident(h1, w, 1.0, z2, Exec::Parallel); });
    report("incident", i_ref, i_ser, i_par, z1 == z2);

    CVec phi(elems.size());
    for (auto &x : phi) x = std::polar(1.0, ph(rng));
    kernels::CascadeSum s0{}, s1{}, s2{};
    const double k_ref = best_of(reps, [&] { s0 = kernels::cascade_ref(g1, phi, z1); });
    const double k_ser = best_of(reps, [&] { s1 = kernels::cascade(g1, phi, z1, Exec::Serial); });
    const double k_par = best_of(reps, [&] { s2 = kernels::cascade(g1, phi, z1, Exec::Parallel); });
    report("cascade", k_ref, k_ser, k_par, s1.field == s2.field && s1.noise_gain == s2.noise_gain);

    const auto grid = make_grid(cfg.ue, grid_radius, 0.05);
    RVec r0, r1, r2;
    const int scan_reps = std::max(1, reps / 2);
    const double s_ref = best_of(scan_reps, [&] {
        kernels::indicator_scan_ref(elems, g1, grid, cfg.lambda, cfg.power.absorb_eff, r0);
    });
    const double s_ser = best_of(scan_reps, [&] {
        kernels::indicator_scan(elems, g1, grid, cfg.lambda, cfg.power.absorb_eff, r1, Exec::Serial);
    });
    const double s_par = best_of(scan_reps, [&] {
        kernels::indicator_scan(elems, g1, grid, cfg.lambda, cfg.power.absorb_eff, r2, Exec::Parallel);
    });
    std::printf("(indicator grid: %zu points)\n", grid.size());
    report("indicator_scan", s_ref, s_ser, s_par, r1 == r2);
    return 0;
}
