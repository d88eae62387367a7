// SPDX-License-Identifier: Apache-2.0
#include "ewris/beamforming.hpp"

#include <limits>
#include <stdexcept>

#include "ewris/kernels.hpp"

namespace ewris {

Precoder mrt_precoder(const CVec &f_hat)
{
    const double n = vec_norm(f_hat);
    if (!(n > 0.0)) throw std::invalid_argument("mrt_precoder: zero channel");
    Precoder p;
    p.w.resize(f_hat.size());
    p.psi.resize(f_hat.size());
    for (std::size_t t = 0; t < f_hat.size(); ++t) {
        p.w[t] = f_hat[t] / n;
        p.psi[t] = std::arg(f_hat[t]);
    }
    return p;
}

Axes modified_axes(double d, double j, double lambda, double psi, AxisMode mode)
{
    if (!(lambda > 0.0)) throw std::domain_error("modified_axes: wavelength must be positive");
    return axes_for_excess(d, j * lambda - psi * lambda / kTwoPi, mode);
}

double decision_threshold(const std::vector<Point3> &curve_j, const std::vector<Point3> &curve_next, int bits,
                          double chi)
{
    if (curve_j.empty() || curve_next.empty()) throw std::invalid_argument("decision_threshold: empty curve");
    const double scale = static_cast<double>(1 << bits);
    if (chi < 0.0 || chi > kPi / scale * (1.0 + 1e-12))
        throw std::domain_error("decision_threshold: chi outside [0, pi/2^D]");
    double best = std::numeric_limits<double>::infinity();
    for (const auto &a : curve_j)
        for (const auto &b : curve_next) best = std::min(best, distance(a, b));
    return best * scale * chi / kPi;
}

double max_zone_index(const ZoneSystem &sys, const std::vector<Point3> &elements_local, double pitch, int bits,
                      double lambda, AxisMode mode)
{
    ZoneLayoutOptions opt;
    opt.bits = bits;
    opt.lambda = lambda;
    opt.pitch = pitch;
    opt.max_gap = 0.25 * pitch;
    opt.coupling_bits = 0;
    opt.axis_mode = mode;
    return build_zone_layout(sys, elements_local, opt, Exec::Serial).max_index;
}

std::vector<std::uint8_t> select_elements(const std::vector<Point3> &elements, const std::vector<CurveSample> &curve,
                                          double tau)
{
    std::vector<std::uint8_t> out(elements.size(), 0);
    for (std::size_t n = 0; n < elements.size(); ++n)
        for (const auto &c : curve)
            if (distance(elements[n], c.point) <= tau) {
                out[n] = 1;
                break;
            }
    return out;
}

std::vector<std::uint8_t> combine_across_antennas(const std::vector<std::vector<std::uint8_t>> &masks)
{
    if (masks.empty()) return {};
    std::vector<std::uint8_t> out = masks.front();
    for (std::size_t k = 1; k < masks.size(); ++k) {
        if (masks[k].size() != out.size()) throw std::invalid_argument("combine_across_antennas: length mismatch");
        for (std::size_t n = 0; n < out.size(); ++n) out[n] = static_cast<std::uint8_t>(out[n] & masks[k][n]);
    }
    return out;
}

double zone_phase(double j, int bits)
{
    if (bits < 1) throw std::domain_error("zone_phase: bits must be >= 1");
    const auto mod = static_cast<long long>(1) << bits;
    const double u = j * static_cast<double>(mod);
    const long long m = std::llround(u);
    if (std::abs(u - static_cast<double>(m)) > 1e-9) throw std::domain_error("zone_phase: j off the 1/2^D grid");
    const long long idx = ((-m) % mod + mod) % mod;
    return kTwoPi * static_cast<double>(idx) / static_cast<double>(mod);
}

RVec absorptive_complement(const std::vector<std::uint8_t> &reflective, double absorb_eff)
{
    RVec out(reflective.size());
    for (std::size_t n = 0; n < out.size(); ++n) out[n] = reflective[n] ? 0.0 : absorb_eff;
    return out;
}

std::vector<std::uint8_t> eh_switch_design(const std::vector<RVec> &distances, const RVec &psi, double lambda)
{
    if (distances.size() != psi.size()) throw std::invalid_argument("eh_switch_design: antenna count mismatch");
    if (distances.empty()) return {};
    const std::size_t n_el = distances.front().size();
    std::vector<std::uint8_t> out(n_el, 0);
    for (std::size_t n = 0; n < n_el; ++n) {
        cplx s{};
        for (std::size_t t = 0; t < psi.size(); ++t) {
            const double cycles = distances[t][n] / lambda;
            s += std::polar(1.0, psi[t] + kTwoPi * (cycles - std::floor(cycles)));
        }
        const double phi = std::arg(s);
        out[n] = (phi > -0.5 * kPi && phi <= 0.5 * kPi) ? 0 : 1;
    }
    return out;
}

namespace {

// Candidate (slot, normalised distance) of one layout that carries zone mm.
bool layout_selects(const ZoneLayout &lay, std::size_t n, int mm, double p)
{
    for (std::size_t c = 0; c < ZoneLayout::kCand; ++c) {
        const std::int32_t slot = lay.cand_zone[n * ZoneLayout::kCand + c];
        if (slot < 0) return false;
        if (lay.m[static_cast<std::size_t>(slot)] != mm) continue;
        return lay.cand_dist[n * ZoneLayout::kCand + c] <= lay.spacing[static_cast<std::size_t>(slot)] * p;
    }
    return false;
}

} // namespace

int zone_for(const RisPlan &plan, std::size_t n, double chi)
{
    const ZoneLayout &first = plan.layouts.front();
    if (!(chi > 0.0)) return -1;
    if (plan.layouts.size() == 1) return first.select(n, chi);
    const double p = static_cast<double>(1 << first.bits) * chi / kPi;
    int best = -1;
    double best_norm = std::numeric_limits<double>::infinity();
    for (std::size_t c = 0; c < ZoneLayout::kCand; ++c) {
        const std::int32_t slot = first.cand_zone[n * ZoneLayout::kCand + c];
        if (slot < 0) break;
        const auto s = static_cast<std::size_t>(slot);
        const double d = first.cand_dist[n * ZoneLayout::kCand + c];
        if (!(d <= first.spacing[s] * p)) continue;
        bool all = true;
        for (std::size_t l = 1; l < plan.layouts.size() && all; ++l)
            all = layout_selects(plan.layouts[l], n, first.m[s], p);
        if (!all) continue;
        const double r = d / first.spacing[s];
        if (r < best_norm || (r == best_norm && slot < best)) {
            best_norm = r;
            best = slot;
        }
    }
    return best;
}

Algorithm1Plan prepare_algorithm1(const ScenarioConfig &cfg, const std::vector<CMat> &h, const CVec &f_hat,
                                  const Point3 &u_hat, Exec exec)
{
    if (h.size() != cfg.ris.size()) throw std::invalid_argument("prepare_algorithm1: one channel per RIS required");
    Algorithm1Plan plan;
    plan.precoder = mrt_precoder(f_hat);
    const std::size_t nt = cfg.n_tx();

    // precoding phase left over after removing the modelled LoS phase
    const CVec f_model = direct_los(cfg, u_hat);
    cplx acc{};
    for (std::size_t t = 0; t < nt; ++t) acc += std::conj(f_model[t]) * f_hat[t];
    const double ref = std::arg(acc);
    plan.residual.resize(nt);
    for (std::size_t t = 0; t < nt; ++t)
        plan.residual[t] = wrap_pi(std::arg(f_hat[t]) - std::arg(f_model[t]) - ref);

    plan.layout_bits = cfg.continuous_phase ? 1 : cfg.phase_bits;
    const double k = kTwoPi / cfg.lambda;

    for (std::size_t r = 0; r < cfg.ris.size(); ++r) {
        const RisPanel &panel = cfg.ris[r];
        RisPlan rp;
        rp.pitch = panel.pitch(cfg.lambda);
        rp.frame = make_ris_frame(panel.center, panel.normal, u_hat, panel.row_axis);
        rp.elements = panel.elements(cfg.lambda);
        rp.elements_local.reserve(rp.elements.size());
        for (const auto &e : rp.elements) {
            Point3 q = rp.frame.to_local(e);
            q.z = 0.0;
            rp.elements_local.push_back(q);
        }
        const Point3 ue_local = rp.frame.to_local(u_hat);

        std::vector<ZoneSystem> systems;
        if (cfg.design.combining == AntennaCombining::PhaseCentre || nt == 1) {
            Point3 centre{};
            double wsum = 0.0;
            cplx rs{};
            for (std::size_t t = 0; t < nt; ++t) {
                const double a = std::abs(f_hat[t]);
                centre += a * cfg.bs_antennas[t];
                wsum += a;
                rs += std::polar(a, plan.residual[t]);
            }
            centre = centre / wsum;
            systems.push_back({rp.frame.to_local(centre), ue_local, std::arg(rs), -1});
        } else {
            for (std::size_t t = 0; t < nt; ++t)
                systems.push_back({rp.frame.to_local(cfg.bs_antennas[t]), ue_local, plan.residual[t], static_cast<int>(t)});
        }
        ZoneLayoutOptions opt;
        opt.bits = plan.layout_bits;
        opt.lambda = cfg.lambda;
        opt.pitch = rp.pitch;
        opt.max_gap = cfg.design.curve_gap * rp.pitch;
        opt.coupling_bits = cfg.design.coupling_bits;
        opt.axis_mode = cfg.axis_mode;
        for (const auto &sys : systems) rp.layouts.push_back(build_zone_layout(sys, rp.elements_local, opt, exec));

        const std::size_t ne = rp.elements.size();
        rp.tx_dist.assign(nt, RVec(ne));
        rp.model_phase.resize(ne);
        rp.full_zone.resize(ne);
        const double full_chi = kPi / static_cast<double>(1 << plan.layout_bits);
        for (std::size_t n = 0; n < ne; ++n) {
            const double d2 = distance(rp.elements[n], u_hat);
            cplx s{};
            for (std::size_t t = 0; t < nt; ++t) {
                const double d1 = distance(cfg.bs_antennas[t], rp.elements[n]);
                rp.tx_dist[t][n] = d1;
                const double dd = d1 + d2 - distance(cfg.bs_antennas[t], u_hat);
                const double cyc = dd / cfg.lambda;
                s += std::polar(std::abs(f_hat[t]) / d1, kTwoPi * (cyc - std::floor(cyc)) + plan.residual[t]);
            }
            rp.model_phase[n] = wrap_2pi(std::arg(s));
            rp.full_zone[n] = zone_for(rp, n, full_chi);
        }
        (void)k;
        rp.z = incident_field(h[r], plan.precoder.w, cfg.tx_power_w, exec);
        rp.switch_pi = eh_switch_design(rp.tx_dist, plan.precoder.psi, cfg.lambda);
        plan.ris.push_back(std::move(rp));
    }
    return plan;
}

RisSelection select_for_chi(const ScenarioConfig &cfg, const RisPlan &plan, double chi)
{
    const std::size_t ne = plan.elements.size();
    RisSelection sel;
    sel.reflective.assign(ne, 0);
    sel.phase.assign(ne, 0.0);
    const int bits = plan.layouts.front().bits;
    for (std::size_t n = 0; n < ne; ++n) {
        const int slot = zone_for(plan, n, chi);
        if (slot < 0) continue;
        sel.reflective[n] = 1;
        sel.phase[n] = cfg.continuous_phase
                           ? wrap_2pi(-plan.model_phase[n])
                           : zone_phase(plan.layouts.front().j(static_cast<std::size_t>(slot)), bits);
    }
    return sel;
}

RisOutcome finalize_selection(const ScenarioConfig &cfg, const RisPlan &plan, const RisSelection &sel)
{
    const PowerModel &pm = cfg.power;
    RVec absorptive = absorptive_complement(sel.reflective, pm.absorb_eff);
    const double p_k = harvested_power(plan.switch_pi, absorptive, plan.z, cfg.ris_noise_w, pm.eta1);
    double reflected_in = 0.0;
    std::size_t n_ref = 0;
    for (std::size_t n = 0; n < sel.reflective.size(); ++n)
        if (sel.reflective[n]) {
            reflected_in += std::norm(plan.z[n]);
            ++n_ref;
        }
    RisOutcome out;
    out.budget = settle_budget(p_k, reflected_in, n_ref, pm, sel.reflective.size(), cfg.phase_bits);
    out.config = RisConfiguration::make(cfg.continuous_phase ? 0 : cfg.phase_bits, out.budget.rho, sel.reflective,
                                        sel.phase, std::move(absorptive), plan.switch_pi, pm.absorb_eff);
    out.config.active = out.budget.sustainable;
    return out;
}

std::vector<RisOutcome> configure_algorithm1(const ScenarioConfig &cfg, const Algorithm1Plan &plan, double chi)
{
    std::vector<RisOutcome> out;
    for (const auto &rp : plan.ris) out.push_back(finalize_selection(cfg, rp, select_for_chi(cfg, rp, chi)));
    return out;
}

std::vector<RisOutcome> run_algorithm1(const ScenarioConfig &cfg, const std::vector<CMat> &h, const CVec &f_hat,
                                       const Point3 &u_hat, double chi, Exec exec)
{
    return configure_algorithm1(cfg, prepare_algorithm1(cfg, h, f_hat, u_hat, exec), chi);
}

void retarget_precoder(const ScenarioConfig &cfg, const std::vector<CMat> &h, const CVec &w, Algorithm1Plan &plan,
                       Exec exec)
{
    plan.precoder.w = w;
    for (std::size_t t = 0; t < w.size(); ++t) plan.precoder.psi[t] = std::arg(w[t]);
    for (std::size_t r = 0; r < plan.ris.size(); ++r) {
        plan.ris[r].z = incident_field(h[r], w, cfg.tx_power_w, exec);
        plan.ris[r].switch_pi = eh_switch_design(plan.ris[r].tx_dist, plan.precoder.psi, cfg.lambda);
    }
}

} // namespace ewris
