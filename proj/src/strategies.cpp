// SPDX-License-Identifier: Apache-2.0
#include "ewris/strategies.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "ewris/localization.hpp"

namespace ewris {

std::string to_string(Strategy s)
{
    switch (s) {
    case Strategy::EW: return "EW";
    case Strategy::PS: return "PS";
    case Strategy::TS: return "TS";
    case Strategy::ES: return "ES";
    case Strategy::RandomPhase: return "RP";
    case Strategy::AO: return "AO";
    case Strategy::NoEH: return "NoEH";
    }
    return "?";
}

Strategy parse_strategy(const std::string &s)
{
    for (Strategy v : {Strategy::EW, Strategy::PS, Strategy::TS, Strategy::ES, Strategy::RandomPhase, Strategy::AO,
                       Strategy::NoEH})
        if (to_string(v) == s) return v;
    throw std::invalid_argument("unknown strategy '" + s + "'");
}

TrialInputs make_trial(const ScenarioConfig &cfg, std::uint64_t master, std::uint64_t point, std::uint64_t trial,
                       Exec exec)
{
    TrialInputs in;
    in.truth = build_channels(cfg, {}, exec);
    Rng nlos = make_rng(master, point, trial, kStreamNlos);
    const CVec scatter = nlos_component(cfg, cfg.rician_db, nlos);
    for (std::size_t t = 0; t < scatter.size(); ++t) in.truth.f[t] += scatter[t];

    Rng loc = make_rng(master, point, trial, kStreamLocation);
    const Point3 err = sample_location_noise(cfg.loc_noise_std, loc);
    in.u_hat = cfg.ue + err;

    Rng ce = make_rng(master, point, trial, kStreamCe);
    if (err.x == 0.0 && err.y == 0.0 && err.z == 0.0) {
        in.plan = in.truth;
    } else {
        in.plan = build_channels(cfg, err, exec);
        in.plan.h = in.truth.h;
    }
    in.plan.f = apply_ce_error(in.truth.f, cfg.ce_error_std, ce);
    in.es_seed = derive_seed(master, point, trial, kStreamEs);
    in.phase_seed = derive_seed(master, point, trial, kStreamPhase);
    return in;
}

TrialInputs perfect_trial(const ScenarioConfig &cfg, Exec exec)
{
    TrialInputs in;
    in.truth = build_channels(cfg, {}, exec);
    in.plan = in.truth;
    in.u_hat = cfg.ue;
    return in;
}

StrategyContext make_context(const ScenarioConfig &cfg, const TrialInputs &trial, Exec exec)
{
    StrategyContext ctx;
    ctx.cfg = &cfg;
    ctx.trial = &trial;
    ctx.exec = exec;
    ctx.plan = prepare_algorithm1(cfg, trial.truth.h, trial.plan.f, trial.u_hat, exec);
    return ctx;
}

bool Candidate::sustainable() const
{
    if (external_w > 0.0) return true;
    return std::all_of(budgets.begin(), budgets.end(), [](const Budget &b) { return b.sustainable; });
}

double Candidate::harvested_w() const
{
    double s = 0.0;
    for (const auto &b : budgets) s += b.harvested_w;
    return s;
}

double candidate_se(const ScenarioConfig &cfg, const ChannelSet &ch, const Candidate &c, Exec exec)
{
    if (c.rate_scale <= 0.0) return 0.0;
    return c.rate_scale * spectrum_efficiency(snr(ch, c.w, c.phi, c.tx_power_w, cfg.ue_noise_w, cfg.ris_noise_w, exec));
}

namespace {

double full_chi(const StrategyContext &ctx) { return kPi / static_cast<double>(1 << ctx.plan.layout_bits); }

Candidate base_candidate(const StrategyContext &ctx)
{
    Candidate c;
    c.w = ctx.plan.precoder.w;
    c.tx_power_w = ctx.cfg->tx_power_w;
    return c;
}

Candidate from_outcomes(const StrategyContext &ctx, std::vector<RisOutcome> outs)
{
    Candidate c = base_candidate(ctx);
    for (auto &o : outs) {
        c.phi.push_back(o.config.reflection());
        c.budgets.push_back(o.budget);
        c.configs.push_back(std::move(o.config));
    }
    return c;
}

// Full zone selection with reflection scaled by amp; absorbers weighted per element.
void scaled_reflection(Candidate &c, const RisSelection &sel, const Budget &b, double amp)
{
    CVec phi(sel.reflective.size(), cplx{});
    if (b.sustainable)
        for (std::size_t n = 0; n < phi.size(); ++n)
            if (sel.reflective[n]) phi[n] = std::polar(b.rho * amp, sel.phase[n]);
    c.phi.push_back(std::move(phi));
    c.budgets.push_back(b);
}

double reflected_input(const RisSelection &sel, const CVec &z, std::size_t &count)
{
    double s = 0.0;
    count = 0;
    for (std::size_t n = 0; n < z.size(); ++n)
        if (sel.reflective[n]) {
            s += std::norm(z[n]);
            ++count;
        }
    return s;
}

StrategyOutcome finish(Strategy s, const StrategyContext &ctx, double factor, Candidate c)
{
    StrategyOutcome out;
    out.strategy = s;
    out.factor = factor;
    out.se = candidate_se(*ctx.cfg, ctx.trial->truth, c, ctx.exec);
    out.ee = energy_efficiency(out.se, c.tx_power_w, c.external_w);
    out.harvested_w = c.harvested_w();
    out.sustainable = c.sustainable();
    out.configs = std::move(c.configs);
    return out;
}

template <class Make>
double search(const StrategyContext &ctx, double step, Make &&make)
{
    return grid_argmax(step, [&](double x) {
        const Candidate c = make(x);
        return std::pair<double, bool>{candidate_se(*ctx.cfg, ctx.trial->plan, c, ctx.exec), c.sustainable()};
    });
}

} // namespace

Candidate ew_candidate(const StrategyContext &ctx, double p)
{
    if (!(p >= 0.0 && p <= 1.0)) throw std::domain_error("ew_candidate: p outside [0, 1]");
    return from_outcomes(ctx, configure_algorithm1(*ctx.cfg, ctx.plan, p * full_chi(ctx)));
}

Candidate ps_candidate(const StrategyContext &ctx, double eps)
{
    if (!(eps >= 0.0 && eps <= 1.0)) throw std::domain_error("ps_candidate: split factor outside [0, 1]");
    const ScenarioConfig &cfg = *ctx.cfg;
    const PowerModel &pm = cfg.power;
    Candidate c = base_candidate(ctx);
    for (const auto &rp : ctx.plan.ris) {
        const RisSelection sel = select_for_chi(cfg, rp, full_chi(ctx));
        RVec absorb(sel.reflective.size());
        for (std::size_t n = 0; n < absorb.size(); ++n)
            absorb[n] = sel.reflective[n] ? pm.absorb_eff * std::sqrt(eps) : pm.absorb_eff;
        const double p_k = harvested_power(rp.switch_pi, absorb, rp.z, cfg.ris_noise_w, pm.eta1);
        std::size_t n_ref = 0;
        const double in = reflected_input(sel, rp.z, n_ref) * (1.0 - eps);
        const Budget b = settle_budget(p_k, in, eps < 1.0 ? n_ref : 0, pm, absorb.size(), cfg.phase_bits);
        scaled_reflection(c, sel, b, std::sqrt(1.0 - eps));
    }
    return c;
}

Candidate ts_candidate(const StrategyContext &ctx, double kappa)
{
    if (!(kappa >= 0.0 && kappa <= 1.0)) throw std::domain_error("ts_candidate: time fraction outside [0, 1]");
    const ScenarioConfig &cfg = *ctx.cfg;
    const PowerModel &pm = cfg.power;
    Candidate c = base_candidate(ctx);
    c.rate_scale = 1.0 - kappa;
    for (const auto &rp : ctx.plan.ris) {
        const RVec absorb(rp.z.size(), pm.absorb_eff);
        const double p_k = kappa * harvested_power(rp.switch_pi, absorb, rp.z, cfg.ris_noise_w, pm.eta1);
        const RisSelection sel = select_for_chi(cfg, rp, full_chi(ctx));
        std::size_t n_ref = 0;
        const double in = reflected_input(sel, rp.z, n_ref);
        const Budget b = settle_budget(p_k, in, n_ref, pm, absorb.size(), cfg.phase_bits, 1.0 - kappa);
        scaled_reflection(c, sel, b, 1.0);
    }
    return c;
}

std::vector<std::uint32_t> es_order(std::size_t n, Rng &rng)
{
    std::vector<std::uint32_t> order(n);
    std::iota(order.begin(), order.end(), 0u);
    // Fisher-Yates with an explicit draw so the order is library independent
    for (std::size_t i = n; i > 1; --i) {
        const std::size_t j = static_cast<std::size_t>(rng() % i);
        std::swap(order[i - 1], order[j]);
    }
    return order;
}

namespace {
// Zone phase where the element has a zone, the quantised model phase otherwise.
RVec element_phases(const ScenarioConfig &cfg, const RisPlan &rp, double chi)
{
    const RisSelection full = select_for_chi(cfg, rp, chi);
    RVec ph(full.phase.size());
    for (std::size_t n = 0; n < ph.size(); ++n) {
        if (full.reflective[n])
            ph[n] = full.phase[n];
        else if (cfg.continuous_phase)
            ph[n] = wrap_2pi(-rp.model_phase[n]);
        else
            ph[n] = quantize_phase(wrap_2pi(-rp.model_phase[n]), cfg.phase_bits);
    }
    return ph;
}
} // namespace

Candidate es_candidate(const StrategyContext &ctx, double p_es, const std::vector<std::uint32_t> &order)
{
    if (!(p_es >= 0.0 && p_es <= 1.0)) throw std::domain_error("es_candidate: fraction outside [0, 1]");
    const ScenarioConfig &cfg = *ctx.cfg;
    std::vector<RisOutcome> outs;
    for (const auto &rp : ctx.plan.ris) {
        const std::size_t ne = rp.elements.size();
        if (order.size() != ne) throw std::invalid_argument("es_candidate: order length");
        RisSelection sel;
        sel.reflective.assign(ne, 0);
        sel.phase.assign(ne, 0.0);
        const RVec ph = element_phases(cfg, rp, full_chi(ctx));
        const auto k = static_cast<std::size_t>(std::floor(p_es * static_cast<double>(ne) + 1e-9));
        for (std::size_t i = 0; i < k; ++i) {
            sel.reflective[order[i]] = 1;
            sel.phase[order[i]] = ph[order[i]];
        }
        outs.push_back(finalize_selection(cfg, rp, sel));
    }
    return from_outcomes(ctx, std::move(outs));
}

Candidate random_phase_candidate(const StrategyContext &ctx, const std::vector<std::uint8_t> &reflective_all,
                                 Rng &rng)
{
    const ScenarioConfig &cfg = *ctx.cfg;
    std::vector<RisOutcome> outs;
    std::size_t offset = 0;
    const auto levels = static_cast<std::uint64_t>(1) << cfg.phase_bits;
    std::uniform_real_distribution<double> uni(0.0, kTwoPi);
    for (const auto &rp : ctx.plan.ris) {
        const std::size_t ne = rp.elements.size();
        if (reflective_all.size() < offset + ne) throw std::invalid_argument("random_phase_candidate: mask length");
        RisSelection sel;
        sel.reflective.assign(reflective_all.begin() + static_cast<std::ptrdiff_t>(offset),
                              reflective_all.begin() + static_cast<std::ptrdiff_t>(offset + ne));
        sel.phase.assign(ne, 0.0);
        for (std::size_t n = 0; n < ne; ++n) {
            if (!sel.reflective[n]) continue;
            if (cfg.continuous_phase) {
                sel.phase[n] = wrap_2pi(uni(rng));
            } else {
                const auto idx = rng() % levels;
                sel.phase[n] = kTwoPi * static_cast<double>(idx) / static_cast<double>(levels);
            }
        }
        offset += ne;
        outs.push_back(finalize_selection(cfg, rp, sel));
    }
    return from_outcomes(ctx, std::move(outs));
}

Candidate noeh_candidate(const StrategyContext &ctx)
{
    const ScenarioConfig &cfg = *ctx.cfg;
    const PowerModel &pm = cfg.power;
    Candidate c = base_candidate(ctx);
    c.tx_power_w = 0.5 * cfg.tx_power_w;
    c.external_w = 0.5 * cfg.tx_power_w;
    for (const auto &rp : ctx.plan.ris) {
        const RisSelection sel = select_for_chi(cfg, rp, full_chi(ctx));
        std::size_t n_ref = 0;
        const double in = 0.5 * reflected_input(sel, rp.z, n_ref);
        Budget b;
        b.available_w = c.external_w / static_cast<double>(ctx.plan.ris.size()) - pm.controller_w - pm.dc_bias_w -
                        pm.per_element_w(cfg.phase_bits) * static_cast<double>(rp.z.size());
        b.sustainable = b.available_w > 0.0;
        if (b.sustainable && n_ref > 0) {
            b.rho = feasible_amplification(b.available_w, n_ref, std::sqrt(in / static_cast<double>(n_ref)),
                                           pm.rho_max);
            b.amplification_w = (b.rho * b.rho - 1.0) * in;
        }
        b.surplus_w = b.available_w - b.amplification_w;
        scaled_reflection(c, sel, b, 1.0);
    }
    return c;
}

StrategyOutcome run_strategy(Strategy s, const StrategyContext &ctx, std::optional<double> factor)
{
    const double step = ctx.cfg->design.factor_step;
    auto pick = [&](auto &&make) { return factor ? *factor : search(ctx, step, make); };
    switch (s) {
    case Strategy::EW: {
        auto make = [&](double p) { return ew_candidate(ctx, p); };
        const double p = pick(make);
        return finish(s, ctx, p, make(p));
    }
    case Strategy::PS: {
        auto make = [&](double e) { return ps_candidate(ctx, e); };
        const double e = pick(make);
        return finish(s, ctx, e, make(e));
    }
    case Strategy::TS: {
        auto make = [&](double k) { return ts_candidate(ctx, k); };
        const double k = pick(make);
        return finish(s, ctx, k, make(k));
    }
    case Strategy::ES: {
        Rng rng(ctx.trial->es_seed);
        const auto order = es_order(ctx.plan.ris.front().elements.size(), rng);
        auto make = [&](double p) { return es_candidate(ctx, p, order); };
        const double p = pick(make);
        return finish(s, ctx, p, make(p));
    }
    case Strategy::RandomPhase: {
        const StrategyOutcome ew = run_strategy(Strategy::EW, ctx, factor);
        std::vector<std::uint8_t> mask;
        for (const auto &c : ew.configs) mask.insert(mask.end(), c.reflective.begin(), c.reflective.end());
        Rng rng(ctx.trial->phase_seed);
        return finish(s, ctx, ew.factor, random_phase_candidate(ctx, mask, rng));
    }
    case Strategy::AO: {
        AoOptions opt;
        StrategyOutcome out = csi_ao_baseline(*ctx.cfg, ctx.trial->truth, opt, nullptr, ctx.exec);
        return out;
    }
    case Strategy::NoEH: return finish(s, ctx, 0.0, noeh_candidate(ctx));
    }
    throw std::invalid_argument("run_strategy: unknown strategy");
}

StrategyOutcome optimize_factor(Strategy s, const StrategyContext &ctx, double step)
{
    if (!(step > 0.0 && step <= 0.5)) throw std::domain_error("optimize_factor: step must lie in (0, 0.5]");
    StrategyContext local = ctx;
    ScenarioConfig cfg = *ctx.cfg;
    cfg.design.factor_step = step;
    local.cfg = &cfg;
    return run_strategy(s, local);
}

namespace {

struct AoState {
    std::vector<RisSelection> sel;
    Algorithm1Plan plan;
};

Candidate ao_candidate(const ScenarioConfig &cfg, const StrategyContext &ctx, const AoState &st)
{
    std::vector<RisOutcome> outs;
    for (std::size_t k = 0; k < st.plan.ris.size(); ++k) outs.push_back(finalize_selection(cfg, st.plan.ris[k], st.sel[k]));
    Candidate c;
    c.w = st.plan.precoder.w;
    c.tx_power_w = cfg.tx_power_w;
    (void)ctx;
    for (auto &o : outs) {
        c.phi.push_back(o.config.reflection());
        c.budgets.push_back(o.budget);
        c.configs.push_back(std::move(o.config));
    }
    return c;
}

} // namespace

StrategyOutcome csi_ao_baseline(const ScenarioConfig &cfg, const ChannelSet &truth, const AoOptions &opt,
                                std::vector<double> *se_trace, Exec exec)
{
    TrialInputs trial;
    trial.truth = truth;
    trial.plan = truth;
    trial.u_hat = cfg.ue;
    StrategyContext ctx = make_context(cfg, trial, exec);
    const double chi_full = kPi / static_cast<double>(1 << ctx.plan.layout_bits);
    const double p0 = search(ctx, cfg.design.factor_step, [&](double p) { return ew_candidate(ctx, p); });

    AoState st;
    st.plan = ctx.plan;
    for (const auto &rp : st.plan.ris) st.sel.push_back(select_for_chi(cfg, rp, p0 * chi_full));
    Candidate best = ao_candidate(cfg, ctx, st);
    double best_se = candidate_se(cfg, truth, best, exec);
    if (se_trace) se_trace->push_back(best_se);

    const double amp = std::sqrt(cfg.tx_power_w);
    StrategyOutcome out;
    out.converged = false;
    int it = 0;
    for (; it < opt.max_iters; ++it) {
        bool improved = false;

        // (i) align every reflective element to the composite signal
        {
            cplx s{};
            for (std::size_t t = 0; t < truth.f.size(); ++t) s += std::conj(truth.f[t]) * st.plan.precoder.w[t];
            for (std::size_t k = 0; k < st.plan.ris.size(); ++k)
                for (std::size_t n = 0; n < best.phi[k].size(); ++n)
                    s += std::conj(truth.g[k][n]) * best.phi[k][n] * st.plan.ris[k].z[n] / amp;
            AoState trial_st = st;
            for (std::size_t k = 0; k < st.plan.ris.size(); ++k) {
                RisSelection &sel = trial_st.sel[k];
                for (std::size_t n = 0; n < sel.reflective.size(); ++n) {
                    if (!sel.reflective[n]) continue;
                    const double th = wrap_2pi(std::arg(s) - std::arg(std::conj(truth.g[k][n]) * st.plan.ris[k].z[n]));
                    sel.phase[n] = cfg.continuous_phase ? th : quantize_phase(th, cfg.phase_bits);
                }
            }
            Candidate c = ao_candidate(cfg, ctx, trial_st);
            const double se = candidate_se(cfg, truth, c, exec);
            if (se > best_se) {
                improved = se > best_se + opt.tol;
                st = std::move(trial_st);
                best = std::move(c);
                best_se = se;
                if (se_trace) se_trace->push_back(se);
            }
        }
        // (ii) MRT on the composite channel
        {
            CVec comp(truth.f.size());
            for (std::size_t t = 0; t < comp.size(); ++t) {
                cplx v = std::conj(truth.f[t]);
                for (std::size_t k = 0; k < truth.h.size(); ++k)
                    for (std::size_t n = 0; n < best.phi[k].size(); ++n)
                        if (best.phi[k][n] != cplx{})
                            v += std::conj(truth.g[k][n]) * best.phi[k][n] * std::conj(truth.h[k](t, n));
                comp[t] = v;
            }
            const double nrm = vec_norm(comp);
            CVec w(comp.size());
            for (std::size_t t = 0; t < w.size(); ++t) w[t] = std::conj(comp[t]) / nrm;
            AoState trial_st = st;
            retarget_precoder(cfg, truth.h, w, trial_st.plan, exec);
            Candidate c = ao_candidate(cfg, ctx, trial_st);
            const double se = candidate_se(cfg, truth, c, exec);
            if (se > best_se) {
                improved = improved || se > best_se + opt.tol;
                st = std::move(trial_st);
                best = std::move(c);
                best_se = se;
                if (se_trace) se_trace->push_back(se);
            }
        }
        if (!improved) {
            out.converged = true;
            ++it;
            break;
        }
    }
    out.strategy = Strategy::AO;
    out.factor = p0;
    out.iterations = it;
    out.se = best_se;
    out.ee = energy_efficiency(best_se, cfg.tx_power_w);
    out.harvested_w = best.harvested_w();
    out.sustainable = best.sustainable();
    out.configs = std::move(best.configs);
    return out;
}

} // namespace ewris
