// SPDX-License-Identifier: Apache-2.0
#include "ewris/experiments.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>

#include "json.hpp"

namespace ewris {

using json = nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string &field, const std::string &msg)
{
    throw ValidationError(field + ": " + msg);
}

// Reads one JSON object, tracking which keys were consumed.
class Fields {
public:
    Fields(const json &j, std::string path) : j_(j), path_(std::move(path))
    {
        if (!j_.is_object()) fail(where(""), "expected an object");
    }

    std::string where(const std::string &key) const { return path_.empty() ? key : path_ + "." + key; }
    bool has(const std::string &key) const { return j_.contains(key); }

    const json *get(const std::string &key)
    {
        if (!j_.contains(key)) return nullptr;
        used_.insert(key);
        return &j_.at(key);
    }

    void number(const std::string &key, double &out)
    {
        if (const json *v = get(key)) {
            if (!v->is_number()) fail(where(key), "expected a number");
            out = v->get<double>();
        }
    }
    void integer(const std::string &key, int &out)
    {
        if (const json *v = get(key)) {
            if (!v->is_number_integer()) fail(where(key), "expected an integer");
            out = v->get<int>();
        }
    }
    void boolean(const std::string &key, bool &out)
    {
        if (const json *v = get(key)) {
            if (!v->is_boolean()) fail(where(key), "expected true or false");
            out = v->get<bool>();
        }
    }
    void string(const std::string &key, std::string &out)
    {
        if (const json *v = get(key)) {
            if (!v->is_string()) fail(where(key), "expected a string");
            out = v->get<std::string>();
        }
    }
    void vec(const std::string &key, Vec3 &out)
    {
        if (const json *v = get(key)) out = to_vec(*v, where(key));
    }

    static Vec3 to_vec(const json &v, const std::string &field)
    {
        if (!v.is_array() || v.size() != 3) fail(field, "expected [x, y, z]");
        for (const auto &e : v)
            if (!e.is_number()) fail(field, "expected [x, y, z]");
        return {v[0].get<double>(), v[1].get<double>(), v[2].get<double>()};
    }

    void finish() const
    {
        for (auto it = j_.begin(); it != j_.end(); ++it)
            if (!used_.count(it.key())) fail(where(it.key()), "unknown field");
    }

private:
    const json &j_;
    std::string path_;
    std::set<std::string> used_;
};

json vec_json(const Vec3 &v) { return json::array({v.x, v.y, v.z}); }

void read_pattern(Fields &f, AntennaPattern &p)
{
    f.number("gain_dbi", p.gain_dbi);
    f.number("q", p.q);
    f.boolean("normalized", p.normalized);
    f.vec("boresight", p.boresight);
}

json pattern_json(const AntennaPattern &p)
{
    return {{"gain_dbi", p.gain_dbi}, {"q", p.q}, {"normalized", p.normalized}, {"boresight", vec_json(p.boresight)}};
}

const char *tech_name(ElementTech t)
{
    switch (t) {
    case ElementTech::Pin: return "pin";
    case ElementTech::Varactor: return "varactor";
    default: return "ideal";
    }
}

ElementTech parse_tech(const std::string &s, const std::string &field)
{
    if (s == "ideal") return ElementTech::Ideal;
    if (s == "pin") return ElementTech::Pin;
    if (s == "varactor") return ElementTech::Varactor;
    fail(field, "expected ideal, pin or varactor");
}

std::string read_file(const std::string &path)
{
    std::ifstream in(path, std::ios::binary);
    if (!in) throw ValidationError(path + ": cannot open file");
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

json parse_json(const std::string &text)
{
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) return json::object();
    try {
        return json::parse(text);
    } catch (const json::parse_error &e) {
        throw ValidationError(std::string("syntax error: ") + e.what());
    }
}

} // namespace

ScenarioConfig parse_scenario(const std::string &text)
{
    const json root = parse_json(text);
    ScenarioConfig cfg;
    Fields f(root, "");

    if (const json *v = f.get("frequency_hz")) {
        if (!v->is_number() || !(v->get<double>() > 0.0)) fail("frequency_hz", "must be a positive number");
        cfg.lambda = 299792458.0 / v->get<double>();
    }
    f.number("lambda", cfg.lambda);
    if (f.has("lambda") && f.has("frequency_hz")) fail("lambda", "give either lambda or frequency_hz");

    if (const json *v = f.get("bs")) {
        Fields b(*v, "bs");
        if (const json *a = b.get("antennas")) {
            if (!a->is_array()) fail("bs.antennas", "expected a list of [x, y, z]");
            cfg.bs_antennas.clear();
            for (std::size_t i = 0; i < a->size(); ++i)
                cfg.bs_antennas.push_back(Fields::to_vec((*a)[i], "bs.antennas[" + std::to_string(i) + "]"));
        }
        if (b.has("center") || b.has("count") || b.has("spacing")) {
            if (b.has("antennas")) fail("bs.center", "give either antennas or center/count/spacing");
            Point3 c{0, 0, 15};
            int n = 2;
            double s = 0.5 * cfg.lambda;
            b.vec("center", c);
            b.integer("count", n);
            b.number("spacing", s);
            if (n < 1) fail("bs.count", "must be >= 1");
            cfg.bs_antennas = linear_array(c, n, s);
        }
        read_pattern(b, cfg.bs_pattern);
        b.finish();
    }
    if (const json *v = f.get("ue")) {
        Fields u(*v, "ue");
        u.vec("position", cfg.ue);
        read_pattern(u, cfg.ue_pattern);
        u.finish();
    }
    if (const json *v = f.get("ris_pattern")) {
        Fields r(*v, "ris_pattern");
        read_pattern(r, cfg.ris_pattern);
        r.finish();
    }
    if (const json *v = f.get("ris")) {
        if (!v->is_array()) fail("ris", "expected a list of panels");
        cfg.ris.clear();
        for (std::size_t k = 0; k < v->size(); ++k) {
            Fields r((*v)[k], "ris[" + std::to_string(k) + "]");
            RisPanel p;
            r.vec("center", p.center);
            r.vec("normal", p.normal);
            r.vec("row_axis", p.row_axis);
            r.integer("rows", p.rows);
            r.integer("cols", p.cols);
            r.number("spacing", p.spacing);
            r.finish();
            cfg.ris.push_back(p);
        }
    }
    f.number("loc_noise_std", cfg.loc_noise_std);
    f.number("ce_error_std", cfg.ce_error_std);
    if (const json *v = f.get("rician_db")) {
        if (v->is_null())
            cfg.rician_db = std::numeric_limits<double>::infinity();
        else if (v->is_number())
            cfg.rician_db = v->get<double>();
        else
            fail("rician_db", "expected a number or null (no scattering)");
    }
    f.number("ris_noise_w", cfg.ris_noise_w);
    f.number("ue_noise_w", cfg.ue_noise_w);
    if (const json *v = f.get("noise_dbm")) {
        if (!v->is_number()) fail("noise_dbm", "expected a number");
        cfg.ris_noise_w = cfg.ue_noise_w = dbm_to_w(v->get<double>());
    }
    f.number("tx_power_w", cfg.tx_power_w);
    if (const json *v = f.get("tx_power_dbm")) {
        if (!v->is_number()) fail("tx_power_dbm", "expected a number");
        if (f.has("tx_power_w")) fail("tx_power_dbm", "give either tx_power_w or tx_power_dbm");
        cfg.tx_power_w = dbm_to_w(v->get<double>());
    }
    f.integer("phase_bits", cfg.phase_bits);
    f.boolean("continuous_phase", cfg.continuous_phase);
    std::string axis = cfg.axis_mode == AxisMode::Exact ? "exact" : "approximate";
    f.string("axis_mode", axis);
    if (axis == "exact")
        cfg.axis_mode = AxisMode::Exact;
    else if (axis == "approximate")
        cfg.axis_mode = AxisMode::Approximate;
    else
        fail("axis_mode", "expected exact or approximate");

    if (const json *v = f.get("power")) {
        Fields p(*v, "power");
        PowerModel &pm = cfg.power;
        p.number("eta1", pm.eta1);
        p.number("eta2", pm.eta2);
        p.number("absorb_eff", pm.absorb_eff);
        p.number("controller_w", pm.controller_w);
        p.number("dc_bias_w", pm.dc_bias_w);
        std::string tech = tech_name(pm.tech);
        p.string("tech", tech);
        pm.tech = parse_tech(tech, "power.tech");
        p.number("c_pin_w_per_bit", pm.c_pin_w_per_bit);
        p.number("c_var_w", pm.c_var_w);
        p.number("rho_max", pm.rho_max);
        p.finish();
    }
    if (const json *v = f.get("design")) {
        Fields d(*v, "design");
        DesignOptions &o = cfg.design;
        std::string comb = o.combining == AntennaCombining::PhaseCentre ? "phase_centre" : "intersection";
        d.string("combining", comb);
        if (comb == "phase_centre")
            o.combining = AntennaCombining::PhaseCentre;
        else if (comb == "intersection")
            o.combining = AntennaCombining::Intersection;
        else
            fail("design.combining", "expected phase_centre or intersection");
        d.number("curve_gap", o.curve_gap);
        d.integer("coupling_bits", o.coupling_bits);
        d.number("factor_step", o.factor_step);
        d.finish();
    }
    f.finish();
    validate(cfg);
    return cfg;
}

ScenarioConfig load_scenario(const std::string &path) { return parse_scenario(read_file(path)); }

std::string dump_scenario(const ScenarioConfig &cfg)
{
    json j;
    j["lambda"] = cfg.lambda;
    json ants = json::array();
    for (const auto &a : cfg.bs_antennas) ants.push_back(vec_json(a));
    j["bs"] = pattern_json(cfg.bs_pattern);
    j["bs"]["antennas"] = ants;
    j["ue"] = pattern_json(cfg.ue_pattern);
    j["ue"]["position"] = vec_json(cfg.ue);
    j["ris_pattern"] = pattern_json(cfg.ris_pattern);
    json panels = json::array();
    for (const auto &p : cfg.ris)
        panels.push_back({{"center", vec_json(p.center)},
                          {"normal", vec_json(p.normal)},
                          {"row_axis", vec_json(p.row_axis)},
                          {"rows", p.rows},
                          {"cols", p.cols},
                          {"spacing", p.spacing}});
    j["ris"] = panels;
    j["loc_noise_std"] = cfg.loc_noise_std;
    j["ce_error_std"] = cfg.ce_error_std;
    j["rician_db"] = std::isinf(cfg.rician_db) ? json(nullptr) : json(cfg.rician_db);
    j["ris_noise_w"] = cfg.ris_noise_w;
    j["ue_noise_w"] = cfg.ue_noise_w;
    j["tx_power_w"] = cfg.tx_power_w;
    j["phase_bits"] = cfg.phase_bits;
    j["continuous_phase"] = cfg.continuous_phase;
    j["axis_mode"] = cfg.axis_mode == AxisMode::Exact ? "exact" : "approximate";
    const PowerModel &pm = cfg.power;
    j["power"] = {{"eta1", pm.eta1},
                  {"eta2", pm.eta2},
                  {"absorb_eff", pm.absorb_eff},
                  {"controller_w", pm.controller_w},
                  {"dc_bias_w", pm.dc_bias_w},
                  {"tech", tech_name(pm.tech)},
                  {"c_pin_w_per_bit", pm.c_pin_w_per_bit},
                  {"c_var_w", pm.c_var_w},
                  {"rho_max", pm.rho_max}};
    const DesignOptions &o = cfg.design;
    j["design"] = {{"combining", o.combining == AntennaCombining::PhaseCentre ? "phase_centre" : "intersection"},
                   {"curve_gap", o.curve_gap},
                   {"coupling_bits", o.coupling_bits},
                   {"factor_step", o.factor_step}};
    return j.dump(2) + "\n";
}

void save_scenario(const ScenarioConfig &cfg, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot write");
    out << dump_scenario(cfg);
}

const std::vector<std::string> &sweep_parameters()
{
    static const std::vector<std::string> names{"transmit_power_dBm", "N_R",     "D", "location_error_m",
                                                "ce_error",           "p_fraction"};
    return names;
}

void check_sweep(const SweepSpec &spec)
{
    const auto &names = sweep_parameters();
    if (std::find(names.begin(), names.end(), spec.parameter) == names.end())
        fail("parameter", "unknown sweep parameter '" + spec.parameter + "'");
    if (spec.values.empty()) fail("values", "must not be empty");
    if (spec.strategies.empty()) fail("strategies", "must not be empty");
    if (spec.trials < 1) fail("trials", "must be >= 1");
    for (double v : spec.values)
        if (!std::isfinite(v)) fail("values", "must be finite");
    if (spec.parameter == "p_fraction")
        for (double v : spec.values)
            if (v < 0.0 || v > 1.0) fail("values", "p_fraction must lie in [0, 1]");
    if (spec.factor && (*spec.factor < 0.0 || *spec.factor > 1.0)) fail("factor", "must lie in [0, 1]");
}

SweepSpec parse_sweep(const std::string &text)
{
    const json root = parse_json(text);
    SweepSpec s;
    Fields f(root, "");
    f.string("parameter", s.parameter);
    if (const json *v = f.get("values")) {
        if (!v->is_array()) fail("values", "expected a list of numbers");
        s.values.clear();
        for (const auto &e : *v) {
            if (!e.is_number()) fail("values", "expected a list of numbers");
            s.values.push_back(e.get<double>());
        }
    }
    if (const json *v = f.get("strategies")) {
        if (!v->is_array()) fail("strategies", "expected a list of names");
        s.strategies.clear();
        for (const auto &e : *v) {
            if (!e.is_string()) fail("strategies", "expected a list of names");
            try {
                s.strategies.push_back(parse_strategy(e.get<std::string>()));
            } catch (const std::invalid_argument &ex) {
                fail("strategies", ex.what());
            }
        }
    }
    if (const json *v = f.get("trials")) {
        if (!v->is_number_unsigned()) fail("trials", "expected a positive integer");
        s.trials = v->get<std::size_t>();
    }
    if (const json *v = f.get("seed")) {
        if (!v->is_number_unsigned()) fail("seed", "expected an unsigned integer");
        s.seed = v->get<std::uint64_t>();
    }
    if (const json *v = f.get("factor")) {
        if (!v->is_number()) fail("factor", "expected a number");
        s.factor = v->get<double>();
    }
    f.finish();
    check_sweep(s);
    return s;
}

SweepSpec load_sweep(const std::string &path) { return parse_sweep(read_file(path)); }

ScenarioConfig apply_parameter(const ScenarioConfig &cfg, const std::string &name, double value)
{
    ScenarioConfig c = cfg;
    if (name == "transmit_power_dBm") {
        c.tx_power_w = dbm_to_w(value);
    } else if (name == "N_R") {
        const auto side = static_cast<int>(std::lround(std::sqrt(value)));
        if (side < 1 || static_cast<double>(side) * side != value) fail("values", "N_R must be a perfect square");
        for (auto &p : c.ris) p.rows = p.cols = side;
    } else if (name == "D") {
        if (value <= 0.0) {
            c.continuous_phase = true;
        } else {
            c.continuous_phase = false;
            c.phase_bits = static_cast<int>(std::lround(value));
        }
    } else if (name == "location_error_m") {
        c.loc_noise_std = value;
    } else if (name == "ce_error") {
        c.ce_error_std = value;
    } else if (name != "p_fraction") {
        fail("parameter", "unknown sweep parameter '" + name + "'");
    }
    validate(c);
    return c;
}

SweepResult run_sweep(const SweepSpec &spec, const ScenarioConfig &cfg, Exec exec)
{
    check_sweep(spec);
    SweepResult res;
    res.parameter = spec.parameter;
    const std::size_t ns = spec.strategies.size();
    for (std::size_t i = 0; i < spec.values.size(); ++i) {
        const double value = spec.values[i];
        const ScenarioConfig c = apply_parameter(cfg, spec.parameter, value);
        std::optional<double> factor = spec.factor;
        if (spec.parameter == "p_fraction") factor = value;

        std::vector<StrategyOutcome> out(spec.trials * ns);
        const auto nt = static_cast<std::ptrdiff_t>(spec.trials);
        std::string error;
#pragma omp parallel for schedule(dynamic, 1) if (exec == Exec::Parallel)
        for (std::ptrdiff_t t = 0; t < nt; ++t) {
            try {
                const TrialInputs trial = make_trial(c, spec.seed, i, static_cast<std::uint64_t>(t), Exec::Serial);
                const StrategyContext ctx = make_context(c, trial, Exec::Serial);
                for (std::size_t s = 0; s < ns; ++s)
                    out[static_cast<std::size_t>(t) * ns + s] = run_strategy(spec.strategies[s], ctx, factor);
            } catch (const std::exception &e) {
#pragma omp critical(ewris_sweep_error)
                if (error.empty()) error = e.what();
            }
        }
        if (!error.empty()) throw std::runtime_error("sweep point " + std::to_string(i) + ": " + error);

        for (std::size_t s = 0; s < ns; ++s) {
            SweepRow row;
            row.parameter = value;
            row.strategy = to_string(spec.strategies[s]);
            double sum = 0.0, ee = 0.0, harv = 0.0, sus = 0.0;
            for (std::size_t t = 0; t < spec.trials; ++t) {
                const StrategyOutcome &o = out[t * ns + s];
                sum += o.se;
                ee += o.ee;
                harv += o.harvested_w;
                sus += o.sustainable ? 1.0 : 0.0;
            }
            const double n = static_cast<double>(spec.trials);
            row.mean_se = sum / n;
            double var = 0.0;
            for (std::size_t t = 0; t < spec.trials; ++t) {
                const double d = out[t * ns + s].se - row.mean_se;
                var += d * d;
            }
            row.std_se = spec.trials > 1 ? std::sqrt(var / (n - 1.0)) : 0.0;
            row.mean_ee = ee / n;
            row.harvested_w = harv / n;
            row.sustain_rate = sus / n;
            res.rows.push_back(row);
        }
    }
    return res;
}

namespace {
std::string num(double v)
{
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.12g", v);
    return buf;
}
} // namespace

void write_csv(const SweepResult &r, std::ostream &os)
{
    os << "parameter,strategy,mean_se,std_se,mean_ee,harvested_w,sustain_rate\n";
    for (const auto &row : r.rows)
        os << num(row.parameter) << ',' << row.strategy << ',' << num(row.mean_se) << ',' << num(row.std_se) << ','
           << num(row.mean_ee) << ',' << num(row.harvested_w) << ',' << num(row.sustain_rate) << '\n';
}

void emit_csv(const SweepResult &r, const std::string &path)
{
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error(path + ": cannot write");
    write_csv(r, out);
    if (!out) throw std::runtime_error(path + ": write failed");
}

std::vector<ElementRow> element_map(const ScenarioConfig &cfg, std::optional<double> p, Exec exec)
{
    const TrialInputs trial = perfect_trial(cfg, exec);
    const StrategyContext ctx = make_context(cfg, trial, exec);
    const StrategyOutcome ew = run_strategy(Strategy::EW, ctx, p);
    const double chi = ew.factor * kPi / static_cast<double>(1 << ctx.plan.layout_bits);
    std::vector<ElementRow> rows;
    for (std::size_t k = 0; k < ctx.plan.ris.size(); ++k) {
        const RisPlan &rp = ctx.plan.ris[k];
        const RisConfiguration &c = ew.configs[k];
        for (std::size_t n = 0; n < rp.elements.size(); ++n) {
            ElementRow r;
            r.position = rp.elements[n];
            r.reflective = c.reflective[n] != 0;
            r.phase = r.reflective ? c.phase[n] : 0.0;
            const int slot = zone_for(rp, n, chi);
            r.zone = slot >= 0 ? rp.layouts.front().j(static_cast<std::size_t>(slot)) : -1.0;
            rows.push_back(r);
        }
    }
    return rows;
}

void write_element_map(const std::vector<ElementRow> &rows, std::ostream &os)
{
    os << "x,y,z,mode,phase,zone\n";
    for (const auto &r : rows)
        os << num(r.position.x) << ',' << num(r.position.y) << ',' << num(r.position.z) << ','
           << (r.reflective ? "reflective" : "absorptive") << ',' << num(r.phase) << ',' << num(r.zone) << '\n';
}

std::vector<PoptRow> popt_analysis(const ScenarioConfig &cfg, const std::vector<double> &n_r,
                                   const std::vector<ElementTech> &techs, const std::vector<int> &bits)
{
    std::vector<PoptRow> rows;
    for (ElementTech tech : techs)
        for (int d : bits)
            for (double n : n_r) {
                ScenarioConfig c = cfg;
                c.power.tech = tech;
                const AsymptoticParams a = asymptotic_params(c, n, d);
                const OptimalP po = optimal_p(a);
                const SustainabilityBoundary sb = sustainability_boundary(a);
                rows.push_back({n, tech_name(tech), d, po.p, po.valid, sb.empty ? 0.0 : sb.p_max, sb.p_opt_feasible});
            }
    return rows;
}

void write_popt_csv(const std::vector<PoptRow> &rows, std::ostream &os)
{
    os << "n_r,tech,D,p_opt,p_opt_valid,p_max_sustainable,p_opt_feasible\n";
    for (const auto &r : rows)
        os << num(r.n_r) << ',' << r.tech << ',' << r.bits << ',' << num(r.p_opt) << ',' << (r.p_opt_valid ? 1 : 0)
           << ',' << num(r.p_max_sustainable) << ',' << (r.p_opt_feasible ? 1 : 0) << '\n';
}

const std::vector<std::string> &preset_names()
{
    static const std::vector<std::string> names{"fig4", "fig4b", "fig5",  "fig6",  "fig7",
                                                "fig9", "fig10", "fig11", "fig12", "fig13"};
    return names;
}

Preset preset(const std::string &name, const ScenarioConfig &base)
{
    Preset p;
    p.name = name;
    p.cfg = base;
    SweepSpec &s = p.sweep;
    const std::vector<Strategy> four{Strategy::EW, Strategy::PS, Strategy::TS, Strategy::ES};
    auto range = [](double a, double b, double step) {
        std::vector<double> v;
        for (int i = 0; a + i * step <= b + 1e-9; ++i) v.push_back(a + i * step);
        return v;
    };
    if (name == "fig4" || name == "fig4b") {
        p.cfg.phase_bits = name == "fig4" ? 1 : 2;
        p.cfg.continuous_phase = false;
        p.element_map = true;
        s.parameter = "D";
        s.values = {static_cast<double>(p.cfg.phase_bits)};
        s.strategies = {Strategy::EW};
    } else if (name == "fig5") {
        p.cfg.phase_bits = 1;
        s.parameter = "transmit_power_dBm";
        s.values = range(10, 40, 5);
        s.strategies = four;
    } else if (name == "fig6") {
        p.cfg.phase_bits = 1;
        s.parameter = "N_R";
        s.values = {100, 400, 900, 1600, 2500, 3600, 4900};
        s.strategies = four;
    } else if (name == "fig7") {
        s.parameter = "D";
        s.values = {1, 2, 3, 4, 0};
        s.strategies = four;
    } else if (name == "fig9") {
        p.cfg.phase_bits = 1;
        s.parameter = "transmit_power_dBm";
        s.values = range(0, 40, 5);
        s.strategies = {Strategy::EW, Strategy::PS, Strategy::TS, Strategy::ES, Strategy::NoEH};
    } else if (name == "fig10") {
        p.popt = true;
        s.parameter = "N_R";
        s.values = {1e2, 3e2, 1e3, 3e3, 1e4, 3e4, 1e5, 3e5, 1e6};
        s.strategies = {Strategy::EW};
    } else if (name == "fig11") {
        s.parameter = "location_error_m";
        s.values = {0.0, 0.002, 0.005, 0.01, 0.02, 0.05, 0.1, 0.2, 0.5};
        s.strategies = {Strategy::EW, Strategy::RandomPhase};
        s.trials = 100;
    } else if (name == "fig12") {
        s.parameter = "transmit_power_dBm";
        s.values = range(10, 40, 5);
        s.strategies = {Strategy::EW, Strategy::AO};
    } else if (name == "fig13") {
        s.parameter = "ce_error";
        // the degradation knee sits near sigma = 1; the tail shows the plateau
        s.values = {0.0, 0.1, 0.2, 0.5, 1.0, 2.0, 5.0, 10.0, 30.0, 100.0};
        s.strategies = {Strategy::EW, Strategy::RandomPhase};
        s.trials = 100;
    } else {
        throw std::invalid_argument("unknown preset '" + name + "'");
    }
    return p;
}

} // namespace ewris
