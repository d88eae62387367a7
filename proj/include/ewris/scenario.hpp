// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "ewris/geometry.hpp"
#include "ewris/vec3.hpp"

namespace ewris {

struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

enum class ElementTech { Ideal, Pin, Varactor };

struct PowerModel {
    double eta1 = 0.9;        // RF-to-DC conversion
    double eta2 = 0.9;        // storage-to-circuit conversion
    double absorb_eff = 0.9;  // absorptive coefficient
    double controller_w = 0.0;
    double dc_bias_w = 0.0;
    ElementTech tech = ElementTech::Ideal;
    double c_pin_w_per_bit = 0.33e-3;
    double c_var_w = 1e-3;
    double rho_max = 10.0;

    // Per-element consumption for a given phase resolution.
    double per_element_w(int bits) const
    {
        switch (tech) {
        case ElementTech::Pin: return c_pin_w_per_bit * bits;
        case ElementTech::Varactor: return c_var_w;
        default: return 0.0;
        }
    }
};

struct AntennaPattern {
    double gain_dbi = 0.0;
    double q = 0.0;
    bool normalized = false; // use the cos^q hemisphere normalisation instead of gain_dbi
    Vec3 boresight{};        // zero vector: isotropic

    double gain(const Vec3 &dir) const;
};

struct RisPanel {
    Point3 center{};
    Vec3 normal{0, 0, 1};
    Vec3 row_axis{1, 0, 0};
    int rows = 50;
    int cols = 50;
    double spacing = 0.0; // <= 0 means lambda/2

    std::size_t size() const { return static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols); }
    double pitch(double lambda) const { return spacing > 0.0 ? spacing : 0.5 * lambda; }
    // Row-major element positions, row index along normal x row_axis.
    std::vector<Point3> elements(double lambda) const;
    // Diagonal of the populated aperture.
    double diagonal(double lambda) const;
};

enum class AntennaCombining { PhaseCentre, Intersection };

struct DesignOptions {
    AntennaCombining combining = AntennaCombining::PhaseCentre;
    double curve_gap = 0.25;       // max curve sample gap, in element pitches
    int coupling_bits = 1;         // resolution of the inter-curve coupling check; 0 = same as D
    double factor_step = 0.01;     // grid step for operating factors
};

struct ScenarioConfig {
    double lambda = 0.01;
    std::vector<Point3> bs_antennas{{-0.0025, 0.0, 15.0}, {0.0025, 0.0, 15.0}};
    AntennaPattern bs_pattern{15.0, 0.0, false, {0, 0, -1}};
    AntennaPattern ue_pattern{0.0, 0.0, false, {}};
    AntennaPattern ris_pattern{0.0, 0.0, true, {0, 0, 1}};
    std::vector<RisPanel> ris{RisPanel{}};
    Point3 ue{5.0, 5.0, 1.5};

    double loc_noise_std = 0.0;  // m, per axis
    double ce_error_std = 0.0;   // relative
    double rician_db = std::numeric_limits<double>::infinity();

    double ris_noise_w = 1e-12;
    double ue_noise_w = 1e-12;
    double tx_power_w = 1.0;

    int phase_bits = 1;
    bool continuous_phase = false;
    AxisMode axis_mode = AxisMode::Exact;

    PowerModel power;
    DesignOptions design;

    std::size_t n_tx() const { return bs_antennas.size(); }
};

// Throws ValidationError naming the offending field. Returns soft warnings.
std::vector<std::string> validate(const ScenarioConfig &cfg);

// n antennas along x at the given spacing, centred at c.
std::vector<Point3> linear_array(const Point3 &c, int n, double spacing);

inline double dbm_to_w(double dbm) { return 1e-3 * std::pow(10.0, dbm / 10.0); }
inline double w_to_dbm(double w) { return 10.0 * std::log10(w / 1e-3); }

} // namespace ewris
