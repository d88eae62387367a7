// SPDX-License-Identifier: Apache-2.0
// Reference values produced by tests/oracles/oracles.py.
#pragma once

namespace oracle {

constexpr double kFresnelRadiusExact = 0.086665620056;   // ellipse/plane intersection, d1=1, d2=3, i=1
constexpr double kFresnelRadiusApprox = 0.0866025403784;
constexpr double kAxesA = 5.005;                         // d=10, j=1, lambda=0.01
constexpr double kAxesBExact = 0.223662692463;
constexpr double kAxesBApprox = 0.22360679775;
constexpr double kLosDb1m = -61.9841972804;              // free-space loss at 1 m, lambda=0.01
constexpr double kPoptLimit = 0.209419295839;            // efficiency 0.9^3
constexpr double kChiOptD1 = 0.328955060664;
constexpr double kMaxGainRho10 = 4.38564414697;
constexpr double kGainArgmaxNoCircuit = 0.3333;          // grid step 1e-4, N=1e6
constexpr double kGainArgmaxCircuit = 0.3527;            // N=1e4, h=1e-3, P=2 W
constexpr double kSustainPmaxCircuit = 0.806006370045;
constexpr double kRisDiagonal = 0.353553390593;          // 50x50 at lambda/2
constexpr double kUpd = 0.94780071401;                   // threshold 0.95
constexpr double kRayleigh = 25.0;

} // namespace oracle
