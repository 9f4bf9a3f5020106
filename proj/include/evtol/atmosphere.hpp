#pragma once

namespace evtol {

// Standard-atmosphere air density for the troposphere. The scenario stores
// the resulting densities as plain config values; this helper exists so the
// defaults can be checked and so scenarios at other altitudes are easy to
// produce.
double isa_air_density(double altitude_m, double gravity = 9.80665,
                       double sea_level_temp_k = 288.15,
                       double sea_level_pressure_pa = 101325.0,
                       double lapse_rate_k_m = 0.0065,
                       double gas_constant = 287.053);

}  // namespace evtol
