#include "evtol/atmosphere.hpp"

#include <cmath>

namespace evtol {

double isa_air_density(double altitude_m, double gravity,
                       double sea_level_temp_k, double sea_level_pressure_pa,
                       double lapse_rate_k_m, double gas_constant) {
  const double t = sea_level_temp_k - lapse_rate_k_m * altitude_m;
  const double p = sea_level_pressure_pa *
                   std::pow(t / sea_level_temp_k,
                            gravity / (gas_constant * lapse_rate_k_m));
  return p / (gas_constant * t);
}

}  // namespace evtol
