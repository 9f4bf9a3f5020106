#include "evtol/mass.hpp"

#include <cmath>

#include "evtol/mission.hpp"

namespace evtol {

double payload_mass(const ScenarioConfig& cfg) {
  return (cfg.mass.pax_mass_kg + cfg.mass.luggage_mass_kg) * cfg.ops.seats *
         cfg.mass.sizing_load_factor;
}

double battery_mass(double e_trip_kwh, double e_reserve_kwh,
                    double rho_battery_wh_kg, double usable_fraction) {
  if (rho_battery_wh_kg <= 0) {
    throw ModelError(ModelErrorCode::kBadInput,
                     "battery_mass: energy density must be > 0");
  }
  return (e_trip_kwh + e_reserve_kwh) * 1000.0 /
         (usable_fraction * rho_battery_wh_kg);
}

EmptyMasses empty_mass(const DesignVector& design, double mtom_kg,
                       double p_lift_kw, double p_pusher_kw,
                       const ScenarioConfig& cfg) {
  if (mtom_kg <= 0) {
    throw ModelError(ModelErrorCode::kBadInput, "empty_mass: MTOM must be > 0");
  }
  const MassConfig& mc = cfg.mass;
  const double area = design.span_m * design.chord_m;
  const double ar = design.span_m / design.chord_m;

  EmptyMasses m;
  m.wing_kg = mc.wing_coeff * std::pow(area, mc.wing_area_exp) *
              std::pow(ar, mc.wing_ar_exp) *
              std::pow(mc.ultimate_load_factor * mtom_kg, mc.wing_load_exp);
  m.fuselage_kg = mc.fuselage_coeff * std::pow(mtom_kg, mc.fuselage_exp);
  m.gear_kg = mc.gear_fraction * mtom_kg;
  m.rotor_kg = mc.rotor_coeff *
               (cfg.prop.lift_rotor_count *
                    std::pow(design.r_hover_m, mc.rotor_exp) +
                std::pow(design.r_cruise_m, mc.rotor_exp));
  m.motor_kg = cfg.prop.motor_sizing_margin * (p_lift_kw + p_pusher_kw) /
               mc.motor_specific_power;
  m.systems_kg = mc.systems_coeff * std::pow(mtom_kg, mc.systems_exp);
  m.furnish_kg = std::max(mc.furnish_slope * mtom_kg + mc.furnish_offset, 0.0);
  m.crew_kg = mc.crew_mass_kg;
  m.total_kg = m.wing_kg + m.fuselage_kg + m.gear_kg + m.rotor_kg +
               m.motor_kg + m.systems_kg + m.furnish_kg + m.crew_kg;
  m.outside_validity = mtom_kg < mc.regression_valid_lo_kg ||
                       mtom_kg > mc.regression_valid_hi_kg;
  return m;
}

namespace {

struct LoopBody {
  const DesignVector& design;
  const ScenarioConfig& cfg;
  double payload;

  // One pass of the coupling: mass -> mission energy -> component masses.
  double operator()(double mtom, MassBreakdown* out) const {
    const MissionResult mission = fly_mission(mtom, design, cfg);
    const double p_pusher =
        std::max(mission.climb.power_kw, mission.cruise.power_kw);
    const EmptyMasses empty =
        empty_mass(design, mtom, mission.hover.power_kw, p_pusher, cfg);
    const double bat =
        battery_mass(mission.budget.e_trip_kwh, mission.budget.e_reserve_kwh,
                     design.rho_battery_wh_kg, cfg.battery.usable_fraction);
    if (out != nullptr) {
      out->payload_kg = payload;
      out->battery_kg = bat;
      out->empty_kg = empty.total_kg;
      out->wing_kg = empty.wing_kg;
      out->fuselage_kg = empty.fuselage_kg;
      out->gear_kg = empty.gear_kg;
      out->rotor_kg = empty.rotor_kg;
      out->motor_kg = empty.motor_kg;
      out->systems_kg = empty.systems_kg;
      out->furnish_kg = empty.furnish_kg;
      out->crew_kg = empty.crew_kg;
      if (empty.outside_validity) {
        out->warnings.push_back(
            "mass regressions evaluated outside their validity band");
      }
    }
    return payload + empty.total_kg + bat;
  }
};

}  // namespace

MassBreakdown solve_mtom(const DesignVector& design,
                         const ScenarioConfig& cfg) {
  return solve_mtom(design, cfg, cfg.mass.mtom_guess_kg);
}

MassBreakdown solve_mtom(const DesignVector& design, const ScenarioConfig& cfg,
                         double initial_guess_kg) {
  if (const char* field = first_bounds_violation(design, cfg.bounds)) {
    throw ModelError(ModelErrorCode::kDesignOutOfBounds,
                     std::string("design variable out of bounds: ") + field);
  }
  const LoopBody body{design, cfg, payload_mass(cfg)};
  const double tol = cfg.mass.fixed_point_tol_kg;

  // Steffensen iteration: two plain substitution steps give consecutive
  // residuals at the current point, and their ratio estimates the local map
  // slope for an Aitken jump. Plain steps alone converge (the map contracts
  // with a ratio up to ~0.95 for battery-heavy designs) but too slowly for
  // the iteration budget; jumps computed from stale residuals, on the other
  // hand, can catapult the iterate out of the certification band, so the
  // ratio is always measured fresh and the jump skipped when the two
  // residuals disagree in sign.
  const auto probe = [&](double at, int evals) {
    const double next = body(at, nullptr);
    if (!std::isfinite(next) || next > 1e7) {
      throw ModelError(ModelErrorCode::kMassDivergence,
                       "MTOM iteration diverged after " +
                           std::to_string(evals) + " evaluations");
    }
    return next;
  };

  double m = initial_guess_kg;
  int iter = 0;
  bool settled = false;
  for (; iter < cfg.mass.fixed_point_max_iter && !settled; ++iter) {
    const double r1 = probe(m, 2 * iter + 1) - m;
    if (std::abs(r1) < tol) {
      m += r1;
      settled = true;
      break;
    }
    const double m1 = m + r1;
    const double r2 = probe(m1, 2 * iter + 2) - m1;
    if (std::abs(r2) < tol) {
      m = m1 + r2;
      settled = true;
      break;
    }
    const double ratio = r2 / r1;
    if (ratio > 0.0) {
      // Aitken jump toward the fixed point. The denominator is kept away
      // from the unit-slope singularity, which bounds the jump at 50 plain
      // steps; past the basin of attraction (slope > 1) the jump reverses
      // direction, back toward the interior fixed point.
      double denom = 1.0 - ratio;
      if (std::abs(denom) < 0.02) {
        denom = denom < 0.0 ? -0.02 : 0.02;
      }
      m = m1 + r2 / denom;
    } else {
      m = m1 + r2;  // sign flip: fall back to plain substitution
    }
    if (m <= 0.0) {
      m = 1.0;  // regressions need a positive mass to probe
    }
  }

  MassBreakdown result;
  const double check = body(m, &result);
  result.mtom_kg = m;
  result.iterations = iter;
  result.residual_kg = std::abs(check - m);
  if (result.residual_kg >= cfg.mass.fixed_point_tol_kg * 10.0 &&
      result.residual_kg >= 0.01) {
    throw ModelError(
        ModelErrorCode::kMassDivergence,
        "MTOM fixed point not converged after " + std::to_string(iter) +
            " iterations (residual " + std::to_string(result.residual_kg) +
            " kg)");
  }
  // Report the sum of the parts so the mass identity holds bit-exactly; it
  // differs from the iterate by less than the convergence tolerance.
  result.mtom_kg = result.payload_kg + result.empty_kg + result.battery_kg;
  result.empty_fraction = result.empty_kg / result.mtom_kg;
  result.battery_fraction = result.battery_kg / result.mtom_kg;
  return result;
}

}  // namespace evtol
