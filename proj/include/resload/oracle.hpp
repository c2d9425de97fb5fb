#pragma once

#include <string>
#include <vector>

#include "resload/appliance.hpp"
#include "resload/engine.hpp"

namespace resload {

/// Periodic steady state of one appliance's on/off chain: the probability of
/// drawing nominal power at each step of the day, plus the expected number of
/// successful start checks per day. Blocking (no start while running) is
/// accounted for exactly, so expected starts never exceed the unblocked rate.
struct OnProbabilityProfile {
    int step_min = 5;
    std::vector<double> on_probability;  ///< per step of a day
    double expected_starts_per_day = 0.0;
    int days_to_converge = 0;
};

/// Evolves the exact state distribution over {Off, On(r)} day by day until the
/// start-of-day distribution moves by less than `tol` in total variation.
/// Throws std::runtime_error if the chain has not settled after `max_days`.
OnProbabilityProfile exact_on_probability(const std::vector<double>& p_steps, int cycle_steps,
                                          double tol = 1e-9, int max_days = 10000);

/// Convenience overload mirroring the simulation's probability construction
/// for one appliance under `config`.
OnProbabilityProfile exact_on_probability(const ApplianceSpec& spec,
                                          const StartProbabilityTable* table,
                                          const SimulationConfig& config);

struct ApplianceEnergyExpectation {
    std::string name;
    int instance = 1;
    double expected_starts_per_day = 0.0;
    double active_kwh_per_day = 0.0;
    double standby_kwh_per_day = 0.0;
};

struct DailyEnergyExpectation {
    std::vector<ApplianceEnergyExpectation> appliances;
    double total_kwh_per_day = 0.0;

    double total_monthly_kwh() const { return total_kwh_per_day * 30.0; }
};

/// Exact expected daily energy: nominal power weighted by the steady-state On
/// probability plus the configured standby contribution, per appliance. Linear
/// in the appliance list; an empty archetype yields zero.
DailyEnergyExpectation expected_daily_energy_exact(const HouseholdArchetype& archetype,
                                                   const StartProbabilityTable* table,
                                                   const SimulationConfig& config);

/// Closed-form monthly energy, ignoring blocking (an upper bound on the exact
/// expectation under scaled standby):
///   30 * sum_a p_sat * (standby_seconds * standby_w + f * nominal_w * cycle_s) / 3.6e6
/// The full-day variant charges 86400 s of standby per day; the one-hour
/// variant charges 3600 s, reproducing the commonly printed short form.
struct ClosedFormMonthly {
    struct Entry {
        std::string name;
        int instance = 1;
        double full_day_standby_kwh = 0.0;
        double one_hour_standby_kwh = 0.0;
    };
    std::vector<Entry> appliances;
    double full_day_standby_kwh = 0.0;
    double one_hour_standby_kwh = 0.0;
};

ClosedFormMonthly expected_monthly_energy_closed_form(const HouseholdArchetype& archetype);

}  // namespace resload
