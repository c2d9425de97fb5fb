#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "resload/appliance.hpp"

namespace resload {

/// Where per-step starting probabilities come from.
enum class ProbabilitySource {
    FromParameters,  ///< product of hourly profile, frequency, step factor and saturation
    FromTable,       ///< tabulated rows, rescaled to the configured step
};

/// How appliance ownership (saturation) enters the simulation.
enum class OwnershipMode {
    /// Saturation stays inside the starting probability; every appliance is
    /// present and standby draw is scaled by p_sat. Population averages match
    /// the tabulated products directly.
    ProbabilityScaling,
    /// Presence is sampled once per household with probability p_sat; present
    /// appliances use the saturation-free starting probability and draw full
    /// standby power.
    BernoulliPresence,
};

enum class StandbyMode {
    Continuous,   ///< standby drawn every step, also while the appliance runs
    OffTimeOnly,  ///< standby drawn only on steps without an active cycle
};

struct SimulationConfig {
    int step_min = 5;
    int warmup_days = 1;   ///< simulated but excluded from the returned profile
    int sim_days = 1;
    int households = 1;
    std::uint64_t base_seed = 1;
    ProbabilitySource probability_source = ProbabilitySource::FromTable;
    OwnershipMode ownership_mode = OwnershipMode::ProbabilityScaling;
    StandbyMode standby_mode = StandbyMode::Continuous;
    /// Worker threads for fleet simulation; 0 picks a hardware default.
    /// Results are independent of this setting by contract.
    int threads = 0;

    int steps_per_day() const { return 24 * 60 / step_min; }
    void validate() const;
};

/// A uniformly sampled power time series, one value in watts per step.
struct LoadProfile {
    int step_min = 5;
    std::vector<double> samples;
    // meta
    std::string archetype;
    int households = 1;
    std::uint64_t seed = 0;

    int steps_per_day() const { return 24 * 60 / step_min; }
    double days() const { return static_cast<double>(samples.size()) / steps_per_day(); }
    /// Integral of the profile in watt-hours (compensated summation).
    double total_wh() const;
};

/// On/off machine state of a single appliance. status == On exactly when
/// remaining_steps >= 1.
struct ApplianceState {
    enum class Status { Off, On };
    Status status = Status::Off;
    int remaining_steps = 0;
};

struct StepOutcome {
    ApplianceState state;
    bool active = false;  ///< whether the appliance drew nominal power this step
};

/// Advances one appliance by one step. An Off appliance whose start check
/// succeeds (p_start > u) is scheduled for a full cycle beginning on the next
/// step; the scheduling step itself draws no nominal power, so every start
/// contributes exactly cycle_steps powered steps. A cycle whose last step
/// completes leaves the appliance Off and eligible to start on the next step.
StepOutcome step_appliance(ApplianceState state, double p_start, double u, int cycle_steps);

/// Stateless mix of (base_seed, household_index) into a substream seed.
/// Distinct indices yield distinct seeds; same inputs, same output.
std::uint64_t derive_substream_seed(std::uint64_t base_seed, std::uint64_t household_index);

/// Per-appliance energy ledger over the retained (post-warm-up) days.
struct ApplianceEnergy {
    std::string name;
    int instance = 1;
    long long starts = 0;        ///< successful start checks on retained days
    long long active_steps = 0;  ///< powered steps on retained days
    double active_wh = 0.0;
    double standby_wh = 0.0;
};

struct HouseholdResult {
    LoadProfile profile;
    std::vector<ApplianceEnergy> ledger;
    long long clamp_count = 0;  ///< probability entries clamped into [0,1]
    std::vector<std::string> warnings;

    double total_wh() const;  ///< ledger total (active + standby)
};

/// Simulates one household over warmup_days + sim_days and returns the
/// retained profile plus its energy ledger. `table` is required when
/// probability_source == FromTable and must cover every appliance instance.
HouseholdResult simulate_household(const HouseholdArchetype& archetype,
                                   const StartProbabilityTable* table,
                                   const SimulationConfig& config, std::uint64_t seed);

struct FleetStats {
    double mean_monthly_kwh = 0.0;
    double sd_monthly_kwh = 0.0;  ///< sample standard deviation (0 for one household)
    double se_monthly_kwh = 0.0;  ///< standard error of the mean
    std::vector<double> household_monthly_kwh;
};

struct FleetResult {
    LoadProfile mean_profile;  ///< pointwise average over households
    FleetStats stats;
    long long clamp_count = 0;  ///< per household (identical across the fleet)
    std::vector<std::string> warnings;
};

/// Simulates config.households independent households on derived substreams,
/// possibly concurrently. Output is a pure function of (archetype, table,
/// config, base_seed): per-household results are merged in household order,
/// so thread count and scheduling cannot change a single bit.
FleetResult simulate_fleet(const HouseholdArchetype& archetype,
                           const StartProbabilityTable* table, const SimulationConfig& config);

namespace detail {

/// Per-step start probabilities over one day for a single appliance, built
/// per the configured probability source and ownership mode. Exposed for the
/// expectation oracle so both paths consume identical model inputs.
std::vector<double> per_step_start_probabilities(const ApplianceSpec& spec,
                                                 const StartProbabilityTable* table,
                                                 const SimulationConfig& config,
                                                 ClampStats* clamps);

/// Cycle length in steps, rounded up to the step grid; sets *rounded when the
/// cycle was not a multiple of the step.
int cycle_steps_for(const ApplianceSpec& spec, int step_min, bool* rounded);

/// Compensated (Neumaier) summation.
double neumaier_sum(const std::vector<double>& values);

}  // namespace detail

}  // namespace resload
