#pragma once

#include <string>
#include <string_view>

#include "resload/analytics.hpp"
#include "resload/appliance.hpp"
#include "resload/engine.hpp"

namespace resload {

/// Parses the appliance-parameter schema:
///   archetype,appliance,instance,p_sat,nominal_w,standby_w,f_per_day,cycle_min
/// Lines starting with '#' are comments. "NA" (any case) in standby_w maps to
/// 0 W. Every other malformed field is an input error naming row and column;
/// the file must hold exactly one archetype and at least one row.
HouseholdArchetype parse_appliance_table(std::string_view text);

/// Parses the starting-probability schema:
///   archetype,appliance,instance,ref_step_min,h01..h24
/// Scientific notation is accepted; entries must lie in [0,1].
StartProbabilityTable parse_pstart_table(std::string_view text);

/// Serializes a profile as "t_min,power_w" rows, power with 6 significant
/// digits. Writing then reading reproduces the profile at that precision.
std::string write_profile_csv(const LoadProfile& profile);

/// Reads the profile schema back; the step is inferred from the (uniform)
/// t_min spacing.
LoadProfile read_profile_csv(std::string_view text);

/// Reads measured interval data: "interval_start_min,energy_kwh" with uniform
/// spacing; the bin width is inferred. Negative energies are input errors.
IntervalSeries read_interval_csv(std::string_view text);

/// Parses "archetype,ema_kwh,paper_sim_kwh" reference rows.
BenchmarkSet parse_benchmarks_csv(std::string_view text);

}  // namespace resload
