#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace resload {

/// Static parameters of one appliance instance in a household archetype.
///
/// Repeated rows of the same appliance (e.g. several "Lighting" entries) are
/// independent instances distinguished by `instance`.
struct ApplianceSpec {
    std::string name;
    int instance = 1;
    double p_sat = 1.0;      ///< saturation level (ownership probability), in [0,1]
    double nominal_w = 0.0;  ///< power drawn while running, W
    double standby_w = 0.0;  ///< continuous standby draw, W (0 when unknown)
    double f_per_day = 0.0;  ///< mean daily starting frequency, 1/day
    int cycle_min = 1;       ///< on-cycle duration, minutes
    std::array<double, 24> p_hour{};  ///< hourly activity profile, hours 1..24
    bool p_hour_normalized = false;   ///< when set, sum(p_hour) must be 1 within 1e-9

    /// Throws std::invalid_argument on any violated field constraint.
    void validate() const;
};

/// A named flat type: an ordered, non-empty list of appliance instances.
struct HouseholdArchetype {
    std::string name;
    std::vector<ApplianceSpec> appliances;

    void validate() const;
    const ApplianceSpec* find(std::string_view appliance, int instance) const;
};

/// Per-appliance starting probabilities for each hour of the day, tabulated
/// at a declared reference step size.
struct StartProbabilityTable {
    struct Row {
        std::string appliance;
        int instance = 1;
        std::array<double, 24> p{};
    };

    std::string archetype;
    int ref_step_min = 5;
    std::vector<Row> rows;

    const Row* find(std::string_view appliance, int instance) const;
    void validate() const;
    /// Additionally checks that row keys match the archetype's appliance list.
    void validate_against(const HouseholdArchetype& archetype_def) const;
};

/// Counts how many probability products had to be clamped into [0,1].
struct ClampStats {
    long long count = 0;
};

/// Step-size scaling factor: step_min / 60.
/// step_min must be a positive divisor of 60 so that steps tile the hour.
double compute_p_step(int step_min);

/// Per-step starting probability for `hour` (1..24):
/// p_hour[hour] * f_per_day * compute_p_step(step_min) * p_sat, clamped to [0,1].
/// A clamp is recorded in `clamps` when the raw product exceeds 1.
double compute_p_start(const ApplianceSpec& spec, int hour, int step_min,
                       ClampStats* clamps = nullptr);

/// Same product without the clamp; the daily sum of this quantity over all
/// steps equals f_per_day * p_sat exactly when p_hour sums to 1.
double compute_p_start_unclamped(const ApplianceSpec& spec, int hour, int step_min);

/// Linearly rescales every entry to a new step size (entries * step/ref),
/// clamping into [0,1]. Rescaling to the table's own ref_step_min is the identity.
StartProbabilityTable rescale_table(const StartProbabilityTable& table, int step_min,
                                    ClampStats* clamps = nullptr);

struct PHourReconstruction {
    std::array<double, 24> p_hour{};
    double sum = 0.0;     ///< recovered sum over the 24 hours
    bool flagged = false; ///< set when |sum - 1| exceeds 5%
};

/// Inverts the starting-probability product: p_hour[h] = row[h] / (f * p_sat * ref/60).
/// Throws std::invalid_argument when the denominator is zero.
PHourReconstruction reconstruct_p_hour(const std::array<double, 24>& row, double f,
                                       double p_sat, int ref_step_min);

}  // namespace resload
