#include "resload/appliance.hpp"

#include <cmath>
#include <stdexcept>

namespace resload {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

}  // namespace

void ApplianceSpec::validate() const {
    if (name.empty()) fail("appliance name must not be empty");
    if (instance < 1) fail(name + ": instance must be >= 1");
    if (!(p_sat >= 0.0 && p_sat <= 1.0)) fail(name + ": p_sat must lie in [0,1]");
    if (!(nominal_w >= 0.0)) fail(name + ": nominal_w must be >= 0");
    if (!(standby_w >= 0.0)) fail(name + ": standby_w must be >= 0");
    if (!(f_per_day >= 0.0)) fail(name + ": f_per_day must be >= 0");
    if (cycle_min < 1) fail(name + ": cycle_min must be >= 1");
    double sum = 0.0;
    for (double v : p_hour) {
        if (!(v >= 0.0)) fail(name + ": p_hour entries must be >= 0");
        sum += v;
    }
    if (p_hour_normalized && std::abs(sum - 1.0) > 1e-9)
        fail(name + ": normalized p_hour must sum to 1");
}

void HouseholdArchetype::validate() const {
    if (appliances.empty()) fail("archetype '" + name + "' has no appliances");
    for (const auto& a : appliances) {
        a.validate();
        for (const auto& b : appliances) {
            if (&a != &b && a.name == b.name && a.instance == b.instance)
                fail("archetype '" + name + "': duplicate appliance (" + a.name + ", " +
                     std::to_string(a.instance) + ")");
        }
    }
}

const ApplianceSpec* HouseholdArchetype::find(std::string_view appliance, int instance) const {
    for (const auto& a : appliances)
        if (a.name == appliance && a.instance == instance) return &a;
    return nullptr;
}

const StartProbabilityTable::Row* StartProbabilityTable::find(std::string_view appliance,
                                                              int instance) const {
    for (const auto& r : rows)
        if (r.appliance == appliance && r.instance == instance) return &r;
    return nullptr;
}

void StartProbabilityTable::validate() const {
    if (ref_step_min < 1) fail("table '" + archetype + "': ref_step_min must be >= 1");
    for (const auto& r : rows)
        for (double v : r.p)
            if (!(v >= 0.0 && v <= 1.0))
                fail("table '" + archetype + "', row " + r.appliance +
                     ": entries must lie in [0,1]");
}

void StartProbabilityTable::validate_against(const HouseholdArchetype& archetype_def) const {
    validate();
    for (const auto& a : archetype_def.appliances)
        if (!find(a.name, a.instance))
            fail("table '" + archetype + "': missing row for (" + a.name + ", " +
                 std::to_string(a.instance) + ")");
    for (const auto& r : rows)
        if (!archetype_def.find(r.appliance, r.instance))
            fail("table '" + archetype + "': row (" + r.appliance + ", " +
                 std::to_string(r.instance) + ") has no appliance in archetype '" +
                 archetype_def.name + "'");
}

double compute_p_step(int step_min) {
    if (step_min < 1 || 60 % step_min != 0)
        fail("step_min must be a positive divisor of 60, got " + std::to_string(step_min));
    return step_min / 60.0;
}

double compute_p_start_unclamped(const ApplianceSpec& spec, int hour, int step_min) {
    if (hour < 1 || hour > 24) fail("hour must lie in 1..24, got " + std::to_string(hour));
    return spec.p_hour[static_cast<std::size_t>(hour - 1)] * spec.f_per_day *
           compute_p_step(step_min) * spec.p_sat;
}

double compute_p_start(const ApplianceSpec& spec, int hour, int step_min, ClampStats* clamps) {
    double v = compute_p_start_unclamped(spec, hour, step_min);
    if (v > 1.0) {
        if (clamps) clamps->count += 1;
        return 1.0;
    }
    return v;
}

StartProbabilityTable rescale_table(const StartProbabilityTable& table, int step_min,
                                    ClampStats* clamps) {
    double factor = compute_p_step(step_min) / compute_p_step(table.ref_step_min);
    StartProbabilityTable out = table;
    out.ref_step_min = step_min;
    for (auto& r : out.rows) {
        for (auto& v : r.p) {
            v *= factor;
            if (v > 1.0) {
                if (clamps) clamps->count += 1;
                v = 1.0;
            }
        }
    }
    return out;
}

PHourReconstruction reconstruct_p_hour(const std::array<double, 24>& row, double f,
                                       double p_sat, int ref_step_min) {
    double denom = f * p_sat * compute_p_step(ref_step_min);
    if (!(denom > 0.0)) fail("reconstruct_p_hour: f * p_sat * step factor must be > 0");
    PHourReconstruction out;
    for (int h = 0; h < 24; ++h) {
        out.p_hour[static_cast<std::size_t>(h)] = row[static_cast<std::size_t>(h)] / denom;
        out.sum += out.p_hour[static_cast<std::size_t>(h)];
    }
    out.flagged = std::abs(out.sum - 1.0) > 0.05;
    return out;
}

}  // namespace resload
