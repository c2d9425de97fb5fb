#include "resload/oracle.hpp"

#include <cmath>
#include <stdexcept>

namespace resload {

namespace {

// One day-sweep of the state distribution. pi[0] = Off, pi[r] = On with r
// steps remaining. On(r) draws power this step; Off may schedule On(L) for
// the next step, so the scheduling step itself is unpowered.
void sweep_day(std::vector<double>& pi, const std::vector<double>& p_steps, int L,
               std::vector<double>* on_prob, double* starts) {
    const std::size_t T = p_steps.size();
    std::vector<double> next(pi.size());
    for (std::size_t t = 0; t < T; ++t) {
        const double p = p_steps[t];
        if (on_prob) {
            double on = 0.0;
            for (int r = 1; r <= L; ++r) on += pi[static_cast<std::size_t>(r)];
            (*on_prob)[t] = on;
        }
        if (starts) *starts += pi[0] * p;
        std::fill(next.begin(), next.end(), 0.0);
        next[0] = pi[0] * (1.0 - p) + pi[1];
        next[static_cast<std::size_t>(L)] += pi[0] * p;
        for (int r = 2; r <= L; ++r) next[static_cast<std::size_t>(r - 1)] += pi[static_cast<std::size_t>(r)];
        pi.swap(next);
    }
}

}  // namespace

OnProbabilityProfile exact_on_probability(const std::vector<double>& p_steps, int cycle_steps,
                                          double tol, int max_days) {
    if (p_steps.empty()) throw std::invalid_argument("p_steps must not be empty");
    if (cycle_steps < 1) throw std::invalid_argument("cycle_steps must be >= 1");
    for (double p : p_steps)
        if (!(p >= 0.0 && p <= 1.0))
            throw std::invalid_argument("start probabilities must lie in [0,1]");

    const int L = cycle_steps;
    std::vector<double> pi(static_cast<std::size_t>(L) + 1, 0.0);
    pi[0] = 1.0;

    int day = 0;
    for (; day < max_days; ++day) {
        std::vector<double> before = pi;
        sweep_day(pi, p_steps, L, nullptr, nullptr);
        double tv = 0.0;
        for (std::size_t i = 0; i < pi.size(); ++i) tv += std::abs(pi[i] - before[i]);
        if (0.5 * tv < tol) break;
    }
    if (day >= max_days)
        throw std::runtime_error("state distribution did not settle after " +
                                 std::to_string(max_days) + " day iterations");

    OnProbabilityProfile out;
    out.step_min = static_cast<int>(24 * 60 / p_steps.size());
    out.on_probability.assign(p_steps.size(), 0.0);
    out.days_to_converge = day + 1;
    sweep_day(pi, p_steps, L, &out.on_probability, &out.expected_starts_per_day);
    return out;
}

OnProbabilityProfile exact_on_probability(const ApplianceSpec& spec,
                                          const StartProbabilityTable* table,
                                          const SimulationConfig& config) {
    config.validate();
    std::vector<double> p = detail::per_step_start_probabilities(spec, table, config, nullptr);
    int L = detail::cycle_steps_for(spec, config.step_min, nullptr);
    OnProbabilityProfile prof = exact_on_probability(p, L);
    prof.step_min = config.step_min;
    return prof;
}

DailyEnergyExpectation expected_daily_energy_exact(const HouseholdArchetype& archetype,
                                                   const StartProbabilityTable* table,
                                                   const SimulationConfig& config) {
    config.validate();
    const bool bernoulli = config.ownership_mode == OwnershipMode::BernoulliPresence;
    const bool standby_continuous = config.standby_mode == StandbyMode::Continuous;
    const double step_h = config.step_min / 60.0;

    DailyEnergyExpectation out;
    for (const auto& spec : archetype.appliances) {
        ApplianceEnergyExpectation e;
        e.name = spec.name;
        e.instance = spec.instance;

        // In presence mode the chain describes a household that owns the
        // appliance; expectations scale by the ownership probability.
        const double weight = bernoulli ? spec.p_sat : 1.0;
        if (!bernoulli || spec.p_sat > 0.0) {
            OnProbabilityProfile prof = exact_on_probability(spec, table, config);
            double on_hours = 0.0;
            for (double q : prof.on_probability) on_hours += q * step_h;
            e.expected_starts_per_day = weight * prof.expected_starts_per_day;
            e.active_kwh_per_day = weight * spec.nominal_w * on_hours / 1000.0;
            const double standby_w = bernoulli ? spec.standby_w : spec.standby_w * spec.p_sat;
            e.standby_kwh_per_day =
                weight * standby_w * (standby_continuous ? 24.0 : 24.0 - on_hours) / 1000.0;
        }
        out.total_kwh_per_day += e.active_kwh_per_day + e.standby_kwh_per_day;
        out.appliances.push_back(std::move(e));
    }
    return out;
}

ClosedFormMonthly expected_monthly_energy_closed_form(const HouseholdArchetype& archetype) {
    ClosedFormMonthly out;
    for (const auto& spec : archetype.appliances) {
        const double active_j = spec.f_per_day * spec.nominal_w * spec.cycle_min * 60.0;
        ClosedFormMonthly::Entry e;
        e.name = spec.name;
        e.instance = spec.instance;
        e.full_day_standby_kwh = spec.p_sat * (86400.0 * spec.standby_w + active_j) * 30.0 / 3.6e6;
        e.one_hour_standby_kwh = spec.p_sat * (3600.0 * spec.standby_w + active_j) * 30.0 / 3.6e6;
        out.full_day_standby_kwh += e.full_day_standby_kwh;
        out.one_hour_standby_kwh += e.one_hour_standby_kwh;
        out.appliances.push_back(std::move(e));
    }
    return out;
}

}  // namespace resload
