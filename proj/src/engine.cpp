#include "resload/engine.hpp"

#include <atomic>
#include <cmath>
#include <condition_variable>
#include <map>
#include <mutex>
#include <random>
#include <stdexcept>
#include <thread>

namespace resload {

namespace detail {

double neumaier_sum(const std::vector<double>& values) {
    double sum = 0.0, comp = 0.0;
    for (double v : values) {
        double t = sum + v;
        if (std::abs(sum) >= std::abs(v))
            comp += (sum - t) + v;
        else
            comp += (v - t) + sum;
        sum = t;
    }
    return sum + comp;
}

int cycle_steps_for(const ApplianceSpec& spec, int step_min, bool* rounded) {
    int steps = (spec.cycle_min + step_min - 1) / step_min;
    if (rounded) *rounded = (spec.cycle_min % step_min != 0);
    return steps;
}

std::vector<double> per_step_start_probabilities(const ApplianceSpec& spec,
                                                 const StartProbabilityTable* table,
                                                 const SimulationConfig& config,
                                                 ClampStats* clamps) {
    const int steps_per_hour = 60 / config.step_min;
    const bool bernoulli = config.ownership_mode == OwnershipMode::BernoulliPresence;
    std::array<double, 24> hourly{};

    if (config.probability_source == ProbabilitySource::FromTable) {
        if (!table)
            throw std::invalid_argument("probability source is the table, but no table given");
        const auto* row = table->find(spec.name, spec.instance);
        if (!row)
            throw std::invalid_argument("table '" + table->archetype + "': missing row for (" +
                                        spec.name + ", " + std::to_string(spec.instance) + ")");
        const double factor =
            compute_p_step(config.step_min) / compute_p_step(table->ref_step_min);
        for (int h = 0; h < 24; ++h) {
            double v = row->p[static_cast<std::size_t>(h)] * factor;
            // tabulated products already contain p_sat; presence sampling wants
            // the saturation-free probability of the owning household
            if (bernoulli) v = spec.p_sat > 0.0 ? v / spec.p_sat : 0.0;
            if (v > 1.0) {
                if (clamps) clamps->count += 1;
                v = 1.0;
            }
            hourly[static_cast<std::size_t>(h)] = v;
        }
    } else {
        const double p_step = compute_p_step(config.step_min);
        for (int h = 0; h < 24; ++h) {
            double v = spec.p_hour[static_cast<std::size_t>(h)] * spec.f_per_day * p_step;
            if (!bernoulli) v *= spec.p_sat;
            if (v > 1.0) {
                if (clamps) clamps->count += 1;
                v = 1.0;
            }
            hourly[static_cast<std::size_t>(h)] = v;
        }
    }

    std::vector<double> p;
    p.reserve(static_cast<std::size_t>(config.steps_per_day()));
    for (int h = 0; h < 24; ++h)
        for (int s = 0; s < steps_per_hour; ++s) p.push_back(hourly[static_cast<std::size_t>(h)]);
    return p;
}

}  // namespace detail

void SimulationConfig::validate() const {
    compute_p_step(step_min);  // throws on a bad step
    if (warmup_days < 0) throw std::invalid_argument("warmup_days must be >= 0");
    if (sim_days < 1) throw std::invalid_argument("sim_days must be >= 1");
    if (households < 1) throw std::invalid_argument("households must be >= 1");
    if (threads < 0) throw std::invalid_argument("threads must be >= 0");
}

double LoadProfile::total_wh() const {
    return detail::neumaier_sum(samples) * step_min / 60.0;
}

StepOutcome step_appliance(ApplianceState state, double p_start, double u, int cycle_steps) {
    if (state.status == ApplianceState::Status::On) {
        state.remaining_steps -= 1;
        if (state.remaining_steps <= 0) {
            state.status = ApplianceState::Status::Off;
            state.remaining_steps = 0;
        }
        return {state, true};
    }
    if (p_start > u) {
        state.status = ApplianceState::Status::On;
        state.remaining_steps = cycle_steps;
    }
    return {state, false};
}

std::uint64_t derive_substream_seed(std::uint64_t base_seed, std::uint64_t household_index) {
    // splitmix64 step applied to base_seed advanced by the index
    std::uint64_t z = base_seed + (household_index + 1) * 0x9E3779B97F4A7C15ULL;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

namespace {

// uniform double in [0,1) from the top 53 bits
inline double canonical(std::mt19937_64& rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

struct CompiledAppliance {
    const ApplianceSpec* spec = nullptr;
    std::vector<double> p_steps;  // one day, cyclic
    int cycle_steps = 1;
    double standby_scaled = 0.0;  // standby for ProbabilityScaling mode
};

struct CompiledArchetype {
    std::vector<CompiledAppliance> appliances;
    long long clamp_count = 0;
    std::vector<std::string> warnings;
};

CompiledArchetype compile(const HouseholdArchetype& archetype, const StartProbabilityTable* table,
                          const SimulationConfig& config) {
    archetype.validate();
    config.validate();
    CompiledArchetype out;
    ClampStats clamps;
    for (const auto& spec : archetype.appliances) {
        CompiledAppliance ca;
        ca.spec = &spec;
        ca.p_steps = detail::per_step_start_probabilities(spec, table, config, &clamps);
        bool rounded = false;
        ca.cycle_steps = detail::cycle_steps_for(spec, config.step_min, &rounded);
        if (rounded)
            out.warnings.push_back(spec.name + " #" + std::to_string(spec.instance) +
                                   ": cycle of " + std::to_string(spec.cycle_min) +
                                   " min rounded up to " +
                                   std::to_string(ca.cycle_steps * config.step_min) + " min");
        ca.standby_scaled = spec.standby_w * spec.p_sat;
        out.appliances.push_back(std::move(ca));
    }
    out.clamp_count = clamps.count;
    return out;
}

struct HouseholdRun {
    std::vector<double> samples;
    std::vector<ApplianceEnergy> ledger;
};

HouseholdRun run_household(const CompiledArchetype& compiled, const SimulationConfig& config,
                           std::uint64_t seed) {
    const int T = config.steps_per_day();
    const bool bernoulli = config.ownership_mode == OwnershipMode::BernoulliPresence;
    const bool standby_continuous = config.standby_mode == StandbyMode::Continuous;
    const std::size_t n = compiled.appliances.size();

    std::mt19937_64 rng(seed);
    std::vector<char> present(n, 1);
    if (bernoulli)
        for (std::size_t a = 0; a < n; ++a)
            present[a] = canonical(rng) < compiled.appliances[a].spec->p_sat ? 1 : 0;

    std::vector<ApplianceState> states(n);
    HouseholdRun out;
    out.samples.reserve(static_cast<std::size_t>(config.sim_days) * T);
    out.ledger.resize(n);
    for (std::size_t a = 0; a < n; ++a) {
        out.ledger[a].name = compiled.appliances[a].spec->name;
        out.ledger[a].instance = compiled.appliances[a].spec->instance;
    }

    const int total_days = config.warmup_days + config.sim_days;
    for (int day = 0; day < total_days; ++day) {
        const bool retained = day >= config.warmup_days;
        for (int t = 0; t < T; ++t) {
            double power = 0.0;
            for (std::size_t a = 0; a < n; ++a) {
                if (!present[a]) continue;
                const auto& ca = compiled.appliances[a];
                const bool was_off = states[a].status == ApplianceState::Status::Off;
                const double u =
                    was_off ? canonical(rng) : 0.0;  // draws only happen for start checks
                auto [next, active] = step_appliance(states[a], ca.p_steps[static_cast<std::size_t>(t)],
                                                     u, ca.cycle_steps);
                if (retained && was_off && next.status == ApplianceState::Status::On)
                    out.ledger[a].starts += 1;
                states[a] = next;
                if (active) {
                    power += ca.spec->nominal_w;
                    if (retained) out.ledger[a].active_steps += 1;
                }
                const double standby = bernoulli ? ca.spec->standby_w : ca.standby_scaled;
                if (standby_continuous || !active) power += standby;
            }
            if (retained) out.samples.push_back(power);
        }
    }

    const double step_h = config.step_min / 60.0;
    for (std::size_t a = 0; a < n; ++a) {
        const auto& ca = compiled.appliances[a];
        auto& entry = out.ledger[a];
        entry.active_wh = static_cast<double>(entry.active_steps) * ca.spec->nominal_w * step_h;
        const double standby = present[a] ? (bernoulli ? ca.spec->standby_w : ca.standby_scaled) : 0.0;
        if (standby_continuous)
            entry.standby_wh = standby * 24.0 * config.sim_days;
        else
            entry.standby_wh =
                standby *
                (static_cast<double>(config.sim_days) * T - static_cast<double>(entry.active_steps)) *
                step_h;
    }
    return out;
}

}  // namespace

double HouseholdResult::total_wh() const {
    double sum = 0.0;
    for (const auto& e : ledger) sum += e.active_wh + e.standby_wh;
    return sum;
}

HouseholdResult simulate_household(const HouseholdArchetype& archetype,
                                   const StartProbabilityTable* table,
                                   const SimulationConfig& config, std::uint64_t seed) {
    CompiledArchetype compiled = compile(archetype, table, config);
    HouseholdRun run = run_household(compiled, config, seed);
    HouseholdResult out;
    out.profile.step_min = config.step_min;
    out.profile.samples = std::move(run.samples);
    out.profile.archetype = archetype.name;
    out.profile.households = 1;
    out.profile.seed = seed;
    out.ledger = std::move(run.ledger);
    out.clamp_count = compiled.clamp_count;
    out.warnings = compiled.warnings;
    return out;
}

FleetResult simulate_fleet(const HouseholdArchetype& archetype,
                           const StartProbabilityTable* table, const SimulationConfig& config) {
    CompiledArchetype compiled = compile(archetype, table, config);
    const int n_households = config.households;
    const std::size_t profile_len =
        static_cast<std::size_t>(config.sim_days) * static_cast<std::size_t>(config.steps_per_day());

    FleetResult out;
    out.clamp_count = compiled.clamp_count;
    out.warnings = compiled.warnings;
    out.mean_profile.step_min = config.step_min;
    out.mean_profile.archetype = archetype.name;
    out.mean_profile.households = n_households;
    out.mean_profile.seed = config.base_seed;
    out.mean_profile.samples.assign(profile_len, 0.0);
    out.stats.household_monthly_kwh.assign(static_cast<std::size_t>(n_households), 0.0);

    auto household_kwh = [&](const HouseholdRun& run) {
        double wh = 0.0;
        for (const auto& e : run.ledger) wh += e.active_wh + e.standby_wh;
        return wh / 1000.0 / config.sim_days * 30.0;
    };

    int hw = config.threads > 0 ? config.threads
                                : static_cast<int>(std::thread::hardware_concurrency());
    const int threads = std::max(1, std::min(hw, n_households));

    if (threads == 1) {
        for (int i = 0; i < n_households; ++i) {
            HouseholdRun run =
                run_household(compiled, config, derive_substream_seed(config.base_seed,
                                                                      static_cast<std::uint64_t>(i)));
            for (std::size_t k = 0; k < profile_len; ++k)
                out.mean_profile.samples[k] += run.samples[k];
            out.stats.household_monthly_kwh[static_cast<std::size_t>(i)] = household_kwh(run);
        }
    } else {
        // Profiles are merged strictly in household order; workers park finished
        // households in a bounded window so the sum never depends on scheduling.
        std::mutex mu;
        std::condition_variable cv_done, cv_space;
        std::map<int, HouseholdRun> ready;
        std::atomic<int> next_claim{0};
        int next_merge = 0;
        const int window = 2 * threads + 2;

        auto worker = [&] {
            for (;;) {
                const int i = next_claim.fetch_add(1);
                if (i >= n_households) return;
                HouseholdRun run = run_household(
                    compiled, config,
                    derive_substream_seed(config.base_seed, static_cast<std::uint64_t>(i)));
                std::unique_lock<std::mutex> lk(mu);
                cv_space.wait(lk, [&] { return i < next_merge + window; });
                ready.emplace(i, std::move(run));
                cv_done.notify_all();
            }
        };

        std::vector<std::thread> pool;
        pool.reserve(static_cast<std::size_t>(threads));
        for (int w = 0; w < threads; ++w) pool.emplace_back(worker);

        std::unique_lock<std::mutex> lk(mu);
        while (next_merge < n_households) {
            cv_done.wait(lk, [&] { return ready.count(next_merge) != 0; });
            HouseholdRun run = std::move(ready.at(next_merge));
            ready.erase(next_merge);
            const int i = next_merge;
            lk.unlock();
            for (std::size_t k = 0; k < profile_len; ++k)
                out.mean_profile.samples[k] += run.samples[k];
            out.stats.household_monthly_kwh[static_cast<std::size_t>(i)] = household_kwh(run);
            lk.lock();
            next_merge += 1;
            cv_space.notify_all();
        }
        lk.unlock();
        for (auto& th : pool) th.join();
    }

    for (auto& v : out.mean_profile.samples) v /= n_households;

    const auto& kwh = out.stats.household_monthly_kwh;
    const double mean = detail::neumaier_sum(kwh) / n_households;
    out.stats.mean_monthly_kwh = mean;
    if (n_households > 1) {
        double ss = 0.0;
        for (double v : kwh) ss += (v - mean) * (v - mean);
        out.stats.sd_monthly_kwh = std::sqrt(ss / (n_households - 1));
        out.stats.se_monthly_kwh = out.stats.sd_monthly_kwh / std::sqrt(n_households);
    }
    return out;
}

}  // namespace resload
