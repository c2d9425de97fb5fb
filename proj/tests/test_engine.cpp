#include <doctest.h>

#include <stdexcept>

#include <cmath>
#include <random>
#include <set>

#include "resload/engine.hpp"
#include "resload/fixtures.hpp"

using namespace resload;

namespace {

ApplianceSpec make_spec(const std::string& name, double w, double standby, double f, int cycle,
                        double sat = 1.0) {
    ApplianceSpec s;
    s.name = name;
    s.nominal_w = w;
    s.standby_w = standby;
    s.f_per_day = f;
    s.cycle_min = cycle;
    s.p_sat = sat;
    s.p_hour.fill(1.0 / 24.0);
    s.p_hour_normalized = true;
    return s;
}

SimulationConfig params_config(int days, std::uint64_t seed) {
    SimulationConfig cfg;
    cfg.sim_days = days;
    cfg.base_seed = seed;
    cfg.probability_source = ProbabilitySource::FromParameters;
    return cfg;
}

}  // namespace

TEST_CASE("step_appliance state machine") {
    const int L = 4;
    SUBCASE("zero probability never starts") {
        auto out = step_appliance({}, 0.0, 0.0, L);
        CHECK(out.state.status == ApplianceState::Status::Off);
        CHECK_FALSE(out.active);
    }
    SUBCASE("a start schedules the full cycle beginning next step") {
        auto out = step_appliance({}, 1.0, 0.5, L);
        CHECK(out.state.status == ApplianceState::Status::On);
        CHECK(out.state.remaining_steps == L);
        CHECK_FALSE(out.active);  // power begins flowing on the following step
    }
    SUBCASE("a running appliance draws power and counts down") {
        ApplianceState st{ApplianceState::Status::On, 2};
        auto out = step_appliance(st, 1.0, 0.0, L);
        CHECK(out.active);
        CHECK(out.state.remaining_steps == 1);
        CHECK(out.state.status == ApplianceState::Status::On);
    }
    SUBCASE("the last cycle step powers, ends the cycle, and frees the next step") {
        ApplianceState st{ApplianceState::Status::On, 1};
        auto out = step_appliance(st, 1.0, 0.0, L);
        CHECK(out.active);
        CHECK(out.state.status == ApplianceState::Status::Off);
        // now eligible again
        auto restart = step_appliance(out.state, 1.0, 0.5, L);
        CHECK(restart.state.status == ApplianceState::Status::On);
    }
    SUBCASE("exactly cycle_steps powered steps per start") {
        ApplianceState st;
        int powered = 0;
        auto first = step_appliance(st, 1.0, 0.5, L);
        st = first.state;
        for (int i = 0; i < 10; ++i) {
            auto out = step_appliance(st, 0.0, 0.0, L);
            st = out.state;
            if (out.active) ++powered;
        }
        CHECK(powered == L);
    }
}

TEST_CASE("derive_substream_seed is deterministic and injective over a fleet") {
    CHECK(derive_substream_seed(42, 7) == derive_substream_seed(42, 7));
    CHECK(derive_substream_seed(42, 0) != derive_substream_seed(42, 1));
    std::set<std::uint64_t> seen;
    for (std::uint64_t i = 0; i < 10000; ++i) seen.insert(derive_substream_seed(123456789, i));
    CHECK(seen.size() == 10000);
}

TEST_CASE("a never-starting appliance leaves only the standby floor") {
    HouseholdArchetype arch;
    arch.name = "standby-only";
    auto s = make_spec("idle", 1000.0, 8.1, 0.0, 30);
    arch.appliances.push_back(s);
    auto res = simulate_household(arch, nullptr, params_config(2, 9), 9);
    REQUIRE(res.profile.samples.size() == 2u * 288u);
    for (double v : res.profile.samples) CHECK(v == 8.1);
}

TEST_CASE("active fraction of a one-step cycle approaches p/(1+p)") {
    const double p = 0.2;
    HouseholdArchetype arch;
    arch.name = "chain";
    auto s = make_spec("unit", 100.0, 0.0, p * 288.0, 5);  // constant p per 5-min step
    arch.appliances.push_back(s);
    SimulationConfig cfg = params_config(400, 77);  // 400*288 > 1e5 steps
    auto res = simulate_household(arch, nullptr, cfg, 77);
    const long long steps = 400LL * 288LL;
    const double frac =
        static_cast<double>(res.ledger[0].active_steps) / static_cast<double>(steps);
    const double expect = p / (1.0 + p);
    // renewal-process variance of the time-average: p(1-p)/(1+p)^3 per step
    const double se =
        std::sqrt(p * (1.0 - p) / std::pow(1.0 + p, 3) / static_cast<double>(steps));
    CHECK(std::abs(frac - expect) < 4.0 * se);
}

TEST_CASE("empirical starts stay below the unblocked rate") {
    std::mt19937_64 rng(31);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 5; ++trial) {
        const double f = 5.0 + unit(rng) * 30.0;
        const double sat = 0.5 + 0.5 * unit(rng);
        HouseholdArchetype arch;
        arch.name = "block";
        arch.appliances.push_back(make_spec("a", 50.0, 0.0, f, 15, sat));
        SimulationConfig cfg = params_config(200, 1000 + trial);
        auto res = simulate_household(arch, nullptr, cfg, 1000 + trial);
        const double starts_per_day = res.ledger[0].starts / 200.0;
        const double se = std::sqrt(f * sat / 200.0);
        CHECK(starts_per_day <= f * sat + 3.0 * se);
    }
}

TEST_CASE("profile energy equals the appliance ledger") {
    std::mt19937_64 rng(555);
    std::uniform_real_distribution<double> unit(0.0, 1.0);
    for (int trial = 0; trial < 20; ++trial) {
        HouseholdArchetype arch;
        arch.name = "ledger";
        const int n = 1 + static_cast<int>(rng() % 6);
        for (int a = 0; a < n; ++a)
            arch.appliances.push_back(make_spec("a" + std::to_string(a), unit(rng) * 2000.0,
                                                unit(rng) * 10.0, unit(rng) * 20.0,
                                                1 + static_cast<int>(rng() % 120),
                                                unit(rng)));
        SimulationConfig cfg = params_config(3, 2000 + trial);
        cfg.step_min = 5;
        cfg.standby_mode = (rng() % 2) ? StandbyMode::Continuous : StandbyMode::OffTimeOnly;
        cfg.ownership_mode =
            (rng() % 2) ? OwnershipMode::ProbabilityScaling : OwnershipMode::BernoulliPresence;
        auto res = simulate_household(arch, nullptr, cfg, 2000 + trial);
        const double profile_wh = res.profile.total_wh();
        const double ledger_wh = res.total_wh();
        CHECK(std::abs(profile_wh - ledger_wh) <= 1e-9 * std::max(1.0, std::abs(ledger_wh)));
    }
}

TEST_CASE("warm-up days are simulated but not returned") {
    HouseholdArchetype arch;
    arch.name = "warm";
    arch.appliances.push_back(make_spec("a", 100.0, 1.0, 5.0, 30));
    SimulationConfig cfg = params_config(3, 1);
    cfg.warmup_days = 2;
    auto res = simulate_household(arch, nullptr, cfg, 1);
    CHECK(res.profile.samples.size() == 3u * 288u);
}

TEST_CASE("cycles that do not fit the step are rounded up with a warning") {
    HouseholdArchetype arch;
    arch.name = "round";
    arch.appliances.push_back(make_spec("fridge-like", 110.0, 8.1, 40.5, 12));
    SimulationConfig cfg = params_config(1, 3);
    auto res = simulate_household(arch, nullptr, cfg, 3);
    REQUIRE(res.warnings.size() == 1);
    CHECK(res.warnings[0].find("15 min") != std::string::npos);
}

TEST_CASE("table mode requires a row for every appliance") {
    const auto& lib = FixtureLibrary::instance();
    HouseholdArchetype arch = lib.archetype("r12");
    arch.appliances.push_back(make_spec("not-in-table", 1.0, 0.0, 1.0, 5));
    SimulationConfig cfg;
    cfg.sim_days = 1;
    CHECK_THROWS_AS(simulate_household(arch, &lib.table("r12"), cfg, 1), std::invalid_argument);
}

TEST_CASE("continuous standby is a lower bound on every sample") {
    const auto& lib = FixtureLibrary::instance();
    SimulationConfig cfg;
    cfg.sim_days = 2;
    cfg.base_seed = 11;
    auto res = simulate_household(lib.archetype("r12"), &lib.table("r12"), cfg, 11);
    double floor_w = 0.0;
    for (const auto& a : lib.archetype("r12").appliances) floor_w += a.standby_w * a.p_sat;
    for (double v : res.profile.samples) CHECK(v >= floor_w - 1e-12);
}

TEST_CASE("identical configurations reproduce bit-identical fleets") {
    const auto& lib = FixtureLibrary::instance();
    SimulationConfig cfg;
    cfg.sim_days = 3;
    cfg.households = 8;
    cfg.base_seed = 20240101;
    auto a = simulate_fleet(lib.archetype("r3"), &lib.table("r3"), cfg);
    auto b = simulate_fleet(lib.archetype("r3"), &lib.table("r3"), cfg);
    CHECK(a.mean_profile.samples == b.mean_profile.samples);
    CHECK(a.stats.household_monthly_kwh == b.stats.household_monthly_kwh);
}

TEST_CASE("thread count cannot change fleet output") {
    const auto& lib = FixtureLibrary::instance();
    SimulationConfig cfg;
    cfg.sim_days = 2;
    cfg.households = 12;
    cfg.base_seed = 7;
    cfg.threads = 1;
    auto one = simulate_fleet(lib.archetype("r12"), &lib.table("r12"), cfg);
    cfg.threads = 4;
    auto four = simulate_fleet(lib.archetype("r12"), &lib.table("r12"), cfg);
    CHECK(one.mean_profile.samples == four.mean_profile.samples);
    CHECK(one.stats.household_monthly_kwh == four.stats.household_monthly_kwh);
}

TEST_CASE("a one-household fleet equals that household") {
    const auto& lib = FixtureLibrary::instance();
    SimulationConfig cfg;
    cfg.sim_days = 2;
    cfg.households = 1;
    cfg.base_seed = 99;
    auto fleet = simulate_fleet(lib.archetype("r12"), &lib.table("r12"), cfg);
    auto single =
        simulate_household(lib.archetype("r12"), &lib.table("r12"), cfg,
                           derive_substream_seed(cfg.base_seed, 0));
    CHECK(fleet.mean_profile.samples == single.profile.samples);
    CHECK(fleet.stats.sd_monthly_kwh == 0.0);
}
