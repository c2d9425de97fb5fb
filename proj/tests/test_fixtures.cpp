#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <stdexcept>

#include "resload/fixtures.hpp"
#include "resload/io.hpp"
#include "resload/oracle.hpp"

using namespace resload;

TEST_CASE("fixture digest matches the frozen transcription") {
    CHECK(FixtureLibrary::digest() == 0x41f5b741856e58a6ULL);
}

TEST_CASE("the library ships four archetypes with matching tables") {
    const auto& lib = FixtureLibrary::instance();
    CHECK(lib.archetype_names() == std::vector<std::string>{"r12", "r3", "r4", "r5"});
    CHECK(lib.archetype("r12").appliances.size() == 15);
    CHECK(lib.archetype("r3").appliances.size() == 19);
    CHECK(lib.archetype("r4").appliances.size() == 19);
    CHECK(lib.archetype("r5").appliances.size() == 19);
    for (const auto& name : lib.archetype_names())
        lib.table(name).validate_against(lib.archetype(name));
    CHECK_THROWS_AS(lib.archetype("r9"), std::invalid_argument);
}

TEST_CASE("spot checks against the published table cells") {
    const auto& lib = FixtureLibrary::instance();

    const auto* fridge = lib.table("r12").find("Refrigerator", 1);
    REQUIRE(fridge != nullptr);
    int regular = 0;
    for (int h = 0; h < 24; ++h)
        if (fridge->p[static_cast<std::size_t>(h)] == 0.140738) ++regular;
    CHECK(regular == 23);
    CHECK(fridge->p[3] == 0.003475);  // the hour-4 dip is carried verbatim

    const auto* coffee = lib.table("r12").find("Coffee Maker", 1);
    CHECK(coffee->p[0] == doctest::Approx(2.78e-5).epsilon(1e-12));

    const auto* lighting5 = lib.table("r5").find("Lighting", 6);
    REQUIRE(lighting5 != nullptr);
    CHECK(lighting5->p[20] == 0.1296);  // evening peak hour

    const auto& r12 = lib.archetype("r12");
    const auto* mw = r12.find("Microwave oven", 1);
    REQUIRE(mw != nullptr);
    CHECK(mw->p_sat == 0.93);
    CHECK(mw->nominal_w == 1500.0);
    CHECK(mw->f_per_day == 3.0);
    CHECK(mw->cycle_min == 5);

    // lighting comes in three instances for the small flat, six for the large
    CHECK(r12.find("Lighting", 3) != nullptr);
    CHECK(r12.find("Lighting", 4) == nullptr);
    CHECK(lib.archetype("r5").find("Lighting", 6) != nullptr);
    CHECK(r12.find("2nd Refrigerator", 1) == nullptr);
    CHECK(lib.archetype("r4").find("2nd Refrigerator", 1) != nullptr);
}

TEST_CASE("benchmarks carry the published reference values") {
    const auto& e = FixtureLibrary::instance().benchmarks().entries;
    CHECK(e.at("r12").ema_kwh == 153.8);
    CHECK(e.at("r12").paper_sim_kwh == 148.4);
    CHECK(e.at("r3").ema_kwh == 278.2);
    CHECK(e.at("r3").paper_sim_kwh == 284.2);
    CHECK(e.at("r4").ema_kwh == 379.6);
    CHECK(e.at("r4").paper_sim_kwh == 347.7);
    CHECK(e.at("r5").ema_kwh == 465.0);
    CHECK(e.at("r5").paper_sim_kwh == 447.8);
}

TEST_CASE("re-ingesting a fixture dump is the identity") {
    const auto& lib = FixtureLibrary::instance();
    for (const auto& [name, content] : FixtureLibrary::files()) {
        if (name.rfind("appliances_", 0) == 0) {
            auto arch = parse_appliance_table(content);
            const auto& shipped = lib.archetype(arch.name);
            REQUIRE(arch.appliances.size() == shipped.appliances.size());
            for (std::size_t i = 0; i < arch.appliances.size(); ++i) {
                CHECK(arch.appliances[i].name == shipped.appliances[i].name);
                CHECK(arch.appliances[i].p_sat == shipped.appliances[i].p_sat);
                CHECK(arch.appliances[i].f_per_day == shipped.appliances[i].f_per_day);
            }
        } else if (name.rfind("pstart_", 0) == 0) {
            auto table = parse_pstart_table(content);
            const auto& shipped = lib.table(table.archetype);
            REQUIRE(table.rows.size() == shipped.rows.size());
            for (std::size_t i = 0; i < table.rows.size(); ++i)
                CHECK(table.rows[i].p == shipped.rows[i].p);
        }
    }
}

TEST_CASE("repository data files are byte-identical to the embedded fixtures") {
    const char* dir = std::getenv("RESLOAD_DATA_DIR");
    if (!dir) return;  // only checked when the build points at the source tree
    for (const auto& [name, content] : FixtureLibrary::files()) {
        std::ifstream file(std::string(dir) + "/" + name, std::ios::binary);
        REQUIRE_MESSAGE(file.good(), name);
        std::ostringstream ss;
        ss << file.rdbuf();
        CHECK_MESSAGE(ss.str() == content, name);
    }
}

TEST_CASE("hourly profiles recovered from the tables are plausible") {
    const auto& lib = FixtureLibrary::instance();
    for (const auto& name : lib.archetype_names()) {
        for (const auto& spec : lib.archetype(name).appliances) {
            double sum = 0.0;
            for (double v : spec.p_hour) sum += v;
            // the tabulated products keep the daily frequency within a few percent
            CHECK(sum > 0.9);
            CHECK(sum < 1.1);
        }
    }
}

TEST_CASE("exact expected monthly energy of the shipped archetypes") {
    const auto& lib = FixtureLibrary::instance();
    SimulationConfig cfg;  // 5-minute step, table mode, scaling, continuous standby
    const struct {
        const char* name;
        double kwh;
    } expected[] = {
        {"r12", 147.142577}, {"r3", 284.200481}, {"r4", 341.000641}, {"r5", 397.588459}};
    for (const auto& e : expected) {
        auto dp = expected_daily_energy_exact(lib.archetype(e.name), &lib.table(e.name), cfg);
        CHECK(dp.total_monthly_kwh() == doctest::Approx(e.kwh).epsilon(1e-6));
    }
}
