#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "resload/analytics.hpp"
#include "resload/io.hpp"

using namespace resload;

namespace {

const char* kApplHeader = "archetype,appliance,instance,p_sat,nominal_w,standby_w,f_per_day,cycle_min\n";

std::string appl_file(const std::string& rows) { return std::string(kApplHeader) + rows; }

}  // namespace

TEST_CASE("appliance rows parse into specs") {
    auto arch = parse_appliance_table(appl_file("r12,Refrigerator,1,1,110,8.1,40.5,12\n"));
    CHECK(arch.name == "r12");
    REQUIRE(arch.appliances.size() == 1);
    const auto& s = arch.appliances[0];
    CHECK(s.name == "Refrigerator");
    CHECK(s.p_sat == 1.0);
    CHECK(s.nominal_w == 110.0);
    CHECK(s.standby_w == 8.1);
    CHECK(s.f_per_day == 40.5);
    CHECK(s.cycle_min == 12);
}

TEST_CASE("NA standby maps to zero watts") {
    for (const char* na : {"NA", "na", "Na"}) {
        auto arch = parse_appliance_table(
            appl_file("r12,Microwave oven,1,0.93,1500," + std::string(na) + ",3,5\n"));
        CHECK(arch.appliances[0].standby_w == 0.0);
    }
}

TEST_CASE("comment lines are ignored") {
    auto arch = parse_appliance_table("# provenance note\n" +
                                      appl_file("# another\nr12,TV,1,1,105,4,1.2,90\n"));
    CHECK(arch.appliances.size() == 1);
}

TEST_CASE("malformed appliance input is rejected with row and column") {
    SUBCASE("saturation outside [0,1]") {
        CHECK_THROWS_WITH_AS(parse_appliance_table(appl_file("r12,TV,1,1.5,105,4,1.2,90\n")),
                             doctest::Contains("p_sat"), std::invalid_argument);
    }
    SUBCASE("empty file after the header") {
        CHECK_THROWS_AS(parse_appliance_table(kApplHeader), std::invalid_argument);
    }
    SUBCASE("wrong header") {
        CHECK_THROWS_AS(parse_appliance_table("a,b,c\nr12,TV,1,1,105,4,1.2,90\n"),
                        std::invalid_argument);
    }
    SUBCASE("missing column") {
        CHECK_THROWS_WITH_AS(parse_appliance_table(appl_file("r12,TV,1,1,105,4,1.2\n")),
                             doctest::Contains("8 columns"), std::invalid_argument);
    }
    SUBCASE("non-numeric field names the column") {
        CHECK_THROWS_WITH_AS(parse_appliance_table(appl_file("r12,TV,1,1,105,4,often,90\n")),
                             doctest::Contains("f_per_day"), std::invalid_argument);
    }
    SUBCASE("duplicate appliance instance") {
        CHECK_THROWS_WITH_AS(parse_appliance_table(appl_file(
                                 "r12,TV,1,1,105,4,1.2,90\nr12,TV,1,1,105,4,1.2,90\n")),
                             doctest::Contains("duplicate"), std::invalid_argument);
    }
    SUBCASE("mixed archetypes in one file") {
        CHECK_THROWS_WITH_AS(parse_appliance_table(appl_file(
                                 "r12,TV,1,1,105,4,1.2,90\nr3,TV,2,1,105,4,1.2,90\n")),
                             doctest::Contains("mixed"), std::invalid_argument);
    }
}

TEST_CASE("starting-probability rows parse with scientific notation") {
    std::string header = "archetype,appliance,instance,ref_step_min";
    for (int i = 1; i <= 24; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), ",h%02d", i);
        header += buf;
    }
    std::string row = "r12,Coffee Maker,1,5,2.78E-05";
    for (int i = 1; i < 24; ++i) row += ",0.000129";
    auto table = parse_pstart_table(header + "\n" + row + "\n");
    CHECK(table.archetype == "r12");
    CHECK(table.ref_step_min == 5);
    REQUIRE(table.rows.size() == 1);
    CHECK(table.rows[0].p[0] == doctest::Approx(0.0000278).epsilon(1e-12));

    SUBCASE("entries above one are rejected") {
        std::string bad = "r12,Coffee Maker,2,5,1.2";
        for (int i = 1; i < 24; ++i) bad += ",0";
        CHECK_THROWS_WITH_AS(parse_pstart_table(header + "\n" + bad + "\n"),
                             doctest::Contains("[0,1]"), std::invalid_argument);
    }
    SUBCASE("wrong column count is rejected") {
        CHECK_THROWS_WITH_AS(parse_pstart_table(header + "\n" + row + ",0.1\n"),
                             doctest::Contains("28 columns"), std::invalid_argument);
    }
}

TEST_CASE("profile serialization matches the documented format") {
    LoadProfile p;
    p.step_min = 5;
    p.samples = {100.0, 200.0};
    CHECK(write_profile_csv(p) == "t_min,power_w\n0,100.000\n5,200.000\n");

    LoadProfile empty;
    CHECK(write_profile_csv(empty) == "t_min,power_w\n");
}

TEST_CASE("profile write-read round-trip holds at six significant digits") {
    std::mt19937_64 rng(77);
    std::uniform_real_distribution<double> watts(0.0, 5000.0);
    LoadProfile p;
    p.step_min = 15;
    for (int i = 0; i < 200; ++i) p.samples.push_back(watts(rng));
    auto back = read_profile_csv(write_profile_csv(p));
    CHECK(back.step_min == 15);
    REQUIRE(back.samples.size() == p.samples.size());
    for (std::size_t i = 0; i < p.samples.size(); ++i) {
        const double rel = std::abs(back.samples[i] - p.samples[i]) /
                           std::max(1e-300, std::abs(p.samples[i]));
        CHECK(rel < 1e-5);  // six significant digits
    }
}

TEST_CASE("interval series ingestion") {
    std::string csv = "interval_start_min,energy_kwh\n";
    for (int i = 0; i < 48; ++i) csv += std::to_string(i * 30) + ",0.5\n";
    auto series = read_interval_csv(csv);
    CHECK(series.bin_min == 30);
    CHECK(series.energy_kwh.size() == 48);

    SUBCASE("a constant half-kWh half-hour day is 720 kWh a month") {
        LoadProfile as_power;
        as_power.step_min = series.bin_min;
        for (double kwh : series.energy_kwh)
            as_power.samples.push_back(kwh * 1000.0 * 60.0 / series.bin_min);
        CHECK(monthly_from_profile(as_power) == doctest::Approx(720.0).epsilon(1e-12));
    }
    SUBCASE("mixed spacing is rejected") {
        CHECK_THROWS_WITH_AS(
            read_interval_csv("interval_start_min,energy_kwh\n0,0.5\n30,0.5\n90,0.5\n"),
            doctest::Contains("spacing"), std::invalid_argument);
    }
    SUBCASE("negative energy is rejected") {
        CHECK_THROWS_WITH_AS(read_interval_csv("interval_start_min,energy_kwh\n0,0.5\n30,-0.1\n"),
                             doctest::Contains("negative"), std::invalid_argument);
    }
}
