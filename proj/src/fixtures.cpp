#include "resload/fixtures.hpp"

#include <stdexcept>

#include "resload/io.hpp"

namespace resload {

namespace {

struct NamedFixture {
    const char* archetype;
    const char* appliance_file;
    const char* appliance_text;
    const char* pstart_file;
    const char* pstart_text;
};

const NamedFixture kFixtures[] = {
    {"r12", "appliances_r12.csv", fixture_text::appliances_r12, "pstart_r12.csv",
     fixture_text::pstart_r12},
    {"r3", "appliances_r3.csv", fixture_text::appliances_r3, "pstart_r3.csv",
     fixture_text::pstart_r3},
    {"r4", "appliances_r4.csv", fixture_text::appliances_r4, "pstart_r4.csv",
     fixture_text::pstart_r4},
    {"r5", "appliances_r5.csv", fixture_text::appliances_r5, "pstart_r5.csv",
     fixture_text::pstart_r5},
};

}  // namespace

FixtureLibrary::FixtureLibrary() {
    for (const auto& f : kFixtures) {
        HouseholdArchetype arch = parse_appliance_table(f.appliance_text);
        StartProbabilityTable table = parse_pstart_table(f.pstart_text);
        table.validate_against(arch);
        // hourly profiles are recovered from the tabulated products
        for (auto& spec : arch.appliances) {
            const auto* row = table.find(spec.name, spec.instance);
            if (spec.f_per_day > 0.0 && spec.p_sat > 0.0) {
                auto rec = reconstruct_p_hour(row->p, spec.f_per_day, spec.p_sat,
                                              table.ref_step_min);
                spec.p_hour = rec.p_hour;
                spec.p_hour_normalized = false;
            }
        }
        archetypes_.emplace(f.archetype, std::move(arch));
        tables_.emplace(f.archetype, std::move(table));
    }
    benchmarks_ = parse_benchmarks_csv(fixture_text::benchmarks);
}

const FixtureLibrary& FixtureLibrary::instance() {
    static const FixtureLibrary lib;
    return lib;
}

const HouseholdArchetype& FixtureLibrary::archetype(const std::string& name) const {
    auto it = archetypes_.find(name);
    if (it == archetypes_.end())
        throw std::invalid_argument("unknown archetype '" + name + "' (one of: r12, r3, r4, r5)");
    return it->second;
}

const StartProbabilityTable& FixtureLibrary::table(const std::string& name) const {
    auto it = tables_.find(name);
    if (it == tables_.end())
        throw std::invalid_argument("unknown archetype '" + name + "' (one of: r12, r3, r4, r5)");
    return it->second;
}

std::vector<std::string> FixtureLibrary::archetype_names() const {
    std::vector<std::string> names;
    for (const auto& [k, v] : archetypes_) names.push_back(k);
    return names;
}

std::vector<std::pair<std::string, std::string>> FixtureLibrary::files() {
    std::vector<std::pair<std::string, std::string>> out;
    for (const auto& f : kFixtures) {
        out.emplace_back(f.appliance_file, f.appliance_text);
        out.emplace_back(f.pstart_file, f.pstart_text);
    }
    out.emplace_back("benchmarks.csv", fixture_text::benchmarks);
    return out;
}

std::uint64_t FixtureLibrary::digest() {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    auto mix = [&h](std::string_view data) {
        for (unsigned char c : data) {
            h ^= c;
            h *= 0x100000001b3ULL;
        }
    };
    const char* names[] = {"appliances_r12.csv", "appliances_r3.csv", "appliances_r4.csv",
                           "appliances_r5.csv",  "pstart_r12.csv",    "pstart_r3.csv",
                           "pstart_r4.csv",      "pstart_r5.csv",     "benchmarks.csv"};
    const char* texts[] = {fixture_text::appliances_r12, fixture_text::appliances_r3,
                           fixture_text::appliances_r4,  fixture_text::appliances_r5,
                           fixture_text::pstart_r12,     fixture_text::pstart_r3,
                           fixture_text::pstart_r4,      fixture_text::pstart_r5,
                           fixture_text::benchmarks};
    for (std::size_t i = 0; i < 9; ++i) {
        mix(names[i]);
        mix("\n");
        mix(texts[i]);
    }
    return h;
}

}  // namespace resload
