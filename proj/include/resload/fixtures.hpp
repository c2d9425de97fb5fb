#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "resload/analytics.hpp"
#include "resload/appliance.hpp"

namespace resload {

/// Embedded copies of the shipped data files (identical bytes to data/*.csv).
namespace fixture_text {
extern const char* const appliances_r12;
extern const char* const appliances_r3;
extern const char* const appliances_r4;
extern const char* const appliances_r5;
extern const char* const pstart_r12;
extern const char* const pstart_r3;
extern const char* const pstart_r4;
extern const char* const pstart_r5;
extern const char* const benchmarks;
}  // namespace fixture_text

/// The four built-in archetypes (r12, r3, r4, r5), their starting-probability
/// tables and the benchmark values, parsed from the embedded CSV text.
/// Hourly activity profiles of each appliance are reconstructed from the tables.
class FixtureLibrary {
public:
    static const FixtureLibrary& instance();

    const HouseholdArchetype& archetype(const std::string& name) const;
    const StartProbabilityTable& table(const std::string& name) const;
    const BenchmarkSet& benchmarks() const { return benchmarks_; }
    std::vector<std::string> archetype_names() const;

    /// (file name, content) pairs for `fixtures --dump`.
    static std::vector<std::pair<std::string, std::string>> files();

    /// FNV-1a 64 digest over the named fixture files, for the audit test.
    static std::uint64_t digest();

private:
    FixtureLibrary();
    std::map<std::string, HouseholdArchetype> archetypes_;
    std::map<std::string, StartProbabilityTable> tables_;
    BenchmarkSet benchmarks_;
};

}  // namespace resload
