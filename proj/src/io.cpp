#include "resload/io.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <cstdio>
#include <stdexcept>
#include <vector>

namespace resload {

namespace {

[[noreturn]] void fail(const std::string& msg) { throw std::invalid_argument(msg); }

std::vector<std::string_view> split_lines(std::string_view text) {
    std::vector<std::string_view> lines;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t nl = text.find('\n', pos);
        if (nl == std::string_view::npos) nl = text.size();
        std::string_view line = text.substr(pos, nl - pos);
        if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
        lines.push_back(line);
        pos = nl + 1;
    }
    // trailing blank lines are not rows
    while (!lines.empty() && lines.back().empty()) lines.pop_back();
    return lines;
}

std::vector<std::string_view> split_fields(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t pos = 0;
    for (;;) {
        std::size_t c = line.find(',', pos);
        if (c == std::string_view::npos) {
            out.push_back(line.substr(pos));
            return out;
        }
        out.push_back(line.substr(pos, c - pos));
        pos = c + 1;
    }
}

bool is_comment(std::string_view line) { return !line.empty() && line.front() == '#'; }

double parse_double(std::string_view field, int row, const std::string& column) {
    double v = 0.0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v, std::chars_format::general);
    if (ec != std::errc{} || ptr != last)
        fail("row " + std::to_string(row) + ", column " + column + ": not a number: '" +
             std::string(field) + "'");
    return v;
}

long parse_int(std::string_view field, int row, const std::string& column) {
    long v = 0;
    const char* first = field.data();
    const char* last = field.data() + field.size();
    auto [ptr, ec] = std::from_chars(first, last, v);
    if (ec != std::errc{} || ptr != last)
        fail("row " + std::to_string(row) + ", column " + column + ": not an integer: '" +
             std::string(field) + "'");
    return v;
}

bool iequals(std::string_view a, std::string_view b) {
    if (a.size() != b.size()) return false;
    for (std::size_t i = 0; i < a.size(); ++i)
        if (std::tolower(static_cast<unsigned char>(a[i])) !=
            std::tolower(static_cast<unsigned char>(b[i])))
            return false;
    return true;
}

// rows of a CSV body: (1-based data row number, fields); header checked verbatim
std::vector<std::pair<int, std::vector<std::string_view>>> csv_rows(std::string_view text,
                                                                    std::string_view header) {
    std::vector<std::pair<int, std::vector<std::string_view>>> rows;
    bool header_seen = false;
    int data_row = 0;
    for (std::string_view line : split_lines(text)) {
        if (is_comment(line)) continue;
        if (!header_seen) {
            if (line != header)
                fail("expected header '" + std::string(header) + "', got '" + std::string(line) +
                     "'");
            header_seen = true;
            continue;
        }
        if (line.empty()) continue;
        rows.emplace_back(++data_row, split_fields(line));
    }
    if (!header_seen) fail("missing header row");
    return rows;
}

constexpr std::string_view kApplianceHeader =
    "archetype,appliance,instance,p_sat,nominal_w,standby_w,f_per_day,cycle_min";

std::string pstart_header() {
    std::string h = "archetype,appliance,instance,ref_step_min";
    for (int i = 1; i <= 24; ++i) {
        char buf[8];
        std::snprintf(buf, sizeof(buf), ",h%02d", i);
        h += buf;
    }
    return h;
}

}  // namespace

HouseholdArchetype parse_appliance_table(std::string_view text) {
    HouseholdArchetype arch;
    for (auto& [row, fields] : csv_rows(text, kApplianceHeader)) {
        if (fields.size() != 8)
            fail("row " + std::to_string(row) + ": expected 8 columns, got " +
                 std::to_string(fields.size()));
        if (arch.name.empty())
            arch.name = std::string(fields[0]);
        else if (arch.name != fields[0])
            fail("row " + std::to_string(row) +
                 ", column archetype: mixed archetypes in one file ('" + arch.name + "' vs '" +
                 std::string(fields[0]) + "')");
        ApplianceSpec spec;
        spec.name = std::string(fields[1]);
        spec.instance = static_cast<int>(parse_int(fields[2], row, "instance"));
        spec.p_sat = parse_double(fields[3], row, "p_sat");
        if (spec.p_sat < 0.0 || spec.p_sat > 1.0)
            fail("row " + std::to_string(row) + ", column p_sat: value outside [0,1]");
        spec.nominal_w = parse_double(fields[4], row, "nominal_w");
        spec.standby_w = iequals(fields[5], "NA") ? 0.0 : parse_double(fields[5], row, "standby_w");
        spec.f_per_day = parse_double(fields[6], row, "f_per_day");
        spec.cycle_min = static_cast<int>(parse_int(fields[7], row, "cycle_min"));
        // hourly profile is not part of the schema; a uniform day is the default
        spec.p_hour.fill(1.0 / 24.0);
        spec.p_hour_normalized = true;
        if (arch.find(spec.name, spec.instance))
            fail("row " + std::to_string(row) + ": duplicate appliance (" + spec.name + ", " +
                 std::to_string(spec.instance) + ")");
        spec.validate();
        arch.appliances.push_back(std::move(spec));
    }
    arch.validate();  // rejects the empty file
    return arch;
}

StartProbabilityTable parse_pstart_table(std::string_view text) {
    const std::string header = pstart_header();
    StartProbabilityTable table;
    bool ref_set = false;
    for (auto& [row, fields] : csv_rows(text, header)) {
        if (fields.size() != 28)
            fail("row " + std::to_string(row) + ": expected 28 columns, got " +
                 std::to_string(fields.size()));
        if (table.archetype.empty())
            table.archetype = std::string(fields[0]);
        else if (table.archetype != fields[0])
            fail("row " + std::to_string(row) + ", column archetype: mixed archetypes in one file");
        StartProbabilityTable::Row r;
        r.appliance = std::string(fields[1]);
        r.instance = static_cast<int>(parse_int(fields[2], row, "instance"));
        const int ref = static_cast<int>(parse_int(fields[3], row, "ref_step_min"));
        if (ref < 1) fail("row " + std::to_string(row) + ", column ref_step_min: must be >= 1");
        if (!ref_set) {
            table.ref_step_min = ref;
            ref_set = true;
        } else if (table.ref_step_min != ref) {
            fail("row " + std::to_string(row) + ", column ref_step_min: mixed step sizes");
        }
        for (int h = 0; h < 24; ++h) {
            char col[8];
            std::snprintf(col, sizeof(col), "h%02d", h + 1);
            const double v = parse_double(fields[static_cast<std::size_t>(4 + h)], row, col);
            if (v < 0.0 || v > 1.0)
                fail("row " + std::to_string(row) + ", column " + col + ": value outside [0,1]");
            r.p[static_cast<std::size_t>(h)] = v;
        }
        if (table.find(r.appliance, r.instance))
            fail("row " + std::to_string(row) + ": duplicate row (" + r.appliance + ", " +
                 std::to_string(r.instance) + ")");
        table.rows.push_back(std::move(r));
    }
    if (table.rows.empty()) fail("starting-probability table has no rows");
    return table;
}

std::string write_profile_csv(const LoadProfile& profile) {
    std::string out = "t_min,power_w\n";
    char buf[64];
    for (std::size_t i = 0; i < profile.samples.size(); ++i) {
        // %#.6g keeps trailing zeros so six significant digits always show
        std::snprintf(buf, sizeof(buf), "%lld,%#.6g\n",
                      static_cast<long long>(i) * profile.step_min, profile.samples[i]);
        out += buf;
    }
    return out;
}

LoadProfile read_profile_csv(std::string_view text) {
    LoadProfile profile;
    long long t0 = 0, spacing = 0;
    for (auto& [row, fields] : csv_rows(text, "t_min,power_w")) {
        if (fields.size() != 2)
            fail("row " + std::to_string(row) + ": expected 2 columns, got " +
                 std::to_string(fields.size()));
        const long long t = parse_int(fields[0], row, "t_min");
        const double w = parse_double(fields[1], row, "power_w");
        if (w < 0.0) fail("row " + std::to_string(row) + ", column power_w: negative power");
        if (row == 1) {
            t0 = t;
        } else if (row == 2) {
            spacing = t - t0;
            if (spacing <= 0) fail("row 2: t_min must increase");
        } else if (t != t0 + spacing * (row - 1)) {
            fail("row " + std::to_string(row) + ", column t_min: non-uniform spacing");
        }
        profile.samples.push_back(w);
    }
    if (profile.samples.empty()) return profile;
    profile.step_min = profile.samples.size() > 1 ? static_cast<int>(spacing) : 5;
    return profile;
}

IntervalSeries read_interval_csv(std::string_view text) {
    IntervalSeries series;
    long long t0 = 0, spacing = 0;
    int count = 0;
    for (auto& [row, fields] : csv_rows(text, "interval_start_min,energy_kwh")) {
        if (fields.size() != 2)
            fail("row " + std::to_string(row) + ": expected 2 columns, got " +
                 std::to_string(fields.size()));
        const long long t = parse_int(fields[0], row, "interval_start_min");
        const double kwh = parse_double(fields[1], row, "energy_kwh");
        if (kwh < 0.0)
            fail("row " + std::to_string(row) + ", column energy_kwh: negative energy");
        if (row == 1) {
            t0 = t;
        } else if (row == 2) {
            spacing = t - t0;
            if (spacing <= 0) fail("row 2: interval_start_min must increase");
        } else if (t != t0 + spacing * (row - 1)) {
            fail("row " + std::to_string(row) +
                 ", column interval_start_min: non-uniform spacing");
        }
        series.energy_kwh.push_back(kwh);
        count = row;
    }
    if (count < 2) fail("interval series needs at least two rows to infer the bin width");
    series.bin_min = static_cast<int>(spacing);
    return series;
}

BenchmarkSet parse_benchmarks_csv(std::string_view text) {
    BenchmarkSet set;
    for (auto& [row, fields] : csv_rows(text, "archetype,ema_kwh,paper_sim_kwh")) {
        if (fields.size() != 3)
            fail("row " + std::to_string(row) + ": expected 3 columns, got " +
                 std::to_string(fields.size()));
        BenchmarkSet::Entry e;
        e.ema_kwh = parse_double(fields[1], row, "ema_kwh");
        e.paper_sim_kwh = parse_double(fields[2], row, "paper_sim_kwh");
        if (e.ema_kwh <= 0.0 || e.paper_sim_kwh <= 0.0)
            fail("row " + std::to_string(row) + ": benchmark values must be > 0");
        set.entries[std::string(fields[0])] = e;
    }
    if (set.entries.empty()) fail("benchmark table has no rows");
    return set;
}

}  // namespace resload
