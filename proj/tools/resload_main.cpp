#include <algorithm>
#include <cctype>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "resload/analytics.hpp"
#include "resload/engine.hpp"
#include "resload/fixtures.hpp"
#include "resload/io.hpp"
#include "resload/oracle.hpp"

namespace {

using namespace resload;

struct SimOptions {
    std::string archetype;
    int days = 30;
    int households = 100;
    std::uint64_t seed = 1;
    int step_min = 5;
    int warmup_days = 1;
    std::string mode = "table";
    std::string ownership = "scaling";
    std::string standby = "continuous";
    std::string out;
};

void add_sim_options(CLI::App* cmd, SimOptions& o, bool with_fleet = true) {
    cmd->add_option("--archetype", o.archetype, "household archetype: r12, r3, r4 or r5")
        ->required();
    if (with_fleet) {
        cmd->add_option("--days", o.days, "simulated days per household (default 30)");
        cmd->add_option("--households", o.households, "fleet size (default 100)");
        cmd->add_option("--seed", o.seed, "base seed for the household substreams (default 1)");
        cmd->add_option("--warmup-days", o.warmup_days,
                        "settling days excluded from results (default 1)");
    }
    cmd->add_option("--step-min", o.step_min, "computation step in minutes (default 5)");
    cmd->add_option("--mode", o.mode,
                    "probability source: 'table' (tabulated rows) or 'eq1' (hourly profile x "
                    "frequency x step factor x saturation)")
        ->check(CLI::IsMember({"table", "eq1"}));
    cmd->add_option("--ownership", o.ownership,
                    "'scaling' (saturation inside the probabilities) or 'bernoulli' (presence "
                    "sampled per household)")
        ->check(CLI::IsMember({"scaling", "bernoulli"}));
    cmd->add_option("--standby", o.standby,
                    "'continuous' (standby drawn every step) or 'offtime' (only while off)")
        ->check(CLI::IsMember({"continuous", "offtime"}));
    cmd->add_option("--out", o.out, "write primary output to this file instead of stdout");
}

std::string normalize_archetype(std::string name) {
    std::transform(name.begin(), name.end(), name.begin(),
                   [](unsigned char c) { return static_cast<char>(std::tolower(c)); });
    return name;
}

SimulationConfig make_config(const SimOptions& o) {
    SimulationConfig cfg;
    cfg.step_min = o.step_min;
    cfg.warmup_days = o.warmup_days;
    cfg.sim_days = o.days;
    cfg.households = o.households;
    cfg.base_seed = o.seed;
    cfg.probability_source =
        o.mode == "table" ? ProbabilitySource::FromTable : ProbabilitySource::FromParameters;
    cfg.ownership_mode = o.ownership == "scaling" ? OwnershipMode::ProbabilityScaling
                                                  : OwnershipMode::BernoulliPresence;
    cfg.standby_mode =
        o.standby == "continuous" ? StandbyMode::Continuous : StandbyMode::OffTimeOnly;
    cfg.validate();
    return cfg;
}

void write_output(const std::string& path, const std::string& content) {
    if (path.empty()) {
        std::cout << content;
        return;
    }
    std::ofstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open output file '" + path + "'");
    file << content;
}

std::string read_file(const std::string& path) {
    std::ifstream file(path, std::ios::binary);
    if (!file) throw std::invalid_argument("cannot open input file '" + path + "'");
    std::ostringstream ss;
    ss << file.rdbuf();
    return ss.str();
}

FleetResult run_fleet(const SimOptions& o, const SimulationConfig& cfg) {
    const auto& lib = FixtureLibrary::instance();
    const std::string name = normalize_archetype(o.archetype);
    const HouseholdArchetype& arch = lib.archetype(name);
    const StartProbabilityTable* table =
        cfg.probability_source == ProbabilitySource::FromTable ? &lib.table(name) : nullptr;
    return simulate_fleet(arch, table, cfg);
}

void print_fleet_diagnostics(const FleetResult& fleet) {
    std::fprintf(stderr, "monthly energy: %.2f +- %.2f kWh/month (sd %.2f, %zu households)\n",
                 fleet.stats.mean_monthly_kwh, fleet.stats.se_monthly_kwh,
                 fleet.stats.sd_monthly_kwh, fleet.stats.household_monthly_kwh.size());
    if (fleet.clamp_count > 0)
        std::fprintf(stderr, "clamped probability entries per household: %lld\n",
                     fleet.clamp_count);
    for (const auto& w : fleet.warnings) std::fprintf(stderr, "warning: %s\n", w.c_str());
}

int run_simulate(const SimOptions& o) {
    SimulationConfig cfg = make_config(o);
    FleetResult fleet = run_fleet(o, cfg);
    print_fleet_diagnostics(fleet);
    write_output(o.out, write_profile_csv(fleet.mean_profile));
    return 0;
}

int run_expected(const SimOptions& o) {
    SimulationConfig cfg = make_config(o);
    const auto& lib = FixtureLibrary::instance();
    const std::string name = normalize_archetype(o.archetype);
    const HouseholdArchetype& arch = lib.archetype(name);
    const StartProbabilityTable* table =
        cfg.probability_source == ProbabilitySource::FromTable ? &lib.table(name) : nullptr;

    DailyEnergyExpectation dp = expected_daily_energy_exact(arch, table, cfg);
    ClosedFormMonthly cf = expected_monthly_energy_closed_form(arch);

    std::ostringstream out;
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%-24s %4s %11s %13s %14s\n", "appliance", "inst",
                  "starts/day", "active kWh/d", "standby kWh/d");
    out << buf;
    for (const auto& e : dp.appliances) {
        std::snprintf(buf, sizeof(buf), "%-24s %4d %11.3f %13.4f %14.4f\n", e.name.c_str(),
                      e.instance, e.expected_starts_per_day, e.active_kwh_per_day,
                      e.standby_kwh_per_day);
        out << buf;
    }
    std::snprintf(buf, sizeof(buf),
                  "\nexact expectation: %.4f kWh/day = %.2f kWh/month (30 days)\n",
                  dp.total_kwh_per_day, dp.total_monthly_kwh());
    out << buf;
    std::snprintf(buf, sizeof(buf), "closed form, standby charged 24 h/day: %.2f kWh/month\n",
                  cf.full_day_standby_kwh);
    out << buf;
    std::snprintf(buf, sizeof(buf), "closed form, standby charged 1 h/day:  %.2f kWh/month\n",
                  cf.one_hour_standby_kwh);
    out << buf;
    write_output(o.out, out.str());
    return 0;
}

int run_validate(const SimOptions& o, const std::string& benchmark, double tolerance, int bin_min,
                 int top_k) {
    SimulationConfig cfg = make_config(o);
    FleetResult fleet = run_fleet(o, cfg);
    print_fleet_diagnostics(fleet);

    const BenchmarkKind kind = benchmark == "ema" ? BenchmarkKind::Ema : BenchmarkKind::PaperSim;
    if (tolerance < 0) tolerance = kind == BenchmarkKind::Ema ? 0.10 : 0.05;

    SimulationSummary summary;
    summary.archetype = normalize_archetype(o.archetype);
    summary.monthly_kwh = fleet.stats.mean_monthly_kwh;
    summary.se_kwh = fleet.stats.se_monthly_kwh;
    summary.clamp_count = fleet.clamp_count;
    summary.peaks = find_peaks(fleet.mean_profile, bin_min, top_k);

    ValidationReport report = compare_to_benchmark(summary, FixtureLibrary::instance().benchmarks(),
                                                   kind, tolerance);
    write_output(o.out, report.to_text() + "\n" + ValidationReport::csv_header() + "\n" +
                            report.to_csv_row() + "\n");
    return report.pass ? 0 : 1;
}

int run_peaks(const SimOptions& o, int bin_min, int top_k, const std::string& measured_path) {
    SimulationConfig cfg = make_config(o);
    FleetResult fleet = run_fleet(o, cfg);
    print_fleet_diagnostics(fleet);

    std::ostringstream out;
    char buf[128];
    auto peaks = find_peaks(fleet.mean_profile, bin_min, top_k);
    out << "simulated peaks (" << bin_min << "-min bins):\n";
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        std::snprintf(buf, sizeof(buf), "  %zu. %s  %.1f W\n", i + 1, peaks[i].label().c_str(),
                      peaks[i].mean_w);
        out << buf;
    }
    if (peaks.empty()) out << "  (no strict local maxima)\n";

    if (!measured_path.empty()) {
        IntervalSeries measured = read_interval_csv(read_file(measured_path));
        ErrorMetrics metrics = profile_error_metrics(fleet.mean_profile, measured);
        std::snprintf(buf, sizeof(buf),
                      "vs measured: MAPE %.1f%% (skipped %d zero bins), RMSE %.1f W, "
                      "energy ratio %.3f\n",
                      metrics.mape_pct, metrics.skipped_bins, metrics.rmse_w,
                      metrics.energy_ratio);
        out << buf;
        LoadProfile measured_w;
        measured_w.step_min = measured.bin_min;
        for (double kwh : measured.energy_kwh)
            measured_w.samples.push_back(kwh * 1000.0 * 60.0 / measured.bin_min);
        auto mpeaks = find_peaks(measured_w, measured.bin_min, top_k);
        out << "measured peaks:\n";
        for (std::size_t i = 0; i < mpeaks.size(); ++i) {
            std::snprintf(buf, sizeof(buf), "  %zu. %s  %.1f W\n", i + 1,
                          mpeaks[i].label().c_str(), mpeaks[i].mean_w);
            out << buf;
        }
    }
    write_output(o.out, out.str());
    return 0;
}

int run_fixtures(bool dump, const std::string& out_dir) {
    if (!dump) {
        const auto& lib = FixtureLibrary::instance();
        for (const auto& name : lib.archetype_names()) {
            const auto& arch = lib.archetype(name);
            const auto& bench = lib.benchmarks().entries.at(name);
            std::printf("%s: %zu appliance instances, benchmarks ema=%.1f previous-sim=%.1f\n",
                        name.c_str(), arch.appliances.size(), bench.ema_kwh,
                        bench.paper_sim_kwh);
        }
        std::printf("fixture digest: 0x%016llx\n",
                    static_cast<unsigned long long>(FixtureLibrary::digest()));
        return 0;
    }
    for (const auto& [name, content] : FixtureLibrary::files()) {
        const std::string path = out_dir + "/" + name;
        std::ofstream file(path, std::ios::binary);
        if (!file) throw std::invalid_argument("cannot write '" + path + "'");
        file << content;
        std::fprintf(stderr, "wrote %s\n", path.c_str());
    }
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bottom-up residential load profile simulator"};
    app.require_subcommand(1);

    SimOptions sim_opts;
    auto* simulate = app.add_subcommand("simulate", "simulate a fleet and emit the mean profile");
    add_sim_options(simulate, sim_opts);

    SimOptions exp_opts;
    auto* expected =
        app.add_subcommand("expected", "exact expected energy without sampling, plus closed forms");
    add_sim_options(expected, exp_opts, /*with_fleet=*/false);

    SimOptions val_opts;
    std::string benchmark = "ema";
    double tolerance = -1.0;
    int val_bin_min = 30, val_top_k = 2;
    auto* validate = app.add_subcommand("validate", "simulate and compare against a benchmark");
    add_sim_options(validate, val_opts);
    validate->add_option("--benchmark", benchmark, "'ema' or 'paper-sim' (default ema)")
        ->check(CLI::IsMember({"ema", "paper-sim"}));
    validate->add_option("--tolerance", tolerance,
                         "relative tolerance (default 0.10 for ema, 0.05 for paper-sim)");
    validate->add_option("--bin-min", val_bin_min, "peak detection bin width (default 30)");
    validate->add_option("--top-k", val_top_k, "number of peaks to report (default 2)");

    SimOptions peak_opts;
    int bin_min = 30, top_k = 2;
    std::string measured_path;
    auto* peaks = app.add_subcommand("peaks", "locate daily load peaks, optionally vs measured data");
    add_sim_options(peaks, peak_opts);
    peaks->add_option("--bin-min", bin_min, "bin width in minutes (default 30)");
    peaks->add_option("--top-k", top_k, "number of peaks to report (default 2)");
    peaks->add_option("--measured", measured_path, "measured interval CSV to compare against");

    bool dump = false;
    std::string out_dir = ".";
    auto* fixtures = app.add_subcommand("fixtures", "inspect or export the built-in tables");
    fixtures->add_flag("--dump", dump, "write all fixture CSVs");
    fixtures->add_option("--out", out_dir, "directory for --dump (default .)");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (simulate->parsed()) return run_simulate(sim_opts);
        if (expected->parsed()) return run_expected(exp_opts);
        if (validate->parsed())
            return run_validate(val_opts, benchmark, tolerance, val_bin_min, val_top_k);
        if (peaks->parsed()) return run_peaks(peak_opts, bin_min, top_k, measured_path);
        if (fixtures->parsed()) return run_fixtures(dump, out_dir);
    } catch (const std::exception& e) {
        std::fprintf(stderr, "error: %s\n", e.what());
        return 2;
    }
    return 2;
}
