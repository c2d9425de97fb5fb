#pragma once

#include <map>
#include <string>
#include <vector>

#include "resload/engine.hpp"

namespace resload {

/// Named monthly-kWh reference values per archetype.
struct BenchmarkSet {
    struct Entry {
        double ema_kwh = 0.0;        ///< authority statistics
        double paper_sim_kwh = 0.0;  ///< previously reported simulation values
    };
    std::map<std::string, Entry> entries;
};

enum class BenchmarkKind { Ema, PaperSim };

/// Mean daily energy of the profile (kWh) times a 30-day month.
double monthly_from_profile(const LoadProfile& profile);

struct PeakWindow {
    int start_min = 0;  ///< minutes after midnight
    int bin_min = 0;
    double mean_w = 0.0;

    int end_min() const { return start_min + bin_min; }
    std::string label() const;  ///< "hh:mm-hh:mm"
};

/// Folds the profile into a mean day, rebins it to bin_min and returns the
/// top_k strict cyclic local maxima ordered by magnitude (earlier time wins
/// ties). A constant profile has no strict maxima and yields an empty list.
std::vector<PeakWindow> find_peaks(const LoadProfile& profile, int bin_min, int top_k);

/// What a validation run compares and how it came out.
struct ValidationReport {
    std::string archetype;
    double simulated_kwh = 0.0;
    double se_kwh = 0.0;
    std::string benchmark_name;
    double benchmark_kwh = 0.0;
    double relative_error = 0.0;  ///< |sim - bench| / bench
    double tolerance = 0.0;
    bool pass = false;
    long long clamp_count = 0;
    std::vector<PeakWindow> peaks;

    std::string to_text() const;
    static std::string csv_header();
    std::string to_csv_row() const;
};

/// Simulation-side inputs of a benchmark comparison.
struct SimulationSummary {
    std::string archetype;
    double monthly_kwh = 0.0;
    double se_kwh = 0.0;
    long long clamp_count = 0;
    std::vector<PeakWindow> peaks;
};

ValidationReport compare_to_benchmark(const SimulationSummary& sim, const BenchmarkSet& benchmarks,
                                      BenchmarkKind which, double tolerance);

/// Measured interval data: uniformly spaced energy readings.
struct IntervalSeries {
    int bin_min = 30;
    std::vector<double> energy_kwh;

    double total_kwh() const;
};

struct ErrorMetrics {
    double mape_pct = 0.0;  ///< bins with zero measured power are skipped
    double rmse_w = 0.0;
    double energy_ratio = 0.0;  ///< simulated daily energy / measured daily energy
    int skipped_bins = 0;
};

/// Compares the simulated day-mean profile against one measured day, rebinned
/// to the measured cadence. Throws std::invalid_argument when the series do
/// not describe the same day length.
ErrorMetrics profile_error_metrics(const LoadProfile& sim, const IntervalSeries& measured);

}  // namespace resload
