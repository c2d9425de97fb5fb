#include "resload/analytics.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace resload {

namespace {

std::string hhmm(int minutes) {
    char buf[8];
    std::snprintf(buf, sizeof(buf), "%02d:%02d", (minutes / 60) % 24, minutes % 60);
    return buf;
}

// mean watts per bin over the day, averaged across whole days
std::vector<double> day_mean_binned(const LoadProfile& profile, int bin_min) {
    if (profile.samples.empty()) throw std::invalid_argument("profile is empty");
    if (bin_min < profile.step_min || bin_min % profile.step_min != 0)
        throw std::invalid_argument("bin_min must be a multiple of the profile step");
    if (1440 % bin_min != 0) throw std::invalid_argument("bin_min must divide a day");
    const int T = profile.steps_per_day();
    if (profile.samples.size() % static_cast<std::size_t>(T) != 0)
        throw std::invalid_argument("profile must cover whole days");
    const std::size_t days = profile.samples.size() / static_cast<std::size_t>(T);
    const int per_bin = bin_min / profile.step_min;
    const int bins = 1440 / bin_min;
    std::vector<double> out(static_cast<std::size_t>(bins), 0.0);
    for (std::size_t d = 0; d < days; ++d)
        for (int t = 0; t < T; ++t)
            out[static_cast<std::size_t>(t / per_bin)] +=
                profile.samples[d * static_cast<std::size_t>(T) + static_cast<std::size_t>(t)];
    for (auto& v : out) v /= static_cast<double>(days) * per_bin;
    return out;
}

}  // namespace

double monthly_from_profile(const LoadProfile& profile) {
    if (profile.samples.empty()) throw std::invalid_argument("profile is empty");
    const double kwh_per_day = profile.total_wh() / 1000.0 / profile.days();
    return kwh_per_day * 30.0;
}

std::string PeakWindow::label() const { return hhmm(start_min) + "-" + hhmm(end_min() % 1440); }

std::vector<PeakWindow> find_peaks(const LoadProfile& profile, int bin_min, int top_k) {
    const std::vector<double> binned = day_mean_binned(profile, bin_min);
    const int bins = static_cast<int>(binned.size());
    std::vector<PeakWindow> peaks;
    for (int i = 0; i < bins; ++i) {
        const double left = binned[static_cast<std::size_t>((i + bins - 1) % bins)];
        const double right = binned[static_cast<std::size_t>((i + 1) % bins)];
        const double v = binned[static_cast<std::size_t>(i)];
        if (v > left && v > right)
            peaks.push_back({i * bin_min, bin_min, v});
    }
    std::sort(peaks.begin(), peaks.end(), [](const PeakWindow& a, const PeakWindow& b) {
        if (a.mean_w != b.mean_w) return a.mean_w > b.mean_w;
        return a.start_min < b.start_min;
    });
    if (top_k >= 0 && static_cast<int>(peaks.size()) > top_k)
        peaks.resize(static_cast<std::size_t>(top_k));
    return peaks;
}

ValidationReport compare_to_benchmark(const SimulationSummary& sim, const BenchmarkSet& benchmarks,
                                      BenchmarkKind which, double tolerance) {
    auto it = benchmarks.entries.find(sim.archetype);
    if (it == benchmarks.entries.end())
        throw std::invalid_argument("no benchmark for archetype '" + sim.archetype + "'");
    ValidationReport rep;
    rep.archetype = sim.archetype;
    rep.simulated_kwh = sim.monthly_kwh;
    rep.se_kwh = sim.se_kwh;
    rep.benchmark_name = which == BenchmarkKind::Ema ? "ema" : "paper-sim";
    rep.benchmark_kwh = which == BenchmarkKind::Ema ? it->second.ema_kwh : it->second.paper_sim_kwh;
    rep.relative_error = std::abs(sim.monthly_kwh - rep.benchmark_kwh) / rep.benchmark_kwh;
    rep.tolerance = tolerance;
    rep.pass = rep.relative_error <= tolerance;
    rep.clamp_count = sim.clamp_count;
    rep.peaks = sim.peaks;
    return rep;
}

std::string ValidationReport::to_text() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf),
                  "%s: simulated %.1f +- %.1f kWh/month vs %s %.1f kWh/month\n"
                  "  relative error %.2f%% (tolerance %.1f%%) -> %s",
                  archetype.c_str(), simulated_kwh, se_kwh, benchmark_name.c_str(), benchmark_kwh,
                  relative_error * 100.0, tolerance * 100.0, pass ? "PASS" : "FAIL");
    std::string out = buf;
    if (clamp_count > 0) out += "\n  clamped probability entries: " + std::to_string(clamp_count);
    if (!peaks.empty()) {
        out += "\n  peaks:";
        for (const auto& p : peaks) {
            std::snprintf(buf, sizeof(buf), " %s (%.1f W)", p.label().c_str(), p.mean_w);
            out += buf;
        }
    }
    return out;
}

std::string ValidationReport::csv_header() {
    return "archetype,simulated_kwh,se_kwh,benchmark,benchmark_kwh,relative_error,tolerance,pass,"
           "clamp_count,peaks";
}

std::string ValidationReport::to_csv_row() const {
    char buf[256];
    std::snprintf(buf, sizeof(buf), "%s,%.6g,%.6g,%s,%.6g,%.6g,%.6g,%d,%lld,", archetype.c_str(),
                  simulated_kwh, se_kwh, benchmark_name.c_str(), benchmark_kwh, relative_error,
                  tolerance, pass ? 1 : 0, clamp_count);
    std::string out = buf;
    for (std::size_t i = 0; i < peaks.size(); ++i) {
        if (i) out += ';';
        std::snprintf(buf, sizeof(buf), "%s@%.6gW", peaks[i].label().c_str(), peaks[i].mean_w);
        out += buf;
    }
    return out;
}

double IntervalSeries::total_kwh() const {
    double sum = 0.0;
    for (double v : energy_kwh) sum += v;
    return sum;
}

ErrorMetrics profile_error_metrics(const LoadProfile& sim, const IntervalSeries& measured) {
    if (measured.energy_kwh.empty()) throw std::invalid_argument("measured series is empty");
    const int day_min = measured.bin_min * static_cast<int>(measured.energy_kwh.size());
    if (day_min != 1440)
        throw std::invalid_argument("measured series must cover exactly one day");
    const std::vector<double> sim_w = day_mean_binned(sim, measured.bin_min);

    ErrorMetrics out;
    double se_sum = 0.0, ape_sum = 0.0;
    int used = 0;
    const double bin_h = measured.bin_min / 60.0;
    for (std::size_t i = 0; i < measured.energy_kwh.size(); ++i) {
        const double meas_w = measured.energy_kwh[i] * 1000.0 / bin_h;
        const double diff = sim_w[i] - meas_w;
        se_sum += diff * diff;
        if (meas_w > 0.0) {
            ape_sum += std::abs(diff) / meas_w;
            used += 1;
        } else {
            out.skipped_bins += 1;
        }
    }
    out.rmse_w = std::sqrt(se_sum / static_cast<double>(measured.energy_kwh.size()));
    out.mape_pct = used > 0 ? 100.0 * ape_sum / used : 0.0;

    double sim_day_kwh = 0.0;
    for (double w : sim_w) sim_day_kwh += w * bin_h / 1000.0;
    const double meas_day_kwh = measured.total_kwh();
    if (meas_day_kwh <= 0.0) throw std::invalid_argument("measured series has no energy");
    out.energy_ratio = sim_day_kwh / meas_day_kwh;
    return out;
}

}  // namespace resload
