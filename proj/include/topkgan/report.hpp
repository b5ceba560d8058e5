#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <string>
#include <vector>

#include "topkgan/diagnostics.hpp"
#include "topkgan/gan.hpp"
#include "topkgan/metrics.hpp"

namespace topkgan {

/// Parsed comma-separated table with a header row.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const;
};

CsvTable parse_csv(const std::string& text);
CsvTable read_csv(const std::filesystem::path& path);

/// Shortest round-trip decimal, or "nan".
std::string format_metric(double v);

/// End-of-run evaluation of one generator.
struct RunSummary {
    std::uint64_t iteration = 0;
    double hq_frac = 0.0;
    double modes_frac = 0.0;
    std::array<double, kSigmaBins> sigma_bins{};
    double ndb = 0.0;
    double frechet = 0.0;
};

std::string metrics_csv(const std::vector<MetricRow>& log);
std::vector<MetricRow> parse_metrics_csv(const std::string& text);

std::string summary_csv(const RunSummary& s);
RunSummary parse_summary_csv(const std::string& text);

/// `kind,x,y` rows: kind is `mode` or `sample`.
std::string samples_csv(const MogSpec& spec, const Matrix& samples);

/// `branch,bin,count,mean_cosine,mean_distance_delta`, bins labelled 1..4 and 5+.
std::string probe_csv(const StepProbeReport& report);

/// Figures are rendered from CSV text only.
std::string render_samples_svg(const std::string& samples_csv_text);
std::string render_metrics_svg(const std::string& metrics_csv_text);
std::string render_probe_cosine_svg(const std::string& probe_csv_text);
std::string render_probe_distance_svg(const std::string& probe_csv_text);

/// Mean and sample standard deviation (n-1; 0 for a single run) of each summary metric.
struct AggregateRow {
    std::string metric;
    double mean = 0.0;
    double std = 0.0;
    std::size_t n_runs = 0;
};

std::vector<AggregateRow> aggregate_summaries(const std::vector<RunSummary>& runs);
std::string aggregate_csv(const std::vector<AggregateRow>& rows);
/// Human-readable table including a sigma-bin row with columns 1..5+.
std::string aggregate_text(const std::vector<AggregateRow>& rows, const std::string& label);

}  // namespace topkgan
