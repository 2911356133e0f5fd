#ifndef CODEGAUNTLET_REPORTING_HPP
#define CODEGAUNTLET_REPORTING_HPP

#include <filesystem>
#include <map>
#include <string>
#include <vector>

#include "codegauntlet/corpus.hpp"
#include "codegauntlet/metrics.hpp"
#include "codegauntlet/time_source.hpp"

namespace cg {

// Externally published result quoted for context. The rate is displayed as
// quoted, never recomputed, and these rows are kept in their own section.
struct ReferenceBaseline {
    std::string model;
    double rate_percent = 0;
    std::uint64_t sample_size = 0;
};

// Loads data/reference_baselines.json-shaped content.
std::vector<ReferenceBaseline> load_reference_baselines(const std::filesystem::path& path);

struct ModelTimes {
    std::string model;
    std::vector<double> generation_times_s;  // successful generations only
};

struct ReportInputs {
    std::size_t corpus_size = 0;
    DifficultyTiering tiering;
    std::vector<ModelTimes> times;
    OutcomeTables outcomes;
    std::vector<AcceptanceRow> acceptance;
    std::vector<ReferenceBaseline> reference_baselines;
    std::string judge_label = "sample-judged (local)";
    int histogram_bins = 20;
};

// Rendered report: deterministic file name -> content. The wall-clock
// timestamp lives only in metadata.json so everything else is byte-stable
// for identical inputs.
struct ReportBundle {
    std::map<std::string, std::string> files;  // excludes metadata.json
    std::string metadata_json;
    std::vector<std::string> warnings;
};

// Renders every table (text + CSV twin) and per-model plot CSVs. Summary
// statistics always use the full data; histogram/CDF data is outlier-
// filtered by the 1.5*IQR rule. Models with no usable times render as em
// dashes and are listed in warnings.
ReportBundle render_reports(const ReportInputs& inputs, TimeSource& time_source);

// Writes the bundle under `dir` with atomic writes, skipping files whose
// bytes are already current; metadata.json is only rewritten when some
// other file changed (or metadata's non-timestamp content did), which keeps
// a rerun over unchanged inputs byte-identical. Returns files written.
std::vector<std::string> write_report_bundle(const ReportBundle& bundle,
                                             const std::filesystem::path& dir);

// Plot-data CSVs alone (cdf_<model>.csv, hist_<model>.csv), written via
// atomic_write. Returns files written; models with no data are skipped and
// reported in `warnings` when non-null.
std::vector<std::string> export_plot_data(const std::vector<ModelTimes>& times, int histogram_bins,
                                          const std::filesystem::path& dir,
                                          std::vector<std::string>* warnings = nullptr);

}  // namespace cg

#endif
