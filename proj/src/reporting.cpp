#include "codegauntlet/reporting.hpp"

#include <algorithm>
#include <cctype>
#include <cstdio>

#include "codegauntlet/atomic_file.hpp"
#include "codegauntlet/error.hpp"
#include "codegauntlet/store_paths.hpp"
#include "json.hpp"

namespace cg {

using nlohmann::json;

namespace {

constexpr const char* kDash = "—";  // em dash for missing figures

std::string fmt_fixed(double v, int decimals) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.*f", decimals, v);
    return buf;
}

// Compact numeric form for CSV payloads (no trailing zero noise).
std::string fmt_g(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.6g", v);
    return buf;
}

std::string csv_escape(const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) {
        if (c == '"') out += "\"\"";
        else out.push_back(c);
    }
    out += "\"";
    return out;
}

std::string csv_row(const std::vector<std::string>& fields) {
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out.push_back(',');
        out += csv_escape(fields[i]);
    }
    out.push_back('\n');
    return out;
}

// Fixed-width text table: first column left-aligned, the rest right-aligned.
std::string render_text_table(const std::vector<std::vector<std::string>>& rows) {
    if (rows.empty()) return "";
    std::vector<std::size_t> widths;
    for (const auto& row : rows) {
        if (widths.size() < row.size()) widths.resize(row.size(), 0);
        for (std::size_t i = 0; i < row.size(); ++i) widths[i] = std::max(widths[i], row[i].size());
    }
    std::string out;
    for (const auto& row : rows) {
        for (std::size_t i = 0; i < row.size(); ++i) {
            if (i) out += "  ";
            if (i == 0) {
                out += row[i];
                out.append(widths[i] - row[i].size(), ' ');
            } else {
                out.append(widths[i] - row[i].size(), ' ');
                out += row[i];
            }
        }
        while (!out.empty() && out.back() == ' ') out.pop_back();
        out.push_back('\n');
    }
    return out;
}

std::string cdf_csv(const std::vector<double>& times) {
    std::string out = "time_s,fraction\n";
    for (const auto& [t, frac] : cdf_points(times))
        out += csv_row({fmt_g(t), fmt_fixed(frac, 4)});
    return out;
}

std::string hist_csv(const std::vector<double>& times, int bins) {
    std::string out = "bin_lo,bin_hi,count\n";
    for (const auto& bin : histogram(times, bins))
        out += csv_row({fmt_g(bin.lo), fmt_g(bin.hi), std::to_string(bin.count)});
    return out;
}

struct OutlierCount {
    std::string model;
    std::size_t count = 0;
};

}  // namespace

std::vector<ReferenceBaseline> load_reference_baselines(const std::filesystem::path& path) {
    auto text = read_file(path);
    if (!text) throw ConfigError("reference baselines file not found: '" + path.string() + "'");
    json doc = json::parse(*text, nullptr, false);
    if (doc.is_discarded()) throw ConfigError("malformed reference baselines file '" + path.string() + "'");
    std::vector<ReferenceBaseline> rows;
    try {
        const std::uint64_t n = doc.at("sample_size").get<std::uint64_t>();
        for (const auto& jr : doc.at("rows")) {
            ReferenceBaseline b;
            b.model = jr.at("model").get<std::string>();
            b.rate_percent = jr.at("rate_percent").get<double>();
            b.sample_size = jr.contains("sample_size") ? jr.at("sample_size").get<std::uint64_t>() : n;
            rows.push_back(std::move(b));
        }
    } catch (const json::exception& e) {
        throw ConfigError("bad reference baselines file '" + path.string() + "': " + e.what());
    }
    return rows;
}

ReportBundle render_reports(const ReportInputs& inputs, TimeSource& time_source) {
    ReportBundle bundle;

    std::vector<ModelTimes> sorted_times = inputs.times;
    std::sort(sorted_times.begin(), sorted_times.end(),
              [](const ModelTimes& a, const ModelTimes& b) { return a.model < b.model; });

    // Runtime summary table (full data, no outlier filtering).
    {
        std::vector<std::vector<std::string>> rows{
            {"model", "mean_s", "median_s", "std_s", "min_s", "max_s", "count"}};
        std::string csv = csv_row(rows[0]);
        for (const auto& mt : sorted_times) {
            if (mt.generation_times_s.empty()) {
                rows.push_back({mt.model, kDash, kDash, kDash, kDash, kDash, "0"});
                csv += csv_row({mt.model, "", "", "", "", "", "0"});
                bundle.warnings.push_back("model " + mt.model +
                                          " has no successful generations; figures omitted");
                continue;
            }
            const SummaryStats s = summary_stats(mt.generation_times_s);
            rows.push_back({mt.model, fmt_fixed(s.mean, 2), fmt_fixed(s.median, 2),
                            fmt_fixed(s.std_dev, 2), fmt_fixed(s.min, 2), fmt_fixed(s.max, 2),
                            std::to_string(s.count)});
            csv += csv_row({mt.model, fmt_fixed(s.mean, 2), fmt_fixed(s.median, 2),
                            fmt_fixed(s.std_dev, 2), fmt_fixed(s.min, 2), fmt_fixed(s.max, 2),
                            std::to_string(s.count)});
        }
        bundle.files["runtime_table.txt"] =
            "Response generation time (seconds), full dataset\n\n" + render_text_table(rows);
        bundle.files["runtime_table.csv"] = csv;
    }

    // Outlier counts, most outliers first (ties by model name).
    {
        std::vector<OutlierCount> counts;
        for (const auto& mt : sorted_times) {
            if (mt.generation_times_s.empty()) continue;
            counts.push_back({mt.model, iqr_outliers(mt.generation_times_s).outliers.size()});
        }
        std::sort(counts.begin(), counts.end(), [](const OutlierCount& a, const OutlierCount& b) {
            if (a.count != b.count) return a.count > b.count;
            return a.model < b.model;
        });
        std::vector<std::vector<std::string>> rows{{"model", "outliers"}};
        std::string csv = csv_row(rows[0]);
        for (const auto& oc : counts) {
            rows.push_back({oc.model, std::to_string(oc.count)});
            csv += csv_row({oc.model, std::to_string(oc.count)});
        }
        bundle.files["outlier_table.txt"] =
            "Generation-time outliers excluded from plot data (1.5*IQR rule)\n\n" +
            render_text_table(rows);
        bundle.files["outlier_table.csv"] = csv;
    }

    // Per-tier outcome tables: categories as rows, models as columns.
    for (const auto* table : {&inputs.outcomes.easy, &inputs.outcomes.medium, &inputs.outcomes.hard}) {
        const std::string tier_lc = [&] {
            std::string t = to_string(table->tier);
            for (auto& c : t) c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
            return t;
        }();

        std::vector<std::string> models;
        for (const auto& [model, _] : table->totals) models.push_back(model);

        std::vector<std::vector<std::string>> rows;
        std::vector<std::string> header{"status"};
        header.insert(header.end(), models.begin(), models.end());
        rows.push_back(header);
        for (VerdictCategory cat : kTrackedCategories) {
            std::vector<std::string> row{display_name(cat)};
            for (const auto& model : models) {
                const auto& cc = table->counts.at(model);
                auto it = cc.find(cat);
                row.push_back(std::to_string(it == cc.end() ? 0 : it->second));
            }
            rows.push_back(row);
        }
        std::vector<std::string> total_row{"Total"};
        std::vector<std::string> other_row{"(Other excluded)"};
        for (const auto& model : models) {
            total_row.push_back(std::to_string(table->totals.at(model)));
            other_row.push_back(std::to_string(table->other_excluded.at(model)));
        }
        rows.push_back(total_row);
        rows.push_back(other_row);

        std::string csv = csv_row({"model", "accepted", "compile_error", "wrong_answer",
                                   "run_time_error", "time_limit_exceeded", "memory_limit_exceeded",
                                   "total", "other_excluded"});
        for (const auto& model : models) {
            const auto& cc = table->counts.at(model);
            auto count_of = [&](VerdictCategory cat) {
                auto it = cc.find(cat);
                return std::to_string(it == cc.end() ? 0 : it->second);
            };
            csv += csv_row({model, count_of(VerdictCategory::Accepted),
                            count_of(VerdictCategory::CompileError),
                            count_of(VerdictCategory::WrongAnswer),
                            count_of(VerdictCategory::RunTimeError),
                            count_of(VerdictCategory::TimeLimitExceeded),
                            count_of(VerdictCategory::MemoryLimitExceeded),
                            std::to_string(table->totals.at(model)),
                            std::to_string(table->other_excluded.at(model))});
        }
        bundle.files["outcome_" + tier_lc + ".txt"] =
            "Outcome counts, problem difficulty: " + std::string(to_string(table->tier)) + " (" +
            inputs.judge_label + ")\n\n" + render_text_table(rows);
        bundle.files["outcome_" + tier_lc + ".csv"] = csv;
    }

    // Acceptance table: quoted reference section first, measured rows below.
    {
        std::vector<std::vector<std::string>> rows{{"model", "accepted", "total", "rate_percent"}};
        std::string csv = csv_row({"section", "model", "accepted", "total", "rate_percent"});

        if (!inputs.reference_baselines.empty()) {
            auto refs = inputs.reference_baselines;
            std::sort(refs.begin(), refs.end(), [](const ReferenceBaseline& a, const ReferenceBaseline& b) {
                if (a.rate_percent != b.rate_percent) return a.rate_percent > b.rate_percent;
                return a.model < b.model;
            });
            rows.push_back({"[reference results, n per row; quoted, not measured here]"});
            for (const auto& ref : refs) {
                rows.push_back({ref.model, kDash, std::to_string(ref.sample_size),
                                fmt_fixed(ref.rate_percent, 1)});
                csv += csv_row({"reference", ref.model, "", std::to_string(ref.sample_size),
                                fmt_fixed(ref.rate_percent, 1)});
            }
            rows.push_back({""});
        }

        rows.push_back({"[measured, " + inputs.judge_label + "]"});
        for (const auto& row : inputs.acceptance) {
            rows.push_back({row.model, std::to_string(row.accepted), std::to_string(row.total),
                            fmt_fixed(row.rate, 1)});
            csv += csv_row({"measured", row.model, std::to_string(row.accepted),
                            std::to_string(row.total), fmt_fixed(row.rate, 1)});
        }
        bundle.files["acceptance_table.txt"] =
            "Acceptance rates (pass@1), sorted from highest to lowest\n\n" + render_text_table(rows);
        bundle.files["acceptance_table.csv"] = csv;
    }

    // Plot data, outlier-filtered.
    for (const auto& mt : sorted_times) {
        if (mt.generation_times_s.empty()) continue;
        const auto split = iqr_outliers(mt.generation_times_s);
        const std::string tag = sanitize_model_for_filename(mt.model);
        bundle.files["cdf_" + tag + ".csv"] = cdf_csv(split.kept);
        bundle.files["hist_" + tag + ".csv"] = hist_csv(split.kept, inputs.histogram_bins);
    }

    json meta{{"generated_at", time_source.now_iso8601_utc()},
              {"corpus_size", inputs.corpus_size},
              {"tiering",
               {{"easy_upper", inputs.tiering.easy_upper},
                {"medium_upper", inputs.tiering.medium_upper},
                {"note", "tier cut points are this pipeline's defaults, not a published convention"}}},
              {"quantile_method", "linear interpolation between closest ranks"},
              {"std_dev", "sample standard deviation (n-1 divisor)"},
              {"rate_rounding", "percentages rounded half-up to one decimal"},
              {"outlier_policy",
               "histogram/CDF data excludes values outside [Q1-1.5*IQR, Q3+1.5*IQR]; summary "
               "statistics use the full data"},
              {"judge_label", inputs.judge_label},
              {"histogram_bins", inputs.histogram_bins},
              {"warnings", bundle.warnings}};
    bundle.metadata_json = meta.dump(2) + "\n";

    return bundle;
}

std::vector<std::string> write_report_bundle(const ReportBundle& bundle,
                                             const std::filesystem::path& dir) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    bool changed = false;
    for (const auto& [name, content] : bundle.files) {
        if (atomic_write_if_changed(dir / name, content)) {
            written.push_back(name);
            changed = true;
        }
    }

    // Rewrite metadata only when something moved, so a rerun over identical
    // inputs leaves the whole bundle byte-identical.
    const auto meta_path = dir / "metadata.json";
    auto strip_timestamp = [](const std::string& text) {
        json j = json::parse(text, nullptr, false);
        if (j.is_discarded()) return std::string();
        j.erase("generated_at");
        return j.dump();
    };
    const auto existing = read_file(meta_path);
    const bool meta_stale =
        !existing || strip_timestamp(*existing) != strip_timestamp(bundle.metadata_json);
    if (changed || meta_stale) {
        atomic_write(meta_path, bundle.metadata_json);
        written.push_back("metadata.json");
    }
    return written;
}

std::vector<std::string> export_plot_data(const std::vector<ModelTimes>& times, int histogram_bins,
                                          const std::filesystem::path& dir,
                                          std::vector<std::string>* warnings) {
    std::filesystem::create_directories(dir);
    std::vector<std::string> written;
    for (const auto& mt : times) {
        if (mt.generation_times_s.empty()) {
            if (warnings)
                warnings->push_back("model " + mt.model + " has no times; no plot data written");
            continue;
        }
        const auto split = iqr_outliers(mt.generation_times_s);
        const std::string tag = sanitize_model_for_filename(mt.model);
        const std::string cdf_name = "cdf_" + tag + ".csv";
        const std::string hist_name = "hist_" + tag + ".csv";
        atomic_write(dir / cdf_name, cdf_csv(split.kept));
        atomic_write(dir / hist_name, hist_csv(split.kept, histogram_bins));
        written.push_back(cdf_name);
        written.push_back(hist_name);
    }
    return written;
}

}  // namespace cg
