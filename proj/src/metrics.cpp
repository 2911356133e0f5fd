#include "codegauntlet/metrics.hpp"

#include <algorithm>
#include <cmath>

#include "codegauntlet/error.hpp"

namespace cg {

double round_half_up(double value, int decimals) {
    const double scale = std::pow(10.0, decimals);
    return std::floor(value * scale + 0.5) / scale;
}

double pass_at_k(const PassAtKInput& input, int k) {
    const int n = input.n, c = input.c;
    if (n < 1) throw DomainError("pass_at_k: n must be >= 1");
    if (c < 0 || c > n) throw DomainError("pass_at_k: require 0 <= c <= n");
    if (k < 1 || k > n) throw DomainError("pass_at_k: require 1 <= k <= n");

    if (n - c < k) return 1.0;
    // C(n-c,k)/C(n,k) = prod_{i=0}^{k-1} (n-c-i)/(n-i)
    double ratio = 1.0;
    for (int i = 0; i < k; ++i) ratio *= static_cast<double>(n - c - i) / static_cast<double>(n - i);
    return 1.0 - ratio;
}

double pass_at_1_rate(const std::vector<PassAtKInput>& records) {
    if (records.empty()) throw DomainError("pass_at_1_rate: empty record list");
    double sum = 0.0;
    for (const auto& r : records) {
        if (r.n < 1 || r.c < 0 || r.c > r.n) throw DomainError("pass_at_1_rate: bad (n, c) pair");
        sum += static_cast<double>(r.c) / static_cast<double>(r.n);
    }
    return 100.0 * sum / static_cast<double>(records.size());
}

SummaryStats summary_stats(const std::vector<double>& times) {
    if (times.empty()) throw DomainError("summary_stats: empty input");

    std::vector<double> sorted = times;
    std::sort(sorted.begin(), sorted.end());

    SummaryStats s;
    s.count = sorted.size();
    s.min = sorted.front();
    s.max = sorted.back();

    double sum = 0;
    for (double v : sorted) sum += v;
    s.mean = sum / static_cast<double>(s.count);

    const std::size_t mid = s.count / 2;
    s.median = (s.count % 2 == 1) ? sorted[mid] : (sorted[mid - 1] + sorted[mid]) / 2.0;

    if (s.count >= 2) {
        double ss = 0;
        for (double v : sorted) ss += (v - s.mean) * (v - s.mean);
        s.std_dev = std::sqrt(ss / static_cast<double>(s.count - 1));
        s.std_is_defined = true;
    }
    return s;
}

namespace {

// Quantile by linear interpolation between closest ranks on sorted data.
double quantile_sorted(const std::vector<double>& sorted, double q) {
    const double pos = q * static_cast<double>(sorted.size() - 1);
    const std::size_t lo = static_cast<std::size_t>(std::floor(pos));
    const std::size_t hi = static_cast<std::size_t>(std::ceil(pos));
    if (lo == hi) return sorted[lo];
    const double frac = pos - static_cast<double>(lo);
    return sorted[lo] + frac * (sorted[hi] - sorted[lo]);
}

}  // namespace

OutlierSplit iqr_outliers(const std::vector<double>& times) {
    OutlierSplit split;
    if (times.empty()) return split;

    std::vector<double> sorted = times;
    std::sort(sorted.begin(), sorted.end());

    if (sorted.size() < 4) {
        split.fences.q1 = sorted.front();
        split.fences.q3 = sorted.back();
        split.fences.iqr = split.fences.q3 - split.fences.q1;
        split.fences.lower = sorted.front();
        split.fences.upper = sorted.back();
        split.kept = std::move(sorted);
        return split;
    }

    split.fences.q1 = quantile_sorted(sorted, 0.25);
    split.fences.q3 = quantile_sorted(sorted, 0.75);
    split.fences.iqr = split.fences.q3 - split.fences.q1;
    split.fences.lower = split.fences.q1 - 1.5 * split.fences.iqr;
    split.fences.upper = split.fences.q3 + 1.5 * split.fences.iqr;

    for (double v : sorted) {
        if (v < split.fences.lower || v > split.fences.upper) split.outliers.push_back(v);
        else split.kept.push_back(v);
    }
    return split;
}

std::vector<std::pair<double, double>> cdf_points(const std::vector<double>& times) {
    if (times.empty()) throw DomainError("cdf_points: empty input");

    std::vector<double> sorted = times;
    std::sort(sorted.begin(), sorted.end());

    std::vector<std::pair<double, double>> points;
    const double n = static_cast<double>(sorted.size());
    for (std::size_t i = 0; i < sorted.size(); ++i) {
        const bool last_of_value = (i + 1 == sorted.size()) || sorted[i + 1] != sorted[i];
        if (last_of_value)
            points.emplace_back(sorted[i], static_cast<double>(i + 1) / n);
    }
    points.back().second = 1.0;  // i+1 == n divides exactly, but keep it pinned
    return points;
}

std::vector<HistogramBin> histogram(const std::vector<double>& times, int bin_count) {
    if (times.empty()) throw DomainError("histogram: empty input");
    if (bin_count < 1) throw DomainError("histogram: bin_count must be >= 1");

    const auto [mn_it, mx_it] = std::minmax_element(times.begin(), times.end());
    const double mn = *mn_it, mx = *mx_it;
    const double width = (mx - mn) / static_cast<double>(bin_count);

    std::vector<HistogramBin> bins(static_cast<std::size_t>(bin_count));
    for (int i = 0; i < bin_count; ++i) {
        bins[i].lo = mn + width * i;
        bins[i].hi = (i + 1 == bin_count) ? mx : mn + width * (i + 1);
    }
    for (double v : times) {
        int idx = (width > 0) ? static_cast<int>((v - mn) / width) : 0;
        idx = std::clamp(idx, 0, bin_count - 1);
        ++bins[static_cast<std::size_t>(idx)].count;
    }
    return bins;
}

const OutcomeTable& OutcomeTables::for_tier(Tier t) const {
    switch (t) {
        case Tier::Easy: return easy;
        case Tier::Medium: return medium;
        case Tier::Hard: return hard;
    }
    return hard;
}

OutcomeTables outcome_tables(const std::vector<JoinedRecord>& records) {
    OutcomeTables tables;
    tables.easy.tier = Tier::Easy;
    tables.medium.tier = Tier::Medium;
    tables.hard.tier = Tier::Hard;

    auto table_for = [&](Tier t) -> OutcomeTable& {
        switch (t) {
            case Tier::Easy: return tables.easy;
            case Tier::Medium: return tables.medium;
            case Tier::Hard: return tables.hard;
        }
        return tables.hard;
    };

    for (const auto& rec : records) {
        OutcomeTable& table = table_for(rec.tier);
        // Touch the model so a model of pure Other records still gets a row.
        table.counts.try_emplace(rec.model);
        table.totals.try_emplace(rec.model, 0);
        table.other_excluded.try_emplace(rec.model, 0);

        if (rec.category == VerdictCategory::Other) {
            ++table.other_excluded[rec.model];
            continue;
        }
        ++table.counts[rec.model][rec.category];
        ++table.totals[rec.model];
    }
    return tables;
}

std::vector<JoinedRecord> join_submissions(const ProblemCorpus& corpus,
                                           const DifficultyTiering& tiering,
                                           const std::vector<SubmissionsFile>& stores) {
    std::vector<JoinedRecord> joined;
    for (const auto& store : stores) {
        for (const auto& [id, rec] : store.entries) {
            const Problem* p = corpus.find(id);
            if (!p)
                throw StoreError("submission record for model \"" + store.model +
                                 "\" names unknown problem \"" + id + "\"");
            joined.push_back({store.model, tier_of(p->difficulty, tiering), rec.verdict.category});
        }
    }
    return joined;
}

AcceptanceRow make_acceptance_row(const std::string& model, std::uint64_t accepted,
                                  std::uint64_t total) {
    AcceptanceRow row{model, accepted, total, 0.0};
    if (total > 0)
        row.rate = round_half_up(100.0 * static_cast<double>(accepted) / static_cast<double>(total), 1);
    return row;
}

std::vector<AcceptanceRow> acceptance_table(const OutcomeTables& tables) {
    std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> per_model;  // accepted, total
    for (const OutcomeTable* table : {&tables.easy, &tables.medium, &tables.hard}) {
        for (const auto& [model, total] : table->totals) {
            auto& [acc, tot] = per_model[model];
            tot += total;
            auto it = table->counts.at(model).find(VerdictCategory::Accepted);
            if (it != table->counts.at(model).end()) acc += it->second;
        }
    }

    std::vector<AcceptanceRow> rows;
    rows.reserve(per_model.size());
    for (const auto& [model, at] : per_model) rows.push_back(make_acceptance_row(model, at.first, at.second));
    std::sort(rows.begin(), rows.end(), [](const AcceptanceRow& a, const AcceptanceRow& b) {
        if (a.rate != b.rate) return a.rate > b.rate;
        return a.model < b.model;
    });
    return rows;
}

}  // namespace cg
