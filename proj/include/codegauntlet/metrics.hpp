#ifndef CODEGAUNTLET_METRICS_HPP
#define CODEGAUNTLET_METRICS_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "codegauntlet/corpus.hpp"
#include "codegauntlet/stores.hpp"
#include "codegauntlet/verdict.hpp"

namespace cg {

// Round-half-up at `decimals` places, the convention used for displayed
// percentages.
double round_half_up(double value, int decimals);

// ---- pass@k ----

// n samples generated for one problem, c of them passing all tests.
struct PassAtKInput {
    int n = 1;
    int c = 0;
};

// Unbiased estimator 1 - C(n-c,k)/C(n,k), evaluated as a running product so
// large n never touches factorials. Exactly 1 when n-c < k, exactly 0 when
// c == 0. Throws DomainError outside 1 <= k <= n, 0 <= c <= n.
double pass_at_k(const PassAtKInput& input, int k);

// Mean of c/n across problems, as a percentage. With n = 1 everywhere this
// is the plain acceptance rate. Throws DomainError on an empty list.
double pass_at_1_rate(const std::vector<PassAtKInput>& records);

// ---- generation-time statistics ----

struct SummaryStats {
    double mean = 0, median = 0, std_dev = 0, min = 0, max = 0;
    std::size_t count = 0;
    bool std_is_defined = false;  // false when count < 2 (std reported as 0)
};

// Sample standard deviation (n-1 divisor); median averages the middle pair
// for even counts. Throws DomainError on an empty list.
SummaryStats summary_stats(const std::vector<double>& times);

struct OutlierFences {
    double q1 = 0, q3 = 0, iqr = 0, lower = 0, upper = 0;
};

struct OutlierSplit {
    OutlierFences fences;
    std::vector<double> outliers;  // strictly outside [lower, upper]
    std::vector<double> kept;      // sorted; kept + outliers == input as multisets
};

// Box-plot rule with quartiles by linear interpolation between closest
// ranks (position q*(count-1) on the sorted data). Fewer than 4 values:
// no outliers, fences degenerate to [min, max].
OutlierSplit iqr_outliers(const std::vector<double>& times);

// Empirical CDF over distinct values, ascending; last fraction is exactly
// 1.0. Throws DomainError on an empty list.
std::vector<std::pair<double, double>> cdf_points(const std::vector<double>& times);

struct HistogramBin {
    double lo = 0, hi = 0;
    std::uint64_t count = 0;
};

// Equal-width bins over [min, max]; the max value lands in the last bin;
// counts always sum to the input size. Throws DomainError on an empty list
// or bin_count < 1.
std::vector<HistogramBin> histogram(const std::vector<double>& times, int bin_count);

// ---- verdict tables ----

// One judged (model, problem) pair joined with its difficulty tier.
struct JoinedRecord {
    std::string model;
    Tier tier = Tier::Easy;
    VerdictCategory category = VerdictCategory::Other;
};

struct OutcomeTable {
    Tier tier = Tier::Easy;
    // model -> tracked category -> count; Other never appears here.
    std::map<std::string, std::map<VerdictCategory, std::uint64_t>> counts;
    std::map<std::string, std::uint64_t> totals;          // sum of tracked counts
    std::map<std::string, std::uint64_t> other_excluded;  // dropped Other records
};

struct OutcomeTables {
    OutcomeTable easy, medium, hard;

    const OutcomeTable& for_tier(Tier t) const;
};

OutcomeTables outcome_tables(const std::vector<JoinedRecord>& records);

// Joins each model's submission records with problem tiers. Throws
// StoreError when a record's problem id is not in the corpus.
std::vector<JoinedRecord> join_submissions(const ProblemCorpus& corpus,
                                           const DifficultyTiering& tiering,
                                           const std::vector<SubmissionsFile>& stores);

struct AcceptanceRow {
    std::string model;
    std::uint64_t accepted = 0;
    std::uint64_t total = 0;   // Other-excluded
    double rate = 0;           // percent, rounded half-up to one decimal

    bool operator==(const AcceptanceRow&) const = default;
};

AcceptanceRow make_acceptance_row(const std::string& model, std::uint64_t accepted,
                                  std::uint64_t total);

// Per-model acceptance over all tiers, sorted by rate descending, ties by
// model name ascending.
std::vector<AcceptanceRow> acceptance_table(const OutcomeTables& tables);

}  // namespace cg

#endif
