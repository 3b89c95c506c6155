#ifndef SPECHT_ESTIMATOR_HPP
#define SPECHT_ESTIMATOR_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "specht/census.hpp"
#include "specht/sampler.hpp"

namespace specht {

/// Two-round capture-recapture count for one size class.
struct EstimateRow {
    std::uint64_t size = 0;
    std::uint64_t count_a = 0;
    std::uint64_t count_b = 0;
    std::uint64_t overlap = 0;
    /// count_a * count_b / overlap; absent when any count is zero.
    std::optional<mpq_class> estimate;
    /// Both rounds found exactly the same lines; the class may be exhausted.
    bool saturated = false;
    std::optional<std::uint64_t> true_count;

    /// Nearest integer, ties up; "N/A" when absent.
    std::string estimate_display() const;
    /// estimate / true_count with `digits` decimals when both are known.
    std::optional<std::string> ratio_display(int digits = 4) const;

    friend bool operator==(const EstimateRow&, const EstimateRow&) = default;
};

EstimateRow estimate_row(std::uint64_t size, std::uint64_t count_a, std::uint64_t count_b, std::uint64_t overlap);

/// Rows for every size seen in either store, sorted by size. Throws StoreError when the
/// headers disagree on (n, l).
std::vector<EstimateRow> capture_recapture(const SampleStore& a, const SampleStore& b);

struct EstimateReport {
    int n = 0;
    int l = 0;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sources_a; ///< (seed, trials)
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sources_b;
    /// The rounds share a seed, so they are not independent and estimates collapse to counts.
    bool same_seed = false;
    std::vector<EstimateRow> rows;
};

/// capture_recapture plus provenance; with an exact census, true counts are attached and
/// sizes found only by the census get rows too.
EstimateReport estimate_report(const SampleStore& a, const SampleStore& b, const std::optional<CensusRow>& exact = {});

} // namespace specht

#endif // SPECHT_ESTIMATOR_HPP
