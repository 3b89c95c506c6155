#include <gtest/gtest.h>

#include "specht/census.hpp"
#include "specht/errors.hpp"
#include "specht/estimator.hpp"

using namespace specht;

namespace {

SampleStore run(int n, std::uint64_t trials, std::uint64_t seed)
{
    return sample_lines(SampleConfig{n, 2, trials, seed, 1}, Arrangement::build(n, 2));
}

} // namespace

TEST(EstimateRow, ReferenceRows)
{
    const EstimateRow a = estimate_row(23, 162, 173, 1);
    EXPECT_EQ(a.estimate, mpq_class(28026));
    EXPECT_EQ(a.estimate_display(), "28026");
    EXPECT_FALSE(a.saturated);

    const EstimateRow b = estimate_row(30, 1620, 1620, 1620);
    EXPECT_EQ(b.estimate_display(), "1620");
    EXPECT_TRUE(b.saturated);

    const EstimateRow c = estimate_row(17, 6, 11, 0);
    EXPECT_FALSE(c.estimate.has_value());
    EXPECT_EQ(c.estimate_display(), "N/A");
    EXPECT_FALSE(c.saturated);
    EXPECT_FALSE(c.ratio_display().has_value());
}

TEST(EstimateRow, RoundingAndValidation)
{
    EXPECT_EQ(estimate_row(1, 3, 5, 2).estimate_display(), "8"); // 7.5 rounds up
    EXPECT_EQ(estimate_row(1, 7, 3, 5 - 2).estimate_display(), "7");
    EXPECT_EQ(estimate_row(1, 0, 0, 0).estimate_display(), "N/A");
    EXPECT_FALSE(estimate_row(1, 0, 0, 0).saturated);
    EXPECT_THROW(estimate_row(1, 3, 5, 4), InvalidArgument);

    EstimateRow r = estimate_row(1, 10, 20, 4);
    r.true_count = 40;
    EXPECT_EQ(r.ratio_display(), std::optional<std::string>("1.2500"));
}

TEST(CaptureRecapture, IdenticalStoresAreSaturated)
{
    const SampleStore a = run(6, 20'000, 1);
    for (const EstimateRow& r : capture_recapture(a, a)) {
        EXPECT_TRUE(r.saturated);
        EXPECT_EQ(r.estimate, mpq_class(r.count_a));
    }
    const EstimateReport rep = estimate_report(a, a);
    EXPECT_TRUE(rep.same_seed);
}

TEST(CaptureRecapture, SymmetricAndCountsConsistent)
{
    const SampleStore a = run(6, 20'000, 1);
    const SampleStore b = run(6, 20'000, 2);
    const auto ab = capture_recapture(a, b);
    const auto ba = capture_recapture(b, a);
    ASSERT_EQ(ab.size(), ba.size());
    std::uint64_t total_a = 0, total_b = 0;
    for (std::size_t i = 0; i < ab.size(); ++i) {
        EXPECT_EQ(ab[i].count_a, ba[i].count_b);
        EXPECT_EQ(ab[i].overlap, ba[i].overlap);
        EXPECT_EQ(ab[i].estimate, ba[i].estimate);
        EXPECT_LE(ab[i].overlap, std::min(ab[i].count_a, ab[i].count_b));
        total_a += ab[i].count_a;
        total_b += ab[i].count_b;
    }
    EXPECT_EQ(total_a, a.records.size());
    EXPECT_EQ(total_b, b.records.size());
    EXPECT_FALSE(estimate_report(a, b).same_seed);
}

TEST(CaptureRecapture, EmptyRoundGivesNoEstimates)
{
    const SampleStore a = run(6, 5'000, 1);
    SampleStore empty = run(6, 5'000, 2);
    empty.records.clear();
    for (const EstimateRow& r : capture_recapture(a, empty)) {
        EXPECT_EQ(r.count_b, 0u);
        EXPECT_EQ(r.estimate_display(), "N/A");
    }
    EXPECT_THROW(capture_recapture(a, run(5, 100, 1)), StoreError);
}

TEST(EstimateReport, AttachesExactCounts)
{
    const SampleStore a = run(6, 2'000, 1);
    const SampleStore b = run(6, 2'000, 2);
    const CensusRow census = line_census(6, 2);
    const EstimateReport rep = estimate_report(a, b, census);
    ASSERT_EQ(rep.rows.size(), census.size_histogram.size());
    for (const EstimateRow& r : rep.rows) {
        ASSERT_TRUE(r.true_count.has_value());
        EXPECT_EQ(*r.true_count, census.size_histogram.at(r.size).total());
        EXPECT_LE(r.count_a, *r.true_count);
    }
    EXPECT_EQ(rep.sources_a, (std::vector<std::pair<std::uint64_t, std::uint64_t>>{{1, 2'000}}));
}
