#include <gtest/gtest.h>

#include "specht/census.hpp"
#include "specht/errors.hpp"
#include "specht/estimator.hpp"
#include "specht/serialize.hpp"

using namespace specht;

TEST(Serialize, ReportsSurviveBothFormats)
{
    const SampleStore a = sample_lines(SampleConfig{6, 2, 3'000, 1, 1}, Arrangement::build(6, 2));
    const SampleStore b = sample_lines(SampleConfig{6, 2, 3'000, 2, 1}, Arrangement::build(6, 2));
    const CensusRow census = line_census(6, 2);
    const EstimateReport est = estimate_report(a, merge_stores(b, a), census);

    for (Format fmt : {Format::csv, Format::json}) {
        for (int n = 4; n <= 6; ++n) EXPECT_EQ(parse_census(to_text(line_census(n, 2), fmt)), line_census(n, 2));

        for (const KLBoundReport& rep : {kl_bound_report(6, 2, true), kl_bound_report(30, 2, false), kl_bound_report(5, 1, true)}) {
            const KLBoundReport back = parse_kl_bound_report(to_text(rep, fmt));
            EXPECT_EQ(back.n, rep.n);
            EXPECT_EQ(back.c1, rep.c1);
            EXPECT_EQ(back.corank1_count, rep.corank1_count);
            EXPECT_EQ(back.special_line_count, rep.special_line_count);
            EXPECT_EQ(back.f_value, rep.f_value);
            EXPECT_EQ(back.ratio, rep.ratio);
            EXPECT_EQ(to_text(back, fmt), to_text(rep, fmt));
        }

        const EstimateReport back = parse_estimate_report(to_text(est, fmt));
        EXPECT_EQ(back.rows, est.rows);
        EXPECT_EQ(back.sources_b, est.sources_b);
        EXPECT_EQ(back.same_seed, est.same_seed);
    }
}

TEST(Serialize, CsvFieldsAndErrors)
{
    for (const std::string v : {"plain", "with,comma", "with \"quote\"", "", "line\nbreak"}) {
        const auto fields = split_csv_line(csv_field(v) + "," + csv_field("x"));
        ASSERT_EQ(fields.size(), 2u);
        EXPECT_EQ(fields[0], v);
    }
    EXPECT_EQ(parse_format("json"), Format::json);
    EXPECT_THROW(parse_format("xml"), InvalidArgument);
    EXPECT_THROW(parse_census("n,l\n1"), InvalidArgument);
    EXPECT_THROW(parse_kl_bound_report("{not json"), InvalidArgument);
}

TEST(Serialize, CensusCsvLayout)
{
    const std::string text = to_text(line_census(5, 2), Format::csv);
    EXPECT_EQ(text.substr(0, text.find('\n')), "n,l,size,stable_count,unstable_count,total_lines,percent_unstable");
    EXPECT_NE(text.find("5,2,5,0,12,37,32.4"), std::string::npos);
}
