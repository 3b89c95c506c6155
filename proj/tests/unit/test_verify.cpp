#include <gtest/gtest.h>

#include "specht/census.hpp"
#include "specht/verify.hpp"

using namespace specht;

TEST(Verify, DefaultBatteryPasses)
{
    for (const CheckResult& r : run_verify(VerifyOptions{})) EXPECT_TRUE(r.passed) << r.name << ": " << r.detail;
}

TEST(Verify, BraidArrangementAxioms)
{
    const Arrangement braid = Arrangement::build(6, 1);
    EXPECT_TRUE(check_rank_axioms(braid, 200, 3).passed);
    EXPECT_TRUE(check_closure_axioms(braid, 200, 3).passed);
    EXPECT_TRUE(check_equivariance(braid, 100, 3).passed);
}
