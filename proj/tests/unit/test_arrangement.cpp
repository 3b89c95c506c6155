#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "specht/arrangement.hpp"
#include "specht/census.hpp"
#include "specht/errors.hpp"
#include "specht/lattice.hpp"
#include "specht/rng.hpp"
#include "specht/verify.hpp"

using namespace specht;

namespace {

Permutation random_permutation(TrialStream& rng, int n)
{
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i) std::swap(p[static_cast<std::size_t>(i)], p[rng.below(static_cast<std::uint64_t>(i + 1))]);
    return p;
}

std::vector<int> random_indices(TrialStream& rng, int universe, int max_size)
{
    std::set<int> s;
    const auto k = rng.below(static_cast<std::uint64_t>(max_size + 1));
    for (std::uint64_t i = 0; i < k; ++i) s.insert(static_cast<int>(rng.below(static_cast<std::uint64_t>(universe))));
    return {s.begin(), s.end()};
}

int idx(const Arrangement& arr, Subset alpha) { return arr.index_of(alpha); }

} // namespace

TEST(Arrangement, SizesAndErrors)
{
    const Arrangement a4 = Arrangement::build(4, 2);
    EXPECT_EQ(a4.size(), 4u);
    EXPECT_EQ(a4.dimension(), 3u);
    EXPECT_EQ(Arrangement::build(6, 2).size(), 20u);
    EXPECT_EQ(Arrangement::build(6, 2).dimension(), 10u);
    EXPECT_EQ(Arrangement::build(7, 2).size(), 35u);
    EXPECT_EQ(Arrangement::build(7, 2).dimension(), 15u);
    EXPECT_THROW(Arrangement::build(2, 2), ZeroModuleError);
    EXPECT_THROW(Arrangement::build(5, 0), InvalidArgument);
    for (int j = 0; j < 20; ++j) EXPECT_EQ(Arrangement::build(6, 2).index_of(Arrangement::build(6, 2).label(j)), j);
}

TEST(Arrangement, NormalsPairwiseNonParallel)
{
    for (int n = 4; n <= 6; ++n) {
        const Arrangement arr = Arrangement::build(n, 2);
        for (int i = 0; i < static_cast<int>(arr.size()); ++i)
            for (int j = i + 1; j < static_cast<int>(arr.size()); ++j) EXPECT_EQ(arr.rank(std::vector<int>{i, j}), 2u);
    }
}

TEST(Rank, ExamplesAndIndexValidation)
{
    const Arrangement a4 = Arrangement::build(4, 2);
    EXPECT_EQ(a4.rank({}), 0u);
    EXPECT_EQ(a4.rank(std::vector<int>{0, 1, 2, 3}), 3u);
    EXPECT_THROW(a4.rank(std::vector<int>{4}), InvalidArgument);
    EXPECT_THROW(a4.closure(std::vector<int>{-1}), InvalidArgument);
}

TEST(Rank, InvariantUnderPermutations)
{
    const Arrangement arr = Arrangement::build(6, 2);
    for (std::uint64_t t = 0; t < 200; ++t) {
        TrialStream rng(31, t);
        const auto s = random_indices(rng, 20, 12);
        EXPECT_EQ(arr.rank(s), arr.rank(arr.permute(random_permutation(rng, 6), s)));
    }
}

TEST(Closure, FourPointExamples)
{
    const Arrangement a4 = Arrangement::build(4, 2);
    const int h012 = idx(a4, {0, 1, 2}), h013 = idx(a4, {0, 1, 3});
    const Flat plane = a4.closure(std::vector<int>{h012});
    EXPECT_EQ(plane.key, std::vector<int>{h012});
    EXPECT_EQ(plane.dimension, 2);
    const Flat line = a4.closure(std::vector<int>{h012, h013});
    EXPECT_EQ(line.dimension, 1);
    EXPECT_EQ(line.size(), 2u);
    const Flat whole = a4.closure({});
    EXPECT_EQ(whole.dimension, 3);
    EXPECT_TRUE(whole.key.empty());
}

TEST(Closure, IdempotentAndEquivariantAtSix)
{
    const Arrangement arr = Arrangement::build(6, 2);
    for (std::uint64_t t = 0; t < 500; ++t) {
        TrialStream rng(32, t);
        const auto s = random_indices(rng, 20, 10);
        const Flat f = arr.closure(s);
        EXPECT_EQ(arr.closure(f.key).key, f.key);
        const Permutation sigma = random_permutation(rng, 6);
        const Flat g = arr.closure(arr.permute(sigma, s));
        EXPECT_EQ(g.key, arr.permute(sigma, f.key));
        EXPECT_EQ(g.dimension, f.dimension);
    }
}

TEST(MatroidAxioms, RandomSubsets)
{
    for (int l = 1; l <= 2; ++l)
        for (int n = l + 2; n <= 6; ++n) {
            const Arrangement arr = Arrangement::build(n, l);
            EXPECT_TRUE(check_rank_axioms(arr, 150, 33).passed) << n << "," << l;
            EXPECT_TRUE(check_closure_axioms(arr, 80, 34).passed) << n << "," << l;
            EXPECT_TRUE(check_equivariance(arr, 10, 35).passed) << n << "," << l;
        }
}

TEST(SpecialFlat, MergingTwoPoints)
{
    const Arrangement a4 = Arrangement::build(4, 2);
    const SpecialFlat f4 = special_flat(a4, SetMap(3, {0, 0, 1, 2}));
    EXPECT_EQ(f4.flat.key, (std::vector<int>{idx(a4, {0, 1, 2}), idx(a4, {0, 1, 3})}));
    EXPECT_EQ(f4.flat.dimension, 1);
    EXPECT_FALSE(f4.degenerate);

    const Arrangement a5 = Arrangement::build(5, 2);
    const SpecialFlat f5 = special_flat(a5, SetMap(4, {0, 0, 1, 2, 3}));
    EXPECT_EQ(f5.flat.key, (std::vector<int>{idx(a5, {0, 1, 2}), idx(a5, {0, 1, 3}), idx(a5, {0, 1, 4})}));
    EXPECT_EQ(f5.flat.dimension, 3);
    EXPECT_EQ(f5.flat.stable, std::optional<bool>(true));
    // same subspace as the fixed space of (0 1)
    EXPECT_TRUE(same_column_space(flat_subspace(a5, f5.flat), fixed_space(a5.module().action(transposition(5, 0, 1)))));
}

TEST(SpecialFlat, DimensionIsBinomialForEverySurjection)
{
    for (int n = 3; n <= 7; ++n) {
        const Arrangement arr = Arrangement::build(n, 2);
        for (int m = 3; m <= n; ++m)
            for (const auto& blocks : set_partitions(n, m)) {
                const SpecialFlat sf = special_flat(arr, SetMap::from_blocks(blocks));
                EXPECT_EQ(static_cast<std::uint64_t>(sf.flat.dimension), binomial(m - 1, 2));
            }
    }
}

TEST(SpecialFlat, EqualsFixedSpaceOfTheFiberGroup)
{
    const Arrangement arr = Arrangement::build(5, 2);
    for (int m = 3; m <= 4; ++m)
        for (const auto& blocks : set_partitions(5, m)) {
            const SetMap f = SetMap::from_blocks(blocks);
            RationalMatrix fixed = RationalMatrix::identity(arr.dimension());
            for (const auto& fiber : f.fibers())
                for (std::size_t i = 1; i < fiber.size(); ++i) {
                    const RationalMatrix act(arr.module().action(transposition(5, fiber[0], fiber[i])));
                    // restrict to the part of `fixed` that the transposition also fixes
                    const RationalMatrix coeffs = nullspace(act * fixed - fixed);
                    fixed = fixed * coeffs;
                }
            EXPECT_TRUE(same_column_space(flat_subspace(arr, special_flat(arr, f).flat), fixed));
        }
}

TEST(SpecialFlat, DegenerateBelowTheHookWidth)
{
    const Arrangement arr = Arrangement::build(4, 2);
    const SpecialFlat sf = special_flat(arr, SetMap(2, {0, 0, 1, 1}));
    EXPECT_TRUE(sf.degenerate);
    EXPECT_EQ(sf.flat.dimension, 0);
    EXPECT_EQ(sf.flat.size(), arr.size());
    EXPECT_THROW(special_flat(arr, SetMap(4, {0, 1, 2, 2})), InvalidArgument);
}

TEST(SpecialFlat, DistinctFibersGiveDistinctFlats)
{
    const Arrangement arr = Arrangement::build(7, 2);
    const SpecialFlatCensus c = special_flat_census(arr, 3);
    EXPECT_EQ(c.surjection_types, 301u);
    EXPECT_EQ(c.distinct_flats, 301u);
    EXPECT_EQ(c.dimensions.at(1), 301u);
}

TEST(Stability, ExamplesAndFullSpace)
{
    const Arrangement a4 = Arrangement::build(4, 2);
    for (const Flat& f : enumerate_lines(a4)) EXPECT_TRUE(is_stable(a4, f));
    EXPECT_FALSE(is_stable(a4, a4.closure({})));
    const Arrangement a5 = Arrangement::build(5, 2);
    const auto lines = enumerate_lines(a5);
    EXPECT_EQ(std::count_if(lines.begin(), lines.end(), [&](const Flat& f) { return !is_stable(a5, f); }), 12);
}

TEST(Stability, CombinatorialAgreesWithFixedSpaceOnAllLines)
{
    for (int n = 4; n <= 6; ++n) {
        const Arrangement arr = Arrangement::build(n, 2);
        const CheckResult r = check_stability_agreement(arr, enumerate_lines(arr));
        EXPECT_TRUE(r.passed) << r.detail;
    }
}

TEST(EnumerateLines, FrozenSizesAndWorkerInvariance)
{
    const auto sizes = [](const std::vector<Flat>& lines) {
        std::set<std::size_t> s;
        for (const auto& f : lines) s.insert(f.size());
        return s;
    };
    const Arrangement a4 = Arrangement::build(4, 2), a5 = Arrangement::build(5, 2), a6 = Arrangement::build(6, 2);
    EXPECT_EQ(enumerate_lines(a4).size(), 6u);
    EXPECT_EQ(sizes(enumerate_lines(a4)), (std::set<std::size_t>{2}));
    EXPECT_EQ(sizes(enumerate_lines(a5)), (std::set<std::size_t>{5, 6, 7}));
    const auto single = enumerate_lines(a6);
    EXPECT_EQ(single.size(), 570u);
    EXPECT_EQ(sizes(single), (std::set<std::size_t>{9, 10, 12, 14, 16}));
    const auto multi = enumerate_lines(a6, EnumerationOptions{10'000'000, 3});
    ASSERT_EQ(multi.size(), single.size());
    for (std::size_t i = 0; i < single.size(); ++i) {
        EXPECT_EQ(multi[i].key, single[i].key);
        EXPECT_EQ(multi[i].stable, single[i].stable);
    }
}

TEST(EnumerateLines, BudgetPointsAtTheSampler)
{
    const Arrangement a7 = Arrangement::build(7, 2);
    try {
        enumerate_lines(a7);
        FAIL() << "expected BudgetExceeded";
    } catch (const BudgetExceeded& e) {
        EXPECT_NE(std::string(e.what()).find("sample"), std::string::npos);
    }
    EXPECT_THROW(enumerate_lines(Arrangement::build(5, 2), EnumerationOptions{100, 1}), BudgetExceeded);
}

TEST(EnumerateRank1Flats, CountsAreHyperplaneCounts)
{
    EXPECT_EQ(enumerate_rank1_flats(Arrangement::build(5, 1)).size(), 10u);
    EXPECT_EQ(enumerate_rank1_flats(Arrangement::build(5, 2)).size(), 10u);
    // 20 = C(6,3) distinguishes from C(6,2) = 15
    EXPECT_EQ(enumerate_rank1_flats(Arrangement::build(6, 2)).size(), 20u);
}

TEST(Contraction, FullSpaceGivesTheSameLattice)
{
    const Arrangement a4 = Arrangement::build(4, 2);
    const Contraction c = contraction(a4, a4.closure({}));
    EXPECT_EQ(c.arrangement.size(), a4.size());
    EXPECT_TRUE(lattice_isomorphic(enumerate_lattice(c.arrangement), enumerate_lattice(a4)));
}

TEST(Contraction, SpecialFlatsOfFivePointsLookLikeFourPoints)
{
    const CheckResult r = check_contraction_to_special_flats(5, 2);
    EXPECT_TRUE(r.passed) << r.detail;
    const Arrangement a5 = Arrangement::build(5, 2);
    const Contraction c = contraction(a5, special_flat(a5, SetMap(4, {0, 0, 1, 2, 3})).flat);
    EXPECT_TRUE(lattice_isomorphic(enumerate_lattice(c.arrangement), enumerate_lattice(Arrangement::build(4, 2))));
}

TEST(Contraction, FlatsAreTheFlatsBelow)
{
    // flats of A^F correspond to flats of A contained in F
    const Arrangement a5 = Arrangement::build(5, 2);
    const FlatLattice all = enumerate_lattice(a5);
    const Flat f = special_flat(a5, SetMap(4, {0, 1, 1, 2, 3})).flat;
    const Contraction c = contraction(a5, f);
    std::size_t below = 0;
    for (const auto& key : all.flats)
        if (std::includes(key.begin(), key.end(), f.key.begin(), f.key.end())) ++below;
    EXPECT_EQ(enumerate_lattice(c.arrangement).size(), below);
}

TEST(Restriction, FlatsAreTheFlatsAbove)
{
    const Arrangement a5 = Arrangement::build(5, 2);
    EXPECT_EQ(restriction(a5, a5.closure({})).arrangement.size(), 0u);
    const FlatLattice all = enumerate_lattice(a5);
    const auto lines = enumerate_lines(a5);
    for (const Flat& f : {a5.closure(std::vector<int>{0}), lines.front(), lines.back()}) {
        const Restriction r = restriction(a5, f);
        std::size_t above = 0;
        for (const auto& key : all.flats)
            if (std::includes(f.key.begin(), f.key.end(), key.begin(), key.end())) ++above;
        EXPECT_EQ(enumerate_lattice(r.arrangement).size(), above);
        EXPECT_EQ(r.arrangement.dimension(), a5.dimension() - static_cast<std::size_t>(f.dimension));
    }
}

TEST(GenericArrangement, HookAccessorsThrow)
{
    IntMatrix normals(0, 2);
    normals.append_row(std::vector<std::int64_t>{1, 0});
    normals.append_row(std::vector<std::int64_t>{0, 1});
    normals.append_row(std::vector<std::int64_t>{1, 1});
    const Arrangement arr = Arrangement::from_normals(2, normals);
    EXPECT_FALSE(arr.is_hook());
    EXPECT_THROW(arr.module(), InvalidArgument);
    EXPECT_EQ(arr.closure(std::vector<int>{0, 1}).key, (std::vector<int>{0, 1, 2}));
}
