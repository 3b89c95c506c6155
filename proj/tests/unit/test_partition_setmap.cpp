#include <gtest/gtest.h>

#include <set>

#include "specht/errors.hpp"
#include "specht/partition.hpp"
#include "specht/set_map.hpp"

using namespace specht;

TEST(Partition, RejectsInvalidParts)
{
    EXPECT_THROW(Partition({1, 2}), InvalidArgument);
    EXPECT_THROW(Partition({2, 0}), InvalidArgument);
    EXPECT_THROW(Partition({-1}), InvalidArgument);
    EXPECT_NO_THROW(Partition());
}

TEST(Partition, ConjugateExamplesAndInvolution)
{
    EXPECT_EQ(Partition({2, 1, 1}).conjugate(), Partition({3, 1}));
    EXPECT_EQ(Partition().conjugate(), Partition());
    EXPECT_EQ(Partition({3, 1, 1}).conjugate(), Partition({3, 1, 1}));
    for (const auto& parts : std::vector<std::vector<int>>{{5, 3, 3, 1}, {4}, {1, 1, 1, 1}, {6, 2, 1}}) {
        const Partition p(parts);
        EXPECT_EQ(p.conjugate().conjugate(), p);
        EXPECT_EQ(p.conjugate().size(), p.size());
    }
}

TEST(Partition, HookShape)
{
    EXPECT_EQ(Partition::hook(5, 2), Partition({3, 1, 1}));
    EXPECT_EQ(Partition::hook(5, 2).conjugate(), Partition({3, 1, 1}));
    EXPECT_EQ(Partition::hook(7, 2).conjugate(), Partition({3, 1, 1, 1, 1}));
}

TEST(Pad, PaddedPartsAndZeroModuleSignal)
{
    auto p = pad(Partition({1, 1}), 5);
    ASSERT_TRUE(p.has_value());
    EXPECT_EQ(p->padded(), Partition({3, 1, 1}));
    EXPECT_EQ(pad(Partition({1}), 4)->padded(), Partition({3, 1}));
    EXPECT_EQ(pad(Partition({1, 1}), 3)->padded(), Partition({1, 1, 1}));
    EXPECT_FALSE(pad(Partition({1, 1}), 2).has_value());
    EXPECT_FALSE(pad(Partition({2}), 3).has_value());
}

TEST(SetMap, KindsAndValidation)
{
    EXPECT_EQ(SetMap(4, {0, 2, 3}).kind(), SetMapKind::injection);
    EXPECT_EQ(SetMap(2, {0, 1, 1}).kind(), SetMapKind::surjection);
    EXPECT_EQ(SetMap(3, {2, 0, 1}).kind(), SetMapKind::bijection);
    EXPECT_EQ(SetMap(3, {0, 0}).kind(), SetMapKind::other);
    EXPECT_THROW(SetMap(2, {0, 2}), InvalidArgument);
}

TEST(SetMap, FibersPartitionTheSource)
{
    const SetMap f = SetMap::from_blocks(std::vector<int>{0, 1, 0, 2, 1});
    EXPECT_TRUE(f.surjective());
    const auto fibers = f.fibers();
    ASSERT_EQ(fibers.size(), 3u);
    EXPECT_EQ(fibers[0], (std::vector<int>{0, 2}));
    EXPECT_EQ(fibers[1], (std::vector<int>{1, 4}));
    EXPECT_EQ(fibers[2], (std::vector<int>{3}));
}

TEST(SetMap, SectionsAreAllRightInverses)
{
    const SetMap f = SetMap::from_blocks(std::vector<int>{0, 0, 1, 1, 1, 2});
    const auto sections = f.sections();
    EXPECT_EQ(sections.size(), 2u * 3u * 1u);
    std::set<std::vector<int>> distinct;
    for (const auto& g : sections) {
        EXPECT_TRUE(g.injective());
        EXPECT_EQ(compose(f, g), SetMap::identity(3));
        distinct.insert(g.values());
    }
    EXPECT_EQ(distinct.size(), sections.size());
    EXPECT_THROW(SetMap(4, {0, 1}).sections(), InvalidArgument);
}

TEST(SetMap, ComposeAndInclusion)
{
    const SetMap inc = SetMap::inclusion(3, 5);
    EXPECT_EQ(inc.values(), (std::vector<int>{0, 1, 2}));
    const SetMap shift(5, {1, 2, 3, 4, 0});
    EXPECT_EQ(compose(shift, inc).values(), (std::vector<int>{1, 2, 3}));
}
