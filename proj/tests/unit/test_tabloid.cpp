#include <gtest/gtest.h>

#include <algorithm>
#include <map>

#include "specht/combinatorics.hpp"
#include "specht/errors.hpp"
#include "specht/hook_module.hpp"
#include "specht/tabloid.hpp"

using namespace specht;

namespace {

std::uint64_t factorial(int n)
{
    std::uint64_t f = 1;
    for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
    return f;
}

// f^lambda = n! / product of hook lengths
std::uint64_t hook_length_count(const Partition& p)
{
    const Partition c = p.conjugate();
    std::uint64_t prod = 1;
    for (int i = 0; i < p.length(); ++i)
        for (int j = 0; j < p[i]; ++j) prod *= static_cast<std::uint64_t>((p[i] - j - 1) + (c[j] - i - 1) + 1);
    return factorial(p.size()) / prod;
}

// Direct expansion of the signed column-group sum, keyed by row assignment.
std::map<std::vector<int>, long> brute_polytabloid(const Filling& t)
{
    std::vector<std::vector<int>> columns;
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) {
            if (columns.size() <= c) columns.resize(c + 1);
            columns[c].push_back(t[r][c]);
        }
    std::map<std::vector<int>, long> out;
    // iterate over the product of permutations of each column
    std::vector<std::vector<int>> perms(columns.size());
    for (std::size_t c = 0; c < columns.size(); ++c) {
        perms[c].resize(columns[c].size());
        for (std::size_t i = 0; i < perms[c].size(); ++i) perms[c][i] = static_cast<int>(i);
    }
    int n = 0;
    for (const auto& row : t) n += static_cast<int>(row.size());
    while (true) {
        std::vector<int> row_of(static_cast<std::size_t>(n));
        long sign = 1;
        for (std::size_t c = 0; c < columns.size(); ++c) {
            sign *= permutation_sign(perms[c]);
            for (std::size_t i = 0; i < columns[c].size(); ++i)
                row_of[static_cast<std::size_t>(columns[c][static_cast<std::size_t>(perms[c][i])])] = static_cast<int>(i);
        }
        out[row_of] += sign;
        std::size_t c = 0;
        while (c < perms.size() && !std::next_permutation(perms[c].begin(), perms[c].end())) ++c;
        if (c == perms.size()) break;
    }
    return out;
}

} // namespace

TEST(Tabloid, EqualityIgnoresOrderWithinRows)
{
    EXPECT_EQ(tabloid_of({{0, 1}, {2}}), tabloid_of({{1, 0}, {2}}));
    EXPECT_NE(tabloid_of({{0, 2}, {1}}), tabloid_of({{0, 1}, {2}}));
}

TEST(Polytabloid, SmallExamples)
{
    const TabloidSpace column(Partition({1, 1}));
    const auto v = polytabloid(column, {{0}, {1}});
    ASSERT_EQ(v.size(), 2u);
    EXPECT_EQ(v[column.index(tabloid_of({{0}, {1}}))], 1);
    EXPECT_EQ(v[column.index(tabloid_of({{1}, {0}}))], -1);

    const TabloidSpace row(Partition({2}));
    EXPECT_EQ(polytabloid(row, {{1, 0}}), (std::vector<std::int64_t>{1}));
}

TEST(Polytabloid, MatchesBruteForceExpansion)
{
    const Partition shape({2, 1, 1});
    const TabloidSpace space(shape);
    for (const Filling& t : {Filling{{0, 3}, {1}, {2}}, Filling{{2, 0}, {3}, {1}}}) {
        const auto v = polytabloid(space, t);
        const auto expected = brute_polytabloid(t);
        std::size_t nonzero = 0;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (v[i] == 0) continue;
            ++nonzero;
            EXPECT_EQ(v[i], expected.at(space.tabloids()[i].row_of));
        }
        EXPECT_EQ(nonzero, 6u);
    }
}

TEST(Polytabloid, RejectsBadFillings)
{
    const TabloidSpace space(Partition({2, 1}));
    EXPECT_THROW(polytabloid(space, {{0, 0}, {1}}), InvalidArgument);
    EXPECT_THROW(polytabloid(space, {{0, 1, 2}}), InvalidArgument);
    EXPECT_THROW(validate_filling(Partition({2, 1}), {{0, 1}, {3}}), InvalidArgument);
}

TEST(StandardTableaux, CountMatchesHookLengthFormula)
{
    for (const auto& parts : std::vector<std::vector<int>>{{3, 1}, {2, 2}, {3, 2, 1}, {4, 1, 1}, {2, 2, 2}, {5}, {1, 1, 1, 1}}) {
        const Partition p(parts);
        EXPECT_EQ(standard_tableaux(p).size(), hook_length_count(p)) << p.to_string();
    }
}

TEST(GeneralSpechtModule, DimensionsAndAction)
{
    EXPECT_EQ(GeneralSpechtModule::build(Partition({1}), 4).dimension(), 3u);
    EXPECT_EQ(GeneralSpechtModule::build(Partition({2}), 4).dimension(), 2u);
    EXPECT_EQ(GeneralSpechtModule::build(Partition({1, 1}), 6).dimension(), 10u);
    const auto mod = GeneralSpechtModule::build(Partition({2, 1}), 6);
    EXPECT_EQ(mod.dimension(), hook_length_count(Partition({3, 2, 1})));
    const Permutation s{1, 2, 0, 4, 5, 3}, u{0, 2, 1, 3, 5, 4};
    EXPECT_EQ(mod.action(compose(s, u)), mod.action(s) * mod.action(u));
}

TEST(GeneralSpechtModule, GuardsAndZeroModules)
{
    EXPECT_THROW(GeneralSpechtModule::build(Partition({1, 1}), 2), ZeroModuleError);
    EXPECT_THROW(GeneralSpechtModule::build(Partition({1}), 9), BudgetExceeded);
    EXPECT_NO_THROW(GeneralSpechtModule::build(Partition({1}), 9, 9));
}

TEST(GeneralHyperplane, StandardRepresentationFixedLine)
{
    const auto mod = GeneralSpechtModule::build(Partition({1}), 3);
    const RationalMatrix h = mod.hyperplane({{0, 1}, {2}});
    EXPECT_EQ(h.cols(), 1u);
    EXPECT_TRUE(same_column_space(h, nullspace(mod.action(transposition(3, 0, 1)) - RationalMatrix::identity(2))));
}

TEST(GeneralHyperplane, CodimensionOneAndGeneratorIndependent)
{
    const auto mod = GeneralSpechtModule::build(Partition({1, 1}), 5);
    for (const auto& alpha : all_subsets(5, 3)) {
        std::vector<std::vector<int>> blocks{alpha};
        for (int x = 0; x < 5; ++x)
            if (!std::binary_search(alpha.begin(), alpha.end(), x)) blocks.push_back({x});
        const RationalMatrix star = mod.hyperplane(blocks, GeneratorChoice::star);
        const RationalMatrix path = mod.hyperplane(blocks, GeneratorChoice::path);
        EXPECT_EQ(rank(star), mod.dimension() - 1);
        EXPECT_TRUE(same_column_space(star, path));
    }
    EXPECT_THROW(mod.hyperplane({{0, 1}, {2, 3}, {4}}), InvalidArgument);
}
