#include <gtest/gtest.h>

#include <algorithm>

#include "specht/combinatorics.hpp"
#include "specht/errors.hpp"
#include "specht/hook_module.hpp"
#include "specht/rng.hpp"
#include "specht/tabloid.hpp"
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

// Character of the k-th exterior power of the permutation representation: the sum,
// over k-subsets S with sigma(S) = S, of the sign of sigma restricted to S.
long exterior_character(const Permutation& sigma, int k)
{
    const int n = static_cast<int>(sigma.size());
    long chi = 0;
    for (const auto& s : all_subsets(n, k)) {
        std::vector<int> image;
        for (int x : s) image.push_back(sigma[static_cast<std::size_t>(x)]);
        std::vector<int> sorted = image;
        std::sort(sorted.begin(), sorted.end());
        if (sorted != s) continue;
        chi += sort_sign(image);
    }
    return chi;
}

// Wedge^l(Q^n) = Wedge^l(std) + Wedge^(l-1)(std), so chi_l(std) = sum_j (-1)^j chi_{l-j}(Q^n).
long hook_character(const Permutation& sigma, int l)
{
    long chi = 0;
    for (int j = 0; j <= l; ++j) chi += (j % 2 == 0 ? 1 : -1) * exterior_character(sigma, l - j);
    return chi;
}

long trace(const IntMatrix& m)
{
    long t = 0;
    for (std::size_t i = 0; i < m.rows(); ++i) t += m(i, i);
    return t;
}

RationalMatrix column_of(std::span<const std::int64_t> v)
{
    RationalMatrix m(v.size(), 1);
    for (std::size_t i = 0; i < v.size(); ++i) m(i, 0) = static_cast<long>(v[i]);
    return m;
}

} // namespace

TEST(HookModule, DimensionIsBinomial)
{
    for (int n = 2; n <= 10; ++n)
        for (int l = 1; l + 1 < n; ++l) EXPECT_EQ(HookModule::build(n, l).dimension(), binomial(n - 1, l));
    EXPECT_EQ(HookModule::build(4, 2).dimension(), 3u);
    EXPECT_EQ(HookModule::build(7, 2).dimension(), 15u);
    EXPECT_EQ(HookModule::build(5, 0).dimension(), 1u);
    EXPECT_TRUE(HookModule::build(2, 2).is_zero());
}

TEST(HookModule, ActionIsAHomomorphismWithTheRightCharacter)
{
    for (int l = 1; l <= 3; ++l) {
        const HookModule mod = HookModule::build(6, l);
        for (std::uint64_t t = 0; t < 30; ++t) {
            TrialStream rng(21, t);
            const Permutation s = random_permutation(rng, 6), u = random_permutation(rng, 6);
            const RationalMatrix lhs(mod.action(compose(s, u)));
            EXPECT_EQ(lhs, RationalMatrix(mod.action(s)) * RationalMatrix(mod.action(u)));
            EXPECT_EQ(trace(mod.action(s)), hook_character(s, l));
        }
    }
    const HookModule std3 = HookModule::build(3, 1);
    EXPECT_EQ(trace(std3.action(transposition(3, 0, 1))), 0);
}

TEST(HookModule, InvariantGramIsPreserved)
{
    const HookModule mod = HookModule::build(6, 2);
    const RationalMatrix g(mod.invariant_gram());
    for (std::uint64_t t = 0; t < 20; ++t) {
        TrialStream rng(22, t);
        const RationalMatrix a(mod.action(random_permutation(rng, 6)));
        EXPECT_EQ(a.transpose() * g * a, g);
    }
    EXPECT_EQ(rank(g), mod.dimension());
}

TEST(HookModule, NormalShapeAndBraidCase)
{
    const HookModule mod = HookModule::build(6, 2);
    for (const auto& alpha : all_subsets(6, 3)) {
        const auto w = mod.normal(alpha);
        const auto nonzero = std::count_if(w.begin(), w.end(), [](std::int64_t v) { return v != 0; });
        EXPECT_EQ(nonzero, alpha[0] == 0 ? 1 : 3);
        EXPECT_TRUE(std::all_of(w.begin(), w.end(), [](std::int64_t v) { return v >= -1 && v <= 1; }));
    }
    // braid case: the normal of {0,1} is e_1 - e_0 in n-space
    const HookModule braid = HookModule::build(3, 1);
    const RationalMatrix e(braid.exterior_embedding());
    const auto w = braid.normal(Subset{0, 1});
    const RationalMatrix image = e * column_of(w);
    EXPECT_EQ(primitive_integer_vector(image), (std::vector<std::int64_t>{1, -1, 0}));
    EXPECT_THROW(mod.normal(Subset{0, 1}), InvalidArgument);
}

TEST(HookModule, FourPointNormalsAreInGeneralPosition)
{
    const HookModule mod = HookModule::build(4, 2);
    IntMatrix all(0, 3);
    for (const auto& alpha : all_subsets(4, 3)) all.append_row(mod.normal(alpha));
    for (int k = 2; k <= 3; ++k)
        for (const auto& rows : all_subsets(4, k)) EXPECT_EQ(exact_rank(all.select_rows(rows)), static_cast<std::size_t>(k));
}

TEST(HookModule, NormalsAreEquivariant)
{
    for (int l = 1; l <= 2; ++l) {
        const HookModule mod = HookModule::build(6, l);
        for (std::uint64_t t = 0; t < 100; ++t) {
            TrialStream rng(23, t);
            const Permutation s = random_permutation(rng, 6);
            const Subset alpha = lex_unrank(rng.below(binomial(6, l + 1)), 6, l + 1);
            const RationalMatrix moved = RationalMatrix(mod.action(s)) * column_of(mod.normal(alpha));
            EXPECT_EQ(primitive_integer_vector(moved), mod.normal(specht::apply(s, alpha)));
        }
    }
}

TEST(HookModule, PolytabloidHyperplaneIsOrthogonalToTheNormal)
{
    // lambda = (1,1), n = 4, alpha = {0,1,2} with the singleton {3}
    const GeneralSpechtModule general = GeneralSpechtModule::build(Partition({1, 1}), 4);
    const RationalMatrix psi(hook_tabloid_to_exterior(general.space()));
    const RationalMatrix h = psi * general.basis() * general.hyperplane({{0, 1, 2}, {3}});
    EXPECT_EQ(h.cols(), 2u);
    EXPECT_EQ(rank(h), 2u);
    const HookModule mod = HookModule::build(4, 2);
    const RationalMatrix w = RationalMatrix(mod.exterior_embedding()) * column_of(mod.normal(Subset{0, 1, 2}));
    EXPECT_TRUE((w.transpose() * h).is_zero());
    const RationalMatrix other = RationalMatrix(mod.exterior_embedding()) * column_of(mod.normal(Subset{0, 1, 3}));
    EXPECT_FALSE((other.transpose() * h).is_zero());
}

TEST(InducedMap, IdentityRankAndFunctoriality)
{
    EXPECT_EQ(induced_map(SetMap::identity(5), 2), LinearMap::identity(6));
    const LinearMap inc = induced_map(SetMap::inclusion(3, 4), 1);
    EXPECT_EQ(rank(inc.matrix()), 2u);
    EXPECT_THROW(induced_map(SetMap(2, {0, 1, 1}), 1), InvalidArgument);

    for (std::uint64_t t = 0; t < 50; ++t) {
        TrialStream rng(24, t);
        const int a = 3 + static_cast<int>(rng.below(3));
        const int b = a + static_cast<int>(rng.below(2));
        const int c = b + static_cast<int>(rng.below(8 - b));
        auto random_injection = [&](int from, int to) {
            Permutation p = random_permutation(rng, to);
            return SetMap(to, std::vector<int>(p.begin(), p.begin() + from));
        };
        const SetMap f = random_injection(a, b), g = random_injection(b, c);
        const LinearMap gf = induced_map(compose(g, f), 2);
        EXPECT_EQ(gf, compose(induced_map(g, 2), induced_map(f, 2)));
        EXPECT_TRUE(gf.injective());
    }
}

TEST(WedgePower, FunctorialForArbitrarySetMaps)
{
    for (std::uint64_t t = 0; t < 40; ++t) {
        TrialStream rng(25, t);
        auto random_map = [&](int from, int to) {
            std::vector<int> v(static_cast<std::size_t>(from));
            for (auto& x : v) x = static_cast<int>(rng.below(static_cast<std::uint64_t>(to)));
            return SetMap(to, v);
        };
        const SetMap f = random_map(5, 4), g = random_map(4, 6);
        const RationalMatrix lhs(wedge_power(compose(g, f), 2));
        EXPECT_EQ(lhs, RationalMatrix(wedge_power(g, 2)) * RationalMatrix(wedge_power(f, 2)));
    }
}

TEST(SectionAverage, BijectionIsTheInverseMap)
{
    const SetMap f(4, {2, 0, 3, 1});
    std::vector<int> inv(4);
    for (int i = 0; i < 4; ++i) inv[static_cast<std::size_t>(f(i))] = i;
    EXPECT_EQ(section_average(f, 2), induced_map(SetMap(4, inv), 2));
    EXPECT_THROW(section_average(SetMap(3, {0, 1}), 1), InvalidArgument);
}

TEST(SectionAverage, FixedByFiberTranspositions)
{
    for (int n = 3; n <= 6; ++n)
        for (int m = 3; m <= n; ++m)
            for (const auto& blocks : set_partitions(n, m)) {
                const SetMap f = SetMap::from_blocks(blocks);
                const LinearMap phi = section_average(f, 2);
                const HookModule mod = HookModule::build(n, 2);
                for (const auto& fiber : f.fibers())
                    for (std::size_t i = 0; i < fiber.size(); ++i)
                        for (std::size_t j = i + 1; j < fiber.size(); ++j) {
                            const RationalMatrix act(mod.action(transposition(n, fiber[i], fiber[j])));
                            EXPECT_EQ(act * phi.matrix(), phi.matrix());
                        }
            }
}

TEST(SectionAverage, IsASectionOfThePushForward)
{
    for (int n = 3; n <= 6; ++n) EXPECT_TRUE(check_section_average(n, 2).passed) << n;
}
