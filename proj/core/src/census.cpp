#include "specht/census.hpp"

#include <algorithm>
#include <set>
#include <string>

#include "specht/combinatorics.hpp"
#include "specht/errors.hpp"
#include "specht/numeric_format.hpp"

namespace specht {

std::uint64_t CensusRow::unstable_total() const
{
    std::uint64_t u = 0;
    for (const auto& [size, c] : size_histogram) u += c.unstable;
    return u;
}

std::string CensusRow::percent_unstable() const
{
    return percent_string(unstable_total(), total_lines);
}

std::string CensusRow::percent_stable() const
{
    return percent_string(stable_total(), total_lines);
}

CensusRow census_from_lines(int n, int l, const std::vector<Flat>& lines)
{
    CensusRow row;
    row.n = n;
    row.l = l;
    row.total_lines = lines.size();
    for (const auto& f : lines) {
        if (!f.stable) throw InvalidArgument("census needs stability-classified lines");
        auto& c = row.size_histogram[f.size()];
        (*f.stable ? c.stable : c.unstable) += 1;
    }
    return row;
}

CensusRow line_census(int n, int l, const EnumerationOptions& opts)
{
    const Arrangement arr = Arrangement::build(n, l);
    return census_from_lines(n, l, enumerate_lines(arr, opts));
}

mpz_class stirling(int n, int k)
{
    return stirling2(n, k);
}

KlCoefficient kl_first_coefficient_exact(int n, int l, const EnumerationOptions& opts)
{
    const Arrangement arr = Arrangement::build(n, l);
    KlCoefficient out;
    out.corank1_count = enumerate_lines(arr, opts).size();
    out.rank1_count = enumerate_rank1_flats(arr).size();
    out.c1 = static_cast<std::int64_t>(out.corank1_count) - static_cast<std::int64_t>(out.rank1_count);
    return out;
}

std::string KLBoundReport::ratio_decimal(int digits) const
{
    return decimal_string(ratio, digits);
}

std::optional<bool> KLBoundReport::f_bounds_c1() const
{
    if (!c1) return std::nullopt;
    return f_value <= mpz_class(static_cast<long>(*c1));
}

KLBoundReport kl_bound_report(int n, int l, bool exact, const EnumerationOptions& opts)
{
    if (l < 1 || n < l + 2) throw InvalidArgument("kl-bound needs l >= 1 and n >= l + 2");
    KLBoundReport r;
    r.n = n;
    r.l = l;
    r.stirling_lower = stirling2(n, l + 1);
    r.f_value = r.stirling_lower - binomial_big(n, l);
    mpz_class fact = 1, power = 1;
    for (int i = 2; i <= l + 1; ++i) fact *= i;
    mpz_ui_pow_ui(power.get_mpz_t(), static_cast<unsigned long>(l + 1), static_cast<unsigned long>(n));
    r.ratio = mpq_class(r.f_value * fact, power);
    r.ratio.canonicalize();

    if (exact) {
        const Arrangement arr = Arrangement::build(n, l);
        const auto lines = enumerate_lines(arr, opts);
        r.corank1_count = lines.size();
        r.rank1_count = enumerate_rank1_flats(arr).size();
        r.c1 = static_cast<std::int64_t>(*r.corank1_count) - static_cast<std::int64_t>(*r.rank1_count);
        const auto special = special_flat_census(arr, l + 1);
        std::set<std::vector<int>> line_keys;
        for (const auto& f : lines) line_keys.insert(f.key);
        r.special_line_count = static_cast<std::uint64_t>(
            std::count_if(special.flats.begin(), special.flats.end(),
                          [&](const Flat& f) { return line_keys.count(f.key) > 0; }));
    }
    return r;
}

SpecialFlatCensus special_flat_census(const Arrangement& arr, int m)
{
    const int n = arr.n(), l = arr.l();
    if (m < l + 1 || m > n) throw InvalidArgument("special flats need l + 1 <= m <= n");
    SpecialFlatCensus out;
    out.n = n;
    out.l = l;
    out.m = m;
    std::set<Flat> distinct;
    for (const auto& blocks : set_partitions(n, m)) {
        SpecialFlat sf = special_flat(arr, SetMap::from_blocks(blocks));
        out.degenerate = out.degenerate || sf.degenerate;
        ++out.surjection_types;
        distinct.insert(std::move(sf.flat));
    }
    out.distinct_flats = distinct.size();
    for (const auto& f : distinct) ++out.dimensions[f.dimension];
    out.flats.assign(distinct.begin(), distinct.end());
    return out;
}

} // namespace specht
