#ifndef SPECHT_CENSUS_HPP
#define SPECHT_CENSUS_HPP

#include <map>
#include <optional>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "specht/arrangement.hpp"

namespace specht {

struct SizeCount {
    std::uint64_t stable = 0;
    std::uint64_t unstable = 0;

    std::uint64_t total() const { return stable + unstable; }
    friend bool operator==(const SizeCount&, const SizeCount&) = default;
};

/// Exact count of the lines of the hook arrangement, split by size and stability.
struct CensusRow {
    int n = 0;
    int l = 0;
    std::uint64_t total_lines = 0;
    std::map<std::uint64_t, SizeCount> size_histogram;

    std::uint64_t unstable_total() const;
    std::uint64_t stable_total() const { return total_lines - unstable_total(); }
    /// Unstable share in percent, one decimal, round-half-up.
    std::string percent_unstable() const;
    std::string percent_stable() const;

    friend bool operator==(const CensusRow&, const CensusRow&) = default;
};

CensusRow census_from_lines(int n, int l, const std::vector<Flat>& lines);

/// Throws BudgetExceeded (pointing at the sampler) past the enumeration budget.
CensusRow line_census(int n, int l, const EnumerationOptions& opts = {});

/// S(n, k); same as stirling2.
mpz_class stirling(int n, int k);

struct KlCoefficient {
    std::uint64_t corank1_count = 0;
    std::uint64_t rank1_count = 0;
    /// corank-1 flats minus rank-1 flats.
    std::int64_t c1 = 0;
};

KlCoefficient kl_first_coefficient_exact(int n, int l, const EnumerationOptions& opts = {});

/// Lower bound report for the first KL coefficient of the hook arrangement.
///
/// f_l(n) = S(n, l+1) - C(n, l) is the bound function used here; ratio is
/// f_l(n) (l+1)! / (l+1)^n, exact.
struct KLBoundReport {
    int n = 0;
    int l = 0;
    std::optional<std::uint64_t> corank1_count;
    std::optional<std::uint64_t> rank1_count;
    std::optional<std::int64_t> c1;
    /// Lines that are special flats F_f for surjections [n] -> [l+1].
    std::optional<std::uint64_t> special_line_count;
    mpz_class stirling_lower;
    mpz_class f_value;
    mpq_class ratio;

    static constexpr const char* f_definition = "S(n,l+1)-C(n,l)";

    std::string ratio_decimal(int digits = 12) const;
    /// f_value <= c1, when c1 is known.
    std::optional<bool> f_bounds_c1() const;
};

/// Requires n >= l + 2. Exact counts are filled only when `exact` is set; those
/// throw BudgetExceeded past the enumeration budget.
KLBoundReport kl_bound_report(int n, int l, bool exact, const EnumerationOptions& opts = {});

struct SpecialFlatCensus {
    int n = 0;
    int l = 0;
    int m = 0;
    std::uint64_t surjection_types = 0;    ///< fiber partitions [n] -> [m], i.e. S(n, m)
    std::uint64_t distinct_flats = 0;
    std::map<int, std::uint64_t> dimensions; ///< dimension -> number of distinct flats
    bool degenerate = false;
    std::vector<Flat> flats;                ///< distinct flats, sorted by key
};

/// Special flats for every fiber partition of [n] into m blocks. Requires l + 1 <= m <= n.
SpecialFlatCensus special_flat_census(const Arrangement& arr, int m);

} // namespace specht

#endif // SPECHT_CENSUS_HPP
