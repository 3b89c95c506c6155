#include "specht/estimator.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "specht/errors.hpp"
#include "specht/numeric_format.hpp"

namespace specht {

namespace {

mpq_class to_q(std::uint64_t v)
{
    mpz_class z;
    mpz_import(z.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    return mpq_class(z);
}

} // namespace

std::string EstimateRow::estimate_display() const
{
    if (!estimate) return "N/A";
    return round_half_up(*estimate).get_str();
}

std::optional<std::string> EstimateRow::ratio_display(int digits) const
{
    if (!estimate || !true_count || *true_count == 0) return std::nullopt;
    return decimal_string(*estimate / to_q(*true_count), digits);
}

EstimateRow estimate_row(std::uint64_t size, std::uint64_t count_a, std::uint64_t count_b, std::uint64_t overlap)
{
    if (overlap > std::min(count_a, count_b)) throw InvalidArgument("overlap exceeds a round's count");
    EstimateRow row{size, count_a, count_b, overlap, std::nullopt, false, std::nullopt};
    if (count_a != 0 && count_b != 0 && overlap != 0) {
        mpq_class e = to_q(count_a) * to_q(count_b) / to_q(overlap);
        e.canonicalize();
        row.estimate = e;
    }
    row.saturated = count_a != 0 && count_a == count_b && count_b == overlap;
    return row;
}

std::vector<EstimateRow> capture_recapture(const SampleStore& a, const SampleStore& b)
{
    if (a.header.n != b.header.n || a.header.l != b.header.l)
        throw StoreError("stores were sampled from different arrangements");
    std::map<std::uint64_t, std::uint64_t> ca, cb, ov;
    for (const auto& r : a.records) ++ca[r.size];
    for (const auto& r : b.records) {
        ++cb[r.size];
        if (a.find(r.key)) ++ov[r.size];
    }
    std::set<std::uint64_t> sizes;
    for (auto& [s, c] : ca) sizes.insert(s);
    for (auto& [s, c] : cb) sizes.insert(s);
    std::vector<EstimateRow> rows;
    for (std::uint64_t s : sizes) rows.push_back(estimate_row(s, ca[s], cb[s], ov[s]));
    return rows;
}

EstimateReport estimate_report(const SampleStore& a, const SampleStore& b, const std::optional<CensusRow>& exact)
{
    EstimateReport rep;
    rep.n = a.header.n;
    rep.l = a.header.l;
    rep.sources_a = a.header.sources;
    rep.sources_b = b.header.sources;
    for (auto [sa, ta] : rep.sources_a)
        for (auto [sb, tb] : rep.sources_b)
            if (sa == sb) rep.same_seed = true;
    rep.rows = capture_recapture(a, b);
    if (exact) {
        if (exact->n != rep.n || exact->l != rep.l) throw InvalidArgument("census does not match the stores' (n, l)");
        for (auto& row : rep.rows) {
            auto it = exact->size_histogram.find(row.size);
            row.true_count = it == exact->size_histogram.end() ? 0 : it->second.total();
        }
        for (const auto& [size, count] : exact->size_histogram) {
            auto pos = std::lower_bound(rep.rows.begin(), rep.rows.end(), size,
                                        [](const EstimateRow& r, std::uint64_t s) { return r.size < s; });
            if (pos != rep.rows.end() && pos->size == size) continue;
            EstimateRow missing = estimate_row(size, 0, 0, 0);
            missing.true_count = count.total();
            rep.rows.insert(pos, missing);
        }
    }
    return rep;
}

} // namespace specht
