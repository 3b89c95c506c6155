#ifndef SPECHT_SAMPLER_HPP
#define SPECHT_SAMPLER_HPP

#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "specht/arrangement.hpp"

namespace specht {

inline constexpr const char* engine_version = "specht-0.3";
inline constexpr int store_schema_version = 1;

struct SampleConfig {
    int n = 0;
    int l = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    unsigned workers = 1;
};

struct SampleRecord {
    std::vector<int> key;
    std::uint64_t size = 0;
    int dim = 1;
    bool stable = false;
    /// Smallest trial index that produced this line.
    std::uint64_t trial = 0;
    /// The hyperplane subset drawn in that trial.
    std::vector<int> sample;

    friend bool operator==(const SampleRecord&, const SampleRecord&) = default;
};

struct StoreHeader {
    int schema_version = store_schema_version;
    int n = 0;
    int l = 0;
    std::uint64_t seed = 0;
    std::uint64_t trials = 0;
    std::string prng_id;
    std::string engine_version;
    /// (seed, trials) of every run merged into this store; one entry for a plain run.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> sources;

    friend bool operator==(const StoreHeader&, const StoreHeader&) = default;
};

/// Distinct lines found by sampling, sorted by key.
struct SampleStore {
    StoreHeader header;
    std::vector<SampleRecord> records;

    const SampleRecord* find(const std::vector<int>& key) const;
    friend bool operator==(const SampleStore&, const SampleStore&) = default;
};

/// The hyperplane subset drawn by trial t: partial Fisher-Yates over [0, hyperplanes),
/// returned sorted.
std::vector<int> draw_hyperplanes(std::uint64_t seed, std::uint64_t trial, int hyperplanes, int count);

/// Runs the randomized line search: per trial draw dim-1 hyperplanes uniformly, keep
/// the draw when the intersection is a line, extend it to its closure, dedupe by
/// closure key and classify stability. Trials are split into contiguous ranges across
/// workers; the result does not depend on the worker count.
SampleStore sample_lines(const SampleConfig& cfg, const Arrangement& arr);

/// Number of trials landing on each line (same trial stream as sample_lines).
std::map<std::vector<int>, std::uint64_t> tally_lines(const SampleConfig& cfg, const Arrangement& arr);

struct StoreStats {
    std::uint64_t lines = 0;
    std::uint64_t unstable = 0;
    std::map<std::uint64_t, std::pair<std::uint64_t, std::uint64_t>> by_size; ///< size -> (stable, unstable)
    std::string percent_unstable() const;
};

/// Structural validation (unique sorted keys, size = |key|, dim = 1, sample within key).
/// Returns one message per offending record.
std::vector<std::string> check_store_structure(const SampleStore& store);

/// Full validation against the arrangement: every record's key is closed, is a line,
/// is generated by its sample, and carries the right stability flag.
std::vector<std::string> validate_store(const SampleStore& store, const Arrangement& arr);

/// Per-size stable/unstable counts. Throws StoreError listing offending records when
/// the store is structurally corrupt.
StoreStats classify_store(const SampleStore& store);

/// Union by key; headers must agree on (n, l, prng, engine). Records present in both
/// keep the one with the smaller (trial, sample).
SampleStore merge_stores(const SampleStore& a, const SampleStore& b);

void write_store(std::ostream& os, const SampleStore& store);
SampleStore read_store(std::istream& is);
void write_store_file(const std::string& path, const SampleStore& store);
SampleStore read_store_file(const std::string& path);

} // namespace specht

#endif // SPECHT_SAMPLER_HPP
