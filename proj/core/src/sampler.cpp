#include "specht/sampler.hpp"

#include <algorithm>
#include <fstream>
#include <numeric>
#include <sstream>
#include <thread>

#include <json.hpp>

#include "specht/errors.hpp"
#include "specht/numeric_format.hpp"
#include "specht/rng.hpp"

namespace specht {

namespace {

using Json = nlohmann::ordered_json;

struct Hit {
    std::uint64_t trial;
    std::vector<int> sample;
};

void check_config(const SampleConfig& cfg, const Arrangement& arr)
{
    if (cfg.trials == 0) throw InvalidArgument("trials must be positive");
    if (cfg.workers == 0) throw InvalidArgument("workers must be positive");
    if (arr.dimension() < 2) throw InvalidArgument("module dimension must be at least 2 to contain lines");
    if (arr.size() < arr.dimension() - 1) throw InvalidArgument("too few hyperplanes to cut out a line");
}

/// Runs trials [begin, end) and reports every accepted draw to `visit(trial, sample, flat)`.
template <typename Visit>
void run_trials(const SampleConfig& cfg, const Arrangement& arr, std::uint64_t begin, std::uint64_t end, Visit&& visit)
{
    const int hyperplanes = static_cast<int>(arr.size());
    const int count = static_cast<int>(arr.dimension()) - 1;
    for (std::uint64_t t = begin; t < end; ++t) {
        std::vector<int> sample = draw_hyperplanes(cfg.seed, t, hyperplanes, count);
        if (arr.rank(sample) != static_cast<std::size_t>(count)) continue;
        Flat f = arr.closure(sample);
        if (f.dimension != 1) throw Error("internal: full-rank draw did not cut out a line");
        visit(t, std::move(sample), std::move(f));
    }
}

/// Splits [0, trials) into contiguous ranges, one per worker, and runs `job(begin, end, slot)`.
template <typename Job>
void parallel_ranges(std::uint64_t trials, unsigned workers, Job&& job)
{
    const std::uint64_t w = std::min<std::uint64_t>(workers, trials);
    if (w <= 1) {
        job(0, trials, 0);
        return;
    }
    std::vector<std::thread> threads;
    std::vector<std::exception_ptr> errors(w);
    for (std::uint64_t k = 0; k < w; ++k) {
        const std::uint64_t begin = trials * k / w, end = trials * (k + 1) / w;
        threads.emplace_back([&, begin, end, k] {
            try {
                job(begin, end, k);
            } catch (...) {
                errors[k] = std::current_exception();
            }
        });
    }
    for (auto& t : threads) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
}

bool earlier(const SampleRecord& a, const SampleRecord& b)
{
    return std::tie(a.trial, a.sample) < std::tie(b.trial, b.sample);
}

std::string describe(const SampleRecord& r)
{
    std::ostringstream os;
    os << "record (trial " << r.trial << ", key size " << r.key.size() << ")";
    return os.str();
}

} // namespace

const SampleRecord* SampleStore::find(const std::vector<int>& key) const
{
    auto it = std::lower_bound(records.begin(), records.end(), key,
                               [](const SampleRecord& r, const std::vector<int>& k) { return r.key < k; });
    return it != records.end() && it->key == key ? &*it : nullptr;
}

std::vector<int> draw_hyperplanes(std::uint64_t seed, std::uint64_t trial, int hyperplanes, int count)
{
    if (count < 0 || count > hyperplanes) throw InvalidArgument("cannot draw that many hyperplanes");
    std::vector<int> pool(static_cast<std::size_t>(hyperplanes));
    std::iota(pool.begin(), pool.end(), 0);
    TrialStream rng(seed, trial);
    for (int i = 0; i < count; ++i) {
        const auto j = i + static_cast<int>(rng.below(static_cast<std::uint64_t>(hyperplanes - i)));
        std::swap(pool[static_cast<std::size_t>(i)], pool[static_cast<std::size_t>(j)]);
    }
    std::vector<int> out(pool.begin(), pool.begin() + count);
    std::sort(out.begin(), out.end());
    return out;
}

SampleStore sample_lines(const SampleConfig& cfg, const Arrangement& arr)
{
    check_config(cfg, arr);
    const std::uint64_t w = std::min<std::uint64_t>(cfg.workers, cfg.trials);
    std::vector<std::map<std::vector<int>, Hit>> found(std::max<std::uint64_t>(w, 1));
    parallel_ranges(cfg.trials, cfg.workers, [&](std::uint64_t begin, std::uint64_t end, std::uint64_t slot) {
        auto& mine = found[slot];
        run_trials(cfg, arr, begin, end, [&](std::uint64_t t, std::vector<int> sample, Flat f) {
            // trials run in increasing order, so the first hit per key is the minimum
            mine.try_emplace(std::move(f.key), Hit{t, std::move(sample)});
        });
    });
    std::map<std::vector<int>, Hit> all;
    for (auto& part : found)
        for (auto& [key, hit] : part) {
            auto [it, inserted] = all.try_emplace(key, hit);
            if (!inserted && hit.trial < it->second.trial) it->second = hit;
        }

    SampleStore store;
    store.header = StoreHeader{store_schema_version, arr.n(), arr.l(), cfg.seed, cfg.trials,
                               TrialStream::id, engine_version, {{cfg.seed, cfg.trials}}};
    store.records.reserve(all.size());
    for (auto& [key, hit] : all) {
        Flat f{key, 1, std::nullopt};
        SampleRecord r;
        r.key = key;
        r.size = key.size();
        r.stable = is_stable(arr, f);
        r.trial = hit.trial;
        r.sample = std::move(hit.sample);
        store.records.push_back(std::move(r));
    }
    return store;
}

std::map<std::vector<int>, std::uint64_t> tally_lines(const SampleConfig& cfg, const Arrangement& arr)
{
    check_config(cfg, arr);
    const std::uint64_t w = std::min<std::uint64_t>(cfg.workers, cfg.trials);
    std::vector<std::map<std::vector<int>, std::uint64_t>> parts(std::max<std::uint64_t>(w, 1));
    parallel_ranges(cfg.trials, cfg.workers, [&](std::uint64_t begin, std::uint64_t end, std::uint64_t slot) {
        run_trials(cfg, arr, begin, end, [&](std::uint64_t, std::vector<int>, Flat f) { ++parts[slot][f.key]; });
    });
    std::map<std::vector<int>, std::uint64_t> out;
    for (auto& part : parts)
        for (auto& [key, hits] : part) out[key] += hits;
    return out;
}

std::string StoreStats::percent_unstable() const
{
    return percent_string(unstable, lines);
}

std::vector<std::string> check_store_structure(const SampleStore& store)
{
    std::vector<std::string> problems;
    for (std::size_t i = 0; i < store.records.size(); ++i) {
        const SampleRecord& r = store.records[i];
        if (i > 0 && !(store.records[i - 1].key < r.key))
            problems.push_back(describe(r) + ": keys not strictly increasing");
        if (r.key.empty()) problems.push_back(describe(r) + ": empty key");
        if (!std::is_sorted(r.key.begin(), r.key.end()) ||
            std::adjacent_find(r.key.begin(), r.key.end()) != r.key.end())
            problems.push_back(describe(r) + ": key is not a sorted set");
        if (r.size != r.key.size()) problems.push_back(describe(r) + ": size does not match key");
        if (r.dim != 1) problems.push_back(describe(r) + ": dim is not 1");
        if (!std::includes(r.key.begin(), r.key.end(), r.sample.begin(), r.sample.end()) ||
            !std::is_sorted(r.sample.begin(), r.sample.end()))
            problems.push_back(describe(r) + ": sample is not a sorted subset of key");
        if (r.trial >= store.header.trials) problems.push_back(describe(r) + ": trial index out of range");
    }
    return problems;
}

std::vector<std::string> validate_store(const SampleStore& store, const Arrangement& arr)
{
    std::vector<std::string> problems = check_store_structure(store);
    if (store.header.n != arr.n() || store.header.l != arr.l()) {
        problems.push_back("header (n, l) does not match the arrangement");
        return problems;
    }
    const auto hyperplanes = static_cast<int>(arr.size());
    for (const SampleRecord& r : store.records) {
        auto in_range = [&](int j) { return j >= 0 && j < hyperplanes; };
        if (!std::all_of(r.key.begin(), r.key.end(), in_range) ||
            !std::all_of(r.sample.begin(), r.sample.end(), in_range)) {
            problems.push_back(describe(r) + ": hyperplane index out of range");
            continue;
        }
        Flat closed = arr.closure(r.key);
        if (closed.key != r.key) problems.push_back(describe(r) + ": key is not closed");
        if (closed.dimension != 1) problems.push_back(describe(r) + ": key is not a line");
        if (arr.closure(r.sample).key != r.key) problems.push_back(describe(r) + ": sample does not generate key");
        if (is_stable(arr, closed) != r.stable) problems.push_back(describe(r) + ": wrong stability flag");
    }
    return problems;
}

StoreStats classify_store(const SampleStore& store)
{
    const auto problems = check_store_structure(store);
    if (!problems.empty()) {
        std::string msg = "corrupt store:";
        for (const auto& p : problems) msg += "\n  " + p;
        throw StoreError(msg);
    }
    StoreStats s;
    for (const SampleRecord& r : store.records) {
        ++s.lines;
        auto& slot = s.by_size[r.size];
        if (r.stable) {
            ++slot.first;
        } else {
            ++slot.second;
            ++s.unstable;
        }
    }
    return s;
}

SampleStore merge_stores(const SampleStore& a, const SampleStore& b)
{
    const StoreHeader &ha = a.header, &hb = b.header;
    if (ha.n != hb.n || ha.l != hb.l) throw StoreError("cannot merge stores for different (n, l)");
    if (ha.prng_id != hb.prng_id || ha.engine_version != hb.engine_version)
        throw StoreError("cannot merge stores from different generators or engine versions");
    if (ha.schema_version != hb.schema_version) throw StoreError("cannot merge stores with different schemas");

    // runs with one seed share a trial stream, so the shorter is a prefix of the longer
    std::map<std::uint64_t, std::uint64_t> runs;
    for (const auto* h : {&ha, &hb})
        for (auto [seed, trials] : h->sources) runs[seed] = std::max(runs[seed], trials);

    SampleStore out;
    out.header = ha;
    out.header.sources.assign(runs.begin(), runs.end());
    out.header.seed = runs.begin()->first;
    out.header.trials = 0;
    for (auto [seed, trials] : runs) out.header.trials += trials;

    auto ia = a.records.begin(), ib = b.records.begin();
    while (ia != a.records.end() || ib != b.records.end()) {
        if (ib == b.records.end() || (ia != a.records.end() && ia->key < ib->key)) {
            out.records.push_back(*ia++);
        } else if (ia == a.records.end() || ib->key < ia->key) {
            out.records.push_back(*ib++);
        } else {
            out.records.push_back(earlier(*ib, *ia) ? *ib : *ia);
            ++ia;
            ++ib;
        }
    }
    return out;
}

void write_store(std::ostream& os, const SampleStore& store)
{
    const StoreHeader& h = store.header;
    Json header = {{"schema_version", h.schema_version},
                   {"n", h.n},
                   {"l", h.l},
                   {"seed", h.seed},
                   {"trials", h.trials},
                   {"prng_id", h.prng_id},
                   {"engine_version", h.engine_version}};
    if (h.sources.size() > 1) {
        Json sources = Json::array();
        for (auto [seed, trials] : h.sources) sources.push_back({{"seed", seed}, {"trials", trials}});
        header["sources"] = sources;
    }
    os << header.dump() << '\n';
    for (const SampleRecord& r : store.records) {
        Json rec = {{"key", r.key},       {"size", r.size},   {"dim", r.dim},
                    {"stable", r.stable}, {"trial", r.trial}, {"sample", r.sample}};
        os << rec.dump() << '\n';
    }
    if (!os) throw IoError("failed to write sample store");
}

SampleStore read_store(std::istream& is)
{
    SampleStore store;
    std::string line;
    std::size_t lineno = 0;
    bool have_header = false;
    while (std::getline(is, line)) {
        ++lineno;
        if (line.empty()) continue;
        try {
            const Json j = Json::parse(line);
            if (!have_header) {
                StoreHeader& h = store.header;
                h.schema_version = j.at("schema_version").get<int>();
                if (h.schema_version != store_schema_version)
                    throw StoreError("unsupported store schema version " + std::to_string(h.schema_version));
                h.n = j.at("n").get<int>();
                h.l = j.at("l").get<int>();
                h.seed = j.at("seed").get<std::uint64_t>();
                h.trials = j.at("trials").get<std::uint64_t>();
                h.prng_id = j.at("prng_id").get<std::string>();
                h.engine_version = j.at("engine_version").get<std::string>();
                if (j.contains("sources")) {
                    for (const auto& s : j.at("sources"))
                        h.sources.emplace_back(s.at("seed").get<std::uint64_t>(), s.at("trials").get<std::uint64_t>());
                } else {
                    h.sources = {{h.seed, h.trials}};
                }
                have_header = true;
                continue;
            }
            SampleRecord r;
            r.key = j.at("key").get<std::vector<int>>();
            r.size = j.at("size").get<std::uint64_t>();
            r.dim = j.at("dim").get<int>();
            r.stable = j.at("stable").get<bool>();
            r.trial = j.at("trial").get<std::uint64_t>();
            r.sample = j.at("sample").get<std::vector<int>>();
            store.records.push_back(std::move(r));
        } catch (const Json::exception& e) {
            throw StoreError("malformed store at line " + std::to_string(lineno) + ": " + e.what());
        }
    }
    if (!have_header) throw StoreError("store has no header line");
    return store;
}

void write_store_file(const std::string& path, const SampleStore& store)
{
    std::ofstream os(path);
    if (!os) throw IoError("cannot open " + path + " for writing");
    write_store(os, store);
}

SampleStore read_store_file(const std::string& path)
{
    std::ifstream is(path);
    if (!is) throw IoError("cannot open " + path + " for reading");
    return read_store(is);
}

} // namespace specht
