// Command-line front end: exact line census, randomized line search, capture-recapture
// estimates, KL lower bounds and special flats for hook Specht arrangements.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "specht/census.hpp"
#include "specht/errors.hpp"
#include "specht/estimator.hpp"
#include "specht/sampler.hpp"
#include "specht/serialize.hpp"
#include "specht/verify.hpp"

namespace {

using namespace specht;

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitBudget = 3;
constexpr int kExitIo = 4;

/// Largest n accepted on the command line; binomials of the hook grow past 64 bits beyond.
constexpr int kMaxN = 60;

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct RunConfig {
    int n = 0;
    int l = 0;
    int m = 0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t seed_b = 0;
    unsigned workers = 1;
    std::string out;
    std::string format = "csv";
    std::optional<std::uint64_t> budget;
    bool exact = false;
    bool full = false;
    std::string store_a;
    std::string store_b;
    std::string census_file;
    std::vector<std::string> inputs;
};

/// Collects every problem with the flags so they can be reported together.
class Problems {
public:
    void require(bool ok, const std::string& msg)
    {
        if (!ok) msgs_.push_back(msg);
    }
    void raise_if_any() const
    {
        if (msgs_.empty()) return;
        std::string text = "invalid arguments:";
        for (const auto& m : msgs_) text += "\n  - " + m;
        throw UsageError(text);
    }

private:
    std::vector<std::string> msgs_;
};

void check_nl(Problems& p, const RunConfig& c, int min_gap)
{
    p.require(c.l >= 1, "--l must be at least 1");
    p.require(c.n <= kMaxN, "--n must be at most " + std::to_string(kMaxN));
    p.require(c.n >= c.l + min_gap, "--n must be at least l + " + std::to_string(min_gap));
}

void check_format(Problems& p, const RunConfig& c)
{
    p.require(c.format == "csv" || c.format == "json", "--format must be csv or json");
}

void check_workers(Problems& p, const RunConfig& c) { p.require(c.workers >= 1, "--workers must be at least 1"); }

std::uint64_t resolve_budget(Problems& p, const RunConfig& c)
{
    if (c.budget) {
        p.require(*c.budget >= 1, "--budget must be positive");
        return *c.budget;
    }
    if (const char* env = std::getenv("SPECHT_BUDGET")) {
        try {
            std::size_t used = 0;
            const std::string s(env);
            const auto v = std::stoull(s, &used);
            if (used == s.size() && v >= 1 && s.find('-') == std::string::npos) return v;
        } catch (const std::exception&) {
        }
        p.require(false, "SPECHT_BUDGET must be a positive integer");
    }
    return EnumerationOptions{}.budget;
}

void emit(const std::string& text, const std::string& path)
{
    if (path.empty() || path == "-") {
        std::cout << text << std::flush;
        return;
    }
    std::ofstream os(path, std::ios::binary);
    if (!os) throw IoError("cannot open " + path + " for writing");
    os << text;
    os.close();
    if (!os) throw IoError("failed writing " + path);
}

std::string read_file(const std::string& path)
{
    std::ifstream is(path, std::ios::binary);
    if (!is) throw IoError("cannot open " + path + " for reading");
    std::ostringstream ss;
    ss << is.rdbuf();
    return ss.str();
}

std::string summarize(const StoreStats& s)
{
    std::ostringstream os;
    os << "size,stable,unstable\n";
    for (const auto& [size, c] : s.by_size) os << size << ',' << c.first << ',' << c.second << '\n';
    os << s.lines << " lines found, " << s.unstable << " unstable (" << s.percent_unstable() << "% unstable)\n";
    return os.str();
}

int cmd_census(const RunConfig& c)
{
    Problems p;
    check_nl(p, c, 1);
    check_format(p, c);
    check_workers(p, c);
    const std::uint64_t budget = resolve_budget(p, c);
    p.raise_if_any();
    const CensusRow row = line_census(c.n, c.l, EnumerationOptions{budget, c.workers});
    emit(to_text(row, parse_format(c.format)), c.out);
    std::cerr << "n=" << c.n << " l=" << c.l << ": " << row.total_lines << " lines, " << row.percent_stable()
              << "% stable, " << row.percent_unstable() << "% unstable\n";
    return kExitOk;
}

int cmd_sample(const RunConfig& c)
{
    Problems p;
    check_nl(p, c, 2);
    check_workers(p, c);
    p.require(c.trials >= 1, "--trials must be at least 1");
    p.require(!c.out.empty(), "--out is required (store path)");
    p.raise_if_any();
    const Arrangement arr = Arrangement::build(c.n, c.l);
    const SampleStore store = sample_lines(SampleConfig{c.n, c.l, c.trials, c.seed, c.workers}, arr);
    const auto problems = validate_store(store, arr);
    if (!problems.empty()) {
        for (const auto& msg : problems) std::cerr << "validation: " << msg << '\n';
        throw StoreError("sampled store failed post-validation");
    }
    write_store_file(c.out, store);
    std::cout << summarize(classify_store(store));
    std::cout << "validated " << store.records.size() << " records; store written to " << c.out << '\n';
    return kExitOk;
}

int cmd_estimate(const RunConfig& c)
{
    Problems p;
    check_format(p, c);
    check_workers(p, c);
    const bool from_files = !c.store_a.empty() || !c.store_b.empty();
    if (from_files) {
        p.require(!c.store_a.empty() && !c.store_b.empty(), "--store-a and --store-b must be given together");
        p.require(c.n == 0 && c.trials == 0, "--n/--trials are only used when sampling both rounds inline");
    } else {
        check_nl(p, c, 2);
        p.require(c.trials >= 1, "give --store-a/--store-b, or --n, --l, --trials, --seed and --seed-b");
    }
    p.require(!(c.exact && !c.census_file.empty()), "--exact and --census are mutually exclusive");
    const std::uint64_t budget = resolve_budget(p, c);
    p.raise_if_any();

    SampleStore a, b;
    if (from_files) {
        a = read_store_file(c.store_a);
        b = read_store_file(c.store_b);
    } else {
        const Arrangement arr = Arrangement::build(c.n, c.l);
        a = sample_lines(SampleConfig{c.n, c.l, c.trials, c.seed, c.workers}, arr);
        b = sample_lines(SampleConfig{c.n, c.l, c.trials, c.seed_b, c.workers}, arr);
    }
    std::optional<CensusRow> exact;
    if (c.exact) exact = line_census(a.header.n, a.header.l, EnumerationOptions{budget, c.workers});
    if (!c.census_file.empty()) exact = parse_census(read_file(c.census_file));

    const EstimateReport rep = estimate_report(a, b, exact);
    if (rep.same_seed)
        std::cerr << "warning: both rounds share a seed; they are not independent and every estimate collapses "
                     "to the observed count\n";
    emit(to_text(rep, parse_format(c.format)), c.out);
    return kExitOk;
}

int cmd_kl_bound(const RunConfig& c)
{
    Problems p;
    check_nl(p, c, 2);
    check_format(p, c);
    check_workers(p, c);
    const std::uint64_t budget = resolve_budget(p, c);
    p.raise_if_any();
    const KLBoundReport rep = kl_bound_report(c.n, c.l, c.exact, EnumerationOptions{budget, c.workers});
    emit(to_text(rep, parse_format(c.format)), c.out);
    std::cerr << "f_l(n) = " << KLBoundReport::f_definition << " (implementation-defined) = " << rep.f_value
              << ", ratio " << rep.ratio_decimal(6);
    if (rep.c1) std::cerr << ", c1 = " << *rep.c1;
    std::cerr << '\n';
    return kExitOk;
}

int cmd_special_flats(const RunConfig& c)
{
    Problems p;
    check_nl(p, c, 1);
    check_format(p, c);
    p.require(c.m >= c.l + 1 && c.m <= c.n, "--m must satisfy l + 1 <= m <= n");
    p.require(c.n <= 12, "--n must be at most 12 for special-flat enumeration");
    p.raise_if_any();
    const Arrangement arr = Arrangement::build(c.n, c.l);
    const SpecialFlatCensus sf = special_flat_census(arr, c.m);
    emit(to_text(sf, parse_format(c.format)), c.out);
    std::cerr << sf.distinct_flats << " distinct special flats from " << sf.surjection_types << " fiber types";
    for (auto [d, count] : sf.dimensions) std::cerr << "; " << count << " of dimension " << d;
    std::cerr << '\n';
    return kExitOk;
}

int cmd_merge(const RunConfig& c)
{
    Problems p;
    p.require(c.inputs.size() >= 2, "merge needs at least two input stores");
    p.require(!c.out.empty(), "--out is required");
    p.raise_if_any();
    SampleStore merged = read_store_file(c.inputs.front());
    for (std::size_t i = 1; i < c.inputs.size(); ++i) merged = merge_stores(merged, read_store_file(c.inputs[i]));
    write_store_file(c.out, merged);
    std::cout << summarize(classify_store(merged));
    return kExitOk;
}

int cmd_verify(const RunConfig& c)
{
    Problems p;
    check_workers(p, c);
    p.raise_if_any();
    const auto results = run_verify(VerifyOptions{c.full, c.seed, c.workers});
    std::size_t failed = 0;
    for (const auto& r : results) {
        std::cout << (r.passed ? "PASS " : "FAIL ") << r.name << " -- " << r.detail << '\n';
        if (!r.passed) ++failed;
    }
    std::cout << results.size() - failed << "/" << results.size() << " checks passed\n";
    return failed == 0 ? kExitOk : 1;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Lines and flats of intrinsic hyperplane arrangements of hook Specht modules"};
    app.require_subcommand(1);
    RunConfig cfg;

    auto add_nl = [&](CLI::App* sub, bool required) {
        sub->add_option("--n", cfg.n, "number of points")->required(required);
        sub->add_option("--l", cfg.l, "hook leg length")->required(required);
    };
    auto add_output = [&](CLI::App* sub) {
        sub->add_option("--out", cfg.out, "output file (stdout when omitted)");
        sub->add_option("--format", cfg.format, "csv or json");
    };
    auto add_budget = [&](CLI::App* sub) {
        sub->add_option("--budget", cfg.budget, "subset budget for exact enumeration (default $SPECHT_BUDGET or 10^7)");
        sub->add_option("--workers", cfg.workers, "worker threads");
    };

    auto* census = app.add_subcommand("census", "exact line census by size and stability");
    add_nl(census, true);
    add_output(census);
    add_budget(census);

    auto* sample = app.add_subcommand("sample", "randomized line search into a JSON-lines store");
    add_nl(sample, true);
    sample->add_option("--trials", cfg.trials, "number of random draws")->required();
    sample->add_option("--seed", cfg.seed, "master seed");
    sample->add_option("--workers", cfg.workers, "worker threads");
    sample->add_option("--out", cfg.out, "store path");

    auto* estimate = app.add_subcommand("estimate", "two-round capture-recapture line counts per size");
    estimate->add_option("--store-a", cfg.store_a, "first-round store");
    estimate->add_option("--store-b", cfg.store_b, "second-round store");
    add_nl(estimate, false);
    estimate->add_option("--trials", cfg.trials, "trials per round when sampling inline");
    estimate->add_option("--seed", cfg.seed, "first-round seed when sampling inline");
    estimate->add_option("--seed-b", cfg.seed_b, "second-round seed when sampling inline");
    estimate->add_flag("--exact", cfg.exact, "attach true counts from an exact census");
    estimate->add_option("--census", cfg.census_file, "attach true counts from a census table (csv or json)");
    add_output(estimate);
    add_budget(estimate);

    auto* kl = app.add_subcommand("kl-bound", "lower bound for the first KL coefficient");
    add_nl(kl, true);
    kl->add_flag("--exact", cfg.exact, "include enumerated flat counts and c1");
    add_output(kl);
    add_budget(kl);

    auto* special = app.add_subcommand("special-flats", "special flats F_f for all surjections [n] -> [m]");
    add_nl(special, true);
    special->add_option("--m", cfg.m, "size of the target set")->required();
    add_output(special);

    auto* merge = app.add_subcommand("merge", "union of sample stores");
    merge->add_option("stores", cfg.inputs, "input stores")->required();
    merge->add_option("--out", cfg.out, "merged store path");

    auto* verify = app.add_subcommand("verify", "run the property-check battery");
    verify->add_flag("--full", cfg.full, "include n = 6 checks");
    verify->add_option("--seed", cfg.seed, "seed for randomized checks");
    verify->add_option("--workers", cfg.workers, "worker threads");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        std::cerr << "usage error: " << e.what() << "\nrun with --help for usage\n";
        return kExitUsage;
    }

    try {
        if (*census) return cmd_census(cfg);
        if (*sample) return cmd_sample(cfg);
        if (*estimate) return cmd_estimate(cfg);
        if (*kl) return cmd_kl_bound(cfg);
        if (*special) return cmd_special_flats(cfg);
        if (*merge) return cmd_merge(cfg);
        if (*verify) return cmd_verify(cfg);
    } catch (const UsageError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const BudgetExceeded& e) {
        std::cerr << "budget exceeded: " << e.what() << '\n';
        return kExitBudget;
    } catch (const IoError& e) {
        std::cerr << "I/O error: " << e.what() << '\n';
        return kExitIo;
    } catch (const StoreError& e) {
        std::cerr << "store error: " << e.what() << '\n';
        return kExitIo;
    } catch (const InvalidArgument& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const ZeroModuleError& e) {
        std::cerr << "usage error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 1;
    }
    return kExitUsage;
}
