#include "specht/serialize.hpp"

#include <sstream>

#include <json.hpp>

#include "specht/errors.hpp"

namespace specht {

namespace {

using Json = nlohmann::ordered_json;

constexpr const char* kFStatus = "implementation-defined";

std::string q_str(const mpq_class& q) { return q.get_str(); }

mpq_class parse_q(const std::string& s)
{
    mpq_class q;
    if (s.empty() || q.set_str(s, 10) != 0) throw InvalidArgument("not a rational: '" + s + "'");
    q.canonicalize();
    return q;
}

mpz_class parse_z(const std::string& s)
{
    mpz_class z;
    if (s.empty() || z.set_str(s, 10) != 0) throw InvalidArgument("not an integer: '" + s + "'");
    return z;
}

std::uint64_t parse_u64(const std::string& s)
{
    std::size_t used = 0;
    std::uint64_t v = 0;
    try {
        if (!s.empty() && s[0] == '-') throw std::invalid_argument("negative");
        v = std::stoull(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not a non-negative integer: '" + s + "'");
    }
    if (used != s.size()) throw InvalidArgument("not a non-negative integer: '" + s + "'");
    return v;
}

std::int64_t parse_i64(const std::string& s)
{
    std::size_t used = 0;
    std::int64_t v = 0;
    try {
        v = std::stoll(s, &used);
    } catch (const std::exception&) {
        throw InvalidArgument("not an integer: '" + s + "'");
    }
    if (used != s.size()) throw InvalidArgument("not an integer: '" + s + "'");
    return v;
}

int parse_int(const std::string& s) { return static_cast<int>(parse_i64(s)); }

template <typename T>
std::string opt_str(const std::optional<T>& v)
{
    return v ? std::to_string(*v) : std::string();
}

template <typename T>
Json opt_json(const std::optional<T>& v)
{
    return v ? Json(*v) : Json(nullptr);
}

bool is_json(const std::string& text)
{
    for (char c : text) {
        if (std::isspace(static_cast<unsigned char>(c))) continue;
        return c == '{';
    }
    return false;
}

Json parse_json(const std::string& text)
{
    try {
        return Json::parse(text);
    } catch (const Json::exception& e) {
        throw InvalidArgument(std::string("malformed JSON: ") + e.what());
    }
}

/// Header row plus data rows, each as field -> value.
struct CsvTable {
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    std::size_t column(const std::string& name) const
    {
        for (std::size_t i = 0; i < header.size(); ++i)
            if (header[i] == name) return i;
        throw InvalidArgument("CSV is missing column '" + name + "'");
    }
    const std::string& at(std::size_t row, const std::string& name) const { return rows[row][column(name)]; }
};

CsvTable read_csv(const std::string& text)
{
    CsvTable t;
    std::istringstream is(text);
    std::string line;
    while (std::getline(is, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        auto fields = split_csv_line(line);
        if (t.header.empty()) {
            t.header = std::move(fields);
        } else {
            if (fields.size() != t.header.size()) throw InvalidArgument("CSV row has the wrong number of fields");
            t.rows.push_back(std::move(fields));
        }
    }
    if (t.header.empty()) throw InvalidArgument("empty CSV");
    return t;
}

std::string join_csv(const std::vector<std::string>& fields)
{
    std::string out;
    for (std::size_t i = 0; i < fields.size(); ++i) {
        if (i) out += ',';
        out += csv_field(fields[i]);
    }
    return out + '\n';
}

Json sources_json(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& sources)
{
    Json arr = Json::array();
    for (auto [seed, trials] : sources) arr.push_back({{"seed", seed}, {"trials", trials}});
    return arr;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sources_from_json(const Json& j)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    for (const auto& s : j) out.emplace_back(s.at("seed").get<std::uint64_t>(), s.at("trials").get<std::uint64_t>());
    return out;
}

std::string sources_csv(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& sources)
{
    std::string out;
    for (auto [seed, trials] : sources) {
        if (!out.empty()) out += ' ';
        out += std::to_string(seed) + ':' + std::to_string(trials);
    }
    return out;
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sources_from_csv(const std::string& s)
{
    std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
    std::istringstream is(s);
    std::string item;
    while (is >> item) {
        const auto colon = item.find(':');
        if (colon == std::string::npos) throw InvalidArgument("malformed source '" + item + "'");
        out.emplace_back(parse_u64(item.substr(0, colon)), parse_u64(item.substr(colon + 1)));
    }
    return out;
}

void check_census(const CensusRow& row)
{
    std::uint64_t sum = 0;
    for (const auto& [size, c] : row.size_histogram) sum += c.total();
    if (sum != row.total_lines) throw InvalidArgument("census total does not match its histogram");
}

} // namespace

Format parse_format(const std::string& name)
{
    if (name == "csv") return Format::csv;
    if (name == "json") return Format::json;
    throw InvalidArgument("unknown format '" + name + "' (expected csv or json)");
}

std::vector<std::string> split_csv_line(const std::string& line)
{
    std::vector<std::string> out(1);
    bool quoted = false;
    for (std::size_t i = 0; i < line.size(); ++i) {
        const char c = line[i];
        if (quoted) {
            if (c == '"' && i + 1 < line.size() && line[i + 1] == '"') {
                out.back() += '"';
                ++i;
            } else if (c == '"') {
                quoted = false;
            } else {
                out.back() += c;
            }
        } else if (c == '"') {
            quoted = true;
        } else if (c == ',') {
            out.emplace_back();
        } else {
            out.back() += c;
        }
    }
    if (quoted) throw InvalidArgument("unterminated quoted CSV field");
    return out;
}

std::string csv_field(const std::string& value)
{
    if (value.find_first_of(",\"\n") == std::string::npos) return value;
    std::string out = "\"";
    for (char c : value) {
        if (c == '"') out += '"';
        out += c;
    }
    return out + '"';
}

// ---- census ----

std::string to_text(const CensusRow& row, Format fmt)
{
    const mpq_class share = row.total_lines == 0 ? mpq_class(0)
                                                 : mpq_class(mpz_class(std::to_string(row.unstable_total())),
                                                             mpz_class(std::to_string(row.total_lines)));
    if (fmt == Format::json) {
        Json hist = Json::array();
        for (const auto& [size, c] : row.size_histogram)
            hist.push_back({{"size", size}, {"stable_count", c.stable}, {"unstable_count", c.unstable}});
        mpq_class q = share;
        q.canonicalize();
        Json j = {{"n", row.n},
                  {"l", row.l},
                  {"total_lines", row.total_lines},
                  {"size_histogram", hist},
                  {"percent_unstable", row.percent_unstable()},
                  {"unstable_fraction", q_str(q)}};
        return j.dump(2) + '\n';
    }
    std::string out = join_csv({"n", "l", "size", "stable_count", "unstable_count", "total_lines", "percent_unstable"});
    for (const auto& [size, c] : row.size_histogram)
        out += join_csv({std::to_string(row.n), std::to_string(row.l), std::to_string(size), std::to_string(c.stable),
                         std::to_string(c.unstable), std::to_string(row.total_lines), row.percent_unstable()});
    return out;
}

CensusRow parse_census(const std::string& text)
{
    CensusRow row;
    if (is_json(text)) {
        const Json j = parse_json(text);
        try {
            row.n = j.at("n").get<int>();
            row.l = j.at("l").get<int>();
            row.total_lines = j.at("total_lines").get<std::uint64_t>();
            for (const auto& h : j.at("size_histogram"))
                row.size_histogram[h.at("size").get<std::uint64_t>()] =
                    SizeCount{h.at("stable_count").get<std::uint64_t>(), h.at("unstable_count").get<std::uint64_t>()};
        } catch (const Json::exception& e) {
            throw InvalidArgument(std::string("malformed census JSON: ") + e.what());
        }
    } else {
        const CsvTable t = read_csv(text);
        if (t.rows.empty()) throw InvalidArgument("census CSV has no rows");
        row.n = parse_int(t.at(0, "n"));
        row.l = parse_int(t.at(0, "l"));
        row.total_lines = parse_u64(t.at(0, "total_lines"));
        for (std::size_t r = 0; r < t.rows.size(); ++r) {
            if (parse_int(t.at(r, "n")) != row.n || parse_int(t.at(r, "l")) != row.l)
                throw InvalidArgument("census CSV mixes several (n, l)");
            row.size_histogram[parse_u64(t.at(r, "size"))] =
                SizeCount{parse_u64(t.at(r, "stable_count")), parse_u64(t.at(r, "unstable_count"))};
        }
    }
    check_census(row);
    return row;
}

// ---- KL bound ----

std::string to_text(const KLBoundReport& rep, Format fmt)
{
    const auto bounds = rep.f_bounds_c1();
    if (fmt == Format::json) {
        Json j = {{"n", rep.n},
                  {"l", rep.l},
                  {"corank1_count", opt_json(rep.corank1_count)},
                  {"rank1_count", opt_json(rep.rank1_count)},
                  {"c1", opt_json(rep.c1)},
                  {"special_line_count", opt_json(rep.special_line_count)},
                  {"stirling_lower", rep.stirling_lower.get_str()},
                  {"f_definition", KLBoundReport::f_definition},
                  {"f_status", kFStatus},
                  {"f_value", rep.f_value.get_str()},
                  {"ratio", q_str(rep.ratio)},
                  {"ratio_decimal", rep.ratio_decimal()},
                  {"f_bounds_c1", opt_json(bounds)}};
        return j.dump(2) + '\n';
    }
    return join_csv({"n", "l", "corank1_count", "rank1_count", "c1", "special_line_count", "stirling_lower",
                     "f_definition", "f_status", "f_value", "ratio", "ratio_decimal", "f_bounds_c1"}) +
           join_csv({std::to_string(rep.n), std::to_string(rep.l), opt_str(rep.corank1_count),
                     opt_str(rep.rank1_count), opt_str(rep.c1), opt_str(rep.special_line_count),
                     rep.stirling_lower.get_str(), KLBoundReport::f_definition, kFStatus, rep.f_value.get_str(),
                     q_str(rep.ratio), rep.ratio_decimal(), bounds ? (*bounds ? "true" : "false") : ""});
}

KLBoundReport parse_kl_bound_report(const std::string& text)
{
    KLBoundReport rep;
    if (is_json(text)) {
        const Json j = parse_json(text);
        try {
            rep.n = j.at("n").get<int>();
            rep.l = j.at("l").get<int>();
            auto opt_u = [&](const char* k) -> std::optional<std::uint64_t> {
                return j.at(k).is_null() ? std::nullopt : std::optional(j.at(k).get<std::uint64_t>());
            };
            rep.corank1_count = opt_u("corank1_count");
            rep.rank1_count = opt_u("rank1_count");
            rep.special_line_count = opt_u("special_line_count");
            if (!j.at("c1").is_null()) rep.c1 = j.at("c1").get<std::int64_t>();
            rep.stirling_lower = parse_z(j.at("stirling_lower").get<std::string>());
            rep.f_value = parse_z(j.at("f_value").get<std::string>());
            rep.ratio = parse_q(j.at("ratio").get<std::string>());
        } catch (const Json::exception& e) {
            throw InvalidArgument(std::string("malformed KL bound JSON: ") + e.what());
        }
        return rep;
    }
    const CsvTable t = read_csv(text);
    if (t.rows.size() != 1) throw InvalidArgument("KL bound CSV must have exactly one data row");
    rep.n = parse_int(t.at(0, "n"));
    rep.l = parse_int(t.at(0, "l"));
    auto opt_u = [&](const char* k) -> std::optional<std::uint64_t> {
        const auto& s = t.at(0, k);
        return s.empty() ? std::nullopt : std::optional(parse_u64(s));
    };
    rep.corank1_count = opt_u("corank1_count");
    rep.rank1_count = opt_u("rank1_count");
    rep.special_line_count = opt_u("special_line_count");
    if (!t.at(0, "c1").empty()) rep.c1 = parse_i64(t.at(0, "c1"));
    rep.stirling_lower = parse_z(t.at(0, "stirling_lower"));
    rep.f_value = parse_z(t.at(0, "f_value"));
    rep.ratio = parse_q(t.at(0, "ratio"));
    return rep;
}

// ---- estimates ----

std::string to_text(const EstimateReport& rep, Format fmt)
{
    if (fmt == Format::json) {
        Json rows = Json::array();
        for (const auto& r : rep.rows) {
            Json row = {{"size", r.size},
                        {"count_a", r.count_a},
                        {"count_b", r.count_b},
                        {"overlap", r.overlap},
                        {"estimate", r.estimate ? Json(r.estimate_display()) : Json(nullptr)},
                        {"estimate_exact", r.estimate ? Json(q_str(*r.estimate)) : Json(nullptr)},
                        {"saturated", r.saturated},
                        {"true_count", opt_json(r.true_count)},
                        {"ratio", opt_json(r.ratio_display())}};
            rows.push_back(row);
        }
        Json j = {{"n", rep.n},
                  {"l", rep.l},
                  {"sources_a", sources_json(rep.sources_a)},
                  {"sources_b", sources_json(rep.sources_b)},
                  {"same_seed", rep.same_seed},
                  {"rows", rows}};
        return j.dump(2) + '\n';
    }
    std::string out = join_csv({"n", "l", "size", "count_a", "count_b", "overlap", "estimate", "estimate_exact",
                                "saturated", "true_count", "ratio", "sources_a", "sources_b", "same_seed"});
    for (const auto& r : rep.rows)
        out += join_csv({std::to_string(rep.n), std::to_string(rep.l), std::to_string(r.size),
                         std::to_string(r.count_a), std::to_string(r.count_b), std::to_string(r.overlap),
                         r.estimate ? r.estimate_display() : "", r.estimate ? q_str(*r.estimate) : "",
                         r.saturated ? "saturated?" : "", opt_str(r.true_count), r.ratio_display().value_or(""),
                         sources_csv(rep.sources_a), sources_csv(rep.sources_b), rep.same_seed ? "true" : "false"});
    return out;
}

EstimateReport parse_estimate_report(const std::string& text)
{
    EstimateReport rep;
    auto finish_row = [](EstimateRow& r, const std::optional<std::string>& exact) {
        const auto truth = r.true_count;
        r = estimate_row(r.size, r.count_a, r.count_b, r.overlap);
        r.true_count = truth;
        if (exact.has_value() != r.estimate.has_value() || (exact && parse_q(*exact) != *r.estimate))
            throw InvalidArgument("estimate does not match its counts");
    };
    if (is_json(text)) {
        const Json j = parse_json(text);
        try {
            rep.n = j.at("n").get<int>();
            rep.l = j.at("l").get<int>();
            rep.sources_a = sources_from_json(j.at("sources_a"));
            rep.sources_b = sources_from_json(j.at("sources_b"));
            rep.same_seed = j.at("same_seed").get<bool>();
            for (const auto& jr : j.at("rows")) {
                EstimateRow r;
                r.size = jr.at("size").get<std::uint64_t>();
                r.count_a = jr.at("count_a").get<std::uint64_t>();
                r.count_b = jr.at("count_b").get<std::uint64_t>();
                r.overlap = jr.at("overlap").get<std::uint64_t>();
                if (!jr.at("true_count").is_null()) r.true_count = jr.at("true_count").get<std::uint64_t>();
                const auto& ex = jr.at("estimate_exact");
                finish_row(r, ex.is_null() ? std::nullopt : std::optional(ex.get<std::string>()));
                rep.rows.push_back(std::move(r));
            }
        } catch (const Json::exception& e) {
            throw InvalidArgument(std::string("malformed estimate JSON: ") + e.what());
        }
        return rep;
    }
    const CsvTable t = read_csv(text);
    for (std::size_t i = 0; i < t.rows.size(); ++i) {
        if (i == 0) {
            rep.n = parse_int(t.at(0, "n"));
            rep.l = parse_int(t.at(0, "l"));
            rep.sources_a = sources_from_csv(t.at(0, "sources_a"));
            rep.sources_b = sources_from_csv(t.at(0, "sources_b"));
            rep.same_seed = t.at(0, "same_seed") == "true";
        }
        EstimateRow r;
        r.size = parse_u64(t.at(i, "size"));
        r.count_a = parse_u64(t.at(i, "count_a"));
        r.count_b = parse_u64(t.at(i, "count_b"));
        r.overlap = parse_u64(t.at(i, "overlap"));
        if (!t.at(i, "true_count").empty()) r.true_count = parse_u64(t.at(i, "true_count"));
        const auto& ex = t.at(i, "estimate_exact");
        finish_row(r, ex.empty() ? std::nullopt : std::optional(ex));
        rep.rows.push_back(std::move(r));
    }
    return rep;
}

// ---- special flats ----

std::string to_text(const SpecialFlatCensus& c, Format fmt)
{
    if (fmt == Format::json) {
        Json dims = Json::array();
        for (auto [d, count] : c.dimensions) dims.push_back({{"dimension", d}, {"count", count}});
        Json j = {{"n", c.n},
                  {"l", c.l},
                  {"m", c.m},
                  {"surjection_types", c.surjection_types},
                  {"distinct_flats", c.distinct_flats},
                  {"degenerate", c.degenerate},
                  {"dimensions", dims}};
        return j.dump(2) + '\n';
    }
    std::string out = join_csv({"n", "l", "m", "surjection_types", "distinct_flats", "degenerate", "dimension", "count"});
    for (auto [d, count] : c.dimensions)
        out += join_csv({std::to_string(c.n), std::to_string(c.l), std::to_string(c.m),
                         std::to_string(c.surjection_types), std::to_string(c.distinct_flats),
                         c.degenerate ? "true" : "false", std::to_string(d), std::to_string(count)});
    return out;
}

} // namespace specht
