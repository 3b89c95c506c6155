#include "specht/arrangement.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <string>
#include <thread>

#include "specht/errors.hpp"

namespace specht {

Arrangement Arrangement::build(int n, int l)
{
    if (l < 1) throw InvalidArgument("intrinsic hook arrangement needs l >= 1");
    HookModule module = HookModule::build(n, l);
    if (module.is_zero())
        throw ZeroModuleError("S^(1^" + std::to_string(l) + ")_" + std::to_string(n) + " is the zero module (n < l + 1)");

    auto labels = all_subsets(n, l + 1);
    IntMatrix normals(0, module.dimension());
    for (const auto& alpha : labels) normals.append_row(module.normal(alpha));

    Arrangement arr(module.dimension(), std::move(normals));
    arr.pair_hyperplanes_.assign(static_cast<std::size_t>(n * n), {});
    for (std::size_t j = 0; j < labels.size(); ++j) {
        const auto& a = labels[j];
        for (std::size_t x = 0; x < a.size(); ++x)
            for (std::size_t y = x + 1; y < a.size(); ++y)
                arr.pair_hyperplanes_[static_cast<std::size_t>(a[x] * n + a[y])].push_back(static_cast<int>(j));
    }
    arr.labels_ = std::move(labels);
    arr.module_ = std::move(module);
    return arr;
}

Arrangement Arrangement::from_normals(std::size_t dimension, IntMatrix normals)
{
    if (normals.rows() > 0 && normals.cols() != dimension)
        throw InvalidArgument("normal vectors do not match the ambient dimension");
    if (normals.rows() == 0) normals = IntMatrix(0, dimension);
    return Arrangement(dimension, std::move(normals));
}

const HookModule& Arrangement::module() const
{
    if (!module_) throw InvalidArgument("not an intrinsic hook arrangement");
    return *module_;
}

const Subset& Arrangement::label(int j) const
{
    module();
    return labels_.at(static_cast<std::size_t>(j));
}

int Arrangement::index_of(std::span<const int> alpha) const
{
    const auto& m = module();
    if (static_cast<int>(alpha.size()) != m.l() + 1) throw InvalidArgument("label must have l + 1 elements");
    std::vector<int> a(alpha.begin(), alpha.end());
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || a.front() < 0 || a.back() >= m.n())
        throw InvalidArgument("label must be a subset of [n]");
    return static_cast<int>(lex_rank(a, m.n()));
}

const std::vector<int>& Arrangement::hyperplanes_through_pair(int i, int j) const
{
    const int n = module().n();
    if (i > j) std::swap(i, j);
    if (i < 0 || j >= n || i == j) throw InvalidArgument("pair must be two distinct elements of [n]");
    return pair_hyperplanes_[static_cast<std::size_t>(i * n + j)];
}

std::vector<int> Arrangement::permute(std::span<const int> sigma, std::span<const int> indices) const
{
    std::vector<int> out;
    out.reserve(indices.size());
    for (int j : indices) out.push_back(index_of(specht::apply(sigma, label(j))));
    std::sort(out.begin(), out.end());
    return out;
}

void Arrangement::check_indices(std::span<const int> indices) const
{
    for (int j : indices)
        if (j < 0 || static_cast<std::size_t>(j) >= size())
            throw InvalidArgument("hyperplane index " + std::to_string(j) + " out of range [0," +
                                  std::to_string(size()) + ")");
}

std::size_t Arrangement::rank(std::span<const int> indices) const
{
    check_indices(indices);
    if (indices.empty()) return 0;
    return exact_rank(normals_.select_rows(indices));
}

Flat Arrangement::closure(std::span<const int> indices) const
{
    check_indices(indices);
    Flat f;
    if (indices.empty()) {
        f.dimension = static_cast<int>(dimension_);
        for (std::size_t j = 0; j < size(); ++j)
            if (std::all_of(normal(static_cast<int>(j)).begin(), normal(static_cast<int>(j)).end(),
                            [](std::int64_t v) { return v == 0; }))
                f.key.push_back(static_cast<int>(j));
        return f;
    }
    const IntMatrix rows = normals_.select_rows(indices);
    try {
        const IntMatrix kernel = integer_kernel(rows);
        f.dimension = static_cast<int>(kernel.rows());
        for (std::size_t j = 0; j < size(); ++j) {
            bool vanishes = true;
            for (std::size_t k = 0; k < kernel.rows() && vanishes; ++k)
                vanishes = dot(kernel.row(k), normal(static_cast<int>(j))) == 0;
            if (vanishes) f.key.push_back(static_cast<int>(j));
        }
    } catch (const ArithmeticOverflow&) {
        // membership by rank comparison in GMP integers
        const std::size_t r = exact_rank(rows);
        f.dimension = static_cast<int>(dimension_ - r);
        f.key.clear();
        for (std::size_t j = 0; j < size(); ++j) {
            IntMatrix probe = rows;
            probe.append_row(normal(static_cast<int>(j)));
            if (exact_rank(probe) == r) f.key.push_back(static_cast<int>(j));
        }
    }
    return f;
}

SpecialFlat special_flat(const Arrangement& arr, const SetMap& f)
{
    const int n = arr.n(), l = arr.l();
    if (f.source_size() != n) throw InvalidArgument("surjection must have source [n]");
    if (!f.surjective()) throw InvalidArgument("special_flat requires a surjection");
    std::vector<int> involved;
    for (std::size_t j = 0; j < arr.size(); ++j) {
        std::vector<int> image;
        for (int x : arr.label(static_cast<int>(j))) image.push_back(f(x));
        std::sort(image.begin(), image.end());
        image.erase(std::unique(image.begin(), image.end()), image.end());
        if (static_cast<int>(image.size()) < l + 1) involved.push_back(static_cast<int>(j));
    }
    SpecialFlat out;
    out.flat = arr.closure(involved);
    out.degenerate = f.target_size() < l + 1;
    out.flat.stable = is_stable(arr, out.flat);
    return out;
}

bool is_stable(const Arrangement& arr, const Flat& flat)
{
    const int n = arr.n();
    std::vector<char> in_key(arr.size(), 0);
    for (int j : flat.key) in_key[static_cast<std::size_t>(j)] = 1;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const auto& through = arr.hyperplanes_through_pair(i, j);
            if (std::all_of(through.begin(), through.end(),
                            [&](int h) { return in_key[static_cast<std::size_t>(h)] != 0; }))
                return true;
        }
    return false;
}

RationalMatrix flat_subspace(const Arrangement& arr, const Flat& flat)
{
    const std::size_t d = arr.dimension();
    if (flat.key.empty()) return RationalMatrix::identity(d);
    const RationalMatrix normals(arr.normals().select_rows(flat.key));
    if (!arr.is_hook()) return nullspace(normals);
    const RationalMatrix gram(arr.module().invariant_gram());
    return nullspace(normals * gram);
}

bool is_stable_by_fixed_space(const Arrangement& arr, const Flat& flat)
{
    const int n = arr.n();
    const RationalMatrix basis = flat_subspace(arr, flat);
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            const RationalMatrix act(arr.module().action(transposition(n, i, j)));
            if (act * basis == basis) return true;
        }
    return false;
}

namespace {

// Groups primitive integer rows into classes of equal rows; returns class per row
// (-1 for zero rows) and the distinct rows in first-seen order.
std::pair<std::vector<int>, IntMatrix> dedupe_rows(const std::vector<std::vector<std::int64_t>>& rows,
                                                   std::size_t width)
{
    std::map<std::vector<std::int64_t>, int> seen;
    std::vector<int> cls(rows.size(), -1);
    IntMatrix distinct(0, width);
    for (std::size_t j = 0; j < rows.size(); ++j) {
        const auto& r = rows[j];
        if (std::all_of(r.begin(), r.end(), [](std::int64_t v) { return v == 0; })) continue;
        auto [it, inserted] = seen.emplace(r, static_cast<int>(distinct.rows()));
        if (inserted) distinct.append_row(r);
        cls[j] = it->second;
    }
    return {cls, distinct};
}

} // namespace

Contraction contraction(const Arrangement& arr, const Flat& flat)
{
    const std::size_t d = arr.dimension();
    // Kernel basis under the coordinate dot product; the restricted normals it yields
    // coincide with those obtained from the invariant pairing.
    IntMatrix basis;
    if (flat.key.empty()) {
        basis = IntMatrix(d, d);
        for (std::size_t i = 0; i < d; ++i) basis(i, i) = 1;
    } else {
        basis = integer_kernel(arr.normals().select_rows(flat.key));
    }
    const std::size_t k = basis.rows();
    std::vector<std::vector<std::int64_t>> restricted(arr.size(), std::vector<std::int64_t>(k, 0));
    for (std::size_t j = 0; j < arr.size(); ++j) {
        for (std::size_t b = 0; b < k; ++b) restricted[j][b] = dot(basis.row(b), arr.normal(static_cast<int>(j)));
        make_primitive(restricted[j]);
    }
    auto [cls, distinct] = dedupe_rows(restricted, k);
    Contraction out{Arrangement::from_normals(k, std::move(distinct)), cls, {}};
    out.parents_of_atom.assign(out.arrangement.size(), {});
    for (std::size_t j = 0; j < cls.size(); ++j)
        if (cls[j] >= 0) out.parents_of_atom[static_cast<std::size_t>(cls[j])].push_back(static_cast<int>(j));
    return out;
}

Restriction restriction(const Arrangement& arr, const Flat& flat)
{
    if (flat.key.empty()) return Restriction{Arrangement::from_normals(0, IntMatrix(0, 0)), {}};
    // columns: the normals of hyperplanes containing the flat
    const RationalMatrix cols = RationalMatrix(arr.normals().select_rows(flat.key)).transpose();
    std::vector<std::size_t> pivots;
    const RationalMatrix red = rref(cols, &pivots);
    const std::size_t r = pivots.size();
    // red(i, c) are the coordinates of column c in the basis of pivot columns
    std::vector<std::vector<std::int64_t>> coords(flat.key.size());
    for (std::size_t c = 0; c < flat.key.size(); ++c) {
        RationalMatrix v(r, 1);
        for (std::size_t i = 0; i < r; ++i) v(i, 0) = red(i, c);
        coords[c] = primitive_integer_vector(v);
    }
    auto [cls, distinct] = dedupe_rows(coords, r);
    Restriction out{Arrangement::from_normals(r, std::move(distinct)), {}};
    out.parents_of_atom.assign(out.arrangement.size(), {});
    for (std::size_t c = 0; c < cls.size(); ++c)
        if (cls[c] >= 0) out.parents_of_atom[static_cast<std::size_t>(cls[c])].push_back(flat.key[c]);
    return out;
}

std::vector<Flat> enumerate_lines(const Arrangement& arr, const EnumerationOptions& opts)
{
    const std::size_t d = arr.dimension();
    if (d == 0) return {};
    const int k = static_cast<int>(d) - 1;
    const int h = static_cast<int>(arr.size());
    if (k > h) return {};
    std::uint64_t total = 0;
    try {
        total = binomial(h, k);
    } catch (const InvalidArgument&) {
        total = UINT64_MAX;
    }
    if (total > opts.budget)
        throw BudgetExceeded("exact line enumeration needs C(" + std::to_string(h) + "," + std::to_string(k) +
                             ") = " + (total == UINT64_MAX ? std::string("> 2^64") : std::to_string(total)) +
                             " rank computations, over the budget of " + std::to_string(opts.budget) +
                             "; use the `sample` command to estimate lines instead");

    const unsigned workers = std::max(1u, std::min<unsigned>(opts.workers, static_cast<unsigned>(std::max<std::uint64_t>(total, 1))));
    std::vector<std::set<std::vector<int>>> found(workers);
    auto scan = [&](unsigned w) {
        const std::uint64_t begin = total * w / workers;
        const std::uint64_t end = total * (w + 1) / workers;
        if (begin == end) return;
        Subset s = lex_unrank(begin, h, k);
        for (std::uint64_t t = begin; t < end; ++t) {
            if (k == 0 || arr.rank(s) == static_cast<std::size_t>(k)) {
                Flat f = arr.closure(s);
                if (f.dimension == 1) found[w].insert(std::move(f.key));
            }
            if (t + 1 < end) next_combination(s, h);
        }
    };
    if (workers == 1) {
        scan(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(scan, w);
        for (auto& t : pool) t.join();
    }
    std::set<std::vector<int>> merged;
    for (auto& part : found) merged.merge(part);

    std::vector<Flat> lines;
    lines.reserve(merged.size());
    for (const auto& key : merged) {
        Flat f{key, 1, std::nullopt};
        if (arr.is_hook()) f.stable = is_stable(arr, f);
        lines.push_back(std::move(f));
    }
    return lines;
}

std::vector<Flat> enumerate_rank1_flats(const Arrangement& arr)
{
    std::set<Flat> flats;
    for (int j = 0; j < static_cast<int>(arr.size()); ++j) {
        const int one[] = {j};
        Flat f = arr.closure(one);
        if (f.dimension == static_cast<int>(arr.dimension()) - 1) flats.insert(std::move(f));
    }
    std::vector<Flat> out(flats.begin(), flats.end());
    if (arr.is_hook())
        for (auto& f : out) f.stable = is_stable(arr, f);
    return out;
}

} // namespace specht
