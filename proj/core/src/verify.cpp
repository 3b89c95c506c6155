#include "specht/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "specht/census.hpp"
#include "specht/errors.hpp"
#include "specht/lattice.hpp"
#include "specht/rng.hpp"
#include "specht/tabloid.hpp"

namespace specht {

namespace {

std::vector<int> random_subset(TrialStream& rng, int universe, int max_size)
{
    const int k = static_cast<int>(rng.below(static_cast<std::uint64_t>(max_size + 1)));
    std::vector<int> pool(static_cast<std::size_t>(universe));
    for (int i = 0; i < universe; ++i) pool[static_cast<std::size_t>(i)] = i;
    for (int i = 0; i < k; ++i)
        std::swap(pool[static_cast<std::size_t>(i)],
                  pool[static_cast<std::size_t>(i + static_cast<int>(rng.below(static_cast<std::uint64_t>(universe - i))))]);
    std::vector<int> out(pool.begin(), pool.begin() + k);
    std::sort(out.begin(), out.end());
    return out;
}

Permutation random_permutation(TrialStream& rng, int n)
{
    Permutation p(static_cast<std::size_t>(n));
    for (int i = 0; i < n; ++i) p[static_cast<std::size_t>(i)] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(p[static_cast<std::size_t>(i)], p[rng.below(static_cast<std::uint64_t>(i + 1))]);
    return p;
}

std::vector<int> set_union(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

std::vector<int> set_intersection(const std::vector<int>& a, const std::vector<int>& b)
{
    std::vector<int> out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

bool subset_of(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

std::string label(const std::string& what, const Arrangement& arr)
{
    std::ostringstream os;
    os << what << " (n=" << arr.n() << ", l=" << arr.l() << ")";
    return os.str();
}

CheckResult fail(std::string name, std::string detail) { return {std::move(name), false, std::move(detail)}; }

int max_subset_size(const Arrangement& arr)
{
    return static_cast<int>(std::min<std::size_t>(arr.size(), arr.dimension() + 2));
}

} // namespace

CheckResult check_rank_axioms(const Arrangement& arr, int samples, std::uint64_t seed)
{
    const std::string name = label("matroid rank axioms", arr);
    const int h = static_cast<int>(arr.size());
    if (arr.rank({}) != 0) return fail(name, "rank of the empty set is nonzero");
    for (int s = 0; s < samples; ++s) {
        TrialStream rng(seed, static_cast<std::uint64_t>(s));
        const auto x = random_subset(rng, h, max_subset_size(arr));
        const auto y = random_subset(rng, h, max_subset_size(arr));
        const std::size_t rx = arr.rank(x), ry = arr.rank(y);
        if (rx > x.size()) return fail(name, "r(X) > |X|");
        const int e = static_cast<int>(rng.below(static_cast<std::uint64_t>(h)));
        const std::size_t rxe = arr.rank(set_union(x, {e}));
        if (rxe < rx || rxe > rx + 1) return fail(name, "adding one element changed the rank by more than one");
        const std::size_t ru = arr.rank(set_union(x, y)), ri = arr.rank(set_intersection(x, y));
        if (ru + ri > rx + ry) return fail(name, "submodularity violated");
        if (ru < std::max(rx, ry)) return fail(name, "monotonicity violated");
    }
    return {name, true, std::to_string(samples) + " random pairs"};
}

CheckResult check_closure_axioms(const Arrangement& arr, int samples, std::uint64_t seed)
{
    const std::string name = label("closure axioms", arr);
    const int h = static_cast<int>(arr.size());
    for (int s = 0; s < samples; ++s) {
        TrialStream rng(seed, static_cast<std::uint64_t>(s));
        const auto x = random_subset(rng, h, max_subset_size(arr));
        const Flat cx = arr.closure(x);
        if (!subset_of(x, cx.key)) return fail(name, "X not contained in cl(X)");
        if (arr.closure(cx.key).key != cx.key) return fail(name, "closure not idempotent");
        if (arr.rank(cx.key) != arr.rank(x)) return fail(name, "closure changed the rank");
        if (static_cast<std::size_t>(cx.dimension) + arr.rank(x) != arr.dimension())
            return fail(name, "dimension + rank differs from the ambient dimension");
        const auto y = set_union(x, random_subset(rng, h, 2));
        if (!subset_of(cx.key, arr.closure(y).key)) return fail(name, "closure not monotone");
        // exchange: y in cl(X + x) \ cl(X) implies x in cl(X + y)
        const int a = static_cast<int>(rng.below(static_cast<std::uint64_t>(h)));
        const Flat cxa = arr.closure(set_union(x, {a}));
        for (int b : cxa.key) {
            if (std::binary_search(cx.key.begin(), cx.key.end(), b)) continue;
            const Flat cxb = arr.closure(set_union(x, {b}));
            if (!std::binary_search(cxb.key.begin(), cxb.key.end(), a)) return fail(name, "exchange property violated");
        }
    }
    return {name, true, std::to_string(samples) + " random subsets"};
}

CheckResult check_equivariance(const Arrangement& arr, int samples, std::uint64_t seed)
{
    const std::string name = label("S_n-equivariance of normals and flats", arr);
    const int n = arr.n(), h = static_cast<int>(arr.size());
    for (int s = 0; s < samples; ++s) {
        TrialStream rng(seed, static_cast<std::uint64_t>(s));
        const Permutation sigma = random_permutation(rng, n);
        const RationalMatrix act(arr.module().action(sigma));
        for (int j = 0; j < h; ++j) {
            IntMatrix w(0, arr.dimension());
            w.append_row(arr.normal(j));
            const RationalMatrix moved = act * RationalMatrix(w.transpose());
            auto image = primitive_integer_vector(moved);
            const Subset target = specht::apply(sigma, arr.label(j));
            const auto expected = arr.normal(arr.index_of(target));
            if (!std::equal(image.begin(), image.end(), expected.begin(), expected.end()))
                return fail(name, "sigma w_alpha is not a multiple of w_{sigma alpha}");
        }
        const auto x = random_subset(rng, h, max_subset_size(arr));
        const auto lhs = arr.closure(arr.permute(sigma, x)).key;
        if (lhs != arr.permute(sigma, arr.closure(x).key)) return fail(name, "cl(sigma S) != sigma cl(S)");
    }
    return {name, true, std::to_string(samples) + " random permutations"};
}

CheckResult check_general_hook_agreement(int n, int l)
{
    std::ostringstream nm;
    nm << "polytabloid vs exterior-power hyperplanes (n=" << n << ", l=" << l << ")";
    const Partition lambda = Partition::hook(n, l);
    // lambda[n] for the padded hook is lambda itself; strip the first row for the generic builder
    std::vector<int> tail(lambda.parts().begin() + 1, lambda.parts().end());
    const GeneralSpechtModule general = GeneralSpechtModule::build(Partition(tail), n);
    const Arrangement arr = Arrangement::build(n, l);
    const RationalMatrix psi(hook_tabloid_to_exterior(general.space()));
    const RationalMatrix to_exterior = psi * general.basis();
    const RationalMatrix embed(arr.module().exterior_embedding());
    if (rank(to_exterior) != arr.dimension()) return fail(nm.str(), "tabloid map is not injective on the module");
    for (int j = 0; j < static_cast<int>(arr.size()); ++j) {
        const Subset& alpha = arr.label(j);
        std::vector<std::vector<int>> blocks{alpha};
        for (int x = 0; x < n; ++x)
            if (!std::binary_search(alpha.begin(), alpha.end(), x)) blocks.push_back({x});
        const RationalMatrix hook_side = embed * flat_subspace(arr, Flat{{j}, 0, std::nullopt});
        for (auto choice : {GeneratorChoice::star, GeneratorChoice::path}) {
            const RationalMatrix general_side = to_exterior * general.hyperplane(blocks, choice);
            if (!same_column_space(general_side, hook_side))
                return fail(nm.str(), "hyperplane mismatch at hyperplane " + std::to_string(j));
        }
    }
    return {nm.str(), true, std::to_string(arr.size()) + " hyperplanes, star and path generators"};
}

CheckResult check_stability_agreement(const Arrangement& arr, const std::vector<Flat>& lines)
{
    const std::string name = label("stability: pair test vs fixed-space test", arr);
    for (const Flat& f : lines)
        if (is_stable(arr, f) != is_stable_by_fixed_space(arr, f))
            return fail(name, "disagreement on a line of size " + std::to_string(f.size()));
    return {name, true, std::to_string(lines.size()) + " lines"};
}

CheckResult check_contraction_to_special_flats(int n, int l)
{
    std::ostringstream nm;
    nm << "contraction to F_f vs arrangement of rank n-1 (n=" << n << ", l=" << l << ")";
    const Arrangement big = Arrangement::build(n, l);
    const Arrangement small = Arrangement::build(n - 1, l);
    const FlatLattice target = enumerate_lattice(small);
    std::size_t checked = 0;
    for (const auto& blocks : set_partitions(n, n - 1)) {
        const SetMap f = SetMap::from_blocks(blocks);
        const SpecialFlat sf = special_flat(big, f);
        const Contraction con = contraction(big, sf.flat);
        if (con.arrangement.size() != small.size())
            return fail(nm.str(), "contraction has " + std::to_string(con.arrangement.size()) + " hyperplanes");
        std::vector<int> atom_of(small.size(), -2);
        for (const SetMap& g : f.sections()) {
            for (int a = 0; a < static_cast<int>(small.size()); ++a) {
                Subset image;
                for (int x : small.label(a)) image.push_back(g(x));
                std::sort(image.begin(), image.end());
                const int atom = con.atom_of_parent[static_cast<std::size_t>(big.index_of(image))];
                if (atom < 0) return fail(nm.str(), "H_{g(alpha)} contains F_f");
                if (atom_of[static_cast<std::size_t>(a)] == -2) atom_of[static_cast<std::size_t>(a)] = atom;
                if (atom_of[static_cast<std::size_t>(a)] != atom) return fail(nm.str(), "correspondence depends on the section");
            }
        }
        if (std::set<int>(atom_of.begin(), atom_of.end()).size() != small.size())
            return fail(nm.str(), "correspondence is not a bijection on hyperplanes");
        // the atom bijection carries flats to flats of the same rank
        const FlatLattice mine = enumerate_lattice(con.arrangement);
        if (mine.size() != target.size()) return fail(nm.str(), "lattices differ in size");
        for (std::size_t k = 0; k < target.size(); ++k) {
            std::vector<int> image;
            for (int a : target.flats[k]) image.push_back(atom_of[static_cast<std::size_t>(a)]);
            std::sort(image.begin(), image.end());
            const Flat closed = con.arrangement.closure(image);
            if (closed.key != image || static_cast<int>(con.arrangement.rank(image)) != target.ranks[k])
                return fail(nm.str(), "hyperplane correspondence does not preserve flats");
        }
        if (!lattice_isomorphic(mine, target)) return fail(nm.str(), "lattices not isomorphic");
        ++checked;
    }
    return {nm.str(), true, std::to_string(checked) + " fiber types"};
}

CheckResult check_section_average(int n, int l)
{
    std::ostringstream nm;
    nm << "section average splits the push-forward onto F_f (n=" << n << ", l=" << l << ")";
    const Arrangement arr = Arrangement::build(n, l);
    std::size_t checked = 0;
    for (int m = l + 1; m <= n; ++m) {
        for (const auto& blocks : set_partitions(n, m)) {
            const SetMap base = SetMap::from_blocks(blocks);
            const Flat ff = special_flat(arr, base).flat;
            const RationalMatrix flat_basis = flat_subspace(arr, ff);
            // every labeling of the blocks gives a distinct surjection with the same fibers
            std::vector<int> relabel(static_cast<std::size_t>(m));
            for (int i = 0; i < m; ++i) relabel[static_cast<std::size_t>(i)] = i;
            do {
                const SetMap f = compose(SetMap(m, relabel), base);
                const LinearMap phi = section_average(f, l);
                const LinearMap push = pushforward(f, l);
                if (!(compose(push, phi) == LinearMap::identity(phi.domain_dim())))
                    return fail(nm.str(), "f_* phi_f is not the identity");
                if (rank(phi.matrix()) != flat_basis.cols() || !same_column_space(phi.matrix(), flat_basis))
                    return fail(nm.str(), "image of phi_f differs from F_f");
                ++checked;
            } while (std::next_permutation(relabel.begin(), relabel.end()));
        }
    }
    return {nm.str(), true, std::to_string(checked) + " surjections"};
}

std::vector<CheckResult> run_verify(const VerifyOptions& opts)
{
    std::vector<CheckResult> out;
    auto guarded = [&](const std::string& name, auto&& body) {
        try {
            out.push_back(body());
        } catch (const std::exception& e) {
            out.push_back(fail(name, std::string("threw: ") + e.what()));
        }
    };
    const int top = opts.full ? 6 : 5;
    for (int n = 4; n <= top; ++n) {
        const Arrangement arr = Arrangement::build(n, 2);
        guarded("rank axioms", [&] { return check_rank_axioms(arr, 200, opts.seed); });
        guarded("closure axioms", [&] { return check_closure_axioms(arr, 100, opts.seed); });
        guarded("equivariance", [&] { return check_equivariance(arr, 20, opts.seed); });
        guarded("stability agreement", [&] {
            EnumerationOptions eo;
            eo.workers = opts.workers;
            return check_stability_agreement(arr, enumerate_lines(arr, eo));
        });
    }
    for (int n = 3; n <= 5; ++n)
        for (int l = 1; l + 1 <= n; ++l)
            guarded("general vs hook", [&] { return check_general_hook_agreement(n, l); });
    guarded("contraction", [&] { return check_contraction_to_special_flats(5, 2); });
    for (int n = 3; n <= top; ++n) guarded("section average", [&] { return check_section_average(n, 2); });

    struct Expected {
        int n;
        std::uint64_t lines;
        std::string percent;
    };
    std::vector<Expected> table{{4, 6, "0.0"}, {5, 37, "32.4"}};
    if (opts.full) table.push_back({6, 570, "52.6"});
    for (const auto& e : table) {
        const std::string name = "line census n=" + std::to_string(e.n) + ", l=2";
        guarded(name, [&] {
            EnumerationOptions eo;
            eo.workers = opts.workers;
            const CensusRow row = line_census(e.n, 2, eo);
            const bool ok = row.total_lines == e.lines && row.percent_unstable() == e.percent;
            return CheckResult{name, ok, std::to_string(row.total_lines) + " lines, " + row.percent_unstable() + "% unstable"};
        });
    }
    for (int n = 4; n <= top; ++n) {
        const std::string name = "braid c1 n=" + std::to_string(n);
        guarded(name, [&] {
            const KlCoefficient c = kl_first_coefficient_exact(n, 1);
            const std::int64_t expected = (std::int64_t{1} << (n - 1)) - 1 - static_cast<std::int64_t>(binomial(n, 2));
            return CheckResult{name, c.c1 == expected, "c1 = " + std::to_string(c.c1)};
        });
    }
    return out;
}

} // namespace specht
