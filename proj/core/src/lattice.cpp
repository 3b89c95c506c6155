#include "specht/lattice.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "specht/errors.hpp"

namespace specht {

std::vector<std::size_t> FlatLattice::rank_profile() const
{
    int top = 0;
    for (int r : ranks) top = std::max(top, r);
    std::vector<std::size_t> out(static_cast<std::size_t>(top) + 1, 0);
    for (int r : ranks) ++out[static_cast<std::size_t>(r)];
    return out;
}

FlatLattice enumerate_lattice(const Arrangement& arr, std::size_t max_flats)
{
    FlatLattice lat;
    lat.atom_count = arr.size();
    const int d = static_cast<int>(arr.dimension());

    std::set<std::vector<int>> level{arr.closure({}).key};
    std::set<std::vector<int>> all = level;
    std::map<std::vector<int>, int> rank_of{{*level.begin(), 0}};
    while (!level.empty()) {
        std::set<std::vector<int>> next;
        for (const auto& key : level) {
            std::vector<char> in(arr.size(), 0);
            for (int j : key) in[static_cast<std::size_t>(j)] = 1;
            for (int j = 0; j < static_cast<int>(arr.size()); ++j) {
                if (in[static_cast<std::size_t>(j)]) continue;
                std::vector<int> s = key;
                s.insert(std::upper_bound(s.begin(), s.end(), j), j);
                Flat f = arr.closure(s);
                if (all.count(f.key)) continue;
                rank_of[f.key] = d - f.dimension;
                all.insert(f.key);
                next.insert(std::move(f.key));
                if (all.size() > max_flats) {
                    lat.complete = false;
                    for (const auto& k : all) {
                        lat.flats.push_back(k);
                        lat.ranks.push_back(rank_of[k]);
                    }
                    return lat;
                }
            }
        }
        level = std::move(next);
    }
    for (const auto& k : all) {
        lat.flats.push_back(k);
        lat.ranks.push_back(rank_of[k]);
    }
    lat.complete = true;
    return lat;
}

FlatLattice partition_lattice(int n)
{
    FlatLattice lat;
    lat.atom_count = static_cast<std::size_t>(n * (n - 1) / 2);
    for (int k = 1; k <= n; ++k) {
        for (const auto& blocks : set_partitions(n, k)) {
            std::vector<int> atoms;
            int idx = 0;
            for (int i = 0; i < n; ++i)
                for (int j = i + 1; j < n; ++j, ++idx)
                    if (blocks[static_cast<std::size_t>(i)] == blocks[static_cast<std::size_t>(j)]) atoms.push_back(idx);
            lat.flats.push_back(std::move(atoms));
            lat.ranks.push_back(n - k);
        }
    }
    lat.complete = true;
    return lat;
}

namespace {

bool is_subset(const std::vector<int>& a, const std::vector<int>& b)
{
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

using FlatProfile = std::tuple<int, std::size_t, int, int>;

std::vector<FlatProfile> certificate(const FlatLattice& lat)
{
    std::vector<int> up(lat.size(), 0), down(lat.size(), 0);
    for (std::size_t x = 0; x < lat.size(); ++x)
        for (std::size_t y = 0; y < lat.size(); ++y)
            if (lat.ranks[y] == lat.ranks[x] + 1 && is_subset(lat.flats[x], lat.flats[y])) {
                ++up[x];
                ++down[y];
            }
    std::vector<FlatProfile> out;
    for (std::size_t x = 0; x < lat.size(); ++x) out.emplace_back(lat.ranks[x], lat.flats[x].size(), up[x], down[x]);
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<std::vector<std::pair<int, std::size_t>>> atom_signatures(const FlatLattice& lat)
{
    std::vector<std::vector<std::pair<int, std::size_t>>> sig(lat.atom_count);
    for (std::size_t x = 0; x < lat.size(); ++x)
        for (int a : lat.flats[x]) sig[static_cast<std::size_t>(a)].emplace_back(lat.ranks[x], lat.flats[x].size());
    for (auto& s : sig) std::sort(s.begin(), s.end());
    return sig;
}

} // namespace

bool lattice_isomorphic(const FlatLattice& a, const FlatLattice& b)
{
    if (!a.complete || !b.complete) throw InvalidArgument("lattice_isomorphic needs fully enumerated lattices");
    if (a.atom_count != b.atom_count || a.size() != b.size()) return false;
    if (certificate(a) != certificate(b)) return false;

    const auto sig_a = atom_signatures(a);
    const auto sig_b = atom_signatures(b);
    const std::size_t atoms = a.atom_count;

    std::set<std::pair<int, std::vector<int>>> b_flats;
    for (std::size_t y = 0; y < b.size(); ++y) b_flats.emplace(b.ranks[y], b.flats[y]);

    // flats of `a` to check once their largest atom is assigned
    std::vector<std::vector<std::size_t>> due(atoms);
    for (std::size_t x = 0; x < a.size(); ++x)
        if (!a.flats[x].empty()) due[static_cast<std::size_t>(a.flats[x].back())].push_back(x);

    std::vector<int> image(atoms, -1);
    std::vector<char> used(atoms, 0);
    auto assign = [&](auto&& self, std::size_t atom) -> bool {
        if (atom == atoms) return true;
        for (std::size_t cand = 0; cand < atoms; ++cand) {
            if (used[cand] || sig_a[atom] != sig_b[cand]) continue;
            image[atom] = static_cast<int>(cand);
            used[cand] = 1;
            bool ok = true;
            for (std::size_t x : due[atom]) {
                std::vector<int> mapped;
                for (int t : a.flats[x]) mapped.push_back(image[static_cast<std::size_t>(t)]);
                std::sort(mapped.begin(), mapped.end());
                if (!b_flats.count({a.ranks[x], mapped})) {
                    ok = false;
                    break;
                }
            }
            if (ok && self(self, atom + 1)) return true;
            used[cand] = 0;
            image[atom] = -1;
        }
        return false;
    };
    return assign(assign, 0);
}

} // namespace specht
