#ifndef SPECHT_ARRANGEMENT_HPP
#define SPECHT_ARRANGEMENT_HPP

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/hook_module.hpp"
#include "specht/int_matrix.hpp"
#include "specht/rational_matrix.hpp"
#include "specht/set_map.hpp"

namespace specht {

/// A flat, identified by its closure key: the sorted indices of every hyperplane
/// containing the subspace. `dimension` is the vector-space dimension (matroidal corank).
struct Flat {
    std::vector<int> key;
    int dimension = 0;
    std::optional<bool> stable;

    std::size_t size() const { return key.size(); }

    friend bool operator==(const Flat& a, const Flat& b) { return a.key == b.key; }
    friend bool operator<(const Flat& a, const Flat& b) { return a.key < b.key; }
};

/// Central hyperplane arrangement given by integer normal vectors. Hyperplane j is
/// {x : <normal_j, x> = 0}; rank and closure depend only on the normals' linear matroid,
/// so they are the same for every nondegenerate pairing.
///
/// Built by `build(n, l)` it is the intrinsic arrangement of the hook (n-l, 1^l): one
/// hyperplane per (l+1)-subset alpha of [n], indexed in lexicographic order of alpha.
class Arrangement {
public:
    /// Throws ZeroModuleError when n < l + 1 and InvalidArgument when l < 1.
    static Arrangement build(int n, int l);
    static Arrangement from_normals(std::size_t dimension, IntMatrix normals);

    std::size_t dimension() const { return dimension_; }
    std::size_t size() const { return normals_.rows(); }
    const IntMatrix& normals() const { return normals_; }
    std::span<const std::int64_t> normal(int j) const { return normals_.row(static_cast<std::size_t>(j)); }

    bool is_hook() const { return module_.has_value(); }
    /// Hook-only accessors; throw InvalidArgument on generic arrangements.
    const HookModule& module() const;
    int n() const { return module().n(); }
    int l() const { return module().l(); }
    const Subset& label(int j) const;
    int index_of(std::span<const int> alpha) const;
    /// Hyperplane indices whose label contains both i and j.
    const std::vector<int>& hyperplanes_through_pair(int i, int j) const;
    /// sigma acting on hyperplane indices: H_alpha -> H_{sigma(alpha)}.
    std::vector<int> permute(std::span<const int> sigma, std::span<const int> indices) const;

    /// Rank of the normals indexed by S. Throws InvalidArgument on bad indices.
    std::size_t rank(std::span<const int> indices) const;
    /// Flat cut out by S: its key lists every hyperplane containing the intersection.
    Flat closure(std::span<const int> indices) const;

private:
    Arrangement(std::size_t dimension, IntMatrix normals) : dimension_(dimension), normals_(std::move(normals)) {}
    void check_indices(std::span<const int> indices) const;

    std::size_t dimension_ = 0;
    IntMatrix normals_;
    std::optional<HookModule> module_;
    std::vector<Subset> labels_;
    std::vector<std::vector<int>> pair_hyperplanes_;
};

struct SpecialFlat {
    Flat flat;
    /// m < l + 1: every hyperplane is involved and the flat is the zero subspace.
    bool degenerate = false;
};

/// F_f: the intersection of every H_alpha with |f(alpha)| < l + 1, for a surjection f : [n] -> [m].
SpecialFlat special_flat(const Arrangement& arr, const SetMap& f);

/// Stable iff some pair {i, j} has every (l+1)-subset containing it in the flat's key,
/// i.e. the flat lies in the fixed space of the transposition (i j).
bool is_stable(const Arrangement& arr, const Flat& flat);

/// Basis (columns) of the flat as a subspace of the hook module, hyperplanes taken
/// orthogonal to their normals under the S_n-invariant pairing.
RationalMatrix flat_subspace(const Arrangement& arr, const Flat& flat);

/// Linear-algebra stability test: the subspace is fixed pointwise by some transposition.
bool is_stable_by_fixed_space(const Arrangement& arr, const Flat& flat);

struct Contraction {
    /// Arrangement inside the flat, one hyperplane per distinct restricted normal.
    Arrangement arrangement;
    /// atom_of_parent[j] = contraction hyperplane cut by H_j, or -1 when H_j contains the flat.
    std::vector<int> atom_of_parent;
    std::vector<std::vector<int>> parents_of_atom;
};

/// A^F: the hyperplanes H_j intersected with F for H_j not containing F.
Contraction contraction(const Arrangement& arr, const Flat& flat);

struct Restriction {
    /// Arrangement on V / F; its hyperplanes are the H_j containing F.
    Arrangement arrangement;
    std::vector<std::vector<int>> parents_of_atom;
};

/// A_F: arrangement on V / F whose flats correspond to the flats of A containing F.
Restriction restriction(const Arrangement& arr, const Flat& flat);

struct EnumerationOptions {
    /// Maximum number of hyperplane subsets examined before giving up.
    std::uint64_t budget = 10'000'000;
    unsigned workers = 1;
};

/// Every 1-dimensional flat: closures of all rank-(dim-1) subsets of dim-1 hyperplanes,
/// deduplicated by key, sorted by key, with `stable` filled for hook arrangements.
/// Throws BudgetExceeded when C(#hyperplanes, dim-1) exceeds the budget.
std::vector<Flat> enumerate_lines(const Arrangement& arr, const EnumerationOptions& opts = {});

/// Closures of single hyperplanes, deduplicated and sorted by key.
std::vector<Flat> enumerate_rank1_flats(const Arrangement& arr);

} // namespace specht

#endif // SPECHT_ARRANGEMENT_HPP
