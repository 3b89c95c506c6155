#ifndef SPECHT_LATTICE_HPP
#define SPECHT_LATTICE_HPP

#include <cstdint>
#include <vector>

#include "specht/arrangement.hpp"

namespace specht {

/// Lattice of flats, each flat given by its set of atoms (hyperplane indices) and its
/// rank (codimension). Ordered by inclusion of atom sets.
struct FlatLattice {
    std::size_t atom_count = 0;
    std::vector<std::vector<int>> flats;
    std::vector<int> ranks;
    bool complete = false;

    std::size_t size() const { return flats.size(); }
    /// Number of flats of each rank, indexed by rank.
    std::vector<std::size_t> rank_profile() const;
};

/// Every flat of the arrangement, built rank by rank from closures of F + {H}.
/// Stops early with complete = false once `max_flats` is exceeded.
FlatLattice enumerate_lattice(const Arrangement& arr, std::size_t max_flats = 200'000);

/// Lattice of set partitions of [n]; atoms are the pairs {i < j} in lexicographic
/// order, which matches the hyperplane order of the braid arrangement build(n, 1).
FlatLattice partition_lattice(int n);

/// Rank-preserving order isomorphism test. A cheap certificate (sorted per-flat
/// rank, size and cover degrees) is compared first; matching certificates are then
/// confirmed by backtracking over atom bijections. Throws InvalidArgument on
/// incomplete input.
bool lattice_isomorphic(const FlatLattice& a, const FlatLattice& b);

} // namespace specht

#endif // SPECHT_LATTICE_HPP
