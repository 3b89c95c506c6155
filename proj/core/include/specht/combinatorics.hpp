#ifndef SPECHT_COMBINATORICS_HPP
#define SPECHT_COMBINATORICS_HPP

#include <cstdint>
#include <span>
#include <vector>

#include <gmpxx.h>

namespace specht {

/// Sorted list of 0-based elements of [n].
using Subset = std::vector<int>;

/// Image table of a permutation of {0, ..., n-1}.
using Permutation = std::vector<int>;

/// Binomial coefficient; throws InvalidArgument when the result overflows 64 bits.
std::uint64_t binomial(int n, int k);
mpz_class binomial_big(int n, int k);

/// Stirling number of the second kind, S(n,k) = k S(n-1,k) + S(n-1,k-1).
mpz_class stirling2(int n, int k);

/// Position of a sorted k-subset of [n] in lexicographic order.
std::uint64_t lex_rank(std::span<const int> subset, int n);
Subset lex_unrank(std::uint64_t rank, int n, int k);

/// Advances a sorted k-subset of [n] to its lexicographic successor; false at the end.
bool next_combination(Subset& subset, int n);

/// All k-subsets of [n] in lexicographic order.
std::vector<Subset> all_subsets(int n, int k);

/// Set partitions of [n] into exactly k blocks, as restricted growth strings
/// (block[i] = block index of i, blocks numbered by first appearance).
std::vector<std::vector<int>> set_partitions(int n, int k);

/// Sign of the permutation that sorts the given sequence of distinct values.
int sort_sign(std::vector<int>& values);

int permutation_sign(std::span<const int> perm);
Permutation compose(std::span<const int> outer, std::span<const int> inner);
Permutation inverse(std::span<const int> perm);
Permutation transposition(int n, int i, int j);

/// Image of a subset under a permutation, sorted.
Subset apply(std::span<const int> perm, std::span<const int> subset);

} // namespace specht

#endif // SPECHT_COMBINATORICS_HPP
