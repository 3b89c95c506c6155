#ifndef SPECHT_HOOK_MODULE_HPP
#define SPECHT_HOOK_MODULE_HPP

#include <cstdint>
#include <span>
#include <vector>

#include "specht/combinatorics.hpp"
#include "specht/int_matrix.hpp"
#include "specht/partition.hpp"
#include "specht/rational_matrix.hpp"
#include "specht/set_map.hpp"

namespace specht {

/// The Specht module of the hook (n-l, 1^l), realized as the l-th exterior power of
/// the standard representation {x in Q^n : sum x = 0}.
///
/// Working basis: wedge monomials d_I = d_{i_1} ^ ... ^ d_{i_l} over sorted l-subsets
/// I of {1, ..., n-1}, where d_i = e_i - e_0. Index 0 is the anchor, so d_0 = 0.
/// Basis vectors are ordered lexicographically.
///
/// A set map h : [m] -> [n] acts by d_i -> d_{h(i)} - d_{h(0)}, which is e_i -> e_{h(i)}
/// restricted to the standard representation. Permutations give the S_n action and
/// injections the FI structure; all of these matrices are integral.
class HookModule {
public:
    /// n < l + 1 yields the zero module (dimension 0, is_zero() true).
    static HookModule build(int n, int l);

    int n() const { return n_; }
    int l() const { return l_; }
    std::size_t dimension() const { return basis_.size(); }
    bool is_zero() const { return basis_.empty(); }
    Partition shape() const { return Partition::hook(n_, l_); }

    /// Basis labels: l-subsets of {1, ..., n-1}.
    const std::vector<Subset>& basis() const { return basis_; }
    std::size_t basis_index(std::span<const int> label) const;

    /// Normal vector of the hyperplane H_alpha for an (l+1)-subset alpha: the wedge
    /// (d_{a_1} - d_{a_0}) ^ ... ^ (d_{a_l} - d_{a_0}), scaled to content 1 with its
    /// first nonzero coordinate positive.
    std::vector<std::int64_t> normal(std::span<const int> alpha) const;

    /// Matrix of sigma acting on the working basis.
    IntMatrix action(std::span<const int> sigma) const;

    /// Inclusion into the l-th exterior power of Q^n, coordinates in the lex-ordered
    /// basis e_J (J an l-subset of [n]). Rows: C(n, l); columns: dimension().
    IntMatrix exterior_embedding() const;

    /// Gram matrix of the S_n-invariant pairing inherited from the standard inner
    /// product on the exterior power of Q^n.
    IntMatrix invariant_gram() const;

private:
    HookModule(int n, int l, std::vector<Subset> basis) : n_(n), l_(l), basis_(std::move(basis)) {}

    int n_;
    int l_;
    std::vector<Subset> basis_;
};

/// Matrix of the map induced by an arbitrary set map h : [m] -> [n] from the
/// (n-l,1^l)-hook basis of degree m to that of degree n (dim C(n-1,l) x C(m-1,l)).
IntMatrix wedge_power(const SetMap& h, int l);

/// FI structure map f_* : S_m -> S_n for an injection f : [m] -> [n].
LinearMap induced_map(const SetMap& f, int l);

/// Push-forward f_* : S_n -> S_m along a surjection f : [n] -> [m], applying f to the indices.
LinearMap pushforward(const SetMap& f, int l);

/// phi_f = (1 / n_f) sum over sections g of f of g_*, a map S_m -> S_n.
LinearMap section_average(const SetMap& f, int l);

/// Basis (as columns) of the subspace fixed by an integer action matrix.
RationalMatrix fixed_space(const IntMatrix& action);

} // namespace specht

#endif // SPECHT_HOOK_MODULE_HPP
