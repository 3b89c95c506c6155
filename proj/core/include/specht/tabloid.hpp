#ifndef SPECHT_TABLOID_HPP
#define SPECHT_TABLOID_HPP

#include <cstdint>
#include <map>
#include <vector>

#include "specht/int_matrix.hpp"
#include "specht/partition.hpp"
#include "specht/rational_matrix.hpp"

namespace specht {

/// Bijective filling of a Young diagram: rows[i] lists the entries of row i, left to right.
using Filling = std::vector<std::vector<int>>;

/// Row-equivalence class of a filling: row_of[x] is the row holding element x.
struct Tabloid {
    std::vector<int> row_of;
    friend auto operator<=>(const Tabloid&, const Tabloid&) = default;
};

Tabloid tabloid_of(const Filling& t);

/// The permutation module M^lambda with its tabloid basis (indexed in sorted order).
class TabloidSpace {
public:
    explicit TabloidSpace(Partition shape);

    const Partition& shape() const { return shape_; }
    int n() const { return shape_.size(); }
    std::size_t dimension() const { return tabloids_.size(); }
    const std::vector<Tabloid>& tabloids() const { return tabloids_; }
    std::size_t index(const Tabloid& t) const;

private:
    Partition shape_;
    std::vector<Tabloid> tabloids_;
    std::map<Tabloid, std::size_t> index_;
};

/// Throws InvalidArgument unless `t` fills the diagram of `shape` bijectively with [n].
void validate_filling(const Partition& shape, const Filling& t);

/// v_T = sum over the column group C(T) of sgn(sigma) {sigma T}, in tabloid coordinates.
std::vector<std::int64_t> polytabloid(const TabloidSpace& space, const Filling& t);

/// Standard Young tableaux of the shape, filled with 0..n-1.
std::vector<Filling> standard_tableaux(const Partition& shape);

enum class GeneratorChoice { star, path };

/// Dense model of S^lambda inside M^lambda, spanned by standard polytabloids.
/// Intended for small n; the hook-specific HookModule is the working path.
class GeneralSpechtModule {
public:
    static constexpr int default_max_n = 8;

    /// Module for lambda[n]. Throws ZeroModuleError for n < |lambda| + lambda_1 and
    /// BudgetExceeded for n > max_n.
    static GeneralSpechtModule build(const Partition& lambda, int n, int max_n = default_max_n);

    const Partition& shape() const { return space_.shape(); }
    int n() const { return space_.n(); }
    std::size_t dimension() const { return basis_.cols(); }
    const TabloidSpace& space() const { return space_; }

    /// Columns are the standard polytabloids in tabloid coordinates.
    const RationalMatrix& basis() const { return basis_; }

    /// Coordinates in the standard polytabloid basis of a vector lying in S^lambda.
    RationalMatrix coordinates(const RationalMatrix& tabloid_coords) const;

    RationalMatrix action(std::span<const int> sigma) const;

    /// H_alpha = sum over generating transpositions tau of S_alpha of the tau-fixed
    /// subspace; columns are a basis in standard polytabloid coordinates. The blocks of
    /// alpha must have the shape of the conjugate of lambda[n].
    RationalMatrix hyperplane(const std::vector<std::vector<int>>& alpha,
                              GeneratorChoice choice = GeneratorChoice::star) const;

private:
    GeneralSpechtModule(TabloidSpace space, std::vector<Filling> syt, RationalMatrix basis,
                        std::vector<std::size_t> pivot_rows, RationalMatrix pivot_inverse)
        : space_(std::move(space)), syt_(std::move(syt)), basis_(std::move(basis)),
          pivot_rows_(std::move(pivot_rows)), pivot_inverse_(std::move(pivot_inverse)) {}

    TabloidSpace space_;
    std::vector<Filling> syt_;
    RationalMatrix basis_;
    std::vector<std::size_t> pivot_rows_;
    RationalMatrix pivot_inverse_;
};

/// For a hook shape (n-l, 1^l): the equivariant map M^lambda -> exterior power of Q^n
/// sending the tabloid with rows 1..l holding b_1..b_l to e_{b_1} ^ ... ^ e_{b_l}.
IntMatrix hook_tabloid_to_exterior(const TabloidSpace& space);

} // namespace specht

#endif // SPECHT_TABLOID_HPP
