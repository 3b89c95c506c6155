#include "specht/tabloid.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "specht/combinatorics.hpp"
#include "specht/errors.hpp"

namespace specht {

Tabloid tabloid_of(const Filling& t)
{
    int n = 0;
    for (const auto& row : t) n += static_cast<int>(row.size());
    Tabloid out{std::vector<int>(static_cast<std::size_t>(n), -1)};
    for (std::size_t r = 0; r < t.size(); ++r)
        for (int x : t[r]) out.row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
    return out;
}

TabloidSpace::TabloidSpace(Partition shape) : shape_(std::move(shape))
{
    const int n = shape_.size();
    std::vector<int> room = shape_.parts();
    std::vector<int> row_of(static_cast<std::size_t>(n));
    auto fill = [&](auto&& self, int x) -> void {
        if (x == n) {
            tabloids_.push_back(Tabloid{row_of});
            return;
        }
        for (std::size_t r = 0; r < room.size(); ++r) {
            if (room[r] == 0) continue;
            --room[r];
            row_of[static_cast<std::size_t>(x)] = static_cast<int>(r);
            self(self, x + 1);
            ++room[r];
        }
    };
    fill(fill, 0);
    for (std::size_t i = 0; i < tabloids_.size(); ++i) index_.emplace(tabloids_[i], i);
}

std::size_t TabloidSpace::index(const Tabloid& t) const
{
    const auto it = index_.find(t);
    if (it == index_.end()) throw InvalidArgument("tabloid does not belong to this space");
    return it->second;
}

void validate_filling(const Partition& shape, const Filling& t)
{
    if (static_cast<int>(t.size()) != shape.length())
        throw InvalidArgument("filling has " + std::to_string(t.size()) + " rows, shape " + shape.to_string());
    std::vector<char> seen(static_cast<std::size_t>(shape.size()), 0);
    for (std::size_t r = 0; r < t.size(); ++r) {
        if (static_cast<int>(t[r].size()) != shape[static_cast<int>(r)])
            throw InvalidArgument("filling row " + std::to_string(r) + " does not match shape " + shape.to_string());
        for (int x : t[r]) {
            if (x < 0 || x >= shape.size() || seen[static_cast<std::size_t>(x)])
                throw InvalidArgument("filling is not a bijection onto [n]");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
}

std::vector<std::int64_t> polytabloid(const TabloidSpace& space, const Filling& t)
{
    validate_filling(space.shape(), t);
    const int width = space.shape().first();
    // columns[c] = row indices that have a box in column c
    std::vector<std::vector<int>> col_rows(static_cast<std::size_t>(width));
    for (std::size_t r = 0; r < t.size(); ++r)
        for (std::size_t c = 0; c < t[r].size(); ++c) col_rows[c].push_back(static_cast<int>(r));

    std::vector<std::int64_t> out(space.dimension(), 0);
    Filling work = t;
    std::vector<std::vector<int>> order(col_rows.size());
    for (std::size_t c = 0; c < col_rows.size(); ++c) {
        order[c].resize(col_rows[c].size());
        std::iota(order[c].begin(), order[c].end(), 0);
    }
    auto visit = [&](auto&& self, std::size_t c, int sign) -> void {
        if (c == col_rows.size()) {
            out[space.index(tabloid_of(work))] += sign;
            return;
        }
        auto& ord = order[c];
        std::sort(ord.begin(), ord.end());
        do {
            for (std::size_t k = 0; k < ord.size(); ++k)
                work[static_cast<std::size_t>(col_rows[c][k])][c] =
                    t[static_cast<std::size_t>(col_rows[c][static_cast<std::size_t>(ord[k])])][c];
            self(self, c + 1, sign * permutation_sign(ord));
        } while (std::next_permutation(ord.begin(), ord.end()));
    };
    visit(visit, 0, 1);
    return out;
}

std::vector<Filling> standard_tableaux(const Partition& shape)
{
    std::vector<Filling> out;
    Filling t(static_cast<std::size_t>(shape.length()));
    const int n = shape.size();
    auto place = [&](auto&& self, int x) -> void {
        if (x == n) {
            out.push_back(t);
            return;
        }
        for (int r = 0; r < shape.length(); ++r) {
            const auto len = static_cast<int>(t[static_cast<std::size_t>(r)].size());
            if (len == shape[r]) continue;
            if (r > 0 && static_cast<int>(t[static_cast<std::size_t>(r - 1)].size()) <= len) continue;
            t[static_cast<std::size_t>(r)].push_back(x);
            self(self, x + 1);
            t[static_cast<std::size_t>(r)].pop_back();
        }
    };
    place(place, 0);
    return out;
}

GeneralSpechtModule GeneralSpechtModule::build(const Partition& lambda, int n, int max_n)
{
    const auto padded = pad(lambda, n);
    if (!padded) throw ZeroModuleError("S^" + lambda.to_string() + "_" + std::to_string(n) + " is the zero module");
    if (n > max_n)
        throw BudgetExceeded("general Specht construction limited to n <= " + std::to_string(max_n) +
                             " (requested n = " + std::to_string(n) + ")");
    TabloidSpace space(padded->padded());
    auto syt = standard_tableaux(space.shape());

    RationalMatrix basis(space.dimension(), syt.size());
    for (std::size_t c = 0; c < syt.size(); ++c) {
        const auto v = polytabloid(space, syt[c]);
        for (std::size_t r = 0; r < v.size(); ++r) basis(r, c) = Rational(static_cast<long>(v[r]));
    }

    std::vector<std::size_t> pivot_rows;
    rref(basis.transpose(), &pivot_rows);
    const std::size_t d = syt.size();
    if (pivot_rows.size() != d) throw Error("standard polytabloids are not independent");

    RationalMatrix aug(d, 2 * d);
    for (std::size_t i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < d; ++j) aug(i, j) = basis(pivot_rows[i], j);
        aug(i, d + i) = 1;
    }
    const RationalMatrix red = rref(aug);
    RationalMatrix inv(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) inv(i, j) = red(i, d + j);

    return GeneralSpechtModule(std::move(space), std::move(syt), std::move(basis), std::move(pivot_rows),
                               std::move(inv));
}

RationalMatrix GeneralSpechtModule::coordinates(const RationalMatrix& tabloid_coords) const
{
    RationalMatrix picked(pivot_rows_.size(), tabloid_coords.cols());
    for (std::size_t i = 0; i < pivot_rows_.size(); ++i)
        for (std::size_t c = 0; c < tabloid_coords.cols(); ++c) picked(i, c) = tabloid_coords(pivot_rows_[i], c);
    return pivot_inverse_ * picked;
}

RationalMatrix GeneralSpechtModule::action(std::span<const int> sigma) const
{
    if (static_cast<int>(sigma.size()) != n()) throw InvalidArgument("permutation has wrong degree");
    RationalMatrix images(space_.dimension(), syt_.size());
    for (std::size_t c = 0; c < syt_.size(); ++c) {
        Filling moved = syt_[c];
        for (auto& row : moved)
            for (int& x : row) x = sigma[static_cast<std::size_t>(x)];
        const auto v = polytabloid(space_, moved);
        for (std::size_t r = 0; r < v.size(); ++r) images(r, c) = Rational(static_cast<long>(v[r]));
    }
    return coordinates(images);
}

RationalMatrix GeneralSpechtModule::hyperplane(const std::vector<std::vector<int>>& alpha,
                                               GeneratorChoice choice) const
{
    std::vector<int> sizes;
    std::vector<char> seen(static_cast<std::size_t>(n()), 0);
    for (const auto& block : alpha) {
        if (block.empty()) throw InvalidArgument("set partition has an empty block");
        sizes.push_back(static_cast<int>(block.size()));
        for (int x : block) {
            if (x < 0 || x >= n() || seen[static_cast<std::size_t>(x)])
                throw InvalidArgument("alpha is not a set partition of [n]");
            seen[static_cast<std::size_t>(x)] = 1;
        }
    }
    if (std::find(seen.begin(), seen.end(), 0) != seen.end())
        throw InvalidArgument("alpha does not cover [n]");
    std::sort(sizes.rbegin(), sizes.rend());
    if (Partition(sizes) != shape().conjugate())
        throw InvalidArgument("alpha has shape " + Partition(sizes).to_string() + ", expected " +
                              shape().conjugate().to_string());

    RationalMatrix sum(dimension(), 0);
    for (auto block : alpha) {
        std::sort(block.begin(), block.end());
        for (std::size_t k = 1; k < block.size(); ++k) {
            const int a = choice == GeneratorChoice::star ? block[0] : block[k - 1];
            const auto tau = transposition(n(), a, block[k]);
            const RationalMatrix fixed = nullspace(action(tau) - RationalMatrix::identity(dimension()));
            sum = sum.hcat(fixed);
        }
    }
    if (sum.cols() == 0) return sum;
    return column_basis(sum);
}

IntMatrix hook_tabloid_to_exterior(const TabloidSpace& space)
{
    const auto& parts = space.shape().parts();
    const int n = space.n();
    const int l = static_cast<int>(parts.size()) - 1;
    for (std::size_t i = 1; i < parts.size(); ++i)
        if (parts[i] != 1) throw InvalidArgument("hook_tabloid_to_exterior needs a hook shape");
    IntMatrix out(binomial(n, l), space.dimension());
    for (std::size_t c = 0; c < space.dimension(); ++c) {
        const auto& row_of = space.tabloids()[c].row_of;
        std::vector<int> b(static_cast<std::size_t>(l));
        for (int x = 0; x < n; ++x)
            if (row_of[static_cast<std::size_t>(x)] > 0) b[static_cast<std::size_t>(row_of[x] - 1)] = x;
        const int sign = sort_sign(b);
        out(lex_rank(b, n), c) += sign;
    }
    return out;
}

} // namespace specht
