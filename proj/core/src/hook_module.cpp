#include "specht/hook_module.hpp"

#include <algorithm>
#include <map>
#include <string>

#include "specht/errors.hpp"

namespace specht {

namespace {

struct Term {
    int index;
    std::int64_t coef;
};

// Expands the wedge of linear factors, each a short list of terms over a ground set
// of size `ground`, into the lex-ordered monomial basis of that exterior power.
// Terms with index < 0 are dropped (they stand for the zero vector d_0).
void expand_wedge(const std::vector<std::vector<Term>>& factors, int ground, std::size_t column,
                  IntMatrix& out)
{
    const std::size_t k = factors.size();
    std::vector<int> picked(k);
    std::vector<std::int64_t> coefs(k);

    auto recurse = [&](auto&& self, std::size_t depth) -> void {
        if (depth == k) {
            std::vector<int> idx = picked;
            const int sign = sort_sign(idx);
            for (std::size_t i = 1; i < idx.size(); ++i)
                if (idx[i] == idx[i - 1]) return;
            std::int64_t c = sign;
            for (auto v : coefs) c *= v;
            out(lex_rank(idx, ground), column) += c;
            return;
        }
        for (const Term& t : factors[depth]) {
            if (t.index < 0) continue;
            if (std::find(picked.begin(), picked.begin() + static_cast<long>(depth), t.index) !=
                picked.begin() + static_cast<long>(depth))
                continue;
            picked[depth] = t.index;
            coefs[depth] = t.coef;
            self(self, depth + 1);
        }
    };
    recurse(recurse, 0);
}

// d_i in degree n lives at ground index i - 1 of {1..n-1}; d_0 maps to -1 (zero).
inline int d_slot(int i) { return i - 1; }

} // namespace

HookModule HookModule::build(int n, int l)
{
    if (l < 0 || n < 0) throw InvalidArgument("hook module needs n, l >= 0");
    if (n < l + 1) return HookModule(n, l, {});
    std::vector<Subset> basis;
    for (Subset s : all_subsets(n - 1, l)) {
        for (int& x : s) ++x;
        basis.push_back(std::move(s));
    }
    return HookModule(n, l, std::move(basis));
}

std::size_t HookModule::basis_index(std::span<const int> label) const
{
    std::vector<int> shifted(label.begin(), label.end());
    for (int& x : shifted) {
        if (x < 1 || x >= n_) throw InvalidArgument("basis label outside {1..n-1}");
        --x;
    }
    return lex_rank(shifted, n_ - 1);
}

std::vector<std::int64_t> HookModule::normal(std::span<const int> alpha) const
{
    if (is_zero()) throw ZeroModuleError("normal vector requested in a zero module");
    if (static_cast<int>(alpha.size()) != l_ + 1)
        throw InvalidArgument("hyperplane label must have l + 1 = " + std::to_string(l_ + 1) + " elements");
    std::vector<int> a(alpha.begin(), alpha.end());
    std::sort(a.begin(), a.end());
    if (std::adjacent_find(a.begin(), a.end()) != a.end() || a.front() < 0 || a.back() >= n_)
        throw InvalidArgument("hyperplane label must be a subset of [n]");

    std::vector<std::vector<Term>> factors;
    for (int k = 1; k <= l_; ++k) factors.push_back({{d_slot(a[k]), 1}, {d_slot(a[0]), -1}});
    IntMatrix v(dimension(), 1);
    expand_wedge(factors, n_ - 1, 0, v);
    std::vector<std::int64_t> out(v.rows());
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = v(i, 0);
    make_primitive(out);
    return out;
}

IntMatrix HookModule::action(std::span<const int> sigma) const
{
    if (static_cast<int>(sigma.size()) != n_) throw InvalidArgument("permutation has wrong degree");
    SetMap s(n_, std::vector<int>(sigma.begin(), sigma.end()));
    if (s.kind() != SetMapKind::bijection) throw InvalidArgument("action requires a permutation");
    return wedge_power(s, l_);
}

IntMatrix HookModule::exterior_embedding() const
{
    IntMatrix e(binomial(n_, l_), dimension());
    for (std::size_t c = 0; c < basis_.size(); ++c) {
        std::vector<std::vector<Term>> factors;
        for (int i : basis_[c]) factors.push_back({{i, 1}, {0, -1}});
        expand_wedge(factors, n_, c, e);
    }
    return e;
}

IntMatrix HookModule::invariant_gram() const
{
    const IntMatrix e = exterior_embedding();
    const std::size_t d = dimension();
    IntMatrix g(d, d);
    for (std::size_t i = 0; i < d; ++i)
        for (std::size_t j = 0; j < d; ++j) {
            std::int64_t s = 0;
            for (std::size_t r = 0; r < e.rows(); ++r) s += e(r, i) * e(r, j);
            g(i, j) = s;
        }
    return g;
}

IntMatrix wedge_power(const SetMap& h, int l)
{
    const int m = h.source_size();
    const int n = h.target_size();
    const HookModule src = HookModule::build(m, l);
    const HookModule dst = HookModule::build(n, l);
    IntMatrix out(dst.dimension(), src.dimension());
    if (src.is_zero() || dst.is_zero()) return out;
    const int anchor = d_slot(h(0));
    for (std::size_t c = 0; c < src.basis().size(); ++c) {
        std::vector<std::vector<Term>> factors;
        for (int i : src.basis()[c]) factors.push_back({{d_slot(h(i)), 1}, {anchor, -1}});
        expand_wedge(factors, n - 1, c, out);
    }
    return out;
}

LinearMap induced_map(const SetMap& f, int l)
{
    if (!f.injective()) throw InvalidArgument("induced_map requires an injection");
    if (HookModule::build(f.source_size(), l).is_zero() || HookModule::build(f.target_size(), l).is_zero())
        throw ZeroModuleError("induced_map between zero modules");
    return LinearMap(RationalMatrix(wedge_power(f, l)));
}

LinearMap pushforward(const SetMap& f, int l)
{
    if (!f.surjective()) throw InvalidArgument("pushforward requires a surjection");
    return LinearMap(RationalMatrix(wedge_power(f, l)));
}

LinearMap section_average(const SetMap& f, int l)
{
    if (!f.surjective()) throw InvalidArgument("section_average requires a surjection");
    if (HookModule::build(f.target_size(), l).is_zero())
        throw ZeroModuleError("section_average onto a zero module");
    const auto sections = f.sections();
    RationalMatrix sum(RationalMatrix(wedge_power(sections.front(), l)));
    for (std::size_t i = 1; i < sections.size(); ++i) sum = sum + RationalMatrix(wedge_power(sections[i], l));
    return LinearMap(Rational(1) / static_cast<long>(sections.size()) * sum);
}

RationalMatrix fixed_space(const IntMatrix& action)
{
    RationalMatrix a(action);
    return nullspace(a - RationalMatrix::identity(a.rows()));
}

} // namespace specht
