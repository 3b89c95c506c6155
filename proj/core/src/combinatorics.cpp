#include "specht/combinatorics.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "specht/errors.hpp"

namespace specht {

std::uint64_t binomial(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    unsigned __int128 r = 1;
    for (int i = 1; i <= k; ++i) {
        r = r * static_cast<unsigned>(n - k + i) / static_cast<unsigned>(i);
        if (r > UINT64_MAX)
            throw InvalidArgument("binomial(" + std::to_string(n) + "," + std::to_string(k) +
                                  ") overflows 64 bits");
    }
    return static_cast<std::uint64_t>(r);
}

mpz_class binomial_big(int n, int k)
{
    if (k < 0 || n < 0 || k > n) return 0;
    mpz_class r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return r;
}

mpz_class stirling2(int n, int k)
{
    if (n < 0 || k < 0) throw InvalidArgument("stirling2: negative argument");
    if (k > n) return 0;
    // row[j] holds S(i, j) for the current i
    std::vector<mpz_class> row(static_cast<std::size_t>(k) + 1, 0);
    row[0] = 1;
    for (int i = 1; i <= n; ++i) {
        for (int j = std::min(i, k); j >= 1; --j)
            row[j] = j * row[j] + row[j - 1];
        row[0] = 0;
    }
    return row[k];
}

std::uint64_t lex_rank(std::span<const int> subset, int n)
{
    const int k = static_cast<int>(subset.size());
    std::uint64_t r = 0;
    int prev = -1;
    for (int i = 0; i < k; ++i) {
        for (int v = prev + 1; v < subset[i]; ++v)
            r += binomial(n - v - 1, k - i - 1);
        prev = subset[i];
    }
    return r;
}

Subset lex_unrank(std::uint64_t rank, int n, int k)
{
    Subset out;
    out.reserve(static_cast<std::size_t>(k));
    int v = 0;
    for (int i = 0; i < k; ++i) {
        for (;; ++v) {
            const std::uint64_t block = binomial(n - v - 1, k - i - 1);
            if (rank < block) break;
            rank -= block;
        }
        out.push_back(v++);
    }
    return out;
}

bool next_combination(Subset& subset, int n)
{
    const int k = static_cast<int>(subset.size());
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) return false;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
    return true;
}

std::vector<Subset> all_subsets(int n, int k)
{
    std::vector<Subset> out;
    if (k < 0 || k > n) return out;
    Subset s(static_cast<std::size_t>(k));
    std::iota(s.begin(), s.end(), 0);
    do {
        out.push_back(s);
    } while (next_combination(s, n));
    return out;
}

namespace {

void grow_partitions(std::vector<int>& rgs, int pos, int used, int n, int k,
                     std::vector<std::vector<int>>& out)
{
    if (pos == n) {
        if (used == k) out.push_back(rgs);
        return;
    }
    // not enough remaining positions to open the missing blocks
    if (k - used > n - pos) return;
    for (int b = 0; b <= std::min(used, k - 1); ++b) {
        rgs[pos] = b;
        grow_partitions(rgs, pos + 1, std::max(used, b + 1), n, k, out);
    }
}

} // namespace

std::vector<std::vector<int>> set_partitions(int n, int k)
{
    std::vector<std::vector<int>> out;
    if (n == 0) {
        if (k == 0) out.emplace_back();
        return out;
    }
    if (k <= 0 || k > n) return out;
    std::vector<int> rgs(static_cast<std::size_t>(n), 0);
    grow_partitions(rgs, 0, 0, n, k, out);
    return out;
}

int sort_sign(std::vector<int>& values)
{
    int sign = 1;
    for (std::size_t i = 1; i < values.size(); ++i) {
        for (std::size_t j = i; j > 0 && values[j - 1] > values[j]; --j) {
            std::swap(values[j - 1], values[j]);
            sign = -sign;
        }
    }
    return sign;
}

int permutation_sign(std::span<const int> perm)
{
    std::vector<char> seen(perm.size(), 0);
    int sign = 1;
    for (std::size_t i = 0; i < perm.size(); ++i) {
        if (seen[i]) continue;
        std::size_t len = 0;
        for (std::size_t j = i; !seen[j]; j = static_cast<std::size_t>(perm[j])) {
            seen[j] = 1;
            ++len;
        }
        if (len % 2 == 0) sign = -sign;
    }
    return sign;
}

Permutation compose(std::span<const int> outer, std::span<const int> inner)
{
    Permutation out(inner.size());
    for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[static_cast<std::size_t>(inner[i])];
    return out;
}

Permutation inverse(std::span<const int> perm)
{
    Permutation out(perm.size());
    for (std::size_t i = 0; i < perm.size(); ++i) out[static_cast<std::size_t>(perm[i])] = static_cast<int>(i);
    return out;
}

Permutation transposition(int n, int i, int j)
{
    Permutation p(static_cast<std::size_t>(n));
    std::iota(p.begin(), p.end(), 0);
    std::swap(p[i], p[j]);
    return p;
}

Subset apply(std::span<const int> perm, std::span<const int> subset)
{
    Subset out;
    out.reserve(subset.size());
    for (int x : subset) out.push_back(perm[static_cast<std::size_t>(x)]);
    std::sort(out.begin(), out.end());
    return out;
}

} // namespace specht
