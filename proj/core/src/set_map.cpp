#include "specht/set_map.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "specht/errors.hpp"

namespace specht {

SetMap::SetMap(int target_size, std::vector<int> values) : target_(target_size), values_(std::move(values))
{
    if (target_ < 0) throw InvalidArgument("set map target size must be non-negative");
    std::vector<int> hits(static_cast<std::size_t>(target_), 0);
    for (int v : values_) {
        if (v < 0 || v >= target_)
            throw InvalidArgument("set map value " + std::to_string(v) + " outside [0," +
                                  std::to_string(target_) + ")");
        ++hits[static_cast<std::size_t>(v)];
    }
    const bool inj = std::all_of(hits.begin(), hits.end(), [](int h) { return h <= 1; });
    const bool sur = std::all_of(hits.begin(), hits.end(), [](int h) { return h >= 1; });
    kind_ = inj && sur ? SetMapKind::bijection
          : inj        ? SetMapKind::injection
          : sur        ? SetMapKind::surjection
                       : SetMapKind::other;
}

SetMap SetMap::identity(int n)
{
    std::vector<int> v(static_cast<std::size_t>(n));
    std::iota(v.begin(), v.end(), 0);
    return SetMap(n, std::move(v));
}

SetMap SetMap::inclusion(int m, int n)
{
    if (m > n) throw InvalidArgument("inclusion [m] -> [n] needs m <= n");
    std::vector<int> v(static_cast<std::size_t>(m));
    std::iota(v.begin(), v.end(), 0);
    return SetMap(n, std::move(v));
}

SetMap SetMap::from_blocks(std::span<const int> blocks)
{
    int k = 0;
    for (int b : blocks) k = std::max(k, b + 1);
    SetMap f(k, std::vector<int>(blocks.begin(), blocks.end()));
    if (!f.surjective()) throw InvalidArgument("block labels must be 0..k-1 with no gaps");
    return f;
}

std::vector<std::vector<int>> SetMap::fibers() const
{
    std::vector<std::vector<int>> out(static_cast<std::size_t>(target_));
    for (int i = 0; i < source_size(); ++i) out[static_cast<std::size_t>(values_[i])].push_back(i);
    return out;
}

std::vector<SetMap> SetMap::sections() const
{
    if (!surjective()) throw InvalidArgument("sections require a surjection");
    const auto fib = fibers();
    std::vector<SetMap> out;
    std::vector<int> choice(static_cast<std::size_t>(target_), 0);
    for (;;) {
        std::vector<int> g(static_cast<std::size_t>(target_));
        for (int y = 0; y < target_; ++y) g[y] = fib[y][choice[y]];
        out.emplace_back(source_size(), std::move(g));
        int y = target_ - 1;
        while (y >= 0 && ++choice[y] == static_cast<int>(fib[y].size())) choice[y--] = 0;
        if (y < 0) break;
    }
    return out;
}

SetMap compose(const SetMap& outer, const SetMap& inner)
{
    if (inner.target_size() != outer.source_size())
        throw InvalidArgument("set maps are not composable");
    std::vector<int> v(inner.values().size());
    for (std::size_t i = 0; i < v.size(); ++i) v[i] = outer(inner(static_cast<int>(i)));
    return SetMap(outer.target_size(), std::move(v));
}

} // namespace specht
