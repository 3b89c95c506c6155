#include "specht/partition.hpp"

#include <numeric>

#include "specht/errors.hpp"

namespace specht {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts))
{
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) throw InvalidArgument("partition parts must be positive: " + to_string());
        if (i + 1 < parts_.size() && parts_[i] < parts_[i + 1])
            throw InvalidArgument("partition parts must be weakly decreasing: " + to_string());
    }
}

Partition Partition::hook(int n, int l)
{
    if (l < 0 || n < l + 1) throw InvalidArgument("hook (n-l, 1^l) needs n >= l + 1");
    std::vector<int> parts{n - l};
    parts.insert(parts.end(), static_cast<std::size_t>(l), 1);
    return Partition(std::move(parts));
}

int Partition::size() const
{
    return std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::conjugate() const
{
    std::vector<int> out(static_cast<std::size_t>(first()), 0);
    for (int p : parts_)
        for (int c = 0; c < p; ++c) ++out[static_cast<std::size_t>(c)];
    return Partition(std::move(out));
}

std::string Partition::to_string() const
{
    std::string s = "(";
    for (std::size_t i = 0; i < parts_.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(parts_[i]);
    }
    return s + ")";
}

std::optional<PaddedPartition> pad(const Partition& lambda, int n)
{
    if (n < lambda.size() + lambda.first()) return std::nullopt;
    std::vector<int> parts{n - lambda.size()};
    parts.insert(parts.end(), lambda.parts().begin(), lambda.parts().end());
    return PaddedPartition(lambda, n, Partition(std::move(parts)));
}

} // namespace specht
