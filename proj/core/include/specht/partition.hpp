#ifndef SPECHT_PARTITION_HPP
#define SPECHT_PARTITION_HPP

#include <optional>
#include <string>
#include <vector>

namespace specht {

/// Weakly decreasing tuple of positive integers. The empty tuple is the partition of 0.
class Partition {
public:
    Partition() = default;
    /// Throws InvalidArgument unless parts are positive and weakly decreasing.
    explicit Partition(std::vector<int> parts);

    static Partition hook(int n, int l);

    const std::vector<int>& parts() const { return parts_; }
    int length() const { return static_cast<int>(parts_.size()); }
    int size() const;
    int first() const { return parts_.empty() ? 0 : parts_.front(); }
    int operator[](int i) const { return parts_[static_cast<std::size_t>(i)]; }

    Partition conjugate() const;
    std::string to_string() const;

    friend bool operator==(const Partition&, const Partition&) = default;
    friend auto operator<=>(const Partition&, const Partition&) = default;

private:
    std::vector<int> parts_;
};

/// lambda[n] = (n - |lambda|, lambda_1, ..., lambda_h).
class PaddedPartition {
public:
    const Partition& base() const { return base_; }
    int n() const { return n_; }
    const Partition& padded() const { return padded_; }

    friend std::optional<PaddedPartition> pad(const Partition& lambda, int n);

private:
    PaddedPartition(Partition base, int n, Partition padded)
        : base_(std::move(base)), n_(n), padded_(std::move(padded)) {}

    Partition base_;
    int n_ = 0;
    Partition padded_;
};

/// std::nullopt is the zero-module signal: S^lambda_n = 0 when n < |lambda| + lambda_1.
std::optional<PaddedPartition> pad(const Partition& lambda, int n);

} // namespace specht

#endif // SPECHT_PARTITION_HPP
