#ifndef SPECHT_SET_MAP_HPP
#define SPECHT_SET_MAP_HPP

#include <span>
#include <vector>

namespace specht {

enum class SetMapKind { injection, surjection, bijection, other };

/// A function [m] -> [n], 0-based, stored as its value table.
class SetMap {
public:
    /// Validates values are in range; the kind is derived from the table.
    SetMap(int target_size, std::vector<int> values);

    static SetMap identity(int n);
    /// Standard inclusion [m] -> [n], i -> i.
    static SetMap inclusion(int m, int n);
    /// Surjection [n] -> [k] whose fibers are the blocks of a restricted growth string.
    static SetMap from_blocks(std::span<const int> blocks);

    int source_size() const { return static_cast<int>(values_.size()); }
    int target_size() const { return target_; }
    const std::vector<int>& values() const { return values_; }
    int operator()(int i) const { return values_[static_cast<std::size_t>(i)]; }

    SetMapKind kind() const { return kind_; }
    bool injective() const { return kind_ == SetMapKind::injection || kind_ == SetMapKind::bijection; }
    bool surjective() const { return kind_ == SetMapKind::surjection || kind_ == SetMapKind::bijection; }

    /// fibers()[y] = sorted preimage of y.
    std::vector<std::vector<int>> fibers() const;

    /// All injections g: [n] -> [m] with (*this)(g(y)) = y. Requires surjectivity.
    std::vector<SetMap> sections() const;

    friend bool operator==(const SetMap&, const SetMap&) = default;

private:
    int target_;
    std::vector<int> values_;
    SetMapKind kind_;
};

/// (outer o inner)(i) = outer(inner(i)).
SetMap compose(const SetMap& outer, const SetMap& inner);

} // namespace specht

#endif // SPECHT_SET_MAP_HPP
