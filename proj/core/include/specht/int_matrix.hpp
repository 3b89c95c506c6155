#ifndef SPECHT_INT_MATRIX_HPP
#define SPECHT_INT_MATRIX_HPP

#include <cstdint>
#include <span>
#include <vector>

namespace specht {

/// Dense row-major matrix of 64-bit integers.
class IntMatrix {
public:
    IntMatrix() = default;
    IntMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    std::int64_t& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    std::int64_t operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    std::span<std::int64_t> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
    std::span<const std::int64_t> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

    void append_row(std::span<const std::int64_t> values);
    /// Submatrix made of the listed rows, in the listed order.
    IntMatrix select_rows(std::span<const int> which) const;
    IntMatrix transpose() const;

    friend bool operator==(const IntMatrix&, const IntMatrix&) = default;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<std::int64_t> data_;
};

/// Exact rank over Q. Uses modular_rank when the Hadamard bound certifies it and
/// fraction_free_rank otherwise.
std::size_t exact_rank(const IntMatrix& m);

/// Exact rank over Q by fraction-free (Bareiss) elimination. Intermediate minors are
/// held in checked 128-bit integers; on overflow the elimination reruns in GMP integers.
std::size_t fraction_free_rank(const IntMatrix& m);

/// True when every minor of m is below 2^60 in magnitude, so no nonzero minor vanishes
/// mod 2^61 - 1 and modular_rank equals the rank over Q.
bool modular_rank_is_exact(const IntMatrix& m);

/// Rank over GF(p), p = 2^61 - 1. Never exceeds exact_rank; equality when it reaches
/// min(rows, cols) is therefore certified.
std::size_t modular_rank(const IntMatrix& m);

/// Basis of {x : m x = 0} as rows of primitive integer vectors (content 1, first
/// nonzero entry positive), one per non-pivot column in increasing column order.
/// Throws ArithmeticOverflow if an entry does not fit in 64 bits.
IntMatrix integer_kernel(const IntMatrix& m);

struct ArithmeticOverflow : std::exception {
    const char* what() const noexcept override { return "integer overflow in exact elimination"; }
};

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b);

/// Divides by the gcd and flips sign so the first nonzero entry is positive.
void make_primitive(std::span<std::int64_t> v);

} // namespace specht

#endif // SPECHT_INT_MATRIX_HPP
