#ifndef SPECHT_RATIONAL_MATRIX_HPP
#define SPECHT_RATIONAL_MATRIX_HPP

#include <string>
#include <vector>

#include <gmpxx.h>

#include "specht/int_matrix.hpp"

namespace specht {

using Rational = mpq_class;

/// Dense row-major matrix over Q.
class RationalMatrix {
public:
    RationalMatrix() = default;
    RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}
    explicit RationalMatrix(const IntMatrix& m);

    static RationalMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }

    Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
    const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

    RationalMatrix transpose() const;
    RationalMatrix column(std::size_t c) const;
    /// Columns of *this followed by columns of other.
    RationalMatrix hcat(const RationalMatrix& other) const;

    bool is_zero() const;

    friend RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b);
    friend RationalMatrix operator*(const Rational& s, const RationalMatrix& a);
    friend bool operator==(const RationalMatrix& a, const RationalMatrix& b);

    std::string to_string() const;

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Rational> data_;
};

/// Reduced row echelon form; pivot columns are reported through `pivots` when given.
RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::size_t rank(const RationalMatrix& m);

/// Columns form a basis of {x : m x = 0}.
RationalMatrix nullspace(const RationalMatrix& m);
/// Columns form a basis of the column space (a subset of the input columns).
RationalMatrix column_basis(const RationalMatrix& m);

/// Column space of `a` contains every column of `b`.
bool column_space_contains(const RationalMatrix& a, const RationalMatrix& b);
bool same_column_space(const RationalMatrix& a, const RationalMatrix& b);

/// Scales a rational column vector to a primitive integer vector (first nonzero positive).
std::vector<std::int64_t> primitive_integer_vector(const RationalMatrix& column);

/// A linear map between coordinate spaces; matrix is codomain_dim x domain_dim.
class LinearMap {
public:
    LinearMap() = default;
    explicit LinearMap(RationalMatrix matrix) : matrix_(std::move(matrix)) {}

    static LinearMap identity(std::size_t dim) { return LinearMap(RationalMatrix::identity(dim)); }

    std::size_t domain_dim() const { return matrix_.cols(); }
    std::size_t codomain_dim() const { return matrix_.rows(); }
    const RationalMatrix& matrix() const { return matrix_; }

    RationalMatrix apply(const RationalMatrix& coords) const { return matrix_ * coords; }
    bool injective() const { return rank(matrix_) == domain_dim(); }

    friend bool operator==(const LinearMap&, const LinearMap&) = default;

private:
    RationalMatrix matrix_;
};

/// (outer o inner); throws InvalidArgument on dimension mismatch.
LinearMap compose(const LinearMap& outer, const LinearMap& inner);

} // namespace specht

#endif // SPECHT_RATIONAL_MATRIX_HPP
