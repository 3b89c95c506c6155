#include "specht/rational_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

#include "specht/errors.hpp"

namespace specht {

RationalMatrix::RationalMatrix(const IntMatrix& m) : RationalMatrix(m.rows(), m.cols())
{
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = Rational(static_cast<long>(m(r, c)));
}

RationalMatrix RationalMatrix::identity(std::size_t n)
{
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
}

RationalMatrix RationalMatrix::transpose() const
{
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
}

RationalMatrix RationalMatrix::column(std::size_t c) const
{
    RationalMatrix v(rows_, 1);
    for (std::size_t r = 0; r < rows_; ++r) v(r, 0) = (*this)(r, c);
    return v;
}

RationalMatrix RationalMatrix::hcat(const RationalMatrix& other) const
{
    if (cols_ == 0) return other;
    if (other.cols_ == 0) return *this;
    if (rows_ != other.rows_) throw InvalidArgument("hcat: row count mismatch");
    RationalMatrix out(rows_, cols_ + other.cols_);
    for (std::size_t r = 0; r < rows_; ++r) {
        for (std::size_t c = 0; c < cols_; ++c) out(r, c) = (*this)(r, c);
        for (std::size_t c = 0; c < other.cols_; ++c) out(r, cols_ + c) = other(r, c);
    }
    return out;
}

bool RationalMatrix::is_zero() const
{
    return std::all_of(data_.begin(), data_.end(), [](const Rational& q) { return sgn(q) == 0; });
}

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.cols_ != b.rows_) throw InvalidArgument("matrix product: dimension mismatch");
    RationalMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a(i, k);
            if (sgn(aik) == 0) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) out(i, j) += aik * b(k, j);
        }
    return out;
}

RationalMatrix operator+(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix sum: shape mismatch");
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] += b.data_[i];
    return out;
}

RationalMatrix operator-(const RationalMatrix& a, const RationalMatrix& b)
{
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw InvalidArgument("matrix difference: shape mismatch");
    RationalMatrix out = a;
    for (std::size_t i = 0; i < out.data_.size(); ++i) out.data_[i] -= b.data_[i];
    return out;
}

RationalMatrix operator*(const Rational& s, const RationalMatrix& a)
{
    RationalMatrix out = a;
    for (auto& q : out.data_) q *= s;
    return out;
}

bool operator==(const RationalMatrix& a, const RationalMatrix& b)
{
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string RationalMatrix::to_string() const
{
    std::ostringstream os;
    for (std::size_t r = 0; r < rows_; ++r) {
        os << "[";
        for (std::size_t c = 0; c < cols_; ++c) os << (c ? " " : "") << (*this)(r, c);
        os << "]\n";
    }
    return os.str();
}

RationalMatrix rref(RationalMatrix m, std::vector<std::size_t>* pivots)
{
    std::size_t r = 0;
    if (pivots) pivots->clear();
    for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
        std::size_t p = r;
        while (p < m.rows() && sgn(m(p, c)) == 0) ++p;
        if (p == m.rows()) continue;
        if (p != r)
            for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(p, j), m(r, j));
        const Rational inv = 1 / m(r, c);
        for (std::size_t j = c; j < m.cols(); ++j) m(r, j) *= inv;
        for (std::size_t i = 0; i < m.rows(); ++i) {
            if (i == r || sgn(m(i, c)) == 0) continue;
            const Rational f = m(i, c);
            for (std::size_t j = c; j < m.cols(); ++j) m(i, j) -= f * m(r, j);
        }
        if (pivots) pivots->push_back(c);
        ++r;
    }
    return m;
}

std::size_t rank(const RationalMatrix& m)
{
    std::vector<std::size_t> piv;
    rref(m, &piv);
    return piv.size();
}

RationalMatrix nullspace(const RationalMatrix& m)
{
    std::vector<std::size_t> piv;
    const RationalMatrix r = rref(m, &piv);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto c : piv) is_pivot[c] = true;
    RationalMatrix out(m.cols(), m.cols() - piv.size());
    std::size_t k = 0;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f]) continue;
        out(f, k) = 1;
        for (std::size_t i = 0; i < piv.size(); ++i) out(piv[i], k) = -r(i, f);
        ++k;
    }
    return out;
}

RationalMatrix column_basis(const RationalMatrix& m)
{
    std::vector<std::size_t> piv;
    rref(m, &piv);
    RationalMatrix out(m.rows(), piv.size());
    for (std::size_t k = 0; k < piv.size(); ++k)
        for (std::size_t r = 0; r < m.rows(); ++r) out(r, k) = m(r, piv[k]);
    return out;
}

bool column_space_contains(const RationalMatrix& a, const RationalMatrix& b)
{
    if (b.cols() == 0) return true;
    if (a.cols() == 0) return b.is_zero();
    return rank(a.hcat(b)) == rank(a);
}

bool same_column_space(const RationalMatrix& a, const RationalMatrix& b)
{
    const std::size_t ra = a.cols() ? rank(a) : 0;
    const std::size_t rb = b.cols() ? rank(b) : 0;
    return ra == rb && column_space_contains(a, b);
}

std::vector<std::int64_t> primitive_integer_vector(const RationalMatrix& column)
{
    mpz_class l = 1;
    for (std::size_t r = 0; r < column.rows(); ++r) {
        mpz_class d = column(r, 0).get_den();
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d.get_mpz_t());
    }
    std::vector<mpz_class> ints(column.rows());
    mpz_class g = 0;
    for (std::size_t r = 0; r < column.rows(); ++r) {
        Rational q = column(r, 0) * l;
        ints[r] = q.get_num();
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), ints[r].get_mpz_t());
    }
    std::vector<std::int64_t> out(column.rows(), 0);
    if (g == 0) return out;
    int flip = 1;
    for (const auto& v : ints)
        if (v != 0) {
            flip = v < 0 ? -1 : 1;
            break;
        }
    for (std::size_t r = 0; r < ints.size(); ++r) {
        mpz_class v = flip * ints[r] / g;
        if (!v.fits_slong_p()) throw ArithmeticOverflow{};
        out[r] = v.get_si();
    }
    return out;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner)
{
    if (outer.domain_dim() != inner.codomain_dim()) throw InvalidArgument("linear maps are not composable");
    return LinearMap(outer.matrix() * inner.matrix());
}

} // namespace specht
