#include "specht/int_matrix.hpp"

#include <cassert>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include <gmpxx.h>

namespace specht {

void IntMatrix::append_row(std::span<const std::int64_t> values)
{
    if (rows_ == 0 && cols_ == 0) cols_ = values.size();
    if (values.size() != cols_) throw std::invalid_argument("IntMatrix::append_row: width mismatch");
    data_.insert(data_.end(), values.begin(), values.end());
    ++rows_;
}

IntMatrix IntMatrix::select_rows(std::span<const int> which) const
{
    IntMatrix out(which.size(), cols_);
    for (std::size_t i = 0; i < which.size(); ++i) {
        const auto src = row(static_cast<std::size_t>(which[i]));
        std::copy(src.begin(), src.end(), out.row(i).begin());
    }
    return out;
}

IntMatrix IntMatrix::transpose() const
{
    IntMatrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
        for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
}

namespace {

using i128 = __int128;

// Scalar operations for the elimination templates.
inline i128 mul(i128 a, i128 b)
{
    i128 r;
    if (__builtin_mul_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
}
inline i128 sub(i128 a, i128 b)
{
    i128 r;
    if (__builtin_sub_overflow(a, b, &r)) throw ArithmeticOverflow{};
    return r;
}
inline i128 divexact(i128 a, i128 b)
{
    assert(a % b == 0);
    return a / b;
}
inline bool is_zero(i128 a) { return a == 0; }
inline i128 magnitude(i128 a) { return a < 0 ? -a : a; }

inline mpz_class mul(const mpz_class& a, const mpz_class& b) { return a * b; }
inline mpz_class sub(const mpz_class& a, const mpz_class& b) { return a - b; }
inline mpz_class divexact(const mpz_class& a, const mpz_class& b)
{
    mpz_class r;
    mpz_divexact(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}
inline bool is_zero(const mpz_class& a) { return sgn(a) == 0; }
inline mpz_class magnitude(const mpz_class& a) { return abs(a); }

template <class T>
std::vector<T> load(const IntMatrix& m)
{
    std::vector<T> a(m.rows() * m.cols());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) a[r * m.cols() + c] = T(static_cast<long>(m(r, c)));
    return a;
}

// Smallest nonzero magnitude in column c at or below row r; -1 if none.
template <class T>
long pick_pivot(const std::vector<T>& a, std::size_t rows, std::size_t cols, std::size_t r, std::size_t c)
{
    long best = -1;
    for (std::size_t i = r; i < rows; ++i) {
        const T& v = a[i * cols + c];
        if (is_zero(v)) continue;
        if (best < 0 || magnitude(v) < magnitude(a[static_cast<std::size_t>(best) * cols + c]))
            best = static_cast<long>(i);
    }
    return best;
}

template <class T>
void swap_rows(std::vector<T>& a, std::size_t cols, std::size_t i, std::size_t j)
{
    if (i == j) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap(a[i * cols + c], a[j * cols + c]);
}

template <class T>
std::size_t bareiss_rank(std::vector<T> a, std::size_t rows, std::size_t cols)
{
    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const long p = pick_pivot(a, rows, cols, r, c);
        if (p < 0) continue;
        swap_rows(a, cols, r, static_cast<std::size_t>(p));
        const T piv = a[r * cols + c];
        for (std::size_t i = r + 1; i < rows; ++i) {
            const T lead = a[i * cols + c];
            for (std::size_t j = c + 1; j < cols; ++j)
                a[i * cols + j] = divexact(sub(mul(piv, a[i * cols + j]), mul(lead, a[r * cols + j])), prev);
            a[i * cols + c] = T(0);
        }
        prev = piv;
        ++r;
    }
    return r;
}

// Fraction-free Gauss-Jordan. On return every pivot entry equals the last pivot and
// pivot columns are zero outside their pivot row.
template <class T>
std::vector<std::size_t> bareiss_jordan(std::vector<T>& a, std::size_t rows, std::size_t cols)
{
    std::vector<std::size_t> pivots;
    T prev(1);
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        const long p = pick_pivot(a, rows, cols, r, c);
        if (p < 0) continue;
        swap_rows(a, cols, r, static_cast<std::size_t>(p));
        const T piv = a[r * cols + c];
        for (std::size_t i = 0; i < rows; ++i) {
            if (i == r) continue;
            const T lead = a[i * cols + c];
            for (std::size_t j = 0; j < cols; ++j) {
                if (j == c) continue;
                a[i * cols + j] = divexact(sub(mul(piv, a[i * cols + j]), mul(lead, a[r * cols + j])), prev);
            }
            a[i * cols + c] = T(0);
        }
        prev = piv;
        pivots.push_back(c);
        ++r;
    }
    return pivots;
}

inline bool fits64(i128 v) { return v >= INT64_MIN && v <= INT64_MAX; }
inline bool fits64(const mpz_class& v) { return v.fits_slong_p(); }
inline std::int64_t to64(i128 v) { return static_cast<std::int64_t>(v); }
inline std::int64_t to64(const mpz_class& v) { return v.get_si(); }

template <class T>
T gcd_abs(T a, T b)
{
    a = magnitude(a);
    b = magnitude(b);
    while (!is_zero(b)) {
        T t = a % b;
        a = b;
        b = t;
    }
    return a;
}

template <class T>
IntMatrix kernel_impl(const IntMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    auto a = load<T>(m);
    const auto pivots = bareiss_jordan(a, rows, cols);
    std::vector<long> pivot_row_of(cols, -1);
    for (std::size_t i = 0; i < pivots.size(); ++i) pivot_row_of[pivots[i]] = static_cast<long>(i);

    IntMatrix out(0, cols);
    const T d = pivots.empty() ? T(1) : a[(pivots.size() - 1) * cols + pivots.back()];
    std::vector<T> x(cols);
    std::vector<std::int64_t> row(cols);
    for (std::size_t f = 0; f < cols; ++f) {
        if (pivot_row_of[f] >= 0) continue;
        std::fill(x.begin(), x.end(), T(0));
        x[f] = d;
        for (std::size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = T(0) - a[i * cols + f];
        T g(0);
        for (const auto& v : x) g = gcd_abs(g, v);
        bool flip = false;
        for (const auto& v : x) {
            if (!is_zero(v)) {
                flip = v < 0;
                break;
            }
        }
        for (std::size_t j = 0; j < cols; ++j) {
            T v = x[j] / g;
            if (flip) v = T(0) - v;
            if (!fits64(v)) throw ArithmeticOverflow{};
            row[j] = to64(v);
        }
        out.append_row(row);
    }
    return out;
}

constexpr std::uint64_t kMersenne61 = (std::uint64_t{1} << 61) - 1;

inline std::uint64_t mulmod61(std::uint64_t a, std::uint64_t b)
{
    const unsigned __int128 z = static_cast<unsigned __int128>(a) * b;
    std::uint64_t lo = static_cast<std::uint64_t>(z & kMersenne61);
    std::uint64_t hi = static_cast<std::uint64_t>(z >> 61);
    std::uint64_t s = lo + hi;
    if (s >= kMersenne61) s -= kMersenne61;
    return s;
}

inline std::uint64_t powmod61(std::uint64_t a, std::uint64_t e)
{
    std::uint64_t r = 1;
    while (e) {
        if (e & 1) r = mulmod61(r, a);
        a = mulmod61(a, a);
        e >>= 1;
    }
    return r;
}

} // namespace

bool modular_rank_is_exact(const IntMatrix& m)
{
    // every minor is bounded by the product of its rows' norms, hence by the product
    // of max(1, |row|); below p no nonzero minor can vanish mod p
    long double log2_bound = 0;
    for (std::size_t r = 0; r < m.rows(); ++r) {
        long double sq = 0;
        for (std::int64_t v : m.row(r)) sq += static_cast<long double>(v) * static_cast<long double>(v);
        if (sq > 1) log2_bound += std::log2(sq) / 2;
    }
    return log2_bound < 60.0L;
}

std::size_t exact_rank(const IntMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    if (modular_rank_is_exact(m)) return modular_rank(m);
    return fraction_free_rank(m);
}

std::size_t fraction_free_rank(const IntMatrix& m)
{
    if (m.rows() == 0 || m.cols() == 0) return 0;
    try {
        return bareiss_rank(load<i128>(m), m.rows(), m.cols());
    } catch (const ArithmeticOverflow&) {
        return bareiss_rank(load<mpz_class>(m), m.rows(), m.cols());
    }
}

std::size_t modular_rank(const IntMatrix& m)
{
    const std::size_t rows = m.rows(), cols = m.cols();
    std::vector<std::uint64_t> a(rows * cols);
    for (std::size_t i = 0; i < rows * cols; ++i) {
        const std::int64_t v = m(i / cols, i % cols);
        a[i] = v >= 0 ? static_cast<std::uint64_t>(v) % kMersenne61
                      : (kMersenne61 - (static_cast<std::uint64_t>(-(v + 1)) + 1) % kMersenne61) % kMersenne61;
    }
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t p = r;
        while (p < rows && a[p * cols + c] == 0) ++p;
        if (p == rows) continue;
        for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[p * cols + j]);
        const std::uint64_t inv = powmod61(a[r * cols + c], kMersenne61 - 2);
        for (std::size_t i = r + 1; i < rows; ++i) {
            const std::uint64_t f = mulmod61(a[i * cols + c], inv);
            if (f == 0) continue;
            for (std::size_t j = c; j < cols; ++j) {
                const std::uint64_t t = mulmod61(f, a[r * cols + j]);
                std::uint64_t v = a[i * cols + j] + kMersenne61 - t;
                if (v >= kMersenne61) v -= kMersenne61;
                a[i * cols + j] = v;
            }
        }
        ++r;
    }
    return r;
}

IntMatrix integer_kernel(const IntMatrix& m)
{
    if (m.rows() == 0) {
        IntMatrix id(m.cols(), m.cols());
        for (std::size_t i = 0; i < m.cols(); ++i) id(i, i) = 1;
        return id;
    }
    try {
        return kernel_impl<i128>(m);
    } catch (const ArithmeticOverflow&) {
        return kernel_impl<mpz_class>(m);
    }
}

std::int64_t dot(std::span<const std::int64_t> a, std::span<const std::int64_t> b)
{
    i128 s = 0;
    for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<i128>(a[i]) * b[i];
    if (!fits64(s)) throw ArithmeticOverflow{};
    return static_cast<std::int64_t>(s);
}

void make_primitive(std::span<std::int64_t> v)
{
    std::int64_t g = 0;
    for (auto x : v) g = std::gcd(g, x < 0 ? -x : x);
    if (g == 0) return;
    bool flip = false;
    for (auto x : v) {
        if (x != 0) {
            flip = x < 0;
            break;
        }
    }
    for (auto& x : v) x = (flip ? -x : x) / g;
}

} // namespace specht
