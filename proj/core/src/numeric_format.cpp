#include "specht/numeric_format.hpp"

namespace specht {

mpz_class round_half_up(const mpq_class& q)
{
    mpq_class shifted = q + mpq_class(1, 2);
    mpz_class out;
    mpz_fdiv_q(out.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());
    return out;
}

std::string decimal_string(const mpq_class& q, int digits)
{
    mpz_class scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits));
    mpz_class scaled = round_half_up(q * scale);
    const bool negative = scaled < 0;
    if (negative) scaled = -scaled;
    std::string s = scaled.get_str();
    if (digits > 0) {
        if (s.size() <= static_cast<std::size_t>(digits)) s.insert(0, static_cast<std::size_t>(digits) + 1 - s.size(), '0');
        s.insert(s.size() - static_cast<std::size_t>(digits), ".");
    }
    return negative ? "-" + s : s;
}

std::string percent_string(std::uint64_t part, std::uint64_t whole)
{
    if (whole == 0) return "0.0";
    mpq_class q(mpz_class(static_cast<unsigned long>(part)) * 100, mpz_class(static_cast<unsigned long>(whole)));
    q.canonicalize();
    return decimal_string(q, 1);
}

} // namespace specht
