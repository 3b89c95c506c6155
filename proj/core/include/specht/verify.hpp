#ifndef SPECHT_VERIFY_HPP
#define SPECHT_VERIFY_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "specht/arrangement.hpp"

namespace specht {

struct CheckResult {
    std::string name;
    bool passed = false;
    std::string detail;
};

/// Random-subset checks of r(X) <= |X|, unit increase, monotonicity and submodularity.
CheckResult check_rank_axioms(const Arrangement& arr, int samples, std::uint64_t seed);

/// X within cl(X), idempotence, monotonicity, rank preservation and the exchange property.
CheckResult check_closure_axioms(const Arrangement& arr, int samples, std::uint64_t seed);

/// sigma w_alpha = +-w_{sigma alpha} and cl(sigma S) = sigma cl(S) for random sigma, S.
CheckResult check_equivariance(const Arrangement& arr, int samples, std::uint64_t seed);

/// H_alpha built from polytabloids and transposition fixed spaces (both generator
/// choices), mapped into the exterior power, equals the hook hyperplane, for every alpha.
CheckResult check_general_hook_agreement(int n, int l);

/// Combinatorial and fixed-space stability agree on every line.
CheckResult check_stability_agreement(const Arrangement& arr, const std::vector<Flat>& lines);

/// For every fiber type f : [n] -> [n-1], the contraction to F_f has the lattice of the
/// (n-1)-arrangement via H_alpha -> H_{g(alpha)} cut with F_f, and that map does not
/// depend on the section g.
CheckResult check_contraction_to_special_flats(int n, int l);

/// f_* phi_f = id and image(phi_f) = F_f for every surjection [n] -> [m], l+1 <= m <= n.
CheckResult check_section_average(int n, int l);

struct VerifyOptions {
    /// Adds the n = 6 census and the slower n = 6 checks.
    bool full = false;
    std::uint64_t seed = 1;
    unsigned workers = 1;
};

std::vector<CheckResult> run_verify(const VerifyOptions& opts);

} // namespace specht

#endif // SPECHT_VERIFY_HPP
