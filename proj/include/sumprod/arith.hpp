#pragma once

#include <gmpxx.h>

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sumprod {

// All arithmetic in this library is exact. Integers and rationals are
// arbitrary precision; there is no floating point on any code path.
using Int = mpz_class;
using Rat = mpq_class;

/// Thrown when trial division would need candidates beyond the configured cap.
struct FactorizationLimitError : std::runtime_error {
    explicit FactorizationLimitError(const std::string& what) : std::runtime_error(what) {}
};

namespace arith {

struct V2Split {
    unsigned long twos = 0;  // 2-adic valuation
    Int odd;                 // odd cofactor, n = 2^twos * odd
};

/// m = p1 * p2^2 * p3^3 with p1, p2 squarefree and coprime.
struct CubefreeDecomp {
    Int p1, p2, p3;

    Int reconstruct() const { return Int(p1 * p2 * p2 * p3 * p3 * p3); }
};

/// Default trial-division candidate cap, 2^32.
Int default_factor_limit();

/// Nonnegative greatest common divisor; gcd(0, 0) = 0.
Int gcd(const Int& a, const Int& b);

/// Splits n >= 1 as 2^r * odd. Throws std::domain_error for n <= 0.
V2Split v2_split(const Int& n);

/// Jacobi symbol (a/m) for odd m >= 1, computed by binary reciprocity
/// reduction. (a/1) = 1; returns 0 iff gcd(a, m) > 1. Throws
/// std::domain_error when m is even or m <= 0.
int jacobi(Int a, Int m);

/// Prime factorization of m >= 1 by trial division (2, then odd candidates
/// up to sqrt of the remaining cofactor). Throws FactorizationLimitError if
/// a candidate would exceed `candidate_limit` while the cofactor is still
/// composite-sized.
std::vector<std::pair<Int, unsigned long>> factorize(Int m, const Int& candidate_limit);
std::vector<std::pair<Int, unsigned long>> factorize(const Int& m);

/// Cubefree decomposition m = p1 * p2^2 * p3^3: a prime with exponent e
/// contributes to p1 if e = 1 (mod 3), to p2 if e = 2 (mod 3), and p^(e/3)
/// to p3.
CubefreeDecomp cubefree_decompose(const Int& m, const Int& candidate_limit);
CubefreeDecomp cubefree_decompose(const Int& m);

/// The unique odd u in [1, 2^e) with u^3 = p (mod 2^e), for odd p > 0 and
/// e >= 3. Computed as p^t mod 2^e where 3t = 1 (mod 2^(e-2)).
Int cube_root_mod_2pow(const Int& p, unsigned e);

/// Exact square root of a nonnegative rational, if both the reduced
/// numerator and denominator are perfect squares; std::nullopt otherwise.
std::optional<Rat> is_square_rat(const Rat& q);

}  // namespace arith
}  // namespace sumprod
