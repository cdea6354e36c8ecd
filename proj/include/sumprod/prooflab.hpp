#pragma once

#include "sumprod/arith.hpp"

namespace sumprod::prooflab {

/// Coefficients of the reduced cubic obtained from x^3 + y^3 + n^2 z^3 =
/// n x y z by substituting z0 = z_scale * z:
///
///   x^3 + y^3 + zcube_coeff * z0^3 = xyz_coeff * x * y * z0
///
/// With n = Q1 Q2^2 Q3^3 cubefree-decomposed, zcube_coeff = Q1^2 Q2 (always
/// cubefree), xyz_coeff = Q1 Q2 Q3 and z_scale = Q2 Q3^2. Every prime of
/// zcube_coeff divides xyz_coeff.
struct ReducedCubic {
    Int zcube_coeff;
    Int xyz_coeff;
    Int z_scale;
};

/// The unified case reduction; the polynomial identity
///   x^3 + y^3 + n^2 z^3 - n x y z
///     = x^3 + y^3 + zcube_coeff (z_scale z)^3 - xyz_coeff x y (z_scale z)
/// holds for all integers x, y, z.
ReducedCubic case_transform(const Int& n);
ReducedCubic case_transform(const Int& n, const Int& candidate_limit);

struct ClaimReport {
    bool ok = true;
    std::vector<std::string> violations;  // e.g. "gcd(x, y) = 3"
};

/// Checks the pairwise-coprimality conclusions for a solution of
/// x^3 + y^3 + A z^3 = B x y z with A cubefree, gcd(x,y,z) = 1 and every
/// prime of A dividing B: gcd(x,y) = gcd(y,z) = gcd(z,x) = gcd(x,A) =
/// gcd(y,A) = 1. An unmet hypothesis throws std::domain_error naming it;
/// a reported violation would be a counterexample to the claim.
ClaimReport check_claim_coprime(const Int& x, const Int& y, const Int& z,
                                const Int& A, const Int& B);

/// Residual of 4(A^3 + B^3 + C^3 - 3ABC) - (A+B+C)((2A-B-C)^2 + 3(B-C)^2);
/// identically zero.
Int quadform_identity_check(const Int& A, const Int& B, const Int& C);

/// Whether v2(r^2 + 3 s^2) is even; true for every (r, s) != (0, 0).
bool v2_quadform_parity(const Int& r, const Int& s);

/// Whether [u+v+w+uv+vw+wu even] <=> [u, v, w all even or all odd];
/// the equivalence holds for all integers.
bool parity_identity_check(const Int& u, const Int& v, const Int& w);

/// Quadratic reciprocity for odd positive coprime m, n:
/// (m/n)(n/m) = (-1)^(((m-1)/2)((n-1)/2)). Always true.
bool reciprocity_check(const Int& m, const Int& n);

}  // namespace sumprod::prooflab
