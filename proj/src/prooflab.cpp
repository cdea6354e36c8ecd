#include "sumprod/prooflab.hpp"

namespace sumprod::prooflab {

ReducedCubic case_transform(const Int& n, const Int& candidate_limit) {
    if (n <= 0) throw std::domain_error("case_transform: n must be positive");
    arith::CubefreeDecomp q = arith::cubefree_decompose(n, candidate_limit);
    ReducedCubic r;
    r.zcube_coeff = q.p1 * q.p1 * q.p2;
    r.xyz_coeff = q.p1 * q.p2 * q.p3;
    r.z_scale = q.p2 * q.p3 * q.p3;
    return r;
}

ReducedCubic case_transform(const Int& n) {
    return case_transform(n, arith::default_factor_limit());
}

ClaimReport check_claim_coprime(const Int& x, const Int& y, const Int& z,
                                const Int& A, const Int& B) {
    if (x <= 0 || y <= 0 || z <= 0 || A <= 0 || B <= 0)
        throw std::domain_error("check_claim_coprime: all arguments must be positive");
    if (x * x * x + y * y * y + A * z * z * z != B * x * y * z)
        throw std::domain_error(
            "check_claim_coprime: precondition x^3 + y^3 + A z^3 = B x y z does not hold");
    if (arith::gcd(arith::gcd(x, y), z) != 1)
        throw std::domain_error("check_claim_coprime: precondition gcd(x, y, z) = 1 does not hold");
    auto factors = arith::factorize(A);
    for (const auto& [p, e] : factors) {
        if (e >= 3)
            throw std::domain_error("check_claim_coprime: precondition A cubefree does not hold (" +
                                    p.get_str() + "^" + std::to_string(e) + " divides A)");
        if (B % p != 0)
            throw std::domain_error(
                "check_claim_coprime: precondition rad(A) | B does not hold (prime " +
                p.get_str() + " divides A but not B)");
    }

    ClaimReport report;
    auto check = [&](const char* name, const Int& u, const Int& v) {
        Int g = arith::gcd(u, v);
        if (g != 1) {
            report.ok = false;
            report.violations.push_back(std::string("gcd") + name + " = " + g.get_str());
        }
    };
    check("(x, y)", x, y);
    check("(y, z)", y, z);
    check("(z, x)", z, x);
    check("(x, A)", x, A);
    check("(y, A)", y, A);
    return report;
}

Int quadform_identity_check(const Int& A, const Int& B, const Int& C) {
    Int lhs = 4 * (A * A * A + B * B * B + C * C * C - 3 * A * B * C);
    Int t1 = 2 * A - B - C;
    Int t2 = B - C;
    Int rhs = (A + B + C) * (t1 * t1 + 3 * t2 * t2);
    return Int(lhs - rhs);
}

bool v2_quadform_parity(const Int& r, const Int& s) {
    Int value = r * r + 3 * s * s;
    if (value == 0) throw std::domain_error("v2_quadform_parity: r and s must not both be zero");
    return arith::v2_split(value).twos % 2 == 0;
}

bool parity_identity_check(const Int& u, const Int& v, const Int& w) {
    bool sum_even = mpz_even_p(Int(u + v + w + u * v + v * w + w * u).get_mpz_t());
    bool ue = mpz_even_p(u.get_mpz_t());
    bool ve = mpz_even_p(v.get_mpz_t());
    bool we = mpz_even_p(w.get_mpz_t());
    bool all_same = (ue == ve) && (ve == we);
    return sum_even == all_same;
}

bool reciprocity_check(const Int& m, const Int& n) {
    if (m <= 0 || n <= 0 || mpz_even_p(m.get_mpz_t()) || mpz_even_p(n.get_mpz_t()))
        throw std::domain_error("reciprocity_check: m and n must be odd and positive");
    if (arith::gcd(m, n) != 1)
        throw std::domain_error("reciprocity_check: m and n must be coprime");
    int lhs = arith::jacobi(m, n) * arith::jacobi(n, m);
    Int exponent = ((m - 1) / 2) * ((n - 1) / 2);
    int rhs = mpz_odd_p(exponent.get_mpz_t()) ? -1 : 1;
    return lhs == rhs;
}

}  // namespace sumprod::prooflab
