#include "sumprod/arith.hpp"

namespace sumprod::arith {

Int default_factor_limit() {
    return Int(1) << 32;
}

Int gcd(const Int& a, const Int& b) {
    Int g;
    mpz_gcd(g.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return g;
}

V2Split v2_split(const Int& n) {
    if (n <= 0) throw std::domain_error("v2_split: n must be positive");
    unsigned long r = mpz_scan1(n.get_mpz_t(), 0);
    return V2Split{r, Int(n >> r)};
}

int jacobi(Int a, Int m) {
    if (m <= 0 || mpz_even_p(m.get_mpz_t()))
        throw std::domain_error("jacobi: modulus must be odd and positive");
    mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    int sign = 1;
    while (a != 0) {
        unsigned long tz = mpz_scan1(a.get_mpz_t(), 0);
        if (tz > 0) {
            a >>= tz;
            // second supplement: (2/m) = -1 iff m = +-3 (mod 8)
            unsigned long m8 = mpz_fdiv_ui(m.get_mpz_t(), 8);
            if ((tz & 1) && (m8 == 3 || m8 == 5)) sign = -sign;
        }
        // reciprocity: flip iff both arguments are 3 (mod 4)
        if (mpz_fdiv_ui(a.get_mpz_t(), 4) == 3 && mpz_fdiv_ui(m.get_mpz_t(), 4) == 3)
            sign = -sign;
        std::swap(a, m);
        mpz_fdiv_r(a.get_mpz_t(), a.get_mpz_t(), m.get_mpz_t());
    }
    return m == 1 ? sign : 0;
}

std::vector<std::pair<Int, unsigned long>> factorize(Int m, const Int& candidate_limit) {
    if (m <= 0) throw std::domain_error("factorize: argument must be positive");
    std::vector<std::pair<Int, unsigned long>> factors;

    unsigned long e2 = 0;
    while (mpz_even_p(m.get_mpz_t())) {
        m >>= 1;
        ++e2;
    }
    if (e2 > 0) factors.emplace_back(Int(2), e2);

    Int d = 3;
    while (d * d <= m) {
        if (d > candidate_limit)
            throw FactorizationLimitError(
                "factorize: trial-division candidate " + d.get_str() +
                " exceeds the configured limit " + candidate_limit.get_str());
        if (m % d == 0) {
            unsigned long e = 0;
            do {
                m /= d;
                ++e;
            } while (m % d == 0);
            factors.emplace_back(d, e);
        }
        d += 2;
    }
    if (m > 1) factors.emplace_back(m, 1);  // remaining cofactor is prime
    return factors;
}

std::vector<std::pair<Int, unsigned long>> factorize(const Int& m) {
    return factorize(m, default_factor_limit());
}

CubefreeDecomp cubefree_decompose(const Int& m, const Int& candidate_limit) {
    if (m <= 0) throw std::domain_error("cubefree_decompose: argument must be positive");
    CubefreeDecomp decomp{1, 1, 1};
    for (const auto& [p, e] : factorize(m, candidate_limit)) {
        if (e % 3 == 1)
            decomp.p1 *= p;
        else if (e % 3 == 2)
            decomp.p2 *= p;
        if (e >= 3) {
            Int pc;
            mpz_pow_ui(pc.get_mpz_t(), p.get_mpz_t(), e / 3);
            decomp.p3 *= pc;
        }
    }
    return decomp;
}

CubefreeDecomp cubefree_decompose(const Int& m) {
    return cubefree_decompose(m, default_factor_limit());
}

Int cube_root_mod_2pow(const Int& p, unsigned e) {
    if (e < 3) throw std::domain_error("cube_root_mod_2pow: exponent must be >= 3");
    if (p <= 0 || mpz_even_p(p.get_mpz_t()))
        throw std::domain_error("cube_root_mod_2pow: p must be odd and positive");
    // Cubing is a bijection on the odd residues mod 2^e (the group exponent
    // 2^(e-2) is coprime to 3), so the inverse map is u = p^t with
    // 3t = 1 (mod 2^(e-2)).
    Int group_exponent = Int(1) << (e - 2);
    Int t;
    Int three = 3;
    mpz_invert(t.get_mpz_t(), three.get_mpz_t(), group_exponent.get_mpz_t());
    Int modulus = Int(1) << e;
    Int u;
    mpz_powm(u.get_mpz_t(), p.get_mpz_t(), t.get_mpz_t(), modulus.get_mpz_t());
    return u;
}

std::optional<Rat> is_square_rat(const Rat& q) {
    if (q < 0) throw std::domain_error("is_square_rat: argument must be nonnegative");
    Rat canon = q;
    canon.canonicalize();
    const mpz_class& num = canon.get_num();
    const mpz_class& den = canon.get_den();
    if (!mpz_perfect_square_p(num.get_mpz_t()) || !mpz_perfect_square_p(den.get_mpz_t()))
        return std::nullopt;
    Int rnum, rden;
    mpz_sqrt(rnum.get_mpz_t(), num.get_mpz_t());
    mpz_sqrt(rden.get_mpz_t(), den.get_mpz_t());
    // num and den are coprime, so their square roots already are
    return Rat(rnum, rden);
}

}  // namespace sumprod::arith
