#include "sumprod/sylvester.hpp"

namespace sumprod::sylvester {

namespace {

Rat cube(const Rat& r) {
    return Rat(r * r * r);
}

Int lcm(const Int& a, const Int& b) {
    Int l;
    mpz_lcm(l.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return l;
}

// Clears denominators of a rational solution of X^3 + Y^3 + n^2 Z^3 = n XYZ
// (the equation is homogeneous of degree 3) and divides out the gcd.
CubicSolution make_primitive(const Rat& f, const Rat& g, const Rat& h, const Int& n) {
    Int scale = lcm(lcm(f.get_den(), g.get_den()), h.get_den());
    CubicSolution sol;
    sol.n = n;
    sol.raw_x = Int(f.get_num() * (scale / f.get_den()));
    sol.raw_y = Int(g.get_num() * (scale / g.get_den()));
    sol.raw_z = Int(h.get_num() * (scale / h.get_den()));
    Int d = arith::gcd(arith::gcd(sol.raw_x, sol.raw_y), sol.raw_z);
    sol.x = sol.raw_x / d;
    sol.y = sol.raw_y / d;
    sol.z = sol.raw_z / d;
    sol.primitive = true;
    return sol;
}

}  // namespace

SylvesterTriple sylvester_transform(const Rat& A, const Rat& B, const Rat& C, const Rat& D,
                                    const Rat& alpha, const Rat& beta, const Rat& gamma) {
    Rat residual = A * cube(alpha) + B * cube(beta) + C * cube(gamma) - D * alpha * beta * gamma;
    if (residual != 0)
        throw std::invalid_argument(
            "sylvester_transform: A*alpha^3 + B*beta^3 + C*gamma^3 - D*alpha*beta*gamma = " +
            residual.get_str() + ", expected 0");

    Rat a3 = cube(alpha), b3 = cube(beta), c3 = cube(gamma);
    Rat mixed = 3 * A * B * C * a3 * b3 * c3;
    SylvesterTriple t;
    t.f = A * A * B * a3 * a3 * b3 + B * B * C * b3 * b3 * c3 + C * C * A * c3 * c3 * a3 - mixed;
    t.g = A * B * B * a3 * b3 * b3 + B * C * C * b3 * c3 * c3 + C * A * A * c3 * a3 * a3 - mixed;
    t.h = alpha * beta * gamma *
          (A * A * a3 * a3 + B * B * b3 * b3 + C * C * c3 * c3 -
           A * B * a3 * b3 - B * C * b3 * c3 - C * A * c3 * a3);
    return t;
}

CubicSolution reduce_system_to_cubic(const Rat& x, const Rat& y, const Rat& z,
                                     const Int& a, const Int& b, const Int& c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::domain_error("reduce_system_to_cubic: a, b, c must be positive");
    if (x <= 0 || y <= 0 || z <= 0)
        throw std::domain_error("reduce_system_to_cubic: x, y, z must be positive");

    Rat prod_target(Int(a * b * b));
    Rat sum_target(Int(a * b * c));
    if (Rat(x * y * z) != prod_target)
        throw std::invalid_argument("reduce_system_to_cubic: xyz != a*b^2 (xyz = " +
                                    Rat(x * y * z).get_str() + ")");
    if (Rat(x + y + z) != sum_target)
        throw std::invalid_argument("reduce_system_to_cubic: x+y+z != a*b*c (x+y+z = " +
                                    Rat(x + y + z).get_str() + ")");
    if (x == y && y == z)
        throw std::domain_error(
            "reduce_system_to_cubic: degenerate input x = y = z (forces a^2*b*c^3 = 27)");

    SylvesterTriple t = sylvester_transform(x, y, z, sum_target, 1, 1, 1);
    // f^3 + g^3 + a b^2 h^3 = abc f g h; substituting h = a c^2 h1 turns this
    // into the cubic for n = a^2 b c^3.
    Rat h1 = t.h / Rat(Int(a * c * c));
    Int n = a * a * b * c * c * c;
    return make_primitive(t.f, t.g, h1, n);
}

CubicSolution reduce_guy_to_cubic(const Int& x, const Int& y, const Int& z) {
    if (x <= 0 || y <= 0 || z <= 0)
        throw std::domain_error("reduce_guy_to_cubic: x, y, z must be positive");
    Int s = x + y + z;
    Int s3 = s * s * s;
    Int xyz = x * y * z;
    if (s3 % xyz != 0)
        throw std::domain_error("reduce_guy_to_cubic: (x+y+z)^3 = " + s3.get_str() +
                                " is not divisible by xyz = " + xyz.get_str());
    Int n = s3 / xyz;

    Int f = x * x * y + y * y * z + z * z * x - 3 * xyz;
    Int g = x * y * y + y * z * z + z * x * x - 3 * xyz;
    Int h = x * x + y * y + z * z - x * y - y * z - z * x;
    if (f == 0 && g == 0 && h == 0)
        throw std::domain_error("reduce_guy_to_cubic: degenerate input x = y = z (f = g = h = 0)");

    CubicSolution sol;
    sol.n = n;
    sol.raw_x = n * f;
    sol.raw_y = n * g;
    sol.raw_z = s * h;
    Int d = arith::gcd(arith::gcd(sol.raw_x, sol.raw_y), sol.raw_z);
    sol.x = sol.raw_x / d;
    sol.y = sol.raw_y / d;
    sol.z = sol.raw_z / d;
    sol.primitive = true;
    return sol;
}

}  // namespace sumprod::sylvester
