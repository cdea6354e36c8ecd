#pragma once

#include "sumprod/arith.hpp"

namespace sumprod::sylvester {

struct SylvesterTriple {
    Rat f, g, h;
};

/// A positive integer solution of X^3 + Y^3 + n^2 Z^3 = n X Y Z, reduced to
/// primitive form. The raw (pre-gcd) triple from the reduction is kept for
/// traceability.
struct CubicSolution {
    Int x, y, z;
    Int n;
    bool primitive = true;
    Int raw_x, raw_y, raw_z;
};

/// Sylvester's transformation: given A a^3 + B b^3 + C g^3 = D a b g, the
/// returned triple satisfies f^3 + g^3 + ABC h^3 = D f g h exactly.
/// The precondition is checked eagerly; a violation throws
/// std::invalid_argument reporting the residual.
SylvesterTriple sylvester_transform(const Rat& A, const Rat& B, const Rat& C, const Rat& D,
                                    const Rat& alpha, const Rat& beta, const Rat& gamma);

/// Maps a positive rational solution of xyz = a b^2, x + y + z = a b c to a
/// primitive positive integer solution of the cubic for n = a^2 b c^3.
/// Throws std::invalid_argument when the constraints do not hold and
/// std::domain_error for the degenerate x = y = z input.
CubicSolution reduce_system_to_cubic(const Rat& x, const Rat& y, const Rat& z,
                                     const Int& a, const Int& b, const Int& c);

/// Maps positive integers with (x+y+z)^3 = n xyz to a primitive solution of
/// the cubic for that n. Throws std::domain_error when (x+y+z)^3 is not
/// divisible by xyz (not representable) or when x = y = z (degenerate).
CubicSolution reduce_guy_to_cubic(const Int& x, const Int& y, const Int& z);

}  // namespace sumprod::sylvester
