#pragma once

#include "sumprod/arith.hpp"

#include <optional>

namespace sumprod::search {

struct Solution {
    Rat x, y, z;
    std::optional<bool> primitive;  // set for the integer searches only

    friend bool operator==(const Solution& a, const Solution& b) {
        return a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

/// Result of one exhaustive search. Deterministic for given parameters
/// regardless of the number of worker threads: work is partitioned into
/// fixed ranges, partial results are merged in range order and the solution
/// list is sorted lexicographically. wall_ms is informational and is not
/// part of the serialized report.
struct SearchReport {
    std::string equation;  // "cubic" | "system" | "guy"
    std::vector<std::pair<std::string, std::string>> params;
    long bound = 0;  // B for the integer searches, H for the system search
    unsigned long long examined = 0;
    std::vector<Solution> solutions;
    double wall_ms = 0.0;
};

/// All solutions of x^3 + y^3 + n^2 z^3 = n x y z with 1 <= x <= y <= B and
/// 1 <= z <= B (the x,y pair is normalized; the equation is symmetric in
/// them). Solutions with gcd(x,y,z) = 1 are flagged primitive. For n < 27
/// returns empty at once: x^3 + y^3 + n^2 z^3 >= 3 n^(2/3) xyz > n xyz.
SearchReport search_cubic(const Int& n, long bound, int threads = 0);

/// Exhaustive rational search for xyz = a b^2, x + y + z = a b c. Enumerates
/// z = u/v in lowest terms with 1 <= u, v <= H and solves the remaining
/// quadratic exactly. Finds every solution in which at least one coordinate
/// has numerator and denominator <= H; reports each solution once as a
/// sorted triple x <= y <= z.
SearchReport search_system(const Int& a, const Int& b, const Int& c, long height,
                           int threads = 0);

/// All 1 <= x <= y <= z <= B with (x + y + z)^3 = n x y z.
SearchReport search_guy(const Int& n, long bound, int threads = 0);

}  // namespace sumprod::search
