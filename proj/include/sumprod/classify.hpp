#pragma once

#include "sumprod/arith.hpp"

#include <vector>

namespace sumprod::classify {

// The five covered residue families. An n in one of them admits no positive
// integer solution of x^3 + y^3 + n^2 z^3 = n x y z, and (via the Sylvester
// reduction) no positive rational solution of the sum/product system.
enum class FormKind {
    Form16kMinus4,    // n = 16k - 4
    Form64k,          // n = 64k
    Form32kMinus16,   // n = 32k - 16
    Form8kMinus1,     // n = 8k - 1
    Form2PowPlus27,   // n = 2^(2m+1) (2k-1) + 27
    NotCovered,
};

/// Stable label used in text, CSV and JSON output ("16k-4", "64k", ...).
const char* form_label(FormKind kind);

struct NForm {
    FormKind kind = FormKind::NotCovered;
    Int k;  // witness, k >= 1 for every covered form
    Int m;  // witness, m >= 1 for Form2PowPlus27 only

    bool covered() const { return kind != FormKind::NotCovered; }

    /// Re-evaluates the defining formula on the stored witnesses.
    /// Throws std::logic_error for NotCovered.
    Int reconstruct() const;
};

enum class Status { ProvedNoSolutions, Unknown };

/// Outcome of a theorem/corollary query. Unknown never asserts solvability;
/// it means the criteria are silent.
struct Verdict {
    std::string query;                 // "theorem" or "corollary"
    Int a, b, c;                       // corollary echoes (a, n) via b = 1, c = n
    std::vector<std::string> matched;  // condition labels, "T1".."T6" or "C1".."C5"
    Int n;                             // a^2 * b * c^3
    NForm n_form;
    Status status = Status::Unknown;
};

/// Membership test for the five covered families; witnesses are exact.
/// The families are pairwise disjoint, so at most one variant applies.
NForm classify_n(const Int& n);

/// Evaluates the six sufficient conditions on (a, b, c) for the system
/// xyz = a b^2, x + y + z = a b c to have no positive rational solution.
/// All matching conditions are reported.
Verdict check_theorem(const Int& a, const Int& b, const Int& c);

/// The b = 1 specialization: conditions C1..C5 on (a, n) for the system
/// xyz = a, x + y + z = a n.
Verdict check_corollary(const Int& a, const Int& n);

/// All covered n <= N in ascending order with their forms.
std::vector<std::pair<Int, NForm>> covered_upto(const Int& N);

}  // namespace sumprod::classify
