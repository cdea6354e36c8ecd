#include "sumprod/classify.hpp"

namespace sumprod::classify {

const char* form_label(FormKind kind) {
    switch (kind) {
        case FormKind::Form16kMinus4: return "16k-4";
        case FormKind::Form64k: return "64k";
        case FormKind::Form32kMinus16: return "32k-16";
        case FormKind::Form8kMinus1: return "8k-1";
        case FormKind::Form2PowPlus27: return "2^(2m+1)(2k-1)+27";
        case FormKind::NotCovered: return "not_covered";
    }
    return "?";
}

Int NForm::reconstruct() const {
    switch (kind) {
        case FormKind::Form16kMinus4: return Int(16 * k - 4);
        case FormKind::Form64k: return Int(64 * k);
        case FormKind::Form32kMinus16: return Int(32 * k - 16);
        case FormKind::Form8kMinus1: return Int(8 * k - 1);
        case FormKind::Form2PowPlus27: {
            unsigned long mm = mpz_get_ui(m.get_mpz_t());
            return Int(((2 * k - 1) << (2 * mm + 1)) + 27);
        }
        case FormKind::NotCovered: break;
    }
    throw std::logic_error("NForm::reconstruct: not a covered form");
}

NForm classify_n(const Int& n) {
    if (n <= 0) throw std::domain_error("classify_n: n must be positive");
    NForm form;
    if (n % 64 == 0) {
        form.kind = FormKind::Form64k;
        form.k = n / 64;
    } else if (n % 32 == 16) {
        form.kind = FormKind::Form32kMinus16;
        form.k = (n + 16) / 32;
    } else if (n % 16 == 12) {
        form.kind = FormKind::Form16kMinus4;
        form.k = (n + 4) / 16;
    } else if (n % 8 == 7) {
        form.kind = FormKind::Form8kMinus1;
        form.k = (n + 1) / 8;
    } else if (n > 27 && mpz_odd_p(n.get_mpz_t())) {
        auto [r, odd] = arith::v2_split(Int(n - 27));
        // 2^(2m+1) (2k-1) + 27 with m >= 1 means v2(n - 27) odd and >= 3
        if (r >= 3 && r % 2 == 1) {
            form.kind = FormKind::Form2PowPlus27;
            form.m = (r - 1) / 2;
            form.k = (odd + 1) / 2;
        }
    }
    return form;
}

Verdict check_theorem(const Int& a, const Int& b, const Int& c) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::domain_error("check_theorem: a, b, c must be positive");
    Verdict v;
    v.query = "theorem";
    v.a = a;
    v.b = b;
    v.c = c;
    v.n = a * a * b * c * c * c;
    v.n_form = classify_n(v.n);

    Int bc = b * c;
    if (c % 4 == 0) v.matched.push_back("T1");
    if (bc % 8 == 7) v.matched.push_back("T2");
    if (a % 4 == 0 && b % 2 == 1) v.matched.push_back("T3");
    if (a % 2 == 0 && bc % 4 == 3) v.matched.push_back("T4");
    if (a % 2 == 1 && b % 4 == 2 && c % 2 == 0) v.matched.push_back("T5");
    if (v.n_form.kind == FormKind::Form2PowPlus27) v.matched.push_back("T6");

    v.status = v.matched.empty() ? Status::Unknown : Status::ProvedNoSolutions;
    return v;
}

Verdict check_corollary(const Int& a, const Int& n) {
    if (a <= 0 || n <= 0)
        throw std::domain_error("check_corollary: a, n must be positive");
    Verdict v = check_theorem(a, Int(1), n);
    v.query = "corollary";
    // With b = 1 the fifth theorem condition cannot fire, so the corollary
    // labels are T1..T4 -> C1..C4 and T6 -> C5.
    for (auto& label : v.matched) {
        if (label == "T1") label = "C1";
        else if (label == "T2") label = "C2";
        else if (label == "T3") label = "C3";
        else if (label == "T4") label = "C4";
        else if (label == "T6") label = "C5";
    }
    return v;
}

std::vector<std::pair<Int, NForm>> covered_upto(const Int& N) {
    std::vector<std::pair<Int, NForm>> rows;
    for (Int n = 1; n <= N; ++n) {
        NForm form = classify_n(n);
        if (form.covered()) rows.emplace_back(n, form);
    }
    return rows;
}

}  // namespace sumprod::classify
