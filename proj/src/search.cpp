#include "sumprod/search.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <numeric>
#include <thread>
#include <tuple>

namespace sumprod::search {

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
    return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

int resolve_threads(int threads) {
    if (threads > 0) return threads;
    unsigned hw = std::thread::hardware_concurrency();
    return hw > 0 ? static_cast<int>(hw) : 1;
}

struct Range {
    long lo, hi;  // inclusive
};

// Fixed-size partition of [1, bound]; the layout does not depend on the
// thread count, and results are merged in range order before the final sort,
// so reports are identical for any number of workers.
std::vector<Range> partition(long bound) {
    constexpr long kChunk = 8;
    std::vector<Range> ranges;
    for (long lo = 1; lo <= bound; lo += kChunk)
        ranges.push_back({lo, std::min(bound, lo + kChunk - 1)});
    return ranges;
}

// Runs fn(range_index, range) on `threads` workers pulling ranges from a
// shared queue.
template <typename Fn>
void run_partitioned(const std::vector<Range>& ranges, int threads, Fn&& fn) {
    int workers = resolve_threads(threads);
    if (static_cast<std::size_t>(workers) > ranges.size())
        workers = static_cast<int>(ranges.size());
    if (workers <= 1) {
        for (std::size_t i = 0; i < ranges.size(); ++i) fn(i, ranges[i]);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto loop = [&] {
        for (std::size_t i; (i = next.fetch_add(1)) < ranges.size();) fn(i, ranges[i]);
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (int t = 0; t < workers; ++t) pool.emplace_back(loop);
    for (auto& th : pool) th.join();
}

bool solution_less(const Solution& a, const Solution& b) {
    return std::tie(a.x, a.y, a.z) < std::tie(b.x, b.y, b.z);
}

void finalize(SearchReport& rep, std::vector<std::vector<Solution>>& partial,
              const std::vector<unsigned long long>& counts) {
    for (auto& part : partial)
        rep.solutions.insert(rep.solutions.end(), part.begin(), part.end());
    rep.examined = std::accumulate(counts.begin(), counts.end(), 0ULL);
    std::sort(rep.solutions.begin(), rep.solutions.end(), solution_less);
    rep.solutions.erase(std::unique(rep.solutions.begin(), rep.solutions.end()),
                        rep.solutions.end());
}

int sign_of(const Int& v) {
    return mpz_sgn(v.get_mpz_t());
}

Int isqrt(const Int& v) {
    Int r;
    mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
    return r;
}

}  // namespace

SearchReport search_cubic(const Int& n, long bound, int threads) {
    if (n <= 0) throw std::domain_error("search_cubic: n must be positive");
    if (bound < 1) throw std::domain_error("search_cubic: bound must be >= 1");
    auto start = Clock::now();
    SearchReport rep;
    rep.equation = "cubic";
    rep.params = {{"n", n.get_str()}};
    rep.bound = bound;

    // AM-GM cutoff, verified at test time: for n < 27 the left side exceeds
    // n*x*y*z for every positive triple, so the search space is empty.
    if (n < 27) {
        rep.wall_ms = elapsed_ms(start);
        return rep;
    }

    auto ranges = partition(bound);
    std::vector<std::vector<Solution>> partial(ranges.size());
    std::vector<unsigned long long> counts(ranges.size(), 0);

    run_partitioned(ranges, threads, [&](std::size_t idx, Range range) {
        std::vector<Solution>& out = partial[idx];
        unsigned long long examined = 0;
        Int n2 = n * n;
        for (long z = range.lo; z <= range.hi; ++z) {
            Int zz(z);
            Int n2z3 = n2 * zz * zz * zz;
            Int nz = n * zz;
            for (long y = 1; y <= bound; ++y) {
                ++examined;
                Int yy(y);
                Int c0 = yy * yy * yy + n2z3;  // phi(x) = x^3 - w x + c0, phi(0) > 0
                Int w = nz * yy;

                auto phi_sign = [&](long x) {
                    Int xx(x);
                    return sign_of(Int(xx * xx * xx - w * xx + c0));
                };
                auto emit = [&](long x) {
                    Solution sol;
                    sol.x = Rat(x);
                    sol.y = Rat(y);
                    sol.z = Rat(z);
                    sol.primitive =
                        arith::gcd(arith::gcd(Int(x), Int(y)), Int(z)) == 1;
                    out.push_back(std::move(sol));
                };

                // phi decreases up to sqrt(w/3) and increases beyond it, so
                // each monotone segment of [1, y] holds at most one root.
                Int turn = isqrt(Int(w / 3));
                long mid = turn >= y ? y : static_cast<long>(turn.get_si());
                long lo = 1, hi = mid;
                while (lo <= hi) {
                    long x = lo + (hi - lo) / 2;
                    int s = phi_sign(x);
                    if (s == 0) {
                        emit(x);
                        break;
                    }
                    if (s > 0)
                        lo = x + 1;
                    else
                        hi = x - 1;
                }
                lo = mid + 1, hi = y;
                while (lo <= hi) {
                    long x = lo + (hi - lo) / 2;
                    int s = phi_sign(x);
                    if (s == 0) {
                        emit(x);
                        break;
                    }
                    if (s < 0)
                        lo = x + 1;
                    else
                        hi = x - 1;
                }
            }
        }
        counts[idx] = examined;
    });

    finalize(rep, partial, counts);
    rep.wall_ms = elapsed_ms(start);
    return rep;
}

SearchReport search_system(const Int& a, const Int& b, const Int& c, long height, int threads) {
    if (a <= 0 || b <= 0 || c <= 0)
        throw std::domain_error("search_system: a, b, c must be positive");
    if (height < 1) throw std::domain_error("search_system: height must be >= 1");
    auto start = Clock::now();
    SearchReport rep;
    rep.equation = "system";
    rep.params = {{"a", a.get_str()}, {"b", b.get_str()}, {"c", c.get_str()}};
    rep.bound = height;

    const Rat prod_target{Int(a * b * b)};
    const Rat sum_target{Int(a * b * c)};

    auto ranges = partition(height);
    std::vector<std::vector<Solution>> partial(ranges.size());
    std::vector<unsigned long long> counts(ranges.size(), 0);

    run_partitioned(ranges, threads, [&](std::size_t idx, Range range) {
        std::vector<Solution>& out = partial[idx];
        unsigned long long examined = 0;
        for (long v = range.lo; v <= range.hi; ++v) {
            for (long u = 1; u <= height; ++u) {
                if (std::gcd(u, v) != 1) continue;
                ++examined;
                Rat z(Int(u), Int(v));
                Rat s = sum_target - z;  // x + y
                if (s <= 0) continue;
                Rat p = prod_target / z;  // x * y
                Rat disc = s * s - 4 * p;
                if (disc < 0) continue;
                auto root = arith::is_square_rat(disc);
                if (!root) continue;
                Rat x = (s + *root) / 2;
                Rat y = (s - *root) / 2;
                if (y <= 0) continue;
                // canonical representative of the unordered solution
                Rat t0 = y, t1 = x, t2 = z;  // y <= x by construction
                if (t2 < t0) std::swap(t0, t2);
                if (t2 < t1) std::swap(t1, t2);
                if (t1 < t0) std::swap(t0, t1);
                out.push_back(Solution{t0, t1, t2, std::nullopt});
            }
        }
        counts[idx] = examined;
    });

    finalize(rep, partial, counts);
    rep.wall_ms = elapsed_ms(start);
    return rep;
}

SearchReport search_guy(const Int& n, long bound, int threads) {
    if (n <= 0) throw std::domain_error("search_guy: n must be positive");
    if (bound < 1) throw std::domain_error("search_guy: bound must be >= 1");
    auto start = Clock::now();
    SearchReport rep;
    rep.equation = "guy";
    rep.params = {{"n", n.get_str()}};
    rep.bound = bound;

    auto ranges = partition(bound);
    std::vector<std::vector<Solution>> partial(ranges.size());
    std::vector<unsigned long long> counts(ranges.size(), 0);

    run_partitioned(ranges, threads, [&](std::size_t idx, Range range) {
        std::vector<Solution>& out = partial[idx];
        unsigned long long examined = 0;
        for (long z = range.lo; z <= range.hi; ++z) {
            Int nz = n * z;
            for (long y = 1; y <= z; ++y) {
                Int nzy = nz * y;
                for (long x = 1; x <= y; ++x) {
                    ++examined;
                    long s = x + y + z;
                    Int s3 = Int(s) * s * s;
                    if (s3 != nzy * x) continue;
                    Solution sol;
                    sol.x = Rat(x);
                    sol.y = Rat(y);
                    sol.z = Rat(z);
                    sol.primitive =
                        arith::gcd(arith::gcd(Int(x), Int(y)), Int(z)) == 1;
                    out.push_back(std::move(sol));
                }
            }
        }
        counts[idx] = examined;
    });

    finalize(rep, partial, counts);
    rep.wall_ms = elapsed_ms(start);
    return rep;
}

}  // namespace sumprod::search
