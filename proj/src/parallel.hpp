#ifndef TNC_PARALLEL_HPP
#define TNC_PARALLEL_HPP

#include <cstdlib>
#include <future>
#include <thread>
#include <vector>

#include "tnc/intmath.hpp"

namespace tnc::detail {

inline int worker_count() {
    static const int n = [] {
        if (const char* env = std::getenv("TNCODES_THREADS")) {
            int v = std::atoi(env);
            if (v >= 1) return v;
        }
        unsigned hc = std::thread::hardware_concurrency();
        return hc ? static_cast<int>(hc) : 1;
    }();
    return n;
}

/// Applies fn(begin, end) to disjoint chunks of [0, total) and returns the
/// per-chunk results in chunk order, so reductions stay deterministic.
template <class R, class Fn>
std::vector<R> map_ranges(i64 total, Fn fn) {
    const int workers = total < 2 ? 1 : std::min<i64>(worker_count(), total);
    if (workers <= 1) {
        std::vector<R> out;
        if (total > 0) out.push_back(fn(i64(0), total));
        return out;
    }
    const i64 chunk = (total + workers - 1) / workers;
    std::vector<std::future<R>> futures;
    for (i64 lo = 0; lo < total; lo += chunk) {
        i64 hi = std::min(total, lo + chunk);
        futures.push_back(std::async(std::launch::async, [fn, lo, hi] { return fn(lo, hi); }));
    }
    std::vector<R> out;
    out.reserve(futures.size());
    for (auto& f : futures) out.push_back(f.get());
    return out;
}

} // namespace tnc::detail

#endif
