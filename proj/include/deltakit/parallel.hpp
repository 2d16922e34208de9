#pragma once

#include <algorithm>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace dmk {

// Every sweep kernel runs in two modes: Serial is the reference
// implementation, Parallel the OpenMP one.  Both return identical results;
// the test suite compares them bytewise and the bench target times them.
enum class Exec { Serial, Parallel };

// Below this trip count the parallel mode falls through to the serial loop.
inline constexpr std::int64_t kParallelGrain = 64;

// Smallest index in [0, count) where `bad` holds, or -1 if none.  The
// parallel sweep reduces with min, so the winning witness is the same one
// the serial loop finds.
template <class Pred>
std::int64_t first_violation(std::int64_t count, Exec exec, Pred&& bad) {
#ifdef _OPENMP
    if (exec == Exec::Parallel && count >= kParallelGrain) {
        std::int64_t best = count;
#pragma omp parallel for schedule(dynamic, 16) reduction(min : best)
        for (std::int64_t i = 0; i < count; ++i) {
            if (i < best && bad(i)) best = i;
        }
        return best == count ? -1 : best;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < count; ++i)
        if (bad(i)) return i;
    return -1;
}

// fn(i) -> T for every index; results land in index order.
template <class T, class Fn>
std::vector<T> transform_indexed(std::int64_t count, Exec exec, Fn&& fn) {
    std::vector<T> out(static_cast<std::size_t>(count));
#ifdef _OPENMP
    if (exec == Exec::Parallel && count >= kParallelGrain) {
#pragma omp parallel for schedule(dynamic, 16)
        for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
        return out;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < count; ++i) out[static_cast<std::size_t>(i)] = fn(i);
    return out;
}

// Collects every (index, payload) where fn(i) yields a payload, sorted by
// index so the merge is independent of thread scheduling.
template <class T, class Fn>
std::vector<std::pair<std::int64_t, T>> collect_violations(std::int64_t count, Exec exec, Fn&& fn) {
    std::vector<std::pair<std::int64_t, T>> out;
#ifdef _OPENMP
    if (exec == Exec::Parallel && count >= kParallelGrain) {
#pragma omp parallel
        {
            std::vector<std::pair<std::int64_t, T>> local;
#pragma omp for schedule(dynamic, 16) nowait
            for (std::int64_t i = 0; i < count; ++i) {
                if (auto v = fn(i)) local.emplace_back(i, std::move(*v));
            }
#pragma omp critical
            out.insert(out.end(), std::make_move_iterator(local.begin()),
                       std::make_move_iterator(local.end()));
        }
        std::sort(out.begin(), out.end(),
                  [](const auto& a, const auto& b) { return a.first < b.first; });
        return out;
    }
#else
    (void)exec;
#endif
    for (std::int64_t i = 0; i < count; ++i) {
        if (auto v = fn(i)) out.emplace_back(i, std::move(*v));
    }
    return out;
}

}  // namespace dmk
