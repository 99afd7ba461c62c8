#pragma once

#include <atomic>
#include <cstddef>
#include <thread>
#include <vector>

namespace varfrac {

/// Worker count for row-parallel loops. Results are bit-identical for any
/// value because every row is reduced independently and rows are combined in
/// a fixed tree order.
inline std::atomic<int>& worker_count() {
    static std::atomic<int> n{1};
    return n;
}

inline void set_worker_count(int n) { worker_count().store(n < 1 ? 1 : n); }

/// Pairwise (tree) summation over a contiguous buffer; deterministic for a
/// fixed input order.
inline double pairwise_sum(const double* a, std::size_t n) {
    if (n <= 8) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i) s += a[i];
        return s;
    }
    const std::size_t half = n / 2;
    return pairwise_sum(a, half) + pairwise_sum(a + half, n - half);
}

inline double pairwise_sum(const std::vector<double>& a) {
    return pairwise_sum(a.data(), a.size());
}

/// Evaluates term(i) for i in [0, n) into a scratch buffer and tree-reduces.
template <class Term>
double sum_terms(std::size_t n, Term&& term, std::vector<double>& scratch) {
    scratch.resize(n);
    for (std::size_t i = 0; i < n; ++i) scratch[i] = term(i);
    return pairwise_sum(scratch.data(), n);
}

template <class Term>
double sum_terms(std::size_t n, Term&& term) {
    std::vector<double> scratch;
    return sum_terms(n, term, scratch);
}

/// Runs row(i) for i in [0, rows) on worker_count() threads. Each call must
/// write only to its own slot of any shared output.
template <class RowFn>
void parallel_rows(std::size_t rows, RowFn&& row) {
    const int workers = worker_count().load();
    if (workers <= 1 || rows < 2) {
        for (std::size_t i = 0; i < rows; ++i) row(i);
        return;
    }
    std::atomic<std::size_t> next{0};
    auto drain = [&]() {
        for (;;) {
            const std::size_t i = next.fetch_add(1);
            if (i >= rows) return;
            row(i);
        }
    };
    std::vector<std::thread> pool;
    const int extra = workers - 1;
    pool.reserve(static_cast<std::size_t>(extra));
    for (int t = 0; t < extra; ++t) pool.emplace_back(drain);
    drain();
    for (auto& th : pool) th.join();
}

/// Row-parallel sum: per-row partial sums land in fixed slots, combined with
/// a final tree reduction, so the result does not depend on the worker count.
template <class RowSum>
double parallel_row_sum(std::size_t rows, RowSum&& row_sum) {
    std::vector<double> partial(rows, 0.0);
    parallel_rows(rows, [&](std::size_t i) { partial[i] = row_sum(i); });
    return pairwise_sum(partial.data(), partial.size());
}

}  // namespace varfrac
