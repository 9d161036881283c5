#pragma once

// Data-parallel kernels. Each kernel comes in a serial reference form and
// an OpenMP form; both must produce identical results, and the tests and
// benchmarks compare them directly.

#include <boost/dynamic_bitset.hpp>

#include <cstddef>
#include <cstdint>
#include <exception>
#include <string_view>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace nclab {

enum class Exec { serial, parallel };

inline std::string_view to_string(Exec e) { return e == Exec::serial ? "serial" : "parallel"; }

inline int worker_count() {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
}

using BitRow = boost::dynamic_bitset<std::uint64_t>;

namespace kernels {

/// rows[a][b] = leq(a, b) for all a, b < count.
template <class Leq>
std::vector<BitRow> relation_matrix_serial(std::size_t count, const Leq& leq) {
    std::vector<BitRow> rows(count, BitRow(count));
    for (std::size_t a = 0; a < count; ++a) {
        for (std::size_t b = 0; b < count; ++b) {
            if (leq(a, b)) rows[a].set(b);
        }
    }
    return rows;
}

template <class Leq>
std::vector<BitRow> relation_matrix_parallel(std::size_t count, const Leq& leq) {
    std::vector<BitRow> rows(count, BitRow(count));
    const auto n = static_cast<std::int64_t>(count);
    // Rows are disjoint objects, so writes never race.
#pragma omp parallel for schedule(dynamic, 16)
    for (std::int64_t a = 0; a < n; ++a) {
        auto& row = rows[static_cast<std::size_t>(a)];
        for (std::size_t b = 0; b < count; ++b) {
            if (leq(static_cast<std::size_t>(a), b)) row.set(b);
        }
    }
    return rows;
}

template <class Leq>
std::vector<BitRow> relation_matrix(std::size_t count, const Leq& leq, Exec exec) {
    return exec == Exec::serial ? relation_matrix_serial(count, leq) : relation_matrix_parallel(count, leq);
}

/// out[i] = f(i) for i < count. The results land in index order whatever
/// the completion order.
template <class R, class F>
std::vector<R> map_indexed_serial(std::size_t count, const F& f) {
    std::vector<R> out(count);
    for (std::size_t i = 0; i < count; ++i) out[i] = f(i);
    return out;
}

// Exceptions thrown by `f` are captured and the first one is rethrown on the
// calling thread once the loop finishes.
template <class R, class F>
std::vector<R> map_indexed_parallel(std::size_t count, const F& f) {
    std::vector<R> out(count);
    const auto n = static_cast<std::int64_t>(count);
    std::exception_ptr failure;
#pragma omp parallel for schedule(dynamic, 1)
    for (std::int64_t i = 0; i < n; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = f(static_cast<std::size_t>(i));
        } catch (...) {
#pragma omp critical(nclab_kernel_failure)
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

template <class R, class F>
std::vector<R> map_indexed(std::size_t count, const F& f, Exec exec) {
    return exec == Exec::serial ? map_indexed_serial<R>(count, f) : map_indexed_parallel<R>(count, f);
}

} // namespace kernels
} // namespace nclab
