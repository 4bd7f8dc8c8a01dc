#pragma once

#include <cstddef>

namespace kht {

enum class Execution { Serial, Parallel };

/// Runs f(i) for i in [0, n).  The Parallel path uses OpenMP when compiled
/// in; the Serial path is the reference used by the equivalence tests.
/// Bodies must write to disjoint state indexed by i.
template <class F>
void parallel_for(Execution exec, std::size_t n, F&& f) {
    if (exec == Execution::Parallel) {
#ifdef KHT_HAVE_OPENMP
#pragma omp parallel for schedule(dynamic)
        for (long long i = 0; i < static_cast<long long>(n); ++i)
            f(static_cast<std::size_t>(i));
        return;
#endif
    }
    for (std::size_t i = 0; i < n; ++i) f(i);
}

}  // namespace kht
